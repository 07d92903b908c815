"""Exact-coordinate box systems and self-validating realizations.

All coordinates are integers over one global scale denominator, so every
intersection test is pure integer comparison; boxes are closed, and touching
counts as intersecting (consistent with the closed-interval convention).
Each realization operation rebuilds the graph from its own geometry and
raises if it does not match the target exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graphs import Graph, GraphError, equal_labeled, from_edge_list
from .intervals import IntervalRep, graph_from_intervals
from .parameters import check_abc_partition


class RealizationError(RuntimeError):
    """A realization failed its own graph-equality validation (bug signal)."""


@dataclass(frozen=True)
class BoxSystem:
    """Closed axis-parallel boxes in R^d with scaled-integer coordinates."""

    d: int
    scale_denominator: int
    boxes: tuple[tuple[tuple[int, int], ...], ...]
    labels: dict[int, str] | None = None

    def __post_init__(self):
        if self.d < 1:
            raise GraphError("dimension must be >= 1")
        if self.scale_denominator < 1:
            raise GraphError("scale denominator must be positive")
        for idx, box in enumerate(self.boxes):
            if len(box) != self.d:
                raise GraphError(f"box {idx} has {len(box)} sides, expected {self.d}")
            for lo, hi in box:
                if lo > hi:
                    raise GraphError(f"box {idx} has lo > hi in some coordinate")

    def is_unit(self) -> bool:
        return all(
            hi - lo == self.scale_denominator
            for box in self.boxes
            for lo, hi in box
        )


@dataclass(frozen=True)
class RealizationReport:
    target_graph: Graph
    realized_graph: Graph
    equal: bool
    unit: bool | None = None


def box_system_to_json(bs: BoxSystem) -> dict:
    data = {
        "d": bs.d,
        "scale_denominator": bs.scale_denominator,
        "boxes": [[list(side) for side in box] for box in bs.boxes],
    }
    if bs.labels:
        data["labels"] = {str(v): s for v, s in sorted(bs.labels.items())}
    return data


def box_system_from_json(data: dict) -> BoxSystem:
    labels = None
    if data.get("labels"):
        labels = {int(k): v for k, v in data["labels"].items()}
    return BoxSystem(
        d=int(data["d"]),
        scale_denominator=int(data["scale_denominator"]),
        boxes=tuple(
            tuple((int(lo), int(hi)) for lo, hi in box) for box in data["boxes"]
        ),
        labels=labels,
    )


def _boxes_intersect(b1, b2) -> bool:
    return all(max(l1, l2) <= min(h1, h2) for (l1, h1), (l2, h2) in zip(b1, b2))


def graph_from_boxes(bs: BoxSystem) -> Graph:
    """Intersection graph of the closed boxes, index-aligned."""
    m = len(bs.boxes)
    rows = [0] * m
    for u in range(m):
        for v in range(u + 1, m):
            if _boxes_intersect(bs.boxes[u], bs.boxes[v]):
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(m, rows, dict(bs.labels) if bs.labels else None)


def _point_in_box(pt, box) -> bool:
    return all(lo <= c <= hi for c, (lo, hi) in zip(pt, box))


def incidence_graph(points: Sequence[tuple[int, int]], bs: BoxSystem) -> Graph:
    """Bipartite containment graph: point ids first, then box ids."""
    np_ = len(points)
    edges = []
    for bi, box in enumerate(bs.boxes):
        for pi, pt in enumerate(points):
            if _point_in_box(pt, box):
                edges.append((pi, np_ + bi))
    return from_edge_list(np_ + len(bs.boxes), edges)


# ---------------------------------------------------------------------------
# plane realization of the point-box incidence family
# ---------------------------------------------------------------------------

def realize_pointbox_plane(
    n: int, i: int
) -> tuple[tuple[tuple[int, int], ...], BoxSystem, RealizationReport]:
    """Geometric realization of point_box_incidence(n, i) in the plane.

    Level 1 is one box over n points at distinct heights. Each later level
    places n x-translated copies, then one wide flat box per previous-level
    point covering that point's n copies, and finally shifts the copies
    vertically (one level-grid step apart) to restore globally distinct
    y-coordinates without leaving any containing box. Coordinates live on a
    grid refined by a factor of 2n+2 per level so the shifts always fit.
    """
    from .constructions import point_box_incidence

    target, _meta = point_box_incidence(n, i)  # validates n, i
    s = 2 * n + 2
    step = [s ** (i - j) if j >= 1 else 0 for j in range(i + 1)]
    pts = [(1, (l + 1) * step[1]) for l in range(n)]
    boxes = [((0, 2), (0, (n + 1) * step[1]))]
    for level in range(2, i + 1):
        u = step[level]
        width = max(hi for (lo, hi), _ in boxes)
        dx = width + 2
        new_pts = [
            (x + c * dx, y + c * u) for c in range(n) for (x, y) in pts
        ]
        new_boxes = [
            ((x0 + c * dx, x1 + c * dx), (y0, y1))
            for c in range(n)
            for (x0, x1), (y0, y1) in boxes
        ]
        for x, y in pts:
            xs = [x + c * dx for c in range(n)]
            new_boxes.append(((min(xs) - 1, max(xs) + 1), (y - u, y + n * u)))
        pts = new_pts
        boxes = new_boxes
    bs = BoxSystem(
        d=2,
        scale_denominator=s ** (i - 1),
        boxes=tuple(boxes),
    )
    realized = incidence_graph(pts, bs)
    if not equal_labeled(realized, target):
        raise RealizationError(
            f"plane realization of H^{n}_{i} does not reproduce the incidence graph"
        )
    report = RealizationReport(target, realized, equal=True)
    return tuple(pts), bs, report


def embed_pointbox_r3(
    points: Sequence[tuple[int, int]], bs: BoxSystem
) -> BoxSystem:
    """Turn a planar point/box incidence instance into 3D box intersections.

    Scale triples; every 2D box m becomes the slab box x [3m, 3m+1], every
    point becomes a thin full-height column of half-width 1 around its
    tripled coordinates. Integer inputs keep outside points at distance >= 3
    from box borders, so column/slab overlap happens exactly on containment.
    The result's intersection graph is validated against the incidence graph
    (points first, then boxes; no point-point or box-box edges).
    """
    if bs.d != 2:
        raise GraphError("embedding expects a 2-dimensional box system")
    if len(set(points)) != len(points):
        raise GraphError("points must be pairwise distinct")
    m = len(bs.boxes)
    z_top = 3 * m + 1
    out = []
    for x, y in points:
        out.append(((3 * x - 1, 3 * x + 1), (3 * y - 1, 3 * y + 1), (0, z_top)))
    for idx, ((x0, x1), (y0, y1)) in enumerate(bs.boxes):
        z = 3 * idx
        out.append(((3 * x0, 3 * x1), (3 * y0, 3 * y1), (z, z + 1)))
    result = BoxSystem(d=3, scale_denominator=3 * bs.scale_denominator, boxes=tuple(out))
    target = incidence_graph(points, bs)
    if not equal_labeled(graph_from_boxes(result), target):
        raise RealizationError("3D embedding does not reproduce the incidence graph")
    return result


# ---------------------------------------------------------------------------
# ABC realizations (unit squares and intervals)
# ---------------------------------------------------------------------------

def _abc_positions(g, a, b, c):
    """Recovered orders mapped to per-vertex 1-based position indices."""
    report = check_abc_partition(g, a, b, c)
    pos_a = {v: idx for idx, v in enumerate(report.order_a, start=1)}
    pos_b_ab = {v: idx for idx, v in enumerate(report.order_b_ab, start=1)}
    pos_b_bc = {v: idx for idx, v in enumerate(report.order_b_bc, start=1)}
    pos_c = {v: idx for idx, v in enumerate(report.order_c, start=1)}
    return report.n, pos_a, pos_b_ab, pos_b_bc, pos_c


def realize_abc_unit_squares(
    g: Graph, a, b, c
) -> tuple[BoxSystem, RealizationReport]:
    """Unit-square intersection model of an ABC graph.

    Square side is 4n at scale 4n (unit). A-squares step down-left with the
    A-order; B-squares sit above with y-offsets realizing the A-B half graph
    and x-offsets realizing the B-C half graph; C-squares sit to the right,
    y-overlapping every B-square, with an x-gap separating them from all of A.
    """
    n, pos_a, pos_b_ab, pos_b_bc, pos_c = _abc_positions(g, a, b, c)
    side = 4 * n
    xc, yc = 6 * n, side + 1
    sq = {}
    for v, i in pos_a.items():
        sq[v] = ((-i, side - i), (-i, side - i))
    for v, j in pos_b_ab.items():
        m = pos_b_bc[v]
        x0 = xc - side - m - 1
        y0 = side - j + 1
        sq[v] = ((x0, x0 + side), (y0, y0 + side))
    for v, j in pos_c.items():
        sq[v] = ((xc - j, xc - j + side), (yc - j, yc - j + side))
    bs = BoxSystem(
        d=2,
        scale_denominator=side,
        boxes=tuple(sq[v] for v in range(g.n)),
        labels=dict(g.labels) if g.labels else None,
    )
    realized = graph_from_boxes(bs)
    if not equal_labeled(realized, g):
        raise RealizationError("unit-square model does not reproduce the ABC graph")
    return bs, RealizationReport(g, realized, equal=True, unit=bs.is_unit())


def realize_abc_intervals(
    g: Graph, a, b, c
) -> tuple[IntervalRep, RealizationReport]:
    """Interval model of an ABC graph (1D boxes).

    a_i = [0, 10(n-i)+5]; a B vertex with A-side index j and C-side index m
    gets [10(n-j)+8, 100n-10m]; c_j = [100n-10j+5, 100n+10].
    """
    n, pos_a, pos_b_ab, pos_b_bc, pos_c = _abc_positions(g, a, b, c)
    q = 100 * n
    iv = {}
    for v, i in pos_a.items():
        iv[v] = (0, 10 * (n - i) + 5)
    for v, j in pos_b_ab.items():
        m = pos_b_bc[v]
        iv[v] = (10 * (n - j) + 8, q - 10 * m)
    for v, j in pos_c.items():
        iv[v] = (q - 10 * j + 5, q + 10)
    rep = IntervalRep(intervals=tuple(iv[v] for v in range(g.n)))
    realized = graph_from_intervals(rep)
    if not equal_labeled(realized, g):
        raise RealizationError("interval model does not reproduce the ABC graph")
    return rep, RealizationReport(g, realized, equal=True)
