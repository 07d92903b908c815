"""Interval models, their grid-point normal form, and low-arity witnesses.

An interval model with pairwise-distinct endpoints can be rewritten on the
endpoint ranks 1..2n, turning each vertex into a grid point (left rank,
right rank) above the diagonal. The witness search partitions the 2n
coordinate lines into stripes of 5 and works block by block; every emitted
witness has at most 8 arguments and is re-validated against the graph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, GraphError
from .parameters import Witness, _emit, pair_witness, sd_pair


@dataclass(frozen=True)
class IntervalRep:
    """Closed intervals with scaled-integer endpoints (true value = x/scale)."""

    intervals: tuple[tuple[int, int], ...]
    scale_denominator: int = 1

    def __post_init__(self):
        if not self.intervals:
            raise GraphError("interval representation must be nonempty")
        if self.scale_denominator < 1:
            raise GraphError("scale denominator must be positive")
        for idx, (lo, hi) in enumerate(self.intervals):
            if lo > hi:
                raise GraphError(f"interval {idx} has l > r: [{lo},{hi}]")

    @property
    def n(self) -> int:
        return len(self.intervals)


@dataclass(frozen=True)
class PointRep:
    """One grid point (i, j) per vertex, i < j, ranks covering {1..2n}."""

    points: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not self.points:
            raise GraphError("point representation must be nonempty")
        used = []
        for idx, (i, j) in enumerate(self.points):
            if i >= j:
                raise GraphError(f"point {idx} must satisfy i < j, got ({i},{j})")
            used.extend((i, j))
        if sorted(used) != list(range(1, 2 * len(self.points) + 1)):
            raise GraphError("endpoint ranks must be a permutation of 1..2n")

    @property
    def n(self) -> int:
        return len(self.points)


def interval_rep_to_json(rep: IntervalRep) -> dict:
    return {
        "scale_denominator": rep.scale_denominator,
        "intervals": [list(iv) for iv in rep.intervals],
    }


def interval_rep_from_json(data: dict) -> IntervalRep:
    return IntervalRep(
        intervals=tuple((int(l), int(r)) for l, r in data["intervals"]),
        scale_denominator=int(data.get("scale_denominator", 1)),
    )


def point_rep_to_json(rep: PointRep) -> dict:
    return {"points": [list(pt) for pt in rep.points]}


def point_rep_from_json(data: dict) -> PointRep:
    return PointRep(points=tuple((int(i), int(j)) for i, j in data["points"]))


def graph_from_intervals(rep: IntervalRep) -> Graph:
    """Intersection graph of the closed intervals, index-aligned."""
    iv = rep.intervals
    n = len(iv)
    rows = [0] * n
    for u in range(n):
        lu, ru = iv[u]
        for v in range(u + 1, n):
            lv, rv = iv[v]
            if max(lu, lv) <= min(ru, rv):
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, rows)


def graph_from_points(rep: PointRep) -> Graph:
    """Intersection graph of the rank intervals [i, j]."""
    return graph_from_intervals(
        IntervalRep(intervals=rep.points, scale_denominator=1)
    )


def normalize(rep: IntervalRep) -> PointRep:
    """Relabel endpoints by rank 1..2n, preserving the intersection graph.

    Ties break left-endpoint-first (then by interval id), which keeps
    touching closed intervals intersecting after the rewrite.
    """
    events = []
    for idx, (lo, hi) in enumerate(rep.intervals):
        events.append((lo, 0, idx))
        events.append((hi, 1, idx))
    events.sort()
    left = {}
    right = {}
    for rank, (_, kind, idx) in enumerate(events, start=1):
        if kind == 0:
            left[idx] = rank
        else:
            right[idx] = rank
    return PointRep(points=tuple((left[i], right[i]) for i in range(rep.n)))


def manhattan(p: tuple[int, int], q: tuple[int, int]) -> int:
    return abs(p[0] - q[0]) + abs(p[1] - q[1])


@dataclass(frozen=True)
class SdLemmaReport:
    """Outcome of the pairwise sd <= Manhattan - 2 sweep."""

    pairs_checked: int
    violation: tuple[int, int, int, int] | None  # (u, v, sd, manhattan)

    @property
    def ok(self) -> bool:
        return self.violation is None


def check_sd_lemma(rep: PointRep) -> SdLemmaReport:
    """Assert sd(u, v) <= Manhattan(u, v) - 2 for every vertex pair."""
    g = graph_from_points(rep)
    pts = rep.points
    checked = 0
    for u in range(rep.n):
        for v in range(u + 1, rep.n):
            checked += 1
            d = sd_pair(g, u, v)
            dist = manhattan(pts[u], pts[v])
            if d > dist - 2:
                return SdLemmaReport(checked, (u, v, d, dist))
    return SdLemmaReport(checked, None)


STRIPE = 5


def _stripe(coord: int) -> int:
    return (coord - 1) // STRIPE


def find_low_fun_witness(rep: PointRep) -> Witness:
    """Validated witness with at most 8 arguments for some vertex.

    n <= 8: vertex 0 with all others as arguments. Otherwise split the
    coordinate lines into 5-line stripes. A block with two points gives a
    distinguisher pair witness (<= 7 args). Otherwise the first non-empty
    non-marginal block in row-major order yields a vertex x, the nearest
    point y above it in its vertical stripe and nearest point z to its left
    in its horizontal stripe: x's adjacency is the conjunction of y's and
    z's bits, with the intervals owning an endpoint strictly between the
    columns of x,y or the rows of x,z as inessential extras.
    """
    pts = rep.points
    n = rep.n
    g = graph_from_points(rep)
    if n <= 8:
        args = tuple(range(1, n))
        return _emit(g, Witness(0, args, 0, "small-n"))

    blocks: dict[tuple[int, int], list[int]] = {}
    for idx, (i, j) in enumerate(pts):
        blocks.setdefault((_stripe(i), _stripe(j)), []).append(idx)

    crowded = sorted(key for key, ids in blocks.items() if len(ids) >= 2)
    if crowded:
        ids = sorted(blocks[crowded[0]])
        x, y = ids[0], ids[1]
        w = pair_witness(g, x, y, "distinguishers")
        return _emit(g, Witness(w.target, w.args, w.table, "stripe-case1"))

    # every block holds at most one point: locate a non-marginal one
    leftmost: dict[int, int] = {}
    topmost: dict[int, int] = {}
    for vs, hs in blocks:
        if hs not in leftmost or vs < leftmost[hs]:
            leftmost[hs] = vs
        if vs not in topmost or hs > topmost[vs]:
            topmost[vs] = hs
    target_block = None
    for hs in sorted({key[1] for key in blocks}):
        for vs in sorted({key[0] for key in blocks if key[1] == hs}):
            if (vs, hs) in blocks and leftmost[hs] != vs and topmost[vs] != hs:
                target_block = (vs, hs)
                break
        if target_block:
            break
    if target_block is None:
        raise AssertionError("no non-marginal block although n >= 9")
    vs, hs = target_block
    x = blocks[target_block][0]
    xi, xj = pts[x]
    above = [
        idx
        for idx, (i, j) in enumerate(pts)
        if _stripe(i) == vs and j > xj
    ]
    left = [
        idx
        for idx, (i, j) in enumerate(pts)
        if _stripe(j) == hs and i < xi
    ]
    y = min(above, key=lambda idx: pts[idx][1])
    z = max(left, key=lambda idx: pts[idx][0])
    col_lo, col_hi = sorted((xi, pts[y][0]))
    row_lo, row_hi = sorted((xj, pts[z][1]))
    extras = [
        idx
        for idx, (i, j) in enumerate(pts)
        if idx not in (x, y, z)
        and (
            col_lo < i < col_hi
            or col_lo < j < col_hi
            or row_lo < i < row_hi
            or row_lo < j < row_hi
        )
    ]
    args = (y, z, *sorted(extras))
    k = len(args)
    # prediction: adjacent to x iff adjacent to both y and z (bits 0 and 1)
    table = 0
    for m in range(1 << k):
        if m & 1 and m >> 1 & 1:
            table |= 1 << m
    return _emit(g, Witness(x, args, table, "stripe-case2"))
