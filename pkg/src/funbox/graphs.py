"""Labeled simple graphs with bit-row adjacency.

Vertices are dense 0-based ids. Each adjacency row is a Python int used as a
bit vector: bit ``v`` of ``rows[u]`` is 1 iff ``u`` and ``v`` are adjacent.
All algorithms in the package work on these rows with bitwise kernels.
"""

from __future__ import annotations

from typing import Iterable, Iterator


class GraphError(ValueError):
    """Invalid graph construction, query, or structured input."""


class SizeLimitError(RuntimeError):
    """An exact search was asked to exceed its configured size guard."""


def bit_ids(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(ids: Iterable[int], n: int) -> int:
    """Bit mask for a set of vertex ids, validated against 0..n-1."""
    mask = 0
    for v in ids:
        if not 0 <= v < n:
            raise GraphError(f"vertex id {v} out of range 0..{n - 1}")
        mask |= 1 << v
    return mask


class Graph:
    """Immutable simple graph: symmetric, irreflexive bit rows.

    Labels are per-vertex metadata (opaque strings) and never influence any
    algorithm. Instances must not be mutated after construction; derived
    structural facts may be memoized in ``_cache``.
    """

    __slots__ = ("n", "rows", "labels", "_cache")

    def __init__(self, n: int, rows: Iterable[int], labels=None):
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        rows = tuple(rows)
        if len(rows) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for u, row in enumerate(rows):
            if row & ~full:
                raise GraphError(f"row {u} has bits outside 0..{n - 1}")
            if row >> u & 1:
                raise GraphError(f"self-loop at vertex {u}")
        for u, row in enumerate(rows):
            for v in bit_ids(row >> u << u):
                if not rows[v] >> u & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self.rows = rows
        self.labels = dict(labels) if labels else None
        self._cache = {}

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, u: int) -> list[int]:
        return list(bit_ids(self.rows[u]))

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, row in enumerate(self.rows):
            for v in bit_ids(row >> (u + 1) << (u + 1)):
                yield (u, v)

    def label(self, u: int):
        return self.labels.get(u) if self.labels else None

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count()})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]], labels=None) -> Graph:
    """Build a graph from undirected edge pairs; duplicates are merged."""
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) out of range 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows, labels)


def induced_subgraph(g: Graph, subset: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on ``subset`` plus the old-id -> new-id map.

    New ids preserve the relative order of the old ids.
    """
    old_ids = sorted(set(subset))
    if not old_ids:
        raise GraphError("induced subgraph requires a nonempty vertex set")
    mapping = {}
    for old in old_ids:
        if not 0 <= old < g.n:
            raise GraphError(f"vertex id {old} out of range 0..{g.n - 1}")
        mapping[old] = len(mapping)
    rows = []
    for old in old_ids:
        row = 0
        src = g.rows[old]
        for other, new in mapping.items():
            if src >> other & 1:
                row |= 1 << new
        rows.append(row)
    labels = None
    if g.labels:
        labels = {mapping[o]: g.labels[o] for o in old_ids if o in g.labels}
    return Graph(len(old_ids), rows, labels), mapping


def equal_labeled(g1: Graph, g2: Graph) -> bool:
    """Identity-on-ids equality: same n and identical adjacency rows."""
    return g1.n == g2.n and g1.rows == g2.rows


def graph_to_json(g: Graph) -> dict:
    data = {"n": g.n, "edges": [list(e) for e in g.edges()]}
    if g.labels:
        data["labels"] = {str(v): s for v, s in sorted(g.labels.items())}
    return data


def graph_from_json(data: dict) -> Graph:
    n = data["n"]
    rows = [0] * n
    for item in data["edges"]:
        u, v = item
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) out of range 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if rows[u] >> v & 1:
            raise GraphError(f"duplicate edge ({u},{v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    labels = None
    if data.get("labels"):
        labels = {int(k): v for k, v in data["labels"].items()}
        for v in labels:
            if not 0 <= v < n:
                raise GraphError(f"label for unknown vertex {v}")
    return Graph(n, rows, labels)
