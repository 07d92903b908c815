"""Exact functionality and symmetric-difference computation.

A vertex y is a function of an argument list S if one Boolean table over the
adjacency pattern to S predicts y's adjacency to every vertex outside
S + {y}. The minimum |S| is the functionality of y. Graph-level values
maximize the per-subgraph minimum over all induced subgraphs, so the
graph-level operations are exhaustive sweeps guarded by size limits.

The per-vertex minimum is solved as a minimum hitting set over conflict
pairs: for every pair (z, z') with different adjacency to y, the argument
set must contain z, z', or a vertex distinguishing them.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Iterable

from .graphs import Graph, GraphError, SizeLimitError, bit_ids, mask_of

FUN_MAX_N_DEFAULT = 12
SD_MAX_N_DEFAULT = 14

# Witness tables are dense bit vectors of length 2^k; refuse absurd arities.
TABLE_ARITY_LIMIT = 24

WITNESS_ORIGINS = (
    "pair-distinguishers",
    "pair-nondistinguishers",
    "stripe-case1",
    "stripe-case2",
    "small-n",
    "exhaustive",
)


class PremiseViolation(GraphError):
    """A refutation was requested on a graph violating its premises.

    Carries the full list of violated premises; raising this is a legal
    outcome of ``refute_function``, not a bug.
    """

    def __init__(self, violations: list[str]):
        self.violations = violations
        super().__init__("premises violated: " + "; ".join(violations))


@dataclass(frozen=True)
class Witness:
    """Certificate that ``target`` is a function of ``args``.

    ``table`` is an int bit vector of length 2^k: bit m predicts adjacency of
    ``target`` to any vertex whose adjacency pattern to ``args`` is m (bit i
    of m = adjacency to args[i]).
    """

    target: int
    args: tuple[int, ...]
    table: int
    origin: str

    @property
    def arity(self) -> int:
        return len(self.args)

    def predict(self, profile: int) -> int:
        return self.table >> profile & 1

    def table_bits(self) -> str:
        return "".join(str(self.table >> m & 1) for m in range(1 << self.arity))


def witness_to_json(w: Witness) -> dict:
    return {
        "target": w.target,
        "args": list(w.args),
        "table_bits": w.table_bits(),
        "origin": w.origin,
    }


def witness_from_json(data: dict) -> Witness:
    bits = data["table_bits"]
    args = tuple(data["args"])
    if len(bits) != 1 << len(args):
        raise GraphError("table_bits length must be 2^len(args)")
    table = 0
    for m, ch in enumerate(bits):
        if ch == "1":
            table |= 1 << m
        elif ch != "0":
            raise GraphError("table_bits must be a 0/1 string")
    return Witness(data["target"], args, table, data["origin"])


def _profile(rows, args: tuple[int, ...], z: int) -> int:
    row = rows[z]
    m = 0
    for idx, a in enumerate(args):
        if row >> a & 1:
            m |= 1 << idx
    return m


def witness_is_valid(g: Graph, w: Witness) -> bool:
    """Check the defining property against every vertex outside args+target."""
    if w.target in w.args or len(set(w.args)) != len(w.args):
        return False
    skip = (1 << w.target) | mask_of(w.args, g.n)
    trow = g.rows[w.target]
    for z in bit_ids(g.full_mask & ~skip):
        if w.predict(_profile(g.rows, w.args, z)) != (trow >> z & 1):
            return False
    return True


def _emit(g: Graph, w: Witness) -> Witness:
    if not witness_is_valid(g, w):
        raise AssertionError(f"emitted witness failed validation: {w}")
    return w


def _resolve_limit(max_n, default: int) -> int:
    if max_n is not None:
        return max_n
    env = os.environ.get("FUNBOX_MAX_N")
    return int(env) if env else default


def _check_vertex(g: Graph, v: int, name: str = "vertex") -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"{name} {v} out of range 0..{g.n - 1}")


# ---------------------------------------------------------------------------
# symmetric difference
# ---------------------------------------------------------------------------

def sd_pair(g: Graph, x: int, y: int) -> int:
    """Number of vertices outside {x, y} adjacent to exactly one of x, y."""
    _check_vertex(g, x, "x")
    _check_vertex(g, y, "y")
    if x == y:
        raise GraphError("sd_pair requires two distinct vertices")
    diff = (g.rows[x] ^ g.rows[y]) & ~(1 << x) & ~(1 << y)
    return diff.bit_count()


def sd_graph(g: Graph, max_n: int | None = None) -> int:
    """Max over induced subgraphs (>= 2 vertices) of the min pairwise sd.

    Exhaustive over all 2^n subsets; 0 for graphs with fewer than 2 vertices.
    """
    limit = _resolve_limit(max_n, SD_MAX_N_DEFAULT)
    if g.n > limit:
        raise SizeLimitError(
            f"sd_graph guard is {limit} vertices (got {g.n}); "
            "raise max_n or FUNBOX_MAX_N"
        )
    rows = g.rows
    best = 0
    for mask in range(1, 1 << g.n):
        if mask.bit_count() < 2:
            continue
        verts = [v for v in range(g.n) if mask >> v & 1]
        cur = None
        for i, x in enumerate(verts):
            rx = rows[x]
            bx = 1 << x
            for y in verts[i + 1:]:
                d = ((rx ^ rows[y]) & mask & ~bx & ~(1 << y)).bit_count()
                if cur is None or d < cur:
                    cur = d
                    if cur <= best:
                        break
            if cur is not None and cur <= best:
                break
        if cur > best:
            best = cur
    return best


# ---------------------------------------------------------------------------
# is_function_of and the hitting-set kernel
# ---------------------------------------------------------------------------

def is_function_of(g: Graph, y: int, args: Iterable[int]):
    """Decide whether y's adjacency outside S+{y} is determined by S-profiles.

    Returns (True, None), or (False, (z, z')) with the first conflicting pair:
    equal profiles on S but different adjacency to y.
    """
    _check_vertex(g, y, "y")
    s_tuple = tuple(sorted(set(args)))
    s_mask = mask_of(s_tuple, g.n)
    if s_mask >> y & 1:
        raise GraphError(f"target {y} may not appear in the argument set")
    rows = g.rows
    trow = rows[y]
    seen: dict[int, tuple[int, int]] = {}
    for z in bit_ids(g.full_mask & ~s_mask & ~(1 << y)):
        m = _profile(rows, s_tuple, z)
        a = trow >> z & 1
        if m in seen:
            z0, a0 = seen[m]
            if a0 != a:
                return False, (z0, z)
        else:
            seen[m] = (z, a)
    return True, None


def _conflict_requirements(rows, universe: int, y: int) -> list[int]:
    """Requirement masks: every valid argument set must hit each of them."""
    others = universe & ~(1 << y)
    ay = rows[y]
    pos = [z for z in bit_ids(others) if ay >> z & 1]
    neg = [z for z in bit_ids(others) if not ay >> z & 1]
    reqs = set()
    for z in pos:
        rz = rows[z]
        bz = 1 << z
        for w in neg:
            reqs.add(((rz ^ rows[w]) | bz | (1 << w)) & others)
    return sorted(reqs, key=int.bit_count)


def _hittable(reqs: list[int], budget: int, allowed: int) -> bool:
    """Branch and bound: can ``allowed`` elements of size <= budget hit all reqs?"""
    pend = []
    for r in reqs:
        ra = r & allowed
        if ra == 0:
            return False
        pend.append(ra)
    if not pend:
        return True
    if budget <= 0:
        return False
    acc = 0
    lb = 0
    for ra in pend:
        if not ra & acc:
            lb += 1
            if lb > budget:
                return False
            acc |= ra
    branch = min(pend, key=int.bit_count)
    tried = 0
    for e in bit_ids(branch):
        be = 1 << e
        rem = [q for q in pend if not q & be]
        if _hittable(rem, budget - 1, allowed & ~tried & ~be):
            return True
        tried |= be
    return False


def _min_args(rows, universe: int, y: int) -> tuple[int, list[int]]:
    """Exact minimum argument set for y inside ``universe``.

    Returns (k, ids) with ids the lexicographically least minimum set
    (ordered as a sorted id list), matching naive subset enumeration.
    """
    reqs = _conflict_requirements(rows, universe, y)
    if not reqs:
        return 0, []
    others = universe & ~(1 << y)
    nbrs = rows[y] & others
    ub = min(nbrs.bit_count(), (others & ~nbrs).bit_count())
    union = 0
    for r in reqs:
        union |= r
    k = next(b for b in range(1, ub + 1) if _hittable(reqs, b, union))
    chosen: list[int] = []
    pend = reqs
    allowed = union
    for slot in range(k):
        budget = k - slot - 1
        for e in bit_ids(allowed):
            be = 1 << e
            rem = [q for q in pend if not q & be]
            if _hittable(rem, budget, allowed & ~((be << 1) - 1)):
                chosen.append(e)
                pend = rem
                allowed &= ~((be << 1) - 1)
                break
        else:
            raise AssertionError("hitting-set reconstruction failed")
    return k, chosen


def _witness_from_args(g: Graph, y: int, args: list[int], origin: str) -> Witness:
    arity = len(args)
    if arity > TABLE_ARITY_LIMIT:
        raise SizeLimitError(
            f"witness table would need 2^{arity} entries "
            f"(limit 2^{TABLE_ARITY_LIMIT})"
        )
    args_t = tuple(args)
    skip = (1 << y) | mask_of(args_t, g.n)
    table = 0
    trow = g.rows[y]
    for z in bit_ids(g.full_mask & ~skip):
        if trow >> z & 1:
            table |= 1 << _profile(g.rows, args_t, z)
    return _emit(g, Witness(y, args_t, table, origin))


def fun_vertex(g: Graph, y: int) -> tuple[int, Witness]:
    """Exact functionality of y with a validated minimal witness."""
    _check_vertex(g, y, "y")
    k, args = _min_args(g.rows, g.full_mask, y)
    return k, _witness_from_args(g, y, args, "exhaustive")


def fun_vertex_naive(g: Graph, y: int) -> tuple[int, tuple[int, ...]]:
    """Oracle twin of fun_vertex: plain subset enumeration by size."""
    _check_vertex(g, y, "y")
    others = [v for v in range(g.n) if v != y]
    for k in range(len(others) + 1):
        for combo in itertools.combinations(others, k):
            ok, _ = is_function_of(g, y, combo)
            if ok:
                return k, combo
    raise AssertionError("unreachable: y is always a function of all others")


def fun_graph(g: Graph, max_n: int | None = None) -> int:
    """Max over nonempty induced subgraphs of the min vertex functionality."""
    limit = _resolve_limit(max_n, FUN_MAX_N_DEFAULT)
    if g.n > limit:
        raise SizeLimitError(
            f"fun_graph guard is {limit} vertices (got {g.n}); "
            "raise max_n or FUNBOX_MAX_N"
        )
    rows = g.rows
    best = 0
    for mask in range(1, 1 << g.n):
        m = mask.bit_count()
        if m < 2:
            continue
        verts = [v for v in range(g.n) if mask >> v & 1]
        # fun(y) <= min(deg, m-1-deg) inside the subgraph, so the subset
        # cannot beat `best` unless every vertex clears that bound.
        ub = m
        for y in verts:
            d = (rows[y] & mask).bit_count()
            b = d if d < m - 1 - d else m - 1 - d
            if b < ub:
                ub = b
                if ub <= best:
                    break
        if ub <= best:
            continue
        reqs_by_y: dict[int, list[int]] = {}
        some_feasible = False
        for y in verts:
            reqs_by_y[y] = _conflict_requirements(rows, mask, y)
            if _hittable(reqs_by_y[y], best, mask & ~(1 << y)):
                some_feasible = True
                break
        if some_feasible:
            continue
        # every vertex needs more than `best` arguments: compute the exact min
        sub_min = None
        for y in verts:
            reqs = reqs_by_y[y]
            hi = sub_min - 1 if sub_min is not None else ub
            for b in range(best + 1, hi + 1):
                if _hittable(reqs, b, mask & ~(1 << y)):
                    sub_min = b
                    break
        if sub_min is None:
            raise AssertionError("subset minimum escaped its degree bound")
        best = sub_min
    return best


# ---------------------------------------------------------------------------
# pair witnesses (distinguisher / non-distinguisher constructions)
# ---------------------------------------------------------------------------

def _identity_table(k: int) -> int:
    # 0b...1010: bit m set iff m is odd (prediction = bit of args[0])
    return ((1 << (1 << k)) - 1) // 3 * 2


def pair_witness(g: Graph, x: int, y: int, mode: str) -> Witness:
    """Witness that x is a function of y plus the (non)distinguishing set.

    mode="distinguishers": args are y plus every vertex adjacent to exactly
    one of x, y; table is the identity on y's bit. mode="nondistinguishers":
    args are y plus every vertex adjacent to both or neither; table is the
    negation of y's bit.
    """
    _check_vertex(g, x, "x")
    _check_vertex(g, y, "y")
    if x == y:
        raise GraphError("pair_witness requires two distinct vertices")
    rest = g.full_mask & ~(1 << x) & ~(1 << y)
    diff = (g.rows[x] ^ g.rows[y]) & rest
    if mode == "distinguishers":
        zmask = diff
    elif mode == "nondistinguishers":
        zmask = rest & ~diff
    else:
        raise GraphError(f"unknown pair_witness mode: {mode!r}")
    args = [y] + list(bit_ids(zmask))
    k = len(args)
    if k > TABLE_ARITY_LIMIT:
        raise SizeLimitError(
            f"witness table would need 2^{k} entries (limit 2^{TABLE_ARITY_LIMIT})"
        )
    table = _identity_table(k)
    if mode == "nondistinguishers":
        table = ~table & ((1 << (1 << k)) - 1)
    return _emit(g, Witness(x, tuple(args), table, "pair-" + mode))


# ---------------------------------------------------------------------------
# structural predicates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StructureReport:
    twins: tuple[tuple[int, int], ...]
    anti_twins: tuple[tuple[int, int], ...]
    triangle_free: bool
    k2p_free: bool
    threshold: bool
    p: int


def _cached_triangle_free(g: Graph) -> bool:
    if "triangle_free" not in g._cache:
        ok = True
        for u in range(g.n):
            row = g.rows[u]
            for v in bit_ids(row >> (u + 1) << (u + 1)):
                if row & g.rows[v]:
                    ok = False
                    break
            if not ok:
                break
        g._cache["triangle_free"] = ok
    return g._cache["triangle_free"]


def _cached_k2p_free(g: Graph, p: int) -> bool:
    key = ("k2p_free", p)
    if key not in g._cache:
        ok = True
        for u in range(g.n):
            ru = g.rows[u]
            for v in range(u + 1, g.n):
                if (ru & g.rows[v]).bit_count() >= p:
                    ok = False
                    break
            if not ok:
                break
        g._cache[key] = ok
    return g._cache[key]


def _cached_degree_bounds(g: Graph) -> tuple[int, int]:
    if "deg_bounds" not in g._cache:
        degs = [r.bit_count() for r in g.rows]
        g._cache["deg_bounds"] = (min(degs), max(degs)) if degs else (0, 0)
    return g._cache["deg_bounds"]


def is_threshold(g: Graph) -> bool:
    """Peel isolated/dominating vertices; threshold iff the graph empties."""
    mask = g.full_mask
    size = g.n
    while size > 0:
        found = None
        for v in bit_ids(mask):
            d = (g.rows[v] & mask).bit_count()
            if d == 0 or d == size - 1:
                found = v
                break
        if found is None:
            return False
        mask &= ~(1 << found)
        size -= 1
    return True


def structure_scan(g: Graph, p: int) -> StructureReport:
    """Twins, anti-twins, triangle-freeness, K_{2,p}-freeness, thresholdness."""
    if p < 2:
        raise GraphError("K_{2,p} scan requires p >= 2")
    twins = []
    anti = []
    full = g.full_mask
    for u in range(g.n):
        for v in range(u + 1, g.n):
            keep = full & ~(1 << u) & ~(1 << v)
            ru = g.rows[u] & keep
            rv = g.rows[v] & keep
            if ru == rv:
                twins.append((u, v))
            if ru ^ rv == keep:
                anti.append((u, v))
    return StructureReport(
        twins=tuple(twins),
        anti_twins=tuple(anti),
        triangle_free=_cached_triangle_free(g),
        k2p_free=_cached_k2p_free(g, p),
        threshold=is_threshold(g),
        p=p,
    )


# ---------------------------------------------------------------------------
# half-graph / ABC recognition
# ---------------------------------------------------------------------------

def recover_half_graph_orders(
    g: Graph, xs: Iterable[int], ys: Iterable[int]
) -> tuple[list[int], list[int]]:
    """Recover orders realizing x_i ~ y_j iff i < j on the X-Y edges.

    Only edges between the two sets are considered. The neighborhood sizes
    force the orders, so the result is unique; a non-realizable pattern
    raises with a violating pair in the message.
    """
    x_ids = sorted(set(xs))
    y_ids = sorted(set(ys))
    if not x_ids or len(x_ids) != len(y_ids):
        raise GraphError(
            f"half-graph sides must be nonempty and equal-sized "
            f"(got {len(x_ids)} and {len(y_ids)})"
        )
    m = len(x_ids)
    x_mask = mask_of(x_ids, g.n)
    y_mask = mask_of(y_ids, g.n)
    if x_mask & y_mask:
        raise GraphError("half-graph sides must be disjoint")
    x_deg = {x: (g.rows[x] & y_mask).bit_count() for x in x_ids}
    y_deg = {y: (g.rows[y] & x_mask).bit_count() for y in y_ids}
    if sorted(x_deg.values()) != list(range(m)):
        err = _degree_collision(x_deg)
        raise GraphError(
            f"not a half graph: X-side neighborhood sizes must be "
            f"{{0..{m - 1}}}, got {sorted(x_deg.values())}"
            + (f"; vertices {err} share a degree" if err else "")
        )
    order_x = sorted(x_ids, key=lambda x: -x_deg[x])
    order_y = sorted(y_ids, key=lambda y: y_deg[y])
    for i, x in enumerate(order_x, start=1):
        for j, y in enumerate(order_y, start=1):
            if g.has_edge(x, y) != (i < j):
                raise GraphError(
                    f"not a half graph: pair ({x},{y}) violates the order rule"
                )
    return order_x, order_y


def _degree_collision(deg: dict[int, int]):
    seen = {}
    for v, d in deg.items():
        if d in seen:
            return (seen[d], v)
        seen[d] = v
    return None


@dataclass(frozen=True)
class AbcReport:
    """Recovered structure of a valid A/B/C clique partition."""

    n: int
    order_a: tuple[int, ...]
    order_b_ab: tuple[int, ...]
    order_b_bc: tuple[int, ...]
    order_c: tuple[int, ...]


def check_abc_partition(
    g: Graph, a: Iterable[int], b: Iterable[int], c: Iterable[int]
) -> AbcReport:
    """Verify the three-clique half-graph structure and recover all orders."""
    a_ids = sorted(set(a))
    b_ids = sorted(set(b))
    c_ids = sorted(set(c))
    n = len(a_ids)
    if not (len(b_ids) == len(c_ids) == n) or n == 0:
        raise GraphError(
            f"parts must be nonempty and equal-sized, got "
            f"|A|={len(a_ids)}, |B|={len(b_ids)}, |C|={len(c_ids)}"
        )
    masks = [mask_of(ids, g.n) for ids in (a_ids, b_ids, c_ids)]
    if masks[0] & masks[1] or masks[0] & masks[2] or masks[1] & masks[2]:
        raise GraphError("parts must be pairwise disjoint")
    if masks[0] | masks[1] | masks[2] != g.full_mask:
        raise GraphError("parts must cover every vertex")
    for name, ids, mask in zip("ABC", (a_ids, b_ids, c_ids), masks):
        for u in ids:
            missing = mask & ~g.rows[u] & ~(1 << u)
            if missing:
                v = next(bit_ids(missing))
                raise GraphError(f"{name} is not a clique: ({u},{v}) missing")
    for u in a_ids:
        stray = g.rows[u] & masks[2]
        if stray:
            v = next(bit_ids(stray))
            raise GraphError(f"forbidden A-C edge ({u},{v})")
    order_a, order_b_ab = recover_half_graph_orders(g, a_ids, b_ids)
    order_b_bc, order_c = recover_half_graph_orders(g, b_ids, c_ids)
    return AbcReport(
        n=n,
        order_a=tuple(order_a),
        order_b_ab=tuple(order_b_ab),
        order_b_bc=tuple(order_b_bc),
        order_c=tuple(order_c),
    )


# ---------------------------------------------------------------------------
# refutation on sparse regular-ish graphs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RefutationPair:
    """Pair (u, w) with equal all-zero profile on S but split adjacency to x."""

    u: int
    w: int


def refute_function(
    g: Graph, x: int, args: Iterable[int], k: int, p: int
) -> RefutationPair:
    """Produce a pair proving x is not a function of the k-set ``args``.

    Requires the graph to be triangle-free, K_{2,p}-free, with min degree
    >= kp+1 and max degree <= (n-k-2)/(k+1); violated premises are reported
    together and are a legal outcome, not a bug.
    """
    _check_vertex(g, x, "x")
    s_ids = sorted(set(args))
    s_mask = mask_of(s_ids, g.n)
    if s_mask >> x & 1:
        raise GraphError("x may not appear in the argument set")
    if len(s_ids) != k:
        raise GraphError(f"expected |S| = {k}, got {len(s_ids)}")
    if p < 2:
        raise GraphError("refutation premises require p >= 2")
    violations = []
    if not _cached_triangle_free(g):
        violations.append("graph contains a triangle")
    if not _cached_k2p_free(g, p):
        violations.append(f"graph contains a K_{{2,{p}}} subgraph")
    dmin, dmax = _cached_degree_bounds(g)
    if dmin < k * p + 1:
        violations.append(f"min degree {dmin} < kp+1 = {k * p + 1}")
    if dmax * (k + 1) > g.n - k - 2:
        violations.append(
            f"max degree {dmax} > (n-k-2)/(k+1) = {(g.n - k - 2)}/{k + 1}"
        )
    if violations:
        raise PremiseViolation(violations)
    n_s = 0
    for s in s_ids:
        n_s |= g.rows[s]
    u_mask = g.rows[x] & ~s_mask & ~n_s
    w_mask = g.full_mask & ~(g.rows[x] | (1 << x) | s_mask | n_s)
    if not u_mask or not w_mask:
        raise AssertionError("premises hold but no refutation pair exists")
    return RefutationPair(u=next(bit_ids(u_mask)), w=next(bit_ids(w_mask)))
