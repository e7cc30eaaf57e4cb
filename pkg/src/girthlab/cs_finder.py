"""Constructive short-cycle finder: outdegree >= r forces a cycle <= 2n/(r+1).

The inductive proof is run directly as an algorithm.  Each round picks a
pivot v0 of maximum indegree, returns immediately when a loop, digon, or
triangle shows up around it, and otherwise removes A union {v0} (A the
in-neighbors), patching every surviving vertex's lost edges into A with
"new edges" into B (the out-neighbors) whose replacement is the 3-edge
detour through v0.  A cycle found downstairs lifts upstairs by expanding
the new edges, and cutting the lifted walk at its m visits to v0 leaves m
cycles whose shortest member satisfies the bound.

All of the proof's accounting identities are enforced at runtime, not
assumed: reduced outdegrees stay >= r, the reduced graph loses at least
r + 1 vertices, the lifted walk has length ell' + 2m, and the cut segments
sum back to it exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .digraph import Cycle, Digraph, max_indegree_vertex

# ln((2 + sqrt 7)/3) = 0.437340816710779... ; times 3 this is Shen's ~1.312
SHEN_CONSTANT = math.log((2.0 + math.sqrt(7.0)) / 3.0)


def _ensure(cond: bool, msg: str) -> None:
    if not cond:
        raise AssertionError(msg)


@dataclass(eq=False)
class ReductionStep:
    """One round of the surgery, kept for lifting the recursive cycle back."""

    pivot: int
    in_set: frozenset[int]
    out_set: frozenset[int]
    # (v, b) -> the replacement path ((v, a), (a, pivot), (pivot, b))
    new_edges: dict[tuple[int, int], tuple[tuple[int, int], ...]]
    reduced_graph: Digraph
    vertex_map: tuple[int, ...]


def cs_bound(n: int, r: int) -> Fraction:
    """The exact rational bound 2n/(r+1)."""
    if r < 1 or n < r:
        raise ValueError("need n >= r >= 1")
    return Fraction(2 * n, r + 1)


def shen_bound(n: int, r: int) -> int:
    """Shen's cycle-length bound 3*ceil(ln((2+sqrt(7))/3) * n/r)."""
    if n < 1 or r < 1:
        raise ValueError("need n, r >= 1")
    return 3 * math.ceil(SHEN_CONSTANT * n / r)


def find_short_cycle(g: Digraph, r: int) -> Cycle:
    """A cycle of g with length at most floor(2n/(r+1)).

    Requires n >= r >= 1 and minimum outdegree >= r; the offending vertex is
    named otherwise.  All choices (pivot, triangle scan, new-edge targets,
    replacement in-neighbors, shortest-segment ties) take the smallest index,
    so output is deterministic.
    """
    if r < 1:
        raise ValueError("r must be positive")
    if g.n < r:
        raise ValueError(f"need n >= r, got n={g.n}, r={r}")
    for v in range(g.n):
        if g.out_degree(v) < r:
            raise ValueError(
                f"outdegree precondition violated at vertex {v}: {g.out_degree(v)} < {r}"
            )

    steps: list[ReductionStep] = []
    graphs: list[Digraph] = [g]
    walk: list[int] = []
    while True:
        found = _base_or_shortcut(graphs[-1], r)
        if found is not None:
            walk = found
            break
        steps.append(_reduce(graphs[-1], r))
        graphs.append(steps[-1].reduced_graph)

    for i in range(len(steps) - 1, -1, -1):
        walk = _lift(steps[i], walk)
        parent = graphs[i]
        for j in range(1, len(walk)):
            _ensure(parent.has_edge(walk[j - 1], walk[j]),
                    "lift produced a non-edge")

    bound = (2 * g.n) // (r + 1)
    _ensure(len(walk) - 1 <= bound, "lifted cycle exceeds the 2n/(r+1) bound")
    return Cycle(g, tuple(walk))


def _base_or_shortcut(g: Digraph, r: int):
    """Loop/digon/triangle around the pivot, or the n = r base case.

    Returns a closed walk as a vertex list, or None when the graph must be
    reduced further.
    """
    n = g.n
    if n == r:
        # outdegree >= n forces an edge to every vertex, itself included
        _ensure(g.has_edge(0, 0), "complete graph base case lost its loops")
        return [0, 0]
    v0, indeg = max_indegree_vertex(g)
    _ensure(indeg >= r, "averaging lemma failed: max indegree below r")
    if g.has_edge(v0, v0):
        return [v0, v0]
    in_set = frozenset(u for u in range(n) if g.has_edge(u, v0))
    out_set = frozenset(g.adjacency[v0])
    both = in_set & out_set
    if both:
        v = min(both)
        return [v0, v, v0]
    for b in sorted(out_set):
        for a in g.adjacency[b]:
            if a in in_set:
                return [v0, b, a, v0]
    return None


def _reduce(g: Digraph, r: int) -> ReductionStep:
    n = g.n
    v0, _ = max_indegree_vertex(g)
    in_set = frozenset(u for u in range(n) if g.has_edge(u, v0))
    out_set = frozenset(g.adjacency[v0])
    _ensure(len(in_set) >= r and len(out_set) >= r, "pivot neighborhoods below r")
    _ensure(v0 not in in_set and v0 not in out_set and not (in_set & out_set),
            "A, B, {v0} must be pairwise disjoint here")

    survivors = sorted(set(range(n)) - in_set - {v0})
    index_of = {v: i for i, v in enumerate(survivors)}
    keep = set(survivors)
    b_sorted = sorted(out_set)

    new_edges: dict[tuple[int, int], tuple[tuple[int, int], ...]] = {}
    reduced_edges: list[tuple[int, int]] = []
    for v in survivors:
        vi = index_of[v]
        d_a = 0
        d_b = 0
        smallest_a = -1
        for w in g.adjacency[v]:
            if w in in_set:
                d_a += 1
                if smallest_a < 0:
                    smallest_a = w
            elif w in out_set:
                d_b += 1
            if w in keep:
                reduced_edges.append((vi, index_of[w]))
        d_new = min(d_a, len(out_set) - d_b)
        if d_new:
            picked = 0
            for b in b_sorted:
                if not g.has_edge(v, b):
                    new_edges[(v, b)] = ((v, smallest_a), (smallest_a, v0), (v0, b))
                    reduced_edges.append((vi, index_of[b]))
                    picked += 1
                    if picked == d_new:
                        break
            _ensure(picked == d_new, "ran out of new-edge targets in B")

    reduced = Digraph(len(survivors), reduced_edges)
    _ensure(reduced.n <= n - r - 1, "reduction removed fewer than r + 1 vertices")
    for v in range(reduced.n):
        _ensure(reduced.out_degree(v) >= r,
                f"reduced outdegree dropped below r at vertex {survivors[v]}")
    return ReductionStep(v0, in_set, out_set, new_edges, reduced, tuple(survivors))


def _lift(step: ReductionStep, walk: list[int]) -> list[int]:
    """Expand new edges into their detours, then cut at the pivot visits."""
    parent_walk = [step.vertex_map[v] for v in walk]
    lifted = [parent_walk[0]]
    m = 0
    for i in range(1, len(parent_walk)):
        u, w = parent_walk[i - 1], parent_walk[i]
        path = step.new_edges.get((u, w))
        if path is None:
            lifted.append(w)
        else:
            m += 1
            lifted.extend((path[0][1], path[1][1], path[2][1]))
    _ensure(len(lifted) - 1 == (len(parent_walk) - 1) + 2 * m,
            "lifted walk length is not ell' + 2m")
    if m == 0:
        return lifted
    core = lifted[:-1]
    visits = [i for i, v in enumerate(core) if v == step.pivot]
    _ensure(len(visits) == m, "pivot visit count differs from new-edge count")
    start = visits[0]
    core = core[start:] + core[:start]
    visits = [i - start for i in visits]
    best: list[int] | None = None
    total = 0
    for j, begin in enumerate(visits):
        end = visits[j + 1] if j + 1 < m else len(core)
        segment = core[begin:end] + [step.pivot]
        total += len(segment) - 1
        if best is None or len(segment) < len(best):
            best = segment
    _ensure(total == len(lifted) - 1, "pivot decomposition lost edges")
    return best
