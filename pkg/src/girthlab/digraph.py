"""Finite directed graphs with exact girth and degree primitives.

Vertices are dense integer indices 0..n-1.  Loops (v, v) are allowed and
count as cycles of length 1; parallel edges are collapsed.  A Digraph is
immutable after construction, so it is safe to share across workers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional


class Digraph:
    """Immutable digraph over vertices 0..n-1 with an edge set."""

    __slots__ = ("n", "edges", "adjacency", "out_rows", "_in_deg")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        edge_set = set()
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            edge_set.add((u, v))
        self.n = n
        self.edges = frozenset(edge_set)
        adj: list[list[int]] = [[] for _ in range(n)]
        rows = [0] * n
        for u, v in edge_set:
            adj[u].append(v)
            rows[u] |= 1 << v
        for lst in adj:
            lst.sort()
        self.adjacency = tuple(tuple(lst) for lst in adj)
        self.out_rows = tuple(rows)
        indeg = [0] * n
        for _, v in edge_set:
            indeg[v] += 1
        self._in_deg = tuple(indeg)

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges

    def out_degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def in_degree(self, v: int) -> int:
        return self._in_deg[v]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Digraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, m={len(self.edges)})"


@dataclass(frozen=True)
class Cycle:
    """Closed walk v0,...,v_len with v0 = v_len, validated against its graph.

    Vertices may repeat; length is the number of edges traversed.
    """

    graph: Digraph = field(repr=False)
    vertices: tuple[int, ...] = ()

    def __post_init__(self):
        vs = tuple(self.vertices)
        object.__setattr__(self, "vertices", vs)
        if len(vs) < 2:
            raise ValueError("cycle needs at least one edge")
        if vs[0] != vs[-1]:
            raise ValueError("cycle must start and end at the same vertex")
        for i in range(1, len(vs)):
            if not self.graph.has_edge(vs[i - 1], vs[i]):
                raise ValueError(f"({vs[i - 1]},{vs[i]}) is not an edge")

    @property
    def length(self) -> int:
        return len(self.vertices) - 1


def girth_of_rows(rows: Iterable[int], n: int, cap: Optional[int] = None) -> Optional[int]:
    """Length of the shortest closed walk given bitmask out-rows.

    The shortest closed walk is a cycle, so this is the girth.  Uses boolean
    matrix powers: girth = min ell with a nonzero diagonal in A^ell.  With a
    cap, returns None when no closed walk of length <= cap exists.
    """
    rows = list(rows)
    limit = n if cap is None else min(cap, n)
    power = rows
    for ell in range(1, limit + 1):
        if ell > 1:
            nxt = []
            for pv in power:
                m = 0
                b = pv
                while b:
                    w = (b & -b).bit_length() - 1
                    m |= rows[w]
                    b &= b - 1
                nxt.append(m)
            power = nxt
        for v in range(n):
            if (power[v] >> v) & 1:
                return ell
    return None


def girth(g: Digraph) -> Optional[tuple[int, Cycle]]:
    """Exact girth with one witness cycle, or None when acyclic.

    Sources are scanned in increasing order; the witness comes from the first
    source that attains the minimum and is the lexicographically smallest
    minimum-length cycle starting there (greedy walk over BFS back-distances).
    """
    n = g.n
    best: Optional[int] = None
    best_source = -1
    rows = g.out_rows
    for s in range(n):
        # BFS over out-edges until s is re-reached, capped by current best
        limit = n if best is None else best - 1
        if limit < 1:
            break
        frontier = rows[s]
        seen = 0
        dist = 1
        found = -1
        while True:
            if (frontier >> s) & 1:
                found = dist
                break
            seen |= frontier
            if dist >= limit:
                break
            nxt = 0
            b = frontier
            while b:
                w = (b & -b).bit_length() - 1
                nxt |= rows[w]
                b &= b - 1
            frontier = nxt & ~seen
            if frontier == 0:
                break
            dist += 1
        if found >= 1 and (best is None or found < best):
            best = found
            best_source = s
    if best is None:
        return None
    return best, _lex_min_cycle(g, best_source, best)


def _lex_min_cycle(g: Digraph, source: int, length: int) -> Cycle:
    # back-distance d[w] = dist(w -> source) over reversed edges
    n = g.n
    back = [None] * n
    back[source] = 0
    rev: list[list[int]] = [[] for _ in range(n)]
    for u, v in g.edges:
        rev[v].append(u)
    queue = [source]
    d = 0
    while queue:
        d += 1
        nxt = []
        for v in queue:
            for u in rev[v]:
                if back[u] is None:
                    back[u] = d
                    nxt.append(u)
        queue = nxt
    # a loop makes back[source] ambiguous (0 vs 1); handle directly
    if length == 1:
        return Cycle(g, (source, source))
    path = [source]
    cur = source
    for remaining in range(length, 0, -1):
        target = remaining - 1
        for w in g.adjacency[cur]:
            dw = 0 if w == source and target == 0 else back[w]
            if dw == target:
                path.append(w)
                cur = w
                break
        else:  # no shorter cycle exists, so a tight successor always does
            raise AssertionError("witness reconstruction failed")
    return Cycle(g, tuple(path))


def min_outdegree(g: Digraph) -> int:
    if g.n == 0:
        raise ValueError("empty graph")
    return min(len(g.adjacency[v]) for v in range(g.n))


def max_indegree_vertex(g: Digraph) -> tuple[int, int]:
    """Vertex of maximum indegree, smallest index on ties."""
    if g.n == 0:
        raise ValueError("empty graph")
    best_v = 0
    best_d = g.in_degree(0)
    for v in range(1, g.n):
        d = g.in_degree(v)
        if d > best_d:
            best_v, best_d = v, d
    return best_v, best_d


def has_loop(g: Digraph) -> bool:
    return any((g.out_rows[v] >> v) & 1 for v in range(g.n))


def has_digon(g: Digraph) -> bool:
    return any(u != v and (v, u) in g.edges for (u, v) in g.edges)


def second_neighborhood_witness(g: Digraph) -> Optional[int]:
    """Some v with |N+(v)| <= |N++(v)|, scanning vertices in increasing order.

    N++(v) is the set of vertices reachable in exactly two steps and not in
    N+(v).  Requires an oriented graph: no loops, no digons.
    """
    if has_loop(g) or has_digon(g):
        raise ValueError("precondition: oriented graph required")
    for v in range(g.n):
        first = g.out_rows[v]
        second = 0
        b = first
        while b:
            w = (b & -b).bit_length() - 1
            second |= g.out_rows[w]
            b &= b - 1
        second &= ~first
        second &= ~(1 << v)  # digon-free already implies this bit is unset
        if bin(first).count("1") <= bin(second).count("1"):
            return v
    return None


def parse_edge_list(text: str) -> Digraph:
    """Parse the edge-list format: first line "n m", then m lines "u v".

    Indices are 0-based.  Out-of-range indices and duplicate edges are
    rejected with line-numbered errors.
    """
    lines = text.splitlines()
    entries = [(i + 1, ln.strip()) for i, ln in enumerate(lines) if ln.strip()]
    if not entries:
        raise ValueError("line 1: expected header 'n m'")
    lineno, header = entries[0]
    parts = header.split()
    if len(parts) != 2:
        raise ValueError(f"line {lineno}: expected header 'n m'")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"line {lineno}: expected header 'n m'") from None
    if n < 0 or m < 0:
        raise ValueError(f"line {lineno}: n and m must be non-negative")
    body = entries[1:]
    if len(body) != m:
        raise ValueError(f"expected {m} edge lines, found {len(body)}")
    edges = []
    seen = set()
    for lineno, ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected edge 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: expected edge 'u v'") from None
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"line {lineno}: vertex index out of range")
        if (u, v) in seen:
            raise ValueError(f"line {lineno}: duplicate edge ({u},{v})")
        seen.add((u, v))
        edges.append((u, v))
    return Digraph(n, edges)


def load_edge_list(path: str) -> Digraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())
