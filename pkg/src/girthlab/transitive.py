"""Graph automorphisms and the vertex-transitive girth reduction.

The automorphism group of a small digraph is found by degree-pruned
backtracking, wrapped as a FiniteGroup under composition.  For a
vertex-transitive graph of outdegree d the Hamidoune reduction builds
A = {x : (v0, x v0) in E} inside that group, finds a shortest product
a_1 ... a_ell = 1 with ell <= ceil(n/d), and projects it back to a cycle
v_i = a_1 ... a_i v0 of the graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .cayley import CayleySpec, cayley_girth, girth_witness_word
from .digraph import Cycle, Digraph
from .groups import FiniteGroup, GroupSubset

SEARCH_VERTEX_CAP = 10
ELEMENT_CAP = 100_000
AS_GROUP_ORDER_CAP = 720


def _ensure(cond: bool, msg: str) -> None:
    if not cond:
        raise AssertionError(msg)


@dataclass(frozen=True)
class Permutation:
    """Bijection on 0..n-1, stored as the image tuple."""

    mapping: tuple[int, ...]

    def __post_init__(self):
        m = tuple(self.mapping)
        object.__setattr__(self, "mapping", m)
        if sorted(m) != list(range(len(m))):
            raise ValueError("mapping is not a bijection")

    def __call__(self, v: int) -> int:
        return self.mapping[v]

    def compose(self, other: "Permutation") -> "Permutation":
        """(x compose y)(v) = x(y(v))."""
        return Permutation(tuple(self.mapping[w] for w in other.mapping))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.mapping)
        for v, w in enumerate(self.mapping):
            inv[w] = v
        return Permutation(tuple(inv))


def is_automorphism(g: Digraph, perm: Permutation) -> bool:
    m = perm.mapping
    if len(m) != g.n:
        return False
    return all(((m[u], m[v]) in g.edges) for (u, v) in g.edges) and all(
        g.has_edge(u, v) or (m[u], m[v]) not in g.edges for u in range(g.n) for v in range(g.n)
    )


class AutomorphismGroup:
    """Complete automorphism group: permutation list plus composition table.

    Elements are sorted lexicographically by image tuple, which puts the
    identity at index 0, so as_group() satisfies the FiniteGroup contract
    directly.  The table is built lazily and capped at order 720; groups
    beyond that are unusable as explicit tables anyway.
    """

    def __init__(self, base_graph: Digraph, elements: list[Permutation]):
        self.base_graph = base_graph
        self.elements = tuple(sorted(elements, key=lambda p: p.mapping))
        self._group: Optional[FiniteGroup] = None

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def as_group(self) -> FiniteGroup:
        if self._group is None:
            k = len(self.elements)
            if k > AS_GROUP_ORDER_CAP:
                raise ValueError("automorphism group too large for table construction")
            index = {p.mapping: i for i, p in enumerate(self.elements)}
            table = []
            for x in self.elements:
                row = []
                for y in self.elements:
                    z = x.compose(y).mapping
                    _ensure(z in index, "automorphism list is not closed")
                    row.append(index[z])
                table.append(row)
            self._group = FiniteGroup(table, name=f"Aut(n={self.base_graph.n})",
                                      _trusted=True)
        return self._group


def automorphism_group(g: Digraph) -> AutomorphismGroup:
    """Backtracking search with degree-signature pruning; n <= 10."""
    n = g.n
    if n > SEARCH_VERTEX_CAP:
        raise ValueError("graph too large")
    sig = [
        (g.out_degree(v), g.in_degree(v), g.has_edge(v, v)) for v in range(n)
    ]
    candidates = [
        [w for w in range(n) if sig[w] == sig[v]] for v in range(n)
    ]
    found: list[Permutation] = []
    image = [-1] * n
    used = [False] * n

    def extend(k: int) -> None:
        if k == n:
            found.append(Permutation(tuple(image)))
            if len(found) > ELEMENT_CAP:
                raise ValueError("automorphism group too large")
            return
        for w in candidates[k]:
            if used[w]:
                continue
            ok = True
            for j in range(k):
                if g.has_edge(j, k) != ((image[j], w) in g.edges):
                    ok = False
                    break
                if g.has_edge(k, j) != ((w, image[j]) in g.edges):
                    ok = False
                    break
            if ok and g.has_edge(k, k) == ((w, w) in g.edges):
                image[k] = w
                used[w] = True
                extend(k + 1)
                used[w] = False
                image[k] = -1

    if n > 0:
        extend(0)
    else:
        found.append(Permutation(()))
    return AutomorphismGroup(g, found)


def is_vertex_transitive(g: Digraph) -> tuple[bool, Optional[AutomorphismGroup]]:
    """Whether Aut(g) moves vertex 0 onto every vertex; the group when true."""
    if g.n == 0:
        raise ValueError("empty graph")
    ag = automorphism_group(g)
    orbit = {p.mapping[0] for p in ag.elements}
    if len(orbit) == g.n:
        return True, ag
    return False, None


def stabilizer(ag: AutomorphismGroup, v: int) -> GroupSubset:
    """H_v = {x : x(v) = v} as a subset of ag.as_group."""
    if not (0 <= v < ag.base_graph.n):
        raise ValueError("invalid vertex")
    group = ag.as_group
    mask = 0
    for i, p in enumerate(ag.elements):
        if p.mapping[v] == v:
            mask |= 1 << i
    return GroupSubset(group, mask=mask)


def hamidoune_cycle(g: Digraph, ag: AutomorphismGroup) -> Cycle:
    """A cycle of length at most ceil(n/d) in a vertex-transitive graph.

    The construction is checked as it goes: A must be an exact union of left
    cosets of the stabilizer H0 with |A| = d |H0|, the group word must close
    within the bound, and every projected edge must exist in g.
    """
    n = g.n
    if n == 0:
        raise ValueError("empty graph")
    d = g.out_degree(0)
    _ensure(all(g.out_degree(v) == d for v in range(n)),
            "vertex-transitive graph must be outregular")
    if d == 0:
        raise ValueError("degree-0 graph")
    orbit = {p.mapping[0] for p in ag.elements}
    if len(orbit) != n:
        raise ValueError("non-transitive group")

    group = ag.as_group
    v0 = 0
    conn_mask = 0
    for i, p in enumerate(ag.elements):
        if g.has_edge(v0, p.mapping[v0]):
            conn_mask |= 1 << i
    A = GroupSubset(group, mask=conn_mask)
    H0 = stabilizer(ag, v0)
    for x in A:
        coset = H0.translate_left(x)
        _ensure(coset.mask | A.mask == A.mask, "A is not a union of left cosets of H0")
    _ensure(len(A) == d * len(H0), "|A| must equal d |H0|")

    spec = CayleySpec(group, A)
    word = girth_witness_word(spec)
    _ensure(word is not None, "Cayley graph of a transitive action lost its cycles")
    _ensure(len(word) == cayley_girth(spec), "witness word length disagrees with girth")
    bound = -(-n // d)
    _ensure(len(word) <= bound, "group cycle longer than ceil(n/d)")

    verts = [v0]
    prefix = 0
    for a in word:
        prefix = group.table[prefix][a]
        verts.append(ag.elements[prefix].mapping[v0])
    return Cycle(g, tuple(verts))
