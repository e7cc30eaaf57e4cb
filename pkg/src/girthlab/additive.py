"""Sumset machinery: representation functions, Sidon sets, Greene's
bipartite construction, and the Sidon labeling of complete graphs.

Everything here is written additively but runs over any abelian FiniteGroup
(or plain integers where noted).  The Greene construction produces, for
subsets A and B, a bipartite graph whose edge-sum set is exactly B, showing
the max(d1, d2) lower bound on |alpha(V1) + beta(V2)| cannot be improved.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Union

from .groups import FiniteGroup, GroupSubset, cyclic, product_set

GREENE_PRIMES = (3, 5, 17, 257)


def _require_abelian(group: FiniteGroup) -> None:
    if not group.is_abelian():
        raise ValueError("non-abelian group")


def _same_group(A: GroupSubset, B: GroupSubset) -> FiniteGroup:
    if A.group is not B.group and A.group.table != B.group.table:
        raise ValueError("mixed groups")
    return A.group


def representation_function(A: GroupSubset, B: GroupSubset, x: int) -> int:
    """r_{A,B}(x): ordered pairs (a, b) in A x B with a + b = x."""
    group = _same_group(A, B)
    _require_abelian(group)
    if not (0 <= x < group.order):
        raise ValueError("element out of range")
    count = 0
    for a in A.members():
        # a + b = x  =>  b = -a + x
        b = group.mul(group.inverse(a), x)
        if (B.mask >> b) & 1:
            count += 1
    return count


@dataclass(frozen=True, eq=False)
class BipartiteLabeled:
    """Bipartite graph with injective group labels on each side.

    Vertices are bare integers; `group` of None means the labels are plain
    integers under ordinary addition.
    """

    left: tuple[int, ...]
    right: tuple[int, ...]
    edges: frozenset
    alpha: dict
    beta: dict
    group: Optional[FiniteGroup] = None

    def __post_init__(self):
        ls, rs = set(self.left), set(self.right)
        if ls & rs:
            raise ValueError("left and right vertex sets must be disjoint")
        for (u, v) in self.edges:
            if u not in ls or v not in rs:
                raise ValueError("edge leaves the bipartition")
        if set(self.alpha) != ls or set(self.beta) != rs:
            raise ValueError("labels must cover each side exactly")
        if len(set(self.alpha.values())) != len(self.alpha):
            raise ValueError("injectivity violation")
        if len(set(self.beta.values())) != len(self.beta):
            raise ValueError("injectivity violation")

    def _add(self, a, b):
        return self.group.mul(a, b) if self.group is not None else a + b

    def max_out_degree(self) -> int:
        deg: dict = {}
        for (u, _) in self.edges:
            deg[u] = deg.get(u, 0) + 1
        return max(deg.values(), default=0)

    def max_in_degree(self) -> int:
        deg: dict = {}
        for (_, v) in self.edges:
            deg[v] = deg.get(v, 0) + 1
        return max(deg.values(), default=0)


def graph_sum(bg: BipartiteLabeled) -> frozenset:
    """Edge-sum set {alpha(u) + beta(v) : (u,v) in E}.

    The size is never below max(d1, d2): the d1 edges at a max-outdegree
    vertex have distinct sums already (beta injective), likewise for d2.
    """
    sums = frozenset(bg._add(bg.alpha[u], bg.beta[v]) for (u, v) in bg.edges)
    floor = max(bg.max_out_degree(), bg.max_in_degree())
    if len(sums) < floor:
        raise AssertionError("sumset beneath the degree floor")
    return sums


def greene_construction(A: GroupSubset, B: GroupSubset) -> BipartiteLabeled:
    """Bipartite witness that the max(d1, d2) floor is tight.

    V1 = -A, V2 = A + B, edges (-a, a+b); the edge sums collapse to exactly
    B, while the left degrees are all |B|.
    """
    group = _same_group(A, B)
    _require_abelian(group)
    order = group.order
    left = tuple(sorted({group.inverse(a) for a in A.members()}))
    sums = product_set(A, B)
    right = tuple(order + s for s in sums.members())
    edges = set()
    for a in A.members():
        na = group.inverse(a)
        for b in B.members():
            edges.add((na, order + group.mul(a, b)))
    bg = BipartiteLabeled(
        left=left,
        right=right,
        edges=frozenset(edges),
        alpha={v: v for v in left},
        beta={order + s: s for s in sums.members()},
        group=group,
    )
    got = graph_sum(bg)
    if got != frozenset(B.members()):
        raise AssertionError("edge-sum set must equal B")
    return bg


def is_sidon(A: Union[GroupSubset, Iterable[int]]) -> bool:
    """All unordered pairwise sums a_i + a_j (i <= j) distinct."""
    if isinstance(A, GroupSubset):
        _require_abelian(A.group)
        elems = A.members()
        add = A.group.mul
    else:
        elems = tuple(sorted(set(A)))
        add = lambda a, b: a + b
    seen = set()
    for i, a in enumerate(elems):
        for b in elems[i:]:
            s = add(a, b)
            if s in seen:
                return False
            seen.add(s)
    return True


@dataclass(frozen=True)
class SidonSet:
    elements: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        if not is_sidon(self.elements):
            raise ValueError("not a Sidon set")

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def greedy_sidon(count: int) -> SidonSet:
    """First `count` terms of the smallest-next-integer Sidon sequence from 1.

    Candidate c joins when no sum c + a (a already chosen, or a = c) has
    been seen; sums among distinct chosen elements stay distinct for free.
    """
    if count < 1:
        raise ValueError("count must be positive")
    chosen: list[int] = []
    sums: set = set()
    c = 1
    while len(chosen) < count:
        if 2 * c not in sums and all(c + a not in sums for a in chosen):
            for a in chosen:
                sums.add(c + a)
            sums.add(2 * c)
            chosen.append(c)
        c += 1
    return SidonSet(tuple(chosen))


class FoxLabeling(NamedTuple):
    alpha: dict
    gamma: dict
    sumset: frozenset


def fox_labeling(n: int, elements: Optional[Iterable[int]] = None) -> FoxLabeling:
    """Label K_n so each vertex sees exactly n distinct vertex+edge sums.

    With labels a_1..a_n, alpha(v_i) = -a_i and gamma(e_ij) = a_i + a_j, so
    alpha(v) + gamma(e) = a_j for the other endpoint v_j: the local sumset
    is the label set itself.  gamma is a proper (injective) edge labeling
    whenever the labels form a Sidon set; callers may pass non-Sidon
    elements to watch that fail.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    if elements is None:
        labels = greedy_sidon(n).elements
    else:
        labels = tuple(elements)
        if len(labels) != n:
            raise ValueError("need exactly n labels")
        if len(set(labels)) != n:
            raise ValueError("labels must be distinct")
    alpha = {i: -labels[i] for i in range(n)}
    gamma = {(i, j): labels[i] + labels[j] for i in range(n) for j in range(i + 1, n)}
    sumset = frozenset(
        alpha[v] + s for (i, j), s in gamma.items() for v in (i, j)
    )
    return FoxLabeling(alpha, gamma, sumset)


def greene_digest(p: int) -> dict:
    """Summary of A = {0} u <2> in Z/p for the small Fermat primes.

    For p = 257 the subgroup <2> is exactly {+-2^i : i = 0..7} (2^8 = -1),
    giving |A| = 17 and r_{A,A}(x) >= 2 on all of A + A.
    """
    if p not in GREENE_PRIMES:
        raise ValueError("unsupported prime")
    group = cyclic(p)
    members = {0}
    x = 1
    while x not in members:
        members.add(x)
        x = (2 * x) % p
    A = GroupSubset(group, members=members)
    S = product_set(A, A)
    min_r = min(representation_function(A, A, s) for s in S.members())
    return {
        "p": p,
        "set_size": len(A),
        "sumset_size": len(S),
        "min_r": min_r,
    }
