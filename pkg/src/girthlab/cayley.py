"""Cayley graphs: construction, girth via product sets, extremal circulants.

Cayley(Gamma, A) has the group elements as vertices and an edge (v, va) for
every a in A.  Its girth is the least ell with 1 in A^ell, so girth questions
reduce to product-set iteration without materializing the graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .digraph import Cycle, Digraph
from .groups import (
    FiniteGroup,
    GroupSubset,
    cyclic,
    load_cayley_table,
    product_set,
)

TABLE_ORDER_CAP = 2048


@dataclass(frozen=True)
class CayleySpec:
    group: FiniteGroup
    connection_set: GroupSubset

    def __post_init__(self):
        if self.connection_set.group is not self.group:
            raise ValueError("mixed groups")


def build(spec: CayleySpec) -> Digraph:
    """Materialize the Cayley graph; every vertex gets out- and indegree |A|."""
    g = spec.group
    edges = []
    members = tuple(spec.connection_set)
    for v in range(g.order):
        row = g.table[v]
        for a in members:
            edges.append((v, row[a]))
    return Digraph(g.order, edges)


def cayley_girth(spec: CayleySpec) -> Optional[int]:
    """Smallest ell >= 1 with identity in A^ell, or None if none within |Gamma|.

    Iterates product sets directly; the cap at |Gamma| is pigeonhole-safe
    because the cumulative unions stabilize by then.
    """
    A = spec.connection_set
    if A.mask == 0:
        return None
    power = A
    for ell in range(1, spec.group.order + 1):
        if power.contains_identity():
            return ell
        if ell < spec.group.order:
            power = product_set(power, A)
    return None


def girth_witness_word(spec: CayleySpec) -> Optional[list[int]]:
    """A shortest word a_1..a_ell over A with a_1 a_2 ... a_ell = 1.

    Breadth-first search from the identity along right multiplication,
    expanding frontier nodes and connection elements in ascending order, so
    the witness is deterministic.  Returns None when no cycle exists.
    """
    g = spec.group
    members = tuple(spec.connection_set)
    if not members:
        return None
    t = g.table
    parent: dict[int, tuple[int, int]] = {}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            row = t[x]
            for a in members:
                y = row[a]
                if y == 0:
                    word = [a]
                    while x != 0:
                        x, step = parent[x]
                        word.append(step)
                    word.reverse()
                    return word
                if y not in parent:
                    parent[y] = (x, a)
                    nxt.append(y)
        frontier = sorted(nxt)
    return None


@dataclass(frozen=True)
class CirculantExtremal:
    """The extremal circulant C(n, {1..r}) plus its proof witness cycle."""

    spec: CayleySpec
    girth: int
    steps: tuple[int, ...]
    cycle: Cycle


def circulant_extremal(n: int, r: int) -> CirculantExtremal:
    """Z/n with A = {1,...,r} as residues; girth exactly ceil(n/r).

    The witness follows the constructive upper-bound proof: steps a_i = r for
    i < ell and a_ell = r - s where ell = ceil(n/r) and s = ell*r - n, which
    sum to n and so close a cycle.  When n = r the step r is the residue 0,
    giving the loop the formula predicts (ceil(n/r) = 1).
    """
    if r < 1:
        raise ValueError("r must be positive")
    if n < r:
        raise ValueError("n must be at least r")
    if n > TABLE_ORDER_CAP:
        raise ValueError("parameter overflow")
    group = cyclic(n)
    conn = GroupSubset(group, {a % n for a in range(1, r + 1)})
    spec = CayleySpec(group, conn)
    ell = -(-n // r)
    s = ell * r - n
    steps = (r,) * (ell - 1) + (r - s,)
    verts = [0]
    acc = 0
    for a in steps:
        acc = (acc + a) % n
        verts.append(acc)
    cycle = Cycle(build(spec), tuple(verts))
    return CirculantExtremal(spec, ell, steps, cycle)


def regular_girth_cayley(d: int, g: int) -> CayleySpec:
    """A degree-d Cayley graph of girth exactly g: Z/(d(g-1)+1) with A = {1..d}."""
    if d < 1 or g < 1:
        raise ValueError("d and g must be positive")
    order = d * (g - 1) + 1
    if order > TABLE_ORDER_CAP:
        raise ValueError("parameter overflow")
    group = cyclic(order)
    conn = GroupSubset(group, {a % order for a in range(1, d + 1)})
    return CayleySpec(group, conn)


def is_connected(spec: CayleySpec) -> bool:
    """True iff the union of A^k over k >= 1 is the whole group."""
    g = spec.group
    A = spec.connection_set
    full = (1 << g.order) - 1
    reached = A.mask
    frontier = A
    while True:
        if reached == full:
            return True
        frontier = product_set(frontier, A)
        new = frontier.mask & ~reached
        if new == 0:
            return False
        reached |= new


def hamidoune_cayley_bound(spec: CayleySpec) -> tuple[int, bool]:
    """Bound ceil(|Gamma|/|A|) and whether the Cayley girth meets it."""
    size = len(spec.connection_set)
    if size == 0:
        raise ValueError("empty connection set")
    bound = -(-spec.group.order // size)
    g = cayley_girth(spec)
    return bound, g is not None and g <= bound


def parse_group_spec(text: str) -> FiniteGroup:
    """CLI group syntax: "cyclic:N" or "table:<path>"."""
    kind, sep, arg = text.partition(":")
    if not sep:
        raise ValueError(f"bad group spec {text!r}: expected 'cyclic:N' or 'table:<path>'")
    if kind == "cyclic":
        try:
            n = int(arg)
        except ValueError:
            raise ValueError(f"bad group spec {text!r}: order must be an integer") from None
        return cyclic(n)
    if kind == "table":
        return load_cayley_table(arg)
    raise ValueError(f"bad group spec {text!r}: unknown kind {kind!r}")


def parse_connection_list(group: FiniteGroup, text: str) -> GroupSubset:
    """CLI connection-set syntax: comma-separated element indices."""
    text = text.strip()
    if not text:
        return GroupSubset(group, ())
    try:
        members = [int(p) for p in text.split(",")]
    except ValueError:
        raise ValueError(f"bad connection set {text!r}: entries must be integers") from None
    return GroupSubset(group, members)
