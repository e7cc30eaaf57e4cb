"""Shared fixtures and independent oracles for the test suite.

Group tables here are built from explicit permutation or quaternion models,
composed by hand, so they do not depend on the code under test beyond
from_table validation.  Brute-force oracles deliberately use the dumbest
possible algorithm.
"""

from itertools import permutations

from girthlab.digraph import Digraph
from girthlab.groups import FiniteGroup, cyclic, direct_product, from_table
from girthlab.cayley import CayleySpec
from girthlab.groups import GroupSubset
from girthlab.prng import XorShift64Star, substream

CAYLEY_CORPUS_SEED = 0xCA11E7
CS_CORPUS_SEED = 0x5C5C5C
TRANSITIVE_CORPUS_SEED = 0x7A15


def _compose(p, q):
    # (p o q)(i) = p(q(i))
    return tuple(p[q[i]] for i in range(len(q)))


def _closure(gens, k):
    ident = tuple(range(k))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = _compose(p, g)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return sorted(seen)


def group_from_generators(gens, k, name):
    """Permutation group as a FiniteGroup; identity is lex-least, index 0."""
    elems = _closure(gens, k)
    index = {p: i for i, p in enumerate(elems)}
    table = [[index[_compose(p, q)] for q in elems] for p in elems]
    return from_table(table, name=name)


def s3():
    return group_from_generators([(1, 0, 2), (1, 2, 0)], 3, "S3")


def d4():
    return group_from_generators([(1, 2, 3, 0), (0, 3, 2, 1)], 4, "D4")


def d6():
    return group_from_generators([(1, 2, 3, 4, 5, 0), (0, 5, 4, 3, 2, 1)], 6, "D6")


def a4():
    return group_from_generators([(1, 2, 0, 3), (0, 2, 3, 1)], 4, "A4")


def q8():
    """Quaternion group from the i,j,k multiplication rules."""
    elems = [(1, "1"), (-1, "1"), (1, "i"), (-1, "i"),
             (1, "j"), (-1, "j"), (1, "k"), (-1, "k")]
    rules = {("1", "1"): (1, "1")}
    for x in "ijk":
        rules[("1", x)] = (1, x)
        rules[(x, "1")] = (1, x)
        rules[(x, x)] = (-1, "1")
    rules[("i", "j")] = (1, "k")
    rules[("j", "k")] = (1, "i")
    rules[("k", "i")] = (1, "j")
    rules[("j", "i")] = (-1, "k")
    rules[("k", "j")] = (-1, "i")
    rules[("i", "k")] = (-1, "j")
    index = {e: i for i, e in enumerate(elems)}
    table = []
    for (s1, a1) in elems:
        row = []
        for (s2, a2) in elems:
            s3_, a3 = rules[(a1, a2)]
            row.append(index[(s1 * s2 * s3_, a3)])
        table.append(row)
    return from_table(table, name="Q8")


def klein():
    return direct_product(cyclic(2), cyclic(2))


def fixture_groups_up_to_12():
    """The order <= 12 corpus: all cyclic plus every non-cyclic fixture."""
    groups = [cyclic(n) for n in range(1, 13)]
    groups += [
        klein(),
        direct_product(cyclic(2), cyclic(4)),
        direct_product(cyclic(2), cyclic(6)),
        direct_product(cyclic(3), cyclic(3)),
        direct_product(cyclic(2), direct_product(cyclic(2), cyclic(2))),
        s3(),
        d4(),
        q8(),
        a4(),
        d6(),
    ]
    return groups


def cayley_corpus(count=500):
    """Seeded (group, connection set) specs over groups of order <= 60."""
    pool = [
        cyclic(2), cyclic(3), cyclic(5), cyclic(8), cyclic(12),
        cyclic(24), cyclic(60),
        direct_product(cyclic(6), cyclic(10)),
        direct_product(cyclic(4), cyclic(15)),
        direct_product(cyclic(2), direct_product(cyclic(2), cyclic(13))),
        s3(),
        direct_product(s3(), cyclic(5)),
        direct_product(s3(), cyclic(10)),
        direct_product(s3(), s3()),
    ]
    specs = []
    for i in range(count):
        group = pool[i % len(pool)]
        rng = substream(CAYLEY_CORPUS_SEED, i)
        mask = 1 + rng.bounded((1 << group.order) - 1)
        specs.append(CayleySpec(group, GroupSubset(group, mask=mask)))
    return specs


def random_min_outdeg_digraph(n, r, rng):
    """The sampling model: r mandatory out-edges, the rest at p = 1/2."""
    edges = []
    for v in range(n):
        others = [w for w in range(n) if w != v]
        k = len(others)
        for i in range(r):
            j = i + rng.bounded(k - i)
            others[i], others[j] = others[j], others[i]
        chosen = set(others[:r])
        for w in sorted(others[r:]):
            if rng.bit():
                chosen.add(w)
        edges.extend((v, w) for w in sorted(chosen))
    return Digraph(n, edges)


def cs_corpus(count=2000):
    """Seeded (graph, r) instances for the short-cycle finder, n <= 40."""
    out = []
    for i in range(count):
        rng = substream(CS_CORPUS_SEED, i)
        n = 2 + rng.bounded(39)
        r = 1 + rng.bounded(min(6, n - 1))
        out.append((random_min_outdeg_digraph(n, r, rng), r))
    return out


def transitive_corpus():
    """Cayley specs over every fixture group of order <= 10.

    Connection sets avoid the identity and, at orders 9 and 10, the full
    non-identity set (the complete digraph's automorphism group is too big
    for the search cap).  Masks whose graph has an automorphism group above
    the table-construction cap are redrawn from the same substream, so every
    fixture stays inside hamidoune_cycle's documented domain.
    """
    from girthlab.cayley import build
    from girthlab.transitive import AS_GROUP_ORDER_CAP, automorphism_group

    pool = [g for g in fixture_groups_up_to_12() if 2 <= g.order <= 10]
    specs = []
    for gi, group in enumerate(pool):
        for j in range(3):
            rng = substream(TRANSITIVE_CORPUS_SEED, gi * 8 + j)
            while True:
                mask = (1 + rng.bounded((1 << (group.order - 1)) - 1)) << 1
                if group.order >= 9 and mask.bit_count() > group.order - 2:
                    mask &= mask - 1
                spec = CayleySpec(group, GroupSubset(group, mask=mask))
                if len(automorphism_group(build(spec))) <= AS_GROUP_ORDER_CAP:
                    break
            specs.append(spec)
    return specs


def brute_girth(g):
    """Shortest directed cycle by enumerating vertex tuples; n <= 7 only."""
    for ell in range(1, g.n + 1):
        for tup in permutations(range(g.n), ell):
            if all(g.has_edge(tup[i], tup[(i + 1) % ell]) for i in range(ell)):
                return ell
    return None


def brute_product(A, B):
    g = A.group
    return {g.mul(a, b) for a in A.members() for b in B.members()}
