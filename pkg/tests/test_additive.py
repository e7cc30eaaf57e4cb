import pytest

from girthlab.additive import (
    GREENE_PRIMES,
    BipartiteLabeled,
    SidonSet,
    fox_labeling,
    graph_sum,
    greedy_sidon,
    greene_construction,
    greene_digest,
    is_sidon,
    representation_function,
)
from girthlab.groups import GroupSubset, cyclic, product_set
from girthlab.prng import XorShift64Star

from helpers import s3


def test_representation_function_examples():
    z5 = cyclic(5)
    a = GroupSubset(z5, [0, 1])
    b = GroupSubset(z5, [0, 2])
    assert representation_function(a, b, 2) == 1
    assert representation_function(a, b, 1) == 1
    assert representation_function(a, b, 4) == 0
    e = GroupSubset(z5, [0])
    assert representation_function(e, e, 0) == 1


def test_representation_function_sums_to_product_of_sizes():
    rng = XorShift64Star(1313)
    for order in (5, 8, 12):
        g = cyclic(order)
        for _ in range(30):
            a = GroupSubset.from_mask(g, 1 + rng.bounded((1 << order) - 1))
            b = GroupSubset.from_mask(g, 1 + rng.bounded((1 << order) - 1))
            total = sum(representation_function(a, b, x) for x in range(order))
            assert total == len(a) * len(b)
            # support of r is exactly the sumset
            support = {x for x in range(order) if representation_function(a, b, x)}
            assert support == set(product_set(a, b))


def test_representation_function_brute_agreement():
    rng = XorShift64Star(1414)
    g = cyclic(9)
    for _ in range(50):
        a = GroupSubset.from_mask(g, 1 + rng.bounded(511))
        b = GroupSubset.from_mask(g, 1 + rng.bounded(511))
        x = rng.bounded(9)
        brute = sum(1 for p in a for q in b if (p + q) % 9 == x)
        assert representation_function(a, b, x) == brute


def test_representation_function_errors():
    z5 = cyclic(5)
    a = GroupSubset(z5, [0])
    with pytest.raises(ValueError, match="element out of range"):
        representation_function(a, a, 5)
    with pytest.raises(ValueError, match="mixed groups"):
        representation_function(a, GroupSubset(cyclic(6), [0]), 0)
    s = GroupSubset(s3(), [0])
    with pytest.raises(ValueError, match="non-abelian group"):
        representation_function(s, s, 0)


def test_bipartite_labeled_validation():
    with pytest.raises(ValueError, match="must be disjoint"):
        BipartiteLabeled((0,), (0,), frozenset(), {0: 0}, {0: 1})
    with pytest.raises(ValueError, match="edge leaves the bipartition"):
        BipartiteLabeled((0,), (1,), frozenset([(1, 0)]), {0: 0}, {1: 1})
    with pytest.raises(ValueError, match="labels must cover each side"):
        BipartiteLabeled((0,), (1,), frozenset(), {}, {1: 1})
    with pytest.raises(ValueError, match="injectivity violation"):
        BipartiteLabeled((0, 1), (2,), frozenset(), {0: 5, 1: 5}, {2: 0})


def test_graph_sum_basics():
    bg = BipartiteLabeled((0,), (1,), frozenset([(0, 1)]), {0: 3}, {1: 4})
    assert graph_sum(bg) == frozenset([7])
    assert bg.max_out_degree() == 1 and bg.max_in_degree() == 1

    # complete bipartite with integer labels: sums form A + B
    left = (0, 1, 2)
    right = (10, 11)
    bg = BipartiteLabeled(
        left,
        right,
        frozenset((u, v) for u in left for v in right),
        {0: 1, 1: 2, 2: 4},
        {10: 0, 11: 10},
        None,
    )
    s = graph_sum(bg)
    assert s == frozenset([1, 2, 4, 11, 12, 14])
    assert len(s) >= max(bg.max_out_degree(), bg.max_in_degree())


def test_graph_sum_floor_over_random_integer_graphs():
    rng = XorShift64Star(2718)
    for _ in range(100):
        nl = 1 + rng.bounded(5)
        nr = 1 + rng.bounded(5)
        left = tuple(range(nl))
        right = tuple(range(100, 100 + nr))
        # distinct random labels on each side
        alpha_vals: list = []
        while len(alpha_vals) < nl:
            v = rng.bounded(50)
            if v not in alpha_vals:
                alpha_vals.append(v)
        beta_vals: list = []
        while len(beta_vals) < nr:
            v = rng.bounded(50)
            if v not in beta_vals:
                beta_vals.append(v)
        edges = frozenset(
            (u, v) for u in left for v in right if rng.bit()
        )
        bg = BipartiteLabeled(
            left, right, edges,
            dict(zip(left, alpha_vals)), dict(zip(right, beta_vals)),
        )
        s = graph_sum(bg)  # raises if the floor is breached
        assert len(s) >= max(bg.max_out_degree(), bg.max_in_degree())


def test_greene_construction_hits_the_floor():
    z11 = cyclic(11)
    a = GroupSubset(z11, [0, 1, 3])
    b = GroupSubset(z11, [0, 1])
    bg = greene_construction(a, b)
    assert graph_sum(bg) == frozenset([0, 1])
    assert bg.max_out_degree() == len(b)
    assert bg.max_in_degree() <= len(b)
    assert len(bg.left) == len(a)

    # degenerate: A = {0} gives sums exactly B with d1 = |B|
    e = GroupSubset(z11, [0])
    bg = greene_construction(e, b)
    assert graph_sum(bg) == frozenset(b.members())


def test_greene_construction_indegree_is_representation_count():
    z12 = cyclic(12)
    a = GroupSubset(z12, [0, 2, 5])
    b = GroupSubset(z12, [0, 1, 6])
    bg = greene_construction(a, b)
    indeg: dict = {}
    for (_, v) in bg.edges:
        indeg[v] = indeg.get(v, 0) + 1
    for v, d in indeg.items():
        s = v - z12.order  # right vertices are offset by the order
        assert d == representation_function(a, b, s)


def test_is_sidon():
    assert is_sidon([1, 2, 4])
    assert not is_sidon([1, 2, 3])  # 1 + 3 = 2 + 2
    assert is_sidon([7])
    assert is_sidon([])
    assert is_sidon([1, 2, 5, 11])
    z12 = cyclic(12)
    assert is_sidon(GroupSubset(z12, [0, 1, 3]))
    assert not is_sidon(GroupSubset(z12, [0, 1, 6, 7]))  # 0+7 = 1+6
    with pytest.raises(ValueError, match="non-abelian group"):
        is_sidon(GroupSubset(s3(), [0, 1]))


def test_sidon_set_validates():
    s = SidonSet((1, 2, 4))
    assert len(s) == 3 and tuple(s) == (1, 2, 4)
    with pytest.raises(ValueError, match="not a Sidon set"):
        SidonSet((1, 2, 3))


def _brute_greedy_sidon(count):
    chosen: list = []
    c = 1
    while len(chosen) < count:
        if is_sidon(chosen + [c]):
            chosen.append(c)
        c += 1
    return tuple(chosen)


def test_greedy_sidon_matches_definition():
    assert greedy_sidon(4).elements == (1, 2, 4, 8)
    assert greedy_sidon(6).elements == (1, 2, 4, 8, 13, 21)
    assert greedy_sidon(1).elements == (1,)
    for k in range(1, 9):
        assert greedy_sidon(k).elements == _brute_greedy_sidon(k)
    with pytest.raises(ValueError, match="count must be positive"):
        greedy_sidon(0)


def test_fox_labeling_default():
    lab = fox_labeling(3)
    labels = greedy_sidon(3).elements
    assert lab.alpha == {0: -1, 1: -2, 2: -4}
    assert lab.gamma == {(0, 1): 3, (0, 2): 5, (1, 2): 6}
    assert lab.sumset == frozenset(labels)
    assert len(lab.sumset) == 3


def test_fox_labeling_explicit_and_errors():
    lab = fox_labeling(4, elements=[1, 2, 5, 11])
    assert len(lab.sumset) == 4
    assert len(set(lab.gamma.values())) == len(lab.gamma)  # Sidon: injective

    # non-Sidon labels break edge-label injectivity but not the sumset
    lab = fox_labeling(4, elements=[1, 2, 3, 4])
    assert lab.sumset == frozenset([1, 2, 3, 4])
    assert len(set(lab.gamma.values())) < len(lab.gamma)  # 1+4 = 2+3

    with pytest.raises(ValueError, match="need n >= 2"):
        fox_labeling(1)
    with pytest.raises(ValueError, match="need exactly n labels"):
        fox_labeling(3, elements=[1, 2])
    with pytest.raises(ValueError, match="labels must be distinct"):
        fox_labeling(3, elements=[1, 2, 2])


def test_fox_sumset_always_equals_label_set():
    rng = XorShift64Star(321)
    for _ in range(50):
        n = 2 + rng.bounded(6)
        labels = set()
        while len(labels) < n:
            labels.add(rng.bounded(100))
        lab = fox_labeling(n, elements=sorted(labels))
        assert lab.sumset == frozenset(labels)


def test_greene_digest_small_primes():
    # A covers all of Z/3, so every residue has |A| representations
    assert greene_digest(3) == {"p": 3, "set_size": 3, "sumset_size": 3, "min_r": 3}
    d5 = greene_digest(5)
    assert d5["set_size"] == 5  # {0} with all of <2> = Z/5*
    assert d5["sumset_size"] == 5
    d17 = greene_digest(17)
    assert d17["set_size"] == 9
    assert d17["min_r"] >= 1


def test_greene_digest_257():
    d = greene_digest(257)
    assert d["p"] == 257
    assert d["set_size"] == 17
    # the residue sumset: 105 integer sums of {0, +-2^i} collapse mod 257
    # (eight coincidences such as 2^7 + 2^7 = -1 + 0), leaving 97 classes
    assert d["sumset_size"] == 97
    assert d["min_r"] == 2


def test_greene_257_identities():
    p = 257
    # 0 + 0 = 1 + (-1)
    assert (1 + (p - 1)) % p == 0
    # 2^7 + 2^7 = 0 + (-1)
    assert (2**7 + 2**7) % p == (0 + (p - 1)) % p
    # 2^i + 2^i = 0 + 2^(i+1) for every i
    for i in range(16):
        assert (pow(2, i, p) + pow(2, i, p)) % p == pow(2, i + 1, p)


def test_greene_257_sumset_structure():
    # A + A is a union of {0} and cosets of <2>, so its size is 1 mod 16
    group = cyclic(257)
    members = {0}
    x = 1
    while x not in members:
        members.add(x)
        x = (2 * x) % 257
    a = GroupSubset(group, members)
    s = product_set(a, a)
    assert (len(s) - 1) % 16 == 0
    sset = set(s.members())
    for v in sset:
        if v:
            assert (2 * v) % 257 in sset


def test_greene_digest_rejects_other_primes():
    assert GREENE_PRIMES == (3, 5, 17, 257)
    with pytest.raises(ValueError, match="unsupported prime"):
        greene_digest(7)
    with pytest.raises(ValueError, match="unsupported prime"):
        greene_digest(65537)
