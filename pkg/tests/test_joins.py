import pytest

import naive
from ssn.families import builtin_family, wreath_cyclic
from ssn.groups import (
    all_subgroups,
    join,
    product_bits,
    subgroup_generated,
)
from ssn.joins import is_orthogonal, permutes, permutizer
from ssn.perm import parse_permutation
from ssn.residuals import sigma_residual
from ssn.sigma import SigmaPartition
from ssn.subnormality import sigma_subnormal_fast


def test_join_cases(s4):
    lat = all_subgroups(s4)
    v = [s for s in lat.nodes if s.order == 4][0]
    triv = s4.trivial()
    assert join(v, triv).bits == v.bits
    assert join(v, s4.full()).bits == s4.full().bits
    for x in lat.nodes[::4]:
        for y in lat.nodes[::5]:
            j = join(x, y)
            assert j.contains(x) and j.contains(y)
            # least upper bound in the lattice
            for z in lat.nodes:
                if z.contains(x) and z.contains(y):
                    assert z.contains(j)


def test_wreath_join_of_base_and_top(w23):
    h = subgroup_generated(w23, [w23.generators[0]])
    k = subgroup_generated(w23, [w23.generators[1]])
    assert join(h, k).order == 24


def test_permutes_basics(s4):
    full = s4.full()
    lat = all_subgroups(s4)
    v = [s for s in lat.nodes if s.order == 4 and len(s.generator_strings()) > 1][0]
    for y in lat.nodes:
        assert permutes(full, y)  # normal (here: the whole group) permutes with all
        assert permutes(y, y)
    # symmetry on every pair
    for x in lat.nodes[::3]:
        for y in lat.nodes[::4]:
            assert permutes(x, y) == permutes(y, x)


def test_permutes_matches_product_set(s4):
    lat = all_subgroups(s4)
    for x in lat.nodes[::2]:
        for y in lat.nodes[::3]:
            product_is_join = product_bits(x, y) == join(x, y).bits
            assert permutes(x, y) == product_is_join


def test_wreath_regression_pairs():
    """HK != KH while both sigma-residuals vanish, for all three prime pairs."""
    for p, q in [(2, 3), (3, 2), (2, 5)]:
        g = wreath_cyclic(p, q)
        sigma = SigmaPartition.of({p, q})
        h = subgroup_generated(g, [g.generators[0]])
        k = subgroup_generated(g, [g.generators[1]])
        assert not permutes(h, k)
        assert sigma_subnormal_fast(h, g.full(), sigma) is not None
        assert sigma_subnormal_fast(k, g.full(), sigma) is not None
        assert is_orthogonal(h, k)
        rh = sigma_residual(h, sigma)
        rk = sigma_residual(k, sigma)
        assert rh.order == 1 and rk.order == 1
        assert permutes(rh, rk)


def test_permutizer_wreath(w23):
    lat = all_subgroups(w23)
    h = subgroup_generated(w23, [w23.generators[0]])
    k = subgroup_generated(w23, [w23.generators[1]])
    res = permutizer(h, k, lat)
    assert res.is_unique and res.maximum.order == 1
    res2 = permutizer(h, w23.full(), lat)
    assert res2.is_unique and res2.maximum.bits == h.bits
    res3 = permutizer(w23.trivial(), k, lat)
    assert res3.is_unique and res3.maximum.order == 1


def test_permutizer_unique_across_s4_pairs(s4):
    """No pair of S4 subgroups produces a split permutizer (evidence for the
    uniqueness question; the whole bundled corpus agrees)."""
    lat = all_subgroups(s4)
    for h in lat.nodes:
        for k in lat.nodes:
            assert permutizer(h, k, lat).is_unique


def test_permutizer_split_branch(s4, monkeypatch):
    """Force non-join-closed permuting sets to exercise the split result."""
    import ssn.joins as joins_mod

    lat = all_subgroups(s4)
    k = subgroup_generated(s4, [parse_permutation("(1 2 3)", 4)])
    # all three transposition subgroups of this S3 copy permute with k
    h = subgroup_generated(s4, [parse_permutation("(1 2)", 4), parse_permutation("(1 2 3)", 4)])
    real = joins_mod.permutes

    def fake(x, y):
        if y.bits == k.bits and x.order > 2:
            return False  # permit only the tiny subgroups, whose join is bigger
        return real(x, y)

    monkeypatch.setattr(joins_mod, "permutes", fake)
    res = joins_mod.permutizer(h, k, lat)
    assert not res.is_unique
    assert len(res.maximal) == 3  # the three transposition subgroups
    assert all(m.order == 2 for m in res.maximal)


def test_permutizer_contains_all_permuting_subgroups(s4):
    lat = all_subgroups(s4)
    k = subgroup_generated(s4, [parse_permutation("(1 2 3)", 4)])
    res = permutizer(s4.full(), k, lat)
    if res.is_unique:
        for node in lat.nodes:
            if permutes(node, k):
                assert res.maximum.contains(node)


def test_orthogonality_basics(s4, a5):
    c2 = subgroup_generated(s4, [parse_permutation("(1 2)", 4)])
    c3 = subgroup_generated(s4, [parse_permutation("(1 2 3)", 4)])
    assert is_orthogonal(c2, c3)
    assert not is_orthogonal(c2, c2)
    # perfect group is orthogonal to everything, including itself
    assert is_orthogonal(a5.full(), a5.full())
    assert is_orthogonal(a5.full(), c2)


ABELIAN_PAIRS = [
    "cyclic(2)",
    "cyclic(3)",
    "cyclic(4)",
    "cyclic(6)",
    "direct_product(cyclic(2),cyclic(2))",
    "direct_product(cyclic(4),cyclic(2))",
    "direct_product(cyclic(2),cyclic(2),cyclic(2))",
    "direct_product(cyclic(9),cyclic(3))",
    "direct_product(cyclic(8),cyclic(4))",
    "direct_product(cyclic(6),cyclic(6))",
    "cyclic(30)",
]


def test_orthogonality_matches_tensor_oracle():
    """Prime-disjointness agrees with the actual tensor product order, computed
    from invariant-factor decompositions of abelian groups of order <= 64."""
    groups = [builtin_family(name) for name in ABELIAN_PAIRS]
    for g1 in groups:
        for g2 in groups:
            assert g1.order <= 64 and g2.order <= 64
            e1 = frozenset(p.images for p in g1.elements)
            e2 = frozenset(p.images for p in g2.elements)
            tensor_trivial = naive.brute_tensor_order(e1, e2) == 1
            assert is_orthogonal(g1.full(), g2.full()) == tensor_trivial


def test_parent_mismatch_rejected(s3, s4):
    with pytest.raises(ValueError):
        join(s3.full(), s4.full())
    with pytest.raises(ValueError):
        permutes(s3.full(), s4.full())
