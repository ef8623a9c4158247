import pytest

from ssn.families import builtin_family
from ssn.groups import group_from_generators, normal_subgroups, prime_set, subgroup_generated
from ssn.numbers import primes_upto
from ssn.perm import parse_permutation
from ssn.sigma import (
    REMAINDER,
    BlockId,
    SigmaPartition,
    is_sigma_nilpotent,
    is_sigma_primary,
    is_sigma_soluble,
    sigma_component,
)


def test_block_of_listed_and_remainder():
    sigma = SigmaPartition.of({2, 3})
    assert sigma.block_of(3) == BlockId(0)
    assert sigma.block_of(5) == REMAINDER
    assert SigmaPartition.of({2}, {3}).block_of(2) == BlockId(0)


def test_block_of_rejects_composites():
    with pytest.raises(ValueError):
        SigmaPartition.of({2}).block_of(4)


def test_partition_validation():
    with pytest.raises(ValueError):
        SigmaPartition.of({2}, {2, 5})  # overlapping blocks
    with pytest.raises(ValueError):
        SigmaPartition.of(set())  # empty block
    with pytest.raises(ValueError):
        SigmaPartition.of({4})  # composite entry


def test_partition_totality():
    sigma = SigmaPartition.of({2, 7}, {3})
    listed = {2: BlockId(0), 7: BlockId(0), 3: BlockId(1)}
    for p in primes_upto(1000):
        b = sigma.block_of(p)
        assert b == listed.get(p, REMAINDER)


def test_is_sigma_primary(split23, merged23):
    assert is_sigma_primary(split23, set())
    assert is_sigma_primary(merged23, {2, 3})
    assert not is_sigma_primary(split23, {2, 3})
    assert is_sigma_primary(split23, {5, 7})  # both in the remainder


def test_sigma_component_s3(s3, split23):
    assert sigma_component(s3, split23, BlockId(1)).order == 3
    assert sigma_component(s3, split23, BlockId(0)).order == 1
    assert sigma_component(s3, SigmaPartition.of({2, 3}), BlockId(0)).order == 6


def test_component_contains_every_normal_block_subgroup(s4, w23, split23):
    for g in (s4, w23):
        for b in split23.block_ids():
            comp = sigma_component(g, split23, b)
            for n in normal_subgroups(g):
                if all(split23.block_of(p) == b for p in prime_set(n)):
                    assert comp.contains(n)


def test_sigma_nilpotent_examples(s3, split23, merged23):
    c6 = group_from_generators(5, [parse_permutation("(1 2)(3 4 5)", 5)])
    assert is_sigma_nilpotent(c6, split23)
    assert not is_sigma_nilpotent(s3, split23)
    assert is_sigma_nilpotent(s3, merged23)


def test_sigma_soluble_examples(s4, a5, split23, degenerate):
    assert is_sigma_soluble(s4, split23)
    assert not is_sigma_soluble(a5, SigmaPartition.of({5}))
    assert is_sigma_soluble(a5, SigmaPartition.of({2, 3, 5}))
    assert is_sigma_soluble(a5, degenerate)


def test_nilpotent_implies_soluble_across_corpus(split23, merged23, degenerate):
    for name in ["cyclic(6)", "symmetric(3)", "symmetric(4)", "wreath_cyclic(2,3)", "alternating(4)"]:
        g = builtin_family(name)
        for sigma in (split23, merged23, degenerate, SigmaPartition.of({2, 5}, {3})):
            if is_sigma_nilpotent(g, sigma):
                assert is_sigma_soluble(g, sigma)


def test_block_refinement_monotonicity():
    fine = SigmaPartition.of({2}, {3}, {5})
    coarse = SigmaPartition.of({2, 3}, {5})
    for name in ["cyclic(6)", "symmetric(3)", "wreath_cyclic(2,3)", "direct_product(cyclic(2),cyclic(3))"]:
        g = builtin_family(name)
        if is_sigma_nilpotent(g, fine):
            assert is_sigma_nilpotent(g, coarse)


def test_degenerate_partition_everything_trivially_true(degenerate):
    for name in ["symmetric(4)", "alternating(5)", "wreath_cyclic(3,2)"]:
        g = builtin_family(name)
        assert is_sigma_primary(degenerate, prime_set(g))
        assert is_sigma_nilpotent(g, degenerate)
        assert is_sigma_soluble(g, degenerate)


def test_predicates_on_subgroups(s4, split23):
    v = [n for n in normal_subgroups(s4) if n.order == 4][0]
    assert is_sigma_nilpotent(v, split23)
    sy3 = subgroup_generated(s4, [parse_permutation("(1 2 3)", 4)])
    assert is_sigma_nilpotent(sy3, split23)
