import pytest

import naive
from ssn.families import builtin_family
from ssn.groups import (
    all_subgroups,
    normal_subgroups,
    subgroup_generated,
)
from ssn.perm import parse_permutation
from ssn.sigma import BlockId, SigmaPartition
from ssn.subnormality import (
    SigmaChain,
    is_sigma_embedded,
    is_sigma_normal,
    is_strictly_sigma_subnormal,
    is_subnormal,
    residual_subnormality_check,
    sigma_defect,
    sigma_subnormal_fast,
    sigma_subnormal_oracle,
)

BRUTE_GROUPS = [
    ("symmetric(3)", ()),
    ("symmetric(3)", ({2}, {3})),
    ("symmetric(3)", ({2, 3},)),
    ("alternating(4)", ({2}, {3})),
    ("alternating(4)", ()),
    ("dihedral(4)", ({2}, {3})),
    ("cyclic(6)", ({2}, {3})),
    ("wreath_cyclic(2,3)", ({2}, {3})),
    ("wreath_cyclic(2,3)", ({2, 3},)),
    ("wreath_cyclic(3,2)", ({2}, {3})),
    ("wreath_cyclic(3,2)", ({3},)),
    ("direct_product(symmetric(3),cyclic(2))", ({2}, {3})),
    ("direct_product(symmetric(3),cyclic(2))", ({2, 5}, {3})),
]


def test_subnormal_defects(s4):
    full = s4.full()
    assert is_subnormal(full, full) == 0
    v = [n for n in normal_subgroups(s4) if n.order == 4][0]
    assert is_subnormal(v, full) == 1
    c2 = subgroup_generated(s4, [parse_permutation("(1 2)(3 4)", 4)])
    assert is_subnormal(c2, full) == 2
    sylow = [s for s in all_subgroups(s4).nodes if s.order == 8][0]
    assert is_subnormal(sylow, full) is None


def test_sigma_normal_cases(s4, split23, merged23):
    full = s4.full()
    v = [n for n in normal_subgroups(s4) if n.order == 4][0]
    sylow = [s for s in all_subgroups(s4).nodes if s.order == 8][0]
    assert is_sigma_normal(v, full, split23)
    assert not is_sigma_normal(sylow, full, split23)  # core index 6 splits blocks
    assert is_sigma_normal(sylow, full, merged23)  # sigma-primary ambient


def test_fast_agrees_with_independent_brute_search():
    """Cross-check the library against the tuple/frozenset chain search."""
    for name, blocks in BRUTE_GROUPS:
        g = builtin_family(name)
        sigma = SigmaPartition.of(*blocks)
        elements = frozenset(p.images for p in g.elements)
        all_subs = naive.brute_subgroups(elements)
        lat = all_subgroups(g)
        assert {frozenset(p.images for p in n.perms()) for n in lat.nodes} == all_subs
        for node in lat.nodes:
            mem = frozenset(p.images for p in node.perms())
            expect = naive.brute_sigma_subnormal(
                mem, elements, tuple(frozenset(b) for b in blocks), all_subs
            )
            fast = sigma_subnormal_fast(node, g.full(), sigma)
            oracle = sigma_subnormal_oracle(node, g.full(), sigma, lat)
            assert (fast is not None) == (expect is not None), (name, blocks, mem)
            assert (oracle is not None) == (expect is not None)
            if expect is not None:
                assert oracle[1] == expect  # BFS defect matches brute shortest chain


def test_fast_chain_revalidates(s4, split23):
    full = s4.full()
    for node in all_subgroups(s4).nodes:
        chain = sigma_subnormal_fast(node, full, split23)
        if chain is not None:
            chain.validate(split23)
            assert chain.terms[0].bits == node.bits
            assert chain.terms[-1].bits == full.bits


def test_corrupted_chain_rejected(s4, split23):
    full = s4.full()
    sylow = [s for s in all_subgroups(s4).nodes if s.order == 8][0]
    bad = SigmaChain(terms=(sylow, full), steps=(None,))
    with pytest.raises(ValueError):
        bad.validate(split23)
    bad_block = SigmaChain(terms=(sylow, full), steps=(BlockId(0),))
    with pytest.raises(ValueError):
        bad_block.validate(split23)


def test_trivial_cases(s4, split23):
    full = s4.full()
    chain = sigma_subnormal_fast(full, full, split23)
    assert chain is not None and chain.length == 0
    found = sigma_subnormal_oracle(full, full, split23)
    assert found is not None and found[1] == 0


def test_sylow_not_sigma_subnormal(s4, split23):
    sylow = [s for s in all_subgroups(s4).nodes if s.order == 8][0]
    assert sigma_subnormal_fast(sylow, s4.full(), split23) is None
    assert sigma_subnormal_oracle(sylow, s4.full(), split23) is None


def test_wreath_sigma_primary_chains(w23):
    sigma = SigmaPartition.of({2, 3})
    full = w23.full()
    for node in all_subgroups(w23).nodes:
        chain = sigma_subnormal_fast(node, full, sigma)
        assert chain is not None and chain.length <= 1


def test_degenerate_partition_defect_at_most_one(s4, degenerate):
    lat = all_subgroups(s4)
    for node in lat.nodes:
        assert sigma_defect(node, s4.full(), degenerate, lat) <= 1


def test_subnormal_implies_sigma_subnormal_with_smaller_defect(s4, split23):
    lat = all_subgroups(s4)
    full = s4.full()
    for node in lat.nodes:
        d = is_subnormal(node, full)
        if d is not None:
            sd = sigma_defect(node, full, split23, lat)
            assert sd is not None and sd <= d


def test_strict_chains(s3, split23):
    sy3 = subgroup_generated(s3, [parse_permutation("(1 2 3)", 3)])
    assert is_strictly_sigma_subnormal(sy3, s3.full(), split23, (BlockId(0),))
    assert not is_strictly_sigma_subnormal(sy3, s3.full(), split23, (BlockId(1),))
    assert is_strictly_sigma_subnormal(s3.full(), s3.full(), split23, ())
    assert not is_strictly_sigma_subnormal(s3.full(), s3.full(), split23, (BlockId(0),))
    c2 = subgroup_generated(s3, [parse_permutation("(1 2)", 3)])
    assert not is_strictly_sigma_subnormal(c2, s3.full(), split23, (BlockId(0),))


def test_strict_single_block_in_primary_group(w23):
    sigma = SigmaPartition.of({2, 3})
    h = subgroup_generated(w23, [w23.generators[0]])
    assert is_strictly_sigma_subnormal(h, w23.full(), sigma, (BlockId(0),))


def test_embedded_witnesses(s3, s4, split23):
    sy3 = subgroup_generated(s3, [parse_permutation("(1 2 3)", 3)])
    w = is_sigma_embedded(sy3, s3.full(), split23, normal_in_ambient=True)
    assert w is not None
    assert [t.order for t in w.terms] == [3, 6]
    assert w.blocks == (BlockId(0),)
    w.validate(split23)

    sylow = [s for s in all_subgroups(s4).nodes if s.order == 8][0]
    assert is_sigma_embedded(sylow, s4.full(), split23) is None
    assert is_sigma_embedded(sylow, s4.full(), split23, normal_in_ambient=True) is None

    full = s4.full()
    w2 = is_sigma_embedded(full, full, split23)
    assert w2 is not None and w2.blocks == ()


def test_embedded_implies_sigma_subnormal(s4, w23, split23):
    for g in (s4, w23):
        lat = all_subgroups(g)
        full = g.full()
        for node in lat.nodes:
            emb = is_sigma_embedded(node, full, split23, lattice=lat)
            if emb is not None:
                emb.validate(split23)
                assert sigma_subnormal_fast(node, full, split23) is not None
            embn = is_sigma_embedded(node, full, split23, normal_in_ambient=True)
            if embn is not None:
                embn.validate(split23)
                # normally embedded chains are embedded chains as well
                assert is_sigma_embedded(node, full, split23, lattice=lat) is not None


def test_sigma_normal_agrees_with_brute_on_all_pairs():
    for name, blocks in [("symmetric(4)", ({2}, {3})), ("wreath_cyclic(2,3)", ({2}, {3}))]:
        g = builtin_family(name)
        sigma = SigmaPartition.of(*blocks)
        elements = frozenset(p.images for p in g.elements)
        lat = all_subgroups(g)
        for a in lat.nodes:
            for b in lat.nodes:
                if not b.contains(a):
                    continue
                mem_a = frozenset(p.images for p in a.perms())
                mem_b = frozenset(p.images for p in b.perms())
                core = naive.brute_core(mem_a, mem_b)
                keys = {
                    naive._block_key(p, tuple(frozenset(x) for x in blocks))
                    for p in naive.factor_primes(len(mem_b) // len(core))
                }
                expect = core == mem_a or len(keys) <= 1
                assert is_sigma_normal(a, b, sigma) == expect


def test_normals_inside_proper_ambient_match_brute(s4):
    from ssn.groups import normals_in

    sylow = [s for s in all_subgroups(s4).nodes if s.order == 8][0]
    mem = frozenset(p.images for p in sylow.perms())
    expect = {
        s for s in naive.brute_subgroups(mem) if naive.brute_is_normal(s, mem)
    }
    got = {frozenset(p.images for p in n.perms()) for n in normals_in(sylow)}
    assert got == expect
    # D4: trivial, the center, the three order-4 subgroups, and itself
    assert sorted(n.order for n in normals_in(sylow)) == [1, 2, 4, 4, 4, 8]


EMBED_GROUPS = [
    ("symmetric(3)", ({2}, {3})),
    ("symmetric(3)", ({2, 3},)),
    ("alternating(4)", ({2}, {3})),
    ("dihedral(4)", ({2}, {3})),
    ("cyclic(6)", ({2}, {3})),
    ("wreath_cyclic(2,3)", ({2}, {3})),
    ("direct_product(symmetric(3),cyclic(2))", ({2}, {3})),
]


def test_embedded_agrees_with_brute_search():
    for name, blocks in EMBED_GROUPS:
        g = builtin_family(name)
        sigma = SigmaPartition.of(*blocks)
        elements = frozenset(p.images for p in g.elements)
        all_subs = naive.brute_subgroups(elements)
        lat = all_subgroups(g)
        for node in lat.nodes:
            mem = frozenset(p.images for p in node.perms())
            for flag in (False, True):
                expect = naive.brute_sigma_embedded(
                    mem, elements, tuple(frozenset(b) for b in blocks), all_subs, flag
                )
                got = is_sigma_embedded(node, g.full(), sigma, normal_in_ambient=flag, lattice=lat)
                assert (got is not None) == expect, (name, blocks, flag, mem)


def test_strict_chains_agree_with_brute_search():
    from itertools import product

    for name, blocks in [
        ("symmetric(3)", ({2}, {3})),
        ("alternating(4)", ({2}, {3})),
        ("cyclic(6)", ({2}, {3})),
        ("wreath_cyclic(3,2)", ({2}, {3})),
    ]:
        g = builtin_family(name)
        sigma = SigmaPartition.of(*blocks)
        elements = frozenset(p.images for p in g.elements)
        all_subs = naive.brute_subgroups(elements)
        lat = all_subgroups(g)
        keys = list(range(len(blocks))) + ["rest"]
        ids = [BlockId(k) if isinstance(k, int) else BlockId(None) for k in keys]
        for node in lat.nodes[:: max(1, len(lat.nodes) // 8)]:
            mem = frozenset(p.images for p in node.perms())
            for length in (0, 1, 2):
                for combo in product(range(len(keys)), repeat=length):
                    seq_keys = tuple(keys[c] for c in combo)
                    seq_ids = tuple(ids[c] for c in combo)
                    expect = naive.brute_strictly_sigma_subnormal(
                        mem, elements, tuple(frozenset(b) for b in blocks), seq_keys, all_subs
                    )
                    got = is_strictly_sigma_subnormal(node, g.full(), sigma, seq_ids, lattice=lat)
                    assert got == expect, (name, mem, seq_keys)


def test_wreath25_lattice_scale_agreement():
    """Order-160 group, 408 subgroups: the fast recursion still matches the
    definitional oracle everywhere."""
    g = builtin_family("wreath_cyclic(2,5)")
    lat = all_subgroups(g)
    assert len(lat) == 408
    sigma = SigmaPartition.of({2, 5})
    full = g.full()
    for node in lat.nodes:
        fast = sigma_subnormal_fast(node, full, sigma)
        assert fast is not None and fast.length <= 1  # sigma-primary ambient
        assert sigma_subnormal_oracle(node, full, sigma, lat) is not None


def test_residual_subnormality_check(s4, split23):
    v = [n for n in normal_subgroups(s4) if n.order == 4][0]
    assert residual_subnormality_check(v, s4, split23)
    assert residual_subnormality_check(s4.full(), s4, split23)
    sylow = [s for s in all_subgroups(s4).nodes if s.order == 8][0]
    with pytest.raises(ValueError):
        residual_subnormality_check(sylow, s4, split23)


def test_residual_subnormal_across_corpus(split23):
    for name in ["symmetric(4)", "wreath_cyclic(2,3)", "alternating(4)"]:
        g = builtin_family(name)
        full = g.full()
        for node in all_subgroups(g).nodes:
            if sigma_subnormal_fast(node, full, split23) is not None:
                assert residual_subnormality_check(node, g, split23)


def test_containment_precondition(s4, split23):
    v = [n for n in normal_subgroups(s4) if n.order == 4][0]
    sy3 = subgroup_generated(s4, [parse_permutation("(1 2 3)", 4)])
    with pytest.raises(ValueError):
        sigma_subnormal_fast(v, sy3, split23)
    with pytest.raises(ValueError):
        is_subnormal(v, sy3)
