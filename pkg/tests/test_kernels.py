import numpy as np
import pytest

from ssn import kernels
from ssn.families import builtin_family
from ssn.kernels import pyk

try:
    from ssn.kernels import ck
except ImportError:
    ck = None

GROUPS = ["symmetric(3)", "symmetric(4)", "wreath_cyclic(2,3)", "alternating(5)"]


def _cases(g, rng):
    table, inv = g.table, g.inverses
    n = g.order
    for size in (1, 2, 3):
        seed = rng.choice(n, size=size, replace=False).astype(np.int32)
        yield table, inv, seed


def test_backend_reports_name():
    assert kernels.BACKEND in ("python", "cython")


@pytest.mark.skipif(ck is None, reason="compiled kernels not built")
@pytest.mark.parametrize("name", GROUPS)
def test_backends_agree(name):
    g = builtin_family(name)
    rng = np.random.default_rng(11)
    everyone = np.arange(g.order, dtype=np.int32)
    for table, inv, seed in _cases(g, rng):
        a = pyk.closure(table, seed)
        b = ck.closure(table, seed)
        assert (a == b).all()
        idx = np.flatnonzero(a).astype(np.int32)
        assert (pyk.product_set(table, idx, seed) == ck.product_set(table, idx, seed)).all()
        assert (
            pyk.conjugate_expand(table, inv, seed, everyone)
            == ck.conjugate_expand(table, inv, seed, everyone)
        ).all()
        assert (
            pyk.core_members(table, inv, a, everyone)
            == ck.core_members(table, inv, a, everyone)
        ).all()


@pytest.mark.parametrize("impl", [pyk] + ([ck] if ck is not None else []))
def test_closure_is_a_subgroup(impl, s4):
    table = s4.table
    rng = np.random.default_rng(3)
    for _ in range(10):
        seed = rng.choice(s4.order, size=2, replace=False).astype(np.int32)
        mask = impl.closure(table, seed)
        idx = np.flatnonzero(mask)
        assert mask[0]  # identity present
        prods = table[np.ix_(idx, idx)]
        assert mask[prods].all()  # closed under products


@pytest.mark.parametrize("impl", [pyk] + ([ck] if ck is not None else []))
def test_product_set_matches_definition(impl, s3):
    table = s3.table
    a = np.array([1, 2], dtype=np.int32)
    b = np.array([0, 3], dtype=np.int32)
    mask = impl.product_set(table, a, b)
    expect = {int(table[x, y]) for x in a for y in b}
    assert set(np.flatnonzero(mask)) == expect


@pytest.mark.parametrize("impl", [pyk] + ([ck] if ck is not None else []))
def test_empty_seed_closure_is_trivial(impl, s3):
    mask = impl.closure(s3.table, np.array([], dtype=np.int32))
    assert mask[0] and mask.sum() == 1
