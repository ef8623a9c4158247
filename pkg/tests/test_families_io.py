import pytest

from ssn.families import (
    alternating,
    builtin_family,
    cyclic,
    dihedral,
    direct_product,
    symmetric,
    wreath_cyclic,
)
from ssn.fileio import load_group, load_partition, save_group, save_partition
from ssn.groups import CapExceededError, prime_set
from ssn.perm import ParseError
from ssn.sigma import SigmaPartition


@pytest.mark.parametrize(
    "spec, order",
    [
        ("cyclic(1)", 1),
        ("cyclic(6)", 6),
        ("dihedral(3)", 6),
        ("dihedral(4)", 8),
        ("symmetric(4)", 24),
        ("alternating(4)", 12),
        ("alternating(5)", 60),
        ("wreath_cyclic(2,3)", 24),
        ("wreath_cyclic(3,2)", 18),
        ("direct_product(cyclic(2),cyclic(3))", 6),
        ("direct_product(symmetric(3),cyclic(2))", 12),
    ],
)
def test_family_orders(spec, order):
    assert builtin_family(spec).order == order


def test_wreath_points_and_generators():
    g = wreath_cyclic(2, 3)
    assert g.degree == 6
    base, top = g.generators
    assert base.cycle_string() == "(1 2)"
    assert top.cycle_string() == "(1 3 5)(2 4 6)"


def test_direct_product_is_abelian_when_factors_are():
    g = builtin_family("direct_product(cyclic(2),cyclic(3))")
    table = g.table
    assert (table == table.T).all()
    assert prime_set(g) == {2, 3}


def test_family_cap_respected():
    with pytest.raises(CapExceededError):
        builtin_family("symmetric(4)", order_cap=10)


@pytest.mark.parametrize(
    "bad", ["cyclic", "cyclic(a)", "unknown(3)", "wreath_cyclic(2)", "cyclic(2,3)"]
)
def test_family_parse_errors(bad):
    with pytest.raises(ParseError):
        builtin_family(bad)


def test_group_file_roundtrip(tmp_path, w23):
    path = tmp_path / "w23.grp"
    save_group(w23, path, comment="wreath")
    loaded = load_group(path)
    assert loaded.order == w23.order
    assert tuple(p.images for p in loaded.elements) == tuple(p.images for p in w23.elements)


def test_group_file_example(tmp_path):
    path = tmp_path / "s3.grp"
    path.write_text("# sample\ndegree: 3\ngen: (1 2)\ngen: (1 2 3)\n")
    assert load_group(path).order == 6


@pytest.mark.parametrize(
    "content, fragment",
    [
        ("gen: (1 2)\n", "gen before degree"),
        ("degree: 3\ngen: (1 5)\n", ":2"),
        ("degree: x\n", "bad degree"),
        ("degree: 3\nwhat: 4\n", "expected"),
        ("", "empty"),
        ("degree: 3\ndegree: 4\n", "duplicate"),
    ],
)
def test_group_file_errors_carry_line_numbers(tmp_path, content, fragment):
    path = tmp_path / "bad.grp"
    path.write_text(content)
    with pytest.raises(ParseError) as exc:
        load_group(path)
    assert fragment in str(exc.value)


def test_partition_file_roundtrip(tmp_path):
    sigma = SigmaPartition.of({2, 3}, {5})
    path = tmp_path / "p.sig"
    save_partition(sigma, path)
    assert load_partition(path) == sigma


def test_partition_file_example(tmp_path):
    path = tmp_path / "p.sig"
    path.write_text("block: 2 3\nblock: 5\n")
    sigma = load_partition(path)
    assert len(sigma.blocks) == 2
    assert sigma.blocks[0] == {2, 3}


@pytest.mark.parametrize(
    "content, fragment",
    [
        ("block: 4\n", "not prime"),
        ("block: 2\nblock: 2 5\n", "repeated"),
        ("block:\n", "empty block"),
        ("prime: 2\n", "expected"),
        ("block: two\n", "bad prime"),
    ],
)
def test_partition_file_errors(tmp_path, content, fragment):
    path = tmp_path / "bad.sig"
    path.write_text(content)
    with pytest.raises(ParseError) as exc:
        load_partition(path)
    assert fragment in str(exc.value)


def test_degenerate_partition_file_roundtrip(tmp_path):
    path = tmp_path / "deg.sig"
    save_partition(SigmaPartition.of(), path, comment="everything in one block")
    assert load_partition(path) == SigmaPartition.of()
