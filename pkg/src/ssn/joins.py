"""Joins, set-permutability, permutizers, and orthogonality of subgroups."""

from __future__ import annotations

from dataclasses import dataclass

from .groups import (
    Subgroup,
    SubgroupLattice,
    _check_same_parent,
    all_subgroups,
    derived_subgroup,
    intersection,
    join,
)
from .numbers import prime_factors


def permutes(x: Subgroup, y: Subgroup) -> bool:
    """True iff the product set xy is a subgroup, i.e. xy == yx.

    Equivalent to |<x,y>| * |x & y| == |x| * |y|: the product set always has
    that size, and it is a subgroup exactly when it fills the join.
    """
    _check_same_parent(x, y)
    return join(x, y).order * intersection(x, y).order == x.order * y.order


@dataclass(frozen=True)
class PermutizerResult:
    """Largest subgroup of h permuting with k, when one exists.

    The permuting subgroups of h need not be join-closed; when their join
    fails to permute there is no unique maximum and the maximal permuting
    subgroups are reported instead.
    """

    maximum: Subgroup | None
    maximal: tuple[Subgroup, ...] = ()

    @property
    def is_unique(self) -> bool:
        return self.maximum is not None


def permutizer(h: Subgroup, k: Subgroup, lattice: SubgroupLattice | None = None) -> PermutizerResult:
    """Scan the subgroups of h for those permuting with k."""
    _check_same_parent(h, k)
    lat = lattice if lattice is not None else all_subgroups(h.parent)
    permuting = [
        node
        for node in lat.nodes
        if node.bits & h.bits == node.bits and permutes(node, k)
    ]
    top = h.parent.trivial()
    for node in permuting:
        top = join(top, node)
    if permutes(top, k):
        return PermutizerResult(maximum=top)
    maximal = tuple(
        a
        for a in permuting
        if not any(b.order > a.order and b.contains(a) for b in permuting)
    )
    return PermutizerResult(maximum=None, maximal=maximal)


def abelianization_primes(x: Subgroup) -> frozenset[int]:
    """Primes of |x / x'|."""
    return prime_factors(x.order // derived_subgroup(x).order)


def is_orthogonal(h: Subgroup, k: Subgroup) -> bool:
    """Trivial tensor product of the abelianizations.

    For finite abelian A and B the tensor product A (x) B vanishes exactly
    when their orders are coprime: each shared prime p contributes a nonzero
    C_p quotient.
    """
    return not (abelianization_primes(h) & abelianization_primes(k))
