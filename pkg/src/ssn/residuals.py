"""Residual subgroups: O^pi, block residuals, their intersections, and the
smallest normal subgroup with soluble-for-sigma quotient."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import kernels
from .groups import (
    FiniteGroup,
    Subgroup,
    bits_from_bools,
    is_soluble,
    normals_in,
    prime_set,
)
from .numbers import is_prime_power, prime_factors
from .sigma import BlockId, SigmaPartition, _as_subgroup, is_sigma_soluble


def pi_residual(x: Subgroup | FiniteGroup, pi: Iterable[int]) -> Subgroup:
    """Smallest normal subgroup of x whose quotient is a pi-group.

    Generated by every element of prime-power order q^k with q outside pi;
    that generating set is closed under conjugation, so the result is normal,
    and any normal subgroup with pi-quotient must contain it.
    """
    sub = _as_subgroup(x)
    parent = sub.parent
    pi = frozenset(pi)
    key = ("pires", sub.bits, pi)
    cached = parent._cache.get(key)
    if cached is None:
        orders = parent.element_orders
        idx = sub.indices()
        seeds = [
            int(i)
            for i in idx
            if (q := is_prime_power(int(orders[i]))) is not None and q not in pi
        ]
        bits = bits_from_bools(kernels.closure(parent.table, np.array(seeds, dtype=np.int32)))
        cached = Subgroup(parent, bits)
        assert prime_factors(sub.order // cached.order) <= pi, "quotient must be a pi-group"
        parent._cache[key] = cached
    return cached


def block_residual(x: Subgroup | FiniteGroup, sigma: SigmaPartition, b: BlockId) -> Subgroup:
    """O^pi for pi = the block b (restricted to the primes of x)."""
    sub = _as_subgroup(x)
    return pi_residual(sub, sigma.restrict(b, prime_set(sub)))


def tau_residual(
    x: Subgroup | FiniteGroup, sigma: SigmaPartition, tau: Iterable[BlockId]
) -> Subgroup:
    """Intersection of the block residuals over the blocks in tau; x itself
    when tau is empty."""
    sub = _as_subgroup(x)
    bits = sub.bits
    for b in sorted(set(tau)):
        bits &= block_residual(sub, sigma, b).bits
    return Subgroup(sub.parent, bits)


def sigma_residual(x: Subgroup | FiniteGroup, sigma: SigmaPartition) -> Subgroup:
    """Intersection of the block residuals over every block meeting the primes
    of x; the quotient by it is the largest nilpotent-for-sigma quotient."""
    sub = _as_subgroup(x)
    key = ("sigres", sub.bits, sigma)
    cached = sub.parent._cache.get(key)
    if cached is None:
        cached = tau_residual(sub, sigma, sigma.blocks_meeting(prime_set(sub)))
        sub.parent._cache[key] = cached
    return cached


def sigma_soluble_residual(x: Subgroup | FiniteGroup, sigma: SigmaPartition) -> Subgroup:
    """Smallest normal subgroup with sigma-soluble quotient.

    Sigma-soluble finite groups are closed under subdirect products, so the
    intersection of all qualifying normal subgroups qualifies itself.  A
    plain-soluble x short-circuits to the trivial subgroup.
    """
    sub = _as_subgroup(x)
    parent = sub.parent
    key = ("solres", sub.bits, sigma)
    cached = parent._cache.get(key)
    if cached is None:
        if is_soluble(sub):
            cached = parent.trivial()
        else:
            from .groups import indices_from_bits, quotient_group

            group, to_parent = sub.as_group()
            acc = (1 << group.order) - 1
            for n in normals_in(group.full()):
                if is_sigma_soluble(quotient_group(group, n), sigma):
                    acc &= n.bits
            bits = 0
            for i in indices_from_bits(acc, group.order):
                bits |= 1 << int(to_parent[int(i)])
            cached = Subgroup(parent, bits)
        parent._cache[key] = cached
    return cached


@dataclass(frozen=True)
class ResidualReport:
    """One residual computation, optionally cross-checked by the brute oracle."""

    subject: Subgroup
    kind: str  # "pi" | "sigma" | "tau" | "soluble"
    detail: str
    result: Subgroup
    oracle_result: Subgroup | None = None

    def consistent(self) -> bool:
        return self.oracle_result is None or self.oracle_result.bits == self.result.bits


def _oracle_min_normal(sub: Subgroup, accept) -> Subgroup:
    """Brute scan: the minimum of the normal subgroups satisfying ``accept``."""
    candidates = [n for n in normals_in(sub) if accept(n)]
    best = min(candidates, key=lambda n: n.order)
    assert all(n.contains(best) for n in candidates), "qualifying set has no minimum"
    return best


def residual_report(
    x: Subgroup | FiniteGroup,
    kind: str,
    sigma: SigmaPartition | None = None,
    pi: Iterable[int] = (),
    tau: Iterable[BlockId] = (),
    with_oracle: bool = False,
) -> ResidualReport:
    sub = _as_subgroup(x)
    oracle = None
    if kind == "pi":
        pi = frozenset(pi)
        result = pi_residual(sub, pi)
        detail = "pi={" + ",".join(map(str, sorted(pi))) + "}"
        if with_oracle:
            oracle = _oracle_min_normal(
                sub, lambda n: prime_factors(sub.order // n.order) <= pi
            )
    elif kind == "sigma":
        assert sigma is not None
        result = sigma_residual(sub, sigma)
        detail = sigma.describe()
        if with_oracle:
            oracle = _oracle_min_normal(
                sub, lambda n: _quotient_nilpotent(sub, n, sigma)
            )
    elif kind == "tau":
        assert sigma is not None
        result = tau_residual(sub, sigma, tau)
        detail = sigma.describe() + " tau=" + ",".join(str(b) for b in sorted(set(tau)))
    elif kind == "soluble":
        assert sigma is not None
        result = sigma_soluble_residual(sub, sigma)
        detail = sigma.describe()
        if with_oracle:
            oracle = _oracle_min_normal(
                sub, lambda n: _quotient_sigma_soluble(sub, n, sigma)
            )
    else:
        raise ValueError(f"unknown residual kind {kind!r}")
    report = ResidualReport(sub, kind, detail, result, oracle)
    assert report.consistent(), f"{kind}-residual disagrees with the oracle"
    return report


def _quotient_nilpotent(sub: Subgroup, n: Subgroup, sigma: SigmaPartition) -> bool:
    from .groups import quotient_group
    from .sigma import is_sigma_nilpotent

    group, to_parent = sub.as_group()
    inner = _restrict_to(group, to_parent, n)
    return is_sigma_nilpotent(quotient_group(group, inner), sigma)


def _quotient_sigma_soluble(sub: Subgroup, n: Subgroup, sigma: SigmaPartition) -> bool:
    from .groups import quotient_group

    group, to_parent = sub.as_group()
    inner = _restrict_to(group, to_parent, n)
    return is_sigma_soluble(quotient_group(group, inner), sigma)


def _restrict_to(group: FiniteGroup, to_parent: np.ndarray, n: Subgroup) -> Subgroup:
    """Re-express a parent-indexed subgroup of the members inside ``group``."""
    parent_bits = n.bits
    bits = 0
    for i, pi in enumerate(to_parent):
        if parent_bits >> int(pi) & 1:
            bits |= 1 << i
    return Subgroup(group, bits)
