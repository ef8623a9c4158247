"""Partitions of the primes and the classification predicates built on them.

A partition lists finitely many disjoint prime blocks; all unlisted primes
form one implicit remainder block.  Finite groups only ever probe finitely
many primes, so the remainder is never stored extensionally.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .groups import (
    FiniteGroup,
    Subgroup,
    is_soluble,
    minimal_normal_subgroups,
    normals_in,
    prime_set,
    product_bits,
    quotient_group,
)
from .numbers import is_prime


@dataclass(frozen=True)
class BlockId:
    """Reference to one block of a partition: listed index or the remainder."""

    index: int | None = None  # None means the implicit remainder block

    @property
    def is_remainder(self) -> bool:
        return self.index is None

    def __str__(self) -> str:
        return "rest" if self.index is None else f"b{self.index}"

    @classmethod
    def parse(cls, text: str) -> "BlockId":
        t = text.strip().lower()
        if t in {"rest", "remainder"}:
            return cls(None)
        return cls(int(t.lstrip("b")))

    def __lt__(self, other: "BlockId") -> bool:  # listed blocks before remainder
        a = (self.index is None, self.index if self.index is not None else 0)
        b = (other.index is None, other.index if other.index is not None else 0)
        return a < b


REMAINDER = BlockId(None)


@dataclass(frozen=True)
class SigmaPartition:
    """Finitely many explicit disjoint prime blocks plus the implicit remainder."""

    blocks: tuple[frozenset[int], ...] = ()

    def __post_init__(self):
        seen: set[int] = set()
        for blk in self.blocks:
            if not blk:
                raise ValueError("listed blocks must be nonempty")
            for p in blk:
                if not is_prime(p):
                    raise ValueError(f"{p} is not prime")
                if p in seen:
                    raise ValueError(f"prime {p} appears in two blocks")
                seen.add(p)

    @classmethod
    def of(cls, *blocks: Iterable[int]) -> "SigmaPartition":
        return cls(tuple(frozenset(b) for b in blocks))

    def block_of(self, p: int) -> BlockId:
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        for i, blk in enumerate(self.blocks):
            if p in blk:
                return BlockId(i)
        return REMAINDER

    def block_ids(self) -> tuple[BlockId, ...]:
        return tuple(BlockId(i) for i in range(len(self.blocks))) + (REMAINDER,)

    def blocks_meeting(self, primes: Iterable[int]) -> tuple[BlockId, ...]:
        return tuple(sorted({self.block_of(p) for p in primes}))

    def is_primary(self, primes: Iterable[int]) -> bool:
        """True iff the primes are empty or all lie in one block."""
        return len(self.blocks_meeting(primes)) <= 1

    def restrict(self, b: BlockId, primes: Iterable[int]) -> frozenset[int]:
        """The given primes that fall in block b."""
        return frozenset(p for p in primes if self.block_of(p) == b)

    def describe(self) -> str:
        listed = "|".join(
            "{" + ",".join(str(p) for p in sorted(blk)) + "}" for blk in self.blocks
        )
        return (listed + "|rest") if listed else "rest"


def block_of(sigma: SigmaPartition, p: int) -> BlockId:
    return sigma.block_of(p)


def is_sigma_primary(sigma: SigmaPartition, primes: Iterable[int]) -> bool:
    return sigma.is_primary(primes)


def _as_subgroup(x: Subgroup | FiniteGroup) -> Subgroup:
    return x.full() if isinstance(x, FiniteGroup) else x


def sigma_component(x: Subgroup | FiniteGroup, sigma: SigmaPartition, b: BlockId) -> Subgroup:
    """Largest normal subgroup of x whose primes all lie in block b.

    Computed as the product of all such normal subgroups; products of normal
    b-subgroups are again normal b-subgroups, so the scan result is maximal.
    """
    sub = _as_subgroup(x)
    parent = sub.parent
    key = ("component", sub.bits, sigma, b)
    cached = parent._cache.get(key)
    if cached is None:
        acc = parent.trivial()
        for n in normals_in(sub):
            if all(sigma.block_of(p) == b for p in prime_set(n)):
                acc = Subgroup(parent, product_bits(acc, n))
        assert all(sigma.block_of(p) == b for p in prime_set(acc))
        cached = acc
        parent._cache[key] = cached
    return cached


def is_sigma_nilpotent(x: Subgroup | FiniteGroup, sigma: SigmaPartition) -> bool:
    """True iff x is the internal direct product of its block components.

    Components for distinct blocks have coprime orders, so the product is the
    whole group exactly when the component orders multiply up to |x|.
    """
    sub = _as_subgroup(x)
    key = ("signilp", sub.bits, sigma)
    cached = sub.parent._cache.get(key)
    if cached is None:
        total = 1
        for b in sigma.blocks_meeting(prime_set(sub)):
            total *= sigma_component(sub, sigma, b).order
        cached = total == sub.order
        sub.parent._cache[key] = cached
    return cached


def is_sigma_soluble(x: Subgroup | FiniteGroup, sigma: SigmaPartition) -> bool:
    """True iff every chief factor is primary for sigma.

    One chief series decides (chief factors are series-independent up to
    isomorphism), so we peel a minimal normal subgroup and recurse on the
    quotient.  Plain-soluble groups pass immediately: their chief factors are
    elementary abelian p-groups, each inside a single block.
    """
    sub = _as_subgroup(x)
    key = ("sigsol", sub.bits, sigma)
    cached = sub.parent._cache.get(key)
    if cached is not None:
        return cached
    if is_soluble(sub):
        result = True
    else:
        group, _ = sub.as_group()
        result = _sigma_soluble_group(group, sigma)
    sub.parent._cache[key] = result
    return result


def _sigma_soluble_group(g: FiniteGroup, sigma: SigmaPartition) -> bool:
    if g.order == 1:
        return True
    if is_soluble(g.full()):
        return True
    n = minimal_normal_subgroups(g.full())[0]
    if not sigma.is_primary(prime_set(n)):
        return False
    return _sigma_soluble_group(quotient_group(g, n), sigma)
