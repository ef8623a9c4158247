"""Small integer helpers: factorization and primality for group orders."""

from __future__ import annotations

from functools import lru_cache


@lru_cache(maxsize=None)
def factorization(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 1 as ((p, exponent), ...) with p ascending."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def prime_factors(n: int) -> frozenset[int]:
    return frozenset(p for p, _ in factorization(n))


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return factorization(n) == ((n, 1),)


def is_prime_power(n: int) -> int | None:
    """Return p if n is a power p**k with k >= 1, else None; n == 1 gives None."""
    f = factorization(n)
    if len(f) == 1:
        return f[0][0]
    return None


def primes_upto(n: int) -> list[int]:
    """All primes <= n via sieve."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, int(n**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i, b in enumerate(sieve) if b]
