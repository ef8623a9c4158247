"""Builtin permutation-group families and the family-descriptor mini-grammar.

Descriptors: ``cyclic(n)``, ``dihedral(n)``, ``symmetric(n)``,
``alternating(n)``, ``wreath_cyclic(p, q)``, and
``direct_product(spec, spec, ...)``.
"""

from __future__ import annotations

import re

from .groups import DEFAULT_ORDER_CAP, FiniteGroup
from .perm import ParseError, Permutation


def cyclic(n: int, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    if n < 1:
        raise ValueError("cyclic(n) needs n >= 1")
    if n == 1:
        return FiniteGroup.from_generators(1, [], order_cap=order_cap)
    gen = Permutation(tuple((i + 1) % n for i in range(n)))
    return FiniteGroup.from_generators(n, [gen], order_cap=order_cap)


def dihedral(n: int, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n; small n fall back to faithful stand-ins
    (n=1 gives C2 on two points, n=2 the Klein group on four)."""
    if n < 1:
        raise ValueError("dihedral(n) needs n >= 1")
    if n == 1:
        return FiniteGroup.from_generators(2, [Permutation((1, 0))], order_cap=order_cap)
    if n == 2:
        return FiniteGroup.from_generators(
            4, [Permutation((1, 0, 2, 3)), Permutation((0, 1, 3, 2))], order_cap=order_cap
        )
    rot = Permutation(tuple((i + 1) % n for i in range(n)))
    ref = Permutation(tuple((n - i) % n for i in range(n)))
    return FiniteGroup.from_generators(n, [rot, ref], order_cap=order_cap)


def symmetric(n: int, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    if n < 1:
        raise ValueError("symmetric(n) needs n >= 1")
    if n == 1:
        return FiniteGroup.from_generators(1, [], order_cap=order_cap)
    gens = [Permutation((1, 0) + tuple(range(2, n)))]
    if n > 2:
        gens.append(Permutation(tuple((i + 1) % n for i in range(n))))
    return FiniteGroup.from_generators(n, gens, order_cap=order_cap)


def alternating(n: int, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    if n < 3:
        return FiniteGroup.from_generators(max(n, 1), [], order_cap=order_cap)
    gens = []
    for k in range(2, n):
        images = list(range(n))
        images[0], images[1], images[k] = images[1], images[k], images[0]
        gens.append(Permutation(images))
    return FiniteGroup.from_generators(n, gens, order_cap=order_cap)


def wreath_cyclic(p: int, q: int, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Base C_p^q with a top C_q rotating the q blocks of p points.

    Realized on p*q points; generators are the p-cycle on the first block and
    the blockwise rotation, in that order.  Order p**q * q.
    """
    if p < 2 or q < 2:
        raise ValueError("wreath_cyclic(p, q) needs p, q >= 2")
    degree = p * q
    base = list(range(degree))
    for i in range(p):
        base[i] = (i + 1) % p
    top = [((j + p) % degree) for j in range(degree)]
    g = FiniteGroup.from_generators(
        degree, [Permutation(base), Permutation(top)], order_cap=order_cap
    )
    assert g.order == p**q * q
    return g


def direct_product(*factors: FiniteGroup, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Product on disjoint point sets; generators are the factor generators
    extended by fixed points, factor by factor."""
    if not factors:
        raise ValueError("direct_product needs at least one factor")
    degree = sum(f.degree for f in factors)
    gens = []
    offset = 0
    for f in factors:
        for g in f.generators:
            images = list(range(degree))
            for i, img in enumerate(g.images):
                images[offset + i] = offset + img
            gens.append(Permutation(images))
        offset += f.degree
    out = FiniteGroup.from_generators(degree, gens, order_cap=order_cap)
    expected = 1
    for f in factors:
        expected *= f.order
    assert out.order == expected
    return out


_CALL_RE = re.compile(r"^\s*([a-z_]+)\s*\((.*)\)\s*$", re.DOTALL)


def _split_args(body: str) -> list[str]:
    args, depth, cur = [], 0, []
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            args.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if cur and "".join(cur).strip():
        args.append("".join(cur))
    return [a.strip() for a in args]


def builtin_family(spec: str, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Construct a group from a family descriptor string."""
    m = _CALL_RE.match(spec)
    if not m:
        raise ParseError(f"malformed family descriptor {spec!r}")
    name, body = m.group(1), m.group(2)
    args = _split_args(body)
    if name == "direct_product":
        factors = [builtin_family(a, order_cap=order_cap) for a in args]
        return direct_product(*factors, order_cap=order_cap)
    try:
        nums = [int(a) for a in args]
    except ValueError:
        raise ParseError(f"non-integer argument in {spec!r}") from None
    if name == "cyclic" and len(nums) == 1:
        return cyclic(nums[0], order_cap)
    if name == "dihedral" and len(nums) == 1:
        return dihedral(nums[0], order_cap)
    if name == "symmetric" and len(nums) == 1:
        return symmetric(nums[0], order_cap)
    if name == "alternating" and len(nums) == 1:
        return alternating(nums[0], order_cap)
    if name == "wreath_cyclic" and len(nums) == 2:
        return wreath_cyclic(nums[0], nums[1], order_cap)
    raise ParseError(f"unknown family descriptor {spec!r}")
