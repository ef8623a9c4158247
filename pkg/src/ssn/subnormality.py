"""Chain-based decision procedures: subnormality with defect, sigma-normality,
the fast sigma-subnormality recursion and its definitional lattice oracle,
strict block-tagged chains, and embedded series.

A chain step tag is either None (a plain normal link) or a BlockId b (the link
ambient over the core of the smaller term is a b-group).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .groups import (
    FiniteGroup,
    Subgroup,
    SubgroupLattice,
    _check_contained,
    all_subgroups,
    is_normal_in,
    join,
    normal_closure,
    normal_core,
    normals_in,
    prime_set,
    product_bits,
)
from .numbers import prime_factors
from .residuals import block_residual
from .sigma import BlockId, SigmaPartition

Step = Optional[BlockId]

# Test-only corruption hook: when set, every public sigma-normality answer is
# passed through it (and memoization is bypassed).  Used to prove the theorem
# suites are not vacuous.
_SIGMA_NORMAL_HOOK: Callable[[Subgroup, Subgroup, SigmaPartition, bool], bool] | None = None


def set_sigma_normal_hook(hook) -> None:
    global _SIGMA_NORMAL_HOOK
    _SIGMA_NORMAL_HOOK = hook


def step_label(step: Step) -> str:
    return "normal" if step is None else f"block:{step}"


def parse_step_label(label: str) -> Step:
    if label == "normal":
        return None
    if label.startswith("block:"):
        return BlockId.parse(label.split(":", 1)[1])
    raise ValueError(f"unknown step label {label!r}")


@dataclass(frozen=True)
class SigmaChain:
    """Witness chain X = terms[0] <= ... <= terms[-1], one tag per link."""

    terms: tuple[Subgroup, ...]
    steps: tuple[Step, ...]

    def __post_init__(self):
        assert len(self.terms) == len(self.steps) + 1

    @property
    def length(self) -> int:
        return len(self.steps)

    def validate(self, sigma: SigmaPartition) -> None:
        """Re-check every link independently of how the chain was found."""
        for lower, upper, step in zip(self.terms, self.terms[1:], self.steps):
            if not (upper.contains(lower) and lower.order < upper.order):
                raise ValueError("chain terms must ascend strictly")
            core = normal_core(upper, lower)
            if step is None:
                if core.bits != lower.bits:
                    raise ValueError("plain-normal link fails normality")
            else:
                ps = prime_factors(upper.order // core.order)
                if not all(sigma.block_of(p) == step for p in ps):
                    raise ValueError("block-normal link has off-block core index")

    def describe(self) -> list[dict]:
        return [
            {"gens": list(t.generator_strings()), "step": step_label(s)}
            for t, s in zip(self.terms[1:], self.steps)
        ]


@dataclass(frozen=True)
class EmbeddingWitness:
    """Normal series with primary factors, blockwise tagged."""

    terms: tuple[Subgroup, ...]
    blocks: tuple[BlockId, ...]
    normal_in_ambient: bool

    def validate(self, sigma: SigmaPartition) -> None:
        top = self.terms[-1]
        for lower, upper, b in zip(self.terms, self.terms[1:], self.blocks):
            if not (upper.contains(lower) and lower.order < upper.order):
                raise ValueError("witness terms must ascend strictly")
            if not is_normal_in(lower, upper):
                raise ValueError("witness link is not normal")
            if self.normal_in_ambient and not is_normal_in(lower, top):
                raise ValueError("witness term is not normal in the ambient group")
            ps = prime_factors(upper.order // lower.order)
            if not all(sigma.block_of(p) == b for p in ps):
                raise ValueError("witness factor is not a block-primary group")


def is_subnormal(x: Subgroup, y: Subgroup) -> int | None:
    """Defect of x in y via the normal closure series, or None."""
    _check_contained(x, y)
    key = ("subnormal", x.bits, y.bits)
    cached = y.parent._cache.get(key, "?")
    if cached != "?":
        return cached
    defect = 0
    cur = y
    while cur.bits != x.bits:
        nxt = normal_closure(cur, x)
        if nxt.bits == cur.bits:
            defect = None
            break
        cur = nxt
        defect += 1
    y.parent._cache[key] = defect
    return defect


def _sigma_normal_tag(x: Subgroup, y: Subgroup, sigma: SigmaPartition) -> tuple[bool, Step]:
    """(is sigma-normal, witness tag).  Plain normality wins the tag."""
    core = normal_core(y, x)
    if core.bits == x.bits:
        return True, None
    ps = prime_factors(y.order // core.order)
    blocks = sigma.blocks_meeting(ps)
    if len(blocks) == 1:
        return True, blocks[0]
    return False, None


def is_sigma_normal(x: Subgroup, y: Subgroup, sigma: SigmaPartition) -> bool:
    """x normal in y, or y over the core of x is a one-block group."""
    _check_contained(x, y)
    if _SIGMA_NORMAL_HOOK is not None:
        return _SIGMA_NORMAL_HOOK(x, y, sigma, _sigma_normal_tag(x, y, sigma)[0])
    key = ("signormal", sigma, x.bits, y.bits)
    cached = y.parent._cache.get(key)
    if cached is None:
        cached = _sigma_normal_tag(x, y, sigma)[0]
        y.parent._cache[key] = cached
    return cached


def sigma_subnormal_fast(
    x: Subgroup, y: Subgroup, sigma: SigmaPartition
) -> SigmaChain | None:
    """Canonical recursion deciding sigma-subnormality without the lattice.

    Success cases: x == y; x sigma-normal in y.  Otherwise recurse into the
    proper candidates x^y and <x, O^b(y)> for each block b meeting the primes
    of y: any witness chain factors through one of them, because
    sigma-subnormality passes to intermediate subgroups in finite groups.  The
    definitional lattice oracle guards this reduction in the test suites.
    """
    _check_contained(x, y)
    parent = y.parent
    memo_key = ("fastchain", sigma, x.bits)
    memo = parent._cache.setdefault(memo_key, {})

    def rec(yb: int) -> list[tuple[int, Step]] | None:
        if yb == x.bits:
            return []
        if yb in memo:
            return memo[yb]
        ysub = Subgroup(parent, yb)
        ok, tag = _sigma_normal_tag(x, ysub, sigma)
        if ok:
            memo[yb] = [(yb, tag)]
            return memo[yb]
        candidates: list[tuple[int, Step]] = []
        ncl = normal_closure(ysub, x)
        if ncl.bits != yb:
            candidates.append((ncl.bits, None))
        for b in sigma.blocks_meeting(prime_set(ysub)):
            m = join(x, block_residual(ysub, sigma, b))
            if m.bits != yb and all(c[0] != m.bits for c in candidates):
                candidates.append((m.bits, b))
        result = None
        for mb, tag in candidates:
            sub = rec(mb)
            if sub is not None:
                result = sub + [(yb, tag)]
                break
        memo[yb] = result
        return result

    raw = rec(y.bits)
    if raw is None:
        return None
    chain = SigmaChain(
        terms=(x,) + tuple(Subgroup(parent, b) for b, _ in raw),
        steps=tuple(tag for _, tag in raw),
    )
    chain.validate(sigma)
    return chain


def _nodes_between(
    lattice: SubgroupLattice, x: Subgroup, y: Subgroup
) -> list[int]:
    """Lattice node ids M with x <= M <= y, in canonical order."""
    return [
        i
        for i, node in enumerate(lattice.nodes)
        if node.bits & y.bits == node.bits and x.bits & node.bits == x.bits
    ]


def sigma_subnormal_oracle(
    x: Subgroup,
    y: Subgroup,
    sigma: SigmaPartition,
    lattice: SubgroupLattice | None = None,
) -> tuple[SigmaChain, int] | None:
    """Breadth-first search over the full subgroup lattice, edges given by
    sigma-normality.  Returns a shortest witness chain and its length (the
    sigma-defect).  Ground truth for the fast recursion."""
    _check_contained(x, y)
    parent = y.parent
    lat = lattice if lattice is not None else all_subgroups(parent)
    nodes = _nodes_between(lat, x, y)
    start = lat.node_of_bits(x.bits)
    target = lat.node_of_bits(y.bits)
    if start == target:
        chain = SigmaChain((x,), ())
        return chain, 0
    prev: dict[int, int] = {start: -1}
    queue = [start]
    found = False
    while queue and not found:
        nxt: list[int] = []
        for u in queue:
            usub = lat.nodes[u]
            for v in nodes:
                if v in prev or v == u:
                    continue
                vsub = lat.nodes[v]
                if not vsub.contains(usub) or vsub.bits == usub.bits:
                    continue
                if is_sigma_normal(usub, vsub, sigma):
                    prev[v] = u
                    if v == target:
                        found = True
                        break
                    nxt.append(v)
            if found:
                break
        queue = nxt
    if not found:
        return None
    path = [target]
    while path[-1] != start:
        path.append(prev[path[-1]])
    path.reverse()
    terms = tuple(lat.nodes[i] for i in path)
    steps = tuple(
        _sigma_normal_tag(a, b, sigma)[1] for a, b in zip(terms, terms[1:])
    )
    chain = SigmaChain(terms, steps)
    if _SIGMA_NORMAL_HOOK is None:
        chain.validate(sigma)
    return chain, chain.length


def sigma_defect(
    x: Subgroup, y: Subgroup, sigma: SigmaPartition, lattice: SubgroupLattice | None = None
) -> int | None:
    found = sigma_subnormal_oracle(x, y, sigma, lattice)
    return None if found is None else found[1]


def is_strictly_sigma_subnormal(
    x: Subgroup,
    y: Subgroup,
    sigma: SigmaPartition,
    block_seq: tuple[BlockId, ...],
    lattice: SubgroupLattice | None = None,
) -> bool:
    """A strictly ascending chain whose i-th link is block-normal with exactly
    block_seq[i]; no plain-normal links allowed."""
    _check_contained(x, y)
    block_seq = tuple(block_seq)
    if x.bits == y.bits:
        return not block_seq
    if not block_seq:
        return False
    lat = lattice if lattice is not None else all_subgroups(y.parent)
    nodes = _nodes_between(lat, x, y)
    target = y.bits
    memo: dict[tuple[int, int], bool] = {}

    def block_link(a: Subgroup, b: Subgroup, blk: BlockId) -> bool:
        core = normal_core(b, a)
        ps = prime_factors(b.order // core.order)
        return all(sigma.block_of(p) == blk for p in ps)

    def rec(ub: int, pos: int) -> bool:
        if pos == len(block_seq):
            return ub == target
        key = (ub, pos)
        if key in memo:
            return memo[key]
        usub = Subgroup(y.parent, ub)
        out = False
        for v in nodes:
            vsub = lat.nodes[v]
            if vsub.bits == ub or not vsub.contains(usub):
                continue
            if block_link(usub, vsub, block_seq[pos]) and rec(vsub.bits, pos + 1):
                out = True
                break
        memo[key] = out
        return out

    return rec(x.bits, 0)


def is_sigma_embedded(
    x: Subgroup,
    y: Subgroup,
    sigma: SigmaPartition,
    normal_in_ambient: bool = False,
    lattice: SubgroupLattice | None = None,
) -> EmbeddingWitness | None:
    """Chain of genuinely normal links with block-primary factors, or None.

    With ``normal_in_ambient`` every term must be normal in y; the search then
    greedily adjoins, per block, the largest normal-in-y extension with a
    primary factor, exploring block orders with memoization (maximal
    extensions dominate any normally embedded chain, so this is complete).
    """
    _check_contained(x, y)
    parent = y.parent
    if x.bits == y.bits:
        return EmbeddingWitness((x,), (), normal_in_ambient)

    relevant = sigma.blocks_meeting(prime_set(y))

    if normal_in_ambient:
        if not is_normal_in(x, y):
            return None
        ynormals = normals_in(y)

        def max_extension(mb: int, b: BlockId) -> int:
            acc = mb
            for n in ynormals:
                if n.bits & mb == mb and all(
                    sigma.block_of(p) == b
                    for p in prime_factors(n.order // mb.bit_count())
                ):
                    acc = product_bits(Subgroup(parent, acc), n)
            return acc

        seen: set[int] = set()
        path: list[tuple[int, BlockId]] = []

        def dfs(mb: int) -> bool:
            if mb == y.bits:
                return True
            if mb in seen:
                return False
            seen.add(mb)
            for b in relevant:
                ext = max_extension(mb, b)
                if ext != mb:
                    path.append((ext, b))
                    if dfs(ext):
                        return True
                    path.pop()
            return False

        if not dfs(x.bits):
            return None
        terms = (x,) + tuple(Subgroup(parent, mb) for mb, _ in path)
        witness = EmbeddingWitness(terms, tuple(b for _, b in path), True)
        witness.validate(sigma)
        return witness

    lat = lattice if lattice is not None else all_subgroups(parent)
    nodes = _nodes_between(lat, x, y)
    memo: dict[int, list[tuple[int, BlockId]] | None] = {}

    def rec(ub: int) -> list[tuple[int, BlockId]] | None:
        if ub == y.bits:
            return []
        if ub in memo:
            return memo[ub]
        usub = Subgroup(parent, ub)
        result = None
        for v in nodes:
            vsub = lat.nodes[v]
            if vsub.bits == ub or not vsub.contains(usub):
                continue
            if not is_normal_in(usub, vsub):
                continue
            ps = prime_factors(vsub.order // usub.order)
            blocks = sigma.blocks_meeting(ps)
            if len(blocks) != 1:
                continue
            tail = rec(vsub.bits)
            if tail is not None:
                result = [(vsub.bits, blocks[0])] + tail
                break
        memo[ub] = result
        return result

    raw = rec(x.bits)
    if raw is None:
        return None
    terms = (x,) + tuple(Subgroup(parent, b) for b, _ in raw)
    witness = EmbeddingWitness(terms, tuple(b for _, b in raw), False)
    witness.validate(sigma)
    return witness


def residual_subnormality_check(h: Subgroup, g: FiniteGroup, sigma: SigmaPartition) -> bool:
    """For sigma-subnormal h: is the sigma-residual of h subnormal in g?"""
    from .residuals import sigma_residual

    full = g.full()
    if sigma_subnormal_fast(h, full, sigma) is None:
        raise ValueError("subject is not sigma-subnormal; check does not apply")
    return is_subnormal(sigma_residual(h, sigma), full) is not None
