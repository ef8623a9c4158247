"""Finite permutation groups with fully enumerated elements and bitset subgroups.

A FiniteGroup stores every element, canonically sorted by image tuple (so the
identity always has index 0), plus a lazily built Cayley table.  Subgroups are
plain bitsets over the parent's element indices, which makes equality, hashing
and memoization exact.  Everything here is immutable after construction and a
pure function of its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm

import numpy as np

from . import kernels
from .numbers import prime_factors
from .perm import Permutation

DEFAULT_ORDER_CAP = 5040
DEFAULT_LATTICE_CAP = 600


class CapExceededError(RuntimeError):
    """A configured order/lattice cap was exceeded; carries the partial count."""

    def __init__(self, message: str, partial_count: int | None = None):
        super().__init__(message)
        self.partial_count = partial_count


def bits_from_bools(mask: np.ndarray) -> int:
    return int.from_bytes(np.packbits(mask, bitorder="little").tobytes(), "little")


def bools_from_bits(bits: int, n: int) -> np.ndarray:
    raw = np.frombuffer(bits.to_bytes((n + 7) // 8, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:n].view(np.bool_)


def indices_from_bits(bits: int, n: int) -> np.ndarray:
    return np.flatnonzero(bools_from_bits(bits, n)).astype(np.int32)


def bits_from_indices(idx) -> int:
    bits = 0
    for i in idx:
        bits |= 1 << int(i)
    return bits


class FiniteGroup:
    """Degree, generators, and the full canonically indexed element list."""

    __slots__ = ("degree", "generators", "elements", "order", "_index", "_images", "_cache")

    def __init__(self, degree: int, generators: tuple[Permutation, ...], elements: tuple[Permutation, ...]):
        self.degree = degree
        self.generators = generators
        self.elements = elements
        self.order = len(elements)
        self._index = {p.images: i for i, p in enumerate(elements)}
        self._images = np.array([p.images for p in elements], dtype=np.int32)
        self._cache: dict = {}
        assert elements[0] == Permutation.identity(degree), "identity must sort first"

    @classmethod
    def from_generators(
        cls, degree: int, generators, order_cap: int = DEFAULT_ORDER_CAP
    ) -> "FiniteGroup":
        """Enumerate the closure of the generators under composition."""
        if degree < 1:
            raise ValueError("degree must be positive")
        gens = tuple(generators)
        for g in gens:
            if g.degree != degree:
                raise ValueError(f"generator degree {g.degree} != {degree}")
        ident = tuple(range(degree))
        seen: set[tuple[int, ...]] = {ident}
        frontier = [ident]
        gen_images = [g.images for g in gens]
        while frontier:
            new_frontier = []
            for a in frontier:
                for g in gen_images:
                    c = tuple(g[x] for x in a)
                    if c not in seen:
                        if len(seen) >= order_cap:
                            raise CapExceededError(
                                f"group order exceeds cap {order_cap} "
                                f"(at least {len(seen) + 1} elements)",
                                partial_count=len(seen) + 1,
                            )
                        seen.add(c)
                        new_frontier.append(c)
            frontier = new_frontier
        elements = tuple(Permutation(t) for t in sorted(seen))
        return cls(degree, gens, elements)

    def index_of(self, p: Permutation) -> int:
        try:
            return self._index[p.images]
        except KeyError:
            raise ValueError(f"{p!r} is not an element of this group") from None

    def index_of_images(self, images: tuple[int, ...]) -> int:
        return self._index[images]

    @property
    def table(self) -> np.ndarray:
        """Cayley table: table[i, j] = index(e_i * e_j), composition left-to-right."""
        tab = self._cache.get("table")
        if tab is None:
            tab = self._build_table()
            self._cache["table"] = tab
        return tab

    def _build_table(self) -> np.ndarray:
        n, d = self.order, self.degree
        E = self._images
        void = np.ascontiguousarray(E).view([("", E.dtype)] * d).ravel()
        tab = np.empty((n, n), dtype=np.int32)
        for i in range(n):
            rows = np.ascontiguousarray(E[:, E[i]])
            tab[i] = np.searchsorted(void, rows.view([("", E.dtype)] * d).ravel())
        return tab

    @property
    def inverses(self) -> np.ndarray:
        inv = self._cache.get("inv")
        if inv is None:
            E = self._images
            d = self.degree
            inv_rows = np.ascontiguousarray(np.argsort(E, axis=1).astype(np.int32))
            void = np.ascontiguousarray(E).view([("", E.dtype)] * d).ravel()
            inv = np.searchsorted(
                void, inv_rows.view([("", E.dtype)] * d).ravel()
            ).astype(np.int32)
            self._cache["inv"] = inv
        return inv

    @property
    def element_orders(self) -> np.ndarray:
        orders = self._cache.get("orders")
        if orders is None:
            orders = np.array(
                [lcm(*(len(c) for c in p.cycles())) if p.cycles() else 1 for p in self.elements],
                dtype=np.int64,
            )
            self._cache["orders"] = orders
        return orders

    def full(self) -> "Subgroup":
        return Subgroup(self, (1 << self.order) - 1)

    def trivial(self) -> "Subgroup":
        return Subgroup(self, 1)

    def subgroup_of_indices(self, idx) -> "Subgroup":
        return Subgroup(self, bits_from_indices(idx))

    def __repr__(self) -> str:
        return f"<FiniteGroup degree={self.degree} order={self.order}>"


def group_from_generators(degree: int, gens, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    return FiniteGroup.from_generators(degree, gens, order_cap=order_cap)


class Subgroup:
    """A member bitset inside a fixed parent group."""

    __slots__ = ("parent", "bits", "_idx")

    def __init__(self, parent: FiniteGroup, bits: int):
        if not bits & 1:
            raise ValueError("subgroup must contain the identity (bit 0)")
        if bits >> parent.order:
            raise ValueError("member bits exceed parent order")
        self.parent = parent
        self.bits = bits
        self._idx: np.ndarray | None = None

    @property
    def order(self) -> int:
        return self.bits.bit_count()

    def indices(self) -> np.ndarray:
        if self._idx is None:
            self._idx = indices_from_bits(self.bits, self.parent.order)
        return self._idx

    def bools(self) -> np.ndarray:
        return bools_from_bits(self.bits, self.parent.order)

    def perms(self) -> tuple[Permutation, ...]:
        return tuple(self.parent.elements[int(i)] for i in self.indices())

    def contains(self, other: "Subgroup") -> bool:
        return other.bits & self.bits == other.bits

    def contains_index(self, i: int) -> bool:
        return bool(self.bits >> i & 1)

    def is_full(self) -> bool:
        return self.order == self.parent.order

    def generating_perms(self) -> tuple[Permutation, ...]:
        """Deterministic small generating sequence (greedy over element index)."""
        cached = self.parent._cache.get(("gens", self.bits))
        if cached is not None:
            return cached
        table = self.parent.table
        gens: list[int] = []
        cur = 1
        for i in self.indices():
            if not cur >> int(i) & 1:
                gens.append(int(i))
                cur = bits_from_bools(kernels.closure(table, np.array(gens, dtype=np.int32)))
                if cur == self.bits:
                    break
        out = tuple(self.parent.elements[i] for i in gens)
        self.parent._cache[("gens", self.bits)] = out
        return out

    def generator_strings(self) -> tuple[str, ...]:
        return tuple(p.cycle_string() for p in self.generating_perms())

    def as_group(self) -> tuple[FiniteGroup, np.ndarray]:
        """Standalone FiniteGroup of the members plus sub-index -> parent-index map."""
        if self.is_full():
            return self.parent, np.arange(self.parent.order, dtype=np.int32)
        cached = self.parent._cache.get(("asgroup", self.bits))
        if cached is None:
            idx = self.indices()
            elements = tuple(self.parent.elements[int(i)] for i in idx)
            sub = FiniteGroup(self.parent.degree, self.generating_perms(), elements)
            cached = (sub, idx.copy())
            self.parent._cache[("asgroup", self.bits)] = cached
        return cached

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subgroup)
            and other.parent is self.parent
            and other.bits == self.bits
        )

    def __hash__(self) -> int:
        return hash((id(self.parent), self.bits))

    def __repr__(self) -> str:
        return f"<Subgroup order={self.order} of {self.parent!r}>"


def _check_same_parent(x: Subgroup, y: Subgroup) -> None:
    if x.parent is not y.parent:
        raise ValueError("subgroups have different parent groups")


def _check_contained(inner: Subgroup, outer: Subgroup) -> None:
    _check_same_parent(inner, outer)
    if not outer.contains(inner):
        raise ValueError("containment violated: first subgroup not inside second")


def subgroup_generated(parent: FiniteGroup, seed) -> Subgroup:
    """Smallest subgroup containing the seed (permutations or element indices)."""
    idx = []
    for s in seed:
        idx.append(parent.index_of(s) if isinstance(s, Permutation) else int(s))
    key = ("closure", bits_from_indices(idx))
    bits = parent._cache.get(key)
    if bits is None:
        bits = bits_from_bools(kernels.closure(parent.table, np.array(idx, dtype=np.int32)))
        parent._cache[key] = bits
    return Subgroup(parent, bits)


def join(x: Subgroup, y: Subgroup) -> Subgroup:
    """Subgroup generated by the union of two subgroups of one parent."""
    _check_same_parent(x, y)
    if x.contains(y):
        return x
    if y.contains(x):
        return y
    parent = x.parent
    a, b = sorted((x.bits, y.bits))
    key = ("join", a, b)
    bits = parent._cache.get(key)
    if bits is None:
        seed = indices_from_bits(a | b, parent.order)
        bits = bits_from_bools(kernels.closure(parent.table, seed))
        parent._cache[key] = bits
    return Subgroup(parent, bits)


def intersection(x: Subgroup, y: Subgroup) -> Subgroup:
    _check_same_parent(x, y)
    return Subgroup(x.parent, x.bits & y.bits)


def product_bits(x: Subgroup, y: Subgroup) -> int:
    """Bitset of the product set x*y (not necessarily a subgroup)."""
    _check_same_parent(x, y)
    parent = x.parent
    key = ("prod", x.bits, y.bits)
    bits = parent._cache.get(key)
    if bits is None:
        bits = bits_from_bools(kernels.product_set(parent.table, x.indices(), y.indices()))
        parent._cache[key] = bits
    return bits


def normal_closure(ambient: Subgroup, x: Subgroup) -> Subgroup:
    """Smallest subgroup of ``ambient`` containing ``x`` closed under conjugation."""
    _check_contained(x, ambient)
    parent = ambient.parent
    key = ("ncl", x.bits, ambient.bits)
    bits = parent._cache.get(key)
    if bits is None:
        conj = kernels.conjugate_expand(
            parent.table, parent.inverses, x.indices(), ambient.indices()
        )
        bits = bits_from_bools(
            kernels.closure(parent.table, np.flatnonzero(conj).astype(np.int32))
        )
        parent._cache[key] = bits
    return Subgroup(parent, bits)


def normal_core(ambient: Subgroup, x: Subgroup) -> Subgroup:
    """Intersection of all ambient-conjugates of x: largest normal-in-ambient part."""
    _check_contained(x, ambient)
    parent = ambient.parent
    key = ("core", x.bits, ambient.bits)
    bits = parent._cache.get(key)
    if bits is None:
        bits = bits_from_bools(
            kernels.core_members(parent.table, parent.inverses, x.bools(), ambient.indices())
        )
        parent._cache[key] = bits
    return Subgroup(parent, bits)


def is_normal_in(x: Subgroup, ambient: Subgroup) -> bool:
    return normal_core(ambient, x).bits == x.bits


def derived_subgroup(x: Subgroup) -> Subgroup:
    """Subgroup generated by all commutators a^-1 b^-1 a b of members."""
    parent = x.parent
    key = ("derived", x.bits)
    bits = parent._cache.get(key)
    if bits is None:
        table, inv = parent.table, parent.inverses
        idx = x.indices()
        t1 = table[np.ix_(inv[idx], inv[idx])]
        t2 = table[np.ix_(idx, idx)]
        comms = np.unique(table[t1, t2])
        bits = bits_from_bools(kernels.closure(table, comms.astype(np.int32)))
        parent._cache[key] = bits
    return Subgroup(parent, bits)


def is_perfect(x: Subgroup) -> bool:
    return derived_subgroup(x).bits == x.bits


def is_soluble(x: Subgroup) -> bool:
    key = ("soluble", x.bits)
    cached = x.parent._cache.get(key)
    if cached is None:
        cur = x
        while True:
            nxt = derived_subgroup(cur)
            if nxt.bits == cur.bits:
                cached = cur.order == 1
                break
            cur = nxt
        x.parent._cache[key] = cached
    return cached


def normals_in(ambient: Subgroup) -> tuple[Subgroup, ...]:
    """All subgroups normal in ``ambient``.

    Built by closing the normal closures of single elements under pairwise
    set product (products of normal subgroups are subgroups).
    """
    parent = ambient.parent
    key = ("normals", ambient.bits)
    cached = parent._cache.get(key)
    if cached is None:
        table, inv = parent.table, parent.inverses
        amb_idx = ambient.indices()
        known: set[int] = {1}
        for i in amb_idx:
            conj = kernels.conjugate_expand(
                table, inv, np.array([i], dtype=np.int32), amb_idx
            )
            cl = kernels.closure(table, np.flatnonzero(conj).astype(np.int32))
            known.add(bits_from_bools(cl))
        frontier = sorted(known)
        while frontier:
            fresh = []
            for a in frontier:
                for b in sorted(known):
                    if a | b == a or a | b == b:
                        continue
                    p = bits_from_bools(
                        kernels.product_set(
                            table,
                            indices_from_bits(a, parent.order),
                            indices_from_bits(b, parent.order),
                        )
                    )
                    if p not in known:
                        known.add(p)
                        fresh.append(p)
            frontier = fresh
        cached = tuple(
            Subgroup(parent, b)
            for b in sorted(known, key=lambda b: (b.bit_count(), b))
        )
        parent._cache[key] = cached
    return cached


def normal_subgroups(g: FiniteGroup) -> tuple[Subgroup, ...]:
    return normals_in(g.full())


def minimal_normal_subgroups(ambient: Subgroup) -> tuple[Subgroup, ...]:
    ns = [n for n in normals_in(ambient) if n.order > 1]
    return tuple(
        n for n in ns if not any(m.order < n.order and n.contains(m) for m in ns)
    )


@dataclass(frozen=True)
class SubgroupLattice:
    """Every subgroup of the parent, deduplicated and canonically ordered."""

    parent: FiniteGroup
    nodes: tuple[Subgroup, ...]
    cyclic: tuple[int, ...]  # node indices of the cyclic subgroups
    _by_bits: dict = field(repr=False, hash=False, compare=False, default_factory=dict)

    def __post_init__(self):
        self._by_bits.update({s.bits: i for i, s in enumerate(self.nodes)})

    def node_of(self, sub: Subgroup) -> int:
        return self._by_bits[sub.bits]

    def node_of_bits(self, bits: int) -> int:
        return self._by_bits[bits]

    def leq(self, i: int, j: int) -> bool:
        a, b = self.nodes[i].bits, self.nodes[j].bits
        return a & b == a

    def join_index(self, i: int, j: int) -> int:
        return self._by_bits[join(self.nodes[i], self.nodes[j]).bits]

    def meet_index(self, i: int, j: int) -> int:
        return self._by_bits[self.nodes[i].bits & self.nodes[j].bits]

    def __len__(self) -> int:
        return len(self.nodes)


def all_subgroups(g: FiniteGroup, lattice_cap: int = DEFAULT_LATTICE_CAP) -> SubgroupLattice:
    """Close the cyclic subgroups under pairwise join to a fixpoint."""
    if g.order > lattice_cap:
        raise CapExceededError(
            f"group order {g.order} exceeds lattice cap {lattice_cap}"
        )
    cached = g._cache.get("lattice")
    if cached is not None:
        return cached
    table = g.table
    cyclic_bits: set[int] = {1}
    for i in range(g.order):
        bits = 1
        a = i
        while a != 0:
            bits |= 1 << a
            a = int(table[a, i])
        cyclic_bits.add(bits)
    known = set(cyclic_bits)
    frontier = sorted(known)
    while frontier:
        fresh = []
        for a in frontier:
            for b in sorted(known):
                if a | b == a or a | b == b:
                    continue
                j = join(Subgroup(g, a), Subgroup(g, b)).bits
                if j not in known:
                    known.add(j)
                    fresh.append(j)
        frontier = fresh
    ordered = sorted(known, key=lambda b: (b.bit_count(), b))
    nodes = tuple(Subgroup(g, b) for b in ordered)
    cyclic = tuple(i for i, b in enumerate(ordered) if b in cyclic_bits)
    lattice = SubgroupLattice(g, nodes, cyclic)
    g._cache["lattice"] = lattice
    return lattice


def quotient_homomorphism(g: FiniteGroup, n: Subgroup) -> tuple[FiniteGroup, np.ndarray]:
    """Quotient by a normal subgroup via the right-coset action, plus the
    element-index homomorphism array (parent index -> quotient index)."""
    if n.parent is not g:
        raise ValueError("subgroup belongs to a different group")
    if not is_normal_in(n, g.full()):
        raise ValueError("subgroup is not normal; quotient undefined")
    cached = g._cache.get(("quot", n.bits))
    if cached is not None:
        return cached
    table = g.table
    n_idx = n.indices()
    label = np.full(g.order, -1, dtype=np.int32)
    reps = []
    for i in range(g.order):
        if label[i] < 0:
            label[table[n_idx, i]] = len(reps)
            reps.append(i)
    m = len(reps)
    reps_arr = np.array(reps, dtype=np.int32)

    def coset_perm(i: int) -> Permutation:
        return Permutation(int(label[t]) for t in table[reps_arr, i])

    gen_perms = [coset_perm(g.index_of(p)) for p in g.generators]
    q = FiniteGroup.from_generators(max(m, 1), gen_perms or [Permutation.identity(m)])
    assert q.order * n.order == g.order, "coset action must be faithful"
    hom = np.array([q.index_of(coset_perm(i)) for i in range(g.order)], dtype=np.int32)
    cached = (q, hom)
    g._cache[("quot", n.bits)] = cached
    return cached


def quotient_group(g: FiniteGroup, n: Subgroup) -> FiniteGroup:
    return quotient_homomorphism(g, n)[0]


def prime_set(x: Subgroup | FiniteGroup) -> frozenset[int]:
    """Primes dividing the order of some element (== primes dividing |X|)."""
    sub = x.full() if isinstance(x, FiniteGroup) else x
    key = ("primes", sub.bits)
    cached = sub.parent._cache.get(key)
    if cached is None:
        element_side = frozenset(
            p
            for o in np.unique(sub.parent.element_orders[sub.indices()])
            for p in prime_factors(int(o))
        )
        order_side = prime_factors(sub.order)
        assert element_side == order_side, "Cauchy cross-check failed"
        cached = order_side
        sub.parent._cache[key] = cached
    return cached
