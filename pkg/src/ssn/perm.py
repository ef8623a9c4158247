"""Permutations on {0..degree-1} with 1-based disjoint-cycle text I/O.

Composition is left-to-right: ``(a * b)(x) == b(a(x))`` (apply ``a`` first).
"""

from __future__ import annotations

import re
from math import lcm


class ParseError(ValueError):
    """Malformed cycle notation or group/partition file."""


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class Permutation:
    """Immutable bijection on {0..degree-1}, stored as the tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"images {images} are not a bijection")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree < 1:
            raise ValueError("degree must be positive")
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, text: str, degree: int) -> "Permutation":
        """Parse whitespace-tolerant disjoint cycle notation with 1-based points.

        "()" (or only whitespace inside parens) denotes the identity.  Points
        appearing in no cycle are fixed.
        """
        if degree < 1:
            raise ParseError("degree must be positive")
        stripped = text.strip()
        if not stripped:
            raise ParseError("empty permutation text")
        leftover = _CYCLE_RE.sub("", stripped).strip()
        if leftover:
            raise ParseError(f"malformed cycle notation {text!r}")
        images = list(range(degree))
        seen: set[int] = set()
        for body in _CYCLE_RE.findall(stripped):
            points = [p for p in re.split(r"[,\s]+", body.strip()) if p]
            if not points:
                continue  # "()" piece: identity contribution
            try:
                pts = [int(p) for p in points]
            except ValueError:
                raise ParseError(f"non-integer point in cycle ({body})") from None
            for p in pts:
                if not 1 <= p <= degree:
                    raise ParseError(f"point {p} out of range 1..{degree}")
                if p - 1 in seen:
                    raise ParseError(f"point {p} repeated across cycles")
                seen.add(p - 1)
            for a, b in zip(pts, pts[1:] + pts[:1]):
                images[a - 1] = b - 1
        return cls(images)

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Nontrivial cycles (0-based), each starting at its least point."""
        out = []
        seen = set()
        for start in range(self.degree):
            if start in seen or self.images[start] == start:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self.images[start]
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self.images[nxt]
            out.append(tuple(cyc))
        return tuple(out)

    def cycle_string(self) -> str:
        """1-based disjoint cycle notation; identity prints as "()"."""
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(p + 1) for p in c) + ")" for c in cycs)

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles())) if self.cycles() else 1

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, img in enumerate(self.images):
            inv[img] = i
        return Permutation(inv)

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return Permutation(other.images[x] for x in self.images)

    def __pow__(self, n: int) -> "Permutation":
        if n < 0:
            return self.inverse() ** (-n)
        acc = Permutation.identity(self.degree)
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_string()!r}, degree={self.degree})"


def parse_permutation(text: str, degree: int) -> Permutation:
    return Permutation.from_cycles(text, degree)
