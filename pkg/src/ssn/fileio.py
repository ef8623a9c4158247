"""Group (.grp) and partition (.sig) text files.

Group files: ``degree: <n>`` then one ``gen: <cycles>`` line per generator,
1-based disjoint cycle notation, ``#`` comments.  Partition files: one
``block: p1 p2 ...`` line per listed block; the remainder block is implicit.
"""

from __future__ import annotations

import re
from pathlib import Path

from .groups import DEFAULT_ORDER_CAP, FiniteGroup
from .numbers import is_prime
from .perm import ParseError, Permutation, parse_permutation
from .sigma import SigmaPartition


def _content_lines(path: Path) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(path.read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((lineno, line))
    return out


def load_group(path, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    path = Path(path)
    lines = _content_lines(path)
    if not lines:
        raise ParseError(f"{path}: empty group file")
    degree: int | None = None
    gens: list[Permutation] = []
    for lineno, line in lines:
        m = re.match(r"^(degree|gen)\s*:\s*(.*)$", line)
        if not m:
            raise ParseError(f"{path}:{lineno}: expected 'degree:' or 'gen:' line")
        kind, body = m.group(1), m.group(2).strip()
        if kind == "degree":
            if degree is not None:
                raise ParseError(f"{path}:{lineno}: duplicate degree line")
            try:
                degree = int(body)
            except ValueError:
                raise ParseError(f"{path}:{lineno}: bad degree {body!r}") from None
            if degree < 1:
                raise ParseError(f"{path}:{lineno}: degree must be positive")
        else:
            if degree is None:
                raise ParseError(f"{path}:{lineno}: gen before degree")
            try:
                gens.append(parse_permutation(body, degree))
            except ParseError as exc:
                raise ParseError(f"{path}:{lineno}: {exc}") from None
    if degree is None:
        raise ParseError(f"{path}: missing degree line")
    return FiniteGroup.from_generators(degree, gens, order_cap=order_cap)


def save_group(g: FiniteGroup, path, comment: str | None = None) -> None:
    path = Path(path)
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(f"degree: {g.degree}")
    for gen in g.generators:
        lines.append(f"gen: {gen.cycle_string()}")
    path.write_text("\n".join(lines) + "\n")


def load_partition(path) -> SigmaPartition:
    path = Path(path)
    blocks: list[frozenset[int]] = []
    seen: set[int] = set()
    for lineno, line in _content_lines(path):
        m = re.match(r"^block\s*:\s*(.*)$", line)
        if not m:
            raise ParseError(f"{path}:{lineno}: expected 'block:' line")
        entries = [e for e in re.split(r"[,\s]+", m.group(1).strip()) if e]
        if not entries:
            raise ParseError(f"{path}:{lineno}: empty block")
        primes = []
        for e in entries:
            try:
                p = int(e)
            except ValueError:
                raise ParseError(f"{path}:{lineno}: bad prime {e!r}") from None
            if not is_prime(p):
                raise ParseError(f"{path}:{lineno}: {p} is not prime")
            if p in seen:
                raise ParseError(f"{path}:{lineno}: prime {p} repeated across blocks")
            seen.add(p)
            primes.append(p)
        blocks.append(frozenset(primes))
    return SigmaPartition(tuple(blocks))


def save_partition(sigma: SigmaPartition, path, comment: str | None = None) -> None:
    path = Path(path)
    lines = []
    if comment:
        lines.append(f"# {comment}")
    for blk in sigma.blocks:
        lines.append("block: " + " ".join(str(p) for p in sorted(blk)))
    path.write_text("\n".join(lines) + ("\n" if lines else ""))
