"""Corpora, parallel suite execution, and machine-readable reports.

A corpus names groups (builtin family descriptors or .grp files) and
partitions; verify runs every requested suite on every (group, partition)
pair.  Verdict streams are sorted, so reports do not depend on the worker
count; the per-line elapsed_ms field is the one timing-dependent value and is
dropped by the canonical serialization used for determinism comparisons.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .families import builtin_family
from .fileio import load_group, load_partition
from .groups import (
    DEFAULT_LATTICE_CAP,
    DEFAULT_ORDER_CAP,
    CapExceededError,
    FiniteGroup,
)
from .sigma import SigmaPartition
from .suites import DEFAULT_SUITES, SKIPPED, SuiteContext, Verdict, replay_check, run_suite


@dataclass(frozen=True)
class CorpusSpec:
    groups: tuple[tuple[str, str], ...]  # (name, family descriptor or .grp path)
    partitions: tuple[tuple[str, SigmaPartition], ...]
    suites: tuple[str, ...] = DEFAULT_SUITES
    order_cap: int = DEFAULT_ORDER_CAP
    lattice_cap: int = DEFAULT_LATTICE_CAP
    jobs: int = 1

    def __post_init__(self):
        names = [n for n, _ in self.groups] + [n for n, _ in self.partitions]
        if len(set(names)) != len(names):
            raise ValueError("corpus names must be unique")
        if self.order_cap <= 0 or self.lattice_cap <= 0 or self.jobs <= 0:
            raise ValueError("caps and job count must be positive")


DEFAULT_PARTITIONS: tuple[tuple[str, SigmaPartition], ...] = (
    ("split23", SigmaPartition.of({2}, {3})),
    ("merged23", SigmaPartition.of({2, 3})),
    ("mix25_3", SigmaPartition.of({2, 5}, {3})),
    ("allprimes", SigmaPartition.of()),
)

DEFAULT_GROUPS: tuple[str, ...] = (
    "cyclic(2)",
    "cyclic(3)",
    "cyclic(4)",
    "cyclic(6)",
    "dihedral(3)",
    "dihedral(4)",
    "symmetric(3)",
    "symmetric(4)",
    "alternating(4)",
    "alternating(5)",
    "wreath_cyclic(2,3)",
    "wreath_cyclic(3,2)",
    "direct_product(cyclic(2),cyclic(2))",
    "direct_product(symmetric(3),cyclic(2))",
    "direct_product(symmetric(4),cyclic(5))",
)


def default_corpus_spec(
    suites: tuple[str, ...] | None = None, jobs: int = 1
) -> CorpusSpec:
    return CorpusSpec(
        groups=tuple((name, name) for name in DEFAULT_GROUPS),
        partitions=DEFAULT_PARTITIONS,
        suites=tuple(suites) if suites else DEFAULT_SUITES,
        jobs=jobs,
    )


def corpus_from_dir(
    path, suites: tuple[str, ...] | None = None, jobs: int = 1
) -> CorpusSpec:
    """All .grp files as groups and .sig files as partitions; default
    partitions when the directory lists none."""
    root = Path(path)
    groups = tuple(
        (p.stem, str(p)) for p in sorted(root.glob("*.grp"))
    )
    sig_files = sorted(root.glob("*.sig"))
    partitions = (
        tuple((p.stem, load_partition(p)) for p in sig_files)
        if sig_files
        else DEFAULT_PARTITIONS
    )
    if not groups:
        raise FileNotFoundError(f"no .grp files under {root}")
    return CorpusSpec(
        groups=groups,
        partitions=partitions,
        suites=tuple(suites) if suites else DEFAULT_SUITES,
        jobs=jobs,
    )


def _build_group(source: str, order_cap: int) -> FiniteGroup:
    if source.endswith(".grp"):
        return load_group(source, order_cap=order_cap)
    return builtin_family(source, order_cap=order_cap)


def _run_task(task) -> list[Verdict]:
    group_name, source, partition_name, sigma, suites, order_cap, lattice_cap = task
    try:
        group = _build_group(source, order_cap)
    except CapExceededError as exc:
        return [
            Verdict(
                suite=s,
                group=group_name,
                partition=partition_name,
                subjects=("*",),
                status=SKIPPED,
                witness={"reason": str(exc)},
            )
            for s in suites
        ]
    try:
        ctx = SuiteContext(group, sigma, group_name, partition_name, lattice_cap)
    except CapExceededError as exc:
        return [
            Verdict(
                suite=s,
                group=group_name,
                partition=partition_name,
                subjects=("*",),
                status=SKIPPED,
                witness={"reason": str(exc)},
            )
            for s in suites
        ]
    out: list[Verdict] = []
    for s in suites:
        out.extend(
            run_suite(s, group, sigma, group_name, partition_name, lattice_cap, ctx=ctx)
        )
    return out


@dataclass(frozen=True)
class Report:
    verdicts: tuple[Verdict, ...]

    @property
    def counts(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for v in self.verdicts:
            out[v.status] = out.get(v.status, 0) + 1
        return out

    @property
    def exit_code(self) -> int:
        return 1 if self.counts.get("fail") else 0

    def jsonl(self, with_timing: bool = True) -> str:
        return "\n".join(
            json.dumps(v.payload(with_timing), sort_keys=True) for v in self.verdicts
        ) + ("\n" if self.verdicts else "")

    def canonical_jsonl(self) -> str:
        """Timing-free serialization; identical across worker counts."""
        return self.jsonl(with_timing=False)

    def write_jsonl(self, path) -> None:
        Path(path).write_text(self.jsonl())

    def summary(self) -> str:
        c = self.counts
        return (
            f"verdicts={len(self.verdicts)} pass={c.get('pass', 0)} "
            f"fail={c.get('fail', 0)} finding={c.get('finding', 0)} "
            f"skipped={c.get('skipped', 0)}"
        )


def run_corpus(spec: CorpusSpec) -> Report:
    tasks = [
        (gname, gsource, pname, sigma, spec.suites, spec.order_cap, spec.lattice_cap)
        for gname, gsource in sorted(spec.groups)
        for pname, sigma in sorted(spec.partitions, key=lambda np_: np_[0])
    ]
    verdicts: list[Verdict] = []
    if spec.jobs == 1:
        for t in tasks:
            verdicts.extend(_run_task(t))
    else:
        with ProcessPoolExecutor(max_workers=spec.jobs) as pool:
            for batch in pool.map(_run_task, tasks, chunksize=1):
                verdicts.extend(batch)
    verdicts.sort(key=Verdict.sort_key)
    return Report(tuple(verdicts))


def replay_verdict(line: dict | str, spec: CorpusSpec) -> str:
    """Re-run the single check serialized in one report line; returns the
    status the replay produces."""
    if isinstance(line, str):
        line = json.loads(line)
    witness = line.get("witness") or {}
    groups = dict(spec.groups)
    partitions = dict(spec.partitions)
    group = _build_group(groups[line["group"]], spec.order_cap)
    sigma = partitions[line["partition"]]
    ctx = SuiteContext(group, sigma, line["group"], line["partition"], spec.lattice_cap)
    return replay_check(ctx, tuple(line["subjects"]), witness)
