"""Command-line interface.

Subcommands: check, defect, residual, permutizer, make, verify.  Exit codes:
0 all pass, 1 any fail, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import sys

from .corpus import (
    corpus_from_dir,
    default_corpus_spec,
    run_corpus,
)
from .families import builtin_family
from .fileio import load_group, load_partition, save_group
from .groups import CapExceededError, FiniteGroup, Subgroup, subgroup_generated
from .joins import permutizer
from .perm import ParseError, parse_permutation
from .residuals import residual_report
from .sigma import BlockId
from .subnormality import (
    sigma_subnormal_fast,
    sigma_subnormal_oracle,
    step_label,
)
from .suites import DEFAULT_SUITES, SUITES


def _parse_subgroup(g: FiniteGroup, text: str) -> Subgroup:
    """Comma-separated generator list in cycle notation; "()" alone is trivial."""
    parts = [p.strip() for p in text.split(",") if p.strip()]
    perms = [parse_permutation(p, g.degree) for p in parts if p != "()"]
    return subgroup_generated(g, perms)


def _describe(sub: Subgroup) -> str:
    gens = ", ".join(sub.generator_strings())
    return f"order {sub.order}: <{gens or '()'}>"


def _cmd_check(args) -> int:
    g = load_group(args.group)
    sigma = load_partition(args.partition)
    sub = _parse_subgroup(g, args.subgroup)
    chain = sigma_subnormal_fast(sub, g.full(), sigma)
    if chain is None:
        print(f"subgroup {_describe(sub)} is NOT sigma-subnormal (partition {sigma.describe()})")
        return 0
    print(f"subgroup {_describe(sub)} is sigma-subnormal (partition {sigma.describe()})")
    for k, (term, step) in enumerate(zip(chain.terms[1:], chain.steps), start=1):
        print(f"  step {k} [{step_label(step)}] -> {_describe(term)}")
    return 0


def _cmd_defect(args) -> int:
    g = load_group(args.group)
    sigma = load_partition(args.partition)
    sub = _parse_subgroup(g, args.subgroup)
    found = sigma_subnormal_oracle(sub, g.full(), sigma)
    if found is None:
        print("not sigma-subnormal")
        return 0
    chain, defect = found
    print(f"sigma-defect: {defect}")
    for k, (term, step) in enumerate(zip(chain.terms[1:], chain.steps), start=1):
        print(f"  step {k} [{step_label(step)}] -> {_describe(term)}")
    return 0


def _cmd_residual(args) -> int:
    g = load_group(args.group)
    sub = _parse_subgroup(g, args.subgroup) if args.subgroup else g.full()
    sigma = load_partition(args.partition) if args.partition else None
    pi = frozenset(int(p) for p in args.primes.split(",")) if args.primes else frozenset()
    tau = (
        tuple(BlockId.parse(b) for b in args.blocks.split(","))
        if args.blocks
        else ()
    )
    if args.kind != "pi" and sigma is None:
        print("error: --partition is required for sigma/tau/soluble residuals", file=sys.stderr)
        return 2
    report = residual_report(
        sub, args.kind, sigma=sigma, pi=pi, tau=tau, with_oracle=args.oracle
    )
    print(f"{args.kind}-residual ({report.detail}) of {_describe(sub)}")
    print(f"  result {_describe(report.result)}")
    if report.oracle_result is not None:
        print(f"  oracle {_describe(report.oracle_result)} (consistent={report.consistent()})")
    return 0


def _cmd_permutizer(args) -> int:
    g = load_group(args.group)
    h = _parse_subgroup(g, args.subgroup)
    k = _parse_subgroup(g, args.other)
    res = permutizer(h, k)
    if res.is_unique:
        print(f"unique maximum: {_describe(res.maximum)}")
    else:
        print("no unique maximum; maximal permuting subgroups:")
        for m in res.maximal:
            print(f"  {_describe(m)}")
    return 0


def _cmd_make(args) -> int:
    g = builtin_family(args.family)
    save_group(g, args.out, comment=f"family: {args.family}")
    print(f"wrote {args.out} (degree {g.degree}, order {g.order})")
    return 0


def _cmd_verify(args) -> int:
    suites = tuple(args.suites.split(",")) if args.suites else DEFAULT_SUITES
    unknown = [s for s in suites if s not in SUITES]
    if unknown:
        print(f"error: unknown suites {unknown}; known: {list(SUITES)}", file=sys.stderr)
        return 2
    if args.corpus:
        spec = corpus_from_dir(args.corpus, suites=suites, jobs=args.jobs)
    else:
        spec = default_corpus_spec(suites=suites, jobs=args.jobs)
    report = run_corpus(spec)
    if args.out:
        report.write_jsonl(args.out)
        print(f"wrote {args.out}")
    print(report.summary())
    for v in report.verdicts:
        if v.status in ("fail", "finding"):
            print(f"{v.status.upper()} {v.suite} {v.group} {v.partition} {v.subjects} {v.witness}")
    return report.exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ssn",
        description="Sigma-subnormality computations and theorem verification "
        "over finite permutation groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide sigma-subnormality, print a witness chain")
    p.add_argument("--group", required=True, help=".grp file")
    p.add_argument("--partition", required=True, help=".sig file")
    p.add_argument("--subgroup", required=True, help="comma-separated generators, cycle notation")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("defect", help="exact sigma-defect via the lattice oracle")
    p.add_argument("--group", required=True)
    p.add_argument("--partition", required=True)
    p.add_argument("--subgroup", required=True)
    p.set_defaults(fn=_cmd_defect)

    p = sub.add_parser("residual", help="compute a residual subgroup")
    p.add_argument("--kind", required=True, choices=["pi", "sigma", "tau", "soluble"])
    p.add_argument("--group", required=True)
    p.add_argument("--partition", help=".sig file (sigma/tau/soluble kinds)")
    p.add_argument("--subgroup", help="defaults to the whole group")
    p.add_argument("--primes", help="comma-separated primes (pi kind)")
    p.add_argument("--blocks", help="comma-separated block ids like b0,rest (tau kind)")
    p.add_argument("--oracle", action="store_true", help="cross-check by normal-subgroup scan")
    p.set_defaults(fn=_cmd_residual)

    p = sub.add_parser("permutizer", help="largest subgroup of H permuting with K")
    p.add_argument("--group", required=True)
    p.add_argument("--subgroup", required=True, help="generators of H")
    p.add_argument("--other", required=True, help="generators of K")
    p.set_defaults(fn=_cmd_permutizer)

    p = sub.add_parser("make", help="write a builtin family to a .grp file")
    p.add_argument("--family", required=True, help="e.g. 'wreath_cyclic(2,3)'")
    p.add_argument("--out", required=True)
    p.set_defaults(fn=_cmd_make)

    p = sub.add_parser("verify", help="run theorem suites over a corpus")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--corpus", help="directory of .grp (and optional .sig) files")
    group.add_argument("--default", action="store_true", help="bundled corpus (default)")
    p.add_argument("--suites", help=f"comma-separated subset of {','.join(SUITES)}")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="write the JSONL report here")
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ParseError, FileNotFoundError, CapExceededError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
