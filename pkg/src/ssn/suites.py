"""Theorem suites over one (group, partition) pair.

Each suite sweeps the subgroup lattice, checks one family of identities, and
reports verdicts.  All-pass sweeps collapse into a single aggregate verdict
carrying the number of checks; every failure or finding is reported
individually with a witness sufficient to replay that single check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

from .groups import (
    CapExceededError,
    FiniteGroup,
    Subgroup,
    all_subgroups,
    derived_subgroup,
    is_normal_in,
    join,
    prime_set,
    product_bits,
    subgroup_generated,
)
from .joins import is_orthogonal, permutes, permutizer
from .residuals import sigma_residual, sigma_soluble_residual, tau_residual
from .sigma import BlockId, SigmaPartition, is_sigma_soluble
from .subnormality import (
    is_sigma_normal,
    is_subnormal,
    sigma_subnormal_fast,
    sigma_subnormal_oracle,
)

PASS = "pass"
FAIL = "fail"
FINDING = "finding"
SKIPPED = "skipped"


@dataclass(frozen=True)
class Verdict:
    suite: str
    group: str
    partition: str
    subjects: tuple[str, ...]
    status: str
    witness: dict | None = None
    elapsed_ms: int = 0

    def sort_key(self):
        return (self.suite, self.group, self.partition, self.subjects, self.status)

    def payload(self, with_timing: bool = True) -> dict:
        out = {
            "suite": self.suite,
            "group": self.group,
            "partition": self.partition,
            "subjects": list(self.subjects),
            "status": self.status,
            "witness": self.witness,
        }
        if with_timing:
            out["elapsed_ms"] = self.elapsed_ms
        return out


class SuiteContext:
    """Shared lattice, classifications, and memoized algebra for one (G, sigma)."""

    def __init__(
        self,
        group: FiniteGroup,
        sigma: SigmaPartition,
        group_name: str = "G",
        partition_name: str = "sigma",
        lattice_cap: int | None = None,
    ):
        from .groups import DEFAULT_LATTICE_CAP

        self.group = group
        self.sigma = sigma
        self.group_name = group_name
        self.partition_name = partition_name
        self.full = group.full()
        self.lattice = all_subgroups(
            group, lattice_cap if lattice_cap is not None else DEFAULT_LATTICE_CAP
        )
        self.nodes = self.lattice.nodes
        self._sigma_sub: dict[int, bool] = {}
        self._subj: dict[int, tuple[str, ...]] = {}

    # --- classifications ---------------------------------------------------
    def sigma_subnormal(self, i: int) -> bool:
        cached = self._sigma_sub.get(i)
        if cached is None:
            cached = sigma_subnormal_fast(self.nodes[i], self.full, self.sigma) is not None
            self._sigma_sub[i] = cached
        return cached

    def sigma_subnormal_ids(self) -> list[int]:
        return [i for i in range(len(self.nodes)) if self.sigma_subnormal(i)]

    def subnormal_ids(self) -> list[int]:
        return [
            i
            for i in range(len(self.nodes))
            if is_subnormal(self.nodes[i], self.full) is not None
        ]

    # --- memoized algebra ----------------------------------------------------
    def join_id(self, i: int, j: int) -> int:
        return self.lattice.join_index(i, j)

    def meet_id(self, i: int, j: int) -> int:
        return self.lattice.meet_index(i, j)

    def sres_id(self, i: int) -> int:
        return self.lattice.node_of(sigma_residual(self.nodes[i], self.sigma))

    def tau_res_id(self, i: int, tau: tuple[BlockId, ...]) -> int:
        return self.lattice.node_of(tau_residual(self.nodes[i], self.sigma, tau))

    def soluble_res_id(self, i: int) -> int:
        return self.lattice.node_of(sigma_soluble_residual(self.nodes[i], self.sigma))

    def prod(self, ibits: int, jbits: int) -> int:
        return product_bits(
            Subgroup(self.group, ibits), Subgroup(self.group, jbits)
        )

    def subjects(self, *ids: int) -> tuple[str, ...]:
        out = []
        for i in ids:
            s = self._subj.get(i)
            if s is None:
                s = self.nodes[i].generator_strings()
                self._subj[i] = s
            out.append(", ".join(s) if s else "()")
        return tuple(out)

    def node_by_gens(self, text: str) -> int:
        from .perm import Permutation

        perms = [
            Permutation.from_cycles(g, self.group.degree) for g in _split_gens(text)
        ]
        sub = subgroup_generated(self.group, perms)
        return self.lattice.node_of(sub)


def _split_gens(text: str) -> list[str]:
    parts = [p.strip() for p in text.split(",")]
    return [p for p in parts if p and p != "()"]


class _Recorder:
    def __init__(self, suite: str, ctx: SuiteContext):
        self.suite = suite
        self.ctx = ctx
        self.checked = 0
        self.problems: list[Verdict] = []

    def ok(self, n: int = 1) -> None:
        self.checked += n

    def _emit(self, status: str, subjects: tuple[str, ...], witness: dict) -> None:
        self.problems.append(
            Verdict(
                suite=self.suite,
                group=self.ctx.group_name,
                partition=self.ctx.partition_name,
                subjects=subjects,
                status=status,
                witness=witness,
            )
        )

    def fail(self, subjects, witness) -> None:
        self.checked += 1
        self._emit(FAIL, subjects, witness)

    def finding(self, subjects, witness) -> None:
        self._emit(FINDING, subjects, witness)


# --- individual checks (shared by sweep and replay) --------------------------


def _check_sublattice_join(ctx: SuiteContext, i: int, j: int) -> bool:
    return ctx.sigma_subnormal(ctx.join_id(i, j))


def _check_sublattice_meet(ctx: SuiteContext, i: int, j: int) -> bool:
    return ctx.sigma_subnormal(ctx.meet_id(i, j))


def _check_residual_product(ctx: SuiteContext, i: int, j: int) -> bool:
    jid = ctx.join_id(i, j)
    hs, ks = ctx.nodes[ctx.sres_id(i)].bits, ctx.nodes[ctx.sres_id(j)].bits
    return ctx.prod(hs, ks) == ctx.nodes[ctx.sres_id(jid)].bits


def _check_residual_commute(ctx: SuiteContext, i: int, j: int) -> bool:
    hs = ctx.nodes[ctx.sres_id(i)].bits
    k = ctx.nodes[j].bits
    return ctx.prod(hs, k) == ctx.prod(k, hs)


def _check_permute_iff_product(ctx: SuiteContext, i: int, j: int) -> bool:
    jid = ctx.join_id(i, j)
    triple = ctx.prod(ctx.prod(ctx.nodes[i].bits, ctx.nodes[j].bits), ctx.nodes[ctx.sres_id(jid)].bits)
    return permutes(ctx.nodes[i], ctx.nodes[j]) == (triple == ctx.nodes[jid].bits)


def _check_residuals_commute_pair(ctx: SuiteContext, i: int, j: int) -> bool:
    hs, ks = ctx.nodes[ctx.sres_id(i)].bits, ctx.nodes[ctx.sres_id(j)].bits
    return ctx.prod(hs, ks) == ctx.prod(ks, hs)


def _check_residual_product_3(ctx: SuiteContext, i: int, j: int, k: int) -> bool:
    jid = ctx.join_id(ctx.join_id(i, j), k)
    p = ctx.prod(
        ctx.prod(ctx.nodes[ctx.sres_id(i)].bits, ctx.nodes[ctx.sres_id(j)].bits),
        ctx.nodes[ctx.sres_id(k)].bits,
    )
    return p == ctx.nodes[ctx.sres_id(jid)].bits


def _check_tau_join(ctx: SuiteContext, i: int, j: int, tau: tuple[BlockId, ...]) -> bool:
    jid = ctx.join_id(i, j)
    lhs = ctx.tau_res_id(jid, tau)
    rhs = ctx.lattice.node_of(
        join(ctx.nodes[ctx.tau_res_id(i, tau)], ctx.nodes[ctx.tau_res_id(j, tau)])
    )
    return lhs == rhs


def _tau_product_gap(ctx: SuiteContext, i: int, j: int, tau: tuple[BlockId, ...]) -> int | None:
    """Size gap |G^tau| - |H^tau K^tau| when the product set falls short."""
    jid = ctx.join_id(i, j)
    lhs = ctx.nodes[ctx.tau_res_id(jid, tau)]
    p = ctx.prod(ctx.nodes[ctx.tau_res_id(i, tau)].bits, ctx.nodes[ctx.tau_res_id(j, tau)].bits)
    if p == lhs.bits:
        return None
    return lhs.order - p.bit_count()


def _check_permutizer(ctx: SuiteContext, i: int, j: int):
    """Returns (status, extra) where status in {pass, fail, finding}."""
    res = permutizer(ctx.nodes[i], ctx.nodes[j], ctx.lattice)
    if not res.is_unique:
        return FINDING, {
            "maximal_orders": sorted(m.order for m in res.maximal),
        }
    ok = sigma_subnormal_fast(res.maximum, ctx.full, ctx.sigma) is not None
    return (PASS if ok else FAIL), {
        "permutizer": ", ".join(res.maximum.generator_strings()) or "()"
    }


def _check_maximal_member(ctx: SuiteContext, s: int, h: int) -> bool:
    return is_normal_in(ctx.nodes[h], ctx.nodes[s])


def _check_sigma_normal_join(ctx: SuiteContext, i: int, j: int) -> bool | None:
    """None when the hypothesis (H sigma-normal in J) fails; else the verdict."""
    jid = ctx.join_id(i, j)
    if not is_sigma_normal(ctx.nodes[i], ctx.nodes[jid], ctx.sigma):
        return None
    return ctx.sigma_subnormal(jid)


def _check_residual_subnormal(ctx: SuiteContext, i: int) -> bool:
    return is_subnormal(ctx.nodes[ctx.sres_id(i)], ctx.full) is not None


def _check_orthogonal_join(ctx: SuiteContext, i: int, j: int) -> bool | None:
    if not is_orthogonal(ctx.nodes[i], ctx.nodes[j]):
        return None
    return ctx.sigma_subnormal(ctx.join_id(i, j))


def _contained_product(ctx: SuiteContext, i: int, j: int, f: int) -> Subgroup:
    jid = ctx.join_id(i, j)
    return Subgroup(ctx.group, ctx.prod(ctx.nodes[f].bits, ctx.nodes[ctx.sres_id(jid)].bits))


def _check_contained_subnormal(ctx: SuiteContext, i: int, j: int, f: int) -> bool:
    """F * J^sigma lands in a sigma-subnormal overgroup inside J.

    The product with the residual is itself sigma-subnormal; demanding plain
    subnormality here is finitely false (see the gap finding), so that weaker
    reading is probed separately and only ever reported, never failed.
    """
    x = _contained_product(ctx, i, j, f)
    return sigma_subnormal_fast(x, ctx.full, ctx.sigma) is not None


def _contained_subnormal_gap(ctx: SuiteContext, i: int, j: int, f: int) -> bool:
    """True when F * J^sigma is not plainly subnormal in G."""
    return is_subnormal(_contained_product(ctx, i, j, f), ctx.full) is None


def _check_soluble_residual_product(ctx: SuiteContext, i: int, j: int) -> bool:
    jid = ctx.join_id(i, j)
    r = ctx.nodes[ctx.soluble_res_id(i)]
    s = ctx.nodes[ctx.soluble_res_id(j)]
    t = ctx.nodes[ctx.soluble_res_id(jid)]
    if ctx.prod(r.bits, s.bits) != t.bits:
        return False
    return (
        derived_subgroup(r).bits == r.bits and derived_subgroup(s).bits == s.bits
    )


# --- suites -------------------------------------------------------------------


def _suite_oracle_agreement(ctx: SuiteContext, rec: _Recorder) -> None:
    for i in range(len(ctx.nodes)):
        fast_chain = sigma_subnormal_fast(ctx.nodes[i], ctx.full, ctx.sigma)
        oracle = sigma_subnormal_oracle(ctx.nodes[i], ctx.full, ctx.sigma, ctx.lattice)
        if (fast_chain is not None) == (oracle is not None):
            rec.ok()
        else:
            witness = {
                "check": "oracle-agreement",
                "fast": fast_chain is not None,
                "oracle": oracle is not None,
            }
            chain = fast_chain if fast_chain is not None else (oracle[0] if oracle else None)
            if chain is not None:
                witness["chain"] = chain.describe()
            rec.fail(ctx.subjects(i), witness)


def _suite_sublattice(ctx: SuiteContext, rec: _Recorder) -> None:
    ids = ctx.sigma_subnormal_ids()
    for a, i in enumerate(ids):
        for j in ids[a:]:
            if _check_sublattice_join(ctx, i, j):
                rec.ok()
            else:
                rec.fail(ctx.subjects(i, j), {"check": "sublattice-join"})
            if _check_sublattice_meet(ctx, i, j):
                rec.ok()
            else:
                rec.fail(ctx.subjects(i, j), {"check": "sublattice-meet"})


def _suite_residual_product(ctx: SuiteContext, rec: _Recorder) -> None:
    ids = ctx.sigma_subnormal_ids()
    for i in ids:
        for j in ids:
            for name, fn in (
                ("residual-product", _check_residual_product),
                ("residual-commute", _check_residual_commute),
                ("permute-iff-product", _check_permute_iff_product),
            ):
                if fn(ctx, i, j):
                    rec.ok()
                else:
                    rec.fail(ctx.subjects(i, j), {"check": name})


def _suite_soluble_permute(ctx: SuiteContext, rec: _Recorder) -> None:
    if not is_sigma_soluble(ctx.group, ctx.sigma):
        return  # vacuous: the ambient group is outside the hypothesis
    ids = ctx.sigma_subnormal_ids()
    for i in ids:
        for j in ids:
            for name, fn in (
                ("soluble-residual-commute", _check_residual_commute),
                ("soluble-residuals-commute", _check_residuals_commute_pair),
            ):
                if fn(ctx, i, j):
                    rec.ok()
                else:
                    rec.fail(ctx.subjects(i, j), {"check": name})


def _suite_residual_product_3(ctx: SuiteContext, rec: _Recorder) -> None:
    ids = ctx.sigma_subnormal_ids()
    for i, j, k in itertools.combinations_with_replacement(ids, 3):
        if _check_residual_product_3(ctx, i, j, k):
            rec.ok()
        else:
            rec.fail(ctx.subjects(i, j, k), {"check": "residual-product-3"})


def _relevant_taus(ctx: SuiteContext) -> list[tuple[BlockId, ...]]:
    blocks = ctx.sigma.blocks_meeting(prime_set(ctx.group))
    taus: list[tuple[BlockId, ...]] = []
    for r in range(len(blocks) + 1):
        taus.extend(itertools.combinations(blocks, r))
    return taus


def _suite_tau_join(ctx: SuiteContext, rec: _Recorder) -> None:
    ids = ctx.sigma_subnormal_ids()
    taus = _relevant_taus(ctx)
    gaps = 0
    gap_example: tuple | None = None
    for a, i in enumerate(ids):
        for j in ids[a:]:
            for tau in taus:
                tau_labels = [str(b) for b in tau]
                if _check_tau_join(ctx, i, j, tau):
                    rec.ok()
                else:
                    rec.fail(
                        ctx.subjects(i, j), {"check": "tau-join", "tau": tau_labels}
                    )
                if not tau:
                    continue  # empty tau: the product probe degenerates to HK vs <H,K>
                gap = _tau_product_gap(ctx, i, j, tau)
                if gap is not None:
                    gaps += 1
                    if gap_example is None:
                        gap_example = (i, j, tau_labels, gap)
    if gap_example is not None:
        i, j, tau_labels, gap = gap_example
        rec.finding(
            ctx.subjects(i, j),
            {
                "check": "tau-product-gap",
                "tau": tau_labels,
                "missing_elements": gap,
                "product_shortfalls": gaps,
            },
        )


def _suite_permutizer(ctx: SuiteContext, rec: _Recorder) -> None:
    ids = ctx.sigma_subnormal_ids()
    for i in ids:
        for j in ids:
            status, extra = _check_permutizer(ctx, i, j)
            witness = {"check": "permutizer", **extra}
            if status == PASS:
                rec.ok()
            elif status == FAIL:
                rec.fail(ctx.subjects(i, j), witness)
            else:
                rec.finding(ctx.subjects(i, j), witness)


def _suite_maximal_member(ctx: SuiteContext, rec: _Recorder) -> None:
    ids = ctx.sigma_subnormal_ids()
    for s in range(len(ctx.nodes)):
        inside = [h for h in ids if ctx.nodes[s].contains(ctx.nodes[h])]
        maximal = [
            h
            for h in inside
            if not any(
                k != h and ctx.nodes[k].contains(ctx.nodes[h]) for k in inside
            )
        ]
        for h in maximal:
            if _check_maximal_member(ctx, s, h):
                rec.ok()
            else:
                rec.fail(
                    ctx.subjects(h, s),
                    {"check": "maximal-member", "ambient": ctx.subjects(s)[0]},
                )


def _suite_sigma_normal_join(ctx: SuiteContext, rec: _Recorder) -> None:
    ids = ctx.sigma_subnormal_ids()
    for i in ids:
        for j in ids:
            verdict = _check_sigma_normal_join(ctx, i, j)
            if verdict is None:
                continue
            if verdict:
                rec.ok()
            else:
                rec.fail(ctx.subjects(i, j), {"check": "sigma-normal-join"})


def _suite_residual_subnormal(ctx: SuiteContext, rec: _Recorder) -> None:
    ids = ctx.sigma_subnormal_ids()
    for i in ids:
        if _check_residual_subnormal(ctx, i):
            rec.ok()
        else:
            rec.fail(ctx.subjects(i), {"check": "residual-subnormal"})
    join_ids = sorted({ctx.join_id(i, j) for i in ids for j in ids})
    for jid in join_ids:
        if _check_residual_subnormal(ctx, jid):
            rec.ok()
        else:
            rec.fail(ctx.subjects(jid), {"check": "join-residual-subnormal"})


def _suite_orthogonal_join(ctx: SuiteContext, rec: _Recorder) -> None:
    ids = ctx.sigma_subnormal_ids()
    for a, i in enumerate(ids):
        for j in ids[a:]:
            verdict = _check_orthogonal_join(ctx, i, j)
            if verdict is None:
                continue
            if verdict:
                rec.ok()
            else:
                rec.fail(ctx.subjects(i, j), {"check": "orthogonal-join"})


def _suite_contained_subnormal(ctx: SuiteContext, rec: _Recorder) -> None:
    ids = ctx.sigma_subnormal_ids()
    gaps = 0
    gap_example: tuple | None = None
    for a, i in enumerate(ids):
        for j in ids[a:]:
            jid = ctx.join_id(i, j)
            for f in ctx.lattice.cyclic:
                if not ctx.nodes[jid].contains(ctx.nodes[f]):
                    continue
                if _check_contained_subnormal(ctx, i, j, f):
                    rec.ok()
                else:
                    rec.fail(
                        ctx.subjects(i, j),
                        {"check": "contained-subnormal", "cyclic": ctx.subjects(f)[0]},
                    )
                if _contained_subnormal_gap(ctx, i, j, f):
                    gaps += 1
                    if gap_example is None:
                        gap_example = (i, j, f)
    if gap_example is not None:
        i, j, f = gap_example
        rec.finding(
            ctx.subjects(i, j),
            {
                "check": "contained-subnormal-gap",
                "cyclic": ctx.subjects(f)[0],
                "plain_subnormality_failures": gaps,
            },
        )


def _suite_soluble_residual_product(ctx: SuiteContext, rec: _Recorder) -> None:
    ids = ctx.subnormal_ids()
    for a, i in enumerate(ids):
        for j in ids[a:]:
            if _check_soluble_residual_product(ctx, i, j):
                rec.ok()
            else:
                rec.fail(ctx.subjects(i, j), {"check": "soluble-residual-product"})


SUITES: dict[str, tuple[str, Callable[[SuiteContext, _Recorder], None]]] = {
    "S0": ("oracle-agreement", _suite_oracle_agreement),
    "S1": ("sublattice", _suite_sublattice),
    "S2": ("residual-product", _suite_residual_product),
    "S3": ("soluble-residual-permute", _suite_soluble_permute),
    "S4": ("residual-product-3", _suite_residual_product_3),
    "S5": ("tau-join", _suite_tau_join),
    "S6": ("permutizer", _suite_permutizer),
    "S7": ("maximal-member", _suite_maximal_member),
    "S8": ("sigma-normal-join", _suite_sigma_normal_join),
    "S9": ("residual-subnormal", _suite_residual_subnormal),
    "S10": ("orthogonal-join", _suite_orthogonal_join),
    "S11": ("contained-subnormal", _suite_contained_subnormal),
    "S12": ("soluble-residual-product", _suite_soluble_residual_product),
}

DEFAULT_SUITES = tuple(SUITES)


def run_suite(
    suite: str,
    group: FiniteGroup,
    sigma: SigmaPartition,
    group_name: str = "G",
    partition_name: str = "sigma",
    lattice_cap: int | None = None,
    ctx: SuiteContext | None = None,
) -> list[Verdict]:
    """Run one suite over all qualifying subjects of one group/partition."""
    import time

    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    started = time.monotonic()
    try:
        ctx = ctx or SuiteContext(group, sigma, group_name, partition_name, lattice_cap)
    except CapExceededError as exc:
        return [
            Verdict(
                suite=suite,
                group=group_name,
                partition=partition_name,
                subjects=("*",),
                status=SKIPPED,
                witness={"reason": str(exc)},
            )
        ]
    rec = _Recorder(suite, ctx)
    SUITES[suite][1](ctx, rec)
    elapsed = int((time.monotonic() - started) * 1000)
    verdicts = [
        Verdict(
            v.suite, v.group, v.partition, v.subjects, v.status, v.witness, elapsed
        )
        for v in rec.problems
    ]
    if not any(v.status == FAIL for v in verdicts):
        verdicts.append(
            Verdict(
                suite=suite,
                group=ctx.group_name,
                partition=ctx.partition_name,
                subjects=("*",),
                status=PASS,
                witness={"checked": rec.checked},
                elapsed_ms=elapsed,
            )
        )
    return sorted(verdicts, key=Verdict.sort_key)


# --- replay -------------------------------------------------------------------


def replay_check(ctx: SuiteContext, subjects: tuple[str, ...], witness: dict) -> str:
    """Re-run the single check recorded in a fail/finding witness."""
    check = witness.get("check")
    ids = [ctx.node_by_gens(s) for s in subjects if s != "*"]
    if check == "oracle-agreement":
        (i,) = ids
        fast = ctx.sigma_subnormal(i)
        oracle = sigma_subnormal_oracle(ctx.nodes[i], ctx.full, ctx.sigma, ctx.lattice)
        return PASS if fast == (oracle is not None) else FAIL
    if check == "sublattice-join":
        return PASS if _check_sublattice_join(ctx, *ids) else FAIL
    if check == "sublattice-meet":
        return PASS if _check_sublattice_meet(ctx, *ids) else FAIL
    if check == "residual-product":
        return PASS if _check_residual_product(ctx, *ids) else FAIL
    if check in ("residual-commute", "soluble-residual-commute"):
        return PASS if _check_residual_commute(ctx, *ids) else FAIL
    if check == "soluble-residuals-commute":
        return PASS if _check_residuals_commute_pair(ctx, *ids) else FAIL
    if check == "permute-iff-product":
        return PASS if _check_permute_iff_product(ctx, *ids) else FAIL
    if check == "residual-product-3":
        return PASS if _check_residual_product_3(ctx, *ids) else FAIL
    if check == "tau-join":
        tau = tuple(BlockId.parse(t) for t in witness["tau"])
        return PASS if _check_tau_join(ctx, ids[0], ids[1], tau) else FAIL
    if check == "tau-product-gap":
        tau = tuple(BlockId.parse(t) for t in witness["tau"])
        gap = _tau_product_gap(ctx, ids[0], ids[1], tau)
        return FINDING if gap is not None else PASS
    if check == "permutizer":
        status, _ = _check_permutizer(ctx, *ids)
        return status
    if check == "maximal-member":
        h, s = ids
        return PASS if _check_maximal_member(ctx, s, h) else FAIL
    if check == "sigma-normal-join":
        verdict = _check_sigma_normal_join(ctx, *ids)
        return PASS if verdict else FAIL
    if check in ("residual-subnormal", "join-residual-subnormal"):
        return PASS if all(_check_residual_subnormal(ctx, i) for i in ids) else FAIL
    if check == "orthogonal-join":
        verdict = _check_orthogonal_join(ctx, *ids)
        return PASS if verdict in (None, True) else FAIL
    if check == "contained-subnormal":
        f = ctx.node_by_gens(witness["cyclic"])
        return PASS if _check_contained_subnormal(ctx, ids[0], ids[1], f) else FAIL
    if check == "contained-subnormal-gap":
        f = ctx.node_by_gens(witness["cyclic"])
        return FINDING if _contained_subnormal_gap(ctx, ids[0], ids[1], f) else PASS
    if check == "soluble-residual-product":
        return PASS if _check_soluble_residual_product(ctx, *ids) else FAIL
    raise ValueError(f"cannot replay check {check!r}")
