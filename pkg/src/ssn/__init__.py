"""Sigma-subnormality toolkit for finite permutation groups."""

from .groups import (
    CapExceededError,
    FiniteGroup,
    Subgroup,
    SubgroupLattice,
    all_subgroups,
    derived_subgroup,
    group_from_generators,
    join,
    normal_closure,
    normal_core,
    normal_subgroups,
    prime_set,
    quotient_group,
    subgroup_generated,
)
from .perm import ParseError, Permutation, parse_permutation
from .sigma import (
    BlockId,
    REMAINDER,
    SigmaPartition,
    is_sigma_nilpotent,
    is_sigma_primary,
    is_sigma_soluble,
    sigma_component,
)
from .residuals import (
    ResidualReport,
    pi_residual,
    residual_report,
    sigma_residual,
    sigma_soluble_residual,
    tau_residual,
)
from .subnormality import (
    EmbeddingWitness,
    SigmaChain,
    is_sigma_embedded,
    is_sigma_normal,
    is_strictly_sigma_subnormal,
    is_subnormal,
    residual_subnormality_check,
    sigma_defect,
    sigma_subnormal_fast,
    sigma_subnormal_oracle,
)
from .joins import PermutizerResult, is_orthogonal, permutes, permutizer
from .families import builtin_family
from .fileio import load_group, load_partition, save_group, save_partition
from .suites import SUITES, Verdict, run_suite
from .corpus import CorpusSpec, Report, default_corpus_spec, replay_verdict, run_corpus

__version__ = "0.1.0"
