"""Generalised Morrey sequence spaces ``m_{phi,p}(Z^d)``.

Exact norms of finitely supported sequences, weight-class algebra,
embedding decisions, finite-dimensional operator norms and witness
generators, with brute-force oracles for cross-checking.
"""

from .embeddings import (
    EmbeddingVerdict,
    SingularityVerdict,
    compare_with_lr,
    criterion_sup,
    is_continuous,
    is_strictly_singular,
    spaces_equal,
)
from .errors import (
    BoundedWeight,
    BudgetExceeded,
    DimensionMismatch,
    LimitPositive,
    MorreyError,
    NotContinuous,
    NotGp,
    NotInAnyGp,
    NotNormalized,
    QuasiBanachUnsupported,
    SupportOutOfRange,
    TrivialSpace,
)
from .finite_dim import FiniteSpaceParams, OperatorNormResult, distribute_even, finite_norm, kj_count, opnorm_id
from .lattice import DyadicCube, ancestor
from .norms import NormResult, SparseSequence, norm_linf, norm_lorentz, norm_lp, norm_mps
from .oracle import OracleConfig, oracle_norm, oracle_opnorm_indicators, oracle_opnorm_random
from .weights import (
    ClassificationReport,
    SpaceParams,
    Weight,
    classify_space,
    is_gp,
    is_nontrivial,
    limits,
    r_phi,
    regularize,
)
from .witnesses import (
    WitnessBundle,
    c0_counterexample,
    char_sequence,
    embedding_failure_witness,
    lambda_E,
    linf_copy,
    proper_subspace_witness,
    spike_sequence,
    ss_demo,
)

__version__ = "0.1.0"
