"""Top-k vulnerable node detection in directed uncertain graphs.

A node defaults because of its own risk or contagion from upstream
defaults; default probability follows possible-world semantics.  The
package provides an exact enumeration oracle for tiny graphs and a
ladder of sampling methods (N, SN, SR, BSR, BSRBK) with bound-based
pruning, reverse sampling, and bottom-k early stopping for scale.
"""

from .bottomk import (
    DEFAULT_BK,
    FinishRecord,
    SampleHashStream,
    bottomk_estimate,
    bsrbk_topk,
    expected_relative_error,
)
from .bounds import (
    BoundTable,
    CandidateReport,
    compute_bounds,
    lower_bounds,
    reduce_candidates,
    upper_bounds,
)
from .coins import WorldCoins, coin
from .errors import (
    BudgetExceeded,
    DuplicateEdge,
    InfeasibleShape,
    InvalidArguments,
    InvalidBk,
    InvalidK,
    MalformedLine,
    MismatchedK,
    ProbabilityOutOfRange,
    SelfEdge,
    UnknownLabel,
    VulnkError,
)
from .forward import (
    ApproxParams,
    basic_sample_size,
    estimate_topk_basic,
    forward_default_counts,
    sample_world_forward,
    sn_topk,
)
from .graph import (
    UncertainGraph,
    assign_random_probabilities,
    load_graph,
    parse_graph,
    reverse,
    serialize_graph,
)
from .harness import (
    GROUND_TRUTH_SAMPLES,
    GroundTruth,
    bench,
    ground_truth,
    parse_k,
    precision_at_k,
    run_method,
)
from .oracle import (
    ENUMERATION_BUDGET,
    enumerate_worlds,
    exact_default_probabilities,
    exact_topk,
)
from .results import (
    EST_BOTTOMK,
    EST_BOUND,
    EST_EXACT,
    EST_FREQ,
    TSV_HEADER,
    TopKEntry,
    TopKResult,
    parse_result_tsv,
)
from .reverse import (
    ReverseSampler,
    bsr_topk,
    reduced_sample_size,
    reverse_counts,
    reverse_sample,
)
from .synth import chain_example, diamond_witness, synth_graph

__version__ = "0.1.0"
