"""Pairs of Boolean forms that define a partial function separating labeled data.

The package provides the core data model (universes, assignments, labeled
data), three form families (DNF, binary decision trees, ordered binary
decision diagrams), set-cover machinery, the mappings connecting set cover
with pair separation, exact and approximate solvers, and a benchmark CLI.
"""

from .bdt import (
    DecisionTree,
    Internal,
    Leaf,
    eval_tree,
    induce_tree,
    negate_tree,
    tree_depth,
    tree_internal_nodes,
    tree_nodes,
)
from .core import (
    Assignment,
    LabeledData,
    TriValue,
    VarUniverse,
    instance_from_obj,
    instance_to_obj,
    iter_assignments,
    make_labeled_data,
    named_universe,
    parse_instance,
    serialize_instance,
)
from .dnf import (
    DnfForm,
    Term,
    dnf_depth,
    dnf_length,
    dnf_pair_noncontradictory,
    eval_dnf,
    prime_implicants,
)
from .errors import (
    BoolsepError,
    BudgetExceeded,
    ConfigError,
    ContradictoryPair,
    EmptyLabelSet,
    IndexOutOfRange,
    InfeasibleInput,
    InfeasiblePair,
    InvalidParams,
    LengthMismatch,
    MalformedDiagram,
    OverlappingLabels,
    ParseError,
    Uncoverable,
    VerificationFailure,
)
from .forms import (
    FAMILIES,
    FormFamily,
    PairSolution,
    VerifyResult,
    eval_partial,
    get_family,
    pair_from_json,
    pair_from_obj,
    pair_to_json,
    pair_to_obj,
    verify_pair,
    verify_separation,
)
from .generate import gen_random_labeled_data, gen_random_setcover
from .obdd import (
    Obdd,
    build_obdd,
    eval_obdd,
    negate_obdd,
    obdd_from_onset,
    obdd_interior_nodes,
    obdd_width,
    reduce_obdd,
    validate_obdd,
)
from .reductions import (
    HausslerData,
    RatioReport,
    cover_to_dnf_pair,
    dnf_pair_to_cover,
    haussler_data,
    negatable_g,
    negatable_h,
    ratio_transfer_report,
)
from .setcover import (
    Cover,
    SetCoverInstance,
    cover_cost,
    cover_is_feasible,
    exact_set_cover,
    greedy_set_cover,
)
from .solvers import (
    SolveBudget,
    approx_min_length_dnf,
    approx_min_length_dnf_total,
    exact_partial_separation_dnf,
    negation_based_partial_solver,
    tight_instance,
)

__version__ = "0.1.0"
