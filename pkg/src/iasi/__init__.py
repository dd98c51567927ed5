"""Arithmetic integer-additive set-indexers of finite simple graphs.

Vertices carry finite sets of non-negative integers; each edge carries
the sumset of its endpoints.  When both assignments are injective the
labeling is a set-indexer, and progression-valued labels sort the
indexers into arithmetic, isoarithmetic, biarithmetic, and strong
classes with exact counting laws, checkable here by brute force.
"""

from .compat import (
    AuditRecord,
    ClassProfile,
    Prediction,
    audit,
    audit_point,
    canonical_pair,
    compat_partition,
    predict_bi_maximal,
    predict_bi_saturated,
    predict_edge_sin,
    predict_iso,
)
from .construct import (
    ConstructionError,
    ConstructionFailedError,
    ConstructSpec,
    InfeasibleError,
    NotBipartiteError,
    RatioBoundError,
    SearchBound,
    SizeLimitError,
    construct,
    construct_biarithmetic,
    construct_bipartite_uniform_isoarithmetic,
    construct_componentwise_uniform,
    construct_identical_biarithmetic,
    construct_isoarithmetic,
    construct_strong_biarithmetic,
    construct_uniform_isoarithmetic,
    default_first_terms,
    search_identical_biarithmetic,
)
from .graphs import (
    Bipartition,
    Graph,
    bipartition,
    complete,
    complete_bipartite,
    components,
    cycle,
    disjoint_union,
    generate,
    graph,
    induced_subgraph,
    is_connected,
    path,
    star,
)
from .io import (
    ParseError,
    export_dot,
    format_histogram,
    parse_graph,
    parse_labeling,
    serialize_audit,
    serialize_graph,
    serialize_labeling,
    serialize_profile,
    serialize_report,
)
from .labeling import (
    Labeling,
    MissingLabelError,
    NotArithmeticError,
    RatioResult,
    UndefinedIndexError,
    deterministic_index,
    deterministic_ratio,
    edge_label,
    make_labeling,
    set_indexing_number,
)
from .sets import (
    APSet,
    IntSet,
    ap_set,
    ap_sumset_size,
    as_intset,
    check_freiman_converse,
    detect_ap,
    sumset,
)
from .verify import (
    VerificationReport,
    Violation,
    classify,
    verify_arithmetic,
    verify_biarithmetic,
    verify_iasi,
    verify_identical_biarithmetic,
    verify_isoarithmetic,
    verify_strong,
    verify_uniform,
)

__version__ = "0.1.0"
