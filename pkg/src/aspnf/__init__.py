"""Normal forms and reference semantics for ground answer-set programs.

The package parses ground normal logic programs, computes their answer
sets and well-founded model with oracle-grade reference algorithms,
checks and constructs the kernel and 3-kernel normal forms, and
performs the normalizing transformations (anti-chain to kernel,
long-rule simplification, bridge elimination) with machine-checked
equivalence modulo projection.
"""

from .errors import (
    AspnfError,
    BridgeNotFoundError,
    CycleCapExceededError,
    GenerationFailedError,
    KernelFormError,
    MalformedAnswerSetError,
    NegativeBodyError,
    ReconstructionError,
    ReservedAtomError,
    UniverseTooLargeError,
)
from .model import (
    RESERVED_PREFIX,
    DependencyGraph,
    Literal,
    Program,
    Rule,
    build_dependency_graph,
    build_program,
    is_purely_negative,
    is_reserved,
    neg,
    pos,
)
from .textio import (
    ParseError,
    SourceSpan,
    export_dot,
    parse_program,
    render_program,
)
from .semantics import (
    DEFAULT_MAX_ATOMS,
    AnswerSetCollection,
    WfsResult,
    enumerate_answer_sets,
    gamma,
    gl_reduct,
    is_answer_set,
    is_wfs_irreducible,
    least_model,
    well_founded,
)
from .kernel import (
    AntiChain,
    KernelReport,
    KernelViolation,
    antichain_to_kernel,
    bar_atom,
    check_kernel,
    equivalent_mod_projection,
    kernelize,
    parse_antichain,
    project,
    render_antichain,
)
from .cycles import (
    AND_BRIDGE,
    DEFAULT_MAX_CYCLES,
    OR_BRIDGE,
    TAG_AUXILIARY,
    TAG_BRIDGE_STEP,
    TAG_IN_CYCLE,
    TAG_UNCLASSIFIED,
    Bridge,
    Cycle,
    OrHandle,
    RuleClassification,
    analysis_to_dict,
    classify_rules,
    export_analysis_dot,
    find_bridges,
    find_cycles,
    find_or_handles,
)
from .normalize import (
    ReconstructionFormula,
    ThreeKernelReport,
    ThreeKernelViolation,
    TransformStep,
    TransformTrace,
    check_3kernel,
    long_rule_simplify,
    reconstruct,
    simplify_and_bridge,
    simplify_or_bridge,
    three_kernelize,
    trace_to_dict,
)
from .generate import (
    COLORS,
    UndirectedGraph,
    decode_3col,
    encode_3col,
    graph,
    random_kernel_program,
)

__version__ = "0.1.0"

__all__ = [
    "AND_BRIDGE",
    "AnswerSetCollection",
    "AntiChain",
    "AspnfError",
    "Bridge",
    "BridgeNotFoundError",
    "COLORS",
    "Cycle",
    "CycleCapExceededError",
    "DEFAULT_MAX_ATOMS",
    "DEFAULT_MAX_CYCLES",
    "DependencyGraph",
    "GenerationFailedError",
    "KernelFormError",
    "KernelReport",
    "KernelViolation",
    "Literal",
    "MalformedAnswerSetError",
    "NegativeBodyError",
    "OR_BRIDGE",
    "OrHandle",
    "ParseError",
    "Program",
    "RESERVED_PREFIX",
    "ReconstructionError",
    "ReconstructionFormula",
    "ReservedAtomError",
    "Rule",
    "RuleClassification",
    "SourceSpan",
    "TAG_AUXILIARY",
    "TAG_BRIDGE_STEP",
    "TAG_IN_CYCLE",
    "TAG_UNCLASSIFIED",
    "ThreeKernelReport",
    "ThreeKernelViolation",
    "TransformStep",
    "TransformTrace",
    "UndirectedGraph",
    "UniverseTooLargeError",
    "WfsResult",
    "analysis_to_dict",
    "antichain_to_kernel",
    "bar_atom",
    "build_dependency_graph",
    "build_program",
    "check_3kernel",
    "check_kernel",
    "classify_rules",
    "decode_3col",
    "encode_3col",
    "enumerate_answer_sets",
    "equivalent_mod_projection",
    "export_analysis_dot",
    "export_dot",
    "find_bridges",
    "find_cycles",
    "find_or_handles",
    "gamma",
    "gl_reduct",
    "graph",
    "is_answer_set",
    "is_purely_negative",
    "is_reserved",
    "is_wfs_irreducible",
    "kernelize",
    "least_model",
    "long_rule_simplify",
    "neg",
    "parse_antichain",
    "parse_program",
    "pos",
    "project",
    "random_kernel_program",
    "reconstruct",
    "render_antichain",
    "render_program",
    "simplify_and_bridge",
    "simplify_or_bridge",
    "three_kernelize",
    "trace_to_dict",
    "well_founded",
]
