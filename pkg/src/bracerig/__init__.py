"""Rigidity analysis, brace planning and flex synthesis for braced
parallelogram frameworks.

The package decides whether a braced framework made of parallelogram cells is
rigid, enumerates the colorings that certify flexibility, constructs explicit
one-parameter motions, and ships the same pipeline as a library, CLI and
stateless HTTP service.
"""

__version__ = "1.0.0"

from .coloring import (
    EdgeColoring,
    NacStatus,
    QuotientEmbedding,
    brute_force_nac_oracle,
    check_cartesian,
    check_nac,
    enumerate_cartesian_nac,
    product_coloring,
    product_embedding,
)
from .document import (
    FrameworkDocument,
    canonical_json,
    parse_document,
    parse_framework,
    serialize_framework,
)
from .flexes import Flex, FlexReport, build_flex, export_animation, sample_flex, verify_flex
from .geometry import (
    Parallelogram,
    PFramework,
    Placement,
    add_four_cycle,
    carpet_to_framework,
    close_four_cycle,
    generate_grid,
    generate_random_grec,
    ribbon_translation_vector,
    translate_side,
    validate_parallelogram_placement,
)
from .graph import (
    FourCycle,
    Ribbon,
    RibbonPartition,
    StructuralGraph,
    Walk,
    build_structural_graph,
    classify_ribbon_cutting,
    compute_ribbons,
    enumerate_four_cycles,
    is_edge_cut,
    separating_ribbon,
    walk_crossing_parity,
)
from .rigidity import (
    BracedFramework,
    CompletionResult,
    Verdict,
    bracing_graph,
    build_braced,
    minimal_brace_completion,
    ribbon_graph,
    rigidity_verdict,
)
