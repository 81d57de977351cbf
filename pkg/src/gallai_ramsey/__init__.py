"""Edge colorings of complete graphs without short rainbow paths.

Structure recognition, extremal constructions, and exhaustive computation
of small Ramsey, set-Ramsey and Gallai-Ramsey numbers.
"""

from .canon import canonical_form, count_colorings, enumerate_colorings
from .classify import (
    CaseLabel,
    balance_partition,
    classify_p4,
    classify_p5,
    dominant_partition,
    merge_colors,
)
from .coloring import ColoringFormatError, EdgeColoring, parse_coloring, read_coloring
from .construct import PRESETS, Claim, Construction, ConstructionError, PackingSpec, bound_formulas
from .detect import (
    Embedding,
    contains_connected_super,
    find_disjoint_packing,
    find_mono_embedding,
    find_rainbow_path,
    validate_embedding,
)
from .pattern import Pattern, PatternSyntaxError, parse_pattern
from .search import Decision, RamseyQuery, RamseyResult, compute_number, decide_arrowing, naive_oracle
from .suites import verify_paper_suite

__version__ = "0.1.0"
