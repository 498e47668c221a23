"""Pipe dream combinatorics of Schubert and padded Schubert polynomials.

The package is organized bottom-up: :mod:`pipedreams.perm` (permutations,
partitions, Bruhat/weak order), :mod:`pipedreams.pipedream` (cross-sets,
tracing, moves, enumeration), :mod:`pipedreams.poly` (exact sparse
polynomials and the raising/lowering/weight operators), and
:mod:`pipedreams.correspondence` (transport of marked bumps to covers,
fibers, and the identity verifiers).  :mod:`pipedreams.cli` exposes it all
on the command line.
"""

from .perm import (
    Partition,
    Permutation,
    Position,
    Transposition,
    bruhat_covers,
    covers_below,
    dominant,
    dominant_permutations,
    longest_element,
    partitions_of,
    partitions_up_to,
    symmetric_group,
    weak_interval_below,
    weak_le,
)
from .pipedream import (
    DominatedPositions,
    InvariantError,
    MarkedPipeDream,
    PipeDream,
    TileLabels,
    Trace,
    dominated_positions,
    is_slidable,
    is_swappable,
    permutation_of,
    pipe_dreams,
    pipe_dreams_bruteforce,
    render_ascii,
    slide,
    swap,
)
from .poly import (
    Monomial,
    Polynomial,
    in_degree_profile,
    lowering_op,
    padded_by_homogenization,
    padded_schubert_poly,
    profile_basis,
    raising_op,
    schubert_poly,
    weight_op,
)
from .correspondence import (
    BetweenSets,
    CoverContribution,
    IdentityReport,
    MarkClass,
    Resolution,
    Sl2Report,
    between_sets,
    chain_step,
    classify,
    fiber,
    fiber_backward,
    fiber_forward,
    fill_mark,
    is_aligned,
    marked_pairs,
    northwest_shadow,
    open_cross,
    resolve,
    verify_lowering,
    verify_raising,
    verify_sl2,
)

__version__ = "0.1.0"

__all__ = [
    "Partition",
    "Permutation",
    "Position",
    "Transposition",
    "bruhat_covers",
    "covers_below",
    "dominant",
    "dominant_permutations",
    "longest_element",
    "partitions_of",
    "partitions_up_to",
    "symmetric_group",
    "weak_interval_below",
    "weak_le",
    "DominatedPositions",
    "InvariantError",
    "MarkedPipeDream",
    "PipeDream",
    "TileLabels",
    "Trace",
    "dominated_positions",
    "is_slidable",
    "is_swappable",
    "permutation_of",
    "pipe_dreams",
    "pipe_dreams_bruteforce",
    "render_ascii",
    "slide",
    "swap",
    "Monomial",
    "Polynomial",
    "in_degree_profile",
    "lowering_op",
    "padded_by_homogenization",
    "padded_schubert_poly",
    "profile_basis",
    "raising_op",
    "schubert_poly",
    "weight_op",
    "BetweenSets",
    "CoverContribution",
    "IdentityReport",
    "MarkClass",
    "Resolution",
    "Sl2Report",
    "between_sets",
    "chain_step",
    "classify",
    "fiber",
    "fiber_backward",
    "fiber_forward",
    "fill_mark",
    "is_aligned",
    "marked_pairs",
    "northwest_shadow",
    "open_cross",
    "resolve",
    "verify_lowering",
    "verify_raising",
    "verify_sl2",
]
