"""Reconstruct integer partitions from their sets of k-deletions."""

from .deletion import DeletionDeck, is_k_deletion, k_deletions, partitions_of, superpartitions
from .errors import (
    AmbiguousDeckError,
    BoundNotMetError,
    InconsistentDeckError,
    ReconstructionError,
)
from .oracle import (
    ConsistencyReport,
    MatchMode,
    SweepReport,
    consistent_partitions,
    exhaustive_check,
    negative_example,
)
from .partition import (
    EMPTY,
    Cell,
    Partition,
    add_cell,
    conjugate,
    contains,
    inner_corners,
    join,
    meet,
    normalize,
    remove_cell,
    skew_size,
)
from .reconstruct import (
    Branch,
    CaseTrace,
    QuadrantProfile,
    Validation,
    deck_join,
    quadrant_profile,
    reconstruct,
    threshold_lines,
    validate_candidate,
)

__version__ = "0.1.0"
