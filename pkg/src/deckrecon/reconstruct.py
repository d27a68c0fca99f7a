"""Recover a partition from its complete set of k-deletions.

The algorithm joins the deck to get a lower bound ``mu`` for the unknown
partition, then locates the missing cells from the shape of ``mu`` alone:

* ``mu`` already has the full weight: it is the answer.
* ``mu`` has fewer than k rows: every missing cell sits in the bottommost row
  with at least k cells.  Fewer than k columns is the transposed situation and
  is handled by conjugating the whole deck.
* Otherwise let r be the bottommost row and c the rightmost column of ``mu``
  holding at least k cells, and split on how row r and column c meet: at an
  interior cell, at an inner corner, or not at all.

Each branch only proposes candidates.  A candidate is accepted after checking
it against the deck, so malformed input surfaces as an exception instead of a
wrong answer.  This needs ``n >= k**2 + 2k``; below that the deck does not
determine the partition in general.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from functools import reduce

from .deletion import DeletionDeck, is_k_deletion, k_deletions
from .errors import AmbiguousDeckError, BoundNotMetError, InconsistentDeckError
from .partition import EMPTY, Cell, Partition, add_cell, conjugate, is_addable, join


class Branch(str, enum.Enum):
    JOIN_COMPLETE = "JoinComplete"
    FEW_ROWS = "FewRows"
    FEW_COLS = "FewCols"
    INTERIOR_INTERSECTION = "InteriorIntersection"
    INNER_CORNER = "InnerCorner"
    DISJOINT = "Disjoint"


class Extension(str, enum.Enum):
    ROW_R = "RowR"
    COL_C = "ColC"


class Validation(str, enum.Enum):
    STRICT = "strict"
    SUBSET = "subset"


@dataclass(frozen=True)
class CaseTrace:
    """Which branch produced the answer, with the quantities it was based on."""

    branch: Branch
    mu: Partition
    deficit: int
    r: int | None = None
    c: int | None = None
    extended: Extension | None = None
    added: Cell | None = None

    def to_text(self) -> str:
        fields = [
            f"case={self.branch.value}",
            f"mu={self.mu}",
            f"deficit={self.deficit}",
            f"r={'-' if self.r is None else self.r}",
            f"c={'-' if self.c is None else self.c}",
        ]
        if self.extended is not None:
            fields.append(f"extended={self.extended.value}")
        if self.added is not None:
            fields.append(f"added={self.added}")
        return " ".join(fields)

    def transposed(self) -> CaseTrace:
        swap_branch = {Branch.FEW_ROWS: Branch.FEW_COLS, Branch.FEW_COLS: Branch.FEW_ROWS}
        swap_ext = {Extension.ROW_R: Extension.COL_C, Extension.COL_C: Extension.ROW_R}
        return CaseTrace(
            branch=swap_branch.get(self.branch, self.branch),
            mu=conjugate(self.mu),
            deficit=self.deficit,
            r=self.c,
            c=self.r,
            extended=None if self.extended is None else swap_ext[self.extended],
            added=None if self.added is None else Cell(self.added.col, self.added.row),
        )


@dataclass(frozen=True)
class QuadrantProfile:
    q1: int
    q2: int
    q3: int


def deck_join(deck: DeletionDeck) -> Partition:
    return reduce(join, deck.members, EMPTY)


def threshold_lines(mu: Partition, k: int) -> tuple[int | None, int | None]:
    """Bottommost row and rightmost column of ``mu`` with at least k cells."""
    rows = [i for i, p in enumerate(mu.parts, start=1) if p >= k]
    cols = [j for j, p in enumerate(conjugate(mu).parts, start=1) if p >= k]
    return (rows[-1] if rows else None, cols[-1] if cols else None)


def quadrant_profile(mu: Partition, k: int) -> QuadrantProfile:
    """Count cells right of column k, inside the k x k box, and below row k.

    Cells right of column k and below row k land in both q1 and q3; there are
    none whenever (k+1, k+1) is outside ``mu``.
    """
    q1 = sum(max(p - k, 0) for p in mu.parts)
    q2 = sum(min(p, k) for p in mu.parts[:k])
    q3 = sum(mu.parts[k:])
    return QuadrantProfile(q1, q2, q3)


def validate_candidate(candidate: Partition, deck: DeletionDeck, mode=Validation.STRICT) -> bool:
    """Check a proposed partition against the deck.

    Strict re-enumerates the candidate's deck and requires equality; subset only
    requires every member to be a k-deletion of the candidate.
    """
    mode = Validation(mode)
    if candidate.weight != deck.n:
        return False
    if mode is Validation.STRICT:
        return k_deletions(candidate, deck.k) == deck
    return all(is_k_deletion(m, candidate, deck.k) for m in deck.members)


def _extend_row(mu: Partition, row: int, amount: int) -> Partition | None:
    parts = list(mu.parts)
    if row > len(parts):
        return None
    parts[row - 1] += amount
    if row > 1 and parts[row - 2] < parts[row - 1]:
        return None
    return Partition(tuple(parts))


def _extend_col(mu: Partition, col: int, amount: int) -> Partition | None:
    extended = _extend_row(conjugate(mu), col, amount)
    return None if extended is None else conjugate(extended)


def _pick(candidates, deck: DeletionDeck, mode) -> tuple[Partition, CaseTrace]:
    valid = [(lam, trace) for lam, trace in candidates if validate_candidate(lam, deck, mode)]
    if not valid:
        raise InconsistentDeckError(
            f"no candidate matches the deck ({len(candidates)} proposed)"
        )
    if len({lam for lam, _ in valid}) > 1:
        shown = ", ".join(str(lam) for lam, _ in valid)
        raise AmbiguousDeckError(f"several candidates match the deck: {shown}")
    return valid[0]


def reconstruct(deck: DeletionDeck, validation=Validation.STRICT) -> tuple[Partition, CaseTrace]:
    """Return the partition whose k-deletion deck is ``deck``, with a trace.

    Raises BoundNotMetError when the implied weight n is below k**2 + 2k,
    InconsistentDeckError when no partition fits, and AmbiguousDeckError when
    more than one candidate survives validation.
    """
    validation = Validation(validation)
    k, n = deck.k, deck.n
    mu = deck_join(deck)

    if k == 0:
        if len(deck) != 1:
            raise InconsistentDeckError("a 0-deletion deck must have exactly one member")
        return mu, CaseTrace(Branch.JOIN_COMPLETE, mu, 0)
    if n < k * k + 2 * k:
        raise BoundNotMetError(f"n={n} is below k^2+2k={k * k + 2 * k} for k={k}")
    if mu.weight > n:
        raise InconsistentDeckError(f"deck join has weight {mu.weight} > n={n}")

    deficit = n - mu.weight
    r, c = threshold_lines(mu, k)
    trace = CaseTrace(Branch.JOIN_COMPLETE, mu, deficit, r, c)

    if deficit == 0:
        return _pick([(mu, trace)], deck, validation)

    if mu.length < k:
        if r is None:
            raise InconsistentDeckError(f"deck join {mu} has no row with {k} cells")
        lam = _extend_row(mu, r, deficit)
        candidates = [] if lam is None else [(lam, replace(trace, branch=Branch.FEW_ROWS))]
        return _pick(candidates, deck, validation)

    if mu.parts[0] < k:
        lam, inner = reconstruct(deck.conjugate(), validation)
        if inner.branch is not Branch.FEW_ROWS:
            raise InconsistentDeckError("transposed deck did not reduce to the few-rows case")
        return conjugate(lam), replace(trace, branch=Branch.FEW_COLS)

    row_end = mu.part(r)
    col_end = conjugate(mu).part(c)

    if c <= row_end and not (c == row_end and r == col_end):
        # row r and column c cross inside mu
        quads = quadrant_profile(mu, k)
        row_side, col_side = quads.q1 > k, quads.q3 > k
        if row_side == col_side:
            raise InconsistentDeckError(
                f"cannot place {deficit} missing cells: quadrant counts {quads}"
            )
        if row_side:
            lam, ext = _extend_row(mu, r, deficit), Extension.ROW_R
        else:
            lam, ext = _extend_col(mu, c, deficit), Extension.COL_C
        branch_trace = replace(trace, branch=Branch.INTERIOR_INTERSECTION, extended=ext)
        candidates = [] if lam is None else [(lam, branch_trace)]
        return _pick(candidates, deck, validation)

    if c <= row_end:
        # (r, c) is an inner corner of mu
        if deficit != 1:
            raise InconsistentDeckError(f"inner-corner case needs deficit 1, got {deficit}")
        candidates = []
        for cell in (Cell(r, c + 1), Cell(r + 1, c)):
            if is_addable(mu, cell):
                candidates.append(
                    (add_cell(mu, cell), replace(trace, branch=Branch.INNER_CORNER, added=cell))
                )
        return _pick(candidates, deck, validation)

    # row r ends before column c: the lines do not meet
    if row_end < c - 1 or col_end < r - 1:
        raise InconsistentDeckError(f"deck join {mu} is forced but {deficit} cells are missing")
    if deficit != 1:
        raise InconsistentDeckError(f"disjoint case needs deficit 1, got {deficit}")
    cell = Cell(r, c)
    candidates = []
    if is_addable(mu, cell):
        candidates.append((add_cell(mu, cell), replace(trace, branch=Branch.DISJOINT, added=cell)))
    return _pick(candidates, deck, validation)
