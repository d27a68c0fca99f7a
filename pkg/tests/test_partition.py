from itertools import product

import pytest
from hypothesis import given, settings

from conftest import SMALL, cell_set, from_cells, partitions_st
from deckrecon import (
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
from deckrecon.errors import (
    IncreasingPartsError,
    NegativePartError,
    NotAddableError,
    NotAnInnerCornerError,
    NotContainedError,
    WeightOverflowError,
)
from deckrecon.partition import U64_MAX

P = lambda *parts: Partition(parts)  # noqa: E731


class TestConstruction:
    def test_normalize_strips_zeros(self):
        assert normalize([3, 1, 0]) == P(3, 1)

    def test_normalize_empty(self):
        lam = normalize([])
        assert lam == EMPTY
        assert lam.weight == 0 and lam.length == 0

    def test_rejects_increasing(self):
        with pytest.raises(IncreasingPartsError):
            normalize([1, 2])

    def test_rejects_negative(self):
        with pytest.raises(NegativePartError):
            normalize([2, -1])

    def test_weight_overflow_is_checked(self):
        Partition((U64_MAX,))
        with pytest.raises(WeightOverflowError):
            Partition((U64_MAX, 1))

    def test_cell_coordinates_validated(self):
        with pytest.raises(ValueError):
            Cell(0, 1)

    def test_part_is_one_indexed(self):
        lam = P(4, 3, 1)
        assert [lam.part(i) for i in (1, 2, 3, 4)] == [4, 3, 1, 0]

    def test_cell_membership(self):
        lam = P(3, 1)
        assert Cell(1, 3) in lam
        assert Cell(2, 2) not in lam
        assert Cell(3, 1) not in lam

    def test_canonical_text(self):
        assert str(P(4, 3, 1)) == "4 3 1"
        assert str(EMPTY) == "-"


class TestLatticeExamples:
    def test_contains(self):
        assert contains(P(2, 2), P(3, 2, 1))
        assert contains(P(5, 3), P(5, 3))
        assert not contains(P(3, 3, 1), P(3, 2, 2))

    def test_skew_size(self):
        assert skew_size(P(3, 2, 1), P(2, 2)) == 2
        assert skew_size(P(3, 2, 1), P(3, 2, 1)) == 0
        with pytest.raises(NotContainedError):
            skew_size(P(2, 2), P(3, 2, 1))

    def test_join(self):
        assert join(P(3, 2), P(2, 2, 1)) == P(3, 2, 1)
        assert join(P(4, 1), EMPTY) == P(4, 1)
        assert join(P(3, 3, 1), P(3, 2, 2)) == P(3, 3, 2)

    def test_join_of_negative_pair_is_least_upper_bound(self):
        # oracle: smallest common superpartition among every partition of weight <= 10
        a, b = P(3, 3, 1), P(3, 2, 2)
        uppers = [lam for lam in SMALL if contains(a, lam) and contains(b, lam)]
        least = min(uppers, key=lambda lam: lam.weight)
        assert all(contains(least, lam) for lam in uppers)
        assert least == P(3, 3, 2)

    def test_meet(self):
        assert meet(P(3, 3, 1), P(3, 2, 2)) == P(3, 2, 1)
        assert meet(P(4, 2), P(4, 2)) == P(4, 2)
        assert meet(P(3, 2), P(2, 2, 1)) == P(2, 2)

    def test_conjugate(self):
        assert conjugate(P(4, 2, 1)) == P(3, 2, 1, 1)
        assert conjugate(EMPTY) == EMPTY
        assert conjugate(conjugate(P(5, 3, 3, 1))) == P(5, 3, 3, 1)


class TestCells:
    def test_inner_corners(self):
        assert inner_corners(P(3, 3, 1)) == {Cell(2, 3), Cell(3, 1)}
        assert inner_corners(EMPTY) == set()
        assert inner_corners(P(2, 2, 2)) == {Cell(3, 2)}

    def test_remove_cell(self):
        assert remove_cell(P(3, 3, 1), Cell(3, 1)) == P(3, 3)
        assert remove_cell(P(1), Cell(1, 1)) == EMPTY
        with pytest.raises(NotAnInnerCornerError):
            remove_cell(P(3, 3, 1), Cell(1, 3))

    def test_remove_cell_outside_diagram(self):
        with pytest.raises(NotAnInnerCornerError):
            remove_cell(P(2), Cell(1, 3))

    def test_add_cell(self):
        assert add_cell(P(4, 3), Cell(1, 5)) == P(5, 3)
        assert add_cell(P(4, 3), Cell(2, 4)) == P(4, 4)
        assert add_cell(P(4, 3), Cell(3, 1)) == P(4, 3, 1)
        with pytest.raises(NotAddableError):
            add_cell(P(4, 3), Cell(3, 3))
        with pytest.raises(NotAddableError):
            add_cell(P(4, 3), Cell(5, 1))


# Exhaustive property checks over every partition of weight <= 12.

def test_conjugate_matches_cell_transpose(small_partitions):
    for lam in small_partitions:
        flipped = {(j, i) for i, j in cell_set(lam.parts)}
        assert conjugate(lam).parts == from_cells(flipped)
        assert conjugate(conjugate(lam)) == lam
        assert conjugate(lam).weight == lam.weight


def test_inner_corners_match_removal_definition(small_partitions):
    for lam in small_partitions:
        cells = cell_set(lam.parts)
        removable = set()
        for cell in cells:
            rest = cells - {cell}
            # still a Ferrers diagram iff every remaining cell keeps its up/left neighbours
            if all((i - 1, j) in rest or i == 1 for i, j in rest) and all(
                (i, j - 1) in rest or j == 1 for i, j in rest
            ):
                removable.add(Cell(*cell))
        assert inner_corners(lam) == removable
        for c in removable:
            assert add_cell(remove_cell(lam, c), c) == lam
        for c in cells - {(c.row, c.col) for c in removable}:
            with pytest.raises(NotAnInnerCornerError):
                remove_cell(lam, Cell(*c))


def test_lattice_laws_pairs(small_partitions):
    for a, b in product(small_partitions, repeat=2):
        j, m = join(a, b), meet(a, b)
        assert j == join(b, a) and m == meet(b, a)
        assert meet(a, join(a, b)) == a
        assert join(a, meet(a, b)) == a
        assert contains(a, j) and contains(b, j)
        assert contains(m, a) and contains(m, b)
        le = contains(a, b)
        assert le == (m == a) == (j == b)
        assert le == contains(conjugate(a), conjugate(b))
        assert cell_set(j.parts) == cell_set(a.parts) | cell_set(b.parts)
        assert cell_set(m.parts) == cell_set(a.parts) & cell_set(b.parts)


def test_lattice_idempotence(small_partitions):
    for a in small_partitions:
        assert join(a, a) == a == meet(a, a)
        assert join(a, EMPTY) == a
        assert meet(a, EMPTY) == EMPTY


def test_associativity_exhaustive():
    few = [lam for lam in SMALL if lam.weight <= 6]
    for a, b, c in product(few, repeat=3):
        assert join(join(a, b), c) == join(a, join(b, c))
        assert meet(meet(a, b), c) == meet(a, meet(b, c))


@settings(max_examples=400, deadline=None)
@given(partitions_st, partitions_st, partitions_st)
def test_lattice_laws_random(a, b, c):
    assert join(join(a, b), c) == join(a, join(b, c))
    assert meet(meet(a, b), c) == meet(a, meet(b, c))
    assert meet(a, join(a, b)) == a
    assert join(a, meet(a, b)) == a
    assert contains(a, b) == contains(conjugate(a), conjugate(b))


@settings(max_examples=300, deadline=None)
@given(partitions_st)
def test_conjugate_random(lam):
    assert conjugate(conjugate(lam)) == lam
    assert conjugate(lam).weight == lam.weight
    for j, col in enumerate(conjugate(lam).parts, start=1):
        assert col == sum(1 for p in lam.parts if p >= j)
