from math import factorial

import pytest
from hypothesis import given

from oracles import brute_partitions, brute_transpose, count_syt_by_permutations
from schurcalc.errors import BoundExceeded, EmptyPartition, ParseError
from schurcalc.partitions import (
    EMPTY,
    Partition,
    add_box_options,
    contains,
    count_standard_tableaux,
    format_partition,
    has_cell,
    hook_lengths,
    is_rectangular,
    parse_partition,
    partitions_inside,
    partitions_of,
    partitions_up_to,
    rectangle,
    specht_dim,
    transpose,
)
from strategies import partitions


class TestParse:
    def test_basic(self):
        lam = parse_partition("5,2,2,1")
        assert lam.parts == (5, 2, 2, 1)
        assert lam.size == 10

    def test_zero_is_empty(self):
        lam = parse_partition("0")
        assert lam == EMPTY and lam.size == 0

    @pytest.mark.parametrize("text", ["2,3", "", "a", "1,,1", "-1", "2,0,1", "1.5"])
    def test_rejects(self, text):
        with pytest.raises(ParseError):
            parse_partition(text)

    def test_whitespace_tolerated(self):
        assert parse_partition(" 3, 1 ") == Partition((3, 1))

    @given(partitions())
    def test_round_trip(self, lam):
        assert parse_partition(format_partition(lam)) == lam

    def test_format_empty(self):
        assert format_partition(EMPTY) == "0"


def test_partition_rejects_bad_parts():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, -1))


def test_trailing_zeros_dropped():
    assert Partition.from_parts((3, 1, 0, 0)) == Partition((3, 1))


def test_part_lookup_past_end():
    lam = Partition((3, 1))
    assert (lam.part(1), lam.part(2), lam.part(3)) == (3, 1, 0)


class TestTranspose:
    def test_row_to_column(self):
        for n in range(1, 7):
            assert transpose(Partition((n,))) == Partition((1,) * n)
        assert transpose(Partition((3,))) == Partition((1, 1, 1))

    def test_rectangle(self):
        assert transpose(Partition((3, 3))) == Partition((2, 2, 2))
        for p in range(1, 5):
            for q in range(1, 5):
                assert transpose(rectangle(p, q)) == rectangle(q, p)

    def test_worked(self):
        assert transpose(Partition((5, 2, 2, 1))) == Partition((4, 3, 1, 1, 1))

    def test_against_cell_flip(self):
        for lam in partitions_up_to(8):
            assert tuple(transpose(lam)) == brute_transpose(tuple(lam))

    @given(partitions(max_size=10))
    def test_involution(self, lam):
        t = transpose(lam)
        assert transpose(t) == lam
        assert t.size == lam.size


def test_rectangle_orientation():
    # q rows of length p
    assert rectangle(3, 2) == Partition((3, 3))
    assert rectangle(1, 3) == Partition((1, 1, 1))
    assert is_rectangular(rectangle(3, 2)) == (3, 2)


class TestContains:
    def test_examples(self):
        assert contains(Partition((2, 1)), Partition((5, 2, 2, 1)))
        assert not contains(Partition((2, 2)), Partition((3, 1)))
        assert contains(EMPTY, Partition((1,)))

    @given(partitions(max_size=10))
    def test_reflexive(self, lam):
        assert contains(lam, lam)

    def test_transpose_compatible(self):
        parts = partitions_up_to(8)
        for mu in parts:
            for lam in parts:
                assert contains(mu, lam) == contains(transpose(mu), transpose(lam))

    def test_matches_cell_sets(self):
        def cells(lam):
            return {(i, j) for i, r in enumerate(lam) for j in range(r)}

        parts = partitions_up_to(6)
        for mu in parts:
            for lam in parts:
                assert contains(mu, lam) == (cells(mu) <= cells(lam))


class TestCells:
    def test_examples(self):
        lam = Partition((5, 2, 2, 1))
        assert has_cell(lam, 1, 5)
        assert not has_cell(lam, 2, 3)
        assert not has_cell(EMPTY, 1, 1)
        assert has_cell(Partition((1,)), 1, 1)

    def test_cell_is_rectangle_containment(self):
        for lam in partitions_up_to(10):
            for i in range(1, 7):
                for j in range(1, 7):
                    assert has_cell(lam, i, j) == contains(rectangle(j, i), lam)


class TestRectangular:
    def test_examples(self):
        assert is_rectangular(Partition((2, 2, 2))) == (2, 3)
        assert is_rectangular(Partition((3, 1))) is None
        assert is_rectangular(Partition((4,))) == (4, 1)
        assert is_rectangular(EMPTY) is None


class TestEnumeration:
    def test_small(self):
        assert partitions_of(0) == [EMPTY]
        assert partitions_of(4) == [
            Partition(p) for p in [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
        ]
        assert len(partitions_of(6)) == 11

    def test_against_compositions(self):
        for n in range(0, 11):
            got = partitions_of(n)
            assert len(set(got)) == len(got)
            assert {tuple(p) for p in got} == brute_partitions(n)

    def test_partition_numbers(self):
        # p(n) for n = 0..20
        known = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385, 490, 627]
        assert [len(partitions_of(n)) for n in range(21)] == known

    def test_reverse_lex_order(self):
        for n in range(1, 9):
            got = [tuple(p) for p in partitions_of(n)]
            assert got == sorted(got, reverse=True)

    def test_bound(self):
        with pytest.raises(BoundExceeded):
            partitions_of(31)
        with pytest.raises(BoundExceeded):
            partitions_of(5, bound=4)

    def test_up_to_and_inside(self):
        assert len(partitions_up_to(4)) == 1 + 1 + 2 + 3 + 5
        inside = set(partitions_inside(Partition((2, 1))))
        assert inside == {EMPTY, Partition((1,)), Partition((2,)), Partition((1, 1)), Partition((2, 1))}

    @given(partitions(max_size=8))
    def test_inside_is_containment(self, lam):
        inside = set(partitions_inside(lam))
        expect = {mu for mu in partitions_up_to(lam.size) if contains(mu, lam)}
        assert inside == expect


class TestSpechtDim:
    def test_examples(self):
        for n in range(1, 8):
            assert specht_dim(Partition((n,))) == 1
        assert specht_dim(Partition((2, 1))) == 2
        assert specht_dim(Partition((3, 2))) == 5
        assert sorted(hook_lengths(Partition((3, 2)))) == [1, 1, 2, 3, 4]

    def test_empty(self):
        with pytest.raises(EmptyPartition):
            specht_dim(EMPTY)

    def test_brute_tableaux(self):
        for n in range(1, 7):
            for lam in partitions_of(n):
                assert specht_dim(lam) == count_syt_by_permutations(tuple(lam))

    def test_tableau_recursion(self):
        for n in range(1, 11):
            for lam in partitions_of(n):
                assert specht_dim(lam) == count_standard_tableaux(lam)

    def test_sum_of_squares(self):
        for n in range(1, 9):
            assert sum(specht_dim(lam) ** 2 for lam in partitions_of(n)) == factorial(n)

    def test_largest_fits(self):
        # largest dimension for n = 12
        assert max(specht_dim(lam) for lam in partitions_of(12)) == 7700


def test_add_box_branching():
    # dim V_λ = Σ over ways of adding a box to shapes of size n-1 (branching rule)
    for n in range(2, 9):
        totals = {lam: 0 for lam in partitions_of(n)}
        for mu in partitions_of(n - 1):
            for lam in add_box_options(mu):
                totals[lam] += specht_dim(mu)
        assert all(totals[lam] == specht_dim(lam) for lam in totals)
