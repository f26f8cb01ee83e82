import pytest

from invcensus.census import CensusProblem, generating_series, invariant_count
from invcensus.errors import ResourceLimitError
from invcensus.series import Series

TWO_BY_TWO = [1, 1, 4, 6, 16, 23, 52, 77, 150, 224, 396, 583]


def test_two_by_two_golden_counts():
    problem = CensusProblem(2, 2)
    assert invariant_count(problem, 2) == 4
    assert invariant_count(problem, 8) == 150


def test_two_by_two_series_through_degree_11():
    assert generating_series(CensusProblem(2, 2), 11) == Series(TWO_BY_TWO)


def test_single_site_is_all_ones():
    assert generating_series(CensusProblem(1, 1), 5) == Series([1] * 6)
    assert invariant_count(CensusProblem(1, 1), 9) == 1


def test_degree_zero():
    assert generating_series(CensusProblem(2, 2), 0) == Series([1])
    for dims in [(1, 1), (2, 1), (3, 2)]:
        assert invariant_count(CensusProblem(*dims), 0) == 1


def test_qubit_times_trivial_counts():
    # single-subsystem invariants: one generator each at degrees 1 and 2
    expected = [n // 2 + 1 for n in range(9)]
    assert list(generating_series(CensusProblem(2, 1), 8)) == expected
    assert list(generating_series(CensusProblem(1, 2), 8)) == expected


def test_degree_one_count_is_always_one():
    for n1 in range(1, 4):
        for n2 in range(1, 4):
            assert invariant_count(CensusProblem(n1, n2), 1) == 1


def test_swap_symmetry():
    for n1, n2 in [(1, 2), (1, 3), (2, 3)]:
        for n in range(6):
            assert invariant_count(CensusProblem(n1, n2), n) == invariant_count(
                CensusProblem(n2, n1), n
            )


def test_monotone_in_dimensions():
    for n in range(7):
        f11 = invariant_count(CensusProblem(1, 1), n)
        f21 = invariant_count(CensusProblem(2, 1), n)
        f22 = invariant_count(CensusProblem(2, 2), n)
        f32 = invariant_count(CensusProblem(3, 2), n)
        assert f11 <= f21 <= f22 <= f32


def test_part_bound_derivation():
    assert CensusProblem(2, 2).part_bound == 4
    assert CensusProblem(2, 1).part_bound == 1
    assert CensusProblem(3, 2).part_bound == 4


def test_degree_limit_enforced():
    problem = CensusProblem(2, 2)
    with pytest.raises(ResourceLimitError, match="exceeds"):
        invariant_count(problem, 13)
    with pytest.raises(ResourceLimitError):
        generating_series(problem, 13)
    # explicit override allows it
    assert invariant_count(CensusProblem(1, 1), 13, degree_limit=13) == 1


def test_invalid_problems_rejected():
    with pytest.raises(ValueError):
        CensusProblem(0, 2)
    with pytest.raises(ValueError):
        invariant_count(CensusProblem(1, 1), -1)
    with pytest.raises(ValueError):
        generating_series(CensusProblem(1, 1), -1)
