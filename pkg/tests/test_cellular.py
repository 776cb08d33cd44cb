import itertools
from collections import Counter

import pytest

from motcalc.cellular import (
    ExplicitCellular,
    Grassmannian,
    Homogeneous,
    ProjectiveSpace,
    cell_count,
    fibre_dimension,
    fibre_motive,
    format_fibre,
    parse_fibre,
)
from motcalc.errors import DomainError, OrbitCapExceeded, ParseError
from motcalc.tate import TateMotive, is_self_dual, rank, unit


def partition_profile(d, n):
    return TateMotive(Counter(sum(p) for p in itertools.combinations_with_replacement(range(n - d + 1), d)))


def test_fibre_motive_examples():
    assert fibre_motive(ProjectiveSpace(3)).mult == {0: 1, 1: 1, 2: 1, 3: 1}
    assert fibre_motive(Grassmannian(2, 4)).mult == {0: 1, 1: 1, 2: 2, 3: 1, 4: 1}
    assert fibre_motive(ExplicitCellular((0,))) == unit()
    assert fibre_motive(ExplicitCellular((2, 0, 1, 1))).mult == {0: 1, 1: 2, 2: 1}


def test_fibre_dimension_examples():
    assert fibre_dimension(Grassmannian(2, 5)) == 6
    assert fibre_dimension(ProjectiveSpace(1)) == 1
    assert fibre_dimension(Homogeneous("A", 2, frozenset())) == 3
    assert fibre_dimension(ExplicitCellular((0, 3, 1))) == 3


def test_degenerate_grassmannians_are_points():
    assert fibre_motive(Grassmannian(0, 5)) == unit()
    assert fibre_motive(Grassmannian(5, 5)) == unit()
    assert fibre_dimension(Grassmannian(5, 5)) == 0


@pytest.mark.parametrize("n", range(2, 11))
def test_grassmannian_against_partitions(n):
    for d in range(0, n + 1):
        assert fibre_motive(Grassmannian(d, n)) == partition_profile(d, n)


@pytest.mark.parametrize("n", range(2, 9))
def test_grassmannian_identities(n):
    for d in range(1, n):
        g = fibre_motive(Grassmannian(d, n))
        assert g == fibre_motive(Grassmannian(n - d, n))
        levi = frozenset(i for i in range(1, n) if i != d)
        assert g == fibre_motive(Homogeneous("A", n - 1, levi))
        assert is_self_dual(g, fibre_dimension(Grassmannian(d, n)))
    assert fibre_motive(Grassmannian(1, n)) == fibre_motive(ProjectiveSpace(n - 1))


@pytest.mark.parametrize(
    "f",
    [ProjectiveSpace(4), Grassmannian(3, 7), Homogeneous("B", 3, frozenset({2})), Homogeneous("G", 2, frozenset()), ExplicitCellular((0, 1, 1, 2))],
)
def test_rank_is_cell_count_and_self_dual(f):
    m = fibre_motive(f)
    assert rank(m) == cell_count(f)
    assert is_self_dual(m, fibre_dimension(f))


def test_explicit_cells_need_not_be_self_dual():
    f = ExplicitCellular((0, 1, 1))
    assert not is_self_dual(fibre_motive(f), fibre_dimension(f))


def test_homogeneous_cap():
    with pytest.raises(OrbitCapExceeded):
        fibre_motive(Homogeneous("E", 8, frozenset()))


@pytest.mark.parametrize(
    "make",
    [
        lambda: ProjectiveSpace(0),
        lambda: Grassmannian(3, 2),
        lambda: Grassmannian(-1, 2),
        lambda: Homogeneous("A", 2, frozenset({3})),
        lambda: Homogeneous("Q", 2),
        lambda: ExplicitCellular(()),
        lambda: ExplicitCellular((0, -1)),
    ],
)
def test_invalid_specs(make):
    with pytest.raises(DomainError):
        make()


@pytest.mark.parametrize(
    "text,expected",
    [
        ("P 3", ProjectiveSpace(3)),
        ("p 1", ProjectiveSpace(1)),
        ("Gr 2 4", Grassmannian(2, 4)),
        ("  Gr   2  5 ", Grassmannian(2, 5)),
        ("GP A 3 levi=1,3", Homogeneous("A", 3, frozenset({1, 3}))),
        ("GP G 2", Homogeneous("G", 2, frozenset())),
        ("GP B 3 levi=", Homogeneous("B", 3, frozenset())),
        ("cells 0,1,1,2", ExplicitCellular((0, 1, 1, 2))),
    ],
)
def test_parse_fibre(text, expected):
    f = parse_fibre(text)
    assert f == expected
    assert parse_fibre(format_fibre(f)) == f


@pytest.mark.parametrize(
    "text,column",
    [
        ("", 1),
        ("Q 3", 1),
        ("P x", 3),
        ("Gr 2", 5),
        ("Gr 2 4 9", 8),
        ("GP A 3 levi=1,x", 15),
        ("GP A 3 lev=1", 8),
        ("cells 0,,1", 9),
        ("Gr 5 3", 1),
    ],
)
def test_parse_errors_carry_column(text, column):
    with pytest.raises(ParseError) as info:
        parse_fibre(text)
    assert info.value.line == 1
    assert info.value.column == column
