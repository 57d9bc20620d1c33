from fractions import Fraction

import numpy as np
import pytest

from families.clustered import (
    ClusteredShape,
    closed_form_ratio,
    clustered_sweep,
    make_clustered,
    make_shape,
    structure_of,
    verify_clustered,
)
from util.errors import ContractError, NotInFamilyError
from words.alphabets import Alphabet
from words.strings import SymbolString


def test_make_clustered():
    assert str(make_clustered(make_shape(3, [2, 4, 3]), Alphabet("123"))) == "332222111"
    assert str(make_clustered(make_shape(2, [2, 2]))) == "1100"
    assert str(make_clustered(make_shape(3, [2, 2, 2]))) == "221100"


def test_spec_contract():
    with pytest.raises(ContractError):
        make_shape(2, [2, 1])
    with pytest.raises(ContractError):
        make_shape(1, [3])
    with pytest.raises(ContractError):
        make_shape(3, [2, 2])


def test_verify_goldens():
    report = verify_clustered(SymbolString.parse("332222111"))
    assert (report.r, report.chi) == (4, 6)
    assert report.ratio.value == Fraction(3, 2)
    assert report.ok
    report = verify_clustered(SymbolString.parse("1100"))
    assert (report.r, report.chi) == (3, 4)
    assert report.ratio.value == Fraction(4, 3)
    report = verify_clustered(SymbolString.parse("221100"))
    assert (report.r, report.chi) == (4, 6)
    assert report.column_ok


def test_membership_is_revalidated():
    assert structure_of(SymbolString.parse("332222111")).exponents == [2, 4, 3]
    with pytest.raises(NotInFamilyError):
        verify_clustered(SymbolString.parse("110"))
    with pytest.raises(NotInFamilyError):
        verify_clustered(SymbolString.parse("0011"))
    with pytest.raises(NotInFamilyError):
        verify_clustered(SymbolString.parse("1111"))


def test_random_members_meet_closed_forms():
    for sigma in range(2, 13):
        reports = clustered_sweep(sigma, 50, seed=7)
        assert len(reports) == 50
        for report in reports:
            assert report.r == sigma + 1
            assert report.chi == 2 * sigma
            assert report.column_ok
            assert report.ratio.value == closed_form_ratio(sigma)


def test_random_spec_is_seeded():
    first = ClusteredShape.random(5, np.random.default_rng(3))
    second = ClusteredShape.random(5, np.random.default_rng(3))
    assert first == second
    assert all(2 <= exponent <= 9 for exponent in first.exponents)


def test_ratio_increases_towards_two():
    ratios = [closed_form_ratio(sigma) for sigma in range(2, 65)]
    assert all(a < b for a, b in zip(ratios, ratios[1:]))
    assert all(ratio < 2 for ratio in ratios)
    assert 2 - ratios[-1] == Fraction(2, 65)
