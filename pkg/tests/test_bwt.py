import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis.strategies import text

from transforms.bwt import bwt, cbwt, count_cycles, count_runs, invert_bwt, lf_mapping, matrix_bwt, r_measures
from util.errors import ContractError
from words.alphabets import Alphabet
from words.strings import CyclicWord, SymbolString, rotate, terminate


def test_bwt_goldens():
    assert str(bwt(SymbolString.parse("aabaa$")).last_column) == "aab$aa"
    clustered = bwt(SymbolString.parse("332222111$", Alphabet("123")))
    assert str(clustered.last_column) == "111222233$"
    assert clustered.runs == 4
    assert str(bwt(SymbolString.parse("00010111$")).last_column) == "1$0011010"


def test_bwt_needs_terminated_word():
    with pytest.raises(ContractError):
        bwt(SymbolString.parse("aabaa"))


def test_cbwt_goldens():
    assert str(cbwt(CyclicWord.of("00010111")).last_column) == "10011010"
    assert cbwt(CyclicWord.of("00010111")).runs == 6
    assert str(cbwt(CyclicWord.of("0011")).last_column) == "1010"
    assert str(cbwt(CyclicWord.of("abab")).last_column) == "bbaa"


def test_count_runs():
    assert count_runs(SymbolString.parse("aab$aa")) == 4
    assert count_runs(SymbolString.parse("a")) == 1
    with pytest.raises(ContractError):
        count_runs(SymbolString([], Alphabet("a")))


def test_lf_mapping_and_cycles():
    column = SymbolString.parse("aab$aa")
    assert lf_mapping(column).tolist() == [1, 2, 5, 0, 3, 4]
    assert count_cycles(np.array([1, 0, 2])) == 2
    assert count_cycles(np.array([1, 2, 0])) == 1


def test_invert_valid_and_invalid():
    inversion = invert_bwt(SymbolString.parse("1$0011010", Alphabet("01")))
    assert inversion.is_valid
    assert str(inversion.text) == "00010111$"
    assert not invert_bwt(SymbolString.parse("a$a", Alphabet("a"))).is_valid
    assert invert_bwt(SymbolString.parse("$aa", Alphabet("a"))).cycles == 3
    with pytest.raises(ContractError):
        invert_bwt(SymbolString.parse("aa", Alphabet("a")))


def test_r_measures():
    counts = r_measures(SymbolString.parse("a"))
    assert (counts.r, counts.r_bar, counts.r_c) == (2, 2, 1)
    counts = r_measures(SymbolString.parse("332222111"))
    assert counts.r == 4
    with pytest.raises(ContractError):
        r_measures(SymbolString.parse("ab$"))


@settings(derandomize=True, max_examples=100, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(word=text(alphabet="acgt", min_size=1, max_size=512))
def test_bwt_matches_matrix_and_inverts(word):
    w = terminate(SymbolString.parse(word, Alphabet("acgt")))
    output = bwt(w)
    assert output.last_column == matrix_bwt(w).last_column
    inversion = invert_bwt(output.last_column)
    assert inversion.is_valid
    assert inversion.text == w
    assert np.array_equal(output.last_column.symbol_counts(), w.symbol_counts())


def test_cbwt_ignores_the_cut_and_keeps_symbols():
    rng = np.random.default_rng(5)
    for _ in range(200):
        sigma = int(rng.integers(2, 5))
        n = int(rng.integers(1, 97))
        c = CyclicWord(rng.integers(1, sigma + 1, size=n), Alphabet.default(sigma))
        column = cbwt(c).last_column
        assert np.array_equal(column.symbol_counts(), c.as_string().symbol_counts())
        for cut in rng.integers(0, n, size=3):
            assert cbwt(CyclicWord.of(rotate(c, int(cut)))).last_column == column
