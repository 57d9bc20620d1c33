import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis.strategies import text

from measures.oracles import brute_force_chi, brute_force_extensions, brute_force_sre
from measures.suffixient import chi, lcp_intervals, right_extensions, smallest_suffixient_set, sre, super_maximal_extensions
from util.errors import BudgetExceededError, ContractError
from words.alphabets import Alphabet
from words.strings import SymbolString, terminate


def test_worked_example():
    w = SymbolString.parse("aabaa$")
    report = smallest_suffixient_set(w)
    assert report.right_extensions == {"a", "b", "$", "aa", "ab", "a$", "aab", "aa$"}
    assert report.super_maximal == {"aa", "aab", "aa$"}
    assert report.chi == 3
    assert report.suffixient_positions == {1, 2, 5}
    assert report.witness == {"aa": 1, "aab": 2, "aa$": 5}


def test_extension_sets_match_oracle_on_example():
    w = SymbolString.parse("aabaa$")
    everything, supers = brute_force_extensions(w)
    assert right_extensions(w) == everything
    assert super_maximal_extensions(w) == supers


def test_chi_goldens():
    assert chi(SymbolString.parse("332222111$")) == 6
    assert chi(SymbolString.parse("1100$")) == 4
    assert chi(SymbolString.parse("a$")) == 2
    assert chi(SymbolString.parse("aaaa$")) == 2


def test_sre_of_unterminated_words():
    assert sre(SymbolString.parse("a")) == 0
    assert sre(SymbolString.parse("aaaa")) == 0
    assert sre(SymbolString.parse("0001011100")) == 8


def test_chi_needs_terminated_word():
    with pytest.raises(ContractError):
        chi(SymbolString.parse("aabaa"))
    with pytest.raises(ContractError):
        sre(SymbolString.parse("a$a"))
    with pytest.raises(ContractError):
        smallest_suffixient_set(SymbolString.parse("aabaa"))


def test_lazy_report_skips_extensions():
    report = smallest_suffixient_set(SymbolString.parse("aabaa$"), with_extensions=False)
    assert report.right_extensions is None
    assert report.sre == 3


def test_lcp_intervals_visit_root_last():
    nodes = list(lcp_intervals(np.array([0, 0, 1, 2, 1, 0])))
    assert nodes[-1].depth == 0
    assert (nodes[-1].lb, nodes[-1].rb) == (0, 5)
    assert sorted((node.depth, node.lb, node.rb) for node in nodes[:-1]) == [(1, 1, 4), (2, 2, 3)]


def test_oracle_cap():
    w = terminate(SymbolString.parse("ab" * 20))
    with pytest.raises(BudgetExceededError):
        brute_force_chi(w, cap=10)
    assert brute_force_chi(w, cap=100) == chi(w)


def test_seeded_random_words_match_oracle():
    rng = np.random.default_rng(20240601)
    for _ in range(1000):
        sigma = int(rng.integers(2, 5))
        n = int(rng.integers(1, 201))
        w = SymbolString.from_ranks(rng.integers(0, sigma, size=n), Alphabet.default(sigma))
        terminated = terminate(w)
        report = smallest_suffixient_set(terminated, with_extensions=False)
        assert report.chi == brute_force_chi(terminated), str(w)
        rendered = str(terminated)
        for extension, position in report.witness.items():
            assert rendered[: position + 1].endswith(extension), (str(w), extension, position)
        assert sre(w) == brute_force_sre(w), str(w)


@settings(derandomize=True, max_examples=200)
@given(word=text(alphabet="ab", min_size=1, max_size=60))
def test_binary_extensions_match_oracle(word):
    w = terminate(SymbolString.parse(word, Alphabet("ab")))
    everything, supers = brute_force_extensions(w)
    report = smallest_suffixient_set(w)
    assert report.right_extensions == everything
    assert report.super_maximal == supers
    assert len(report.suffixient_positions) == len(supers)
