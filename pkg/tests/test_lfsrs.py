import pytest

from families.debruijn import is_debruijn
from fields.lfsrs import (
    JoinedLfsr,
    LfsrState,
    cycle_join,
    joined_transformed_sequence,
    m_sequence,
    successor,
    transformed_lfsr,
)
from fields.polynomials import F2Poly, trinomial
from util.errors import ContractError, NotInFamilyError
from words.strings import CyclicWord, complement, reverse

T3 = trinomial(3)


def state(text: str) -> LfsrState:
    return LfsrState.parse(text)


def test_successor():
    assert successor(T3, state("001")) == state("010")
    assert successor(T3, state("000")) == state("000")
    assert successor(T3, state("111")) == state("110")
    with pytest.raises(ContractError):
        successor(T3, state("01"))


def test_state_encoding():
    assert state("100").value == 4
    assert LfsrState.of_int(4, 3) == state("100")
    with pytest.raises(ValueError):
        LfsrState(bits=(0, 2))


def test_m_sequence_goldens():
    assert str(m_sequence(T3, state("001"))) == "0010111"
    assert str(m_sequence(trinomial(2), state("01"))) == "011"
    assert m_sequence(T3, state("111")).is_rotation_of(CyclicWord.of("0010111"))


def test_m_sequence_preconditions():
    with pytest.raises(ContractError):
        m_sequence(T3, state("000"))
    with pytest.raises(ContractError):
        m_sequence(trinomial(5), state("00001"))


def test_m_sequence_visits_every_nonzero_state():
    for poly in ["x^2+x+1", "x^3+x+1", "x^4+x+1", "x^5+x^2+1", "x^6+x+1", "x^7+x+1", "x^10+x^3+1"]:
        c = F2Poly.parse(poly)
        k = c.degree
        cycle = m_sequence(c, LfsrState.of_int(1, k))
        windows = set(cycle.window_ids(k).tolist())
        assert len(windows) == (1 << k) - 1
        assert 0 not in windows


def test_cycle_join_goldens():
    joined = cycle_join(T3)
    assert tuple(map(str, joined.pair)) == ("000", "100")
    assert joined.successor(state("000")) == state("001")
    assert joined.successor(state("100")) == state("000")
    assert str(joined.cycle()) == "00010111"
    assert str(cycle_join(trinomial(2)).cycle()) == "0011"
    sixteen = cycle_join(trinomial(4)).cycle()
    assert is_debruijn(sixteen, 2, 4)
    with pytest.raises(ContractError):
        cycle_join(trinomial(5))


def test_joining_changes_only_the_pair():
    for k in [2, 3, 4, 6, 7]:
        c = trinomial(k)
        joined = cycle_join(c)
        changed = [
            value
            for value in range(1 << k)
            if joined.successor(LfsrState.of_int(value, k)) != successor(c, LfsrState.of_int(value, k))
        ]
        assert changed == sorted(pair.value for pair in joined.pair)


def test_conjugate_pair_is_checked():
    with pytest.raises(ContractError):
        JoinedLfsr(T3, (state("000"), state("101")))


def test_transformed_pair():
    generator = transformed_lfsr(trinomial(4))
    assert tuple(map(str, generator.pair)) == ("1111", "0111")
    assert generator.poly == F2Poly.parse("x^4+x^3+1")
    assert generator.constant == 1


def test_joined_transformed_sequence():
    assert str(joined_transformed_sequence(3)) == "00010111"
    assert str(joined_transformed_sequence(2)) == "0011"
    for k in [4, 6, 7, 15]:
        assert is_debruijn(joined_transformed_sequence(k), 2, k)
    with pytest.raises(NotInFamilyError):
        joined_transformed_sequence(5)


def test_complemented_reversal_adds_constant():
    for k in [2, 3, 4, 6, 7]:
        cycle = complement(reverse(m_sequence(trinomial(k), LfsrState.of_int(1, k))))
        bits = (cycle.codes - 1).tolist()
        n = len(bits)
        for t in range(n):
            assert bits[(t + k) % n] == bits[(t + k - 1) % n] ^ bits[t] ^ 1
