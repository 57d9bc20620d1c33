"""
Fibonacci-form LFSRs over GF(2), m-sequences and conjugate-pair cycle joining

A state x_t = (s_t, ..., s_{t+k-1}) is held as an integer with s_t in the most significant bit,
so the successor is a shift, a parity of the tapped bits and an optional constant.
"""

import logging
from typing import Literal, Optional, Tuple

try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator

from fields.polynomials import F2Poly, is_primitive, reciprocal, trinomial
from util.errors import BudgetExceededError, ContractError, NotInFamilyError, VerificationFailure
from util.setup import settings
from words.alphabets import Alphabet
from words.strings import CyclicWord, complement, reverse

logger = logging.getLogger(__name__)

BINARY = Alphabet.declared("binary")

Mode = Literal["raw", "reversed_complemented"]


class LfsrState(BaseModel):
    """
    A k-bit register content, first bit oldest
    """

    model_config = ConfigDict(frozen=True)

    bits: Tuple[int, ...]

    @field_validator("bits")
    @classmethod
    def check_bits(cls, bits):
        if not bits or any(bit not in (0, 1) for bit in bits):
            raise ContractError(f"A state is a non-empty tuple of bits, got {bits}")
        return bits

    @property
    def k(self) -> int:
        return len(self.bits)

    @property
    def value(self) -> int:
        return int("".join(map(str, self.bits)), 2)

    @classmethod
    def of_int(cls, value: int, k: int) -> Self:
        return cls(bits=tuple((value >> (k - 1 - i)) & 1 for i in range(k)))

    @classmethod
    def parse(cls, text: str) -> Self:
        return cls(bits=tuple(int(char) for char in text))

    def __str__(self) -> str:
        return "".join(map(str, self.bits))


def _tap_mask(c: F2Poly) -> int:
    k = c.degree
    return sum(1 << (k - 1 - i) for i in c.taps)


def _step(state: int, taps: int, full: int, constant: int = 0) -> int:
    bit = ((state & taps).bit_count() & 1) ^ constant
    return ((state << 1) & full) | bit


def successor(c: F2Poly, x: LfsrState) -> LfsrState:
    """
    F(x_0, ..., x_{k-1}) = (x_1, ..., x_{k-1}, XOR of c_i x_i)
    :param c: the characteristic polynomial of degree k
    :param x: a state of length k
    :return: the next state
    """
    k = c.degree
    if x.k != k:
        raise ContractError(f"State {x} has length {x.k}, the polynomial has degree {k}")
    return LfsrState.of_int(_step(x.value, _tap_mask(c), (1 << k) - 1), k)


def _check_size(k: int) -> None:
    budget = settings().size_budget
    if (1 << k) > budget:
        raise BudgetExceededError(f"A cycle of length 2^{k} exceeds the size budget {budget}")


def _as_cycle(bits: bytearray, k: int) -> CyclicWord:
    codes = np.frombuffer(bytes(bits), dtype=np.uint8).astype(np.int64) + 1
    return CyclicWord(codes, BINARY, k)


def m_sequence(c: F2Poly, seed: LfsrState) -> CyclicWord:
    """
    Iterate F from a non-zero seed until it returns, emitting the oldest bit of each state
    :param c: a primitive polynomial of degree k
    :param seed: any non-zero state
    :return: the cycle of length 2^k - 1
    """
    k = c.degree
    if seed.k != k:
        raise ContractError(f"Seed {seed} has length {seed.k}, the polynomial has degree {k}")
    if seed.value == 0:
        raise ContractError("The all-zero state is a fixed point; seed with a non-zero state")
    if not is_primitive(c):
        raise ContractError(f"{c} is not primitive; its non-zero states split into several cycles")
    _check_size(k)
    taps, full, top = _tap_mask(c), (1 << k) - 1, k - 1
    period = (1 << k) - 1
    bits = bytearray(period)
    state = seed.value
    for t in range(period):
        bits[t] = state >> top
        state = _step(state, taps, full)
    if state != seed.value:
        raise VerificationFailure(f"{c} did not return to the seed after {period} steps")
    return _as_cycle(bits, k)


class JoinedLfsr:
    """
    An LFSR whose successor swaps at a conjugate pair (u, v)
    The swap is the term omega = [x = u] XOR [x = v] added to the feedback bit.
    """

    poly: F2Poly
    pair: Tuple[LfsrState, LfsrState]
    mode: Mode
    constant: int

    def __init__(self, poly: F2Poly, pair: Tuple[LfsrState, LfsrState], mode: Mode = "raw", constant: int = 0):
        """
        :param poly: the polynomial whose taps drive the feedback
        :param pair: two states of length k sharing their last k-1 bits
        :param mode: raw, or the reversed-and-complemented reading of a raw recurrence
        :param constant: a bit added to every feedback value
        """
        self.poly = poly
        self.pair = pair
        self.mode = mode
        self.constant = constant
        u, v = pair
        k = poly.degree
        if u.k != k or v.k != k:
            raise ContractError(f"Pair states must have length {k}")
        if u.bits[1:] != v.bits[1:] or u.bits[0] == v.bits[0]:
            raise ContractError(f"({u}, {v}) is not a conjugate pair")
        self._taps = _tap_mask(poly)
        self._full = (1 << k) - 1
        self._joined = (u.value, v.value)

    def __repr__(self) -> str:
        u, v = self.pair
        return f"JoinedLfsr({self.poly}, pair=({u}, {v}), mode={self.mode}, constant={self.constant})"

    @property
    def k(self) -> int:
        return self.poly.degree

    def _next(self, state: int) -> int:
        omega = 1 if state in self._joined else 0
        return _step(state, self._taps, self._full, self.constant ^ omega)

    def successor(self, x: LfsrState) -> LfsrState:
        return LfsrState.of_int(self._next(x.value), self.k)

    def cycle(self, start: Optional[LfsrState] = None) -> CyclicWord:
        """
        The joined cycle read from start (all-zero by default)
        :raises VerificationFailure: if the successor map is not a single cycle through 2^k states
        """
        k = self.k
        _check_size(k)
        first = start.value if start is not None else 0
        top = k - 1
        length = 1 << k
        bits = bytearray(length)
        state = first
        for t in range(length):
            bits[t] = state >> top
            state = self._next(state)
            if state == first and t < length - 1:
                raise VerificationFailure(f"{self} closed a cycle of length {t + 1} < 2^{k}")
        if state != first:
            raise VerificationFailure(f"{self} did not return to its start after 2^{k} steps")
        return _as_cycle(bits, k)


def cycle_join(c: F2Poly) -> JoinedLfsr:
    """
    Join the main m-sequence cycle with the all-zero self-loop at the pair (0^k, 10^{k-1})
    """
    if not is_primitive(c):
        raise ContractError(f"{c} is not primitive; the two-cycle join needs an m-sequence")
    k = c.degree
    zero = LfsrState.of_int(0, k)
    lead = LfsrState.of_int(1 << (k - 1), k)
    return JoinedLfsr(c, (zero, lead))


def transformed_pair(raw: JoinedLfsr) -> Tuple[LfsrState, LfsrState]:
    """
    The joined states seen by the reversed-and-complemented stream
    Reading a stream backwards turns predecessors into successors, so the states whose successor
    changes are the reversed, complemented images of the raw joined states' new successors.
    """
    k = raw.k
    mask = (1 << k) - 1
    images = []
    for state in raw.pair:
        image = raw.successor(state).bits[::-1]
        images.append(LfsrState.of_int(LfsrState(bits=image).value ^ mask, k))
    return images[1], images[0]


def transformed_lfsr(c: F2Poly) -> JoinedLfsr:
    """
    The recurrence driven by the reciprocal of C, complemented, and joined at the transformed pair
    Complementing adds the constant 1 + (number of reciprocal taps) to the feedback.
    """
    raw = cycle_join(c)
    star = reciprocal(c)
    constant = (len(star.taps) + 1) & 1
    return JoinedLfsr(star, transformed_pair(raw), mode="reversed_complemented", constant=constant)


def joined_transformed_sequence(k: int) -> CyclicWord:
    """
    The de Bruijn cycle of the transformed, joined recurrence s_{t+k} = s_{t+k-1} + s_t + 1 + omega
    It is generated from the recurrence and checked against reverse-then-complement of the raw
    joined cycle of T_k.
    :param k: an order with x^k + x + 1 primitive
    :return: the cycle read from 0^k
    """
    t_k = trinomial(k)
    if not is_primitive(t_k):
        raise NotInFamilyError(f"x^{k}+x+1 is not primitive; no transformed joined recurrence for k = {k}")
    generator = transformed_lfsr(t_k)
    cycle = generator.cycle()
    expected = complement(reverse(cycle_join(t_k).cycle()))
    if not cycle.is_rotation_of(expected):
        raise VerificationFailure(
            f"The transformed recurrence for k = {k} disagrees with the transformed raw cycle",
            mismatch=f"recurrence: {str(cycle)[:64]}\ntransform:  {str(expected)[:64]}",
        )
    logger.info(f"Transformed joined recurrence for k = {k} uses pair {tuple(map(str, generator.pair))}")
    return cycle
