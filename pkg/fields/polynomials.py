"""
Polynomials over GF(2), encoded as integer bitmasks: bit i holds the coefficient of x^i
"""

import logging
import re
from functools import lru_cache
from typing import List, Optional

try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

from pydantic import BaseModel, ConfigDict

from util.errors import ContractError, PrimitivityUndecided
from util.setup import settings

logger = logging.getLogger(__name__)

TERM = re.compile(r"^(?:(1|0)|x(?:\^(\d+))?)$")


class F2Poly(BaseModel):
    """
    A polynomial over GF(2); every non-zero polynomial is monic
    """

    model_config = ConfigDict(frozen=True)

    mask: int

    @property
    def degree(self) -> int:
        """
        :return: the degree, -1 for the zero polynomial
        """
        return self.mask.bit_length() - 1

    def coefficient(self, i: int) -> int:
        return (self.mask >> i) & 1

    @property
    def taps(self) -> List[int]:
        """
        :return: the indices i < k with c_i = 1
        """
        return [i for i in range(self.degree) if self.coefficient(i)]

    def __str__(self) -> str:
        if self.mask == 0:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            if self.coefficient(i):
                terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
        return "+".join(terms)

    def __repr__(self) -> str:
        return f"F2Poly({self})"

    @property
    def hex(self) -> str:
        return hex(self.mask)

    @classmethod
    def of_exponents(cls, *exponents: int) -> Self:
        mask = 0
        for exponent in exponents:
            mask ^= 1 << exponent
        return cls(mask=mask)

    @classmethod
    def parse(cls, text: str) -> Self:
        """
        Read caret notation such as "x^4+x+1" or a hex bitmask such as "0x13"
        """
        cleaned = text.replace(" ", "").lower()
        if cleaned.startswith("0x"):
            try:
                return cls(mask=int(cleaned, 16))
            except ValueError:
                raise ContractError(f"Bad hex polynomial {text!r}") from None
        mask = 0
        for term in cleaned.split("+"):
            match = TERM.match(term)
            if not match:
                raise ContractError(f"Bad polynomial term {term!r} in {text!r}")
            constant, power = match.groups()
            if constant is not None:
                mask ^= int(constant)
            else:
                mask ^= 1 << (int(power) if power else 1)
        return cls(mask=mask)


def _mul(a: int, b: int) -> int:
    if a < b:
        a, b = b, a
    product = 0
    while b:
        if b & 1:
            product ^= a
        a <<= 1
        b >>= 1
    return product


def _mod(a: int, m: int) -> int:
    dm = m.bit_length() - 1
    while a and a.bit_length() - 1 >= dm:
        a ^= m << (a.bit_length() - 1 - dm)
    return a


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _mod(a, b)
    return a


def _powmod(base: int, exponent: int, m: int) -> int:
    result = 1
    base = _mod(base, m)
    while exponent:
        if exponent & 1:
            result = _mod(_mul(result, base), m)
        base = _mod(_mul(base, base), m)
        exponent >>= 1
    return _mod(result, m)


def poly_mul_mod(a: F2Poly, b: F2Poly, m: F2Poly) -> F2Poly:
    """
    (a * b) mod m over GF(2)
    """
    if m.degree < 1:
        raise ContractError(f"The modulus must have degree >= 1, got {m}")
    return F2Poly(mask=_mod(_mul(a.mask, b.mask), m.mask))


def poly_pow_mod(a: F2Poly, exponent: int, m: F2Poly) -> F2Poly:
    if m.degree < 1:
        raise ContractError(f"The modulus must have degree >= 1, got {m}")
    return F2Poly(mask=_powmod(a.mask, exponent, m.mask))


X = 0b10


def is_irreducible(c: F2Poly) -> bool:
    """
    Rabin-style test: C of degree k is irreducible iff gcd(x^(2^d) - x, C) = 1 for every d <= k/2
    """
    k = c.degree
    if k < 1:
        raise ContractError(f"Irreducibility needs degree >= 1, got {c}")
    power = X
    for _ in range(k // 2):
        power = _mod(_mul(power, power), c.mask)
        if _gcd(c.mask, power ^ X) != 1:
            return False
    return True


def irreducible_by_trial_division(c: F2Poly) -> bool:
    """
    Oracle: try every polynomial of degree 1..k/2 as a factor
    """
    k = c.degree
    if k < 1:
        raise ContractError(f"Irreducibility needs degree >= 1, got {c}")
    for divisor in range(2, 1 << (k // 2 + 1)):
        if _mod(c.mask, divisor) == 0:
            return False
    return True


@lru_cache(maxsize=256)
def prime_factors(m: int, budget: Optional[int] = None) -> List[int]:
    """
    Distinct prime factors of m by trial division
    :param m: the number to factor
    :param budget: the largest trial divisor allowed
    :return: ascending distinct primes
    """
    budget = budget if budget is not None else settings().factor_budget
    factors = []
    d = 2
    while d * d <= m:
        if d > budget:
            raise PrimitivityUndecided(f"Factoring {m} needs trial divisors beyond {budget}")
        if m % d == 0:
            factors.append(d)
            while m % d == 0:
                m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        factors.append(m)
    return factors


def is_primitive(c: F2Poly, budget: Optional[int] = None) -> bool:
    """
    C is primitive iff it is irreducible and x has multiplicative order 2^k - 1 modulo C
    :param c: a polynomial of degree k >= 2
    :param budget: trial-division budget used to factor 2^k - 1
    :raises PrimitivityUndecided: instead of answering False when 2^k - 1 cannot be factored
    """
    k = c.degree
    if k < 2:
        raise ContractError(f"Primitivity is tested for degree >= 2, got {c}")
    if not is_irreducible(c):
        return False
    order = (1 << k) - 1
    if _powmod(X, order, c.mask) != 1:
        return False
    return all(_powmod(X, order // p, c.mask) != 1 for p in prime_factors(order, budget))


def trinomial(k: int) -> F2Poly:
    """
    T_k(x) = x^k + x + 1
    """
    if k < 2:
        raise ContractError(f"Trinomials x^k+x+1 are taken for k >= 2, got {k}")
    return F2Poly.of_exponents(k, 1, 0)


def primitive_trinomial_degrees(k_max: int, budget: Optional[int] = None) -> List[int]:
    """
    :return: ascending k in [2..k_max] with x^k + x + 1 primitive
    """
    degrees = [k for k in range(2, k_max + 1) if is_primitive(trinomial(k), budget)]
    logger.info(f"Primitive trinomial degrees up to {k_max}: {degrees}")
    return degrees


def reciprocal(c: F2Poly) -> F2Poly:
    """
    C*(x) = x^k C(1/x), the coefficient reversal
    """
    if not c.coefficient(0):
        raise ContractError(f"The reciprocal of {c} would drop degree; c_0 must be 1")
    k = c.degree
    return F2Poly(mask=sum(1 << (k - i) for i in range(k + 1) if c.coefficient(i)))
