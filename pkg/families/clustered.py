"""
The clustered family: runs of length >= 2 of every symbol, in decreasing symbol order
"""

import logging
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, field_validator, model_validator

from measures.suffixient import chi
from models.reports import ClusteredReport, Ratio
from transforms.bwt import bwt
from util.errors import ContractError, NotInFamilyError
from words.alphabets import Alphabet
from words.strings import SENTINEL_CODE, SymbolString, terminate

logger = logging.getLogger(__name__)


class ClusteredShape(BaseModel):
    """
    sigma and the exponents k_{sigma-1}, ..., k_0, highest symbol first
    """

    sigma: int
    exponents: List[int]

    @field_validator("sigma")
    @classmethod
    def check_sigma(cls, sigma: int) -> int:
        if sigma < 2:
            raise ValueError(f"A clustered word needs sigma >= 2, got {sigma}")
        return sigma

    @model_validator(mode="after")
    def check_exponents(self):
        if len(self.exponents) != self.sigma:
            raise ValueError(f"Expected {self.sigma} exponents, got {len(self.exponents)}")
        if any(exponent < 2 for exponent in self.exponents):
            raise ValueError(f"Every exponent must be at least 2, got {self.exponents}")
        return self

    @classmethod
    def random(cls, sigma: int, rng: np.random.Generator, low: int = 2, high: int = 9) -> "ClusteredShape":
        """
        Exponents drawn uniformly from [low..high]
        """
        return cls(sigma=sigma, exponents=rng.integers(low, high + 1, size=sigma).tolist())


def make_shape(sigma: int, exponents: List[int]) -> ClusteredShape:
    """
    Build a ClusteredShape, reporting violations as contract errors
    """
    try:
        return ClusteredShape(sigma=sigma, exponents=exponents)
    except ValueError as e:
        raise ContractError(str(e)) from None


def make_clustered(shape: ClusteredShape, alphabet: Optional[Alphabet] = None) -> SymbolString:
    """
    s_{sigma-1}^{k_{sigma-1}} ... s_1^{k_1} s_0^{k_0}
    :param shape: the family parameters
    :param alphabet: labels for s_0 < ... < s_{sigma-1}, Alphabet.default(sigma) when omitted
    :return: the clustered word
    """
    alphabet = alphabet or Alphabet.default(shape.sigma)
    if alphabet.size != shape.sigma:
        raise ContractError(f"{alphabet} does not have {shape.sigma} symbols")
    ranks = np.repeat(np.arange(shape.sigma - 1, -1, -1), shape.exponents)
    return SymbolString.from_ranks(ranks, alphabet)


def runs_of(w: SymbolString) -> List[Tuple[int, int]]:
    """
    :return: (code, length) for each maximal equal-letter block
    """
    codes = w.codes
    if codes.size == 0:
        return []
    starts = np.concatenate(([0], np.flatnonzero(codes[1:] != codes[:-1]) + 1))
    lengths = np.diff(np.append(starts, codes.size))
    return list(zip(codes[starts].tolist(), lengths.tolist()))


def structure_of(w: SymbolString) -> ClusteredShape:
    """
    Recover the family parameters from a raw word
    :raises NotInFamilyError: if run symbols do not strictly decrease or some run is shorter than 2
    """
    if w.sentinel_count:
        raise ContractError("Pass the unterminated word")
    blocks = runs_of(w)
    codes = [code for code, _ in blocks]
    if len(blocks) < 2 or any(left <= right for left, right in zip(codes, codes[1:])):
        raise NotInFamilyError(f"{w!r} does not have strictly decreasing runs of at least two symbols")
    exponents = [length for _, length in blocks]
    if min(exponents) < 2:
        raise NotInFamilyError(f"{w!r} has a run of length 1; every exponent must exceed 1")
    return ClusteredShape(sigma=len(blocks), exponents=exponents)


def expected_column(w: SymbolString, shape: ClusteredShape) -> np.ndarray:
    """
    s_0^{k_0} s_1^{k_1} ... s_{sigma-1}^{k_{sigma-1}} $
    """
    blocks = runs_of(w)[::-1]
    return np.append(np.repeat([code for code, _ in blocks], shape.exponents[::-1]), SENTINEL_CODE)


def closed_form_ratio(sigma: int) -> Fraction:
    return Fraction(2 * sigma, sigma + 1)


def verify_clustered(w: SymbolString) -> ClusteredReport:
    """
    Re-validate membership, then measure r and chi against sigma + 1 and 2 sigma
    :param w: a candidate clustered word, unterminated
    :return: a ClusteredReport
    """
    shape = structure_of(w)
    terminated = terminate(w)
    output = bwt(terminated)
    measured_chi = chi(terminated)
    report = ClusteredReport(
        word=str(w),
        sigma=shape.sigma,
        exponents=shape.exponents,
        n=terminated.n,
        r=output.runs,
        chi=measured_chi,
        ratio=Ratio.of(Fraction(measured_chi, output.runs)),
        r_ok=output.runs == shape.sigma + 1,
        chi_ok=measured_chi == 2 * shape.sigma,
        column_ok=bool(np.array_equal(output.last_column.codes, expected_column(w, shape))),
    )
    if not report.ok:
        logger.error(f"Clustered closed forms failed for exponents {shape.exponents}: r={report.r}, chi={report.chi}")
    return report


def clustered_sweep(sigma: int, trials: int, seed: int) -> List[ClusteredReport]:
    """
    Verify seeded random members for one sigma
    """
    rng = np.random.default_rng([seed, sigma])
    reports = [verify_clustered(make_clustered(ClusteredShape.random(sigma, rng))) for _ in range(trials)]
    logger.info(f"Clustered sweep sigma = {sigma}: {sum(r.ok for r in reports)}/{trials} passed")
    return reports
