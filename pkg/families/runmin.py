"""
The run-minimal binary de Bruijn family built from the trinomials x^k + x + 1
"""

import logging
from fractions import Fraction
from typing import Dict, Tuple

from fields.lfsrs import BINARY, joined_transformed_sequence
from fields.polynomials import is_primitive, trinomial
from families.debruijn import DeBruijnCycle, canonical_rotation
from measures.oracles import brute_force_chi
from measures.suffixient import chi, sre
from models.reports import Ratio, RunMinReport
from transforms.bwt import bwt, cbwt, count_runs
from util.errors import ContractError, NotInFamilyError, VerificationFailure
from util.setup import settings
from words.strings import SymbolString, linearize, terminate

logger = logging.getLogger(__name__)

CONTEXT = 16


def _middle(k: int) -> str:
    if k < 2:
        raise ContractError(f"The run-minimal family starts at k = 2, got {k}")
    return "0011" * ((1 << (k - 2)) - 1)


def runmin_pattern(k: int) -> SymbolString:
    """
    1 (0011)^{2^{k-2}-1} 010, the circular BWT of every run-minimal cycle of order k
    """
    return SymbolString.parse("1" + _middle(k) + "010", BINARY)


def linearized_pattern(k: int) -> SymbolString:
    """
    0^{k-1} 1 $ (0011)^{2^{k-2}-1} 010, the BWT of the linearized, terminated canonical rotation
    """
    return SymbolString.parse("0" * (k - 1) + "1$" + _middle(k) + "010", BINARY)


def unjoined_column(k: int) -> SymbolString:
    """
    (1001)^{2^{k-2}}, the periodic column the transformed recurrence gives before joining
    """
    _middle(k)
    return SymbolString.parse("1001" * (1 << (k - 2)), BINARY)


def joining_touches_last_rows(k: int) -> bool:
    """
    :return: True iff the run-minimal pattern and the unjoined column differ in exactly their last two rows
    """
    pattern, plain = str(runmin_pattern(k)), str(unjoined_column(k))
    differences = [i for i, (a, b) in enumerate(zip(pattern, plain)) if a != b]
    return differences == [len(pattern) - 2, len(pattern) - 1]


def closed_form_ratio(k: int) -> Fraction:
    return Fraction((1 << k) + 1, (1 << (k - 1)) + 4)


def expected_measures(k: int) -> Dict[str, int]:
    """
    :return: r_c, r and chi predicted for order k
    """
    return {"r_c": (1 << (k - 1)) + 2, "r": (1 << (k - 1)) + 4, "chi": (1 << k) + 1}


def first_mismatch(expected: str, actual: str) -> str:
    """
    Describe where two strings first differ, with CONTEXT symbols around the spot
    :return: an empty string when they are equal
    """
    if expected == actual:
        return ""
    index = next((i for i, (a, b) in enumerate(zip(expected, actual)) if a != b), min(len(expected), len(actual)))
    lo = max(0, index - CONTEXT // 2)
    hi = index + CONTEXT // 2
    return (
        f"first mismatch at index {index} (lengths {len(expected)} vs {len(actual)}):\n"
        f"  expected ...{expected[lo:hi]}...\n"
        f"  actual   ...{actual[lo:hi]}..."
    )


def _check_order(k: int) -> None:
    if k < 2:
        raise ContractError(f"The run-minimal family starts at k = 2, got {k}")
    if not is_primitive(trinomial(k)):
        raise NotInFamilyError(f"x^{k}+x+1 is not primitive, so no run-minimal member M_{k} is built")


def _member(k: int) -> Tuple[DeBruijnCycle, SymbolString]:
    _check_order(k)
    cycle = DeBruijnCycle(joined_transformed_sequence(k), k)
    return cycle, cbwt(cycle.word).last_column


def make_runmin(k: int) -> DeBruijnCycle:
    """
    M_k, the cycle of the transformed joined recurrence
    :param k: an order with x^k + x + 1 primitive
    :raises VerificationFailure: if its circular BWT is not the run-minimal pattern
    """
    cycle, column = _member(k)
    mismatch = first_mismatch(str(runmin_pattern(k)), str(column))
    if mismatch:
        raise VerificationFailure(f"cBWT(M_{k}) is not the run-minimal pattern", mismatch)
    return cycle


def verify_linearized(k: int, oracle: bool = False) -> RunMinReport:
    """
    Check the circular pattern, the linearized column and the run and chi closed forms of M_k
    :param k: an order with x^k + x + 1 primitive
    :param oracle: also recount chi by brute force when the word fits the oracle cap
    :return: a RunMinReport; closed-form mismatches are reported, not raised
    """
    cycle, circular = _member(k)
    rotation = canonical_rotation(cycle)
    terminated = terminate(linearize(rotation, k))
    output = bwt(terminated)
    column = output.last_column
    expected = expected_measures(k)
    r = output.runs
    measured_chi = chi(terminated)
    r_c = count_runs(circular)
    mismatch = first_mismatch(str(runmin_pattern(k)), str(circular)) or first_mismatch(
        str(linearized_pattern(k)), str(column)
    )
    oracle_ok = None
    if oracle and terminated.n <= settings().oracle_cap:
        oracle_ok = brute_force_chi(terminated) == measured_chi
    report = RunMinReport(
        k=k,
        cycle=str(cycle),
        rotation=str(rotation),
        last_column=str(column),
        r_c=r_c,
        r=r,
        chi=measured_chi,
        sre=sre(linearize(rotation, k)),
        ratio=Ratio.of(Fraction(measured_chi, r)),
        cbwt_pattern_ok=circular == runmin_pattern(k) and r_c == expected["r_c"],
        column_ok=column == linearized_pattern(k),
        r_ok=r == expected["r"],
        chi_ok=measured_chi == expected["chi"],
        oracle_ok=oracle_ok,
        mismatch=mismatch,
    )
    if report.ok:
        logger.info(f"Run-minimal closed forms hold for k = {k}: r = {r}, chi = {measured_chi}")
    else:
        logger.error(f"Run-minimal closed forms failed for k = {k}\n{mismatch}")
    return report
