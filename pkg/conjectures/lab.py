"""
Experiments around the uniqueness of the run-minimal family: sentinel insertion scans and an
exhaustive census of small binary de Bruijn cycles
"""

import logging
from typing import List, Optional

import numpy as np

from families.debruijn import DeBruijnCycle, canonical_rotation
from families.runmin import make_runmin, runmin_pattern
from fields.lfsrs import BINARY
from fields.polynomials import is_primitive, trinomial
from models.reports import ConjectureReport, DollarScan
from transforms.bwt import bwt, cbwt, count_cycles, invert_bwt
from util.errors import BudgetExceededError, ContractError
from util.setup import settings
from words.strings import CyclicWord, SymbolString, complement, insert_sentinel, reverse, terminate

logger = logging.getLogger(__name__)


def dollar_positions(base: SymbolString) -> DollarScan:
    """
    Try every sentinel insertion point and keep those whose column inverts
    The LF mapping of an insertion is the base mapping shifted by one row, so only the cycle count
    is recomputed per point.
    :param base: a column without the sentinel
    :return: the valid insertion points and the text each one decodes to
    """
    if base.sentinel_count:
        raise ContractError("The base column must not contain the sentinel")
    n = base.n
    base_lf = np.empty(n, dtype=np.int64)
    base_lf[np.argsort(base.codes, kind="stable")] = np.arange(n)
    indices = np.arange(n)
    permutation = np.empty(n + 1, dtype=np.int64)
    valid, recovered = [], []
    for position in range(n + 1):
        permutation[indices + (indices >= position)] = base_lf + 1
        permutation[position] = 0
        if count_cycles(permutation) == 1:
            inversion = invert_bwt(insert_sentinel(base, position))
            valid.append(position)
            recovered.append(str(inversion.text))
    logger.info(f"Dollar scan over {n + 1} insertion points found {len(valid)} valid")
    return DollarScan(base=str(base), valid_positions=valid, recovered=recovered)


def expected_cycle_count(k: int) -> int:
    """
    2^(2^(k-1) - k) binary de Bruijn cycles of order k, up to rotation
    """
    return 1 << ((1 << (k - 1)) - k)


def enumerate_debruijn(k: int, cap: Optional[int] = None) -> List[DeBruijnCycle]:
    """
    Every binary de Bruijn cycle of order k, each as its rotation starting with 0^k
    A depth-first walk over the order-k de Bruijn graph from 0^k that never reuses a window
    and closes back onto 0^k.
    :param k: the order, at least 1
    :param cap: the largest k allowed, settings().enumeration_cap by default
    :return: cycles in lexicographic order
    """
    cap = cap if cap is not None else settings().enumeration_cap
    if k < 1:
        raise ContractError(f"Enumeration needs k >= 1, got {k}")
    if k > cap:
        raise BudgetExceededError(f"Enumerating order {k} exceeds the cap k <= {cap}")
    full = (1 << k) - 1
    closing = 1 << (k - 1)
    total = 1 << k
    used = [False] * total
    used[0] = True
    bits = [0]
    found = []

    def extend(state: int) -> None:
        if len(bits) == total:
            if state == closing:
                found.append(list(bits))
            return
        for bit in (0, 1):
            following = ((state << 1) & full) | bit
            if not used[following]:
                used[following] = True
                bits.append(following >> (k - 1))
                extend(following)
                bits.pop()
                used[following] = False

    extend(0)
    cycles = [DeBruijnCycle(CyclicWord(np.asarray(word) + 1, BINARY, k), k) for word in found]
    logger.info(f"Enumerated {len(cycles)} de Bruijn cycles of order {k}")
    return cycles


def runmin_achievers(k: int, cap: Optional[int] = None) -> List[DeBruijnCycle]:
    """
    The enumerated cycles whose circular BWT is the run-minimal pattern
    """
    pattern = runmin_pattern(k)
    return [cycle for cycle in enumerate_debruijn(k, cap) if cbwt(cycle.word).last_column == pattern]


def _orbit_key(cycle: DeBruijnCycle) -> str:
    images = [cycle.word, reverse(cycle.word), complement(cycle.word), complement(reverse(cycle.word))]
    return min(str(canonical_rotation(image, cycle.k)) for image in images)


def implied_position(cycle: DeBruijnCycle, pattern: SymbolString) -> Optional[int]:
    """
    Where the sentinel sits in the BWT of the terminated canonical rotation, when that BWT is the
    pattern with a sentinel inserted
    """
    column = bwt(terminate(canonical_rotation(cycle))).last_column
    position = int(np.flatnonzero(column.codes == 0)[0])
    stripped = SymbolString(np.delete(column.codes, position), column.alphabet)
    return position if stripped == pattern else None


def conjecture_census(k: int, cap: Optional[int] = None) -> ConjectureReport:
    """
    Run the dollar scan of the run-minimal pattern and, when k is within the cap, the achiever census
    Outcomes are compared against the expectation that a valid insertion exists exactly when
    x^k + x + 1 is primitive; disagreement is reported, never raised.
    :param k: the order, at least 2
    :param cap: enumeration cap override
    :return: a ConjectureReport
    """
    cap = cap if cap is not None else settings().enumeration_cap
    primitive = is_primitive(trinomial(k))
    pattern = runmin_pattern(k)
    scan = dollar_positions(pattern)
    report = ConjectureReport(k=k, trinomial_primitive=primitive, scan=scan, census_done=False)
    expectation = bool(scan.valid_positions) == primitive
    if k > cap:
        report.notice = f"Order {k} exceeds the enumeration cap {cap}; dollar scan only"
        logger.warning(report.notice)
        report.matches_expectation = expectation
        return report
    cycles = enumerate_debruijn(k, cap)
    achievers = [cycle for cycle in cycles if cbwt(cycle.word).last_column == pattern]
    implied = sorted({p for p in (implied_position(cycle, pattern) for cycle in achievers) if p is not None})
    report.census_done = True
    report.cycle_count = len(cycles)
    report.achievers = [str(cycle) for cycle in achievers]
    report.orbit_count = len({_orbit_key(cycle) for cycle in achievers})
    report.implied_positions = implied
    report.consistent = len(cycles) == expected_cycle_count(k) and set(implied) <= set(scan.valid_positions)
    if primitive:
        member = make_runmin(k)
        report.runmin_member = str(canonical_rotation(member))
        report.member_found = any(member.same_cycle(cycle) for cycle in achievers)
        expectation = expectation and report.member_found
    report.matches_expectation = expectation
    if not report.consistent:
        logger.error(f"Conjecture census for k = {k} is internally inconsistent: {report}")
    elif not expectation:
        logger.warning(f"Conjecture census for k = {k} differs from the expected outcome")
    return report
