"""
Burrows-Wheeler transforms, run counting and LF-mapping inversion
"""

import logging
from typing import Optional

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from models.reports import RunCounts
from util.errors import ContractError
from words.strings import SENTINEL_CODE, CyclicWord, SymbolString, reverse, terminate
from words.suffixes import naive_rotation_order, rotation_order, suffix_array

logger = logging.getLogger(__name__)


class BwtOutput:
    """
    The last column of a sorted rotation matrix, its run count and the order that produced it
    """

    last_column: SymbolString
    runs: int
    sort_perm: np.ndarray

    def __init__(self, last_column: SymbolString, sort_perm: np.ndarray):
        self.last_column = last_column
        self.sort_perm = sort_perm
        self.runs = count_runs(last_column)

    def __repr__(self) -> str:
        return f"BwtOutput(L={str(self.last_column)[:40]!r}, runs={self.runs})"


class Inversion:
    """
    The outcome of inverting a BWT column, tracking whether the column was a valid BWT at all
    A column is valid when its LF mapping is a single cycle through every row.
    """

    is_valid: bool
    cycles: int
    text: Optional[SymbolString]

    def __init__(self, cycles: int, text: Optional[SymbolString] = None):
        self.cycles = cycles
        self.is_valid = text is not None
        self.text = text

    def __repr__(self) -> str:
        if self.is_valid:
            return f"Inversion(valid, text={str(self.text)[:40]!r})"
        return f"Inversion(invalid, LF mapping has {self.cycles} cycles)"


def count_runs(column: SymbolString) -> int:
    """
    :param column: a non-empty word
    :return: the number of maximal equal-letter blocks
    """
    if column.n == 0:
        raise ContractError("An empty column has no runs")
    return 1 + int(np.count_nonzero(column.codes[1:] != column.codes[:-1]))


def _last_column(w_codes: np.ndarray, order: np.ndarray, alphabet) -> SymbolString:
    return SymbolString(w_codes[(order - 1) % w_codes.size], alphabet)


def bwt(w: SymbolString) -> BwtOutput:
    """
    BWT(w$)[i] = w$[(SA[i] - 1) mod n]
    :param w: a terminated word
    """
    if not w.terminated:
        raise ContractError("bwt takes a terminated word; use cbwt for cyclic words")
    sa = suffix_array(w)
    return BwtOutput(_last_column(w.codes, sa, w.alphabet), sa)


def cbwt(c: CyclicWord) -> BwtOutput:
    """
    Circular BWT: the last symbols of the sorted rotations, equal rotations by ascending cut
    """
    order = rotation_order(c.codes)
    return BwtOutput(_last_column(c.codes, order, c.alphabet), order)


def matrix_bwt(w: SymbolString) -> BwtOutput:
    """
    Oracle: sort the explicit rotation matrix
    """
    order = naive_rotation_order(w.codes)
    return BwtOutput(_last_column(w.codes, order, w.alphabet), order)


def lf_mapping(column: SymbolString) -> np.ndarray:
    """
    LF[i] is the row of the sorted column holding the same symbol occurrence as column[i]
    """
    order = np.argsort(column.codes, kind="stable")
    lf = np.empty(column.n, dtype=np.int64)
    lf[order] = np.arange(column.n)
    return lf


def count_cycles(permutation: np.ndarray) -> int:
    """
    :return: the number of cycles of a permutation of 0..n-1
    """
    n = permutation.size
    graph = csr_matrix((np.ones(n, dtype=np.int8), (np.arange(n), permutation)), shape=(n, n))
    count, _ = connected_components(graph, directed=True, connection="weak")
    return int(count)


def invert_bwt(column: SymbolString) -> Inversion:
    """
    Recover w$ from its BWT column by walking the LF mapping from the sentinel row
    :param column: a column holding exactly one sentinel
    :return: an Inversion, valid only if the LF mapping is a single cycle
    """
    if column.sentinel_count != 1:
        raise ContractError(f"A BWT column holds exactly one sentinel, found {column.sentinel_count}")
    lf = lf_mapping(column)
    cycles = count_cycles(lf)
    if cycles != 1:
        return Inversion(cycles)
    n = column.n
    last = column.codes.tolist()
    steps = lf.tolist()
    text = [SENTINEL_CODE] * n
    row = 0
    for position in range(n - 2, -1, -1):
        text[position] = last[row]
        row = steps[row]
    return Inversion(1, SymbolString(text, column.alphabet))


def r_measures(w: SymbolString) -> RunCounts:
    """
    r, r-bar and r_c of an unterminated word
    :return: runs of BWT(w$), of BWT(w^rev$) and of cBWT(w)
    """
    if w.sentinel_count:
        raise ContractError("r_measures takes the unterminated word")
    r = bwt(terminate(w)).runs
    r_bar = bwt(terminate(reverse(w))).runs
    r_c = cbwt(CyclicWord.of(w)).runs
    return RunCounts(r=r, r_bar=r_bar, r_c=r_c)
