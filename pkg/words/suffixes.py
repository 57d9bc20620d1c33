"""
Suffix arrays, rotation orders and LCP arrays, with naive oracles kept for cross-checks
"""

import numpy as np

from util.errors import ContractError
from words.strings import SymbolString


def rotation_order(codes) -> np.ndarray:
    """
    Sort the cyclic rotations of a code sequence by prefix doubling
    Each round ranks rotations by their first 2h symbols from the ranks of the first h symbols,
    so O(log n) lexsort rounds suffice. Equal rotations (periodic inputs) keep ascending cut order.
    :param codes: integer codes
    :return: cut indices in sorted rotation order
    """
    rank = np.asarray(codes, dtype=np.int64)
    n = rank.size
    positions = np.arange(n)
    if n <= 1:
        return positions
    h = 1
    while h < n:
        second = rank[(positions + h) % n]
        order = np.lexsort((second, rank))
        first_sorted, second_sorted = rank[order], second[order]
        changes = (first_sorted[1:] != first_sorted[:-1]) | (second_sorted[1:] != second_sorted[:-1])
        rank = np.empty(n, dtype=np.int64)
        rank[order] = np.concatenate(([0], np.cumsum(changes)))
        if rank[order[-1]] == n - 1:
            break
        h *= 2
    return np.lexsort((positions, rank))


def suffix_array(w: SymbolString) -> np.ndarray:
    """
    :param w: a terminated word
    :return: SA, the starting positions of the suffixes of w in increasing order
    """
    if not w.terminated:
        raise ContractError("The suffix array is taken on a terminated word")
    # with a unique smallest final symbol, rotation order and suffix order coincide
    return rotation_order(w.codes)


def naive_rotation_order(codes) -> np.ndarray:
    sequence = list(np.asarray(codes).tolist())
    n = len(sequence)
    return np.array(sorted(range(n), key=lambda cut: (sequence[cut:] + sequence[:cut], cut)), dtype=np.int64)


def naive_suffix_array(w: SymbolString) -> np.ndarray:
    if not w.terminated:
        raise ContractError("The suffix array is taken on a terminated word")
    sequence = w.codes.tolist()
    return np.array(sorted(range(w.n), key=lambda start: sequence[start:]), dtype=np.int64)


def _check_permutation(sa, n: int) -> np.ndarray:
    sa = np.asarray(sa, dtype=np.int64)
    if sa.size != n or not np.array_equal(np.sort(sa), np.arange(n)):
        raise ContractError("The suffix array does not match the word")
    return sa


def lcp_array(w: SymbolString, sa) -> np.ndarray:
    """
    Kasai's linear scan
    :param w: the word the suffix array was built on
    :param sa: its suffix (or rotation) array
    :return: lcp[i] = length of the longest common prefix of suffixes sa[i-1] and sa[i]; lcp[0] = 0
    """
    n = w.n
    sa = _check_permutation(sa, n)
    rank = np.empty(n, dtype=np.int64)
    rank[sa] = np.arange(n)
    text = w.codes.tolist()
    sa_list = sa.tolist()
    rank_list = rank.tolist()
    lcp = [0] * n
    h = 0
    for i in range(n):
        r = rank_list[i]
        if r == 0:
            h = 0
            continue
        j = sa_list[r - 1]
        while i + h < n and j + h < n and text[i + h] == text[j + h]:
            h += 1
        lcp[r] = h
        if h:
            h -= 1
    return np.array(lcp, dtype=np.int64)


def naive_lcp_array(w: SymbolString, sa) -> np.ndarray:
    sa = _check_permutation(sa, w.n)
    text = w.codes.tolist()
    lcp = [0] * w.n
    for i in range(1, w.n):
        a, b = text[sa[i - 1] :], text[sa[i] :]
        length = 0
        while length < min(len(a), len(b)) and a[length] == b[length]:
            length += 1
        lcp[i] = length
    return np.array(lcp, dtype=np.int64)
