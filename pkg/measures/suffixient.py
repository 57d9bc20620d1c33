"""
Right-extensions, super-maximal extensions, sre and smallest suffixient sets

Right-maximal substrings are the internal nodes of the suffix tree, found here as LCP intervals.
A right-extension xa is super-maximal unless some left extension cx is itself right-maximal and
cxa occurs; with the BWT that is the case exactly when, for some symbol c, the occurrences of c
before x outnumber those before xa (ignoring an occurrence of x at the very end of an
unterminated word).
"""

import logging
from typing import FrozenSet, Iterator, List, NamedTuple, Tuple

import numpy as np

from models.reports import ExtensionReport
from util.errors import ContractError
from words.strings import SENTINEL_CODE, SymbolString
from words.suffixes import lcp_array, rotation_order

logger = logging.getLogger(__name__)


class Extension(NamedTuple):
    """
    A right-extension xa located by its first occurrence
    """

    start: int
    length: int
    is_super: bool

    @property
    def end(self) -> int:
        return self.start + self.length - 1


class _Node(NamedTuple):
    depth: int
    lb: int
    rb: int
    cuts: List[int]


def lcp_intervals(lcp: np.ndarray) -> Iterator[_Node]:
    """
    Bottom-up enumeration of the LCP intervals (internal suffix-tree nodes) with their child boundaries
    :param lcp: the LCP array
    :return: nodes as (string depth, left bound, right bound, child start indices after lb)
    """
    n = lcp.size
    heights = lcp.tolist()
    stack = [(0, 0, [])]
    for i in range(1, n + 1):
        h = heights[i] if i < n else 0
        lb = i - 1
        while h < stack[-1][0]:
            depth, lb, cuts = stack.pop()
            yield _Node(depth, lb, i - 1, cuts)
        if i == n:
            break
        if h > stack[-1][0]:
            stack.append((h, lb, []))
        stack[-1][2].append(i)
    depth, lb, cuts = stack.pop()
    yield _Node(0, 0, n - 1, cuts)


def _analysis_text(w: SymbolString) -> Tuple[np.ndarray, bool]:
    """
    A terminated word is analysed as is, the sentinel being a symbol of the text.
    An unterminated word gets a private end marker that never counts as an extension.
    """
    if w.terminated:
        return w.codes, True
    return np.append(w.codes, SENTINEL_CODE), False


def scan_extensions(w: SymbolString) -> Tuple[np.ndarray, List[Extension]]:
    """
    Locate every right-extension of w and flag the super-maximal ones
    :param w: a terminated word, or a word without any sentinel
    :return: the analysed text codes and one Extension per element of E_r
    """
    if w.sentinel_count and not w.terminated:
        raise ContractError("Extensions are defined on words without a sentinel or with a final one")
    text, marker_is_symbol = _analysis_text(w)
    n = text.size
    sa = rotation_order(text)
    lcp = lcp_array(SymbolString(text, w.alphabet), sa)
    left = text[(sa - 1) % n]
    width = w.sigma + 1
    sa_list = sa.tolist()
    text_list = text.tolist()
    extensions = []
    for node in lcp_intervals(lcp):
        bounds = [node.lb] + node.cuts + [node.rb + 1]
        children = []
        marker_child = None
        for lo, hi in zip(bounds, bounds[1:]):
            symbol = text_list[sa_list[lo] + node.depth]
            if symbol == SENTINEL_CODE and not marker_is_symbol:
                marker_child = (lo, hi)
            else:
                children.append((lo, hi))
        if len(children) < 2:
            continue
        spare = np.bincount(left[node.lb : node.rb + 1], minlength=width)
        if marker_child is not None:
            spare -= np.bincount(left[marker_child[0] : marker_child[1]], minlength=width)
        for lo, hi in children:
            before = np.bincount(left[lo:hi], minlength=width)
            witnesses = (before > 0) & (spare - before > 0)
            witnesses[SENTINEL_CODE] = False
            extensions.append(Extension(int(sa[lo:hi].min()), node.depth + 1, not witnesses.any()))
    logger.debug(f"Scanned {len(extensions)} right-extensions of a word of length {w.n}")
    return text, extensions


def _render(text: np.ndarray, w: SymbolString, extension: Extension) -> str:
    labels = (w.alphabet.sentinel,) + w.alphabet.symbols
    return "".join(labels[code] for code in text[extension.start : extension.start + extension.length].tolist())


def right_extensions(w: SymbolString) -> FrozenSet[str]:
    """
    E_r: the one-symbol extensions xa of right-maximal substrings x that occur in w
    """
    text, extensions = scan_extensions(w)
    return frozenset(_render(text, w, extension) for extension in extensions)


def super_maximal_extensions(w: SymbolString) -> FrozenSet[str]:
    """
    S_r: the right-extensions that are not a proper suffix of another right-extension
    """
    text, extensions = scan_extensions(w)
    return frozenset(_render(text, w, extension) for extension in extensions if extension.is_super)


def sre(w: SymbolString) -> int:
    """
    |S_r(w)| on w as given, terminated or not
    """
    _, extensions = scan_extensions(w)
    return sum(1 for extension in extensions if extension.is_super)


def chi(w: SymbolString) -> int:
    """
    The size of a smallest suffixient set of a terminated word, without materializing any set
    """
    if not w.terminated:
        raise ContractError("chi is evaluated on the terminated word")
    return sre(w)


def smallest_suffixient_set(w: SymbolString, with_extensions: bool = True) -> ExtensionReport:
    """
    A smallest suffixient set realized through the bijection with S_r
    Each super-maximal extension is assigned the end position of its first occurrence.
    :param w: a terminated word
    :param with_extensions: also materialize E_r (quadratic in the worst case)
    :return: an ExtensionReport
    """
    if not w.terminated:
        raise ContractError("A suffixient set is computed on the terminated word")
    text, extensions = scan_extensions(w)
    witness = {
        _render(text, w, extension): extension.end for extension in extensions if extension.is_super
    }
    everything = None
    if with_extensions:
        everything = frozenset(_render(text, w, extension) for extension in extensions)
    return ExtensionReport(
        right_extensions=everything,
        super_maximal=frozenset(witness),
        sre=len(witness),
        suffixient_positions=frozenset(witness.values()),
        witness=witness,
        chi=len(witness),
    )
