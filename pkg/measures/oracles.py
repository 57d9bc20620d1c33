"""
Definition-level oracles: enumerate every substring, collect its followers, filter by suffix order
Quadratic in space and roughly cubic in time, so guarded by a length cap.
"""

from collections import defaultdict
from typing import Optional, Set, Tuple

from util.errors import BudgetExceededError, ContractError
from util.setup import settings
from words.strings import SymbolString


def _check_cap(w: SymbolString, cap: Optional[int]) -> None:
    cap = cap if cap is not None else settings().oracle_cap
    if w.n > cap:
        raise BudgetExceededError(f"The brute-force oracle is capped at length {cap}, got {w.n}")


def brute_force_extensions(w: SymbolString, cap: Optional[int] = None) -> Tuple[Set[str], Set[str]]:
    """
    E_r and S_r straight from their definitions
    :param w: any word without an inner sentinel
    :param cap: length cap, settings().oracle_cap by default
    :return: the pair (E_r, S_r) as sets of rendered words
    """
    if w.sentinel_count and not w.terminated:
        raise ContractError("The oracle takes a word without a sentinel or with a final one")
    _check_cap(w, cap)
    text = str(w)
    n = len(text)
    followers = defaultdict(set)
    for i in range(n):
        for j in range(i, n):
            followers[text[i:j]].add(text[j])
    extensions = {prefix + symbol for prefix, after in followers.items() if len(after) >= 2 for symbol in after}
    shadowed = {extension[i:] for extension in extensions for i in range(1, len(extension))}
    return extensions, extensions - shadowed


def brute_force_sre(w: SymbolString, cap: Optional[int] = None) -> int:
    return len(brute_force_extensions(w, cap)[1])


def brute_force_chi(w: SymbolString, cap: Optional[int] = None) -> int:
    """
    chi of a terminated word by direct enumeration
    """
    if not w.terminated:
        raise ContractError("chi is evaluated on the terminated word")
    return brute_force_sre(w, cap)
