"""
Sigma-ary de Bruijn cycles: window checks, the lexicographically least cycle and the bound checks
"""

import logging
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Set, Union

try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

import numpy as np

from measures.suffixient import chi, sre
from models.reports import Ratio, SigmaBoundsReport
from transforms.bwt import bwt
from util.errors import BudgetExceededError, ContractError, NotDeBruijnError
from util.setup import settings
from words.alphabets import Alphabet
from words.strings import CyclicWord, SymbolString, complement, linearize, reverse, rotate, terminate

logger = logging.getLogger(__name__)


def is_debruijn(c: CyclicWord, sigma: int, k: int) -> bool:
    """
    :return: True iff |c| = sigma^k over a sigma-symbol alphabet and every cyclic k-window is distinct
    """
    if k < 1 or c.sigma != sigma or c.n != sigma**k:
        return False
    return np.unique(c.window_ids(k)).size == c.n


class DeBruijnCycle:
    """
    A cyclic word of length sigma^k holding every length-k word exactly once as a window
    """

    word: CyclicWord
    sigma: int
    k: int

    def __init__(self, word: CyclicWord, k: int):
        """
        :param word: the cycle
        :param k: its order
        :raises NotDeBruijnError: if some window repeats or the length is wrong
        """
        self.word = CyclicWord(word.codes, word.alphabet, k)
        self.sigma = word.sigma
        self.k = k
        if not is_debruijn(word, self.sigma, k):
            raise NotDeBruijnError(f"{word!r} is not a de Bruijn cycle of order {k} over sigma = {self.sigma}")

    @classmethod
    def of(cls, word: Union[CyclicWord, str], k: int, alphabet: Optional[Alphabet] = None) -> Self:
        if isinstance(word, str):
            word = CyclicWord.of(word, k, alphabet)
        return cls(word, k)

    @property
    def n(self) -> int:
        return self.word.n

    def __str__(self) -> str:
        return str(self.word)

    def __repr__(self) -> str:
        return f"DeBruijnCycle({str(self)[:40]!r}, sigma={self.sigma}, k={self.k})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, DeBruijnCycle):
            return NotImplemented
        return self.k == other.k and self.word == other.word

    def __hash__(self) -> int:
        return hash((self.k, self.word))

    def same_cycle(self, other: "DeBruijnCycle") -> bool:
        return self.k == other.k and self.word.is_rotation_of(other.word)


def _lyndon_words(sigma: int, k: int) -> Iterator[List[int]]:
    """
    Lyndon words of length dividing k in lexicographic order
    """
    word = [-1]
    while word:
        word[-1] += 1
        m = len(word)
        if k % m == 0:
            yield word
        while len(word) < k:
            word.append(word[-m])
        while word and word[-1] == sigma - 1:
            word.pop()


def lex_least_debruijn(sigma: int, k: int, alphabet: Optional[Alphabet] = None) -> DeBruijnCycle:
    """
    Concatenate the Lyndon words whose length divides k, in lexicographic order
    :param sigma: alphabet size, at least 2
    :param k: order, at least 1
    :param alphabet: labels to use, Alphabet.default(sigma) when omitted
    :return: the lexicographically least de Bruijn cycle
    """
    if sigma < 2 or k < 1:
        raise ContractError(f"De Bruijn cycles are generated for sigma >= 2 and k >= 1, got ({sigma}, {k})")
    budget = settings().size_budget
    if sigma**k > budget:
        raise BudgetExceededError(f"sigma^k = {sigma}^{k} exceeds the size budget {budget}")
    alphabet = alphabet or Alphabet.default(sigma)
    if alphabet.size != sigma:
        raise ContractError(f"{alphabet} does not have {sigma} symbols")
    ranks = []
    for word in _lyndon_words(sigma, k):
        ranks.extend(word)
    return DeBruijnCycle(CyclicWord(np.asarray(ranks) + 1, alphabet, k), k)


def canonical_rotation(c: Union[DeBruijnCycle, CyclicWord], k: Optional[int] = None) -> SymbolString:
    """
    The rotation that starts with the smallest symbol repeated k times
    :param c: a de Bruijn cycle, or a cyclic word together with its order
    :param k: the order when c is a bare cyclic word
    """
    if isinstance(c, DeBruijnCycle):
        word, k = c.word, c.k
    else:
        word, k = c, k or c.order
    if not k:
        raise ContractError("The order k is needed to locate the all-minimal window")
    cuts = np.flatnonzero(word.window_ids(k) == 0)
    if cuts.size != 1:
        raise NotDeBruijnError(f"The window of {k} smallest symbols occurs {cuts.size} times in {word!r}")
    return rotate(word, int(cuts[0]))


def closed_form_bound(sigma: int, k: int) -> Fraction:
    """
    (sigma^k + 1) / (sigma^(k-1) (sigma - 1) + 1), chi over the run lower bound
    """
    return Fraction(sigma**k + 1, sigma ** (k - 1) * (sigma - 1) + 1)


def ratio_limit(sigma: int) -> Fraction:
    return Fraction(sigma, sigma - 1)


def verify_sigma_bounds(c: DeBruijnCycle) -> SigmaBoundsReport:
    """
    Measure the linearized canonical rotation and compare against the sigma-ary bounds
    :param c: a validated de Bruijn cycle
    :return: a SigmaBoundsReport
    """
    sigma, k = c.sigma, c.k
    w_lin = linearize(canonical_rotation(c), k)
    terminated = terminate(w_lin)
    measured_sre = sre(w_lin)
    measured_chi = chi(terminated)
    r = bwt(terminated).runs
    lower = sigma ** (k - 1) * (sigma - 1) + 1
    ratio = Fraction(measured_chi, r)
    report = SigmaBoundsReport(
        sigma=sigma,
        k=k,
        n=terminated.n,
        sre=measured_sre,
        chi=measured_chi,
        r=r,
        r_lower_bound=lower,
        ratio=Ratio.of(ratio),
        sre_ok=measured_sre == sigma**k,
        chi_ok=measured_chi == sigma**k + 1,
        r_lb_ok=r >= lower,
        ratio_ok=ratio < ratio_limit(sigma),
    )
    if not report.ok:
        logger.error(f"Sigma bounds failed for sigma = {sigma}, k = {k}: {report}")
    return report


def chi_orbit(c: DeBruijnCycle) -> Dict[str, Set[int]]:
    """
    chi of the linearized, terminated word for every rotation of c and of its images
    Binary cycles are also complemented.
    :return: image name -> distinct chi values over all rotations
    """
    images = {"identity": c.word, "reverse": reverse(c.word)}
    if c.sigma == 2:
        images["complement"] = complement(c.word)
        images["reverse_complement"] = complement(reverse(c.word))
    orbit = {}
    for name, word in images.items():
        orbit[name] = {chi(terminate(linearize(rotate(word, cut), c.k))) for cut in range(word.n)}
    return orbit
