"""
Words over a ranked alphabet, cyclic words, and the elementary operations on them

Symbols are stored as integer codes: 0 is the virtual sentinel and rank r is stored as r + 1,
so that a plain integer sort puts the sentinel first.
"""

from typing import Iterable, Optional, Union

try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

import numpy as np

from util.errors import ContractError, UnsupportedAlphabetError
from words.alphabets import Alphabet

SENTINEL_CODE = 0


def _frozen(codes) -> np.ndarray:
    array = np.array(codes, dtype=np.int64).reshape(-1)
    array.setflags(write=False)
    return array


class SymbolString:
    """
    A finite word over an Alphabet, possibly containing the sentinel
    A word is terminated when its only sentinel sits at the final position;
    BWT columns are words whose single sentinel may sit anywhere.
    """

    codes: np.ndarray
    alphabet: Alphabet

    def __init__(self, codes, alphabet: Alphabet):
        """
        Create a word from raw codes
        :param codes: integers in [0..sigma], 0 being the sentinel
        :param alphabet: the alphabet that gives the codes their labels
        """
        self.codes = _frozen(codes)
        self.alphabet = alphabet
        if self.codes.size and (self.codes.min() < 0 or self.codes.max() > alphabet.size):
            raise ContractError(f"Codes out of range for an alphabet of size {alphabet.size}")

    @classmethod
    def from_ranks(cls, ranks: Iterable[int], alphabet: Alphabet, terminated: bool = False) -> Self:
        codes = np.asarray(list(ranks), dtype=np.int64) + 1
        if terminated:
            codes = np.append(codes, SENTINEL_CODE)
        return cls(codes, alphabet)

    @classmethod
    def parse(cls, text: str, alphabet: Optional[Alphabet] = None) -> Self:
        """
        Read a word written with symbol labels, where the sentinel label stands for the sentinel
        :param text: e.g. "aabaa$" or "1$0011010"
        :param alphabet: the alphabet; inferred from the non-sentinel characters when omitted
        :return: a SymbolString
        """
        if alphabet is None:
            alphabet = Alphabet.from_text(text.replace("$", ""))
        codes = [
            SENTINEL_CODE if char == alphabet.sentinel else alphabet.rank(char) + 1 for char in text
        ]
        return cls(codes, alphabet)

    @property
    def n(self) -> int:
        return int(self.codes.size)

    @property
    def sigma(self) -> int:
        return self.alphabet.size

    @property
    def sentinel_count(self) -> int:
        return int(np.count_nonzero(self.codes == SENTINEL_CODE))

    @property
    def terminated(self) -> bool:
        return self.sentinel_count == 1 and self.codes[-1] == SENTINEL_CODE

    @property
    def ranks(self) -> np.ndarray:
        """
        :return: symbol ranks of a word without sentinel
        """
        if self.sentinel_count:
            raise ContractError("Ranks are only defined for words without the sentinel")
        return self.codes - 1

    def __len__(self) -> int:
        return self.n

    def __str__(self) -> str:
        labels = (self.alphabet.sentinel,) + self.alphabet.symbols
        return "".join(labels[code] for code in self.codes.tolist())

    def __repr__(self) -> str:
        text = str(self)
        if len(text) > 40:
            text = text[:18] + "..." + text[-18:]
        return f"SymbolString({text!r}, n={self.n})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymbolString):
            return NotImplemented
        return self.alphabet == other.alphabet and np.array_equal(self.codes, other.codes)

    def __hash__(self) -> int:
        return hash((self.alphabet, self.codes.tobytes()))

    def symbol_counts(self) -> np.ndarray:
        """
        :return: occurrences of each code 0..sigma, the sentinel included
        """
        return np.bincount(self.codes, minlength=self.sigma + 1)


class CyclicWord:
    """
    A word read cyclically: every window read wraps around modulo n
    """

    codes: np.ndarray
    alphabet: Alphabet
    order: int

    def __init__(self, codes, alphabet: Alphabet, order: int = 0):
        """
        :param codes: symbol codes in [1..sigma]; a cycle never holds the sentinel
        :param alphabet: the alphabet
        :param order: the window length of interest, 0 when unused
        """
        self.codes = _frozen(codes)
        self.alphabet = alphabet
        self.order = order
        if self.codes.size and (self.codes.min() < 1 or self.codes.max() > alphabet.size):
            raise ContractError("A cyclic word holds symbols only")

    @classmethod
    def of(cls, word: Union[SymbolString, str], order: int = 0, alphabet: Optional[Alphabet] = None) -> Self:
        if isinstance(word, str):
            word = SymbolString.parse(word, alphabet)
        if word.sentinel_count:
            raise ContractError("A cyclic word cannot contain the sentinel")
        return cls(word.codes, word.alphabet, order)

    @property
    def n(self) -> int:
        return int(self.codes.size)

    @property
    def sigma(self) -> int:
        return self.alphabet.size

    def __len__(self) -> int:
        return self.n

    def __str__(self) -> str:
        return str(self.as_string())

    def __repr__(self) -> str:
        return f"CyclicWord({str(self)[:40]!r}, n={self.n}, order={self.order})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, CyclicWord):
            return NotImplemented
        return self.alphabet == other.alphabet and np.array_equal(self.codes, other.codes)

    def __hash__(self) -> int:
        return hash((self.alphabet, self.codes.tobytes()))

    def as_string(self) -> SymbolString:
        return SymbolString(self.codes, self.alphabet)

    def window_ids(self, k: int) -> np.ndarray:
        """
        Encode every cyclic window of length k as an integer in [0..sigma^k)
        :param k: window length
        :return: array whose entry t encodes c[t..t+k-1 mod n]
        """
        ranks = self.codes - 1
        ids = np.zeros(self.n, dtype=np.int64)
        for offset in range(k):
            ids = ids * self.sigma + np.roll(ranks, -offset)
        return ids

    def is_rotation_of(self, other: "CyclicWord") -> bool:
        """
        :return: True if the two cycles are equal up to rotation
        """
        if self.n != other.n or self.alphabet != other.alphabet:
            return False
        return str(other) in str(self) * 2


def rotate(c: CyclicWord, cut: int) -> SymbolString:
    """
    The rotation of c that starts at position cut
    :param c: a cyclic word
    :param cut: 0 <= cut < n
    :return: output[i] = c[(i + cut) mod n]
    """
    if not 0 <= cut < max(c.n, 1):
        raise IndexError(f"Cut {cut} out of range for a cycle of length {c.n}")
    return SymbolString(np.roll(c.codes, -cut), c.alphabet)


def reverse(w: Union[SymbolString, CyclicWord]) -> Union[SymbolString, CyclicWord]:
    """
    w^rev[i] = w[|w| - i - 1]; cyclic words reverse as cycles
    """
    if isinstance(w, CyclicWord):
        return CyclicWord(w.codes[::-1], w.alphabet, w.order)
    if w.sentinel_count:
        raise ContractError("The sentinel never takes part in a reversal; reverse before terminating")
    return SymbolString(w.codes[::-1], w.alphabet)


def complement(w: Union[SymbolString, CyclicWord]) -> Union[SymbolString, CyclicWord]:
    """
    Flip every binary symbol 0 <-> 1
    """
    if w.alphabet.size != 2:
        raise UnsupportedAlphabetError(f"Complement needs a binary alphabet, not sigma = {w.alphabet.size}")
    if isinstance(w, CyclicWord):
        return CyclicWord(3 - w.codes, w.alphabet, w.order)
    if w.sentinel_count:
        raise ContractError("Complement is defined on unterminated words only")
    return SymbolString(3 - w.codes, w.alphabet)


def linearize(c: Union[CyclicWord, SymbolString], k: int) -> SymbolString:
    """
    Append the first k-1 symbols so that every cyclic k-window occurs without wrapping
    :param c: a cycle, or one of its rotations given as a word
    :param k: window length, at least 2
    :return: a word of length n + k - 1
    """
    if k < 2:
        raise ContractError(f"Linearization needs k >= 2, got {k}")
    if c.n < k:
        raise ContractError(f"Cannot linearize a word of length {c.n} for k = {k}")
    if isinstance(c, SymbolString) and c.sentinel_count:
        raise ContractError("Linearize before terminating")
    return SymbolString(np.concatenate((c.codes, c.codes[: k - 1])), c.alphabet)


def terminate(w: SymbolString) -> SymbolString:
    """
    Append the sentinel
    """
    if w.sentinel_count:
        raise ContractError("The word already contains the sentinel")
    return SymbolString(np.append(w.codes, SENTINEL_CODE), w.alphabet)


def insert_sentinel(w: SymbolString, position: int) -> SymbolString:
    """
    Place the sentinel before index position (position == n appends it)
    """
    if w.sentinel_count:
        raise ContractError("The word already contains the sentinel")
    if not 0 <= position <= w.n:
        raise IndexError(f"Insertion point {position} out of range for length {w.n}")
    return SymbolString(np.insert(w.codes, position, SENTINEL_CODE), w.alphabet)
