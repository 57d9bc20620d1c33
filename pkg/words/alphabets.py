import string
from typing import Iterable, Optional, Tuple

try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

from util.errors import ContractError, SentinelConflictError

SENTINEL = "$"


class Alphabet:
    """
    A finite ordered alphabet of single-character symbol labels
    Symbols are addressed by rank: rank 0 is the smallest symbol.
    The sentinel is virtual; its label is only used for display and parsing,
    and it compares below every symbol.
    """

    symbols: Tuple[str, ...]
    sentinel: str

    DECLARATIONS = ("binary", "digits", "bytes")
    DEFAULT_LABELS = string.digits + string.ascii_lowercase + string.ascii_uppercase

    def __init__(self, symbols: Iterable[str], sentinel: str = SENTINEL):
        """
        Create a new alphabet
        :param symbols: the labels, strictly increasing
        :param sentinel: the display label of the virtual sentinel, which must not be a symbol
        """
        self.symbols = tuple(symbols)
        self.sentinel = sentinel
        if not self.symbols:
            raise ContractError("An alphabet needs at least one symbol")
        for label in self.symbols:
            if len(label) != 1:
                raise ContractError(f"Symbol labels must be single characters, got {label!r}")
        for left, right in zip(self.symbols, self.symbols[1:]):
            if not left < right:
                raise ContractError(f"Symbols must be strictly increasing: {left!r} !< {right!r}")
        if sentinel in self.symbols:
            raise SentinelConflictError(
                f"The sentinel {sentinel!r} is also a symbol; pick another sentinel label"
            )
        self._ranks = {label: rank for rank, label in enumerate(self.symbols)}

    @property
    def size(self) -> int:
        return len(self.symbols)

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        if self.size <= 16:
            return f"Alphabet({''.join(self.symbols)!r})"
        return f"Alphabet(sigma={self.size})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Alphabet):
            return NotImplemented
        return self.symbols == other.symbols and self.sentinel == other.sentinel

    def __hash__(self) -> int:
        return hash((self.symbols, self.sentinel))

    def rank(self, label: str) -> int:
        """
        :param label: a symbol label
        :return: its rank
        """
        try:
            return self._ranks[label]
        except KeyError:
            raise ContractError(f"{label!r} is not a symbol of {self}") from None

    def label(self, rank: int) -> str:
        return self.symbols[rank]

    @classmethod
    def default(cls, sigma: int, sentinel: str = SENTINEL) -> Self:
        """
        The first sigma labels of 0-9, a-z, A-Z
        :param sigma: alphabet size
        :return: an Alphabet
        """
        if not 1 <= sigma <= len(cls.DEFAULT_LABELS):
            raise ContractError(f"No default labels for an alphabet of size {sigma}")
        return cls(cls.DEFAULT_LABELS[:sigma], sentinel)

    @classmethod
    def declared(cls, name: str, sentinel: Optional[str] = None) -> Self:
        """
        A pinned alphabet by name: binary (0,1), digits (0-9) or bytes (all 256 byte values)
        :param name: one of DECLARATIONS
        :param sentinel: the sentinel label, a free label when omitted
        """
        if name == "binary":
            labels = "01"
        elif name == "digits":
            labels = string.digits
        elif name == "bytes":
            labels = "".join(chr(value) for value in range(256) if chr(value) != sentinel)
        else:
            raise ContractError(f"Unknown alphabet declaration {name!r}; use one of {cls.DECLARATIONS}")
        return cls(labels, free_sentinel(labels) if sentinel is None else sentinel)

    @classmethod
    def from_text(cls, text: str, declared: Optional[str] = None, sentinel: Optional[str] = None) -> Self:
        """
        Build the alphabet for an input: the declared one, or the sorted distinct characters
        :param text: the input word
        :param declared: optional declaration name
        :param sentinel: an explicit sentinel label, which must not occur in text; a free label when omitted
        :return: an Alphabet covering every character of text
        """
        if sentinel is not None and sentinel in text:
            raise SentinelConflictError(f"The sentinel {sentinel!r} occurs in the input; pick another sentinel label")
        if declared:
            alphabet = cls.declared(declared, sentinel)
            missing = sorted(set(text) - set(alphabet.symbols))
            if missing:
                raise ContractError(f"Characters {missing!r} are not in the {declared} alphabet")
            return alphabet
        if not text:
            raise ContractError("Cannot infer an alphabet from an empty input")
        labels = sorted(set(text))
        return cls(labels, free_sentinel(labels) if sentinel is None else sentinel)


SENTINEL_CANDIDATES = SENTINEL + "#%&@!^~|"


def free_sentinel(labels: Iterable[str]) -> str:
    """
    The first display label for the sentinel that is not a symbol; "$" whenever it is free
    """
    taken = set(labels)
    for label in SENTINEL_CANDIDATES:
        if label not in taken:
            return label
    code = 0x100
    while chr(code) in taken:
        code += 1
    return chr(code)
