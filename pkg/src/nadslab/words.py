"""Finite binary words and the Thue-Morse construction.

Indexing convention: every public function here counts positions from 1,
so ``xi(1)`` is the first symbol of the Thue-Morse sequence and
``Word.at(1)`` is the first symbol of a word.  Internally a word is a
Python ``str`` over ``"01"`` and position ``i`` lives at offset ``i - 1``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterable

from .config import check_cap

_FLIP = str.maketrans("01", "10")


class BlockMismatch(AssertionError):
    """A Thue-Morse block matched neither balanced form."""


class NoWitnessFound(AssertionError):
    """No disagreement found for some period candidate."""

    def __init__(self, p):
        super().__init__(f"no witness of aperiodicity for period {p}")
        self.p = p


@dataclass(frozen=True, slots=True)
class Word:
    bits: str = ""

    def __post_init__(self):
        if not isinstance(self.bits, str):
            raise TypeError(f"Word expects a str, got {type(self.bits).__name__}")
        if self.bits.strip("01"):
            raise ValueError(f"not a binary word: {self.bits!r}")

    @classmethod
    def coerce(cls, w: Word | str) -> Word:
        return w if isinstance(w, Word) else cls(w)

    def __len__(self):
        return len(self.bits)

    def __str__(self):
        return self.bits

    def __add__(self, other):
        return concat(self, other)

    def at(self, i: int) -> int:
        """Symbol at 1-based position ``i``."""
        if not 1 <= i <= len(self.bits):
            raise IndexError(i)
        return 1 if self.bits[i - 1] == "1" else 0

    def factor(self, i: int, j: int) -> Word:
        """Symbols ``i..j`` inclusive, 1-based."""
        return Word(self.bits[i - 1 : j])

    def ones(self) -> int:
        return self.bits.count("1")


def complement(w: Word | str) -> Word:
    return Word(Word.coerce(w).bits.translate(_FLIP))


def concat(u: Word | str, v: Word | str) -> Word:
    return Word(Word.coerce(u).bits + Word.coerce(v).bits)


def power(u: Word | str, m: int) -> Word:
    if m < 0:
        raise ValueError("power must be non-negative")
    return Word(Word.coerce(u).bits * m)


# Longest Thue-Morse prefix built so far, always a concatenation A_0 A_1 ... A_k.
# Strings are immutable, so replacing the reference is the only mutation.
_tm_prefix = "0"


def _tm_buffer(length: int) -> str:
    """A Thue-Morse prefix of length at least ``length`` (possibly longer)."""
    global _tm_prefix
    prefix = _tm_prefix
    if len(prefix) >= length:
        return prefix
    check_cap(length)
    while len(prefix) < length:
        # appending A_k = complement(A_0 ... A_{k-1}) doubles the prefix
        prefix = prefix + prefix.translate(_FLIP)
    _tm_prefix = prefix
    return prefix


def _tm_bits(length: int) -> str:
    check_cap(length)
    return _tm_buffer(length)[:length]


def thue_morse_block(n: int) -> Word:
    """Return A_n: A_0 = 0 and A_n is the complement of A_0 A_1 ... A_{n-1}."""
    if n < 0:
        raise ValueError("block index must be non-negative")
    if n == 0:
        return Word("0")
    return Word(_tm_bits(1 << (n - 1)).translate(_FLIP))


def block_length(n: int) -> int:
    return 1 if n == 0 else 1 << (n - 1)


def thue_morse_prefix(length: int) -> Word:
    """First ``length`` symbols of the Thue-Morse sequence A_0 A_1 A_2 ..."""
    if length < 0:
        raise ValueError("length must be non-negative")
    if length == 0:
        return Word("")
    return Word(_tm_bits(length))


def xi(i: int) -> int:
    """The i-th Thue-Morse symbol, 1-based."""
    if i < 1:
        raise IndexError(i)
    check_cap(i)
    return 1 if _tm_buffer(i)[i - 1] == "1" else 0


class BlockForm(enum.Enum):
    A_ABAR = "AnĀn"
    ABAR_A = "ĀnAn"


@lru_cache(maxsize=64)
def _block_forms(n: int) -> tuple[str, str]:
    a = thue_morse_block(n).bits
    abar = a.translate(_FLIP)
    return a + abar, abar + a


def classify_block(n: int, j: int) -> BlockForm:
    """Which balanced form the block of length 2|A_n| starting after 2j|A_n| symbols takes.

    Raises BlockMismatch if the block is neither A_n·Ā_n nor Ā_n·A_n.
    """
    if n < 1:
        raise ValueError("classify_block needs n >= 1")
    if j < 0:
        raise ValueError("j must be non-negative")
    size = 2 * block_length(n)
    start = j * size
    check_cap(start + size)
    block = _tm_buffer(start + size)[start : start + size]
    a_abar, abar_a = _block_forms(n)
    if block == a_abar:
        return BlockForm.A_ABAR
    if block == abar_a:
        return BlockForm.ABAR_A
    raise BlockMismatch(f"block n={n}, j={j} is {block!r}")


def schedule_aperiodicity(p_max: int, length: int) -> list[tuple[int, int]]:
    """For each p <= p_max, the first 1-based i <= length - p with xi_i != xi_{i+p}."""
    if length <= 2 * p_max:
        raise ValueError("need length > 2 * p_max")
    check_cap(length)
    bits = _tm_buffer(length)
    report = []
    for p in range(1, p_max + 1):
        for i in range(length - p):
            if bits[i] != bits[i + p]:
                report.append((p, i + 1))
                break
        else:
            raise NoWitnessFound(p)
    return report


def last_disagreement(p: int, length: int) -> int | None:
    """Largest 1-based i <= length - p with xi_i != xi_{i+p}, if any."""
    check_cap(length)
    bits = _tm_buffer(length)
    for i in range(length - p - 1, -1, -1):
        if bits[i] != bits[i + p]:
            return i + 1
    return None


def write_words(path: str | Path, words: Iterable[Word | str]) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        for w in words:
            fh.write(Word.coerce(w).bits + "\n")


def read_words(path: str | Path) -> list[Word]:
    text = Path(path).read_text(encoding="ascii")
    if text and not text.endswith("\n"):
        raise ValueError("word file must be newline-terminated")
    return [Word(line) for line in text.split("\n")[:-1]]
