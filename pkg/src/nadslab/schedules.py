"""Driving schedules and their exact accumulators.

Thue-Morse schedule: step i applies sigma when xi_i = 0 and sigma^2 when
xi_i = 1, so n steps compose to sigma^S(n) with S(n) = n + #ones(xi_1..xi_n).

Quad-exponent schedule: step i applies f^e_i with e_{4n-3} = e_{4n} = n and
e_{4n-2} = e_{4n-1} = -n, so m steps compose to f^E(m), E(m) = e_1 + ... + e_m.
"""

from __future__ import annotations

import enum
import re
import threading
from array import array
from dataclasses import dataclass, field
from itertools import accumulate

from .config import check_cap, get_cap
from .words import block_length, thue_morse_prefix


class ScheduleKind(enum.Enum):
    THUE_MORSE = "tm"
    QUAD_EXPONENT = "quad"
    EXPLICIT = "explicit"


class ScheduleExhausted(IndexError):
    """An explicit schedule without a period was asked for a step beyond its end."""


_EXPLICIT_RE = re.compile(r"^explicit:([0-9,]*)\(([0-9,]*)\)$")


@dataclass(frozen=True)
class Schedule:
    kind: ScheduleKind
    # explicit schedules only: generator indices, generator i acting as sigma^(i+1)
    prefix: tuple[int, ...] = ()
    period: tuple[int, ...] = ()
    generators: int = 2

    def __post_init__(self):
        if self.kind is ScheduleKind.EXPLICIT:
            for idx in self.prefix + self.period:
                if not 0 <= idx < self.generators:
                    raise ValueError(f"index {idx} outside generator set of size {self.generators}")

    @classmethod
    def thue_morse(cls) -> Schedule:
        return cls(ScheduleKind.THUE_MORSE)

    @classmethod
    def quad(cls) -> Schedule:
        return cls(ScheduleKind.QUAD_EXPONENT)

    @classmethod
    def explicit(cls, prefix, period=(), generators=None) -> Schedule:
        prefix, period = tuple(prefix), tuple(period)
        if generators is None:
            generators = max(prefix + period, default=-1) + 1
            generators = max(generators, 2)
        return cls(ScheduleKind.EXPLICIT, prefix, period, generators)

    @classmethod
    def parse(cls, text: str) -> Schedule:
        text = text.strip()
        if text == "tm":
            return cls.thue_morse()
        if text == "quad":
            return cls.quad()
        m = _EXPLICIT_RE.match(text)
        if not m:
            raise ValueError(f"malformed schedule {text!r}")

        def ints(s):
            return [int(t) for t in s.split(",")] if s else []

        return cls.explicit(ints(m.group(1)), ints(m.group(2)))

    def __str__(self):
        if self.kind is ScheduleKind.EXPLICIT:
            pre = ",".join(map(str, self.prefix))
            per = ",".join(map(str, self.period))
            return f"explicit:{pre}({per})"
        return self.kind.value

    def is_finitely_generated(self) -> bool:
        """Structural: the set of maps used is finite."""
        return self.kind is not ScheduleKind.QUAD_EXPONENT

    def generator_count(self) -> int | None:
        if self.kind is ScheduleKind.THUE_MORSE:
            return 2
        if self.kind is ScheduleKind.EXPLICIT:
            return self.generators
        return None

    def index(self, i: int) -> int:
        """Generator index used at 1-based step i (explicit schedules)."""
        if self.kind is not ScheduleKind.EXPLICIT:
            raise TypeError("index() is for explicit schedules")
        if i <= len(self.prefix):
            return self.prefix[i - 1]
        if not self.period:
            raise ScheduleExhausted(i)
        return self.period[(i - len(self.prefix) - 1) % len(self.period)]

    def shift_amount(self, n: int) -> int:
        """Total shift after n steps, for schedules over sigma-powers."""
        if self.kind is ScheduleKind.THUE_MORSE:
            return shift_amount(n)
        if self.kind is ScheduleKind.EXPLICIT:
            return _explicit_shift(self, n)
        raise TypeError("the quad-exponent schedule does not act on the shift space")


def _explicit_shift(s: Schedule, n: int) -> int:
    if n <= len(s.prefix):
        return n + sum(s.prefix[:n])
    if not s.period:
        raise ScheduleExhausted(n)
    rest = n - len(s.prefix)
    full, part = divmod(rest, len(s.period))
    head = len(s.prefix) + sum(s.prefix)
    cycle = len(s.period) + sum(s.period)
    return head + full * cycle + part + sum(s.period[:part])


@dataclass
class _PrefixSums:
    table: array = field(default_factory=lambda: array("q", [0]))
    lock: threading.Lock = field(default_factory=threading.Lock)

    def extend_to(self, n: int) -> None:
        if n < len(self.table):
            return
        check_cap(n)
        with self.lock:
            self._grow(n)

    def _grow(self, n: int) -> None:
        have = len(self.table) - 1
        if n <= have:
            return
        target = max(n, min(max(2 * have, 1024), get_cap()))
        bits = thue_morse_prefix(target).bits[have:]
        # step i contributes 1 + xi_i
        sums = accumulate((2 if b == "1" else 1 for b in bits), initial=self.table[-1])
        next(sums)
        self.table.extend(sums)


_sums = _PrefixSums()


def shift_amount(n: int) -> int:
    """S(n): the Thue-Morse composite g_1^(n) equals sigma^S(n)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    check_cap(n)
    _sums.extend_to(n)
    return _sums.table[n]


def shift_amounts(n: int) -> list[int]:
    """[S(0), S(1), ..., S(n)]."""
    shift_amount(n)
    return list(_sums.table[: n + 1])


def checkpoint_identity(n: int, k: int) -> bool:
    """S(2k|A_n|) == 3k|A_n|."""
    if n < 1:
        raise ValueError("n must be >= 1")
    size = block_length(n)
    return shift_amount(2 * k * size) == 3 * k * size


def quad_exponent(i: int) -> int:
    if i < 1:
        raise ValueError("steps start at 1")
    n = (i + 3) // 4
    return n if i % 4 in (0, 1) else -n


def quad_partial_sum(m: int) -> int:
    """E(m), by case analysis on m mod 4 (every full group of four sums to zero)."""
    if m < 0:
        raise ValueError("m must be non-negative")
    r = m % 4
    if r == 1:
        return m // 4 + 1
    if r == 3:
        return -(m // 4 + 1)
    return 0


def exponent_range(big_m: int) -> set[int]:
    return {quad_partial_sum(m) for m in range(big_m + 1)}
