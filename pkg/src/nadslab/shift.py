"""Eventually periodic points of the one-sided full 2-shift.

A point is stored as ``(preperiod, period)`` and stands for the sequence
``preperiod · period · period · ...``.  Positions are 1-based.  Distances are
exact ``Fraction`` values of the product metric sum |x_n - y_n| / 2^n.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .words import Word, complement

INFINITE = math.inf

_POINT_RE = re.compile(r"^([01]*)\(([01]*)\)$")
_CYL_RE = re.compile(r"^\[([01]*)\]$")
_FRACTION_RE = re.compile(r"^(-?\d+)/(\d+)$")


class EmptyPeriod(ValueError):
    pass


def _primitive_root(s: str) -> str:
    n = len(s)
    for d in range(1, n + 1):
        if n % d == 0 and s[:d] * (n // d) == s:
            return s[:d]
    return s


def _canonical_fields(pre: str, per: str) -> tuple[str, str]:
    if not per:
        raise EmptyPeriod("period must be nonempty")
    per = _primitive_root(per)
    while pre and pre[-1] == per[-1]:
        pre = pre[:-1]
        per = per[-1] + per[:-1]
    return pre, per


@dataclass(frozen=True, eq=False)
class Point:
    """The sequence ``pre · per^∞``.  Equality compares the sequences, not the fields."""

    pre: Word
    per: Word

    def __post_init__(self):
        object.__setattr__(self, "pre", Word.coerce(self.pre))
        object.__setattr__(self, "per", Word.coerce(self.per))
        if not self.per.bits:
            raise EmptyPeriod("period must be nonempty")

    @classmethod
    def periodic(cls, per: Word | str) -> Point:
        return canonicalize(cls("", per))

    @classmethod
    def parse(cls, text: str) -> Point:
        m = _POINT_RE.match(text.strip())
        if not m:
            raise ValueError(f"malformed point {text!r}; expected u(v)")
        return cls(m.group(1), m.group(2))

    @cached_property
    def key(self) -> tuple[str, str]:
        return _canonical_fields(self.pre.bits, self.per.bits)

    def is_canonical(self) -> bool:
        return self.key == (self.pre.bits, self.per.bits)

    def __eq__(self, other):
        if not isinstance(other, Point):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __str__(self):
        return f"{self.pre.bits}({self.per.bits})"

    def __repr__(self):
        return f"Point({str(self)!r})"

    def prefix(self, length: int) -> str:
        """First ``length`` symbols as a bit string."""
        pre, per = self.pre.bits, self.per.bits
        if length <= len(pre):
            return pre[:length]
        rest = length - len(pre)
        return pre + per * (rest // len(per)) + per[: rest % len(per)]


def canonicalize(p: Point) -> Point:
    """Primitive period, shortest preperiod."""
    pre, per = _canonical_fields(p.pre.bits, p.per.bits)
    return Point(pre, per)


def prepend(w: Word | str, p: Point) -> Point:
    """The point ``w · p``."""
    return canonicalize(Point(Word.coerce(w).bits + p.pre.bits, p.per))


def symbol_at(p: Point, i: int) -> int:
    if i < 1:
        raise IndexError("positions start at 1")
    pre, per = p.pre.bits, p.per.bits
    if i <= len(pre):
        return int(pre[i - 1])
    return int(per[(i - len(pre) - 1) % len(per)])


def shift(p: Point, k: int) -> Point:
    """sigma^k(p)."""
    if k < 0:
        raise ValueError("the shift is not invertible")
    pre, per = p.pre.bits, p.per.bits
    if k <= len(pre):
        return canonicalize(Point(pre[k:], per))
    r = (k - len(pre)) % len(per)
    return canonicalize(Point("", per[r:] + per[:r]))


def _aligned(x: Point, y: Point) -> tuple[int, int]:
    head = max(len(x.pre), len(y.pre))
    return head, math.lcm(len(x.per), len(y.per))


def _diff_value(a: str, b: str) -> int:
    """Integer whose binary digits are |a_i - b_i|, most significant first."""
    if not a:
        return 0
    return int(a, 2) ^ int(b, 2)


def metric(x: Point, y: Point) -> Fraction:
    """Closed form: head sum over the aligned preperiod plus a geometric tail."""
    head, cycle = _aligned(x, y)
    xs, ys = x.prefix(head + cycle), y.prefix(head + cycle)
    head_val = Fraction(_diff_value(xs[:head], ys[:head]), 1 << head)
    tail_num = _diff_value(xs[head:], ys[head:])
    tail_val = Fraction(tail_num, ((1 << cycle) - 1) << head)
    return head_val + tail_val


def common_prefix_length(x: Point, y: Point) -> int | float:
    """Length of the longest common prefix; INFINITE when x == y."""
    head, cycle = _aligned(x, y)
    n = head + cycle
    xs, ys = x.prefix(n), y.prefix(n)
    for i in range(n):
        if xs[i] != ys[i]:
            return i
    return INFINITE


def dyadic_ball_contains(center: Point, m: int, y: Point) -> bool:
    """Whether d(center, y) < 2^-m."""
    if m < 0:
        raise ValueError("radius exponent must be non-negative")
    return metric(center, y) < Fraction(1, 1 << m)


@dataclass(frozen=True, slots=True)
class Cylinder:
    """All sequences starting with ``base``; the empty base is the whole space."""

    base: Word = Word("")

    def __post_init__(self):
        object.__setattr__(self, "base", Word.coerce(self.base))

    @classmethod
    def parse(cls, text: str) -> Cylinder:
        m = _CYL_RE.match(text.strip())
        if not m:
            raise ValueError(f"malformed cylinder {text!r}; expected [w]")
        return cls(m.group(1))

    def __str__(self):
        return f"[{self.base.bits}]"

    def __len__(self):
        return len(self.base)

    def is_full(self) -> bool:
        return not self.base.bits


FULL_SPACE = Cylinder("")


def cylinder_image(c: Cylinder, k: int) -> Cylinder:
    """sigma^k([w]) is exactly the cylinder on w with k leading symbols removed."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k >= len(c.base):
        return FULL_SPACE
    return Cylinder(c.base.bits[k:])


def cylinders_intersect(a: Cylinder, b: Cylinder) -> bool:
    u, v = a.base.bits, b.base.bits
    return u.startswith(v) or v.startswith(u)


def point_in_cylinder(x: Point, c: Cylinder) -> bool:
    return x.prefix(len(c.base)) == c.base.bits


def flip_at(x: Point, i: int) -> Point:
    """x with its i-th symbol flipped."""
    head = x.prefix(i - 1)
    flipped = complement(x.prefix(i)[-1]).bits
    return prepend(head + flipped, shift(x, i))


def format_fraction(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def parse_fraction(text: str) -> Fraction:
    m = _FRACTION_RE.match(text.strip())
    if not m:
        raise ValueError(f"malformed rational {text!r}; expected p/q")
    return Fraction(int(m.group(1)), int(m.group(2)))
