"""Slow, independent reference implementations used only to cross-check the engines.

Nothing here touches the Thue-Morse prefix cache, the shift-amount table or
the closed-form metric.  The Thue-Morse symbol comes from bit parity, orbits
are simulated one map at a time on explicit symbol lists, and distances are
plain partial sums.
"""

from __future__ import annotations

import math
from collections import deque
from fractions import Fraction

from .schedules import Schedule, ScheduleKind
from .shift import Cylinder, Point
from .words import Word


class TruncationExhausted(ValueError):
    pass


def tm_parity(i: int) -> int:
    """xi_i as the parity of the number of ones in the binary expansion of i - 1."""
    if i < 1:
        raise ValueError("positions start at 1")
    return (i - 1).bit_count() & 1


def _step_power(s: Schedule, i: int) -> int:
    if s.kind is ScheduleKind.THUE_MORSE:
        return 1 + tm_parity(i)
    if s.kind is ScheduleKind.EXPLICIT:
        return 1 + s.index(i)
    raise TypeError("oracle orbits are defined on the shift space only")


def naive_shift_amount(s: Schedule, n: int) -> int:
    total = 0
    for i in range(1, n + 1):
        total += _step_power(s, i)
    return total


def naive_orbit(x_truncated: Word | str, s: Schedule, n: int, margin: int = 1) -> Word:
    """Apply the n maps one at a time to a truncated sequence by deleting leading symbols."""
    symbols = list(Word.coerce(x_truncated).bits)
    for i in range(1, n + 1):
        drop = _step_power(s, i)
        if len(symbols) < drop:
            raise TruncationExhausted(f"ran out of symbols at step {i}")
        for _ in range(drop):
            symbols.pop(0)
    if len(symbols) < margin:
        raise TruncationExhausted(f"only {len(symbols)} symbols left after {n} steps")
    return Word("".join(symbols))


def naive_trace(x_truncated: Word | str, s: Schedule, n: int, steps=None):
    """Yield (step, remaining symbols) after steps 0..n of one simulation.

    ``steps`` restricts which steps are reported; the simulation still runs every step.
    """
    remaining = deque(Word.coerce(x_truncated).bits)
    if steps is None or 0 in steps:
        yield 0, "".join(remaining)
    for i in range(1, n + 1):
        for _ in range(_step_power(s, i)):
            if not remaining:
                raise TruncationExhausted(f"ran out of symbols at step {i}")
            remaining.popleft()
        if steps is None or i in steps:
            yield i, "".join(remaining)


def symbols(x: Point, count: int) -> list[int]:
    """First ``count`` symbols by direct index arithmetic."""
    pre = [int(c) for c in x.pre.bits]
    per = [int(c) for c in x.per.bits]
    out = []
    for i in range(count):
        out.append(pre[i] if i < len(pre) else per[(i - len(pre)) % len(per)])
    return out


def exhaustive_mixing(u: Cylinder, v: Cylinder, n_max: int, s: Schedule | None = None) -> list[bool]:
    """For each n <= n_max, decide whether g_1^(n)([u]) meets [v].

    A candidate word is laid out with u at the start and v starting right
    after the first S(n) symbols.  If the two placements disagree on an
    overlapping position no point of [u] can land in [v]; otherwise the
    candidate (padded with zeros) is a witness, confirmed by simulation.
    """
    s = s or Schedule.thue_morse()
    ub, vb = u.base.bits, v.base.bits
    out = []
    k = 0
    for n in range(n_max + 1):
        if n:
            k += _step_power(s, n)
        length = max(len(ub), k + len(vb))
        slots: list[str | None] = [None] * length
        conflict = False
        for i, c in enumerate(ub):
            slots[i] = c
        for i, c in enumerate(vb):
            j = k + i
            if slots[j] is not None and slots[j] != c:
                conflict = True
                break
            slots[j] = c
        if conflict:
            out.append(False)
            continue
        witness = "".join(c if c is not None else "0" for c in slots)
        image = naive_orbit(witness + "0", s, n)
        ok = witness.startswith(ub) and image.bits.startswith(vb)
        if not ok:
            raise AssertionError(f"witness construction failed for n={n}")
        out.append(True)
    return out


def rational_metric_series(x: Point, y: Point, terms: int) -> tuple[Fraction, Fraction]:
    """Partial sum of |x_n - y_n| / 2^n over n <= terms, and that plus the tail bound 2^-terms."""
    if terms < 1:
        raise ValueError("need at least one term")
    xs, ys = symbols(x, terms), symbols(y, terms)
    lower = Fraction(0)
    for n in range(1, terms + 1):
        lower += Fraction(abs(xs[n - 1] - ys[n - 1]), 2**n)
    return lower, lower + Fraction(1, 2**terms)


def canonical_by_search(x: Point) -> tuple[str, str]:
    """Canonical (preperiod, period) found by trying every shape in order of size."""
    p0, l0 = len(x.pre), len(x.per)
    for p in range(p0 + 1):
        for length in range(1, l0 + 1):
            horizon = max(p, p0) + math.lcm(length, l0) + length
            stream = symbols(x, horizon)
            cand = stream[:p] + [stream[p + (i - p) % length] for i in range(p, horizon)]
            if cand == stream:
                return (
                    "".join(map(str, stream[:p])),
                    "".join(map(str, stream[p : p + length])),
                )
    raise AssertionError("unreachable: the stored shape always matches")


def brute_partial_exponent(m: int) -> int:
    """E(m) by summing the quad-exponent rule term by term."""
    total = 0
    for i in range(1, m + 1):
        n = math.ceil(i / 4)
        total += n if i % 4 in (1, 0) else -n
    return total
