"""Composed non-autonomous maps on the shift space, orbits, periodic and invariant points.

For a schedule over powers of sigma the n-step composite g_n ∘ ... ∘ g_1 is
itself a power of sigma, so ``evaluate`` is a single exact shift.  Composing
two evaluations is *not* an evaluation of the summed step count; the law
that holds is evaluate(s, x, n) == shift(x, s.shift_amount(n)).
"""

from __future__ import annotations

from .report import Certificate, verdict
from .schedules import Schedule, ScheduleExhausted, ScheduleKind
from .shift import Point, shift

ORBIT_POINT_CAP = 10_000

TM = Schedule.thue_morse()


class WrongSystem(TypeError):
    """A quad-exponent schedule was applied to a shift-space point."""


class OrbitNotClosed(RuntimeError):
    pass


def evaluate(s: Schedule, x: Point, n: int) -> Point:
    if s.kind is ScheduleKind.QUAD_EXPONENT:
        raise WrongSystem("quad-exponent schedules act on rotation points; see nadslab.rotation")
    if n < 0:
        raise ValueError("n must be non-negative")
    return shift(x, s.shift_amount(n))


def orbit(s: Schedule, x: Point, big_n: int) -> list[Point]:
    """[evaluate(s, x, n) for n = 0..big_n]."""
    if s.kind is ScheduleKind.QUAD_EXPONENT:
        raise WrongSystem("quad-exponent schedules act on rotation points")
    return [shift(x, s.shift_amount(n)) for n in range(big_n + 1)]


def is_periodic_point(s: Schedule, x: Point, n: int, horizon: int = 100) -> Certificate:
    """Check evaluate(s, x, n*k) == x for k = 0..horizon.

    Periodicity quantifies over every k; this is a finite verification.  For
    the Thue-Morse schedule with n = 2|A_m| the composite is sigma^(3k|A_m|),
    so when the period of x divides 3|A_m| the remaining k follow as well;
    that case is flagged in the notes.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    items = []
    for k in range(horizon + 1):
        amount = s.shift_amount(n * k)
        items.append({"check": "returns", "k": k, "shift": amount, "ok": shift(x, amount) == x})
    ok = all(item["ok"] for item in items)
    notes = ["verified to horizon"]
    if ok and s.kind is ScheduleKind.THUE_MORSE and _checkpoint_step(n) and not x.key[0]:
        a_len = n // 2
        if (3 * a_len) % len(x.key[1]) == 0:
            notes.append("implied for all k by the checkpoint identity S(2k|A_m|) = 3k|A_m|")
    return Certificate(
        "periodic_point",
        {"schedule": s, "point": x, "n": n, "K": horizon},
        verdict(ok),
        checked_items=items,
        notes=notes,
    )


def _checkpoint_step(n: int) -> bool:
    # n = 2|A_m| for some m >= 1, i.e. n is a power of two >= 2
    return n >= 2 and n & (n - 1) == 0


def orbit_set(s: Schedule, x: Point, limit: int = ORBIT_POINT_CAP) -> frozenset[Point]:
    """The finite forward orbit of an eventually periodic point.

    Enumeration stops once a full sweep of steps adds no new point.
    """
    if s.kind is ScheduleKind.QUAD_EXPONENT:
        raise WrongSystem("quad-exponent schedules act on rotation points")
    sweep = max(64, 4 * (len(x.pre) + len(x.per)))
    seen = {x}
    quiet = 0
    n = 0
    while quiet < sweep:
        n += 1
        if n > limit or len(seen) > limit:
            raise OrbitNotClosed(f"orbit of {x} did not close within {limit} steps")
        try:
            p = shift(x, s.shift_amount(n))
        except ScheduleExhausted:
            break
        if p in seen:
            quiet += 1
        else:
            seen.add(p)
            quiet = 0
    return frozenset(seen)


def is_invariant_orbit(x: Point, generators=(1, 2), s: Schedule = TM) -> bool:
    """Whether the orbit of x is mapped into itself by every sigma^g, g in generators."""
    points = orbit_set(s, x)
    return all(shift(p, g) in points for p in points for g in generators)


def orbits_disjoint(x: Point, y: Point, s: Schedule = TM) -> bool:
    return orbit_set(s, x).isdisjoint(orbit_set(s, y))
