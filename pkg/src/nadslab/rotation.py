"""Exact circle-rotation stand-in for the alternating-exponent system.

Points are ``a + b*alpha (mod 1)`` with ``a`` a rational in [0, 1), ``b`` an
integer and ``alpha`` a fixed irrational that is never evaluated.  Because
alpha is irrational the pair ``(a, b)`` determines the point uniquely, and
the rotation f(t) = t + alpha acts as ``(a, b) -> (a, b + 1)``.

Limitation: this model reproduces only the schedule mechanics (the
telescoping composites, invariant periodic orbits and orbit disjointness).
It does not reproduce the almost equicontinuous, non-minimal homeomorphism
the original construction is built on, so non-sensitivity of that system is
not checked here.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction

from .report import Certificate, verdict
from .schedules import exponent_range, quad_exponent, quad_partial_sum

_ROT_RE = re.compile(r"^(-?\d+)/(\d+)([+-])(-?\d+)\*alpha$")


@dataclass(frozen=True, slots=True, eq=False)
class RotationPoint:
    a: Fraction
    b: int

    def __post_init__(self):
        a = self.a
        if type(a) is not Fraction or not 0 <= a < 1:
            object.__setattr__(self, "a", Fraction(a) % 1)
        if not isinstance(self.b, int):
            raise TypeError("b must be an integer")

    @classmethod
    def _raw(cls, a: Fraction, b: int) -> RotationPoint:
        # a is already reduced into [0, 1)
        p = object.__new__(cls)
        object.__setattr__(p, "a", a)
        object.__setattr__(p, "b", b)
        return p

    def __eq__(self, other):
        if not isinstance(other, RotationPoint):
            return NotImplemented
        return self.b == other.b and (self.a is other.a or self.a == other.a)

    def __hash__(self):
        return hash((self.a.numerator, self.a.denominator, self.b))

    def __str__(self):
        sign = "-" if self.b < 0 else "+"
        return f"{self.a.numerator}/{self.a.denominator}{sign}{abs(self.b)}*alpha"

    @classmethod
    def parse(cls, text: str) -> RotationPoint:
        m = _ROT_RE.match(text.strip().replace(" ", ""))
        if not m:
            raise ValueError(f"malformed rotation point {text!r}; expected p/q+c*alpha")
        b = int(m.group(4))
        return cls(Fraction(int(m.group(1)), int(m.group(2))), -b if m.group(3) == "-" else b)


def apply_power(x: RotationPoint, k: int) -> RotationPoint:
    """f^k(x) for the rotation by alpha; k may be negative."""
    return RotationPoint._raw(x.a, x.b + k)


def quad_evaluate(x: RotationPoint, m: int) -> RotationPoint:
    """The m-step composite of the alternating-exponent schedule, f^E(m)."""
    return apply_power(x, quad_partial_sum(m))


def invariant_periodicity_certificate(x: RotationPoint, horizon: int) -> Certificate:
    """Check x returns at every even step up to 2*horizon, and that its orbit
    over m <= 4*horizon is exactly {f^j(x) : -horizon <= j <= horizon}."""
    items = []
    returns = all(quad_evaluate(x, 2 * k) == x for k in range(horizon + 1))
    items.append({"check": "returns at even steps", "ok": returns, "k_max": horizon})

    orbit = {quad_evaluate(x, m) for m in range(4 * horizon + 1)}
    target = {apply_power(x, j) for j in range(-horizon, horizon + 1)}
    items.append({"check": "orbit equals symmetric power range", "ok": orbit == target,
                  "m_max": 4 * horizon, "orbit_size": len(orbit)})

    notes = ["vacuous"] if horizon == 0 else []
    ok = all(item["ok"] for item in items)
    return Certificate("invariant_periodic_point", {"point": x, "K": horizon}, verdict(ok),
                       checked_items=items, notes=notes)


def orbits_disjoint_exact(x: RotationPoint, y: RotationPoint) -> bool:
    """Orbits under the schedule are full Z-orbits, so they meet iff the rational parts agree."""
    return x.a != y.a


def telescoping_certificate(m_max: int = 10**5, k_max: int = 100, samples: int = 100,
                            horizon: int = 1000, seed: int = 0) -> Certificate:
    """E(2m) = 0, exponent coverage, and invariant periodicity on random points."""
    items = []
    running, bad = 0, None
    for i in range(1, 2 * m_max + 1):
        running += quad_exponent(i)
        if running != quad_partial_sum(i) or (i % 2 == 0 and running != 0):
            bad = i
            break
    items.append({"check": "E(2m) = 0", "ok": bad is None, "m_max": m_max})
    if bad is not None:
        items[-1]["first_failure"] = bad
    cover = all(set(range(-k, k + 1)) <= exponent_range(4 * k) for k in range(1, k_max + 1))
    items.append({"check": "exponent_range(4K) covers [-K, K]", "ok": cover, "K_max": k_max})
    rng = random.Random(seed)
    for _ in range(samples):
        x = random_point(rng)
        cert = invariant_periodicity_certificate(x, horizon)
        items.append({"check": f"invariant periodic point {x}", "ok": cert.passed})
    ok = all(item["ok"] for item in items)
    params = {"m_max": m_max, "K_max": k_max, "samples": samples, "horizon": horizon, "seed": seed}
    return Certificate("example1_telescoping", params, verdict(ok), checked_items=items,
                       notes=["rotation stand-in: non-sensitivity is not checked"])


def random_point(rng: random.Random, max_den: int = 64, max_b: int = 50) -> RotationPoint:
    den = rng.randint(1, max_den)
    return RotationPoint(Fraction(rng.randrange(den), den), rng.randint(-max_b, max_b))
