"""Certificate-producing checks for the Thue-Morse driven shift system.

Every topological statement is checked at a finite resolution: open sets
are cylinders, balls have dyadic radii 2^-m, and "for all k" is replaced by
an explicit horizon.  Certificates record what was checked, not more.  The
cylinder basis reduction (checking transitivity and mixing on cylinders
only) is the standard one for the product topology; the underlying claims
quantify over all open sets.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import NamedTuple

from .config import check_cap
from .engine import TM, evaluate, is_invariant_orbit, is_periodic_point, orbit_set, orbits_disjoint
from .report import Certificate, combine, sub_item, verdict
from .rotation import RotationPoint, invariant_periodicity_certificate, telescoping_certificate
from .schedules import Schedule, checkpoint_identity, shift_amount
from .shift import (
    Cylinder,
    Point,
    cylinder_image,
    cylinders_intersect,
    flip_at,
    metric,
    point_in_cylinder,
)
from .words import (
    BlockMismatch,
    NoWitnessFound,
    block_length,
    classify_block,
    last_disagreement,
    schedule_aperiodicity,
)

ZERO = Point("", "0")
ONE = Point("", "1")
EPSILON = Fraction(1, 2)
GENERATORS = (1, 2)

FINITE_RESOLUTION_NOTE = (
    "finite-resolution evidence: open sets are cylinders up to the stated length, "
    "'for all k' is checked up to the stated horizon; this is not a proof"
)


def all_words(max_len: int, min_len: int = 0):
    for length in range(min_len, max_len + 1):
        for bits in itertools.product("01", repeat=length):
            yield "".join(bits)


def mixing_threshold(u: Cylinder, v: Cylinder, s: Schedule = TM) -> tuple[int, Certificate]:
    """Least N with g_1^(n)(u) meeting v for every n >= N.

    g_1^(n) = sigma^S(n) and S(n) >= n, so the image is the whole space once
    n >= |u|; only the finitely many n < |u| need checking.
    """
    items = []
    last_miss = -1
    for n in range(len(u.base)):
        k = s.shift_amount(n)
        meets = cylinders_intersect(cylinder_image(u, k), v)
        items.append({"check": "image meets target", "n": n, "shift": k, "meets": meets, "ok": True})
        if not meets:
            last_miss = n
    threshold = last_miss + 1
    items.append({"check": "S(n) >= n >= |u| makes the image the whole space", "ok": True,
                  "from_n": len(u.base)})
    ok = threshold <= len(u.base)
    cert = Certificate("mixing_threshold", {"u": u, "v": v, "schedule": s}, verdict(ok),
                       witnesses=[{"N": threshold}], checked_items=items)
    return threshold, cert


def mixing_all_pairs(max_len: int) -> Certificate:
    """mixing_threshold over every pair of cylinders with bases of length <= max_len."""
    cylinders = [Cylinder(w) for w in all_words(max_len)]
    worst: dict[int, int] = {}
    failures = []
    for u in cylinders:
        for v in cylinders:
            threshold, cert = mixing_threshold(u, v)
            worst[len(u)] = max(worst.get(len(u), 0), threshold)
            if not cert.passed:
                failures.append({"u": u, "v": v, "N": threshold})
    items = [
        {"check": f"N <= |u| for |u| = {n}", "ok": worst[n] <= n, "max_N": worst[n]}
        for n in sorted(worst)
    ]
    notes = ["vacuous"] if max_len == 0 else []
    return combine("mixing_all_pairs", {"L": max_len, "pairs": len(cylinders) ** 2}, items,
                   witnesses=failures, notes=notes)


def verify_claim2(x: Point, n: int, horizon: int = 50) -> tuple[Point, Certificate]:
    """Periodic point within 2^-(3|A_n|) of x: repeat the first 3|A_n| symbols of x."""
    if n < 1:
        raise ValueError("n must be >= 1")
    a_len = block_length(n)
    length = 3 * a_len
    check_cap(length)
    eta = Point.periodic(x.prefix(length))
    dist = metric(x, eta)
    bound = Fraction(1, 1 << length)
    periodic = is_periodic_point(TM, eta, 2 * a_len, horizon)
    bad_k = [k for k in range(1, horizon + 1) if not checkpoint_identity(n, k)]
    items = [
        {"check": "distance <= 2^-(3|A_n|)", "ok": dist <= bound, "distance": dist, "bound": bound},
        sub_item(periodic, "eta is periodic with step 2|A_n|"),
        {"check": "S(2k|A_n|) = 3k|A_n|", "ok": not bad_k, "k_max": horizon, "failures": bad_k},
    ]
    cert = combine("claim2", {"x": x, "n": n, "K": horizon}, items,
                   witnesses=[{"eta": eta, "distance": dist}])
    return eta, cert


def dense_periodic_points(length: int, n: int, horizon: int = 50) -> Certificate:
    """Every cylinder of the given length contains a periodic point built as in verify_claim2."""
    if 3 * block_length(n) < length:
        raise ValueError("need 3|A_n| >= L so that eta stays in the cylinder")
    items = []
    for w in all_words(length, length):
        eta, cert = verify_claim2(Point(w, "0"), n, horizon)
        inside = point_in_cylinder(eta, Cylinder(w))
        items.append({"check": "periodic point in cylinder", "cylinder": f"[{w}]", "eta": eta,
                      "distance": cert.witnesses[0]["distance"], "ok": inside and cert.passed})
    return combine("dense_periodic_points", {"L": length, "n": n, "K": horizon}, items)


def verify_claim3(horizon: int = 1000) -> Certificate:
    """0^∞ and 1^∞ are fixed, have invariant orbits, disjoint orbits, and lie at distance 1."""
    fixed = all(evaluate(TM, p, n) == p for p in (ZERO, ONE) for n in range(horizon + 1))
    invariant = is_invariant_orbit(ZERO, GENERATORS) and is_invariant_orbit(ONE, GENERATORS)
    disjoint = orbits_disjoint(ZERO, ONE)
    dist = metric(ZERO, ONE)
    items = [
        {"check": "fixed points of the schedule", "ok": fixed, "horizon": horizon},
        {"check": "invariant orbits under sigma and sigma^2", "ok": invariant,
         "orbits": [sorted(map(str, orbit_set(TM, ZERO))), sorted(map(str, orbit_set(TM, ONE)))]},
        {"check": "orbits disjoint", "ok": disjoint},
        {"check": "d(0^inf, 1^inf) = 1", "ok": dist == 1, "distance": dist},
    ]
    return combine("claim3", {"horizon": horizon}, items, witnesses=[{"x": ZERO, "y": ONE}])


class SensitivityWitness(NamedTuple):
    y: Point
    n: int
    dist: Fraction  # distance after n steps
    pre_dist: Fraction  # d(x, y)


def sensitivity_witness(x: Point, m: int) -> SensitivityWitness:
    """A point y with d(x, y) < 2^-m whose orbit is 1/2 away from that of x after m steps.

    y flips symbol S(m)+1 of x, so the two agree on S(m) >= m symbols and
    differ in the first symbol after both are shifted by S(m).
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    n = m
    k = shift_amount(n)
    y = flip_at(x, k + 1)
    dist = metric(evaluate(TM, x, n), evaluate(TM, y, n))
    return SensitivityWitness(y, n, dist, metric(x, y))


def sensitivity_certificate(x: Point, m: int) -> Certificate:
    w = sensitivity_witness(x, m)
    delta = Fraction(1, 1 << m)
    items = [
        {"check": "d(x, y) < 2^-m", "ok": w.pre_dist < delta, "distance": w.pre_dist, "delta": delta},
        {"check": "post-step distance >= 1/2", "ok": w.dist >= EPSILON, "distance": w.dist},
        {"check": "y differs from x", "ok": w.y != x},
    ]
    return combine("sensitivity", {"x": x, "m": m}, items,
                   witnesses=[{"y": w.y, "n": w.n, "pre_distance": w.pre_dist, "post_distance": w.dist}])


def dense_orbit_point(length: int) -> tuple[Point, Certificate]:
    """A point whose orbit visits every cylinder of the given length.

    Word j is written right after the first S(n_j) symbols, where n_1 = 0 and
    n_{j+1} is the first step with S(n_{j+1}) >= S(n_j) + length.
    """
    words = list(all_words(length, length))
    steps = [0]
    n = 0
    for _ in words[1:]:
        target = shift_amount(steps[-1]) + length
        while shift_amount(n) < target:
            n += 1
        steps.append(n)
    total = shift_amount(steps[-1]) + length
    check_cap(total)
    symbols = ["0"] * total
    for w, step in zip(words, steps):
        start = shift_amount(step)
        symbols[start : start + length] = w
    x = Point.periodic("0") if not total else Point("".join(symbols), "0")
    items = []
    for w, step in zip(words, steps):
        image = evaluate(TM, x, step)
        items.append({"check": "orbit visits cylinder", "cylinder": f"[{w}]", "step": step,
                      "ok": point_in_cylinder(image, Cylinder(w))})
    distinct = len({item["cylinder"] for item in items})
    items.append({"check": "distinct cylinders visited", "ok": distinct == 2**length, "count": distinct})
    notes = ["vacuous"] if length == 0 else []
    cert = combine("dense_orbit", {"L": length}, items, witnesses=[{"x": x}], notes=notes)
    return x, cert


def balanced_blocks(n_max: int, length: int) -> Certificate:
    """classify_block for every n <= n_max and every block inside the first ``length`` symbols."""
    items = []
    for n in range(1, n_max + 1):
        count = length // (2 * block_length(n))
        try:
            for j in range(count):
                classify_block(n, j)
            items.append({"check": f"blocks balanced for n = {n}", "ok": True, "blocks": count})
        except BlockMismatch as exc:
            items.append({"check": f"blocks balanced for n = {n}", "ok": False, "error": str(exc)})
    return combine("balanced_blocks", {"n_max": n_max, "length": length}, items)


def aperiodicity_certificate(p_max: int, length: int) -> Certificate:
    """Witnesses that the schedule has no period p <= p_max, early and late in the prefix."""
    try:
        report = schedule_aperiodicity(p_max, length)
    except NoWitnessFound as exc:
        return Certificate("schedule_aperiodicity", {"p_max": p_max, "length": length}, verdict(False),
                           witnesses=[{"p": exc.p}],
                           checked_items=[{"check": f"witness for p = {exc.p}", "ok": False}])
    items = [{"check": f"witness for p = {p}", "ok": True, "first": i,
              "last": last_disagreement(p, length)} for p, i in report]
    return combine("schedule_aperiodicity", {"p_max": p_max, "length": length}, items,
                   notes=["'not periodic' read as: the index sequence is not eventually periodic"])


def sensitivity_grid(length: int, m_max: int) -> Certificate:
    points = [Point(w, "0") for w in all_words(length)] + [Point.parse("(01)"), Point.parse("(011)")]
    items = [sub_item(sensitivity_certificate(x, m)) for x in points for m in range(1, m_max + 1)]
    return combine("sensitivity_grid", {"L": length, "m_max": m_max}, items,
                   witnesses=[{"epsilon": EPSILON}])


def _guarded(fn, claim, *args):
    try:
        return fn(*args)
    except (BlockMismatch, NoWitnessFound, AssertionError) as exc:
        return Certificate(claim, {}, verdict(False), witnesses=[{"error": str(exc)}])


def banks_hypotheses_report(length: int = 6, n: int = 3, horizon: int = 50,
                            p_max: int = 256, schedule_length: int = 4096) -> Certificate:
    """All three hypotheses of the sensitivity theorem on the Thue-Morse system, plus the conclusion."""
    transitivity = combine(
        "transitivity",
        {"L": length},
        [sub_item(_guarded(lambda: dense_orbit_point(length)[1], "dense_orbit")),
         sub_item(_guarded(mixing_all_pairs, "mixing_all_pairs", length))],
        notes=["vacuous"] if length == 0 else [],
    )
    periodic = combine(
        "dense_periodic_points_section",
        {"L": length, "n": n, "K": horizon},
        [sub_item(_guarded(balanced_blocks, "balanced_blocks", max(n, 1), 1 << 12)),
         sub_item(_guarded(dense_periodic_points, "dense_periodic_points", length, n, horizon))],
    )
    claim3 = _guarded(verify_claim3, "claim3", 1000)
    generated = {"check": "finitely generated: {sigma, sigma^2}", "ok": TM.generator_count() == 2,
                 "generators": TM.generator_count()}
    aperiodic = _guarded(aperiodicity_certificate, "schedule_aperiodicity", p_max, schedule_length)
    conclusion = _guarded(sensitivity_grid, "sensitivity_grid", min(length, 4), max(length, 1))
    items = [
        sub_item(transitivity, "(1) topological transitivity"),
        sub_item(periodic, "(2) dense periodic points"),
        sub_item(claim3, "(3) two invariant periodic points with disjoint orbits"),
        generated,
        sub_item(aperiodic, "schedule is not periodic"),
        sub_item(conclusion, "conclusion: sensitive with epsilon = 1/2"),
    ]
    params = {"L": length, "n": n, "K": horizon, "p_max": p_max, "schedule_length": schedule_length}
    return combine("banks_hypotheses", params, items, notes=[FINITE_RESOLUTION_NOTE])


def default_block_index(length: int) -> int:
    """Smallest n >= 3 with 3|A_n| >= length."""
    n = 3
    while 3 * block_length(n) < length:
        n += 1
    return n


def verify_all(length: int = 6, n: int = 3, horizon: int = 50) -> Certificate:
    """The Thue-Morse report together with the rotation-model checks."""
    items = [
        sub_item(banks_hypotheses_report(length, n, horizon)),
        sub_item(telescoping_certificate()),
    ]
    return combine("all", {"L": length, "n": n, "K": horizon}, items)


def replay(report: dict) -> Certificate:
    """Re-run the check a structured certificate records."""
    p = report["parameters"]
    claim = report["claim"]
    runners = {
        "periodic_point": lambda: is_periodic_point(Schedule.parse(p["schedule"]), Point.parse(p["point"]),
                                                    p["n"], p["K"]),
        "mixing_threshold": lambda: mixing_threshold(Cylinder.parse(p["u"]), Cylinder.parse(p["v"]),
                                                     Schedule.parse(p["schedule"]))[1],
        "mixing_all_pairs": lambda: mixing_all_pairs(p["L"]),
        "claim2": lambda: verify_claim2(Point.parse(p["x"]), p["n"], p["K"])[1],
        "dense_periodic_points": lambda: dense_periodic_points(p["L"], p["n"], p["K"]),
        "claim3": lambda: verify_claim3(p["horizon"]),
        "sensitivity": lambda: sensitivity_certificate(Point.parse(p["x"]), p["m"]),
        "sensitivity_grid": lambda: sensitivity_grid(p["L"], p["m_max"]),
        "dense_orbit": lambda: dense_orbit_point(p["L"])[1],
        "balanced_blocks": lambda: balanced_blocks(p["n_max"], p["length"]),
        "schedule_aperiodicity": lambda: aperiodicity_certificate(p["p_max"], p["length"]),
        "banks_hypotheses": lambda: banks_hypotheses_report(p["L"], p["n"], p["K"], p["p_max"],
                                                            p["schedule_length"]),
        "all": lambda: verify_all(p["L"], p["n"], p["K"]),
        "invariant_periodic_point": lambda: invariant_periodicity_certificate(
            RotationPoint.parse(p["point"]), p["K"]),
        "example1_telescoping": lambda: telescoping_certificate(p["m_max"], p["K_max"], p["samples"],
                                                                p["horizon"], p["seed"]),
    }
    if claim not in runners:
        raise KeyError(f"no replay rule for claim {claim!r}")
    return runners[claim]()


def replays_identically(report: dict) -> bool:
    return replay(report).to_dict() == report

