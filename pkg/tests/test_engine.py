import random

import pytest

from nadslab.engine import (
    OrbitNotClosed,
    WrongSystem,
    evaluate,
    is_invariant_orbit,
    is_periodic_point,
    orbit,
    orbit_set,
    orbits_disjoint,
)
from nadslab.oracle import naive_orbit, naive_trace
from nadslab.schedules import Schedule, shift_amount
from nadslab.shift import Point, shift

from conftest import random_point

TM = Schedule.thue_morse()
ZERO, ONE = Point("", "0"), Point("", "1")


def test_evaluate_examples():
    x = Point("0110", "01")
    assert evaluate(TM, x, 0) == x
    assert evaluate(TM, ZERO, 17) == ZERO
    assert evaluate(TM, Point("", "011"), 2) == Point("", "011")


def test_evaluate_rejects_quad_schedule():
    with pytest.raises(WrongSystem):
        evaluate(Schedule.quad(), ZERO, 1)


def test_orbit_examples():
    assert orbit(TM, ONE, 5) == [ONE] * 6
    x = Point("", "01")
    assert orbit(TM, x, 3) == [shift(x, k) for k in (0, 1, 3, 5)]
    assert orbit(TM, x, 0) == [x]


def test_evaluation_law_against_symbol_simulation():
    rng = random.Random(7)
    horizon = 10**4
    length = shift_amount(horizon) + 40
    for _ in range(100):
        x = random_point(rng, 12)
        steps = set(range(50)) | set(range(0, horizon + 1, 97)) | {horizon}
        for n, rest in naive_trace(x.prefix(length), TM, horizon, steps):
            assert evaluate(TM, x, n).prefix(len(rest)) == rest


def test_fixed_points():
    for n in range(10**4 + 1):
        assert evaluate(TM, ZERO, n) == ZERO and evaluate(TM, ONE, n) == ONE


def test_composition_is_not_additive():
    # g_1^(2) after g_1^(1) is sigma^3 sigma^1, but g_1^(3) is sigma^5
    x = Point("", "0010")
    assert shift(evaluate(TM, x, 1), shift_amount(2)) != evaluate(TM, x, 3)


def test_periodic_point_examples():
    assert is_periodic_point(TM, ZERO, 1, 100).passed
    cert = is_periodic_point(TM, Point("", "011"), 2, 50)
    assert cert.passed
    assert [item["shift"] for item in cert.checked_items[:4]] == [0, 3, 6, 9]
    assert not is_periodic_point(TM, Point("", "01"), 1, 2).passed


def test_periodic_certificate_replays():
    x = Point("", "011001")
    cert = is_periodic_point(TM, x, 4, 30)
    assert cert.passed
    for item in cert.checked_items:
        assert shift_amount(4 * item["k"]) == item["shift"]
        assert shift(x, item["shift"]) == x
    assert any("checkpoint" in note for note in cert.notes)


def test_invariant_orbit_examples():
    assert is_invariant_orbit(ZERO, (1, 2))
    assert is_invariant_orbit(ONE, (1, 2))
    x = Point("", "01")
    assert orbit_set(TM, x) == {Point("", "01"), Point("", "10")}
    assert is_invariant_orbit(x, (1, 2))


def test_preperiodic_orbits():
    x = Point("1", "0")
    assert orbit_set(TM, x) == {x, ZERO}
    assert is_invariant_orbit(x, (1, 2))
    # S takes the values 0, 1, 3, ...: sigma^2 of 011(0) is 1(0), never visited
    z = Point("011", "0")
    assert orbit_set(TM, z) == {z, Point("11", "0"), ZERO}
    assert not is_invariant_orbit(z, (1, 2))


def test_orbit_not_closed():
    with pytest.raises(OrbitNotClosed):
        orbit_set(TM, Point("", "0" * 40 + "1"), limit=50)


def test_orbits_disjoint_examples():
    assert orbits_disjoint(ZERO, ONE)
    x = Point("0110", "01")
    assert not orbits_disjoint(x, x)
    assert not orbits_disjoint(Point("", "01"), Point("", "10"))


def test_naive_orbit_example():
    # drop 1, 2, 2 symbols
    assert naive_orbit("0110100110010110", TM, 3).bits == "0110100110010110"[5:] == "00110010110"
    assert naive_orbit("0110", TM, 0).bits == "0110"
