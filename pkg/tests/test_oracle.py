import random
from fractions import Fraction

import pytest

from nadslab.checkers import all_words, mixing_threshold
from nadslab.engine import evaluate
from nadslab.oracle import (
    TruncationExhausted,
    exhaustive_mixing,
    naive_orbit,
    rational_metric_series,
    tm_parity,
)
from nadslab.schedules import Schedule, shift_amount
from nadslab.shift import Cylinder, Point, metric

from conftest import random_point

TM = Schedule.thue_morse()


def test_tm_parity_examples():
    assert tm_parity(1) == 0
    assert tm_parity(2) == bin(1).count("1") % 2 == 1
    assert tm_parity(8) == bin(7).count("1") % 2 == 1


def test_naive_orbit_truncation():
    with pytest.raises(TruncationExhausted):
        naive_orbit("01", TM, 2)


def test_naive_orbit_agrees_with_evaluate():
    rng = random.Random(3)
    for _ in range(30):
        x = random_point(rng)
        for n in (0, 1, 2, 5, 17, 100, 333):
            word = naive_orbit(x.prefix(shift_amount(n) + 50), TM, n)
            assert evaluate(TM, x, n).prefix(len(word)) == word.bits


def test_exhaustive_mixing_examples():
    assert exhaustive_mixing(Cylinder("0"), Cylinder("1"), 3) == [False, True, True, True]
    assert all(exhaustive_mixing(Cylinder(""), Cylinder("0110"), 10))


def test_exhaustive_mixing_agrees_with_threshold_on_sample():
    rng = random.Random(5)
    words = list(all_words(8))
    for _ in range(1000):
        u, v = Cylinder(rng.choice(words)), Cylinder(rng.choice(words))
        threshold, _ = mixing_threshold(u, v)
        decided = exhaustive_mixing(u, v, 12)
        assert all(decided[threshold:])
        assert threshold == 0 or not decided[threshold - 1]


def test_rational_metric_series_examples():
    x = Point("01", "1")
    assert rational_metric_series(x, x, 5) == (0, Fraction(1, 32))
    lo, hi = rational_metric_series(Point("", "0"), Point("", "1"), 4)
    assert (lo, hi) == (Fraction(15, 16), Fraction(16, 16))
    assert lo <= 1 <= hi
    lo, hi = rational_metric_series(Point("", "0"), Point("", "01"), 6)
    assert (lo, hi) == (Fraction(21, 64), Fraction(22, 64))
    assert lo <= metric(Point("", "0"), Point("", "01")) <= hi
