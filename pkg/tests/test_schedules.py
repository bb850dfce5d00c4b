import pytest

from nadslab.config import CapExceeded, cap_limit
from nadslab.oracle import brute_partial_exponent, naive_shift_amount, tm_parity
from nadslab.schedules import (
    Schedule,
    ScheduleExhausted,
    ScheduleKind,
    checkpoint_identity,
    exponent_range,
    quad_exponent,
    quad_partial_sum,
    shift_amount,
    shift_amounts,
)
from nadslab.words import block_length, thue_morse_prefix

TM = Schedule.thue_morse()


def test_shift_amount_examples():
    assert shift_amount(0) == 0
    # 0110 has two ones
    assert shift_amount(4) == 4 + thue_morse_prefix(4).ones() == 6
    assert shift_amount(8) == 8 + thue_morse_prefix(8).ones() == 12 == 3 * 2 * block_length(2)


def test_shift_amount_matches_naive_sum():
    for n in range(0, 3000, 7):
        assert shift_amount(n) == naive_shift_amount(TM, n)


def test_shift_increments_and_bounds():
    sums = shift_amounts(10**6)
    bits = thue_morse_prefix(10**6).bits
    for n in range(10**6):
        step = sums[n + 1] - sums[n]
        assert step == 1 + (bits[n] == "1")
    assert all(n <= s <= 2 * n for n, s in enumerate(sums))


def test_shift_amount_respects_cap():
    with cap_limit(1000):
        with pytest.raises(CapExceeded):
            shift_amount(1001)


def test_checkpoint_examples():
    assert naive_shift_amount(TM, 2) == 3 and checkpoint_identity(1, 1)
    assert checkpoint_identity(2, 2)
    assert naive_shift_amount(TM, 320) == 480 and checkpoint_identity(5, 10)


def test_checkpoint_grid():
    assert all(checkpoint_identity(n, k) for n in range(1, 11) for k in range(1, 101))


def test_checkpoint_against_parity_oracle():
    for n in range(1, 7):
        a = block_length(n)
        for k in range(1, 30):
            m = 2 * k * a
            assert m + sum(tm_parity(i) for i in range(1, m + 1)) == 3 * k * a


def test_quad_exponent_examples():
    # f, f^-1, f^-1, f, f^2, f^-2, f^-2, f^2, ...
    assert [quad_exponent(i) for i in range(1, 9)] == [1, -1, -1, 1, 2, -2, -2, 2]
    assert quad_exponent(6) == -2
    assert quad_exponent(12) == 3
    assert all(abs(quad_exponent(i)) == -(-i // 4) for i in range(1, 500))


def test_quad_partial_sum_examples():
    assert quad_partial_sum(0) == 0
    assert quad_partial_sum(5) == 1 - 1 - 1 + 1 + 2 == 2
    assert quad_partial_sum(10) == brute_partial_exponent(10) == 0


def test_quad_partial_sum_closed_form_matches_brute_force():
    running = 0
    for m in range(1, 20001):
        running += quad_exponent(m)
        assert quad_partial_sum(m) == running
    assert all(quad_partial_sum(m) == brute_partial_exponent(m) for m in range(200))


def test_telescoping_and_odd_checkpoints():
    assert all(quad_partial_sum(2 * m) == 0 for m in range(10**5 + 1))
    for n in range(1, 10**4 + 1):
        assert quad_partial_sum(4 * n - 3) == n
        assert quad_partial_sum(4 * n - 1) == -n


def test_exponent_range_examples():
    assert exponent_range(2) == {0, 1}
    # E(1..10) = 1,0,-1,0,2,0,-2,0,3,0
    assert [brute_partial_exponent(m) for m in range(1, 11)] == [1, 0, -1, 0, 2, 0, -2, 0, 3, 0]
    assert exponent_range(10) == {-2, -1, 0, 1, 2, 3}
    for k in range(1, 101):
        assert set(range(-k, k + 1)) <= exponent_range(4 * k)


def test_schedule_serialization():
    assert str(Schedule.parse("tm")) == "tm"
    assert Schedule.parse("quad").kind is ScheduleKind.QUAD_EXPONENT
    s = Schedule.parse("explicit:0,1,1(0,1)")
    assert s.prefix == (0, 1, 1) and s.period == (0, 1)
    assert str(s) == "explicit:0,1,1(0,1)"
    with pytest.raises(ValueError):
        Schedule.parse("explicit:0,2")


def test_explicit_schedule_accumulator():
    s = Schedule.explicit([0, 1, 1], [0, 1])
    assert s.generator_count() == 2 and s.is_finitely_generated()
    for n in range(40):
        assert s.shift_amount(n) == naive_shift_amount(s, n)
    finite = Schedule.explicit([1, 0])
    assert finite.shift_amount(2) == 3
    with pytest.raises(ScheduleExhausted):
        finite.shift_amount(3)


def test_finite_generation_flags():
    assert TM.is_finitely_generated() and TM.generator_count() == 2
    assert not Schedule.quad().is_finitely_generated()
    with pytest.raises(ValueError):
        Schedule.explicit([0, 3], generators=2)
