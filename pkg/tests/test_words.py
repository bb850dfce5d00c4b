import pytest
from hypothesis import given

from nadslab.config import CapExceeded, cap_limit
from nadslab.oracle import tm_parity
from nadslab.words import (
    BlockForm,
    BlockMismatch,
    NoWitnessFound,
    Word,
    block_length,
    classify_block,
    complement,
    concat,
    power,
    read_words,
    schedule_aperiodicity,
    thue_morse_block,
    thue_morse_prefix,
    xi,
)
import nadslab.words as words_mod

from conftest import bits


def flip_oracle(s):
    return "".join("1" if c == "0" else "0" for c in s)


def test_word_rejects_non_binary():
    with pytest.raises(ValueError):
        Word("012")


def test_complement_examples():
    assert complement("0").bits == "1"
    assert complement("").bits == ""
    assert complement("01101001").bits == flip_oracle("01101001") == "10010110"


@given(bits)
def test_complement_involution(s):
    w = Word(s)
    assert len(complement(w)) == len(w)
    assert complement(complement(w)) == w


def test_complement_involution_long_prefix():
    w = thue_morse_prefix(1 << 16)
    assert complement(complement(w)) == w


def test_concat_and_power():
    assert concat("0", "1").bits == "01"
    assert concat("", "1101") == Word("1101")
    assert concat("10", "01").bits == "1001"
    assert power("01", 3).bits == "010101"
    assert power("1101", 0).bits == ""
    assert power("1", 4).bits == "1111"
    assert (Word("10") + Word("01")).bits == "1001"


def test_one_based_accessors():
    w = Word("0110")
    assert [w.at(i) for i in range(1, 5)] == [0, 1, 1, 0]
    assert w.factor(2, 3).bits == "11"
    with pytest.raises(IndexError):
        w.at(0)


def test_blocks_match_recursive_definition():
    assert thue_morse_block(0).bits == "0"
    assert thue_morse_block(1).bits == "1"
    # A_3 = complement(A_0 A_1 A_2) = complement("0" "1" "10")
    assert thue_morse_block(3).bits == flip_oracle("0" + "1" + "10") == "1001"

    blocks = [thue_morse_block(0)]
    for n in range(1, 21):
        expected = flip_oracle("".join(b.bits for b in blocks))
        blocks.append(thue_morse_block(n))
        assert blocks[-1].bits == expected
        assert len(blocks[-1]) == block_length(n) == 2 ** (n - 1)


def test_prefix_examples():
    assert thue_morse_prefix(0).bits == ""
    assert thue_morse_prefix(8).bits == "0" + "1" + "10" + "1001"


def test_prefix_is_block_concatenation():
    acc = ""
    for n in range(17):
        acc += thue_morse_block(n).bits
        assert thue_morse_prefix(len(acc)).bits == acc


def test_prefix_matches_parity_oracle():
    w = thue_morse_prefix(1 << 16).bits
    assert all(int(w[i - 1]) == tm_parity(i) for i in range(1, (1 << 16) + 1))
    assert [xi(i) for i in (1, 2, 8)] == [0, 1, 1]


def test_classify_examples():
    assert classify_block(2, 0) is BlockForm.ABAR_A  # "01"·"10"
    assert thue_morse_prefix(4).factor(3, 4).bits == "10"
    assert classify_block(1, 1) is BlockForm.A_ABAR
    form = classify_block(3, 2)
    block = thue_morse_prefix(24).factor(17, 24)
    assert block.ones() == 4
    a = thue_morse_block(3).bits
    expected = a + flip_oracle(a) if form is BlockForm.A_ABAR else flip_oracle(a) + a
    assert block.bits == expected


def test_classify_rejects_n_zero():
    with pytest.raises(ValueError):
        classify_block(0, 0)


def test_classify_detects_corruption(monkeypatch):
    words_mod._block_forms(1)  # reference forms come from the real sequence
    monkeypatch.setattr(words_mod, "_tm_buffer", lambda length: "0" * max(length, 1))
    with pytest.raises(BlockMismatch):
        classify_block(1, 0)


def test_balance_small_range():
    prefix = thue_morse_prefix(1 << 14)
    for n in range(1, 8):
        size = 2 * block_length(n)
        for j in range((1 << 14) // size):
            classify_block(n, j)
            assert prefix.factor(j * size + 1, (j + 1) * size).ones() == block_length(n)


def test_aperiodicity_examples():
    assert schedule_aperiodicity(1, 8) == [(1, 1)]
    report = schedule_aperiodicity(4, 64)
    assert [p for p, _ in report] == [1, 2, 3, 4]
    w = thue_morse_prefix(64).bits
    for p, i in report:
        assert w[i - 1] != w[i + p - 1]
        assert all(w[j] == w[j + p] for j in range(i - 1))


def test_aperiodicity_requires_long_enough_prefix():
    with pytest.raises(ValueError):
        schedule_aperiodicity(4, 8)


def test_aperiodicity_reports_missing_witness(monkeypatch):
    monkeypatch.setattr(words_mod, "_tm_buffer", lambda length: "01" * length)
    with pytest.raises(NoWitnessFound):
        schedule_aperiodicity(2, 16)


def test_cap_is_explicit():
    with cap_limit(100):
        thue_morse_prefix(100)
        with pytest.raises(CapExceeded):
            thue_morse_prefix(101)


def test_word_file_roundtrip(tmp_path):
    path = tmp_path / "words.txt"
    blocks = [thue_morse_block(n) for n in range(6)] + [Word("")]
    words_mod.write_words(path, blocks)
    assert path.read_text() == "0\n1\n10\n1001\n10010110\n1001011001101001\n\n"
    assert read_words(path) == blocks


def test_word_file_rejects_garbage(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("01\n0a\n")
    with pytest.raises(ValueError):
        read_words(path)
    path.write_text("01")
    with pytest.raises(ValueError):
        read_words(path)
