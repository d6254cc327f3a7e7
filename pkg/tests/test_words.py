import pytest

from psl2t.words import (GENERATOR_MATS, IDENTITY_MAT, IDENTITY_WORD, MAT_A,
                         MAT_B, NormalWord, PSL2Matrix, enumerate_normal_words,
                         matrix_to_word, parse_matrix, parse_word, reduce_word,
                         word_length_ab, word_to_matrix)


def test_matrix_sign_canonical():
    assert PSL2Matrix.make(-1, 0, 0, -1) == IDENTITY_MAT
    assert PSL2Matrix.make(0, 1, -1, 0) == MAT_A
    with pytest.raises(ValueError):
        PSL2Matrix(1, 1, 1, 1)


def test_generator_orders():
    assert MAT_A * MAT_A == IDENTITY_MAT
    assert MAT_B * MAT_B * MAT_B == IDENTITY_MAT
    assert GENERATOR_MATS["B"] == MAT_B.inverse()


def test_parse_matrix():
    assert parse_matrix("[[0,-1],[1,0]]") == MAT_A
    with pytest.raises(ValueError):
        parse_matrix("[[1,0],[0,1]")


def test_reduce_word():
    assert str(reduce_word("aa")) == "e"
    assert str(reduce_word("bbb")) == "e"
    assert str(reduce_word("bb")) == "B"
    assert str(reduce_word("abba")) == "aBa"
    assert str(reduce_word("abaB" "baba")) == "aBa"
    assert parse_word("e") == IDENTITY_WORD


def test_normal_word_validation():
    with pytest.raises(ValueError):
        NormalWord(0, (), 1)
    with pytest.raises(ValueError):
        NormalWord(0, (2,), 0)
    assert NormalWord(1, (1, -1), 1).letters() == "abaBa"


def test_word_matrix_roundtrip_exhaustive():
    seen = set()
    count = 0
    for w in enumerate_normal_words(5):
        m = word_to_matrix(w)
        assert m not in seen  # normal forms are distinct in PSL2(Z)
        seen.add(m)
        assert matrix_to_word(m) == w
        count += 1
    assert count == 2 + sum(4 * 2 ** k for k in range(1, 6))


def test_word_matrix_convention():
    # left factor applies first: matrix of "ab" is M(b) M(a)
    w = parse_word("ab")
    assert word_to_matrix(w) == MAT_B * MAT_A


def test_word_length():
    assert word_length_ab(IDENTITY_WORD) == 0
    assert word_length_ab(parse_word("a")) == 1
    assert word_length_ab(parse_word("bab")) == 3
    assert word_length_ab(parse_word("abaBa")) == 5


def test_inverse():
    for s in ("a", "b", "ab", "bab", "aBab"):
        w = parse_word(s)
        assert reduce_word(w.letters() + w.inverse().letters()) == IDENTITY_WORD
