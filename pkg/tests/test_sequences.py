from fractions import Fraction
from itertools import product

import pytest

from psl2t.membership import NotThinError, thin_from_weights, word_to_diagram
from psl2t.plmaps import PLMap, plmap_from_diagram
from psl2t.sequences import (SeqS, is_k_extremal, is_k_good, is_k_thin,
                             is_member_seq, plmap_from_seq, seq_from_plmap,
                             sequence_from_thin_tree, thin_tree_from_sequence)
from psl2t.trees import generators
from psl2t.words import enumerate_normal_words, parse_word


def F(num, den):
    return Fraction(num, den)


def test_seqs_validation():
    with pytest.raises(ValueError):
        SeqS((F(1, 2),), (F(1, 2),), 1)  # k < 2
    with pytest.raises(ValueError):
        SeqS((F(1, 2), F(1, 4)), (F(1, 2), F(1, 2)), 1)  # dx sums to 3/4
    with pytest.raises(ValueError):
        SeqS((F(1, 2), F(1, 2)), (F(1, 2), F(1, 2)), 3)  # mark out of range


def test_seq_of_generators():
    a = seq_from_plmap(plmap_from_diagram(generators()["a"]))
    assert (a.dx, a.dy, a.mark) == ((F(1, 2), F(1, 2)), (F(1, 2), F(1, 2)), 2)
    assert str(a) == "1/1,o1/1"
    b = seq_from_plmap(plmap_from_diagram(generators()["b"]))
    assert str(b) == "1/2,o2/1,1/1"


def test_seq_plmap_roundtrip():
    for w in enumerate_normal_words(4):
        f = plmap_from_diagram(word_to_diagram(w))
        assert plmap_from_seq(seq_from_plmap(f)) == f


def test_identity_padding():
    s = seq_from_plmap(PLMap.identity())
    assert s.k == 2 and s.mark == 1
    assert str(s) == "o1/1,1/1"


def test_k_extremal():
    assert is_k_extremal((5, 1, 2, 3, 4))
    assert is_k_extremal((5, 1, 4, 2, 3))
    assert is_k_extremal((1, 2, 3, 4))
    assert not is_k_extremal((2, 1, 3, 4, 5))  # starts inside
    assert not is_k_extremal((1, 2, 4, 3))  # final pair reversed
    assert not is_k_extremal((1, 2, 2))  # not a permutation


def test_k_thin_paper_example():
    deltas = (F(1, 4), F(1, 16), F(1, 16), F(1, 8), F(1, 2))
    assert is_k_thin(deltas) == (5, 1, 4, 2, 3)
    t = thin_tree_from_sequence(deltas)
    from psl2t.membership import weights_from_thin
    assert weights_from_thin(t) == (1, -1, 1)


def test_k_thin_rejects():
    assert is_k_thin((F(1, 2), F(1, 4), F(1, 4), F(1, 8), F(1, 8))) is None
    assert is_k_thin((F(1, 4), F(1, 4), F(1, 4), F(1, 4))) is None
    with pytest.raises(NotThinError):
        thin_tree_from_sequence((F(1, 4), F(1, 4), F(1, 4), F(1, 4)))


def test_thin_bijection_exhaustive():
    for k in range(3, 9):
        seqs = set()
        for w in product((-1, 1), repeat=k - 2):
            t = thin_from_weights(w)
            seq = sequence_from_thin_tree(t)
            assert thin_tree_from_sequence(seq) == t
            seqs.add(seq)
        assert len(seqs) == 2 ** (k - 2)


def test_seven_good_example():
    s = SeqS(
        (F(1, 8), F(1, 32), F(1, 64), F(1, 64), F(1, 16), F(1, 4), F(1, 2)),
        (F(1, 32), F(1, 8), F(1, 4), F(1, 2), F(1, 16), F(1, 64), F(1, 64)),
        4,
    )
    assert is_k_good(s)


def test_big_b_sequence_not_good():
    f = plmap_from_diagram(generators()["B"])
    assert not is_k_good(seq_from_plmap(f))
    assert not is_member_seq(f)


def test_member_words_are_good():
    for w in enumerate_normal_words(8):
        f = plmap_from_diagram(word_to_diagram(w))
        s = seq_from_plmap(f)
        assert s.k == max(w.k, 0) + 2 if w.k >= 2 else s.k in (2, 3)
        assert is_member_seq(f), str(w)
