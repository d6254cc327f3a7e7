from fractions import Fraction

import pytest

from psl2t.harness import (abelianization, bfs_length_abc, ball_diagrams,
                           caret_count, free_subgroup_report,
                           free_subgroup_words, length_bounds_report,
                           render_tree, small_reduced_diagrams, verify_all)
from psl2t.membership import NotReducedError, word_to_diagram
from psl2t.trees import (IDENTITY_DIAGRAM, generators, invert, multiply,
                         parse_diagram)
from psl2t.words import parse_word, reduce_word


def test_caret_count():
    assert caret_count(IDENTITY_DIAGRAM) == 0
    assert caret_count(generators()["a"]) == 1
    assert caret_count(word_to_diagram(parse_word("bab"))) == 3
    with pytest.raises(NotReducedError):
        caret_count(parse_diagram("100:1:100"))


def test_bfs_lengths_pinned():
    gens = generators()
    assert bfs_length_abc(IDENTITY_DIAGRAM, 2) == 0
    for name in "ABC":
        assert bfs_length_abc(gens[name], 2) == 1
    # a = CA needs two letters
    assert bfs_length_abc(gens["a"], 3) == 2
    assert bfs_length_abc(multiply(gens["A"], gens["B"]), 3) == 2


def test_ball_growth_is_monotone():
    sizes = [len(ball_diagrams(r)) for r in range(0, 4)]
    assert sizes[0] == 1
    assert sizes == sorted(sizes)
    # six generators, no relations of length 2 except inverses
    assert sizes[1] == 7


def test_length_bounds_report():
    rows = length_bounds_report(4)
    by_word = {str(r.word): r for r in rows}
    assert by_word["e"].carets == 0
    assert by_word["a"].carets == 1
    assert by_word["bab"].carets == 3 and by_word["bab"].len_ab == 3
    for r in rows:
        if r.word.k >= 2:
            assert r.leaves == r.word.k + 2
            assert 2 * r.carets - 3 <= r.len_ab <= 2 * r.carets - 1


def test_abelianization():
    assert abelianization(reduce_word("abab")) == (0, 2)
    assert abelianization(reduce_word("aBaB")) == (0, 1)
    assert abelianization(parse_word("a")) == (1, 0)


def test_free_subgroup_words_reduced():
    words = list(free_subgroup_words(3))
    assert len(words) == 4 + 12 + 36
    assert all("gG" not in w and "Gg" not in w and
               "hH" not in w and "Hh" not in w for w in words)


def test_free_subgroup_report():
    rows = free_subgroup_report(3)
    for row in rows:
        assert not row.image.is_identity
        assert row.image_len >= 2 * len(row.spelling)


def test_small_reduced_diagrams():
    assert len(small_reduced_diagrams()) == 10


def test_render_tree():
    text = render_tree(word_to_diagram(parse_word("bab")))
    assert text.count("digraph") == 2
    assert 'label="4"' in text
    assert "//   1 -> 4" in text
    # deterministic
    assert text == render_tree(word_to_diagram(parse_word("bab")))


def test_verify_all_smoke():
    results = verify_all(3, 2)
    assert len(results) == 10
    assert all(ok for _, ok, _ in results)
