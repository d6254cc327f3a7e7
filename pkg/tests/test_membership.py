from itertools import product

import pytest

from psl2t.membership import (NotReducedError, NotThinError, check_eq1,
                              check_eq2, diagram_to_word, exposed_left_leaf,
                              is_member, is_thin, thin_from_weights,
                              weights_from_thin, word_to_diagram)
from psl2t.trees import (TreePairDiagram, diagram_of_word_letters,
                         generators, parse_diagram, parse_tree)
from psl2t.words import enumerate_normal_words, parse_word


def test_thin_trees():
    assert is_thin(parse_tree("100"))
    assert is_thin(parse_tree("10100"))
    assert is_thin(parse_tree("1011000"))
    assert is_thin(parse_tree("1110000"))  # left comb
    assert not is_thin(parse_tree("0"))
    assert not is_thin(parse_tree("1100100"))  # balanced, both children internal


def test_weight_bijection():
    for k in range(0, 7):
        seen = set()
        for w in product((-1, 1), repeat=k):
            t = thin_from_weights(w)
            assert is_thin(t)
            assert t.n_leaves == k + 2
            assert weights_from_thin(t) == w
            seen.add(t.bits)
        assert len(seen) == 2 ** k
    with pytest.raises(NotThinError):
        weights_from_thin(parse_tree("1100100"))


def test_exposed_left_leaf():
    assert exposed_left_leaf(()) == 1
    assert exposed_left_leaf((1, -1, -1)) == 3
    # cross-check against the tree itself
    from psl2t.trees import exposed_caret_left_leaves
    for w in product((-1, 1), repeat=4):
        t = thin_from_weights(w)
        assert exposed_caret_left_leaves(t) == [exposed_left_leaf(w)]


def test_word_to_diagram_pinned():
    assert str(word_to_diagram(parse_word("bab"))) == "1011000:4:1010100"
    assert str(word_to_diagram(parse_word("b"))) == "10100:3:10100"
    assert str(word_to_diagram(parse_word("a"))) == "100:2:100"


def test_word_to_diagram_matches_oracle():
    for w in enumerate_normal_words(5):
        assert word_to_diagram(w) == diagram_of_word_letters(w.letters())


def test_diagram_word_roundtrip():
    for w in enumerate_normal_words(5):
        assert diagram_to_word(word_to_diagram(w)) == w


def test_is_member_small_diagrams():
    # every reduced diagram with < 4 leaves belongs to PSL2(Z)
    from psl2t.trees import all_trees, is_reduced
    count = 0
    for n in (1, 2, 3):
        for t1 in all_trees(n):
            for t2 in all_trees(n):
                for rot in range(1, n + 1):
                    d = TreePairDiagram(t1, rot, t2)
                    if is_reduced(d):
                        assert is_member(d)
                        count += 1
    assert count == 10


def test_is_member_rejects_unreduced():
    with pytest.raises(NotReducedError):
        is_member(parse_diagram("100:1:100"))


def test_generators_membership():
    gens = generators()
    # A = C^{-1} a carries the word Ba; B is a genuine non-member
    assert is_member(gens["A"])
    assert diagram_to_word(gens["A"]) == parse_word("Ba")
    assert not is_member(gens["B"])
    assert diagram_to_word(gens["B"]) is None
    assert is_member(gens["C"])
    assert diagram_to_word(gens["C"]) == parse_word("b")


def test_equations_pin_rotation():
    # for weight vectors satisfying eq1, exactly one rotation satisfies eq2
    for k in (2, 3, 4):
        for r in product((-1, 1), repeat=k):
            for s in product((-1, 1), repeat=k):
                if not check_eq1(r, s):
                    continue
                hits = [rot for rot in range(1, k + 3) if check_eq2(r, s, rot)]
                assert len(hits) == 1
