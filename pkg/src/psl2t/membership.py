"""Thin-tree characterization of PSL2(Z) inside Thompson's group T.

Thin trees are encoded by weight vectors over {-1, +1}: weight +1 means
the internal vertex hangs as the left child of its predecessor.  A
reduced diagram lies in PSL2(Z) iff it has fewer than 4 leaves, or both
trees are thin and the weight vectors satisfy the two membership
equations (a correlation sum and a rotation congruence).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Optional, Tuple

from .trees import (LEAF, Tree, TreePairDiagram, caret,
                    diagram_of_word_letters, is_reduced)
from .words import IDENTITY_WORD, NormalWord, parse_word


class NotThinError(ValueError):
    pass


class NotReducedError(ValueError):
    pass


def is_thin(t: Tree) -> bool:
    """Every caret has a leaf child and an internal child, except the last."""
    node = t
    if node.is_leaf:
        return False
    while True:
        if node.left.is_leaf and node.right.is_leaf:
            return True
        if node.left.is_leaf:
            node = node.right
        elif node.right.is_leaf:
            node = node.left
        else:
            return False


def weights_from_thin(t: Tree) -> Tuple[int, ...]:
    if t.is_leaf:
        raise NotThinError("a single leaf is not a thin tree")
    weights = []
    node = t
    while not (node.left.is_leaf and node.right.is_leaf):
        if node.right.is_leaf:
            weights.append(1)
            node = node.left
        elif node.left.is_leaf:
            weights.append(-1)
            node = node.right
        else:
            raise NotThinError("tree %s is not thin" % t.bits)
    return tuple(weights)


def thin_from_weights(w) -> Tree:
    node = caret(LEAF, LEAF)
    for r in reversed(tuple(w)):
        if r == 1:
            node = caret(node, LEAF)
        elif r == -1:
            node = caret(LEAF, node)
        else:
            raise ValueError("weights must be +-1")
    return node


def exposed_left_leaf(w) -> int:
    """Leaf number of the exposed caret's left leaf: 1 + #{negative weights}."""
    return 1 + sum(1 for r in w if r == -1)


def check_eq1(r, s) -> bool:
    k = len(r)
    if len(s) != k:
        raise ValueError("weight vectors differ in length")
    if k < 2:
        raise ValueError("equations need k >= 2")
    total = sum(r[i] * s[k + 1 - i] for i in range(2, k))
    return total == 2 - k


def check_eq2(r, s, rot: int) -> bool:
    k = len(r)
    if len(s) != k or k < 2:
        raise ValueError("equations need matching lengths, k >= 2")
    n = k + 2
    lhs = exposed_left_leaf(r) + rot + _eps(s[0])
    rhs = (3 - s[1]) // 2
    return lhs % n == rhs % n


def _eps(x: int) -> int:
    return 1 if x == 1 else 0


def _eps_inv(e: int) -> int:
    return 1 if e == 1 else -1


@lru_cache(maxsize=1)
def _small_table() -> Tuple[Tuple[NormalWord, TreePairDiagram], ...]:
    # the 10 reduced diagrams with < 4 leaves, derived from the
    # multiplication oracle (authoritative in place of the figures)
    spellings = ("", "a", "b", "B", "ab", "aB", "ba", "Ba", "aba", "aBa")
    return tuple((parse_word(s), diagram_of_word_letters(s)) for s in spellings)


def word_to_diagram(w: NormalWord) -> TreePairDiagram:
    """Reduced diagram of a normal word, by the direct weight formulas."""
    k = w.k
    if k < 2:
        for word, diag in _small_table():
            if word == w:
                return diag
        raise AssertionError("k <= 1 word missing from the small table: %s" % w)
    r = (_eps_inv(w.eps1),) + w.deltas[:-1]
    s = (_eps_inv(w.eps2),) + tuple(-d for d in reversed(w.deltas[1:]))
    n = k + 2
    rot = ((3 - s[1]) // 2 - _eps(s[0]) - exposed_left_leaf(r) - 1) % n + 1
    return TreePairDiagram(thin_from_weights(r), rot, thin_from_weights(s))


def diagram_to_word(d: TreePairDiagram) -> Optional[NormalWord]:
    """Normal word of a reduced member diagram; None for non-members."""
    if not is_member(d):
        return None
    if d.n_leaves < 4:
        for word, diag in _small_table():
            if diag == d:
                return word
        raise AssertionError("small diagram missing from the table: %s" % d)
    r = weights_from_thin(d.source)
    s = weights_from_thin(d.target)
    k = len(r)
    eps1 = _eps(r[0])
    eps2 = _eps(s[0])
    deltas = tuple(r[1:]) + (-s[1],)
    return NormalWord(eps1, deltas, eps2)


def is_member(d: TreePairDiagram) -> bool:
    """Theorem-level membership test for a reduced diagram."""
    if not is_reduced(d):
        raise NotReducedError("diagram %s is not reduced" % d)
    if d.n_leaves < 4:
        return True
    if not (is_thin(d.source) and is_thin(d.target)):
        return False
    r = weights_from_thin(d.source)
    s = weights_from_thin(d.target)
    return check_eq1(r, s) and check_eq2(r, s, d.rot)
