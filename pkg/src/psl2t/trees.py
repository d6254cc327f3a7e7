"""Binary trees and tree pair diagrams for Thompson's group T.

Trees serialize as preorder bitstrings, '1' for a caret and '0' for a
leaf (single caret = "100").  A tree pair diagram is (source, rot,
target) where rot = sigma(1) pins the cyclic leaf rotation
sigma(p) = rot + p - 1 (mod n, representatives 1..n).

Diagram text format: "<source-bits>:<rot>:<target-bits>".
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Tuple


class Tree:
    """Immutable finite rooted binary tree, interned by bitstring."""

    __slots__ = ("left", "right", "bits", "n_leaves")

    def __init__(self, left: Optional["Tree"], right: Optional["Tree"]):
        if (left is None) != (right is None):
            raise ValueError("caret needs both children")
        self.left = left
        self.right = right
        if left is None:
            self.bits = "0"
            self.n_leaves = 1
        else:
            self.bits = "1" + left.bits + right.bits
            self.n_leaves = left.n_leaves + right.n_leaves

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    @property
    def n_carets(self) -> int:
        return self.n_leaves - 1

    def __eq__(self, other) -> bool:
        return isinstance(other, Tree) and self.bits == other.bits

    def __hash__(self):
        return hash(self.bits)

    def __repr__(self):
        return "Tree(%r)" % self.bits


LEAF = Tree(None, None)


def caret(left: Tree, right: Tree) -> Tree:
    return Tree(left, right)


def parse_tree(bits: str) -> Tree:
    pos = 0

    def rec() -> Tree:
        nonlocal pos
        if pos >= len(bits):
            raise ValueError("truncated tree bitstring %r" % bits)
        ch = bits[pos]
        pos += 1
        if ch == "0":
            return LEAF
        if ch == "1":
            left = rec()
            right = rec()
            return caret(left, right)
        raise ValueError("bad character %r in tree bitstring" % ch)

    t = rec()
    if pos != len(bits):
        raise ValueError("trailing garbage in tree bitstring %r" % bits)
    return t


def leaf_intervals(t: Tree) -> List[Tuple[Fraction, Fraction]]:
    """Standard dyadic partition of [0,1] carried by the tree's leaves."""
    out = []

    def rec(node: Tree, lo: Fraction, hi: Fraction):
        if node.is_leaf:
            out.append((lo, hi))
        else:
            mid = (lo + hi) / 2
            rec(node.left, lo, mid)
            rec(node.right, mid, hi)

    rec(t, Fraction(0), Fraction(1))
    return out


def tree_from_partition(points: List[Fraction]) -> Tree:
    """Tree whose leaf intervals are the given partition of [0, 1].

    Points must be an increasing list 0 = p0 < ... < pn = 1 whose
    intervals are all standard dyadic.
    """
    if points[0] != 0 or points[-1] != 1:
        raise ValueError("partition must run from 0 to 1")

    def rec(lo: Fraction, hi: Fraction, inner: List[Fraction]) -> Tree:
        if not inner:
            return LEAF
        mid = (lo + hi) / 2
        if mid not in inner:
            raise ValueError("partition is not a standard dyadic subdivision")
        i = inner.index(mid)
        return caret(rec(lo, mid, inner[:i]), rec(mid, hi, inner[i + 1:]))

    return rec(Fraction(0), Fraction(1), list(points[1:-1]))


def expand_union(t1: Tree, t2: Tree) -> Tree:
    """Least common expansion: union of the two caret sets."""
    if t1.is_leaf:
        return t2
    if t2.is_leaf:
        return t1
    return caret(expand_union(t1.left, t2.left), expand_union(t1.right, t2.right))


def common_expansion(t1: Tree, t2: Tree) -> Tree:
    return expand_union(t1, t2)


def exposed_caret_left_leaves(t: Tree) -> List[int]:
    """1-based left-leaf indices of the exposed carets of t."""
    out = []
    counter = [0]

    def rec(node: Tree):
        if node.is_leaf:
            counter[0] += 1
            return
        if node.left.is_leaf and node.right.is_leaf:
            out.append(counter[0] + 1)
        rec(node.left)
        rec(node.right)

    rec(t)
    return out


def remove_caret_at(t: Tree, left_leaf: int) -> Tree:
    """Replace the exposed caret whose left leaf is the given index by a leaf."""
    counter = [0]

    def rec(node: Tree) -> Tree:
        if node.is_leaf:
            counter[0] += 1
            return node
        if node.left.is_leaf and node.right.is_leaf and counter[0] + 1 == left_leaf:
            counter[0] += 2
            return LEAF
        left = rec(node.left)
        right = rec(node.right)
        return caret(left, right)

    out = rec(t)
    if out.n_leaves != t.n_leaves - 1:
        raise ValueError("no exposed caret with left leaf %d" % left_leaf)
    return out


def split_subtrees(t: Tree, expansion: Tree) -> List[Tree]:
    """For each leaf of t, the subtree grafted there in the expansion."""
    out = []

    def rec(node: Tree, exp: Tree):
        if node.is_leaf:
            out.append(exp)
            return
        if exp.is_leaf:
            raise ValueError("second tree is not an expansion of the first")
        rec(node.left, exp.left)
        rec(node.right, exp.right)

    rec(t, expansion)
    return out


def graft(t: Tree, subs: List[Tree]) -> Tree:
    """Replace the i-th leaf of t by subs[i]."""
    it = iter(subs)

    def rec(node: Tree) -> Tree:
        if node.is_leaf:
            return next(it)
        return caret(rec(node.left), rec(node.right))

    out = rec(t)
    try:
        next(it)
    except StopIteration:
        return out
    raise ValueError("too many subtrees for %d leaves" % t.n_leaves)


class TreePairDiagram:
    """Combinatorial element of T: (source, rot, target)."""

    __slots__ = ("source", "rot", "target")

    def __init__(self, source: Tree, rot: int, target: Tree):
        if source.n_leaves != target.n_leaves:
            raise ValueError("leaf counts differ: %d vs %d"
                             % (source.n_leaves, target.n_leaves))
        if not 1 <= rot <= source.n_leaves:
            raise ValueError("rot %d out of range [1, %d]" % (rot, source.n_leaves))
        self.source = source
        self.rot = rot
        self.target = target

    @property
    def n_leaves(self) -> int:
        return self.source.n_leaves

    def sigma(self, p: int) -> int:
        return (self.rot - 1 + p - 1) % self.n_leaves + 1

    def sigma_inv(self, q: int) -> int:
        return (q - self.rot) % self.n_leaves + 1

    def __eq__(self, other) -> bool:
        return (isinstance(other, TreePairDiagram)
                and self.source == other.source
                and self.rot == other.rot
                and self.target == other.target)

    def __hash__(self):
        return hash((self.source.bits, self.rot, self.target.bits))

    def __str__(self) -> str:
        return "%s:%d:%s" % (self.source.bits, self.rot, self.target.bits)

    def __repr__(self):
        return "TreePairDiagram(%r)" % str(self)


IDENTITY_DIAGRAM = TreePairDiagram(LEAF, 1, LEAF)


def parse_diagram(text: str) -> TreePairDiagram:
    parts = text.strip().split(":")
    if len(parts) != 3:
        raise ValueError("cannot parse diagram %r (expected bits:rot:bits)" % text)
    source = parse_tree(parts[0])
    try:
        rot = int(parts[1])
    except ValueError:
        raise ValueError("bad rotation %r in diagram" % parts[1])
    target = parse_tree(parts[2])
    return TreePairDiagram(source, rot, target)


def _find_reducible(d: TreePairDiagram) -> Optional[Tuple[int, int]]:
    n = d.n_leaves
    target_exposed = set(exposed_caret_left_leaves(d.target))
    for i in exposed_caret_left_leaves(d.source):
        j = d.sigma(i)
        if j < n and j in target_exposed:
            return i, j
    return None


def is_reduced(d: TreePairDiagram) -> bool:
    return _find_reducible(d) is None


def reduce(d: TreePairDiagram) -> TreePairDiagram:
    """Unique reduced representative of the diagram's equivalence class."""
    while True:
        hit = _find_reducible(d)
        if hit is None:
            return d
        i, j = hit
        n = d.n_leaves
        source = remove_caret_at(d.source, i)
        target = remove_caret_at(d.target, j)
        # new leaf 1 corresponds to old leaf 1 in all cases (i >= 1)
        old_rot = d.rot
        new_rot = old_rot if old_rot <= j else old_rot - 1
        d = TreePairDiagram(source, new_rot, target)


def invert(d: TreePairDiagram) -> TreePairDiagram:
    return TreePairDiagram(d.target, (1 - d.rot) % d.n_leaves + 1, d.source)


def _expand_target(d: TreePairDiagram, expansion: Tree) -> TreePairDiagram:
    """Equivalent diagram whose target tree is the given expansion."""
    subs = split_subtrees(d.target, expansion)
    n = d.n_leaves
    source = graft(d.source, [subs[d.sigma(p) - 1] for p in range(1, n + 1)])
    # image of the new first leaf: leaves before target block sigma(1)
    offset = sum(subs[j].n_leaves for j in range(d.sigma(1) - 1))
    return TreePairDiagram(source, offset + 1, expansion)


def _expand_source(d: TreePairDiagram, expansion: Tree) -> TreePairDiagram:
    return invert(_expand_target(invert(d), expansion))


def multiply(d1: TreePairDiagram, d2: TreePairDiagram) -> TreePairDiagram:
    """Product applying d1 first, then d2; result is reduced."""
    mid = common_expansion(d1.target, d2.source)
    e1 = _expand_target(d1, mid)
    e2 = _expand_source(d2, mid)
    rot = e2.sigma(e1.sigma(1))
    return reduce(TreePairDiagram(e1.source, rot, e2.target))


@lru_cache(maxsize=1)
def generators() -> dict:
    """The named diagrams a, b (= C), A, B, C of T."""
    a = TreePairDiagram(parse_tree("100"), 2, parse_tree("100"))
    c = TreePairDiagram(parse_tree("10100"), 3, parse_tree("10100"))
    big_a = TreePairDiagram(parse_tree("10100"), 1, parse_tree("11000"))
    big_b = TreePairDiagram(parse_tree("1010100"), 1, parse_tree("1011000"))
    return {"a": a, "b": c, "A": big_a, "B": big_b, "C": c}


def diagram_of_word_letters(letters: str) -> TreePairDiagram:
    """Multiplication-fold oracle: product of generator diagrams, reduced."""
    gens = generators()
    d = IDENTITY_DIAGRAM
    for ch in letters:
        if ch == "a":
            d = multiply(d, gens["a"])
        elif ch == "b":
            d = multiply(d, gens["b"])
        elif ch == "B":
            d = multiply(d, multiply(gens["b"], gens["b"]))
        else:
            raise ValueError("bad letter %r" % ch)
    return d


def all_trees(n_leaves: int) -> List[Tree]:
    """All binary trees with the given number of leaves."""
    if n_leaves == 1:
        return [LEAF]
    out = []
    for k in range(1, n_leaves):
        for left in all_trees(k):
            for right in all_trees(n_leaves - k):
                out.append(caret(left, right))
    return out
