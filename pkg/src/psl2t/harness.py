"""Metric experiments, exhaustive verification sweeps, and exports.

Includes the caret-count metrics, a brute-force breadth-first word
length oracle in the classical T generators {A, B, C}, the length-bound
and free-subgroup reports, the acceptance sweep driver, and a DOT
export of tree pair diagrams.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Dict, List, Optional, Tuple

from . import membership, sequences, trees, words
from .plmaps import PLMap, pl_compose, plmap_from_diagram
from .ppmaps import build_d, inn_question, ppmap_from_word
from .rationals import (Dyadic, ZERO, INF, NEG_INF, is_farey_pair, mediant,
                        minkowski_inv, minkowski_q)
from .trees import (IDENTITY_DIAGRAM, TreePairDiagram, all_trees,
                    diagram_of_word_letters, generators, invert, is_reduced,
                    multiply, reduce)
from .words import (NormalWord, enumerate_normal_words, reduce_word,
                    word_length_ab)

DEFAULT_BFS_RADIUS = 6


@dataclass(frozen=True)
class MetricRow:
    word: NormalWord
    len_ab: int
    carets: int
    leaves: int
    len_abc_upper: Optional[int]


def caret_count(d: TreePairDiagram) -> int:
    if not is_reduced(d):
        raise membership.NotReducedError("diagram %s is not reduced" % d)
    return d.source.n_carets


@lru_cache(maxsize=None)
def _abc_ball(radius: int) -> Dict[str, int]:
    """Distance table of the closed {A,B,C}-ball, reduced diagrams as keys."""
    gens = generators()
    steps = [gens["A"], invert(gens["A"]), gens["B"], invert(gens["B"]),
             gens["C"], invert(gens["C"])]
    dist = {str(IDENTITY_DIAGRAM): 0}
    frontier = [IDENTITY_DIAGRAM]
    for level in range(1, radius + 1):
        nxt = []
        for d in frontier:
            for g in steps:
                e = multiply(d, g)
                key = str(e)
                if key not in dist:
                    dist[key] = level
                    nxt.append(e)
        frontier = nxt
    return dist


def bfs_length_abc(d: TreePairDiagram, radius: int = DEFAULT_BFS_RADIUS) -> Optional[int]:
    """Exact word length in {A,B,C} generators if within the ball."""
    return _abc_ball(radius).get(str(reduce(d)))


def ball_diagrams(radius: int) -> List[Tuple[TreePairDiagram, int]]:
    items = sorted(_abc_ball(radius).items())
    return [(trees.parse_diagram(key), dist) for key, dist in items]


def length_bounds_report(max_k: int, bfs_radius: int = 0) -> List[MetricRow]:
    """Rows for every normal word with k <= max_k, asserting the exact
    caret/length bounds (the identity is reported but exempt)."""
    if max_k > 12:
        raise ValueError("max_k capped at 12")
    ball = _abc_ball(bfs_radius) if bfs_radius else {}
    rows = []
    for w in enumerate_normal_words(max_k):
        d = membership.word_to_diagram(w)
        n_car = d.source.n_carets
        n_leaves = d.n_leaves
        length = word_length_ab(w)
        if not w.is_identity:
            if not (2 * n_car - 3 <= length <= 2 * n_car - 1):
                raise AssertionError("length bound fails for %s" % w)
            if not (length + 1 <= 2 * n_car <= length + 3):
                raise AssertionError("caret bound fails for %s" % w)
            if w.k >= 2 and (n_leaves, n_car) != (w.k + 2, w.k + 1):
                raise AssertionError("leaf/caret count fails for %s" % w)
        rows.append(MetricRow(w, length, n_car, n_leaves, ball.get(str(d))))
    return rows


FREE_GEN_LETTERS = {"g": "abab", "h": "aBaB", "G": "BaBa", "H": "baba"}


@dataclass(frozen=True)
class FreeSubgroupRow:
    spelling: str
    image: NormalWord
    image_len: int


def abelianization(w: NormalWord) -> Tuple[int, int]:
    """Exponent sums of a and b, in Z/2 x Z/3."""
    letters = w.letters()
    asum = letters.count("a") % 2
    bsum = (letters.count("b") - letters.count("B")) % 3
    return asum, bsum


def free_subgroup_words(max_len: int):
    """Reduced words over {g, h, g^-1, h^-1}, shortest first."""
    inverse_of = {"g": "G", "G": "g", "h": "H", "H": "h"}
    level = [""]
    for _ in range(max_len):
        nxt = []
        for word in level:
            for ch in "gGhH":
                if word and inverse_of[word[-1]] == ch:
                    continue
                nxt.append(word + ch)
        yield from nxt
        level = nxt


def free_subgroup_report(max_len: int) -> List[FreeSubgroupRow]:
    """Freeness evidence: every reduced word in the rank-2 generators is
    nontrivial, with image length at least twice the word length."""
    if max_len > 6:
        raise ValueError("max_len capped at 6")
    rows = []
    for spelling in free_subgroup_words(max_len):
        image = reduce_word("".join(FREE_GEN_LETTERS[ch] for ch in spelling))
        if image.is_identity:
            raise AssertionError("relation found: %s is trivial" % spelling)
        rows.append(FreeSubgroupRow(spelling, image, word_length_ab(image)))
    return rows


def render_tree(d: TreePairDiagram) -> str:
    """Deterministic DOT text: one digraph per tree, leaves labeled 1..n,
    with the cyclic pairing listed as a comment block."""
    def digraph(name, tree):
        lines = ["digraph %s {" % name, "  node [shape=point];"]
        leaf_no = [0]

        def rec(node, path):
            nid = name + "_" + (path or "root")
            if node.is_leaf:
                leaf_no[0] += 1
                lines.append('  %s [shape=plaintext, label="%d"];' % (nid, leaf_no[0]))
            else:
                lines.append("  %s;" % nid)
                for tag, child in (("0", node.left), ("1", node.right)):
                    cid = name + "_" + ((path or "") + tag or "root")
                    lines.append("  %s -> %s;" % (nid, cid))
                rec(node.left, (path or "") + "0")
                rec(node.right, (path or "") + "1")

        rec(tree, "")
        lines.append("}")
        return lines

    out = ["// tree pair diagram %s" % d]
    out += digraph("source", d.source)
    out += digraph("target", d.target)
    out.append("// leaf pairing (source -> target):")
    for p in range(1, d.n_leaves + 1):
        out.append("//   %d -> %d" % (p, d.sigma(p)))
    return "\n".join(out) + "\n"


# --- acceptance checks -------------------------------------------------

def _check_generator_relations() -> Tuple[bool, str]:
    mat_a, mat_b = words.MAT_A, words.MAT_B
    ok = mat_a * mat_a == words.IDENTITY_MAT
    ok &= mat_b * mat_b * mat_b == words.IDENTITY_MAT
    gens = generators()
    ok &= multiply(gens["a"], gens["a"]) == IDENTITY_DIAGRAM
    ok &= multiply(gens["b"], multiply(gens["b"], gens["b"])) == IDENTITY_DIAGRAM
    a_pl = plmap_from_diagram(gens["a"])
    b_pl = plmap_from_diagram(gens["b"])
    ok &= pl_compose(a_pl, a_pl) == PLMap.identity()
    ok &= pl_compose(b_pl, pl_compose(b_pl, b_pl)) == PLMap.identity()
    return ok, "a^2 = b^3 = 1 in matrices, diagrams and PL maps"


def _check_inn_question() -> Tuple[bool, str]:
    gens = generators()
    c_pl = plmap_from_diagram(gens["C"])
    a_pl_expected = pl_compose(c_pl, plmap_from_diagram(gens["A"]))
    b_pl = inn_question(ppmap_from_word(words.parse_word("b")))
    a_pl = inn_question(ppmap_from_word(words.WORD_A))
    d_pl = inn_question(build_d())
    ok = b_pl == c_pl
    ok &= a_pl == a_pl_expected
    ok &= d_pl == plmap_from_diagram(gens["B"])
    return ok, "Inn_?(b) = C, Inn_?(a) = CA, Inn_?(d) = B"


def _check_oracle_equivalence(max_k: int) -> Tuple[bool, str]:
    count = 0
    for w in enumerate_normal_words(max_k, min_k=2):
        direct = membership.word_to_diagram(w)
        oracle = diagram_of_word_letters(w.letters())
        if direct != oracle:
            return False, "mismatch at word %s: %s vs %s" % (w, direct, oracle)
        count += 1
    return True, "%d words match the multiplication oracle" % count


def _check_counting(max_k: int = 7) -> Tuple[bool, str]:
    for k in range(2, max_k + 1):
        per_source = {}
        for r in product((-1, 1), repeat=k):
            per_source[r] = 0
            for s in product((-1, 1), repeat=k):
                if not membership.check_eq1(r, s):
                    continue
                for rot in range(1, k + 3):
                    if membership.check_eq2(r, s, rot):
                        per_source[r] += 1
        total = sum(per_source.values())
        if total != 2 ** (k + 2):
            return False, "k=%d: %d solutions, expected %d" % (k, total, 2 ** (k + 2))
        if any(v != 4 for v in per_source.values()):
            return False, "k=%d: some source tree has != 4 members" % k
    small = small_reduced_diagrams()
    if len(small) != 10:
        return False, "%d reduced diagrams with <= 3 leaves (expected 10)" % len(small)
    table = {str(diag): word for word, diag in membership._small_table()}
    for d in small:
        if str(d) not in table:
            return False, "small diagram %s missing from the word table" % d
        if not membership.is_member(d):
            return False, "small diagram %s not a member" % d
    return True, "2^(k+2) members per k in [2,%d]; 10 small diagrams labeled" % max_k


def small_reduced_diagrams() -> List[TreePairDiagram]:
    """All reduced diagrams with at most 3 leaves."""
    out = []
    for n in (1, 2, 3):
        for t1 in all_trees(n):
            for t2 in all_trees(n):
                for rot in range(1, n + 1):
                    d = TreePairDiagram(t1, rot, t2)
                    if is_reduced(d):
                        out.append(d)
    return out


def _check_length_bounds(max_k: int = 8) -> Tuple[bool, str]:
    rows = length_bounds_report(max_k)
    ratios = [Fraction(r.len_ab, r.carets) for r in rows if r.carets]
    return True, "%d words pass the caret bounds; |w|/N in [%s, %s]" \
        % (len(rows), min(ratios), max(ratios))


def _check_agreement(max_k: int = 6, ball_radius: int = 4) -> Tuple[bool, str]:
    checked = 0

    def agree(d: TreePairDiagram) -> bool:
        return membership.is_member(d) == \
            sequences.is_member_seq(plmap_from_diagram(d))

    for w in enumerate_normal_words(max_k):
        if not agree(membership.word_to_diagram(w)):
            return False, "disagreement at member %s" % w
        checked += 1
    for k in range(2, max_k + 1):
        for r in product((-1, 1), repeat=k):
            t1 = membership.thin_from_weights(r)
            for s in product((-1, 1), repeat=k):
                t2 = membership.thin_from_weights(s)
                for rot in range(1, k + 3):
                    if membership.check_eq1(r, s) and membership.check_eq2(r, s, rot):
                        continue
                    d = TreePairDiagram(t1, rot, t2)
                    if not is_reduced(d):
                        continue
                    if not agree(d):
                        return False, "disagreement at non-member %s" % d
                    checked += 1
    for d, _ in ball_diagrams(ball_radius):
        if not agree(d):
            return False, "disagreement at ball element %s" % d
        checked += 1
    return True, "both characterizations agree on %d diagrams" % checked


def _check_thin_sequences(max_k: int = 10) -> Tuple[bool, str]:
    for k in range(3, max_k + 1):
        thin = []
        for weights in product((-1, 1), repeat=k - 2):
            t = membership.thin_from_weights(weights)
            seq = sequences.sequence_from_thin_tree(t)
            if sequences.is_k_thin(seq) is None:
                return False, "leaf sequence of thin tree %s not k-thin" % t.bits
            if sequences.thin_tree_from_sequence(seq) != t:
                return False, "roundtrip fails for %s" % t.bits
            thin.append(seq)
        if len(set(thin)) != 2 ** (k - 2):
            return False, "k=%d: %d thin sequences, expected %d" \
                % (k, len(set(thin)), 2 ** (k - 2))
    return True, "2^(k-2) thin sequences and exact roundtrip for k in [3,%d]" % max_k


def _farey_pairs_to_depth(depth: int):
    for root in ((ZERO, INF), (NEG_INF, ZERO)):
        stack = [(root[0], root[1], 0)]
        while stack:
            lo, hi, d = stack.pop()
            yield lo, hi
            if d < depth:
                m = mediant(lo, hi)
                stack.append((lo, m, d + 1))
                stack.append((m, hi, d + 1))


def _check_minkowski(max_exp: int = 12, depth: int = 12) -> Tuple[bool, str]:
    if minkowski_q(ZERO) != Dyadic(0, 0) or minkowski_q(INF) != Dyadic(1, 1):
        return False, "base values of ? are wrong"
    for e in range(max_exp + 1):
        for num in range(0, 1 << e):
            d = Dyadic.make(num, e)
            if minkowski_q(minkowski_inv(d)) != d:
                return False, "roundtrip fails at %s" % d
    half = Fraction(1, 2)

    def qval(x, wrap):
        if x == ZERO and wrap:
            return Fraction(1)
        return minkowski_q(x).as_fraction()

    for lo, hi in _farey_pairs_to_depth(depth):
        if not is_farey_pair(lo, hi):
            return False, "enumeration produced a non-Farey pair"
        wrap = qval(lo, False) >= half or lo == NEG_INF
        m = mediant(lo, hi)
        if qval(m, wrap) != (qval(lo, wrap) + qval(hi, wrap)) / 2:
            return False, "mediant law fails at %s + %s" % (lo, hi)
    return True, "roundtrip to exponent %d, mediant law to depth %d" % (max_exp, depth)


def _check_free_subgroup(max_len: int = 5) -> Tuple[bool, str]:
    rows = free_subgroup_report(max_len)
    for row in rows:
        if row.image_len < 2 * len(row.spelling):
            return False, "growth bound fails at %s" % row.spelling
    img_g = abelianization(reduce_word(FREE_GEN_LETTERS["g"]))
    img_h = abelianization(reduce_word(FREE_GEN_LETTERS["h"]))
    return True, "%d words nontrivial; abelianization images g -> %s, h -> %s" \
        % (len(rows), img_g, img_h)


def _check_bfs_bounds(radius: int = 5) -> Tuple[bool, str]:
    worst = Fraction(0)
    for d, dist in ball_diagrams(radius):
        n_car = d.source.n_carets
        if n_car > 2 * dist + 1:
            return False, "caret bound fails at %s" % d
        if dist > 12 * max(n_car, 0) and dist > 0:
            return False, "length bound fails at %s" % d
        if n_car:
            worst = max(worst, Fraction(dist, n_car))
    size = len(_abc_ball(radius))
    return True, "ball of radius %d has %d elements; max |w|/N = %s" \
        % (radius, size, worst)


ACCEPTANCE_CHECKS = (
    ("generator-relations", lambda mk, br: _check_generator_relations()),
    ("inn-question-identities", lambda mk, br: _check_inn_question()),
    ("word-diagram-oracle", lambda mk, br: _check_oracle_equivalence(max(mk, 2))),
    ("membership-counting", lambda mk, br: _check_counting(min(max(mk, 2), 7))),
    ("length-bounds", lambda mk, br: _check_length_bounds(max(mk, 2))),
    ("characterization-agreement",
     lambda mk, br: _check_agreement(min(max(mk, 2), 6), min(br, 4))),
    ("thin-sequence-bijection", lambda mk, br: _check_thin_sequences()),
    ("minkowski-function", lambda mk, br: _check_minkowski()),
    ("free-subgroup", lambda mk, br: _check_free_subgroup()),
    ("bfs-length-bounds", lambda mk, br: _check_bfs_bounds(br) if br else
        (True, "skipped (radius 0)")),
)


def verify_all(max_k: int = 6, ball_radius: int = 5):
    """Run every acceptance sweep; returns (name, ok, detail) triples."""
    results = []
    for name, fn in ACCEPTANCE_CHECKS:
        ok, detail = fn(max_k, ball_radius)
        results.append((name, ok, detail))
    return results
