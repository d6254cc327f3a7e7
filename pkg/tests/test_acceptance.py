"""Acceptance gate: the ten exact verification sweeps at full scale.

Each test prints a single PASS/FAIL line (run pytest with -s to see
them) and asserts with zero tolerance; all values are exact integers
and fractions.
"""

from fractions import Fraction
from itertools import product

from psl2t import harness, membership, sequences
from psl2t.harness import (abelianization, ball_diagrams, free_subgroup_report,
                           length_bounds_report, small_reduced_diagrams)
from psl2t.plmaps import PLMap, pl_compose, plmap_from_diagram
from psl2t.ppmaps import build_d, inn_question, ppmap_from_word
from psl2t.rationals import Dyadic, minkowski_inv, minkowski_q
from psl2t.trees import (IDENTITY_DIAGRAM, TreePairDiagram, generators,
                         diagram_of_word_letters, is_reduced, multiply)
from psl2t.words import (IDENTITY_MAT, MAT_A, MAT_B, enumerate_normal_words,
                         parse_word, reduce_word, word_length_ab, WORD_A)


def report(name: str, ok: bool):
    print("%s %s" % ("PASS" if ok else "FAIL", name))
    assert ok, name


def test_criterion_1_generator_relations():
    ok = MAT_A * MAT_A == IDENTITY_MAT
    ok = ok and MAT_B * MAT_B * MAT_B == IDENTITY_MAT
    gens = generators()
    ok = ok and multiply(gens["a"], gens["a"]) == IDENTITY_DIAGRAM
    ok = ok and multiply(gens["b"], multiply(gens["b"], gens["b"])) == IDENTITY_DIAGRAM
    a_pl = plmap_from_diagram(gens["a"])
    b_pl = plmap_from_diagram(gens["b"])
    ok = ok and pl_compose(a_pl, a_pl) == PLMap.identity()
    ok = ok and pl_compose(b_pl, pl_compose(b_pl, b_pl)) == PLMap.identity()
    report("criterion-1 generator relations in all three representations", ok)


def test_criterion_2_inn_question_identities():
    gens = generators()
    c_pl = plmap_from_diagram(gens["C"])
    ok = inn_question(ppmap_from_word(parse_word("b"))) == c_pl
    ok = ok and inn_question(ppmap_from_word(WORD_A)) == \
        pl_compose(c_pl, plmap_from_diagram(gens["A"]))
    ok = ok and inn_question(build_d()) == plmap_from_diagram(gens["B"])
    report("criterion-2 Inn_?(b) = C, Inn_?(a) = CA, Inn_?(d) = B", ok)


def test_criterion_3_word_diagram_oracle():
    count = 0
    ok = True
    for w in enumerate_normal_words(8, min_k=2):
        ok = ok and membership.word_to_diagram(w) == \
            diagram_of_word_letters(w.letters())
        count += 1
    ok = ok and count == 2032
    report("criterion-3 direct word formulas match the oracle on 2032 words", ok)


def test_criterion_4_membership_counting():
    ok = True
    for k in range(2, 8):
        per_source = {}
        for r in product((-1, 1), repeat=k):
            per_source[r] = 0
            for s in product((-1, 1), repeat=k):
                if not membership.check_eq1(r, s):
                    continue
                for rot in range(1, k + 3):
                    if membership.check_eq2(r, s, rot):
                        per_source[r] += 1
        ok = ok and sum(per_source.values()) == 2 ** (k + 2)
        ok = ok and all(v == 4 for v in per_source.values())
    small = small_reduced_diagrams()
    ok = ok and len(small) == 10
    table = {str(diag): str(word) for word, diag in membership._small_table()}
    labels = sorted(table[str(d)] for d in small if str(d) in table)
    ok = ok and len(labels) == 10
    ok = ok and labels == sorted(("e", "a", "b", "B", "ab", "aB",
                                  "ba", "Ba", "aba", "aBa"))
    report("criterion-4 2^(k+2) members per k in [2,7]; 10 labeled small diagrams", ok)


def test_criterion_5_length_bounds():
    rows = length_bounds_report(8)
    ok = True
    for r in rows:
        if r.word.is_identity:
            continue
        ok = ok and 2 * r.carets - 3 <= r.len_ab <= 2 * r.carets - 1
        if r.word.k >= 2:
            ok = ok and (r.leaves, r.carets) == (r.word.k + 2, r.word.k + 1)
    report("criterion-5 caret length bounds for all normal words with k <= 8", ok)


def test_criterion_6_characterization_agreement():
    def agree(d):
        return membership.is_member(d) == \
            sequences.is_member_seq(plmap_from_diagram(d))

    ok = True
    for w in enumerate_normal_words(6):
        ok = ok and agree(membership.word_to_diagram(w))
    for k in range(2, 7):
        for r in product((-1, 1), repeat=k):
            t1 = membership.thin_from_weights(r)
            for s in product((-1, 1), repeat=k):
                t2 = membership.thin_from_weights(s)
                for rot in range(1, k + 3):
                    if membership.check_eq1(r, s) and \
                            membership.check_eq2(r, s, rot):
                        continue
                    d = TreePairDiagram(t1, rot, t2)
                    if is_reduced(d):
                        ok = ok and agree(d)
    for d, _ in ball_diagrams(4):
        ok = ok and agree(d)
    report("criterion-6 thin-tree and slope-sequence tests agree (<= 8 leaves)", ok)


def test_criterion_7_thin_sequence_bijection():
    ok = True
    for k in range(3, 11):
        seqs = set()
        for weights in product((-1, 1), repeat=k - 2):
            t = membership.thin_from_weights(weights)
            seq = sequences.sequence_from_thin_tree(t)
            ok = ok and sequences.is_k_thin(seq) is not None
            ok = ok and sequences.thin_tree_from_sequence(seq) == t
            seqs.add(seq)
        ok = ok and len(seqs) == 2 ** (k - 2)
    report("criterion-7 thin sequences biject with thin trees, k in [3,10]", ok)


def test_criterion_8_minkowski():
    ok = minkowski_q(harness.ZERO) == Dyadic(0, 0)
    ok = ok and minkowski_q(harness.INF) == Dyadic(1, 1)
    for e in range(13):
        for num in range(1 << e):
            d = Dyadic.make(num, e)
            ok = ok and minkowski_q(minkowski_inv(d)) == d
    mediant_ok, _ = harness._check_minkowski(12, 12)
    ok = ok and mediant_ok
    report("criterion-8 question mark mediant law and exact roundtrip", ok)


def test_criterion_9_free_subgroup():
    rows = free_subgroup_report(5)
    ok = len(rows) == 4 + 12 + 36 + 108 + 324
    for row in rows:
        ok = ok and not row.image.is_identity
        ok = ok and row.image_len >= 2 * len(row.spelling)
    ok = ok and abelianization(reduce_word("abab")) == (0, 2)
    ok = ok and abelianization(reduce_word("aBaB")) == (0, 1)
    report("criterion-9 rank-2 free subgroup words up to length 5 nontrivial", ok)


def test_criterion_10_bfs_length_bounds():
    ok = True
    for d, dist in ball_diagrams(5):
        n_car = d.source.n_carets
        ok = ok and n_car <= 2 * dist + 1
        ok = ok and dist <= 12 * max(n_car, 1)
    report("criterion-10 BFS ball of radius 5 satisfies the metric bounds", ok)
