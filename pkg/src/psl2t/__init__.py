"""Exact arithmetic for PSL2(Z) inside Thompson's group T.

Three interchangeable representations of circle homeomorphisms:

* reduced tree pair diagrams with a cyclic leaf rotation,
* piecewise-linear dyadic circle maps,
* piecewise-Moebius maps of the rational projective line,

linked by the Minkowski question mark conjugation, together with the
thin-tree and slope-sequence membership characterizations and a small
metric toolbox.
"""

from .rationals import (Dyadic, ExtRational, FareyInterval, mediant,
                        is_farey_pair, minkowski_inv, minkowski_q,
                        parse_dyadic, parse_ext_rational)
from .words import (NormalWord, PSL2Matrix, enumerate_normal_words,
                    matrix_to_word, parse_matrix, parse_word, reduce_word,
                    word_length_ab, word_to_matrix)
from .trees import (Tree, TreePairDiagram, all_trees, invert, is_reduced,
                    multiply, parse_diagram, parse_tree, reduce)
from .plmaps import (PLMap, diagram_from_plmap, parse_plmap, pl_compose,
                     pl_invert, plmap_from_diagram)
from .ppmaps import (PPMap, build_d, inn_question, parse_ppmap, pp_compose,
                     pp_invert, ppmap_from_word)
from .membership import (diagram_to_word, is_member, is_thin,
                         thin_from_weights, weights_from_thin, word_to_diagram)
from .sequences import (SeqS, is_k_good, is_k_thin, is_member_seq,
                        plmap_from_seq, seq_from_plmap,
                        sequence_from_thin_tree, thin_tree_from_sequence)
from .harness import (bfs_length_abc, caret_count, free_subgroup_report,
                      length_bounds_report, render_tree, verify_all)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
