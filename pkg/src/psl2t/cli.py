"""Command line interface.

Elements can be given in any of the supported text formats; the format
is sniffed from the shape of the argument:

* word: letters over {a, b, B}, or "e" for the identity
* matrix: [[a,b],[c,d]]
* diagram: <source-bits>:<rot>:<target-bits>
* PL map: "x,y; x,y; ..." breakpoints of the lift
* PP map: "lo..hi:[[a,b],[c,d]]; ..." pieces

Report subcommands write delimited CSV (stdout or -o) and can render a
matplotlib figure next to it with --plot.

Exit codes: 0 on success, 1 on verification failure, 2 on bad input.
"""

from __future__ import annotations

import argparse
import csv
import re
import sys
from fractions import Fraction

from . import harness, membership, sequences
from .plmaps import (PLMap, diagram_from_plmap, parse_plmap, pl_compose,
                     pl_invert, plmap_from_diagram)
from .ppmaps import PPMap, inn_question, parse_ppmap, pp_compose, pp_invert, ppmap_from_word
from .rationals import minkowski_inv, minkowski_q, parse_dyadic, parse_ext_rational
from .trees import TreePairDiagram, invert, multiply, parse_diagram, reduce
from .words import (NormalWord, PSL2Matrix, matrix_to_word, parse_matrix,
                    parse_word, word_to_matrix)


def sniff(text: str):
    """Parse an element in whichever representation the text spells."""
    text = text.strip()
    if ".." in text:
        return parse_ppmap(text)
    if text.startswith("[["):
        return parse_matrix(text)
    if "," in text:
        return parse_plmap(text)
    if ":" in text:
        return parse_diagram(text)
    return parse_word(text)


def as_plmap(x) -> PLMap:
    if isinstance(x, PLMap):
        return x
    if isinstance(x, TreePairDiagram):
        return plmap_from_diagram(x)
    if isinstance(x, NormalWord):
        return plmap_from_diagram(membership.word_to_diagram(x))
    raise ValueError("cannot interpret %s as a PL circle map" % (x,))


def cmd_normalize(args) -> int:
    w = parse_word(args.word)
    print(w)
    print(word_to_matrix(w))
    return 0


def cmd_to_diagram(args) -> int:
    x = sniff(args.element)
    if isinstance(x, PPMap):
        x = inn_question(x)
    if isinstance(x, PLMap):
        print(diagram_from_plmap(x))
    elif isinstance(x, TreePairDiagram):
        print(reduce(x))
    else:
        if isinstance(x, PSL2Matrix):
            x = matrix_to_word(x)
        print(membership.word_to_diagram(x))
    return 0


def cmd_to_word(args) -> int:
    x = sniff(args.element)
    if isinstance(x, NormalWord):
        print(x)
        return 0
    if isinstance(x, PSL2Matrix):
        print(matrix_to_word(x))
        return 0
    if isinstance(x, PPMap):
        x = inn_question(x)
    if isinstance(x, PLMap):
        x = diagram_from_plmap(x)
    w = membership.diagram_to_word(reduce(x))
    if w is None:
        print("not a member of PSL2(Z)", file=sys.stderr)
        return 1
    print(w)
    return 0


def cmd_member(args) -> int:
    x = sniff(args.element)
    if isinstance(x, (NormalWord, PSL2Matrix)):
        verdict = True
    elif isinstance(x, TreePairDiagram):
        verdict = membership.is_member(reduce(x))
    else:
        if isinstance(x, PPMap):
            x = inn_question(x)
        verdict = sequences.is_member_seq(x)
    print("member" if verdict else "non-member")
    return 0


def cmd_compose(args) -> int:
    x, y = sniff(args.left), sniff(args.right)
    if type(x) is not type(y):
        raise ValueError("operands are in different representations")
    if isinstance(x, NormalWord):
        out = parse_word(x.letters() + y.letters())
    elif isinstance(x, TreePairDiagram):
        out = multiply(x, y)
    elif isinstance(x, PLMap):
        out = pl_compose(x, y)
    elif isinstance(x, PPMap):
        out = pp_compose(x, y)
    else:
        out = y * x  # matrices: left factor applies first
    print(out)
    return 0


def cmd_invert(args) -> int:
    x = sniff(args.element)
    if isinstance(x, NormalWord):
        out = x.inverse()
    elif isinstance(x, TreePairDiagram):
        out = invert(x)
    elif isinstance(x, PLMap):
        out = pl_invert(x)
    elif isinstance(x, PPMap):
        out = pp_invert(x)
    else:
        out = x.inverse()
    print(out)
    return 0


def cmd_minkowski(args) -> int:
    print(minkowski_q(parse_ext_rational(args.rational)))
    return 0


def cmd_minkowski_inv(args) -> int:
    print(minkowski_inv(parse_dyadic(args.dyadic)))
    return 0


def cmd_conjugate(args) -> int:
    x = sniff(args.element)
    if isinstance(x, NormalWord):
        x = ppmap_from_word(x)
    elif not isinstance(x, PPMap):
        raise ValueError("conjugate expects a projective map or a word")
    print(inn_question(x))
    return 0


def cmd_seq(args) -> int:
    f = as_plmap(sniff(args.element))
    s = sequences.seq_from_plmap(f)
    print(s)
    print("k=%d mark=%d good=%s" % (s.k, s.mark, sequences.is_k_good(s)))
    return 0


def cmd_render(args) -> int:
    d = sniff(args.element)
    if isinstance(d, NormalWord):
        d = membership.word_to_diagram(d)
    if not isinstance(d, TreePairDiagram):
        raise ValueError("render expects a diagram or a word")
    text = harness.render_tree(d)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _write_csv(path, header, rows):
    fh = open(path, "w", newline="") if path else sys.stdout
    try:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)
    finally:
        if path:
            fh.close()


def _figure():
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    return plt


def cmd_lengths(args) -> int:
    rows = harness.length_bounds_report(args.max_k, args.bfs_radius)
    _write_csv(args.output,
               ("word", "k", "len_ab", "carets", "leaves", "len_abc_upper"),
               [(str(r.word), r.word.k, r.len_ab, r.carets, r.leaves,
                 "" if r.len_abc_upper is None else r.len_abc_upper)
                for r in rows])
    if args.plot:
        plt = _figure()
        xs = [r.carets for r in rows]
        ys = [r.len_ab for r in rows]
        fig, ax = plt.subplots()
        ax.scatter(xs, ys, s=12, label="normal words")
        grid = range(0, max(xs) + 1)
        ax.plot(grid, [2 * n - 3 for n in grid], "k--", label="2N-3")
        ax.plot(grid, [2 * n - 1 for n in grid], "k:", label="2N-1")
        ax.set_xlabel("carets N")
        ax.set_ylabel("word length |w|")
        ax.legend()
        fig.savefig(args.plot, dpi=150)
    return 0


def cmd_free_subgroup(args) -> int:
    rows = harness.free_subgroup_report(args.max_len)
    _write_csv(args.output, ("spelling", "image", "image_len"),
               [(r.spelling, str(r.image), r.image_len) for r in rows])
    if args.plot:
        plt = _figure()
        xs = [len(r.spelling) for r in rows]
        ys = [r.image_len for r in rows]
        fig, ax = plt.subplots()
        ax.scatter(xs, ys, s=12)
        grid = range(1, max(xs) + 1)
        ax.plot(grid, [2 * n for n in grid], "k--", label="2 * length")
        ax.set_xlabel("free word length")
        ax.set_ylabel("image length in {a,b}")
        ax.legend()
        fig.savefig(args.plot, dpi=150)
    return 0


def cmd_bfs(args) -> int:
    items = harness.ball_diagrams(args.radius)
    rows = []
    for d, dist in items:
        member = membership.is_member(d)
        rows.append((str(d), dist, d.source.n_carets, "yes" if member else "no"))
    _write_csv(args.output, ("diagram", "dist_abc", "carets", "member"), rows)
    if args.plot:
        plt = _figure()
        fig, ax = plt.subplots()
        counts = {}
        for _, dist, _, _ in rows:
            counts[dist] = counts.get(dist, 0) + 1
        ax.bar(list(counts), [counts[k] for k in counts])
        ax.set_xlabel("distance in {A,B,C}")
        ax.set_ylabel("elements")
        fig.savefig(args.plot, dpi=150)
    return 0


def cmd_verify(args) -> int:
    results = harness.verify_all(args.max_k, args.radius)
    failed = 0
    for name, ok, detail in results:
        print("%s %-28s %s" % ("PASS" if ok else "FAIL", name, detail))
        failed += 0 if ok else 1
    if failed:
        print("%d check(s) failed" % failed, file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="psl2t", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("normalize", help="normal form and matrix of a word")
    s.add_argument("word")
    s.set_defaults(fn=cmd_normalize)

    s = sub.add_parser("to-diagram", help="reduced tree pair diagram of an element")
    s.add_argument("element")
    s.set_defaults(fn=cmd_to_diagram)

    s = sub.add_parser("to-word", help="normal word of a member element")
    s.add_argument("element")
    s.set_defaults(fn=cmd_to_word)

    s = sub.add_parser("member", help="test PSL2(Z) membership of a T element")
    s.add_argument("element")
    s.set_defaults(fn=cmd_member)

    s = sub.add_parser("compose", help="compose two elements (left applies first)")
    s.add_argument("left")
    s.add_argument("right")
    s.set_defaults(fn=cmd_compose)

    s = sub.add_parser("invert", help="invert an element")
    s.add_argument("element")
    s.set_defaults(fn=cmd_invert)

    s = sub.add_parser("minkowski", help="question mark value of p/q")
    s.add_argument("rational")
    s.set_defaults(fn=cmd_minkowski)

    s = sub.add_parser("minkowski-inv", help="rational preimage of a dyadic")
    s.add_argument("dyadic")
    s.set_defaults(fn=cmd_minkowski_inv)

    s = sub.add_parser("conjugate",
                       help="PL circle map conjugate of a projective map")
    s.add_argument("element")
    s.set_defaults(fn=cmd_conjugate)

    s = sub.add_parser("seq", help="slope sequence and goodness of a circle map")
    s.add_argument("element")
    s.set_defaults(fn=cmd_seq)

    s = sub.add_parser("lengths", help="caret-count length bounds report (CSV)")
    s.add_argument("--max-k", type=int, default=6)
    s.add_argument("--bfs-radius", type=int, default=0,
                   help="also tabulate exact {A,B,C} lengths within this ball")
    s.add_argument("-o", "--output", help="CSV path (default stdout)")
    s.add_argument("--plot", help="write a scatter figure to this PNG path")
    s.set_defaults(fn=cmd_lengths)

    s = sub.add_parser("free-subgroup", help="rank-2 free subgroup report (CSV)")
    s.add_argument("--max-len", type=int, default=4)
    s.add_argument("-o", "--output", help="CSV path (default stdout)")
    s.add_argument("--plot", help="write a growth figure to this PNG path")
    s.set_defaults(fn=cmd_free_subgroup)

    s = sub.add_parser("bfs", help="breadth-first ball in {A,B,C} (CSV)")
    s.add_argument("--radius", type=int, default=4)
    s.add_argument("-o", "--output", help="CSV path (default stdout)")
    s.add_argument("--plot", help="write a sphere-size figure to this PNG path")
    s.set_defaults(fn=cmd_bfs)

    s = sub.add_parser("render", help="DOT export of a tree pair diagram")
    s.add_argument("element")
    s.add_argument("-o", "--output", help="output path (default stdout)")
    s.set_defaults(fn=cmd_render)

    s = sub.add_parser("verify", help="run every verification sweep")
    s.add_argument("--max-k", type=int, default=6)
    s.add_argument("--radius", type=int, default=5)
    s.set_defaults(fn=cmd_verify)

    return p


_NEGATIVE_ARG = re.compile(r"^-\d+(/\d+)?$")


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    argv = list(argv)
    # let negative fractions like -2/3 through as positionals
    if "--" not in argv:
        for i, tok in enumerate(argv):
            if _NEGATIVE_ARG.match(tok):
                argv.insert(i, "--")
                break
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, AssertionError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
