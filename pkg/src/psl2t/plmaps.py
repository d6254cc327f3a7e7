"""Piecewise-linear dyadic circle maps and their diagram conversions.

A PLMap is an orientation preserving homeomorphism of [0,1]/0~1 with
dyadic breakpoints and power-of-two slopes, stored as a strictly
increasing lift: pairs (x_i, y_i) with x_0 = 0 < ... < x_k = 1,
y_0 in [0,1) and y_k = y_0 + 1.  All coordinates are Fractions with
power-of-two denominators; equality is decided on the canonical form
(collinear interior breakpoints removed).

Text format: semicolon list of "x,y" pairs, e.g. "0,1/2; 1/2,1; 1,3/2".
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Tuple

from .trees import (Tree, TreePairDiagram, leaf_intervals, reduce,
                    tree_from_partition)


def _is_dyadic(q: Fraction) -> bool:
    d = q.denominator
    return d & (d - 1) == 0


def _is_pow2(q: Fraction) -> bool:
    return (q.numerator == 1 and q.denominator & (q.denominator - 1) == 0) or \
           (q.denominator == 1 and q.numerator > 0 and q.numerator & (q.numerator - 1) == 0)


class PLMap:
    __slots__ = ("points",)

    def __init__(self, points):
        pts = [(Fraction(x), Fraction(y)) for x, y in points]
        if len(pts) < 2:
            raise ValueError("need at least the two endpoint breakpoints")
        if pts[0][0] != 0 or pts[-1][0] != 1:
            raise ValueError("domain must run from 0 to 1")
        if not 0 <= pts[0][1] < 1:
            raise ValueError("lift start y0 must lie in [0,1)")
        if pts[-1][1] != pts[0][1] + 1:
            raise ValueError("lift must end at y0 + 1")
        for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
            if not (x0 < x1 and y0 < y1):
                raise ValueError("breakpoints must be strictly increasing")
            if not _is_pow2((y1 - y0) / (x1 - x0)):
                raise ValueError("slope %s is not a power of two"
                                 % ((y1 - y0) / (x1 - x0),))
        for x, y in pts:
            if not (_is_dyadic(x) and _is_dyadic(y)):
                raise ValueError("non-dyadic breakpoint (%s, %s)" % (x, y))
        # canonical form: drop interior points where the slope does not change
        out = [pts[0]]
        for i in range(1, len(pts) - 1):
            (xa, ya), (xb, yb), (xc, yc) = out[-1], pts[i], pts[i + 1]
            if (yb - ya) * (xc - xb) != (yc - yb) * (xb - xa):
                out.append(pts[i])
        out.append(pts[-1])
        self.points = tuple(out)

    @classmethod
    def identity(cls) -> "PLMap":
        return cls([(0, 0), (1, 1)])

    @property
    def y0(self) -> Fraction:
        return self.points[0][1]

    def apply_lift(self, x: Fraction) -> Fraction:
        """Value of the increasing lift at x in [0, 1]."""
        if not 0 <= x <= 1:
            raise ValueError("argument %s outside [0, 1]" % x)
        pts = self.points
        for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
            if x0 <= x <= x1:
                return y0 + (y1 - y0) * (x - x0) / (x1 - x0)
        raise AssertionError

    def apply(self, x: Fraction) -> Fraction:
        """Circle value in [0, 1) at x in [0, 1)."""
        y = self.apply_lift(Fraction(x))
        return y - (y // 1)

    def preimage(self, t: Fraction) -> Fraction:
        """The x in [0, 1) with self.apply(x) == t, t in [0, 1)."""
        lift = t + (1 if t < self.y0 else 0)
        pts = self.points
        for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
            if y0 <= lift <= y1:
                x = x0 + (x1 - x0) * (lift - y0) / (y1 - y0)
                return x if x < 1 else Fraction(0)
        raise AssertionError

    def breakpoints_x(self) -> List[Fraction]:
        return [x for x, _ in self.points]

    def __eq__(self, other) -> bool:
        return isinstance(other, PLMap) and self.points == other.points

    def __hash__(self):
        return hash(self.points)

    def __str__(self) -> str:
        return "; ".join("%s,%s" % (x, y) for x, y in self.points)

    def __repr__(self):
        return "PLMap(%r)" % str(self)


def parse_plmap(text: str) -> PLMap:
    pts = []
    for chunk in text.split(";"):
        xy = chunk.strip().split(",")
        if len(xy) != 2:
            raise ValueError("cannot parse PL map chunk %r (expected x,y)" % chunk)
        pts.append((Fraction(xy[0].strip()), Fraction(xy[1].strip())))
    return PLMap(pts)


def pl_compose(f: PLMap, g: PLMap) -> PLMap:
    """Composite applying f first: x -> g(f(x))."""
    xs = set(f.breakpoints_x())
    for t, _ in g.points[:-1]:
        xs.add(f.preimage(t % 1))
    xs.discard(Fraction(1))
    xs = sorted(xs) + [Fraction(1)]
    ys_circ = [g.apply(f.apply(x)) for x in xs[:-1]]
    lift = [ys_circ[0]]
    for prev, cur in zip(ys_circ, ys_circ[1:]):
        inc = (cur - prev) % 1
        lift.append(lift[-1] + (inc if inc else 1))
    inc = (ys_circ[0] - ys_circ[-1]) % 1
    lift.append(lift[-1] + (inc if inc else 1))
    return PLMap(list(zip(xs, lift)))


def pl_invert(f: PLMap) -> PLMap:
    pts = list(f.points)
    # split the lift at height 1 and swap coordinates
    xstar = f.preimage(Fraction(0))
    if xstar == 0:
        # y0 == 0: the lift already starts at an integer
        return PLMap([(y - 0, x) for x, y in pts])
    low = [(x, y) for x, y in pts if y < 1]
    high = [(x, y) for x, y in pts if y > 1]
    inv = [(y - 1, x) for x, y in [(xstar, Fraction(1))] + high]
    inv += [(y, x + 1) for x, y in low + [(xstar, Fraction(1))]]
    # drop the duplicated junction point if both halves contributed it
    seen = []
    for p in inv:
        if not seen or p != seen[-1]:
            seen.append(p)
    return PLMap(seen)


def pl_eq(f: PLMap, g: PLMap) -> bool:
    return f == g


def plmap_from_diagram(d: TreePairDiagram) -> PLMap:
    src = leaf_intervals(d.source)
    tgt = leaf_intervals(d.target)
    n = d.n_leaves
    xs = [lo for lo, _ in src] + [Fraction(1)]
    y0 = tgt[d.sigma(1) - 1][0]
    lift = [y0]
    for p in range(1, n + 1):
        lo, hi = tgt[d.sigma(p) - 1]
        lift.append(lift[-1] + (hi - lo))
    return PLMap(list(zip(xs, lift)))


def _standard_dyadic(lo: Fraction, hi: Fraction) -> bool:
    length = hi - lo
    if length.numerator != 1 or not _is_dyadic(length):
        return False
    return (lo % length) == 0


def diagram_from_plmap(f: PLMap) -> TreePairDiagram:
    """Reduced tree pair diagram of a canonical PL map.

    Recursively bisects [0,1] until every piece lies in one linearity
    interval and both the piece and its image are standard dyadic.
    """
    breaks = f.breakpoints_x()

    def single_segment(lo: Fraction, hi: Fraction) -> bool:
        return not any(lo < x < hi for x in breaks)

    def build(lo: Fraction, hi: Fraction) -> Tree:
        if single_segment(lo, hi) and _standard_dyadic(lo, hi):
            a, b = f.apply_lift(lo), f.apply_lift(hi)
            if _standard_dyadic(a % 1, a % 1 + (b - a)):
                return Tree(None, None)
        mid = (lo + hi) / 2
        return Tree(build(lo, mid), build(mid, hi))

    source = build(Fraction(0), Fraction(1))
    src_intervals = leaf_intervals(source)
    images = []
    for lo, hi in src_intervals:
        a = f.apply_lift(lo)
        images.append((a % 1, a % 1 + (f.apply_lift(hi) - a)))
    points = sorted({lo for lo, _ in images} | {Fraction(1)})
    target = tree_from_partition(points)
    rot = points.index(images[0][0]) + 1
    return reduce(TreePairDiagram(source, rot, target))
