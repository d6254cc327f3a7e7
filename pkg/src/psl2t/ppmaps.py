"""Piecewise-PSL2(Z) homeomorphisms of the rational projective line.

A PPMap is a cyclically ordered list of pieces (lo, hi, matrix); the
arc from lo to hi runs in the positive circle direction 0 < 1 < ∞ < -1
< 0(wrap).  Canonical form merges adjacent pieces with equal matrices
and anchors the list at the piece whose left endpoint comes first on
the circle; a globally-Moebius map is a single piece with lo == hi == 0.

Arcs through ∞ are split at the formal point 1/0 == -1/0 before any
Farey refinement, so every refined arc lies in one of the two question
mark rays.

Text format: semicolon list of "lo..hi:[[a,b],[c,d]]".
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Tuple

from .plmaps import PLMap
from .rationals import (INF, NEG_INF, ZERO, ExtRational, circle_position,
                        is_farey_pair, mediant, _question_inv_fraction,
                        parse_ext_rational)
from .words import (GENERATOR_MATS, IDENTITY_MAT, NormalWord, PSL2Matrix,
                    parse_matrix)

REFINEMENT_DEPTH_LIMIT = 64


class RefinementDepthError(RuntimeError):
    """Farey refinement exceeded the depth bound (invalid PPMap piece)."""


def moebius_apply(m: PSL2Matrix, x: ExtRational) -> ExtRational:
    """Action (a p + b q) / (c p + d q) on p/q; infinity spelled 1/0."""
    return ExtRational.make(m.a * x.num + m.b * x.den, m.c * x.num + m.d * x.den)


_pos_cache: dict = {}


def _pos(x: ExtRational) -> Fraction:
    key = (x.num, x.den) if x.den else ("oo",)
    v = _pos_cache.get(key)
    if v is None:
        v = circle_position(x)
        _pos_cache[key] = v
    return v


def _interior_point(u: ExtRational, v: ExtRational) -> ExtRational:
    """Some rational strictly inside the positive arc from u to v."""
    pu, pv = _pos(u), _pos(v)
    if pv <= pu:
        pv += 1
    mid = (pu + pv) / 2
    return _question_inv_fraction(mid % 1)


class PPMap:
    __slots__ = ("pieces",)

    def __init__(self, pieces):
        pieces = [(lo, hi, m) for lo, hi, m in pieces]
        if not pieces:
            raise ValueError("need at least one piece")
        if len(pieces) == 1:
            lo, hi, m = pieces[0]
            if lo != hi:
                raise ValueError("a single piece must cover the whole circle")
            self.pieces = ((ZERO, ZERO, m),)
            return
        # continuity at shared endpoints
        for (lo1, hi1, m1), (lo2, hi2, m2) in zip(pieces, pieces[1:] + pieces[:1]):
            if hi1 != lo2:
                raise ValueError("pieces are not contiguous: %s vs %s" % (hi1, lo2))
            if moebius_apply(m1, hi1) != moebius_apply(m2, lo2):
                raise ValueError("discontinuity at %s" % hi1)
        # merge cyclically adjacent equal matrices
        merged = list(pieces)
        changed = True
        while changed and len(merged) > 1:
            changed = False
            for i in range(len(merged)):
                j = (i + 1) % len(merged)
                if merged[i][2] == merged[j][2]:
                    lo, hi = merged[i][0], merged[j][1]
                    m = merged[i][2]
                    if len(merged) == 2:
                        merged = [(ZERO, ZERO, m)]
                    else:
                        merged[i] = (lo, hi, m)
                        del merged[j]
                    changed = True
                    break
        if len(merged) == 1:
            self.pieces = ((ZERO, ZERO, merged[0][2]),)
            return
        anchor = min(range(len(merged)), key=lambda i: _pos(merged[i][0]))
        merged = merged[anchor:] + merged[:anchor]
        self.pieces = tuple(merged)

    @classmethod
    def identity(cls) -> "PPMap":
        return cls([(ZERO, ZERO, IDENTITY_MAT)])

    @classmethod
    def from_matrix(cls, m: PSL2Matrix) -> "PPMap":
        return cls([(ZERO, ZERO, m)])

    @property
    def is_global(self) -> bool:
        return len(self.pieces) == 1

    def matrix_at(self, x: ExtRational) -> PSL2Matrix:
        """Matrix of the piece whose closed arc contains x (first match)."""
        if self.is_global:
            return self.pieces[0][2]
        p = _pos(x)
        for lo, hi, m in self.pieces:
            plo, phi = _pos(lo), _pos(hi)
            if phi <= plo:
                phi += 1
            if plo <= p <= phi or plo <= p + 1 <= phi:
                return m
        raise AssertionError("pieces do not cover %s" % x)

    def apply(self, x: ExtRational) -> ExtRational:
        return moebius_apply(self.matrix_at(x), x)

    def breakpoints(self) -> List[ExtRational]:
        if self.is_global:
            return []
        return [lo for lo, _, _ in self.pieces]

    def inverse(self) -> "PPMap":
        if self.is_global:
            return PPMap.from_matrix(self.pieces[0][2].inverse())
        inv = [(moebius_apply(m, lo), moebius_apply(m, hi), m.inverse())
               for lo, hi, m in self.pieces]
        anchor = min(range(len(inv)), key=lambda i: _pos(inv[i][0]))
        return PPMap(inv[anchor:] + inv[:anchor])

    def __eq__(self, other) -> bool:
        if not isinstance(other, PPMap):
            return NotImplemented
        return self.pieces == other.pieces

    def __hash__(self):
        return hash(tuple((_pos(lo), m) for lo, _, m in self.pieces))

    def __str__(self) -> str:
        return "; ".join("%s..%s:%s" % (lo, hi, m) for lo, hi, m in self.pieces)

    def __repr__(self):
        return "PPMap(%r)" % str(self)


def parse_ppmap(text: str) -> PPMap:
    pieces = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        try:
            span, mat = chunk.split(":", 1)
            lo_s, hi_s = span.split("..")
        except ValueError:
            raise ValueError("cannot parse PP piece %r (expected lo..hi:[[a,b],[c,d]])"
                             % chunk)
        pieces.append((parse_ext_rational(lo_s), parse_ext_rational(hi_s),
                       parse_matrix(mat)))
    return PPMap(pieces)


def pp_apply(f: PPMap, x: ExtRational) -> ExtRational:
    return f.apply(x)


def pp_compose(f: PPMap, g: PPMap) -> PPMap:
    """Composite applying f first: x -> g(f(x))."""
    finv = f.inverse()
    cuts = {_pos(x): x for x in f.breakpoints()}
    for p in g.breakpoints():
        x = finv.apply(p)
        cuts.setdefault(_pos(x), x)
    if not cuts:
        return PPMap.from_matrix(g.pieces[0][2] * f.pieces[0][2])
    xs = [cuts[k] for k in sorted(cuts)]
    pieces = []
    for u, v in zip(xs, xs[1:] + xs[:1]):
        w = _interior_point(u, v)
        m = g.matrix_at(f.apply(w)) * f.matrix_at(w)
        pieces.append((u, v, m))
    return PPMap(pieces)


def pp_invert(f: PPMap) -> PPMap:
    return f.inverse()


def pp_eq(f: PPMap, g: PPMap) -> bool:
    return f == g


def build_d() -> PPMap:
    """The four-piece map conjugating to the T generator B."""
    return PPMap([
        (ZERO, INF, IDENTITY_MAT),
        (NEG_INF, ExtRational(-1, 1), PSL2Matrix.make(1, -1, 0, 1)),
        (ExtRational(-1, 1), ExtRational(-1, 2), PSL2Matrix.make(3, 1, -1, 0)),
        (ExtRational(-1, 2), ZERO, PSL2Matrix.make(1, 0, 1, 1)),
    ])


def ppmap_from_word(w: NormalWord) -> PPMap:
    f = PPMap.identity()
    for ch in w.letters():
        f = pp_compose(f, PPMap.from_matrix(GENERATOR_MATS[ch]))
    return f


def _farey_refine(lo: ExtRational, hi: ExtRational,
                  root_lo: ExtRational, root_hi: ExtRational) -> List[ExtRational]:
    """Partition points of [lo, hi] into Farey intervals by mediant bisection.

    [root_lo, root_hi] is the Stern-Brocot root Farey interval of the
    containing ray; comparisons are real-line order within the ray.
    """
    points = [lo]

    def lt(x, y):
        return x.num * y.den < y.num * x.den

    def cover(left, right, a, b, depth):
        # [a, b] is the current Farey window containing [left, right]
        if depth > REFINEMENT_DEPTH_LIMIT:
            raise RefinementDepthError("refinement beyond depth %d"
                                       % REFINEMENT_DEPTH_LIMIT)
        if left == a and right == b:
            points.append(right)
            return
        m = mediant(a, b)
        if not lt(m, right) and right != b:
            # right <= m (and right < b): whole target in the left window
            cover(left, right, a, m, depth + 1)
        elif not lt(left, m):
            cover(left, right, m, b, depth + 1)
        else:
            cover(left, m, a, m, depth + 1)
            cover(m, right, m, b, depth + 1)
    cover(lo, hi, root_lo, root_hi, 0)
    return points


def _ray_of(lo: ExtRational, hi: ExtRational) -> Tuple[ExtRational, ExtRational]:
    """Root Farey interval of the ray containing the arc [lo, hi]."""
    plo, phi = _pos(lo), _pos(hi)
    half = Fraction(1, 2)
    phi_eff = phi if phi > plo else Fraction(1)
    if phi_eff <= half:
        return ZERO, INF
    if plo >= half:
        return NEG_INF, ZERO
    raise AssertionError("arc [%s, %s] straddles a ray boundary" % (lo, hi))


def inn_question(f: PPMap, check_farey: bool = True) -> PLMap:
    """Conjugation by the question mark: the PL map ? o f o ?^{-1}.

    Refines the piece partition (splitting first at 0, ∞ and their
    preimages) until every arc and its image are Farey intervals, then
    transports endpoints through ?.  The PLMap constructor certifies
    dyadic breakpoints and power-of-two slopes.
    """
    finv = f.inverse()
    cuts = {_pos(x): x for x in f.breakpoints()}
    for x in (ZERO, INF, finv.apply(ZERO), finv.apply(INF)):
        cuts.setdefault(_pos(x), x)
    xs = [cuts[k] for k in sorted(cuts)]
    refined = []
    for u, v in zip(xs, xs[1:] + xs[:1]):
        m = f.matrix_at(_interior_point(u, v))
        root = _ray_of(u, v)
        # respell infinite endpoints to match the ray, so real-line
        # cross-multiplication orders the whole window consistently
        if u.is_infinite:
            u = root[0] if root[0].is_infinite else root[1]
        if v.is_infinite:
            v = root[0] if root[0].is_infinite else root[1]
        pts = _farey_refine(u, v, root[0], root[1])
        for a, b in zip(pts, pts[1:]):
            if check_farey:
                assert is_farey_pair(a, b), "refinement produced a non-Farey pair"
                ia, ib = moebius_apply(m, a), moebius_apply(m, b)
                assert is_farey_pair(ia, ib), "image of a Farey pair is not Farey"
            refined.append((a, m))
    us = [_pos(a) for a, _ in refined] + [Fraction(1)]
    vs_circ = [_pos(moebius_apply(m, a)) for a, m in refined]
    lift = [vs_circ[0]]
    for prev, cur in zip(vs_circ, vs_circ[1:]):
        inc = (cur - prev) % 1
        lift.append(lift[-1] + (inc if inc else 1))
    inc = (vs_circ[0] - vs_circ[-1]) % 1
    lift.append(lift[-1] + (inc if inc else 1))
    return PLMap(list(zip(us, lift)))
