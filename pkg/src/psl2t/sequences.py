"""Slope-sequence characterization of PSL2(Z) membership.

A circle PL map is summarized by the interval lengths dx, the image
increments dy, and a mark pointing at the first increment after the
breakpoint where the map's value is 0.  Membership is decided by a
thinness condition on dx and the mark-rotated dy plus a slope-pair
cover condition.

Throughout this module k counts intervals (= leaves of the matching
tree); the weight count of a thin tree is k - 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Tuple

from .plmaps import PLMap, _is_dyadic, plmap_from_diagram
from .trees import Tree, leaf_intervals
from .membership import NotThinError, thin_from_weights, weights_from_thin


@dataclass(frozen=True)
class SeqS:
    dx: tuple
    dy: tuple
    mark: int

    def __post_init__(self):
        k = len(self.dx)
        if len(self.dy) != k or k < 2:
            raise ValueError("need matching dx/dy lists of length >= 2")
        if sum(self.dx) != 1 or sum(self.dy) != 1:
            raise ValueError("interval lengths must sum to 1")
        if not 1 <= self.mark <= k:
            raise ValueError("mark %d out of range [1, %d]" % (self.mark, k))
        for q in self.dx + self.dy:
            if q <= 0 or not _is_dyadic(q):
                raise ValueError("lengths must be positive dyadics")

    @property
    def k(self) -> int:
        return len(self.dx)

    def rotated_dy(self) -> tuple:
        i = self.mark - 1
        return self.dy[i:] + self.dy[:i]

    def __str__(self) -> str:
        # paper-style display: reduced slope fractions, "o" on the mark
        parts = []
        for j, (dx, dy) in enumerate(zip(self.dx, self.dy), start=1):
            slope = dy / dx
            parts.append(("o" if j == self.mark else "") + "%d/%d"
                          % (slope.numerator, slope.denominator))
        return ",".join(parts)


def seq_from_plmap(f: PLMap) -> SeqS:
    """Sequence of a canonical PL map.

    Maps with no interior breakpoint are padded at x = 1/2; a breakpoint
    is inserted at the preimage of 0 when the lift has no integer value.
    """
    pts = list(f.points)
    if len(pts) == 2:
        mid = Fraction(1, 2)
        pts.insert(1, (mid, f.apply_lift(mid)))
    if not any(y.denominator == 1 for _, y in pts[:-1]):
        xstar = f.preimage(Fraction(0))
        i = next(i for i, (x, _) in enumerate(pts) if x > xstar)
        pts.insert(i, (xstar, f.apply_lift(xstar)))
    dx = tuple(x1 - x0 for (x0, _), (x1, _) in zip(pts, pts[1:]))
    dy = tuple(y1 - y0 for (_, y0), (_, y1) in zip(pts, pts[1:]))
    mark = next(i for i, (_, y) in enumerate(pts[:-1]) if y.denominator == 1) + 1
    return SeqS(dx, dy, mark)


def plmap_from_seq(s: SeqS) -> PLMap:
    xs = [Fraction(0)]
    for d in s.dx:
        xs.append(xs[-1] + d)
    totals = [Fraction(0)]
    for d in s.dy:
        totals.append(totals[-1] + d)
    shift = -totals[s.mark - 1] + (1 if s.mark > 1 else 0)
    return PLMap([(x, t + shift) for x, t in zip(xs, totals)])


def is_k_extremal(p) -> bool:
    """Each step takes the running min or max of the unused values,
    ending on (min, max) of the final pair; the first step must too."""
    p = tuple(p)
    k = len(p)
    if k < 2 or sorted(p) != list(range(1, k + 1)):
        return False
    remaining = set(range(1, k + 1))
    for i, v in enumerate(p):
        if i == k - 2:
            if v != min(remaining):
                return False
        elif i == k - 1:
            if v != max(remaining):
                return False
        elif v not in (min(remaining), max(remaining)):
            return False
        remaining.discard(v)
    return True


def _thin_positions(deltas) -> Optional[Tuple[Tuple[int, ...], int, int]]:
    """Witness (sigma, p, q) with sigma(i) = position of the i-th value."""
    deltas = tuple(deltas)
    k = len(deltas)
    if k < 2:
        return None
    expect = [Fraction(1, 2 ** i) for i in range(1, k)] + [Fraction(1, 2 ** (k - 1))]
    if sorted(deltas, reverse=True) != sorted(expect, reverse=True):
        return None
    positions = {}
    small = []
    for idx, d in enumerate(deltas, start=1):
        if d == Fraction(1, 2 ** (k - 1)):
            small.append(idx)
        else:
            positions[d] = idx
    if len(small) != 2:
        return None
    sigma = tuple(positions[Fraction(1, 2 ** i)] for i in range(1, k - 1)) \
        + (small[0], small[1])
    if not is_k_extremal(sigma):
        return None
    return sigma, small[0], small[1]


def is_k_thin(deltas) -> Optional[Tuple[int, ...]]:
    """The witnessing extremal permutation if the sequence is thin."""
    hit = _thin_positions(deltas)
    return hit[0] if hit else None


def thin_tree_from_sequence(deltas) -> Tree:
    """Thin tree whose leaf intervals have the given (thin) lengths."""
    hit = _thin_positions(deltas)
    if hit is None:
        raise NotThinError("sequence is not k-thin: %s" % (list(deltas),))
    sigma, p, q = hit
    k = len(tuple(deltas))
    weights = []
    for i in range(k - 2):
        pos = sigma[i]
        if pos > q:
            weights.append(1)
        elif pos < p:
            weights.append(-1)
        else:
            raise AssertionError("value between the two smallest entries")
    return thin_from_weights(weights)


def sequence_from_thin_tree(t: Tree) -> Tuple[Fraction, ...]:
    weights_from_thin(t)  # raises NotThinError on non-thin input
    return tuple(hi - lo for lo, hi in leaf_intervals(t))


@lru_cache(maxsize=1)
def _small_good_table() -> Tuple[SeqS, ...]:
    # sequences of the 10 members with < 4 leaves, via the diagram oracle
    from .membership import _small_table
    return tuple(seq_from_plmap(plmap_from_diagram(diag))
                 for _, diag in _small_table())


def is_k_good(s: SeqS) -> bool:
    """Membership test on slope sequences.

    Beyond thinness of dx and the mark-rotated dy, every slope pair
    (dy, dx) = (2^{-k-1+j}, 2^{-j}) must occur, for 1 <= j <= k with
    both entries clamped below at 2^{-k+1}.  The interior range
    3 <= j <= k-2 is the familiar cover condition; the clamped boundary
    pairs force the two largest dx entries to carry the smallest dy
    values and vice versa, which is what pins the count of good
    sequences per thin dx at exactly four.
    """
    k = s.k
    if k <= 3:
        return s in _small_good_table()
    if is_k_thin(s.dx) is None:
        return False
    if is_k_thin(s.rotated_dy()) is None:
        return False
    pairs = set(zip(s.dy, s.dx))
    floor = Fraction(1, 2 ** (k - 1))
    for j in range(1, k + 1):
        need = (max(Fraction(1, 2 ** (k + 1 - j)), floor),
                max(Fraction(1, 2 ** j), floor))
        if need not in pairs:
            return False
    return True


def is_member_seq(f: PLMap) -> bool:
    return is_k_good(seq_from_plmap(f))
