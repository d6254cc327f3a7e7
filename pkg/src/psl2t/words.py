"""PSL2(Z) as sign-canonical integer matrices and as normal-form words.

The group is the free product Z/2 * Z/3 on generators a (order 2) and
b (order 3).  Words are strings over {a, b, B} where B spells b^-1.
Normal forms are a^e1 b^d1 a b^d2 a ... a b^dk a^e2 with e1, e2 in {0,1}
and di in {-1,+1}; for k = 0 only the words "" and "a" exist.

Composition convention: juxtaposition applies the left factor first,
(gh)(x) = h(g(x)).  Consequently the matrix of a word is the product of
the letter matrices in reverse order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional


@dataclass(frozen=True)
class PSL2Matrix:
    """Integer matrix [[a, b], [c, d]] with det 1, modulo sign.

    Canonical representative: the first nonzero entry in the order
    (c, d, a) is positive.
    """

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError("determinant is not 1: %r" % (self,))

    @classmethod
    def make(cls, a: int, b: int, c: int, d: int) -> "PSL2Matrix":
        for pivot in (c, d, a):
            if pivot != 0:
                if pivot < 0:
                    a, b, c, d = -a, -b, -c, -d
                break
        return cls(a, b, c, d)

    def __mul__(self, other: "PSL2Matrix") -> "PSL2Matrix":
        return PSL2Matrix.make(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "PSL2Matrix":
        return PSL2Matrix.make(self.d, -self.b, -self.c, self.a)

    def norm2(self) -> int:
        return self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d

    def __str__(self) -> str:
        return "[[%d,%d],[%d,%d]]" % (self.a, self.b, self.c, self.d)


IDENTITY_MAT = PSL2Matrix(1, 0, 0, 1)
MAT_A = PSL2Matrix.make(0, -1, 1, 0)
MAT_B = PSL2Matrix.make(0, -1, 1, 1)
MAT_B_INV = MAT_B.inverse()

GENERATOR_MATS = {"a": MAT_A, "b": MAT_B, "B": MAT_B_INV}

_MAT_RE = re.compile(r"^\[\[(-?\d+),(-?\d+)\],\[(-?\d+),(-?\d+)\]\]$")


def parse_matrix(text: str) -> PSL2Matrix:
    m = _MAT_RE.match(text.replace(" ", ""))
    if not m:
        raise ValueError("cannot parse matrix %r (expected [[a,b],[c,d]])" % text)
    return PSL2Matrix.make(*map(int, m.groups()))


def matmul(x: PSL2Matrix, y: PSL2Matrix) -> PSL2Matrix:
    return x * y


def matinv(x: PSL2Matrix) -> PSL2Matrix:
    return x.inverse()


def mateq(x: PSL2Matrix, y: PSL2Matrix) -> bool:
    return x == y


@dataclass(frozen=True)
class NormalWord:
    eps1: int
    deltas: tuple
    eps2: int

    def __post_init__(self):
        if self.eps1 not in (0, 1) or self.eps2 not in (0, 1):
            raise ValueError("eps1, eps2 must be 0 or 1")
        if any(d not in (-1, 1) for d in self.deltas):
            raise ValueError("deltas must be +-1")
        if not self.deltas and self.eps2 != 0:
            raise ValueError("k = 0 words are only '' and 'a'")

    @property
    def k(self) -> int:
        return len(self.deltas)

    @property
    def is_identity(self) -> bool:
        return self.k == 0 and self.eps1 == 0

    def letters(self) -> str:
        parts = []
        if self.eps1:
            parts.append("a")
        for i, d in enumerate(self.deltas):
            if i:
                parts.append("a")
            parts.append("b" if d == 1 else "B")
        if self.eps2:
            parts.append("a")
        return "".join(parts)

    def inverse(self) -> "NormalWord":
        if not self.deltas:
            return self  # identity and a are involutions
        return NormalWord(self.eps2, tuple(-d for d in reversed(self.deltas)), self.eps1)

    def __str__(self) -> str:
        return self.letters() or "e"


IDENTITY_WORD = NormalWord(0, (), 0)
WORD_A = NormalWord(1, (), 0)


def _simplify_letters(letters: Iterable[str]) -> list:
    stack = []
    for ch in letters:
        if ch not in ("a", "b", "B"):
            raise ValueError("bad letter %r (expected a, b or B)" % ch)
        stack.append(ch)
        while len(stack) >= 2:
            x, y = stack[-2], stack[-1]
            if (x, y) in (("a", "a"), ("b", "B"), ("B", "b")):
                del stack[-2:]
            elif (x, y) == ("b", "b"):
                del stack[-2:]
                stack.append("B")
            elif (x, y) == ("B", "B"):
                del stack[-2:]
                stack.append("b")
            else:
                break
    return stack


def reduce_word(letters: Iterable[str]) -> NormalWord:
    """Normal form of an arbitrary letter string over {a, b, B}."""
    stack = _simplify_letters(letters)
    eps1 = 0
    deltas = []
    i = 0
    if i < len(stack) and stack[i] == "a":
        eps1 = 1
        i += 1
    expecting_b = True
    while i < len(stack):
        ch = stack[i]
        if expecting_b:
            if ch == "a":
                raise AssertionError("unreduced string survived rewriting")
            deltas.append(1 if ch == "b" else -1)
        else:
            if ch != "a":
                raise AssertionError("unreduced string survived rewriting")
        expecting_b = not expecting_b
        i += 1
    eps2 = 1 if deltas and stack[-1] == "a" else 0
    if not deltas:
        return NormalWord(eps1, (), 0)
    return NormalWord(eps1, tuple(deltas), eps2)


def parse_word(text: str) -> NormalWord:
    text = text.strip()
    if text in ("", "e"):
        return IDENTITY_WORD
    return reduce_word(text)


def word_to_matrix(w: NormalWord) -> PSL2Matrix:
    m = IDENTITY_MAT
    for ch in w.letters():
        m = GENERATOR_MATS[ch] * m
    return m


def matrix_to_word(m: PSL2Matrix) -> NormalWord:
    """Unique normal word whose matrix is m.

    Euclidean decomposition into S = [[0,-1],[1,0]] and T = [[1,1],[0,1]],
    then substitution S -> "a", T -> "ba" (left-first convention) and
    rewriting to normal form.  The result is cross-checked by roundtrip.
    """
    def t_power(q: int) -> str:
        return "ba" * q if q >= 0 else "aB" * (-q)

    def decompose(a: int, b: int, c: int, d: int) -> str:
        # returns letters L with M(L) = [[a,b],[c,d]] up to sign
        if c == 0:
            return t_power(b if a > 0 else -b)
        # m = T^q * m1 with m1 = T^{-q} m, then m1 = S * m2
        q = a // c
        a1, b1 = a - q * c, b - q * d
        # S^{-1} [[a1,b1],[c,d]] = [[c,d],[-a1,-b1]]
        rest = decompose(c, d, -a1, -b1)
        return rest + "a" + t_power(q)

    word = reduce_word(decompose(m.a, m.b, m.c, m.d))
    if word_to_matrix(word) != m:
        raise AssertionError("decomposition failed for %s" % m)
    return word


def word_length_ab(w: NormalWord) -> int:
    if w.k == 0:
        return w.eps1
    return 2 * w.k - 1 + w.eps1 + w.eps2


def enumerate_normal_words(max_k: int, min_k: int = 0):
    """All normal words with min_k <= k <= max_k, deterministically ordered."""
    if min_k == 0:
        yield IDENTITY_WORD
        yield WORD_A
        min_k = 1
    for k in range(max(min_k, 1), max_k + 1):
        for eps1 in (0, 1):
            for eps2 in (0, 1):
                for bits in range(1 << k):
                    deltas = tuple(1 if bits >> i & 1 else -1 for i in range(k))
                    yield NormalWord(eps1, deltas, eps2)
