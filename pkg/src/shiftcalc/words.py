"""Multi-indices, cylinder sets and exact diagonal elements.

Words over the alphabet {1, ..., n} are tuples of 1-based symbols; the empty
word denotes the full space.  A diagonal element of level k is a total map
from the n^k words of length k to rationals, stored densely in lexicographic
order.  The 0/1-valued elements are the projections, i.e. finite unions of
level-k cylinders.

Equality of diagonal elements is equality of canonical (minimal level)
forms, so `reduce` is the normal form everything routes through.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .capacity import check as _check_capacity

Word = tuple  # tuple of ints in {1, ..., n}

ZERO = Fraction(0)
ONE = Fraction(1)


def word_rank(word: Sequence[int], n: int) -> int:
    """Lexicographic rank of a word inside W_n^len(word)."""
    r = 0
    for s in word:
        r = r * n + (s - 1)
    return r


def word_unrank(rank: int, n: int, k: int) -> Word:
    """Inverse of word_rank: the rank-th word of W_n^k."""
    out = [0] * k
    for i in range(k - 1, -1, -1):
        rank, d = divmod(rank, n)
        out[i] = d + 1
    return tuple(out)


def enumerate_words(n: int, k: int) -> list:
    """All words of W_n^k in lexicographic order.

    >>> enumerate_words(2, 2)
    [(1, 1), (1, 2), (2, 1), (2, 2)]
    """
    if n < 2:
        raise ValueError("alphabet size must be at least 2")
    if k < 0:
        raise ValueError("word length must be nonnegative")
    size = _check_capacity(n, k)
    return [word_unrank(r, n, k) for r in range(size)]


def format_word(word: Sequence[int]) -> str:
    """Digit-string form, e.g. (1, 3) -> "13".  Empty word -> ""."""
    return "".join(str(s) for s in word)


def parse_word(text: str, n: int) -> Word:
    if n > 9:
        raise ValueError("digit-string words require n <= 9")
    word = tuple(int(c) for c in text)
    for s in word:
        if not 1 <= s <= n:
            raise ValueError("symbol %d outside alphabet {1..%d}" % (s, n))
    return word


@dataclass(frozen=True)
class DiagonalElement:
    """A level-k rational function on W_n^k.

    Instances compare equal exactly when their canonical forms coincide,
    so elements written at different levels are interchangeable.
    """

    n: int
    level: int
    coeffs: tuple

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("alphabet size must be at least 2")
        if self.level < 0:
            raise ValueError("level must be nonnegative")
        if len(self.coeffs) != self.n**self.level:
            raise ValueError("coefficient vector has wrong length")

    def __eq__(self, other):
        if not isinstance(other, DiagonalElement):
            return NotImplemented
        a, b = reduce(self), reduce(other)
        return a.n == b.n and a.level == b.level and a.coeffs == b.coeffs

    def __hash__(self):
        r = reduce(self)
        return hash((r.n, r.level, r.coeffs))

    def is_projection(self) -> bool:
        return all(c == 0 or c == 1 for c in self.coeffs)

    def support(self) -> list:
        """Words carrying a nonzero coefficient, in lexicographic order."""
        n, k = self.n, self.level
        return [word_unrank(r, n, k) for r, c in enumerate(self.coeffs) if c]


def diagonal(n: int, level: int, coeffs: Iterable) -> DiagonalElement:
    """Build a diagonal element, coercing coefficients to Fraction."""
    _check_capacity(n, level)
    return DiagonalElement(n, level, tuple(Fraction(c) for c in coeffs))


def unit(n: int) -> DiagonalElement:
    return DiagonalElement(n, 0, (ONE,))


def zero(n: int) -> DiagonalElement:
    return DiagonalElement(n, 0, (ZERO,))


def cylinder(n: int, word: Sequence[int]) -> DiagonalElement:
    """The projection P_mu onto the cylinder of the given word."""
    return projection(n, [word])


def projection(n: int, words: Iterable[Sequence[int]]) -> DiagonalElement:
    """The projection supported on the given same-length words."""
    words = [tuple(w) for w in words]
    if not words:
        return zero(n)
    k = len(words[0])
    if any(len(w) != k for w in words):
        raise ValueError("support words must share one length")
    size = _check_capacity(n, k)
    coeffs = [ZERO] * size
    for w in words:
        for s in w:
            if not 1 <= s <= n:
                raise ValueError("symbol %d outside alphabet {1..%d}" % (s, n))
        coeffs[word_rank(w, n)] = ONE
    return DiagonalElement(n, k, tuple(coeffs))


def refine(x: DiagonalElement, level: int) -> DiagonalElement:
    """Rewrite x at a level >= level(x); coefficients copy to extensions."""
    if level < x.level:
        raise ValueError("cannot refine to a lower level")
    if level == x.level:
        return x
    copies = _check_capacity(x.n, level) // len(x.coeffs)
    coeffs = tuple(c for c in x.coeffs for _ in range(copies))
    return DiagonalElement(x.n, level, coeffs)


def reduce(x: DiagonalElement) -> DiagonalElement:
    """Canonical minimal-level form of x."""
    n, level, coeffs = x.n, x.level, x.coeffs
    while level > 0:
        chunks = [coeffs[i : i + n] for i in range(0, len(coeffs), n)]
        if any(ch.count(ch[0]) != n for ch in chunks):
            break
        coeffs = tuple(ch[0] for ch in chunks)
        level -= 1
    if level == x.level:
        return x
    return DiagonalElement(n, level, coeffs)


def _common(p: DiagonalElement, q: DiagonalElement):
    if p.n != q.n:
        raise ValueError("alphabet sizes differ")
    level = max(p.level, q.level)
    return refine(p, level), refine(q, level)


def _require_projection(x: DiagonalElement) -> None:
    if not x.is_projection():
        raise TypeError("operand is not 0/1-valued")


def meet(p: DiagonalElement, q: DiagonalElement) -> DiagonalElement:
    _require_projection(p)
    _require_projection(q)
    a, b = _common(p, q)
    return reduce(DiagonalElement(a.n, a.level, tuple(map(min, a.coeffs, b.coeffs))))


def join(p: DiagonalElement, q: DiagonalElement) -> DiagonalElement:
    _require_projection(p)
    _require_projection(q)
    a, b = _common(p, q)
    return reduce(DiagonalElement(a.n, a.level, tuple(map(max, a.coeffs, b.coeffs))))


def complement(p: DiagonalElement) -> DiagonalElement:
    _require_projection(p)
    return reduce(DiagonalElement(p.n, p.level, tuple(ONE - c for c in p.coeffs)))


def add(p: DiagonalElement, q: DiagonalElement) -> DiagonalElement:
    """Linear sum (not a Boolean operation; used to assemble elements)."""
    a, b = _common(p, q)
    return reduce(DiagonalElement(a.n, a.level, tuple(x + y for x, y in zip(a.coeffs, b.coeffs))))


def trace(x: DiagonalElement) -> Fraction:
    """The canonical trace: n^{-k} times the coefficient sum.

    Refinement-invariant; the unit has trace 1 and a level-k cylinder 1/n^k.
    """
    return Fraction(sum(x.coeffs), x.n**x.level)


def shift_diag(x: DiagonalElement, times: int = 1) -> DiagonalElement:
    """The canonical shift on the diagonal: coeffs(i mu) = coeffs(mu)."""
    if times < 0:
        raise ValueError("shift power must be nonnegative")
    out = x
    for _ in range(times):
        _check_capacity(out.n, out.level + 1)
        out = DiagonalElement(out.n, out.level + 1, out.coeffs * out.n)
    return reduce(out) if times else out


def decompose(x: DiagonalElement) -> tuple:
    """Split x = sum_j P_j shift(x_j) into its components (x_1, ..., x_n).

    Component x_j reads off x on the subtree below the first letter j.
    """
    if x.level == 0:
        x = refine(x, 1)
    n = x.n
    block = len(x.coeffs) // n
    return tuple(
        reduce(DiagonalElement(n, x.level - 1, x.coeffs[j * block : (j + 1) * block]))
        for j in range(n)
    )


def recompose(n: int, parts: Sequence[DiagonalElement]) -> DiagonalElement:
    """Inverse of decompose: sum_j P_j shift(parts_j)."""
    if len(parts) != n:
        raise ValueError("need exactly n components")
    level = max(p.level for p in parts)
    refined = [refine(p, level) for p in parts]
    coeffs = tuple(c for p in refined for c in p.coeffs)
    return reduce(DiagonalElement(n, level + 1, coeffs))
