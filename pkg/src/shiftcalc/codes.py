"""Sliding block codes on the full one-sided n-shift.

A code is a total local rule W_n^r -> {1, ..., n}; the induced point map is
F(x)_k = rule(x_k, ..., x_{k+r-1}), which commutes with the shift by
construction.  Dually, a code acts on the diagonal, and composition of the
diagonal endomorphisms corresponds to composing point maps the other way
round: the convention fixed here (and pinned by tests) is

    dual(alpha beta) = F_beta o F_alpha,

with code_compose(c1, c2) returning the code of F_{c1} o F_{c2}.

Inverse-to-shift-power search, degree, periodic orbits and the
orbit-permutation separations all live here; every returned certificate is
verified exactly against rule tables before it escapes.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .capacity import check as _check_capacity
from . import words as W
from .words import DiagonalElement, word_rank, word_unrank


@dataclass(frozen=True)
class SlidingBlockCode:
    """Radius-r local rule, stored as a table over lexicographic windows."""

    n: int
    radius: int
    rule: tuple  # rule[rank(window)] in {1, ..., n}

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("alphabet size must be at least 2")
        if self.radius < 1:
            raise ValueError("radius must be at least 1")
        if len(self.rule) != self.n**self.radius:
            raise ValueError("rule table has wrong length")
        if any(not 1 <= s <= self.n for s in self.rule):
            raise ValueError("rule values outside alphabet")

    def __eq__(self, other):
        if not isinstance(other, SlidingBlockCode):
            return NotImplemented
        return self.n == other.n and code_equal(self, other)

    def __hash__(self):
        c = minimize(self)
        return hash((c.n, c.radius, c.rule))

    def local(self, window: Sequence[int]) -> int:
        return self.rule[word_rank(window, self.n)]

    def output(self, word: Sequence[int]) -> tuple:
        """Sliding evaluation on a finite word of length >= radius."""
        r = self.radius
        return tuple(self.local(word[j : j + r]) for j in range(len(word) - r + 1))


def identity_code(n: int) -> SlidingBlockCode:
    return SlidingBlockCode(n, 1, tuple(range(1, n + 1)))


def letter_code(n: int, images: Sequence[int]) -> SlidingBlockCode:
    """Radius-1 code applying a letter permutation (or any letter map)."""
    if len(images) != n:
        raise ValueError("need one image per letter")
    return SlidingBlockCode(n, 1, tuple(images))


def shift_power_code(n: int, m: int) -> SlidingBlockCode:
    """The code of the m-th shift power: rule(w) = w_{m+1}."""
    if m < 0:
        raise ValueError("shift power must be nonnegative")
    if m == 0:
        return identity_code(n)
    words = W.enumerate_words(n, m + 1)
    return SlidingBlockCode(n, m + 1, tuple(w[m] for w in words))


def shift_code(n: int) -> SlidingBlockCode:
    return shift_power_code(n, 1)


def kitchens_code() -> SlidingBlockCode:
    """The order-two automorphism of the one-sided 3-shift swapping 13 and 23."""
    rule = {}
    for a, b in itertools.product(range(1, 4), repeat=2):
        rule[(a, b)] = a
    rule[(1, 3)] = 2
    rule[(2, 3)] = 1
    return SlidingBlockCode(3, 2, tuple(rule[w] for w in W.enumerate_words(3, 2)))


def pad(c: SlidingBlockCode, radius: int) -> SlidingBlockCode:
    """Rewrite at a larger radius; the extra trailing letters are ignored."""
    if radius < c.radius:
        raise ValueError("cannot pad to a smaller radius")
    if radius == c.radius:
        return c
    copies = _check_capacity(c.n, radius) // len(c.rule)
    return SlidingBlockCode(c.n, radius, tuple(s for s in c.rule for _ in range(copies)))


def minimize(c: SlidingBlockCode) -> SlidingBlockCode:
    """Smallest-radius table inducing the same point map."""
    n, radius, rule = c.n, c.radius, c.rule
    while radius > 1:
        chunks = [rule[i : i + n] for i in range(0, len(rule), n)]
        if any(ch.count(ch[0]) != n for ch in chunks):
            break
        rule = tuple(ch[0] for ch in chunks)
        radius -= 1
    if radius == c.radius:
        return c
    return SlidingBlockCode(n, radius, rule)


def code_equal(c1: SlidingBlockCode, c2: SlidingBlockCode) -> bool:
    """Equality of induced point maps (tables compared at a common radius)."""
    if c1.n != c2.n:
        raise ValueError("alphabet sizes differ")
    r = max(c1.radius, c2.radius)
    return pad(c1, r).rule == pad(c2, r).rule


def code_compose(c1: SlidingBlockCode, c2: SlidingBlockCode) -> SlidingBlockCode:
    """The code of F_{c1} o F_{c2}, radius r1 + r2 - 1."""
    if c1.n != c2.n:
        raise ValueError("alphabet sizes differ")
    n = c1.n
    radius = c1.radius + c2.radius - 1
    rule = tuple(c1.local(c2.output(w)) for w in W.enumerate_words(n, radius))
    return SlidingBlockCode(n, radius, rule)


def code_apply_diag(c: SlidingBlockCode, x: DiagonalElement) -> DiagonalElement:
    """Dual action on the diagonal: result(v) = x(output(v))."""
    if c.n != x.n:
        raise ValueError("alphabet sizes differ")
    x = W.reduce(x)
    if x.level == 0:
        return x
    n, k, r = c.n, x.level, c.radius
    size = _check_capacity(n, k + r - 1)
    coeffs = tuple(
        x.coeffs[word_rank(c.output(word_unrank(v, n, k + r - 1)), n)]
        for v in range(size)
    )
    return W.reduce(DiagonalElement(n, k + r - 1, coeffs))


def trace_necessary_check(c: SlidingBlockCode, max_level: int) -> bool:
    """Necessary condition for E_n membership: dual images keep the trace.

    Checks |support(alpha(P_mu))| = n^{r-1} at level |mu| + r - 1 for all
    words up to max_level; a failure soundly rules E_n membership out.
    """
    n, r = c.n, c.radius
    for k in range(1, max_level + 1):
        counts = [0] * n**k
        for v in W.enumerate_words(n, k + r - 1):
            counts[word_rank(c.output(v), n)] += 1
        if any(cnt != n ** (r - 1) for cnt in counts):
            return False
    return True


def en_inverse_search(
    c: SlidingBlockCode, max_m: int, max_window: int, fixed_m: Optional[int] = None
) -> Optional[tuple]:
    """Search for (beta, m) with alpha beta = beta alpha = phi^m, exactly.

    beta is extracted by checking whether x_{m+1} is determined by a bounded
    window of the output; every candidate is verified by rule-table
    composition against the shift power before being returned.  Absence
    within the bounds is inconclusive, not a disproof.
    """
    n, r = c.n, c.radius
    m_values = [fixed_m] if fixed_m is not None else list(range(max_m + 1))
    for m in m_values:
        for s in range(1, max_window + 1):
            if m + 1 > s + r - 1:
                continue
            table = {}
            determined = True
            for x in W.enumerate_words(n, s + r - 1):
                y = c.output(x)
                target = x[m]
                if table.setdefault(y, target) != target:
                    determined = False
                    break
            if not determined:
                continue
            rule = tuple(table.get(y, 1) for y in W.enumerate_words(n, s))
            beta = SlidingBlockCode(n, s, rule)
            sigma_m = shift_power_code(n, m)
            if code_equal(code_compose(beta, c), sigma_m) and code_equal(
                code_compose(c, beta), sigma_m
            ):
                return minimize(beta), m
    return None


def one_sided_automorphism_check(
    c: SlidingBlockCode, max_window: int
) -> Optional[SlidingBlockCode]:
    """Two-sided inverse code, if c is an automorphism of the one-sided shift."""
    found = en_inverse_search(c, 0, max_window, fixed_m=0)
    return found[0] if found is not None else None


def degree(c: SlidingBlockCode, beta: SlidingBlockCode, m: int) -> int:
    """The constant number k of preimages of a point, given an E_n certificate.

    Counts viable prefixes of preimages of the fixed point (1,1,...): the
    count is nondecreasing and stabilizes at k.  The divisibility facts
    k | n^m and k * degree(beta) = n^m are the caller's cross-checks (the
    paired degree is computed with the roles of c and beta swapped).
    """
    k = _preimage_count(c, m)
    if (c.n**m) % k:
        raise ArithmeticError(
            "degree %d does not divide n^m = %d; certificate refuted" % (k, c.n**m)
        )
    return k


def _preimage_count(c: SlidingBlockCode, m: int) -> int:
    n, r = c.n, c.radius
    target = 1  # counting preimages of the fixed point (1, 1, 1, ...)
    states = list(W.enumerate_words(n, r - 1))
    index = {t: i for i, t in enumerate(states)}
    # transitions: from tail t, appending letter x' is allowed iff rule(t x') = 1
    succ = [
        [index[(t + (x,))[1:]] for x in range(1, n + 1) if c.local(t + (x,)) == target]
        for t in states
    ]
    viable = [bool(s) for s in succ]
    changed = True
    while changed:
        changed = False
        for i, nxt in enumerate(succ):
            if viable[i] and not any(viable[j] for j in nxt):
                viable[i] = False
                changed = True
    counts = [1 if viable[i] else 0 for i in range(len(states))]
    history = [sum(counts)]
    window = 2 * r
    limit = 4 * r + 2 * m + 40
    for _ in range(limit):
        counts = [
            sum(counts[j] for j in succ[i] if viable[j]) if viable[i] else 0
            for i in range(len(states))
        ]
        history.append(sum(counts))
        if len(history) > window and len(set(history[-window:])) == 1:
            return history[-1]
    raise ArithmeticError(
        "preimage count failed to stabilize (history tail %s); "
        "the E_n certificate looks wrong" % history[-window:]
    )


@dataclass(frozen=True)
class PeriodicPoint:
    """A periodic point of the shift, given by its primitive repeating word."""

    n: int
    word: tuple

    def __post_init__(self):
        if not self.word:
            raise ValueError("periodic point needs a nonempty word")
        if primitive_root(self.word) != self.word:
            raise ValueError("repeating word must be primitive")

    @property
    def period(self) -> int:
        return len(self.word)


def primitive_root(word: Sequence[int]) -> tuple:
    word = tuple(word)
    k = len(word)
    for d in range(1, k + 1):
        if k % d == 0 and word == word[:d] * (k // d):
            return word[:d]
    return word


def least_rotation(word: Sequence[int]) -> tuple:
    word = tuple(word)
    return min(word[i:] + word[:i] for i in range(len(word)))


def periodic_point(n: int, word: Sequence[int]) -> PeriodicPoint:
    return PeriodicPoint(n, primitive_root(word))


def code_on_periodic(c: SlidingBlockCode, p: PeriodicPoint) -> PeriodicPoint:
    """Image of a periodic point: slide the rule around the cycle."""
    if c.n != p.n:
        raise ValueError("alphabet sizes differ")
    reps = -(-(c.radius) // p.period) + 1
    x = p.word * reps
    out = tuple(c.local(x[j : j + c.radius]) for j in range(p.period))
    return PeriodicPoint(p.n, primitive_root(out))


def periodic_points(n: int, r: int):
    """The phi-orbits of the n^r points of period r, as lists of words.

    Each orbit lists the length-r repeating words of its points; orbits are
    sorted by their least member.
    """
    seen = set()
    orbits = []
    for w in W.enumerate_words(n, r):
        if w in seen:
            continue
        orbit = []
        x = w
        while x not in seen:
            seen.add(x)
            orbit.append(x)
            x = x[1:] + x[:1]
        orbits.append(sorted(orbit))
    return sorted(orbits)


def orbit_permutation(c: SlidingBlockCode, r: int) -> dict:
    """The permutation induced on the phi-orbits of period-r points.

    Keyed by canonical orbit representative (least length-r word).  Raises
    if the induced map fails to permute the orbits, which refutes any E_n
    certificate held for c.
    """
    orbits = periodic_points(c.n, r)
    perm = {}
    for orbit in orbits:
        rep = orbit[0]
        image = code_on_periodic(c, periodic_point(c.n, rep))
        target = least_rotation(image.word * (r // image.period)) if r % image.period == 0 else None
        if target is None:
            raise ArithmeticError("image period does not divide r; certificate refuted")
        perm[rep] = target
    if sorted(perm.values()) != sorted(perm.keys()):
        raise ArithmeticError(
            "induced orbit map is not a permutation at r=%d; certificate refuted" % r
        )
    return perm


def is_shift_power(c: SlidingBlockCode) -> Optional[int]:
    """The j with c = sigma^j, if any; only j <= 2 radius - 2 can occur."""
    for j in range(2 * c.radius - 1):
        if code_equal(c, shift_power_code(c.n, j)):
            return j
    return None


def residual_separation(c: SlidingBlockCode, max_r: int) -> Optional[int]:
    """Least r <= max_r at which c moves a periodic orbit.

    Shift powers are screened out first (they fix every orbit); for
    anything else in E_n a moved orbit exists at some finite r.
    """
    if is_shift_power(c) is not None:
        return None
    for r in range(1, max_r + 1):
        perm = orbit_permutation(c, r)
        if any(src != dst for src, dst in perm.items()):
            return r
    return None


def _balanced(rule: tuple, n: int, r: int) -> bool:
    quota = n ** (r - 1)
    return all(rule.count(letter) == quota for letter in range(1, n + 1))


def enumerate_one_sided_automorphisms(n: int, max_radius: int, max_window: int = 0):
    """All automorphisms of the one-sided n-shift of radius <= max_radius.

    Brute force over rule tables with cheap necessary filters (balanced
    tables, injectivity on short periodic orbits) before the exact
    two-sided inverse verification.  Results are deduplicated by induced
    map and sorted by (radius, table).
    """
    if max_window <= 0:
        max_window = 2 * max_radius + 2
    _check_capacity(n, n**max_radius)  # guard the n^(n^r) table space
    found = []
    for r in range(1, max_radius + 1):
        for rule in itertools.product(range(1, n + 1), repeat=n**r):
            if not _balanced(rule, n, r):
                continue
            c = SlidingBlockCode(n, r, rule)
            if not _injective_on_periodics(c, min(3, max(2, r))):
                continue
            inv = one_sided_automorphism_check(c, max_window)
            if inv is None:
                continue
            cm = minimize(c)
            if all(not code_equal(cm, prev) for prev, _ in found):
                found.append((cm, inv))
    found.sort(key=lambda pair: (pair[0].radius, pair[0].rule))
    return found


def _injective_on_periodics(c: SlidingBlockCode, max_r: int) -> bool:
    for r in range(1, max_r + 1):
        seen = set()
        for w in W.enumerate_words(c.n, r):
            p = code_on_periodic(c, periodic_point(c.n, w))
            expanded = p.word * (r // p.period)
            if expanded in seen:
                return False
            seen.add(expanded)
    return True
