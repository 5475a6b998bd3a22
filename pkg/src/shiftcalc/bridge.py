"""The two-way bridge between shift automorphisms and permutation unitaries.

One direction turns a certified automorphism of the one-sided shift into the
unique permutation unitary implementing it on the diagonal (tail-matching
construction); the other reads the sliding block code of a shift-commuting
permutative endomorphism off its cylinder images.  On top of both sit the
outer-class equality tests.
"""
from __future__ import annotations

import itertools
from typing import Optional

from . import capacity
from . import codes as C
from . import endo as E
from . import unitaries as U
from . import words as W
from .codes import SlidingBlockCode
from .endo import PermutativeEndomorphism
from .unitaries import PermutationUnitary


def unitary_from_shift_automorphism(
    c: SlidingBlockCode, verify_depth: int = 0
) -> PermutationUnitary:
    """The permutation unitary u with lambda_u = alpha on the diagonal.

    `c` must be (certified as) an automorphism of the one-sided shift.  The
    construction: with W(j) the level-r support of alpha(P_j), each tail in
    W_n^{r-1} occurs exactly once inside each W(j), and sigma keeps the tail
    while the new head letter is read off W(mu_1).  The hypotheses that make
    the cocycle products implement alpha at every depth are checked exactly
    before returning.
    """
    n, r = c.n, c.radius
    images = [C.code_apply_diag(c, W.cylinder(n, (j,))) for j in range(1, n + 1)]
    supports = [set(W.refine(img, r).support()) for img in images]
    if sorted(len(s) for s in supports) != [n ** (r - 1)] * n:
        raise ValueError("image supports are not balanced; input is not certified")
    mapping = {}
    for j in range(1, n + 1):
        by_tail = {}
        for mu in supports[j - 1]:
            if mu[1:] in by_tail:
                raise ValueError(
                    "tail condition violated for letter %d; input is not a "
                    "certified shift automorphism" % j
                )
            by_tail[mu[1:]] = mu
        if len(by_tail) != n ** (r - 1):
            raise ValueError("tail condition violated for letter %d" % j)
        for tail, target in by_tail.items():
            mapping[(j,) + tail] = target
    u = U.from_mapping(n, r, mapping)

    # structural form: tails are preserved and heads permute for each fixed tail
    for src, dst in mapping.items():
        if src[1:] != dst[1:]:
            raise AssertionError("constructed unitary does not preserve tails")
    for tail in W.enumerate_words(n, r - 1):
        heads = {mapping[(j,) + tuple(tail)][0] for j in range(1, n + 1)}
        if len(heads) != n:
            raise AssertionError("head maps are not letter permutations")

    # exactness: u implements alpha on level-1 elements and fixes the shifted
    # images up to level r-1, which propagates to every depth.
    for j in range(1, n + 1):
        if U.adjoint_action(u, W.cylinder(n, (j,))) != images[j - 1]:
            raise AssertionError("constructed unitary misses a level-1 image")
    for j in range(1, r):
        for img in images:
            shifted = W.shift_diag(img, j)
            if U.adjoint_action(u, shifted) != shifted:
                raise AssertionError("constructed unitary moves a shifted image")

    if verify_depth:
        e = E.endomorphism(u)
        for w in W.enumerate_words(n, verify_depth):
            p = W.cylinder(n, w)
            if E.apply_diag(e, p) != C.code_apply_diag(c, p):
                raise AssertionError("roundtrip mismatch at depth %d" % verify_depth)
    return U.reduce(u)


def extract_code(
    e: PermutativeEndomorphism,
    m: int,
    verify_depth: Optional[int] = None,
    certify: bool = True,
    max_window: int = 0,
) -> SlidingBlockCode:
    """The sliding block code of lambda_u o phi^m on the diagonal.

    Requires that the composite commutes with the shift (checked exactly;
    the caller's m is too small otherwise).  The local rule has radius
    level(u) + m and is minimized afterwards.  With certify=True the result
    must admit an E_n certificate within the window budget.
    """
    n = e.n
    if m < 0:
        raise ValueError("m must be nonnegative")
    rot = U.shift_power_unitary(n, m)
    comp = E.endomorphism(E.convolution(e.unitary, rot))
    if not E.commutes_with_shift_on_diagonal(comp):
        raise ValueError("lambda_u phi^m does not commute with the shift; m too small")
    radius = max(comp.unitary.level, 1)
    images = [E.apply_diag(comp, W.cylinder(n, (j,))) for j in range(1, n + 1)]
    rule = [0] * n**radius
    for j, img in enumerate(images, start=1):
        for mu in W.refine(img, radius).support():
            rule[W.word_rank(mu, n)] = j
    if 0 in rule:
        raise AssertionError("cylinder images do not partition the level")
    code = C.minimize(SlidingBlockCode(n, radius, tuple(rule)))
    depth = verify_depth if verify_depth is not None else e.unitary.level + m + 2
    for w in W.enumerate_words(n, depth):
        p = W.cylinder(n, w)
        if C.code_apply_diag(code, p) != E.apply_diag(comp, p):
            raise AssertionError("extracted rule disagrees with the endomorphism")
    if certify:
        window = max_window if max_window else 2 * radius + 2 * m + 2
        if C.en_inverse_search(code, m + radius, window) is None:
            raise ValueError("extracted code admits no inverse certificate in budget")
    return code


def phi_commuting_automorphism_unitaries(
    n: int, max_level: int, max_window: int = 0
) -> list:
    """Reduced unitaries u <= max_level with lambda_u a shift-commuting
    diagonal automorphism.

    Sweeps every permutation of W_n^max_level in stages tuned so the cheap
    tests run first: a one-projection necessary condition, the exact
    commutation decision, a rule read-off from the level-1 cylinder images,
    and finally the two-sided inverse search.  The inverse certificate found
    in the last stage is itself the automorphism proof, so survivors need no
    further checking.
    """
    capacity.check(n, max_level)
    radius = max(max_level, 1)
    window = max_window if max_window else 2 * radius + 2
    p1 = W.cylinder(n, (1,))
    phi_p1 = W.shift_diag(p1)
    found = {}
    for perm in itertools.permutations(range(n**max_level)):
        u = PermutationUnitary(n, max_level, perm)
        e = PermutativeEndomorphism(u)
        if E.apply_diag(e, phi_p1) != W.shift_diag(E.apply_diag(e, p1)):
            continue
        if not E.commutes_with_shift_on_diagonal(e):
            continue
        rule = [0] * n**radius
        for j in range(1, n + 1):
            img = E.apply_diag(e, W.cylinder(n, (j,)))
            for mu in W.refine(img, radius).support():
                rule[W.word_rank(mu, n)] = j
        if 0 in rule:
            continue
        code = C.minimize(SlidingBlockCode(n, radius, tuple(rule)))
        if C.one_sided_automorphism_check(code, window) is None:
            continue
        found[U.reduce(u)] = code
    return sorted(found, key=lambda v: (v.level, v.ranks))


def weyl_class_equal(
    e1: PermutativeEndomorphism,
    inv1: PermutationUnitary,
    e2: PermutativeEndomorphism,
    inv2: PermutationUnitary,
    max_k: int,
) -> Optional[bool]:
    """Outer-class equality of two certified diagonal automorphisms.

    True when the quotient composition is inner (Ad of a permutation);
    False when a periodic-orbit separation proves the classes distinct;
    None when the inner test exhausts its budget without a separation.
    """
    quotient = E.compose(e1, E.endomorphism(inv2))
    k = E.is_in_ign(quotient, max_k)
    if k is not None:
        return True
    # try to disprove: compare induced codes modulo shift powers
    m1, _ = E.property_p_data(e1, inv1)
    m2, _ = E.property_p_data(e2, inv2)
    c1 = extract_code(e1, m1)
    c2 = extract_code(e2, m2)
    if not en_class_equal(c1, c2, max_k):
        return False
    return None


def en_class_equal(c1: SlidingBlockCode, c2: SlidingBlockCode, max_k: int) -> bool:
    """Equality in E_n modulo shift powers: c1 = c2 sigma^k or vice versa."""
    if c1.n != c2.n:
        raise ValueError("alphabet sizes differ")
    for k in range(max_k + 1):
        rot = C.shift_power_code(c1.n, k)
        if C.code_equal(C.code_compose(rot, c1), c2) or C.code_equal(
            c1, C.code_compose(rot, c2)
        ):
            return True
    return False
