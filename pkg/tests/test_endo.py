import itertools
import random

import pytest

from shiftcalc import endo as E
from shiftcalc import unitaries as U
from shiftcalc import words as W


def endos_agree_on_cylinders(e1, e2, depth):
    n = e1.n
    return all(
        E.apply_diag(e1, W.cylinder(n, w)) == E.apply_diag(e2, W.cylinder(n, w))
        for k in range(1, depth + 1)
        for w in W.enumerate_words(n, k)
    )


def test_convolution_realizes_composition():
    rng = random.Random(5)
    pool = list(U.all_unitaries(2, 2))
    for _ in range(30):
        u, w = rng.choice(pool), rng.choice(pool)
        composed = E.compose(E.endomorphism(u), E.endomorphism(w))
        eu, ew = E.endomorphism(u), E.endomorphism(w)
        for k in range(1, 4):
            for word in W.enumerate_words(2, k):
                p = W.cylinder(2, word)
                assert E.apply_diag(composed, p) == E.apply_diag(
                    eu, E.apply_diag(ew, p)
                )


def test_flip_endomorphism_is_the_shift():
    for n in (2, 3):
        e = E.endomorphism(U.flip_unitary(n))
        for k in range(1, 4):
            for w in W.enumerate_words(n, k):
                p = W.cylinder(n, w)
                assert E.apply_diag(e, p) == W.shift_diag(p)


def test_agree_on_diagonal_is_representation_independent():
    u = U.kitchens_unitary()
    assert E.agree_on_diagonal(u, U.embed(u, 4))
    assert not E.agree_on_diagonal(u, U.identity(3))


def test_agree_on_diagonal_separates_unequal_actions():
    # theta and the letter swap act differently on the diagonal of O_2
    assert not E.agree_on_diagonal(U.flip_unitary(2), U.letter_permutation(2, (2, 1)))


def test_is_identity_on_diagonal():
    assert E.is_identity_on_diagonal(U.identity(2))
    assert E.is_identity_on_diagonal(U.embed(U.identity(2), 3))
    assert not E.is_identity_on_diagonal(U.flip_unitary(2))
    assert not E.is_identity_on_diagonal(U.kitchens_unitary())


def test_ad_unitary_realizes_inner_automorphisms():
    rng = random.Random(3)
    pool = list(U.all_unitaries(2, 2))
    for _ in range(10):
        w = rng.choice(pool)
        inner = E.endomorphism(E.ad_unitary(w))
        for word in W.enumerate_words(2, 3):
            p = W.cylinder(2, word)
            assert E.apply_diag(inner, p) == U.adjoint_action(w, p)


def test_inner_automorphisms_eventually_commute_with_the_shift():
    rng = random.Random(17)
    for n, k in ((2, 2), (2, 3), (3, 2)):
        pool = None
        for _ in range(5):
            if pool is None:
                size = n**k
                perm = list(range(size))
            rng.shuffle(perm)
            w = U.PermutationUnitary(n, k, tuple(perm))
            e = E.endomorphism(E.ad_unitary(w))
            found = E.is_in_ign(e, k)
            assert found is not None and found <= k
            # Ad(w) phi^k = phi^k on the diagonal
            rot = U.shift_power_unitary(n, k)
            assert E.agree_on_diagonal(E.convolution(E.ad_unitary(w), rot), rot)


def test_is_in_ign_identity_and_flip():
    assert E.is_in_ign(E.endomorphism(U.identity(2)), 3) == 0
    # lambda_theta = phi is not inner-after-any-shift within this budget
    assert E.is_in_ign(E.endomorphism(U.flip_unitary(2)), 3) is None


def test_commutes_with_shift_on_diagonal():
    assert E.commutes_with_shift_on_diagonal(E.endomorphism(U.kitchens_unitary()))
    assert E.commutes_with_shift_on_diagonal(E.endomorphism(U.flip_unitary(2)))
    # Ad of a letter swap relabels only the first coordinate
    skew = E.ad_unitary(U.letter_permutation(2, (2, 1)))
    assert not E.commutes_with_shift_on_diagonal(E.endomorphism(skew))


def test_phi_commutation_identity():
    for n in (2, 3):
        for images in itertools.permutations(range(1, n + 1)):
            assert E.phi_commutation_identity(U.letter_permutation(n, images))
    assert not E.phi_commutation_identity(U.kitchens_unitary())


def test_certify_kitchens_is_self_inverse():
    verdict = E.certify_automorphism(E.endomorphism(U.kitchens_unitary()), budget=6)
    assert verdict.verdict == "automorphism"
    assert verdict.inverse == U.kitchens_unitary()


def test_certify_flip_is_refuted_with_degree_two():
    verdict = E.certify_automorphism(E.endomorphism(U.flip_unitary(2)), budget=6)
    assert verdict.verdict == "not_automorphism"
    assert verdict.degree == 2


def test_certify_inner_automorphism():
    w = U.from_mapping(3, 2, {(a, b): ((a % 3) + 1, b) for a in (1, 2, 3) for b in (1, 2, 3)})
    e = E.endomorphism(E.ad_unitary(w))
    verdict = E.certify_automorphism(e, budget=6)
    assert verdict.verdict == "automorphism"
    both = E.convolution(verdict.inverse, e.unitary)
    assert E.is_identity_on_diagonal(both)


def test_preimage_inverts_kitchens():
    e = E.endomorphism(U.kitchens_unitary())
    y = W.projection(3, [(1, 1), (1, 2), (2, 3)])
    assert E.preimage(e, y, 4) == W.cylinder(3, (1,))
    assert E.preimage(e, W.cylinder(3, (3,)), 4) == W.cylinder(3, (3,))


def test_property_p_data_kitchens():
    u = U.kitchens_unitary()
    m_upper, m_min = E.property_p_data(E.endomorphism(u), u)
    assert m_min == 0
    assert m_upper == u.level - 1


def test_property_p_data_composition_with_inner():
    rng = random.Random(23)
    pool = list(W.enumerate_words(3, 2))
    perm = list(range(9))
    rng.shuffle(perm)
    v = U.PermutationUnitary(3, 2, tuple(perm))
    e = E.compose(E.endomorphism(E.ad_unitary(v)), E.endomorphism(U.kitchens_unitary()))
    verdict = E.certify_automorphism(e, budget=8)
    assert verdict.verdict == "automorphism"
    m_upper, m_min = E.property_p_data(e, verdict.inverse)
    assert m_upper == max(U.reduce(verdict.inverse).level - 1, 0)
    assert 0 <= m_min <= m_upper


def test_braiding_of_kitchens():
    u = U.kitchens_unitary()
    e = E.endomorphism(u)
    result = E.braiding(e, u, budget=8)
    assert result.unitary is not None
    # alpha phi(x) = beta phi alpha(x) on cylinders
    for k in range(1, 4):
        for w in W.enumerate_words(3, k):
            p = W.cylinder(3, w)
            lhs = E.apply_diag(e, W.shift_diag(p))
            rhs = result.apply(W.shift_diag(E.apply_diag(e, p)))
            assert lhs == rhs
