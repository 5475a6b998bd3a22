"""JSON encodings for all value types.

Words are digit strings ("13" is the word (1, 3)); rationals are fraction
strings ("1/3").  Encoders emit sorted keys and canonical forms so outputs
are byte-stable.
"""
from __future__ import annotations

from fractions import Fraction

from . import codes as C
from . import unitaries as U
from . import words as W
from .codes import SlidingBlockCode
from .endo import AutomorphismVerdict
from .unitaries import PermutationUnitary
from .words import DiagonalElement


def diag_to_dict(x: DiagonalElement) -> dict:
    x = W.reduce(x)
    if x.is_projection():
        return {
            "n": x.n,
            "level": x.level,
            "support": [W.format_word(w) for w in x.support()],
        }
    return {
        "n": x.n,
        "level": x.level,
        "coeffs": {
            W.format_word(W.word_unrank(r, x.n, x.level)): str(c)
            for r, c in enumerate(x.coeffs)
            if c
        },
    }


def diag_from_dict(data: dict) -> DiagonalElement:
    n = int(data["n"])
    if "support" in data:
        words = [W.parse_word(s, n) for s in data["support"]]
        level = int(data.get("level", len(words[0]) if words else 0))
        if words and level != len(words[0]):
            raise ValueError("support words do not match the stated level")
        return W.projection(n, words) if words else W.zero(n)
    level = int(data["level"])
    coeffs = [Fraction(0)] * (n**level)
    for text, value in data["coeffs"].items():
        word = W.parse_word(text, n)
        if len(word) != level:
            raise ValueError("coefficient word %r is not at level %d" % (text, level))
        coeffs[W.word_rank(word, n)] = Fraction(value)
    return DiagonalElement(n, level, tuple(coeffs))


def unitary_to_dict(u: PermutationUnitary) -> dict:
    u = U.reduce(u)
    return {
        "n": u.n,
        "level": u.level,
        "map": [
            [
                W.format_word(W.word_unrank(src, u.n, u.level)),
                W.format_word(W.word_unrank(dst, u.n, u.level)),
            ]
            for src, dst in enumerate(u.ranks)
        ],
    }


def unitary_from_dict(data: dict) -> PermutationUnitary:
    n = int(data["n"])
    level = int(data["level"])
    mapping = {}
    for src, dst in data["map"]:
        key = W.parse_word(src, n)
        if key in mapping:
            raise ValueError("domain word %r listed twice" % src)
        mapping[key] = W.parse_word(dst, n)
    return U.from_mapping(n, level, mapping)


def code_to_dict(c: SlidingBlockCode) -> dict:
    c = C.minimize(c)
    return {
        "n": c.n,
        "radius": c.radius,
        "rule": {
            W.format_word(w): c.rule[i]
            for i, w in enumerate(W.enumerate_words(c.n, c.radius))
        },
    }


def code_from_dict(data: dict) -> SlidingBlockCode:
    n = int(data["n"])
    radius = int(data["radius"])
    rule = [0] * (n**radius)
    entries = data["rule"]
    if len(entries) != n**radius:
        raise ValueError("rule table must cover every window exactly once")
    for text, letter in entries.items():
        word = W.parse_word(text, n)
        if len(word) != radius:
            raise ValueError("window %r does not have the stated radius" % text)
        rule[W.word_rank(word, n)] = int(letter)
    return SlidingBlockCode(n, radius, tuple(rule))


def verdict_to_dict(v: AutomorphismVerdict, property_p_m=None) -> dict:
    if v.verdict == "automorphism":
        out = {"verdict": "automorphism", "inverse": unitary_to_dict(v.inverse)}
        if property_p_m is not None:
            out["property_P_m"] = property_p_m
        return out
    if v.verdict == "not_automorphism":
        return {"verdict": "not_automorphism", "reason": "degree", "degree": v.degree}
    return {"verdict": "unknown", "budget": v.budget}


def orbit_report(c: SlidingBlockCode, r: int) -> dict:
    orbits = C.periodic_points(c.n, r)
    perm = C.orbit_permutation(c, r)
    return {
        "r": r,
        "orbits": [[W.format_word(w) for w in orbit] for orbit in orbits],
        "permutation": [
            [W.format_word(src), W.format_word(dst)]
            for src, dst in sorted(perm.items())
        ],
    }
