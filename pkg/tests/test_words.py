import random

import pytest

from vkgroups.errors import AlphabetMismatch, ParseError
from vkgroups.words import (
    Alphabet, Endo, apply_endo, canonical_rotation, commutator, compose_endo, conjugate, cyclic_reduce, invert,
    is_mutually_inverse, left_normed_commutator, multiply, reduce
)

from .common import random_word

XY = Alphabet.free(["x", "y"])
XYZ = Alphabet.free(["x", "y", "z"])


@pytest.mark.parametrize("given,expected", [
    ("x y y^-1 x", "x^2"),
    ("x x^-1", "1"),
    ("", "1"),
    ("1 x 1", "x"),
    ("y^2 y^-3 x", "y^-1 x"),
])
def test_words_are_stored_reduced(given, expected):
    assert str(XY.word(given)) == expected


@pytest.mark.parametrize("given", ["x^0", "q", "x^", "x^a"])
def test_word_parsing_rejects_bad_syllables(given):
    with pytest.raises(ParseError):
        XY.word(given)


def test_words_over_different_alphabets_cant_be_multiplied():
    # Given two words over different alphabets
    a, b = XY.word("x"), XYZ.word("x")

    # When I multiply them
    # Then AlphabetMismatch should be raised
    with pytest.raises(AlphabetMismatch):
        a * b


def test_commutator_and_conjugate_follow_the_right_action_convention():
    x, y = XY.generators()
    assert commutator(x, y) == XY.word("x^-1 y^-1 x y")
    assert conjugate(x, y) == XY.word("y^-1 x y")


def test_left_normed_commutator_nests_to_the_left():
    x, y = XY.generators()
    assert left_normed_commutator(x, y, 2) == commutator(commutator(x, y), y)

    with pytest.raises(ValueError):
        left_normed_commutator(x, y, 0)


def test_word_counts_occurrences_and_exponent_sums():
    # Given a word
    w = XY.word("x y^-2 x^-1 y^3")
    y = XY.gen("y")

    # Then its y occurrences and exponent sum should be counted separately
    assert w.occurrences(y) == 5
    assert w.exponent_sum(y) == 1
    assert len(w) == 7


def test_cyclic_reduce_strips_inverse_pairs_at_the_ends():
    assert cyclic_reduce(XY.word("y x^2 y^-1")) == XY.word("x^2")
    assert cyclic_reduce(XY.word("y^-1 x y")) == XY.word("x")


def test_canonical_rotation_identifies_rotations_and_inverses():
    # Given a word, one of its rotations and its inverse
    w = XY.word("x y x^-1 y^-1")
    rotated = XY.word("y^-1 x y x^-1")

    # Then they should share a canonical rotation
    assert canonical_rotation(w) == canonical_rotation(rotated) == canonical_rotation(w.inverse())


def test_abelian_syllables_commute_in_a_free_by_abelian_alphabet():
    # Given the alphabet of F_2 * Z^2
    alphabet = Alphabet.free_by_abelian(["y1", "y2"], ["v1", "v2"])

    # Then abelian generators should commute with each other but not with free ones
    assert alphabet.word("v1 v2 v1^-1") == alphabet.word("v2")
    assert alphabet.word("v1 y1 v1^-1") != alphabet.word("y1")


def test_endomorphisms_compose_right_to_left():
    # Given two endomorphisms of F(x, y)
    x, y = XY.generators()
    f = Endo.from_mapping(XY, {"x": x * y})
    g = Endo.from_mapping(XY, {"y": x})

    # When I compose them
    h = compose_endo(f, g)

    # Then the composite should apply g first
    w = XY.word("x y^-1 x")
    assert h(w) == f(g(w))
    assert h.image("y") == x * y


def test_mutually_inverse_endomorphisms_are_detected():
    x, y = XY.generators()
    f = Endo.from_mapping(XY, {"x": x * y})
    g = Endo.from_mapping(XY, {"x": x * y.inverse()})
    assert is_mutually_inverse(f, g)
    assert not is_mutually_inverse(f, f)


def test_word_arithmetic_on_random_words():
    rng = random.Random(7)
    for _ in range(1000):
        # Given three random words
        a, b, c = (random_word(XYZ, rng.randint(0, 64), rng=rng) for _ in range(3))

        # Then the group laws and the commutator identity should hold
        assert (a * a.inverse()).is_identity
        assert (a * b).inverse() == b.inverse() * a.inverse()
        assert (a * b) * c == a * (b * c)
        assert a * b * commutator(b, a) == b * a
        assert conjugate(conjugate(a, b), invert(b)) == a
        assert a.relabel(XYZ) == a


def test_functional_word_operations():
    # Given the generators of F(x, y)
    x, y = XY.gen("x"), XY.gen("y")

    # Then reduce should cancel and be idempotent
    w = reduce(XY, [(x, 1), (y, 2), (y, -2), (x, 1)])
    assert str(w) == "x^2"
    assert reduce(XY, w.syllables) == w

    # And multiply and invert should follow the group laws
    assert multiply(XY.word("x"), XY.word("x^-1")).is_identity
    assert str(invert(XY.word("x y"))) == "y^-1 x^-1"
    assert multiply(XY.word("y^-1 x"), XY.word("x^-1 y")).is_identity

    # And apply_endo should be a homomorphism
    f = Endo.from_mapping(XY, {"x": XY.word("x y")})
    a, b = XY.word("x y^-1"), XY.word("x^2")
    assert apply_endo(f, a * b) == apply_endo(f, a) * apply_endo(f, b)
