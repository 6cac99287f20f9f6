import random

import pytest

from vkgroups.lie import hall_coordinates
from vkgroups.magnus import TruncSeries, leading_weight, magnus, product
from vkgroups.words import Alphabet, commutator, left_normed_commutator

from .common import random_word

XY = Alphabet.free(["x", "y"])


def test_magnus_images_of_letters():
    assert magnus(XY.word("x"), 3).coeffs == {(): 1, (0,): 1}
    assert magnus(XY.word("y^-1"), 3).coeffs == {(): 1, (1,): -1, (1, 1): 1, (1, 1, 1): -1}


def test_the_magnus_map_is_multiplicative():
    rng = random.Random(29)
    for _ in range(200):
        # Given two random words
        u, v = random_word(XY, 6, rng=rng), random_word(XY, 6, rng=rng)

        # Then the image of their product should be the product of their images
        assert magnus(u * v, 5) == magnus(u, 5) * magnus(v, 5)

        # And inverses should map to inverses
        assert (magnus(u.inverse(), 5) * magnus(u, 5)).is_one()


def test_series_powers_agree_with_word_powers():
    w = XY.word("x y^-2 x")
    for k in (-3, -1, 0, 2, 5):
        assert magnus(w, 4) ** k == magnus(w ** k, 4)


def test_products_of_series():
    words = [XY.word("x"), XY.word("y"), XY.word("x^-1")]
    assert product((magnus(w, 3) for w in words), 3) == magnus(XY.word("x y x^-1"), 3)


def test_series_with_different_cutoffs_cant_be_multiplied():
    with pytest.raises(ValueError):
        TruncSeries.one(2) * TruncSeries.one(3)


def test_only_group_like_series_have_integer_powers():
    with pytest.raises(ValueError):
        TruncSeries(3, {(0,): 1}) ** 2


@pytest.mark.parametrize("given,weight", [
    ("x y x^-1 y^-1", 2),
    ("x^2", 1),
    ("x x^-1", None),
])
def test_leading_weights_of_words(given, weight):
    lead = leading_weight(XY.word(given), 5)
    assert (lead and lead.weight) == weight


def test_leading_term_of_a_commutator_is_its_bracket():
    x, y = XY.generators()
    lead = leading_weight(commutator(commutator(x, y), x), 4)
    assert lead.weight == 3
    assert lead.lie.coords == (-1, 0)


def test_words_deep_in_the_lower_central_series_vanish_below_their_weight():
    x, y = XY.generators()
    w = commutator(commutator(commutator(x, y), y), x)
    assert leading_weight(w, 3) is None
    assert leading_weight(w, 4).weight == 4


def test_k1_relator_has_leading_weight_four(k1):
    assert leading_weight(k1.relators[0], 5).weight == 4


@pytest.mark.parametrize("weight", [2, 3, 4, 5])
def test_products_of_commutators_vanish_below_their_weight(weight):
    rng = random.Random(31 + weight)
    for _ in range(20):
        # Given a product of random left-normed commutators of the given weight
        w = XY.word("")
        for _ in range(rng.randint(1, 3)):
            a, b = random_word(XY, rng.randint(1, 2), rng=rng), random_word(XY, rng.randint(1, 2), rng=rng)
            w = w * left_normed_commutator(b, a, weight - 1)

        # Then its Magnus image should be trivial below that weight
        lead = leading_weight(w, weight + 1)
        assert lead is None or lead.weight >= weight
        assert magnus(w, weight - 1).is_one()


def test_relator_leading_terms_in_the_lyndon_basis(k1, k2, k4):
    # Given the weight 4 Lyndon basis [x,[x,[x,y]]], [x,[[x,y],y]], [[[x,y],y],y]
    # Then each knot's relator should lead with a multiple of a primitive vector
    expected = {"K1": (k1, (-1, -1, 0), 1), "K2": (k2, (-4, -4, 0), 4), "K4": (k4, (-2, -2, 0), 2)}
    for name, (p, coords, content) in expected.items():
        lead = leading_weight(p.relators[0], 5)
        assert lead.weight == 4, name
        assert lead.lie.coords == coords, name
        assert lead.lie.content == content, name


def test_hall_coordinates_fix_the_k1_leading_term(k1):
    # Given K1's leading term in Lyndon coordinates
    lead = leading_weight(k1.relators[0], 5).lie

    # When I solve for coordinates in the left-normed Hall basis
    H = hall_coordinates()
    solution = [
        (a, b, c) for a in range(-2, 3) for b in range(-2, 3) for c in range(-2, 3)
        if tuple(a * H[0, j] + b * H[1, j] + c * H[2, j] for j in range(3)) == lead.coords
    ]

    # Then it should be [[[x,y],y],x] [[[x,y],x],x]^-1 modulo weight 5
    assert solution == [(1, -1, 0)]
    assert abs(H.det()) == 1
