import itertools

import pytest

from vkgroups.errors import NotALieElement
from vkgroups.lie import (
    LieVector, bracketing, expand, format_bracket, hall_coordinates, is_lyndon, left_normed, lie_coordinates,
    lie_polynomial, lyndon_words, witt_rank
)


@pytest.mark.parametrize("given,expected", [
    ((2, 1), 2),
    ((2, 2), 1),
    ((2, 3), 2),
    ((2, 4), 3),
    ((2, 5), 6),
    ((2, 6), 9),
    ((3, 2), 3),
    ((3, 4), 18),
])
def test_witt_ranks(given, expected):
    assert witt_rank(*given) == expected


@pytest.mark.parametrize("n,w", [(2, 1), (2, 4), (2, 6), (3, 3), (3, 4)])
def test_lyndon_words_are_counted_by_witt_ranks(n, w):
    words = lyndon_words(n, w)
    assert len(words) == witt_rank(n, w)
    assert all(is_lyndon(word) for word in words)
    assert list(words) == sorted(words)


def test_lyndon_words_of_weight_four():
    assert lyndon_words(2, 4) == ((0, 0, 0, 1), (0, 0, 1, 1), (0, 1, 1, 1))


@pytest.mark.parametrize("given,expected", [
    ((0, 1), "[x,y]"),
    ((0, 0, 1), "[x,[x,y]]"),
    ((0, 1, 1), "[[x,y],y]"),
    ((0, 0, 1, 1), "[x,[[x,y],y]]"),
])
def test_standard_bracketing(given, expected):
    assert format_bracket(bracketing(given), ["x", "y"]) == expected


def test_lyndon_expansions_lead_with_the_word_itself():
    for word in lyndon_words(2, 5):
        assert min(expand(word)) == word
        assert expand(word)[word] == 1


def test_left_normed_commutators_have_integer_coordinates():
    # Given every left-normed commutator of weight 4 over two letters
    for letters in itertools.product(range(2), repeat=4):
        element = left_normed(letters)

        # When I write it in the Lyndon basis
        vector = lie_coordinates(element, 2, 4)

        # Then expanding the coordinates should give it back
        assert lie_polynomial(vector) == element


def test_weight_three_coordinates():
    # [[x,y],x] is minus the basis element [x,[x,y]]
    assert lie_coordinates(left_normed((0, 1, 0)), 2, 3).coords == (-1, 0)
    assert lie_coordinates(left_normed((0, 1, 1)), 2, 3).coords == (0, 1)


def test_hall_commutators_form_a_basis_of_weight_four():
    M = hall_coordinates()
    assert M.shape == (3, 3)
    assert abs(M.det()) == 1


@pytest.mark.parametrize("given", [
    {(0, 1): 1},
    {(0,): 1},
    {(1, 0): 1, (0, 1): 1},
])
def test_non_lie_polynomials_are_rejected(given):
    with pytest.raises(NotALieElement):
        lie_coordinates(given, 2, 2)


def test_lie_vectors_check_their_length():
    with pytest.raises(ValueError):
        LieVector(2, 4, (1, 0))


def test_lie_vector_terms_name_brackets():
    vector = LieVector(2, 3, (2, -1))
    assert vector.terms(["a", "b"]) == [("[a,[a,b]]", 2), ("[[a,b],b]", -1)]
    assert vector.content == 1
    assert vector.pivot == 0
