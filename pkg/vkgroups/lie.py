# This file is a part of vkgroups.
#
# Copyright (C) 2026 The vkgroups contributors
#
# vkgroups is free software; you can redistribute it and/or modify it
# under the terms of the GNU Lesser General Public License as published by
# the Free Software Foundation, either version 3 of the License, or (at
# your option) any later version.
#
# vkgroups is distributed in the hope that it will be useful, but WITHOUT
# ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or
# FITNESS FOR A PARTICULAR PURPOSE. See the GNU Lesser General Public
# License for more details.
#
# You should have received a copy of the GNU Lesser General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

"""Lyndon words and the Lyndon basis of the free Lie ring.

Monomials are tuples of variable indices.  A Lyndon word ``w`` is
bracketed along its standard factorization ``w = uv``, ``v`` being the
longest proper Lyndon suffix; its expansion ``P(w)`` in the free
associative ring is ``w`` plus monomials that are lexicographically
larger, which is what makes coordinates solvable by elimination.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Dict, List, Sequence, Tuple, Union

from sympy import divisors, factorint

from .errors import NotALieElement
from .lattice import IntMatrix

Monomial = Tuple[int, ...]
Polynomial = Dict[Monomial, int]
Bracket = Union[int, Tuple["Bracket", "Bracket"]]


def is_lyndon(word: Sequence[int]) -> bool:
    word = tuple(word)
    return bool(word) and all(word < word[i:] + word[:i] for i in range(1, len(word)))


@lru_cache(maxsize=None)
def lyndon_words(n: int, w: int) -> Tuple[Monomial, ...]:
    """All Lyndon words of length ``w`` over ``0..n-1``, in lex order.
    """
    if n < 1 or w < 1:
        raise ValueError("alphabet size and weight must be positive")

    words = []
    word = [-1]
    while word:
        word[-1] += 1
        if len(word) == w:
            words.append(tuple(word))
        m = len(word)
        while len(word) < w:
            word.append(word[len(word) - m])
        while word and word[-1] == n - 1:
            word.pop()
    return tuple(words)


def witt_rank(n: int, w: int) -> int:
    """The rank of the weight ``w`` part of the free Lie ring on ``n``
    generators: ``(1/w) * sum(mu(d) * n^(w/d) for d | w)``.
    """
    if n < 1 or w < 1:
        raise ValueError("alphabet size and weight must be positive")
    return sum(_mobius(d) * n ** (w // d) for d in divisors(w)) // w


def _mobius(d):
    exponents = factorint(d).values()
    if any(e > 1 for e in exponents):
        return 0
    return -1 if len(exponents) % 2 else 1


def standard_factorization(word: Monomial) -> Tuple[Monomial, Monomial]:
    if len(word) < 2:
        raise ValueError("letters have no standard factorization")
    for i in range(1, len(word)):
        if is_lyndon(word[i:]):
            return word[:i], word[i:]
    raise ValueError("%r isn't a Lyndon word" % (word,))


@lru_cache(maxsize=None)
def bracketing(word: Monomial) -> Bracket:
    if len(word) == 1:
        return word[0]
    u, v = standard_factorization(word)
    return (bracketing(u), bracketing(v))


def format_bracket(bracket: Bracket, names: Sequence[str]) -> str:
    if isinstance(bracket, int):
        return names[bracket]
    return "[%s,%s]" % (format_bracket(bracket[0], names), format_bracket(bracket[1], names))


def _mul(a: Polynomial, b: Polynomial) -> Polynomial:
    out: Polynomial = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = ma + mb
            c = out.get(m, 0) + ca * cb
            if c:
                out[m] = c
            else:
                out.pop(m, None)
    return out


def _sub(a: Polynomial, b: Polynomial, k: int = 1) -> Polynomial:
    out = dict(a)
    for m, c in b.items():
        v = out.get(m, 0) - k * c
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def lie_bracket(a: Polynomial, b: Polynomial) -> Polynomial:
    return _sub(_mul(a, b), _mul(b, a))


@lru_cache(maxsize=None)
def _expansion(word: Monomial) -> Tuple[Tuple[Monomial, int], ...]:
    if len(word) == 1:
        return ((word, 1),)
    u, v = standard_factorization(word)
    return tuple(sorted(lie_bracket(expand(u), expand(v)).items()))


def expand(word: Monomial) -> Polynomial:
    """The associative expansion of a bracketed Lyndon word.
    """
    return dict(_expansion(tuple(word)))


def left_normed(letters: Sequence[int]) -> Polynomial:
    """The expansion of ``[a1, a2, ..., ak]`` bracketed to the left.
    """
    result: Polynomial = {(letters[0],): 1}
    for letter in letters[1:]:
        result = lie_bracket(result, {(letter,): 1})
    return result


@dataclass(frozen=True)
class LieVector:
    """Coordinates of a homogeneous Lie element in the Lyndon basis.
    """

    n: int
    weight: int
    coords: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))
        if len(self.coords) != witt_rank(self.n, self.weight):
            raise ValueError("a weight %d vector over %d letters has %d coordinates" % (
                self.weight, self.n, witt_rank(self.n, self.weight),
            ))

    @property
    def is_zero(self):
        return not any(self.coords)

    @property
    def content(self):
        g = 0
        for c in self.coords:
            g = gcd(g, c)
        return g

    @property
    def pivot(self):
        return next((i for i, c in enumerate(self.coords) if c), None)

    def basis(self) -> Tuple[Monomial, ...]:
        return lyndon_words(self.n, self.weight)

    def terms(self, names: Sequence[str]) -> List[Tuple[str, int]]:
        return [
            (format_bracket(bracketing(word), names), c)
            for word, c in zip(self.basis(), self.coords) if c
        ]

    def asdict(self):
        return {"weight": self.weight, "coords": list(self.coords)}


def lie_coordinates(component: Polynomial, n: int, w: int) -> LieVector:
    """Write a homogeneous degree ``w`` polynomial in the Lyndon basis.

    Raises:
      NotALieElement: If the polynomial isn't a Lie element.
    """
    index = {word: i for i, word in enumerate(lyndon_words(n, w))}
    coords = [0] * len(index)
    remainder = dict(component)
    while remainder:
        smallest = min(remainder)
        if len(smallest) != w:
            raise NotALieElement("monomial %r doesn't have degree %d" % (smallest, w))
        if smallest not in index:
            raise NotALieElement("leading monomial %r isn't a Lyndon word" % (smallest,))

        c = remainder[smallest]
        coords[index[smallest]] += c
        remainder = _sub(remainder, expand(smallest), c)
    return LieVector(n, w, tuple(coords))


def lie_polynomial(vector: LieVector) -> Polynomial:
    out: Polynomial = {}
    for word, c in zip(vector.basis(), vector.coords):
        if c:
            out = _sub(out, expand(word), -c)
    return out


#: The weight 4 basic commutators of two generators, bracketed to the left.
HALL_WEIGHT_4 = ((0, 1, 1, 0), (0, 1, 0, 0), (0, 1, 1, 1))


def hall_coordinates(commutators: Sequence[Sequence[int]] = HALL_WEIGHT_4, n: int = 2) -> IntMatrix:
    """Lyndon coordinates of left-normed commutators, one row each.
    Over a full basis the result is unimodular.
    """
    rows = []
    for letters in commutators:
        rows.append(lie_coordinates(left_normed(letters), n, len(letters)).coords)
    return IntMatrix.from_rows(rows, witt_rank(n, len(commutators[0])))
