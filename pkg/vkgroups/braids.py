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

import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import List, Tuple

from .errors import ParseError
from .words import Alphabet, Endo, compose_endo, conjugate

#: Matches one braid letter, e.g. ``s1^-2`` or ``r3``.
LETTER_RE = re.compile(r"([sr])(\d+)(?:\^([+-]?\d+))?")


class LetterKind(Enum):
    SIGMA = "s"
    RHO = "r"


class Rep(Enum):
    """The two representations of the virtual braid group.
    """

    A = "A"
    M = "M"


@dataclass(frozen=True)
class BraidLetter:
    kind: LetterKind
    index: int
    exp: int = 1

    def __post_init__(self):
        if self.index < 1:
            raise ValueError("braid letter indices start at 1")
        if self.exp == 0:
            raise ValueError("braid letters can't have a zero exponent")
        if self.kind is LetterKind.RHO and self.exp != 1:
            raise ValueError("rho letters always carry exponent 1")

    def inverse(self):
        if self.kind is LetterKind.RHO:
            return self
        return BraidLetter(self.kind, self.index, -self.exp)

    def __str__(self):
        if self.exp == 1:
            return "%s%d" % (self.kind.value, self.index)
        return "%s%d^%d" % (self.kind.value, self.index, self.exp)


@dataclass(frozen=True)
class BraidWord:
    """A virtual braid on ``strands`` strands.  Letters act left to right.
    """

    strands: int
    letters: Tuple[BraidLetter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        for letter in self.letters:
            if letter.index >= self.strands:
                raise ValueError("letter %s is out of range for %d strands" % (letter, self.strands))

    def __mul__(self, other):
        if not isinstance(other, BraidWord):
            return NotImplemented
        if other.strands != self.strands:
            raise ValueError("can't concatenate braids on different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def __str__(self):
        return " ".join(str(letter) for letter in self.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(letter.inverse() for letter in reversed(self.letters)))

    def permutation(self) -> Tuple[int, ...]:
        """Where each strand ends up, as a tuple of 0-based positions.
        """
        positions = list(range(self.strands))
        for letter in self.letters:
            if letter.kind is LetterKind.SIGMA and letter.exp % 2 == 0:
                continue
            i = letter.index - 1
            positions = [i + 1 if p == i else i if p == i + 1 else p for p in positions]
        return tuple(positions)

    def components(self) -> int:
        """The number of components of the braid's closure.
        """
        perm, seen, count = self.permutation(), set(), 0
        for start in range(self.strands):
            if start in seen:
                continue
            count += 1
            p = start
            while p not in seen:
                seen.add(p)
                p = perm[p]
        return count


def sigma(strands, index, exp=1):
    return BraidWord(strands, (BraidLetter(LetterKind.SIGMA, index, exp),))


def rho(strands, index):
    return BraidWord(strands, (BraidLetter(LetterKind.RHO, index),))


def parse_braid(text: str, strands: int) -> BraidWord:
    """Parse whitespace-separated letters ``s<i>[^k]`` and ``r<i>[^k]``.
    ``r<i>^k`` contributes ``k mod 2`` copies of ``r<i>``.
    """
    if strands < 1:
        raise ValueError("strands must be at least 1")

    letters: List[BraidLetter] = []
    for token in text.split():
        match = LETTER_RE.fullmatch(token)
        if match is None:
            raise ParseError("unknown braid token %r" % token, text)

        kind = LetterKind(match.group(1))
        index = int(match.group(2))
        exp = 1 if match.group(3) is None else int(match.group(3))
        if exp == 0:
            raise ParseError("zero exponent in %r" % token, text)
        if not 1 <= index < strands:
            raise ParseError("index %d in %r is out of range for %d strands" % (index, token, strands), text)

        if kind is LetterKind.RHO:
            letters.extend([BraidLetter(kind, index)] * (exp % 2))
        else:
            letters.append(BraidLetter(kind, index, exp))

    return BraidWord(strands, tuple(letters))


@lru_cache(maxsize=None)
def alphabet_a(strands: int) -> Alphabet:
    """``F_(n+1) = <x1..xn, y>``.
    """
    return Alphabet.free(["x%d" % i for i in range(1, strands + 1)] + ["y"])


@lru_cache(maxsize=None)
def alphabet_m(strands: int) -> Alphabet:
    """``F_n * Z^n = <y1..yn> * <v1..vn>``.
    """
    return Alphabet.free_by_abelian(
        ["y%d" % i for i in range(1, strands + 1)],
        ["v%d" % i for i in range(1, strands + 1)],
    )


@lru_cache(maxsize=None)
def _letter_endo_a(strands: int, kind: LetterKind, index: int, inverse: bool) -> Endo:
    alphabet = alphabet_a(strands)
    xi, xj = "x%d" % index, "x%d" % (index + 1)
    a, b = alphabet.generator(xi), alphabet.generator(xj)
    y = alphabet.generator("y")
    if kind is LetterKind.RHO:
        mapping = {xi: conjugate(b, y.inverse()), xj: conjugate(a, y)}
    elif not inverse:
        mapping = {xi: a * b * a.inverse(), xj: a}
    else:
        mapping = {xi: b, xj: b.inverse() * a * b}
    return Endo.from_mapping(alphabet, mapping)


@lru_cache(maxsize=None)
def _letter_endo_m(strands: int, kind: LetterKind, index: int, inverse: bool) -> Endo:
    alphabet = alphabet_m(strands)
    yi, yj = "y%d" % index, "y%d" % (index + 1)
    vi, vj = "v%d" % index, "v%d" % (index + 1)
    a, b = alphabet.generator(yi), alphabet.generator(yj)
    u, w = alphabet.generator(vi), alphabet.generator(vj)
    if kind is LetterKind.RHO:
        mapping = {yi: conjugate(b, u.inverse()), yj: conjugate(a, w)}
    elif not inverse:
        mapping = {yi: a * b * a.inverse(), yj: a}
    else:
        mapping = {yi: b, yj: b.inverse() * a * b}

    mapping.update({vi: w, vj: u})
    return Endo.from_mapping(alphabet, mapping)


def _represent(b: BraidWord, alphabet: Alphabet, letter_endo) -> Endo:
    result = Endo.identity(alphabet)
    for letter in b.letters:
        endo = letter_endo(b.strands, letter.kind, letter.index, letter.exp < 0)
        for _ in range(abs(letter.exp)):
            result = compose_endo(endo, result)
    return result


def phi_a(b: BraidWord) -> Endo:
    """The representation into ``Aut(F_(n+1))``.  ``y`` is always fixed.
    """
    return _represent(b, alphabet_a(b.strands), _letter_endo_a)


def phi_m(b: BraidWord) -> Endo:
    """The representation into ``Aut(F_n * Z^n)``; the v's follow the
    underlying permutation of the braid.
    """
    return _represent(b, alphabet_m(b.strands), _letter_endo_m)


def represent(rep: Rep, b: BraidWord) -> Endo:
    return phi_a(b) if Rep(rep) is Rep.A else phi_m(b)


@dataclass(frozen=True)
class RelationCheck:
    relation: str
    lhs: BraidWord
    rhs: BraidWord
    passed: bool

    def asdict(self):
        return {
            "relation": self.relation,
            "lhsWord": str(self.lhs),
            "rhsWord": str(self.rhs),
            "pass": self.passed,
        }


@dataclass(frozen=True)
class RelationReport:
    rep: Rep
    strands: int
    checks: Tuple[RelationCheck, ...]

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    def failures(self):
        return [check for check in self.checks if not check.passed]

    def asdict(self):
        return [check.asdict() for check in self.checks]


def defining_relations(strands: int):
    """Yield ``(family, lhs, rhs)`` for every defining relation of the
    virtual braid group on ``strands`` strands.
    """
    n = strands
    pairs = [(i, j) for i in range(1, n) for j in range(1, n) if abs(i - j) >= 2]
    empty = BraidWord(n)

    for i in range(1, n):
        yield "sigma-inverse", sigma(n, i) * sigma(n, i, -1), empty
        yield "rho-involution", rho(n, i) * rho(n, i), empty

    for i in range(1, n - 1):
        yield "braid", sigma(n, i) * sigma(n, i + 1) * sigma(n, i), sigma(n, i + 1) * sigma(n, i) * sigma(n, i + 1)
        yield "rho-braid", rho(n, i) * rho(n, i + 1) * rho(n, i), rho(n, i + 1) * rho(n, i) * rho(n, i + 1)
        yield "mixed", rho(n, i) * rho(n, i + 1) * sigma(n, i), sigma(n, i + 1) * rho(n, i) * rho(n, i + 1)

    for i, j in pairs:
        if i < j:
            yield "far-sigma", sigma(n, i) * sigma(n, j), sigma(n, j) * sigma(n, i)
            yield "far-rho", rho(n, i) * rho(n, j), rho(n, j) * rho(n, i)
        yield "far-mixed", sigma(n, i) * rho(n, j), rho(n, j) * sigma(n, i)


def verify_representation(rep: Rep, strands: int) -> RelationReport:
    """Check that a representation respects every defining relation,
    comparing the two endomorphisms generator by generator.
    """
    if not 2 <= strands <= 6:
        raise ValueError("strands must be between 2 and 6")

    rep = Rep(rep)
    checks = []
    for family, lhs, rhs in defining_relations(strands):
        passed = represent(rep, lhs) == represent(rep, rhs)
        checks.append(RelationCheck(family, lhs, rhs, passed))
    return RelationReport(rep, strands, tuple(checks))
