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
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from .errors import AlphabetMismatch, ParseError

#: Matches one syllable of the textual word syntax, e.g. ``x1^-2``.
SYLLABLE_RE = re.compile(r"([A-Za-z_][A-Za-z_0-9]*)(?:\^([+-]?\d+))?")


class Sort(Enum):
    FREE = "free"
    ABELIAN = "abelian"


@dataclass(frozen=True)
class GenId:
    """A generator of a free group or of the abelian block of a free
    product ``F_n * Z^n``.
    """

    sort: Sort
    index: int
    block: Optional[int] = None

    def __post_init__(self):
        if self.index < 0:
            raise ValueError("generator index must be non-negative")
        if (self.sort is Sort.ABELIAN) != (self.block is not None):
            raise ValueError("block ids are required on abelian generators and forbidden on free ones")

    def key(self):
        if self.sort is Sort.FREE:
            return (0, 0, self.index)
        return (1, self.block, self.index)


@dataclass(frozen=True)
class Alphabet:
    """A named, ordered list of generators.

    Parameters:
      names(tuple[str]): The generator names, in presentation order.
      gens(tuple[GenId]): The generator ids, parallel to ``names``.
    """

    names: Tuple[str, ...]
    gens: Tuple[GenId, ...]
    _by_name: Dict[str, GenId] = field(init=False, repr=False, compare=False, hash=False)
    _by_gen: Dict[GenId, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "gens", tuple(self.gens))
        if len(self.names) != len(self.gens):
            raise ValueError("names and gens must have the same length")
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate generator names in %r" % (self.names,))
        if len(set(self.gens)) != len(self.gens):
            raise ValueError("duplicate generator ids")

        for name in self.names:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", name):
                raise ValueError("invalid generator name %r" % name)

        object.__setattr__(self, "_by_name", dict(zip(self.names, self.gens)))
        object.__setattr__(self, "_by_gen", {g: i for i, g in enumerate(self.gens)})

    @classmethod
    def free(cls, names: Iterable[str]) -> "Alphabet":
        names = tuple(names)
        return cls(names, tuple(GenId(Sort.FREE, i) for i in range(len(names))))

    @classmethod
    def free_by_abelian(cls, free_names: Iterable[str], abelian_names: Iterable[str]) -> "Alphabet":
        """The alphabet of ``F_n * Z^m``; all abelian generators share block 0.
        """
        free_names, abelian_names = tuple(free_names), tuple(abelian_names)
        gens = tuple(GenId(Sort.FREE, i) for i in range(len(free_names))) + \
            tuple(GenId(Sort.ABELIAN, i, 0) for i in range(len(abelian_names)))
        return cls(free_names + abelian_names, gens)

    @property
    def is_free(self):
        return all(g.sort is Sort.FREE for g in self.gens)

    def __len__(self):
        return len(self.gens)

    def __contains__(self, name):
        return name in self._by_name

    def gen(self, name: str) -> GenId:
        try:
            return self._by_name[name]
        except KeyError:
            raise ParseError("unknown generator %r" % name, name) from None

    def name(self, gen: GenId) -> str:
        return self.names[self.position(gen)]

    def position(self, gen: GenId) -> int:
        try:
            return self._by_gen[gen]
        except KeyError:
            raise AlphabetMismatch("generator %r is not part of this alphabet" % (gen,)) from None

    def identity(self) -> "Word":
        return Word(self, ())

    def generator(self, name: str) -> "Word":
        return Word(self, ((self.gen(name), 1),))

    def generators(self) -> List["Word"]:
        return [Word(self, ((g, 1),)) for g in self.gens]

    def word(self, text: str) -> "Word":
        """Parse space separated syllables such as ``x1 y^-1 x2^3``.
        ``1`` and the empty string denote the identity.
        """
        raw = []
        for token in text.split():
            if token == "1":
                continue

            match = SYLLABLE_RE.fullmatch(token)
            if match is None:
                raise ParseError("invalid syllable %r" % token, text)

            name, exp = match.group(1), match.group(2)
            exp = 1 if exp is None else int(exp)
            if exp == 0:
                raise ParseError("zero exponent in %r" % token, text)
            raw.append((self.gen(name), exp))

        return Word(self, raw)

    def format(self, word: "Word") -> str:
        if not word.syllables:
            return "1"
        return " ".join(
            self.name(gen) if exp == 1 else "%s^%d" % (self.name(gen), exp)
            for gen, exp in word.syllables
        )

    def without(self, *names: str) -> "Alphabet":
        """The free alphabet that remains after deleting some generators.
        """
        for name in names:
            self.gen(name)
        return Alphabet.free(n for n in self.names if n not in names)

    def as_free(self) -> "Alphabet":
        return Alphabet.free(self.names)

    def renamed(self, mapping: Mapping[str, str]) -> "Alphabet":
        return Alphabet(tuple(mapping.get(n, n) for n in self.names), self.gens)


def _reduce(raw: Iterable[Tuple[GenId, int]]) -> Tuple[Tuple[GenId, int], ...]:
    stack: List[List] = []
    for gen, exp in raw:
        if exp == 0:
            continue

        if gen.sort is Sort.FREE:
            if stack and stack[-1][0] == gen:
                stack[-1][1] += exp
                if stack[-1][1] == 0:
                    stack.pop()
            else:
                stack.append([gen, exp])
            continue

        # Abelian syllables merge into the trailing run of their block.
        start = len(stack)
        while start > 0 and stack[start - 1][0].sort is Sort.ABELIAN and stack[start - 1][0].block == gen.block:
            start -= 1

        for i in range(start, len(stack)):
            if stack[i][0] == gen:
                stack[i][1] += exp
                if stack[i][1] == 0:
                    del stack[i]
                break

            if stack[i][0].index > gen.index:
                stack.insert(i, [gen, exp])
                break
        else:
            stack.append([gen, exp])

    return tuple((gen, exp) for gen, exp in stack)


@dataclass(frozen=True)
class Word:
    """A reduced word.  Words are always stored in normal form: free
    syllables never repeat a generator back to back and each run of
    abelian syllables is sorted by index.
    """

    alphabet: Alphabet
    syllables: Tuple[Tuple[GenId, int], ...]

    def __post_init__(self):
        for gen, _ in self.syllables:
            self.alphabet.position(gen)
        object.__setattr__(self, "syllables", _reduce(self.syllables))

    def _check(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        if other.alphabet != self.alphabet:
            raise AlphabetMismatch("words over %r and %r can't be combined" % (
                self.alphabet.names, other.alphabet.names,
            ))
        return None

    def __mul__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return Word(self.alphabet, self.syllables + other.syllables)

    def inverse(self) -> "Word":
        return Word(self.alphabet, tuple((gen, -exp) for gen, exp in reversed(self.syllables)))

    def __pow__(self, k: int) -> "Word":
        if k < 0:
            return self.inverse() ** -k

        result, base = self.alphabet.identity(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __len__(self):
        return sum(abs(exp) for _, exp in self.syllables)

    def __bool__(self):
        return bool(self.syllables)

    def __str__(self):
        return self.alphabet.format(self)

    @property
    def is_identity(self):
        return not self.syllables

    def letters(self) -> List[Tuple[GenId, int]]:
        """The word spelled out as a list of ``(gen, +1|-1)`` letters.
        """
        return [(gen, 1 if exp > 0 else -1) for gen, exp in self.syllables for _ in range(abs(exp))]

    def exponent_sum(self, gen: GenId) -> int:
        return sum(exp for g, exp in self.syllables if g == gen)

    def occurrences(self, gen: GenId) -> int:
        return sum(abs(exp) for g, exp in self.syllables if g == gen)

    def relabel(self, alphabet: Alphabet) -> "Word":
        """Move this word onto another alphabet, matching generators by name.
        """
        return Word(alphabet, tuple(
            (alphabet.gen(self.alphabet.name(gen)), exp) for gen, exp in self.syllables
        ))

    def erase(self, gen: GenId) -> "Word":
        return Word(self.alphabet, tuple((g, exp) for g, exp in self.syllables if g != gen))


def reduce(alphabet: Alphabet, raw: Iterable[Tuple[GenId, int]]) -> Word:
    return Word(alphabet, tuple(raw))


def multiply(a: Word, b: Word) -> Word:
    return a * b


def invert(a: Word) -> Word:
    return a.inverse()


def conjugate(x: Word, y: Word) -> Word:
    """``x^y = y^-1 x y``.
    """
    return y.inverse() * x * y


def commutator(x: Word, y: Word) -> Word:
    """``[x, y] = x^-1 y^-1 x y``.
    """
    return x.inverse() * y.inverse() * x * y


def left_normed_commutator(b: Word, a: Word, k: int) -> Word:
    """``[b, _k a]``, i.e. ``[[b, _(k-1) a], a]`` with ``[b, _1 a] = [b, a]``.
    """
    if k < 1:
        raise ValueError("k must be positive")

    result = b
    for _ in range(k):
        result = commutator(result, a)
    return result


def cyclic_reduce(w: Word) -> Word:
    """Strip inverse pairs from the two ends of a free word.
    """
    letters = w.letters()
    start, end = 0, len(letters)
    while end - start >= 2 and letters[start][0] == letters[end - 1][0] and \
            letters[start][1] == -letters[end - 1][1]:
        start += 1
        end -= 1

    return Word(w.alphabet, tuple(letters[start:end]))


def _letter_key(alphabet, letter):
    gen, exp = letter
    return (alphabet.position(gen), 0 if exp > 0 else 1)


def canonical_rotation(w: Word) -> Word:
    """The least cyclic rotation of a cyclically reduced free word or of
    its inverse, comparing letters by alphabet position and then sign.
    """
    w = cyclic_reduce(w)
    if w.is_identity:
        return w

    best = None
    for candidate in (w, w.inverse()):
        letters = candidate.letters()
        keys = [_letter_key(w.alphabet, letter) for letter in letters]
        for i in range(len(letters)):
            key = keys[i:] + keys[:i]
            if best is None or key < best[0]:
                best = (key, letters[i:] + letters[:i])

    return Word(w.alphabet, tuple(best[1]))


def word_key(w: Word) -> List[Tuple[int, int]]:
    """A total order on words over one alphabet: letter keys compared
    lexicographically.
    """
    return [_letter_key(w.alphabet, letter) for letter in w.letters()]


@dataclass(frozen=True)
class Endo:
    """An endomorphism given by the images of the domain generators.
    """

    domain: Alphabet
    codomain: Alphabet
    images: Tuple[Word, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if len(self.images) != len(self.domain):
            raise ValueError("an endomorphism needs exactly one image per generator")
        for image in self.images:
            if image.alphabet != self.codomain:
                raise AlphabetMismatch("image %s isn't a word over the codomain" % image)

    @classmethod
    def identity(cls, alphabet: Alphabet) -> "Endo":
        return cls(alphabet, alphabet, tuple(alphabet.generators()))

    @classmethod
    def from_mapping(cls, alphabet: Alphabet, mapping: Mapping[str, Word]) -> "Endo":
        """Build an endomorphism of ``alphabet`` that fixes every generator
        not named in ``mapping``.
        """
        for name in mapping:
            alphabet.gen(name)
        return cls(alphabet, alphabet, tuple(
            mapping.get(name, alphabet.generator(name)) for name in alphabet.names
        ))

    def image(self, name: str) -> Word:
        return self.images[self.domain.position(self.domain.gen(name))]

    def apply(self, w: Word) -> Word:
        if w.alphabet != self.domain:
            raise AlphabetMismatch("word %s isn't over the endomorphism's domain" % w)

        raw: List[Tuple[GenId, int]] = []
        for gen, exp in w.syllables:
            image = self.images[self.domain.position(gen)]
            if exp < 0:
                image = image.inverse()
            for _ in range(abs(exp)):
                raw.extend(image.syllables)
        return Word(self.codomain, tuple(raw))

    __call__ = apply

    def is_identity(self):
        return self.domain == self.codomain and self.images == tuple(self.domain.generators())

    def asdict(self):
        return {name: str(image) for name, image in zip(self.domain.names, self.images)}


def apply_endo(e: Endo, w: Word) -> Word:
    return e.apply(w)


def compose_endo(e1: Endo, e2: Endo) -> Endo:
    """The composite that applies ``e2`` first, then ``e1``.
    """
    if e2.codomain != e1.domain:
        raise AlphabetMismatch("can't compose endomorphisms over different alphabets")
    return Endo(e2.domain, e1.codomain, tuple(e1.apply(image) for image in e2.images))


def is_mutually_inverse(e1: Endo, e2: Endo) -> bool:
    return compose_endo(e1, e2).is_identity() and compose_endo(e2, e1).is_identity()
