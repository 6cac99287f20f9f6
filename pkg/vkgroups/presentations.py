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

from dataclasses import dataclass, field, replace
from itertools import combinations
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .braids import BraidWord, Rep, alphabet_a, alphabet_m, represent
from .errors import AlphabetMismatch, DecodeError, DiagramError, PresentationError
from .lattice import AbelianInvariants, IntMatrix
from .logging import get_logger
from .words import (
    Alphabet, Endo, Word, canonical_rotation, commutator, conjugate, word_key
)

#: The default number of eliminations tietze_simplify may perform.
DEFAULT_TIETZE_BUDGET = 1000

#: The name of the extra generator of virtual knot groups.
STABLE_NAME = "y"


@dataclass(frozen=True)
class Presentation:
    """A finite presentation over a free alphabet.  Relators are kept
    cyclically reduced, in canonical rotation, nonempty and free of
    duplicates.

    Parameters:
      generators(Alphabet): A free alphabet.
      relators(tuple[Word]): Words over ``generators``.
      provenance(str): Where the presentation came from.
      incomplete(bool): Set when simplification ran out of budget.
    """

    generators: Alphabet
    relators: Tuple[Word, ...] = ()
    provenance: str = ""
    incomplete: bool = False

    def __post_init__(self):
        if not self.generators.is_free:
            raise PresentationError("presentations are taken over free alphabets")

        normalized: List[Word] = []
        seen = set()
        for relator in self.relators:
            if relator.alphabet != self.generators:
                raise AlphabetMismatch("relator %s isn't a word over %r" % (relator, self.generators.names))

            relator = canonical_rotation(relator)
            if relator.is_identity or relator in seen:
                continue

            seen.add(relator)
            normalized.append(relator)
        object.__setattr__(self, "relators", tuple(normalized))

    @classmethod
    def free(cls, names: Iterable[str], provenance: str = "") -> "Presentation":
        return cls(Alphabet.free(names), (), provenance)

    @classmethod
    def from_text(cls, generators: Sequence[str], relators: Sequence[str], provenance: str = "") -> "Presentation":
        alphabet = Alphabet.free(generators)
        return cls(alphabet, tuple(alphabet.word(text) for text in relators), provenance)

    @classmethod
    def from_dict(cls, data: Mapping) -> "Presentation":
        try:
            return cls.from_text(
                data["generators"], data.get("relators", []),
                data.get("provenance", ""),
            )
        except (KeyError, TypeError, AttributeError) as e:
            raise DecodeError("invalid presentation document", data, e) from None

    @property
    def rank(self):
        return len(self.generators)

    def word(self, text: str) -> Word:
        return self.generators.word(text)

    def rename(self, mapping: Mapping[str, str]) -> "Presentation":
        alphabet = self.generators.renamed(mapping)
        return replace(self, generators=alphabet, relators=tuple(Word(alphabet, r.syllables) for r in self.relators))

    def relation_matrix(self) -> IntMatrix:
        """Exponent sums, one row per relator.
        """
        return IntMatrix.from_rows(
            [[r.exponent_sum(g) for g in self.generators.gens] for r in self.relators],
            len(self.generators),
        )

    def asdict(self):
        return {
            "generators": list(self.generators.names),
            "relators": [str(r) for r in self.relators],
        }

    def __str__(self):
        return "< %s | %s >" % (
            ", ".join(self.generators.names),
            ", ".join(str(r) for r in self.relators),
        )


def group_from_braid(rep: Rep, b: BraidWord) -> Presentation:
    """The group of the closure: one relator ``h^-1 phi(b)(h)`` per
    generator ``h``; for the M representation the abelian block is
    presented by commutators ``[vi, vj]``.
    """
    rep = Rep(rep)
    endo = represent(rep, b)
    alphabet = alphabet_a(b.strands) if rep is Rep.A else alphabet_m(b.strands)
    target = alphabet.as_free()

    relators = []
    for h, image in zip(alphabet.generators(), endo.images):
        relators.append((h.inverse() * image).relabel(target))

    if rep is Rep.M:
        vs = ["v%d" % i for i in range(1, b.strands + 1)]
        for vi, vj in combinations(vs, 2):
            relators.append(commutator(target.generator(vi), target.generator(vj)))

    return Presentation(target, tuple(relators), "braid %s (%d strands) rep %s" % (b, b.strands, rep.value))


@dataclass(frozen=True)
class RealCrossing:
    over: str
    under_in: str
    under_out: str
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise DiagramError("crossing signs must be +1 or -1, not %r" % (self.sign,))

    def asdict(self):
        return {"over": self.over, "underIn": self.under_in, "underOut": self.under_out, "sign": self.sign}


@dataclass(frozen=True)
class VirtualCrossing:
    """A virtual crossing.  Strand a leaves conjugated by ``y``, strand b
    by ``y^-1``.
    """

    a_in: str
    a_out: str
    b_in: str
    b_out: str

    def asdict(self):
        return {"aIn": self.a_in, "aOut": self.a_out, "bIn": self.b_in, "bOut": self.b_out}


@dataclass(frozen=True)
class Diagram:
    """A labeled virtual link diagram, cut into arcs at every crossing.
    """

    arcs: Tuple[str, ...]
    real: Tuple[RealCrossing, ...] = ()
    virtual: Tuple[VirtualCrossing, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "arcs", tuple(self.arcs))
        object.__setattr__(self, "real", tuple(self.real))
        object.__setattr__(self, "virtual", tuple(self.virtual))

    @classmethod
    def from_dict(cls, data: Mapping) -> "Diagram":
        try:
            return cls(
                tuple(data["arcs"]),
                tuple(RealCrossing(c["over"], c["underIn"], c["underOut"], c["sign"]) for c in data.get("real", [])),
                tuple(VirtualCrossing(c["aIn"], c["aOut"], c["bIn"], c["bOut"]) for c in data.get("virtual", [])),
            )
        except (KeyError, TypeError) as e:
            raise DecodeError("invalid diagram document", data, e) from None

    def asdict(self):
        return {
            "arcs": list(self.arcs),
            "real": [c.asdict() for c in self.real],
            "virtual": [c.asdict() for c in self.virtual],
        }

    def validate(self):
        """Raise DiagramError unless every arc starts at exactly one
        crossing and ends at exactly one crossing.
        """
        if len(set(self.arcs)) != len(self.arcs):
            raise DiagramError("duplicate arc names")
        if STABLE_NAME in self.arcs:
            raise DiagramError("%r is reserved for the extra generator" % STABLE_NAME)

        starts: Dict[str, int] = {arc: 0 for arc in self.arcs}
        ends: Dict[str, int] = {arc: 0 for arc in self.arcs}

        def bump(counter, arc):
            if arc not in counter:
                raise DiagramError("unknown arc %r" % (arc,))
            counter[arc] += 1

        for crossing in self.real:
            if crossing.over not in starts:
                raise DiagramError("unknown arc %r" % (crossing.over,))
            bump(ends, crossing.under_in)
            bump(starts, crossing.under_out)

        for crossing in self.virtual:
            bump(ends, crossing.a_in)
            bump(ends, crossing.b_in)
            bump(starts, crossing.a_out)
            bump(starts, crossing.b_out)

        for arc in self.arcs:
            if starts[arc] != 1 or ends[arc] != 1:
                raise DiagramError("arc %r starts at %d and ends at %d crossings" % (arc, starts[arc], ends[arc]))


def group_from_diagram(d: Diagram) -> Presentation:
    """One generator per arc plus ``y``; a conjugation relation per
    crossing.
    """
    d.validate()
    alphabet = Alphabet.free(d.arcs + (STABLE_NAME,))
    gen, y = alphabet.generator, alphabet.generator(STABLE_NAME)

    relators = []
    for c in d.real:
        over = gen(c.over) ** c.sign
        relators.append(gen(c.under_out).inverse() * conjugate(gen(c.under_in), over))

    for c in d.virtual:
        relators.append(gen(c.a_out).inverse() * conjugate(gen(c.a_in), y))
        relators.append(gen(c.b_out).inverse() * conjugate(gen(c.b_in), y.inverse()))

    return Presentation(alphabet, tuple(relators), "diagram with %d arcs" % len(d.arcs))


def kauffman_quotient(p: Presentation) -> Presentation:
    """Kill ``y``: delete the generator and erase it from every relator.
    """
    if STABLE_NAME not in p.generators:
        raise PresentationError("the presentation has no generator named %r" % STABLE_NAME)

    y = p.generators.gen(STABLE_NAME)
    alphabet = p.generators.without(STABLE_NAME)
    relators = tuple(r.erase(y).relabel(alphabet) for r in p.relators)
    return Presentation(alphabet, relators, "kauffman quotient of %s" % (p.provenance or "presentation"))


def add_relators(p: Presentation, extra: Iterable[Word]) -> Presentation:
    extra = tuple(extra)
    for w in extra:
        if w.alphabet != p.generators:
            raise AlphabetMismatch("extra relator %s isn't a word over %r" % (w, p.generators.names))
    return replace(p, relators=p.relators + extra)


def abelianization(p: Presentation) -> AbelianInvariants:
    return AbelianInvariants.from_relation_matrix(p.relation_matrix())


@dataclass
class Elimination:
    generator: str
    relator: Word
    solution: Word


@dataclass
class TietzeSimplifier:
    """Eliminates generators that occur exactly once in some relator.

    Relators are scanned shortest first, ties broken by letter order;
    within a relator generators are tried in presentation order.
    """

    budget: int = DEFAULT_TIETZE_BUDGET
    eliminations: List[Elimination] = field(default_factory=list)

    def __post_init__(self):
        self.logger = get_logger(__name__, type(self))

    def find_elimination(self, p: Presentation) -> Optional[Elimination]:
        for relator in sorted(p.relators, key=lambda r: (len(r), word_key(r))):
            for gen in p.generators.gens:
                if relator.occurrences(gen) == 1:
                    return self.solve(p.generators, relator, gen)
        return None

    def solve(self, alphabet: Alphabet, relator: Word, gen) -> Elimination:
        # Rotate so the generator comes first, then solve for it.
        letters = relator.letters()
        i = next(k for k, (g, _) in enumerate(letters) if g == gen)
        rest = Word(alphabet, tuple(letters[i + 1:] + letters[:i]))
        solution = rest.inverse() if letters[i][1] == 1 else rest
        return Elimination(alphabet.name(gen), relator, solution)

    def eliminate(self, p: Presentation, step: Elimination) -> Presentation:
        substitution = Endo.from_mapping(p.generators, {step.generator: step.solution})
        alphabet = p.generators.without(step.generator)
        relators = []
        for relator in p.relators:
            if relator == step.relator:
                continue
            relators.append(substitution(relator).relabel(alphabet))
        return Presentation(alphabet, tuple(relators), p.provenance, p.incomplete)

    def simplify(self, p: Presentation) -> Presentation:
        self.eliminations = []
        while True:
            step = self.find_elimination(p)
            if step is None:
                return p

            if len(self.eliminations) >= self.budget:
                self.logger.debug("Tietze budget of %d exhausted.", self.budget)
                return replace(p, incomplete=True)

            self.logger.debug("Eliminating %s = %s using %s.", step.generator, step.solution, step.relator)
            p = self.eliminate(p, step)
            self.eliminations.append(step)


def tietze_simplify(p: Presentation, budget: int = DEFAULT_TIETZE_BUDGET) -> Presentation:
    return TietzeSimplifier(budget).simplify(p)


def introduce_generator(p: Presentation, name: str, word: Word) -> Presentation:
    """Add a generator ``name`` together with the relator ``name^-1 word``.
    """
    if word.alphabet != p.generators:
        raise AlphabetMismatch("word %s isn't over %r" % (word, p.generators.names))
    if name in p.generators:
        raise PresentationError("generator %r already exists" % name)

    alphabet = Alphabet.free(p.generators.names + (name,))
    relators = tuple(r.relabel(alphabet) for r in p.relators)
    definition = alphabet.generator(name).inverse() * word.relabel(alphabet)
    return Presentation(alphabet, relators + (definition,), p.provenance, p.incomplete)


def eliminate_generator(p: Presentation, name: str) -> Presentation:
    """Eliminate a chosen generator through the shortest relator in which
    it occurs exactly once.
    """
    gen = p.generators.gen(name)
    simplifier = TietzeSimplifier()
    for relator in sorted(p.relators, key=lambda r: (len(r), word_key(r))):
        if relator.occurrences(gen) == 1:
            step = simplifier.solve(p.generators, relator, gen)
            return simplifier.eliminate(p, step)
    raise PresentationError("generator %r doesn't occur exactly once in any relator" % name)
