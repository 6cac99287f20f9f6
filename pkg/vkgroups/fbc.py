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
from typing import Iterable, List, Optional, Tuple

from .errors import ExponentSumError, ParseError, PresentationError, UnsupportedRelator
from .lattice import CharPoly, IntMatrix, char_poly, find_congruence_pair, unipotency_index
from .presentations import Presentation
from .words import Alphabet, Word

#: The default bound on the congruence search.
DEFAULT_M_MAX = 32

#: Matches one shifted syllable, e.g. ``g-1^2``.
SHIFTED_RE = re.compile(r"([A-Za-z_]+)(-?\d+)(?:\^([+-]?\d+))?")


def index_name(fiber: str, k: int) -> str:
    """A generator name for ``fiber_k``; negative indices use an ``m``.
    """
    return "%s%d" % (fiber, k) if k >= 0 else "%sm%d" % (fiber, -k)


def _free_reduce(raw: Iterable[Tuple[int, int]]) -> Tuple[Tuple[int, int], ...]:
    stack: List[List[int]] = []
    for index, exp in raw:
        if exp == 0:
            continue
        if stack and stack[-1][0] == index:
            stack[-1][1] += exp
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([index, exp])
    return tuple((index, exp) for index, exp in stack)


@dataclass(frozen=True)
class ShiftedRelator:
    """A word in the conjugates ``g_k = s^-k t s^k`` of the fiber generator
    ``t`` by powers of the stable generator ``s``.
    """

    syllables: Tuple[Tuple[int, int], ...]
    stable: str = "s"
    fiber: str = "g"

    def __post_init__(self):
        object.__setattr__(self, "syllables", _free_reduce(self.syllables))

    @classmethod
    def parse(cls, text: str, stable: str = "s", fiber: str = "g") -> "ShiftedRelator":
        raw = []
        for token in text.split():
            match = SHIFTED_RE.fullmatch(token)
            if match is None or match.group(1) != fiber:
                raise ParseError("invalid shifted syllable %r" % token, text)
            exp = 1 if match.group(3) is None else int(match.group(3))
            raw.append((int(match.group(2)), exp))
        return cls(tuple(raw), stable, fiber)

    def __str__(self):
        if not self.syllables:
            return "1"
        return " ".join(
            "%s%d" % (self.fiber, k) if e == 1 else "%s%d^%d" % (self.fiber, k, e)
            for k, e in self.syllables
        )

    def __len__(self):
        return sum(abs(e) for _, e in self.syllables)

    @property
    def span(self) -> Tuple[int, int]:
        if not self.syllables:
            raise UnsupportedRelator("the trivial relator has no index span")
        indices = [k for k, _ in self.syllables]
        return min(indices), max(indices)

    @property
    def width(self) -> int:
        lo, hi = self.span
        return hi - lo

    def letters(self) -> List[Tuple[int, int]]:
        return [(k, 1 if e > 0 else -1) for k, e in self.syllables for _ in range(abs(e))]

    def occurrences(self, k: int) -> int:
        return sum(abs(e) for i, e in self.syllables if i == k)

    def exponent_sum(self, k: int) -> int:
        return sum(e for i, e in self.syllables if i == k)

    def translate(self, shift: int) -> "ShiftedRelator":
        return ShiftedRelator(tuple((k + shift, e) for k, e in self.syllables), self.stable, self.fiber)

    def inverse(self) -> "ShiftedRelator":
        return ShiftedRelator(tuple((k, -e) for k, e in reversed(self.syllables)), self.stable, self.fiber)

    def cyclic_reduce(self) -> "ShiftedRelator":
        letters = self.letters()
        while len(letters) >= 2 and letters[0][0] == letters[-1][0] and letters[0][1] == -letters[-1][1]:
            letters = letters[1:-1]
        return ShiftedRelator(tuple(letters), self.stable, self.fiber)

    def normalized(self) -> "ShiftedRelator":
        """Translate so the least index is 0, then take the least cyclic
        rotation of the relator or its inverse.
        """
        r = self.cyclic_reduce()
        if not r.syllables:
            return r

        r = r.translate(-r.span[0])
        best = None
        for candidate in (r, r.inverse()):
            letters = candidate.letters()
            for i in range(len(letters)):
                rotation = letters[i:] + letters[:i]
                if best is None or rotation < best:
                    best = rotation
        return ShiftedRelator(tuple(best), self.stable, self.fiber)

    def rotated_to(self, k: int) -> Tuple[int, "ShiftedRelator"]:
        """Rotate the cyclic word so that its single ``g_k`` letter comes
        first.

        Returns:
          tuple: The sign of that letter and the remaining word.
        """
        letters = self.cyclic_reduce().letters()
        i = next(j for j, (index, _) in enumerate(letters) if index == k)
        rest = ShiftedRelator(tuple(letters[i + 1:] + letters[:i]), self.stable, self.fiber)
        return letters[i][1], rest

    def solve_for(self, k: int) -> "ShiftedRelator":
        """Isolate ``g_k``, which must occur exactly once.
        """
        if self.occurrences(k) != 1:
            raise UnsupportedRelator("%s%d doesn't occur exactly once in %s" % (self.fiber, k, self))
        sign, rest = self.rotated_to(k)
        return rest.inverse() if sign == 1 else rest

    def exponent_vector(self, lo: int, hi: int) -> Tuple[int, ...]:
        """Exponent sums of ``g_lo .. g_(hi-1)``.
        """
        for k, _ in self.syllables:
            if not lo <= k < hi:
                raise UnsupportedRelator("%s involves %s%d outside %d..%d" % (self, self.fiber, k, lo, hi - 1))
        return tuple(self.exponent_sum(k) for k in range(lo, hi))

    def to_word(self, alphabet: Alphabet) -> Word:
        return Word(alphabet, tuple(
            (alphabet.gen(index_name(self.fiber, k)), e) for k, e in self.syllables
        ))


def rewrite_along_z(p: Presentation, stable: str) -> List[ShiftedRelator]:
    """Rewrite the relators of a two generator presentation in the
    conjugates ``g_k = s^-k t s^k`` of the other generator ``t``.

    Raises:
      PresentationError: Unless ``p`` has two generators, one of them ``stable``.
      ExponentSumError: If a relator has nonzero exponent sum in ``stable``.
    """
    if p.rank != 2 or stable not in p.generators:
        raise PresentationError("expected two generators including %r, got %r" % (stable, p.generators.names))

    s = p.generators.gen(stable)
    fiber = next(name for name in p.generators.names if name != stable)
    shifted = []
    for relator in p.relators:
        if relator.exponent_sum(s):
            raise ExponentSumError("relator %s has exponent sum %d in %s" % (
                relator, relator.exponent_sum(s), stable,
            ), relator)

        raw, height = [], 0
        for gen, exp in relator.syllables:
            if gen == s:
                height += exp
            else:
                raw.append((-height, exp))
        shifted.append(ShiftedRelator(tuple(raw), stable, fiber))
    return shifted


@dataclass(frozen=True)
class FbcDecomposition:
    """``G = F_rank x| Z``: the kernel is free on ``g_0 .. g_(rank-1)`` and
    conjugation by the stable generator shifts indices by one.
    """

    rank: int
    stable: str
    fiber: str
    relator: ShiftedRelator
    top_rule: ShiftedRelator
    bottom_rule: ShiftedRelator
    action_matrix: IntMatrix
    inverse_action: IntMatrix

    @property
    def basis(self) -> List[str]:
        return [index_name(self.fiber, k) for k in range(self.rank)]

    def asdict(self):
        return {
            "rank": self.rank,
            "stable": self.stable,
            "basis": self.basis,
            "relator": str(self.relator),
            "topRule": "%s%d = %s" % (self.fiber, self.rank, self.top_rule),
            "bottomRule": "%s0 = %s" % (self.fiber, self.bottom_rule),
            "actionMatrix": self.action_matrix.asdict(),
        }


def _shift_matrix(rank, edge_row, up):
    rows = []
    for i in range(rank):
        if up:
            rows.append(tuple(int(j == i + 1) for j in range(rank)) if i < rank - 1 else edge_row)
        else:
            rows.append(tuple(int(j == i - 1) for j in range(rank)) if i > 0 else edge_row)
    return IntMatrix.from_rows(rows, rank)


def fbc_decompose(rels: List[ShiftedRelator]) -> Optional[FbcDecomposition]:
    """Detect a free-by-cyclic structure in a single shifted relator.

    The extreme indices must each occur exactly once.  Then the kernel
    is free of rank equal to the index span and the abelianized action
    of the stable generator has rows ``e_(i+1)`` followed by the exponent
    vector of the top rule.

    Raises:
      UnsupportedRelator: For empty or multi-relator input.
    """
    if not rels:
        raise UnsupportedRelator("no relators to decompose")
    if len(rels) > 1:
        raise UnsupportedRelator("only single relator covers are supported")

    relator = rels[0].normalized()
    if not relator.syllables:
        return None

    _, rank = relator.span
    if rank == 0 or relator.occurrences(rank) != 1 or relator.occurrences(0) != 1:
        return None

    top = relator.solve_for(rank)
    bottom = relator.solve_for(0)
    action = _shift_matrix(rank, top.exponent_vector(0, rank), up=True)
    inverse = _shift_matrix(rank, bottom.translate(-1).exponent_vector(0, rank), up=False)
    return FbcDecomposition(
        rank, relator.stable, relator.fiber, relator, top, bottom, action, inverse,
    )


def semidirect_presentation(d: FbcDecomposition) -> Presentation:
    """``< s, g_0..g_(r-1) | g_i^s = g_(i+1), g_(r-1)^s = top rule >``.
    """
    names = [d.stable] + d.basis
    if len(set(names)) != len(names):
        raise PresentationError("the stable generator's name clashes with the basis")

    alphabet = Alphabet.free(names)
    s = alphabet.generator(d.stable)
    gens = [alphabet.generator(name) for name in d.basis]
    images = gens[1:] + [d.top_rule.to_word(alphabet)]
    relators = [image.inverse() * s.inverse() * g * s for g, image in zip(gens, images)]
    return Presentation(alphabet, tuple(relators), "semidirect product of rank %d" % d.rank)


class VerdictKind(Enum):
    RESIDUALLY_NILPOTENT = "ResiduallyNilpotent"
    OMEGA_SQUARED = "LcsLengthAtMostOmegaSquared"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    exponent: Optional[int] = None
    m: Optional[int] = None
    modulus: Optional[int] = None
    reason: str = ""

    @property
    def length_bound(self) -> Optional[str]:
        """The bound on the lower central series length, if any.
        """
        if self.kind is VerdictKind.RESIDUALLY_NILPOTENT:
            return "ω"
        if self.kind is VerdictKind.OMEGA_SQUARED:
            return "ω²"
        return None

    def verify(self, matrix: IntMatrix) -> bool:
        """Re-check the certificate against the action matrix.
        """
        N = matrix - IntMatrix.identity(matrix.nrows)
        if self.kind is VerdictKind.RESIDUALLY_NILPOTENT:
            return (N ** self.exponent).is_zero()
        if self.kind is VerdictKind.OMEGA_SQUARED:
            return all(a % self.modulus == 0 for row in (N ** self.m).rows for a in row)
        return True

    def asdict(self):
        if self.kind is VerdictKind.RESIDUALLY_NILPOTENT:
            certificate = {"exponent": self.exponent}
        elif self.kind is VerdictKind.OMEGA_SQUARED:
            certificate = {"m": self.m, "modulus": self.modulus}
        else:
            certificate = {"reason": self.reason}
        return {"kind": self.kind.value, "certificate": certificate}


def residual_nilpotence_verdict(d: FbcDecomposition, m_max: int = DEFAULT_M_MAX) -> Verdict:
    A = d.action_matrix
    exponent = unipotency_index(A, d.rank)
    if exponent is not None:
        return Verdict(VerdictKind.RESIDUALLY_NILPOTENT, exponent=exponent)

    pair = find_congruence_pair(A, m_max)
    if pair is not None:
        return Verdict(VerdictKind.OMEGA_SQUARED, m=pair.m, modulus=pair.modulus)

    reason = "no power of (A - I) up to %d is divisible by a modulus >= 2" % m_max
    return Verdict(VerdictKind.INCONCLUSIVE, reason=reason)


@dataclass(frozen=True)
class AmalgamReport:
    """The kernel as an infinite chain of pieces ``A_k`` on three
    consecutive generators, glued along ``B_k``, the free group on the
    two generators that consecutive pieces share.
    """

    relator: ShiftedRelator

    def piece(self, k: int) -> Presentation:
        fiber = self.relator.fiber
        alphabet = Alphabet.free(index_name(fiber, i) for i in range(k, k + 3))
        return Presentation(alphabet, (self.relator.translate(k).to_word(alphabet),), "piece A_%d" % k)

    def edge(self, k: int) -> List[str]:
        """The free basis of ``B_k``, shared by ``A_k`` and ``A_(k+1)``.
        """
        return [index_name(self.relator.fiber, i) for i in (k + 1, k + 2)]

    def asdict(self):
        fiber = self.relator.fiber
        return {
            "piece": {
                "generators": ["%s_k" % fiber, "%s_k+1" % fiber, "%s_k+2" % fiber],
                "relator": str(self.relator),
            },
            "edge": {"generators": ["%s_k+1" % fiber, "%s_k+2" % fiber], "freeRank": 2},
            "shift": "%s_k -> %s_k+1" % (fiber, fiber),
        }


def amalgam_report(rels: List[ShiftedRelator]) -> AmalgamReport:
    """Raises:
      UnsupportedRelator: Unless there is a single relator spanning
      exactly three consecutive indices that isn't free-by-cyclic.

    The report keeps the relator as given, cyclically reduced and
    translated so its least index is 0.
    """
    if len(rels) != 1:
        raise UnsupportedRelator("amalgam reports need exactly one relator")

    normalized = rels[0].normalized()
    if not normalized.syllables or normalized.width != 2:
        raise UnsupportedRelator("the relator must span exactly three consecutive indices")
    if fbc_decompose([normalized]) is not None:
        raise UnsupportedRelator("the relator is free-by-cyclic")

    relator = rels[0].cyclic_reduce()
    return AmalgamReport(relator.translate(-relator.span[0]))


@dataclass(frozen=True)
class FbcReport:
    """Everything ``analyze`` learns about a one relator group along
    its map to ``Z``.  Exactly one of ``decomposition`` and ``amalgam``
    is set, or neither when the relator falls outside both analyses.
    """

    stable: str
    shifted: Tuple[ShiftedRelator, ...]
    decomposition: Optional[FbcDecomposition] = None
    verdict: Optional[Verdict] = None
    char_poly: Optional[CharPoly] = None
    amalgam: Optional[AmalgamReport] = None

    def asdict(self):
        data = {
            "stable": self.stable,
            "shifted": [str(r) for r in self.shifted],
            "decomposition": None,
            "amalgam": None,
        }
        if self.decomposition is not None:
            data["decomposition"] = self.decomposition.asdict()
            data["decomposition"]["charPoly"] = self.char_poly.asdict()
            data["decomposition"]["verdict"] = dict(self.verdict.asdict(), lengthBound=self.verdict.length_bound)
        if self.amalgam is not None:
            data["amalgam"] = self.amalgam.asdict()
        return data


def analyze(p: Presentation, stable: str, m_max: int = DEFAULT_M_MAX) -> FbcReport:
    shifted = rewrite_along_z(p, stable)
    decomposition = fbc_decompose(shifted)
    if decomposition is not None:
        return FbcReport(
            stable, tuple(shifted), decomposition,
            verdict=residual_nilpotence_verdict(decomposition, m_max),
            char_poly=char_poly(decomposition.action_matrix),
        )

    try:
        amalgam = amalgam_report(shifted)
    except UnsupportedRelator:
        amalgam = None
    return FbcReport(stable, tuple(shifted), amalgam=amalgam)
