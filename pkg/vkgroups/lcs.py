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

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .common import extgcd, valuation
from .errors import ClassOutOfRange
from .lattice import AbelianInvariants, IntMatrix, LatticeBasis
from .lie import witt_rank
from .logging import get_logger
from .magnus import LeadingTerm, TruncSeries, leading_term, magnus
from .presentations import Presentation, abelianization

#: The largest nilpotency class lcs_quotients computes.
CLASS_CAP = 6


def check_class(cls: int):
    if not 1 <= cls <= CLASS_CAP:
        raise ClassOutOfRange("class must be between 1 and %d, not %r" % (CLASS_CAP, cls))


class LowerCentralEngine:
    """Saturates the normal closure of a set of relators inside
    ``F/gamma_(cls+1)F``.

    Elements are truncated Magnus series.  Each weight keeps an
    echelon layer mapping a pivot column to the element whose leading
    Lie vector starts there.  Sifting an element reduces it against the
    layers weight by weight until it either lands in a free pivot slot
    or vanishes.

    Parameters:
      rank(int): The number of free generators.
      cls(int): The nilpotency class to work modulo.
    """

    def __init__(self, rank: int, cls: int):
        check_class(cls)
        self.logger = get_logger(__name__, type(self))
        self.rank = rank
        self.cls = cls
        self.layers: Dict[int, Dict[int, Tuple[LeadingTerm, TruncSeries]]] = {
            w: {} for w in range(1, cls + 1)
        }
        self.generators = [TruncSeries.variable_power(i, 1, cls) for i in range(rank)]

    def elements(self) -> List[Tuple[int, TruncSeries]]:
        return [
            (w, self.layers[w][pivot][1])
            for w in sorted(self.layers)
            for pivot in sorted(self.layers[w])
        ]

    def sift(self, h: TruncSeries) -> bool:
        """Reduce ``h`` against the layers, storing whatever is left.

        Returns:
          bool: True if any layer changed.
        """
        while True:
            lead = leading_term(h, self.rank)
            if lead is None:
                return False

            pivot = lead.lie.pivot
            layer = self.layers[lead.weight]
            a = lead.lie.coords[pivot]
            if pivot not in layer:
                if a < 0:
                    h = h.inverse()
                    lead = leading_term(h, self.rank)
                layer[pivot] = (lead, h)
                return True

            row_lead, e = layer[pivot]
            b = row_lead.lie.coords[pivot]
            if a % b == 0:
                h = h * e ** -(a // b)
                continue

            g, s, t = extgcd(a, b)
            combined = h ** s * e ** t
            layer[pivot] = (leading_term(combined, self.rank), combined)
            # Both old elements are now multiples of the new pivot.
            self.sift(e)
            self.sift(h)
            return True

    def saturate(self, relators: List[TruncSeries]):
        for r in relators:
            self.sift(r)

        passes, changed = 0, True
        while changed:
            changed = False
            passes += 1
            elements = self.elements()
            for w, e in elements:
                if w < self.cls:
                    for g in self.generators:
                        changed |= self.sift(e.commutator(g))

            for i, (wi, ei) in enumerate(elements):
                for wj, ej in elements[i + 1:]:
                    if wi + wj <= self.cls:
                        changed |= self.sift(ei.commutator(ej))

        self.logger.debug("Saturated after %d passes; layer ranks %r.", passes, {
            w: len(layer) for w, layer in self.layers.items()
        })

    def lattice(self) -> "GradedLattice":
        layers = {}
        for w, layer in self.layers.items():
            rows = [layer[pivot][0].lie.coords for pivot in sorted(layer)]
            layers[w] = LatticeBasis.from_rows(rows, witt_rank(self.rank, w))
        return GradedLattice(self.rank, self.cls, layers)


@dataclass(frozen=True)
class GradedLattice:
    """Per weight, the image of the relator normal closure in the free
    Lie lattice of that weight, in Hermite form.
    """

    rank: int
    cls: int
    layers: Dict[int, LatticeBasis]

    def quotient(self, w: int) -> AbelianInvariants:
        return AbelianInvariants.from_relation_matrix(self.layers[w].basis)

    def quotients(self) -> List[AbelianInvariants]:
        return [self.quotient(w) for w in range(1, self.cls + 1)]


def lcs_lattice(p: Presentation, cls: int) -> GradedLattice:
    check_class(cls)
    if p.rank == 0:
        empty = LatticeBasis(0, IntMatrix.zeros(0, 0))
        return GradedLattice(0, cls, {w: empty for w in range(1, cls + 1)})

    engine = LowerCentralEngine(p.rank, cls)
    engine.saturate([magnus(r, cls) for r in p.relators])
    return engine.lattice()


def lcs_quotients(p: Presentation, cls: int) -> List[AbelianInvariants]:
    """The invariants of ``gamma_w G / gamma_(w+1) G`` for ``w = 1..cls``.
    """
    return lcs_lattice(p, cls).quotients()


def free_quotients(rank: int, cls: int) -> List[AbelianInvariants]:
    if rank == 0:
        return [AbelianInvariants(0)] * cls
    return [AbelianInvariants(witt_rank(rank, w)) for w in range(1, cls + 1)]


def compare_with_free(p: Presentation, cls: int, rank: Optional[int] = None) -> Optional[int]:
    """The first weight at which the quotients of ``p`` differ from those
    of the free group whose rank is the free rank of ``p``'s
    abelianization, unless ``rank`` is given.
    """
    if rank is None:
        rank = abelianization(p).free_rank
    return first_difference(lcs_quotients(p, cls), rank)


def first_difference(quotients: List[AbelianInvariants], rank: int) -> Optional[int]:
    for w, (a, b) in enumerate(zip(quotients, free_quotients(rank, len(quotients))), start=1):
        if a != b:
            return w
    return None


@dataclass(frozen=True)
class LocalTorsion:
    """The structure of ``Q / p^depth Q`` for a weight quotient ``Q``:
    cyclic factors of order ``p^v`` with ``0 < v < depth`` plus the
    number of factors of full order ``p^depth``.
    """

    prime: int
    depth: int
    finite: Tuple[int, ...]
    full: int

    def asdict(self):
        return {"prime": self.prime, "depth": self.depth, "finite": list(self.finite), "full": self.full}


def local_torsion(lattice: GradedLattice, weight: int, prime: int, depth: int = 3) -> LocalTorsion:
    """Eliminate the weight's relation rows over ``Z/p^depth``, always
    pivoting on an entry of least valuation.
    """
    q = prime ** depth
    layer = lattice.layers[weight]
    ncols = layer.ambient
    rows = [[x % q for x in row] for row in layer.basis.rows]
    columns = list(range(ncols))

    found = []
    while True:
        best = None
        for i, row in enumerate(rows):
            for j in columns:
                if row[j]:
                    v = valuation(row[j], prime)
                    if best is None or v < best[0]:
                        best = (v, i, j)
        if best is None:
            break

        v, i, j = best
        pivot_row = rows.pop(i)
        unit = pow(pivot_row[j] // prime ** v, -1, q)
        pivot_row = [x * unit % q for x in pivot_row]
        for row in rows:
            k = row[j] // prime ** v
            if k:
                for c in columns:
                    row[c] = (row[c] - k * pivot_row[c]) % q
        columns.remove(j)
        found.append(v)

    finite = tuple(sorted(prime ** v for v in found if v > 0))
    return LocalTorsion(prime, depth, finite, len(columns))


def expected_local_torsion(invariants: AbelianInvariants, prime: int, depth: int = 3) -> LocalTorsion:
    """What ``local_torsion`` must report for a group with these invariants.
    """
    finite, full = [], invariants.free_rank
    for d in invariants.primary_part(prime):
        v = valuation(d, prime)
        if v < depth:
            finite.append(d)
        else:
            full += 1
    return LocalTorsion(prime, depth, tuple(sorted(finite)), full)
