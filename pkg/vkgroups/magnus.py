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

from typing import Dict, Iterable, Optional, Tuple

from .lie import LieVector, lie_coordinates
from .words import Word

Monomial = Tuple[int, ...]


class TruncSeries:
    """A noncommutative integer power series truncated above degree
    ``cutoff``.  The constant term is stored under the empty monomial and
    zero coefficients are never stored.
    """

    __slots__ = ("cutoff", "coeffs")

    def __init__(self, cutoff: int, coeffs: Optional[Dict[Monomial, int]] = None):
        if cutoff < 1:
            raise ValueError("cutoff must be at least 1")
        self.cutoff = cutoff
        self.coeffs = {m: c for m, c in (coeffs or {}).items() if c and len(m) <= cutoff}

    @classmethod
    def one(cls, cutoff: int) -> "TruncSeries":
        return cls(cutoff, {(): 1})

    @classmethod
    def variable_power(cls, index: int, exp: int, cutoff: int) -> "TruncSeries":
        """``(1 + X_index)^exp``.
        """
        coeffs, c = {}, 1
        for j in range(cutoff + 1):
            if c == 0:
                break
            coeffs[(index,) * j] = c
            c = c * (exp - j) // (j + 1)
        return cls(cutoff, coeffs)

    @property
    def constant(self):
        return self.coeffs.get((), 0)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.cutoff == other.cutoff and self.coeffs == other.coeffs

    def __repr__(self):
        return "TruncSeries(%d, %r)" % (self.cutoff, self.coeffs)

    def _combine(self, other, k):
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out.get(m, 0) + k * c
        return TruncSeries(self.cutoff, out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def scale(self, k: int) -> "TruncSeries":
        return TruncSeries(self.cutoff, {m: k * c for m, c in self.coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        if other.cutoff != self.cutoff:
            raise ValueError("series with different cutoffs can't be multiplied")

        by_degree: Dict[int, list] = {}
        for m, c in other.coeffs.items():
            by_degree.setdefault(len(m), []).append((m, c))

        out: Dict[Monomial, int] = {}
        for ma, ca in self.coeffs.items():
            room = self.cutoff - len(ma)
            for degree, items in by_degree.items():
                if degree > room:
                    continue
                for mb, cb in items:
                    m = ma + mb
                    out[m] = out.get(m, 0) + ca * cb
        return TruncSeries(self.cutoff, out)

    def augmentation(self) -> "TruncSeries":
        """The series minus its constant term.
        """
        return TruncSeries(self.cutoff, {m: c for m, c in self.coeffs.items() if m})

    def __pow__(self, k: int) -> "TruncSeries":
        """Integer powers of a group element, ``sum(C(k, j) u^j)`` where
        ``u`` is the augmentation.
        """
        if self.constant != 1:
            raise ValueError("only series with constant term 1 can be raised to integer powers")

        u = self.augmentation()
        result = TruncSeries.one(self.cutoff)
        term, c = TruncSeries.one(self.cutoff), 1
        for j in range(self.cutoff):
            c = c * (k - j) // (j + 1)
            if c == 0:
                break
            term = term * u
            if not term.coeffs:
                break
            result = result + term.scale(c)
        return result

    def inverse(self) -> "TruncSeries":
        return self ** -1

    def commutator(self, other: "TruncSeries") -> "TruncSeries":
        """``[a, b] = a^-1 b^-1 a b``.
        """
        return self.inverse() * other.inverse() * self * other

    def homogeneous(self, degree: int) -> Dict[Monomial, int]:
        return {m: c for m, c in self.coeffs.items() if len(m) == degree}

    def low_degree(self) -> Optional[int]:
        """The least positive degree with a nonzero component, if any.
        """
        degrees = [len(m) for m in self.coeffs if m]
        return min(degrees) if degrees else None

    def is_one(self):
        return self.coeffs == {(): 1}


def product(series: Iterable[TruncSeries], cutoff: int) -> TruncSeries:
    result = TruncSeries.one(cutoff)
    for s in series:
        result = result * s
    return result


def magnus(w: Word, cutoff: int) -> TruncSeries:
    """The Magnus image of a free word: each generator ``g`` maps to
    ``1 + X_g`` where ``X_g`` is indexed by the generator's position.
    """
    if cutoff < 1:
        raise ValueError("cutoff must be at least 1")
    if not w.alphabet.is_free:
        raise ValueError("the Magnus map is only defined on free words")

    return product(
        (TruncSeries.variable_power(w.alphabet.position(gen), exp, cutoff) for gen, exp in w.syllables),
        cutoff,
    )


class LeadingTerm:
    """The lowest nonvanishing graded piece of a group element.
    """

    __slots__ = ("weight", "lie")

    def __init__(self, weight: int, lie: LieVector):
        self.weight = weight
        self.lie = lie

    def __eq__(self, other):
        if not isinstance(other, LeadingTerm):
            return NotImplemented
        return self.weight == other.weight and self.lie == other.lie

    def __repr__(self):
        return "LeadingTerm(%d, %r)" % (self.weight, self.lie.coords)


def leading_term(s: TruncSeries, n: int) -> Optional[LeadingTerm]:
    d = s.low_degree()
    if d is None:
        return None
    return LeadingTerm(d, lie_coordinates(s.homogeneous(d), n, d))


def leading_weight(w: Word, cutoff: int) -> Optional[LeadingTerm]:
    """Find the lower central depth of ``w`` below ``cutoff + 1``.

    Returns:
      LeadingTerm|None: The weight and Lyndon coordinates of the first
      nonvanishing component, or None when ``w`` is trivial modulo
      ``gamma_(cutoff+1)``.
    """
    return leading_term(magnus(w, cutoff), len(w.alphabet))
