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
from functools import reduce as _fold
from math import gcd
from typing import Iterable, List, Optional, Sequence, Tuple

import sympy

from .common import extgcd

#: Characteristic polynomials up to this degree get factored.
FACTOR_DEGREE_LIMIT = 8

_LAMBDA = sympy.Symbol("lambda")


@dataclass(frozen=True)
class IntMatrix:
    """A rectangular matrix of arbitrary precision integers.
    """

    rows: Tuple[Tuple[int, ...], ...]
    ncols: int

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(int(x) for x in row) for row in self.rows))
        for row in self.rows:
            if len(row) != self.ncols:
                raise ValueError("matrix rows must all have %d entries" % self.ncols)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], ncols: Optional[int] = None) -> "IntMatrix":
        rows = [tuple(row) for row in rows]
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for a matrix without rows")
            ncols = len(rows[0])
        return cls(tuple(rows), ncols)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), n)

    @classmethod
    def zeros(cls, m: int, n: int) -> "IntMatrix":
        return cls(tuple((0,) * n for _ in range(m)), n)

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def shape(self):
        return self.nrows, self.ncols

    @property
    def is_square(self):
        return self.nrows == self.ncols

    def __getitem__(self, index):
        i, j = index
        return self.rows[i][j]

    def __add__(self, other):
        self._same_shape(other)
        return IntMatrix(tuple(
            tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)
        ), self.ncols)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, k: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(k * a for a in row) for row in self.rows), self.ncols)

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError("can't multiply %dx%d by %dx%d" % (self.shape + other.shape))
        columns = list(zip(*other.rows)) if other.nrows else [()] * other.ncols
        return IntMatrix(tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in columns) for row in self.rows
        ), other.ncols)

    def __pow__(self, k: int) -> "IntMatrix":
        if not self.is_square:
            raise ValueError("only square matrices can be raised to a power")
        if k < 0:
            raise ValueError("negative matrix powers aren't supported")

        result, base = IntMatrix.identity(self.nrows), self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def row(self, i: int) -> Tuple[int, ...]:
        return self.rows[i]

    def is_zero(self):
        return all(a == 0 for row in self.rows for a in row)

    def content(self) -> int:
        """The gcd of all entries; zero for the zero matrix.
        """
        return _fold(gcd, (a for row in self.rows for a in row), 0)

    def det(self) -> int:
        if not self.is_square:
            raise ValueError("determinant of a non-square matrix")
        if self.nrows == 0:
            return 1
        return int(self.to_sympy().det(method="bareiss"))

    def rank(self) -> int:
        H, _ = hnf(self)
        return sum(1 for row in H.rows if any(row))

    def to_sympy(self):
        return sympy.Matrix(self.nrows, self.ncols, [a for row in self.rows for a in row])

    def tolist(self) -> List[List[int]]:
        return [list(row) for row in self.rows]

    def asdict(self):
        return [[str(a) for a in row] for row in self.rows]

    @classmethod
    def from_json(cls, data, ncols=None):
        return cls.from_rows([[int(a) for a in row] for row in data], ncols)

    def __str__(self):
        return "\n".join(" ".join("%d" % a for a in row) for row in self.rows)

    def _same_shape(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch: %r vs %r" % (self.shape, other.shape))


@dataclass(frozen=True)
class AbelianInvariants:
    """A finitely generated abelian group ``Z^free_rank + Z_d1 + ... + Z_dk``
    with ``d1 | d2 | ... | dk`` and every ``di >= 2``.
    """

    free_rank: int
    torsion: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        for d in self.torsion:
            if d < 2:
                raise ValueError("torsion coefficients must be at least 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError("torsion coefficients must form a divisibility chain")

    @classmethod
    def from_relation_matrix(cls, M: "IntMatrix") -> "AbelianInvariants":
        """The cokernel of ``Z^rows -> Z^cols``, ``v |-> vM``.
        """
        factors = snf(M).invariants
        rank = len(factors)
        return cls(M.ncols - rank, tuple(d for d in factors if d > 1))

    @property
    def is_trivial(self):
        return self.free_rank == 0 and not self.torsion

    def primary_part(self, p: int) -> Tuple[int, ...]:
        """The p-power parts of the torsion coefficients, ones dropped.
        """
        parts = []
        for d in self.torsion:
            q = 1
            while d % p == 0:
                d //= p
                q *= p
            if q > 1:
                parts.append(q)
        return tuple(parts)

    def asdict(self):
        return {"freeRank": self.free_rank, "torsion": list(self.torsion)}

    def __str__(self):
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else "Z^%d" % self.free_rank)
        parts.extend("Z_%d" % d for d in self.torsion)
        return " + ".join(parts) or "0"


def _combine_rows(A, i, j, a, b, c, d):
    """Replace rows i and j by ``(a*Ri + b*Rj, c*Ri + d*Rj)``.
    """
    ri, rj = A[i], A[j]
    A[i] = [a * x + b * y for x, y in zip(ri, rj)]
    A[j] = [c * x + d * y for x, y in zip(ri, rj)]


def hnf(M: IntMatrix) -> Tuple[IntMatrix, IntMatrix]:
    """Row Hermite normal form.

    Returns:
      tuple: ``(H, U)`` with ``U`` unimodular and ``U @ M == H``.  Pivots
      of ``H`` are positive and the entries above a pivot lie in
      ``[0, pivot)``.  Zero rows come last.
    """
    m, n = M.shape
    A = M.tolist()
    U = IntMatrix.identity(m).tolist()

    r = 0
    for col in range(n):
        if r == m:
            break

        pivot = next((i for i in range(r, m) if A[i][col] != 0), None)
        if pivot is None:
            continue

        A[r], A[pivot] = A[pivot], A[r]
        U[r], U[pivot] = U[pivot], U[r]
        for i in range(r + 1, m):
            b = A[i][col]
            if b == 0:
                continue

            a = A[r][col]
            g, s, t = extgcd(a, b)
            for T in (A, U):
                _combine_rows(T, r, i, s, t, -b // g, a // g)

        if A[r][col] < 0:
            A[r] = [-x for x in A[r]]
            U[r] = [-x for x in U[r]]

        p = A[r][col]
        for i in range(r):
            q = A[i][col] // p
            if q:
                A[i] = [x - q * y for x, y in zip(A[i], A[r])]
                U[i] = [x - q * y for x, y in zip(U[i], U[r])]
        r += 1

    return IntMatrix.from_rows(A, n), IntMatrix.from_rows(U, m)


@dataclass(frozen=True)
class SmithForm:
    """``U @ M @ V == D`` with ``U`` and ``V`` unimodular.
    """

    D: IntMatrix
    U: IntMatrix
    V: IntMatrix
    invariants: Tuple[int, ...]


def snf(M: IntMatrix) -> SmithForm:
    m, n = M.shape
    A = M.tolist()
    U = IntMatrix.identity(m).tolist()
    V = IntMatrix.identity(n).tolist()

    def swap_cols(T, i, j):
        for row in T:
            row[i], row[j] = row[j], row[i]

    def add_col(T, target, source, k):
        for row in T:
            row[target] += k * row[source]

    for t in range(min(m, n)):
        while True:
            entries = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j] != 0]
            if not entries:
                break

            _, i, j = min(entries)
            A[t], A[i] = A[i], A[t]
            U[t], U[i] = U[i], U[t]
            swap_cols(A, t, j)
            swap_cols(V, t, j)

            p, clean = A[t][t], True
            for i in range(t + 1, m):
                q = A[i][t] // p
                if q:
                    A[i] = [x - q * y for x, y in zip(A[i], A[t])]
                    U[i] = [x - q * y for x, y in zip(U[i], U[t])]
                clean = clean and A[i][t] == 0
            for j in range(t + 1, n):
                q = A[t][j] // p
                if q:
                    add_col(A, j, t, -q)
                    add_col(V, j, t, -q)
                clean = clean and A[t][j] == 0
            if not clean:
                continue

            # The pivot has to divide everything left in the submatrix.
            offender = next((i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p), None)
            if offender is None:
                break
            A[t] = [x + y for x, y in zip(A[t], A[offender])]
            U[t] = [x + y for x, y in zip(U[t], U[offender])]

        if t < m and t < n and A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]

    invariants = tuple(A[i][i] for i in range(min(m, n)) if A[i][i] != 0)
    return SmithForm(
        IntMatrix.from_rows(A, n),
        IntMatrix.from_rows(U, m),
        IntMatrix.from_rows(V, n),
        invariants,
    )


@dataclass(frozen=True)
class CharPoly:
    """A characteristic polynomial, highest degree coefficient first,
    together with its factorization over the integers.
    """

    coefficients: Tuple[int, ...]
    factors: Tuple[Tuple[Tuple[int, ...], int], ...]
    factored: bool

    @property
    def degree(self):
        return len(self.coefficients) - 1

    def evaluate(self, M: IntMatrix) -> IntMatrix:
        """Evaluate at a square matrix with Horner's scheme.
        """
        result = IntMatrix.zeros(M.nrows, M.ncols)
        identity = IntMatrix.identity(M.nrows)
        for c in self.coefficients:
            result = result @ M + identity.scale(c)
        return result

    def asdict(self):
        return {
            "coefficients": [str(c) for c in self.coefficients],
            "factors": [
                {"coefficients": [str(c) for c in factor], "multiplicity": k}
                for factor, k in self.factors
            ],
        }

    def __str__(self):
        if not self.factored:
            return _format_poly(self.coefficients)
        return " ".join(
            "(%s)" % _format_poly(f) if k == 1 else "(%s)^%d" % (_format_poly(f), k)
            for f, k in self.factors
        )


def _format_poly(coefficients):
    degree = len(coefficients) - 1
    terms = []
    for i, c in enumerate(coefficients):
        if c == 0:
            continue

        e = degree - i
        monomial = "" if e == 0 else "λ" if e == 1 else "λ^%d" % e
        magnitude = abs(c)
        body = monomial if magnitude == 1 and monomial else "%d%s" % (magnitude, monomial)
        if not terms:
            terms.append(("-" if c < 0 else "") + body)
        else:
            terms.append(("- " if c < 0 else "+ ") + body)
    return " ".join(terms) or "0"


def char_poly(M: IntMatrix) -> CharPoly:
    """Characteristic polynomial by the Berkowitz algorithm, factored
    over the integers when the degree is small enough.
    """
    if not M.is_square:
        raise ValueError("characteristic polynomial of a non-square matrix")

    poly = M.to_sympy().charpoly(_LAMBDA)
    coefficients = tuple(int(c) for c in poly.all_coeffs())
    if len(coefficients) - 1 > FACTOR_DEGREE_LIMIT:
        return CharPoly(coefficients, ((coefficients, 1),), False)

    _, factor_list = sympy.factor_list(poly.as_expr(), _LAMBDA)
    factors = []
    for factor, k in factor_list:
        factor_coefficients = tuple(int(c) for c in sympy.Poly(factor, _LAMBDA).all_coeffs())
        factors.append((factor_coefficients, k))

    factors.sort(key=lambda item: (len(item[0]), item[0]))
    return CharPoly(coefficients, tuple(factors), True)


@dataclass(frozen=True)
class LatticeBasis:
    """A sublattice of ``Z^ambient`` given by Hermite-reduced rows.
    """

    ambient: int
    basis: IntMatrix

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], ambient: int) -> "LatticeBasis":
        H, _ = hnf(IntMatrix.from_rows(rows, ambient))
        return cls(ambient, IntMatrix.from_rows([row for row in H.rows if any(row)], ambient))

    @property
    def rank(self):
        return self.basis.nrows

    def __add__(self, other: "LatticeBasis") -> "LatticeBasis":
        if other.ambient != self.ambient:
            raise ValueError("lattices live in different ambient spaces")
        return LatticeBasis.from_rows(self.basis.rows + other.basis.rows, self.ambient)

    def contains(self, v: Sequence[int]) -> bool:
        joined = LatticeBasis.from_rows(self.basis.rows + (tuple(v),), self.ambient)
        return joined.basis == self.basis

    def asdict(self):
        return {"ambient": self.ambient, "basis": self.basis.asdict()}


def kernel_lattice(M: IntMatrix, power: int = 1) -> LatticeBasis:
    """The saturated lattice of row vectors ``v`` with ``v @ M^power == 0``.
    """
    if not M.is_square:
        raise ValueError("kernel_lattice needs a square matrix")

    K = M ** power
    H, U = hnf(K)
    rows = [U.row(i) for i in range(H.nrows) if not any(H.row(i))]
    return LatticeBasis.from_rows(rows, M.nrows)


def lattice_quotient(sub: LatticeBasis, ambient_rank: int) -> AbelianInvariants:
    if sub.ambient != ambient_rank:
        raise ValueError("the lattice isn't inside Z^%d" % ambient_rank)
    return AbelianInvariants.from_relation_matrix(sub.basis)


def unipotency_index(M: IntMatrix, bound: int) -> Optional[int]:
    """The least ``k <= bound`` with ``(M - I)^k == 0``, or None.
    """
    N = M - IntMatrix.identity(M.nrows)
    P = N
    for k in range(1, bound + 1):
        if P.is_zero():
            return k
        P = P @ N
    return None


def is_unipotent(M: IntMatrix, bound: int) -> bool:
    return unipotency_index(M, bound) is not None


@dataclass(frozen=True)
class CongruencePair:
    """Every entry of ``(M - I)^m`` is divisible by ``modulus``.
    """

    m: int
    modulus: int

    def verify(self, M: IntMatrix) -> bool:
        P = (M - IntMatrix.identity(M.nrows)) ** self.m
        return all(a % self.modulus == 0 for row in P.rows for a in row)


def find_congruence_pair(M: IntMatrix, m_max: int) -> Optional[CongruencePair]:
    N = M - IntMatrix.identity(M.nrows)
    P = N
    for m in range(1, m_max + 1):
        g = P.content()
        if g >= 2:
            return CongruencePair(m, g)
        P = P @ N
    return None
