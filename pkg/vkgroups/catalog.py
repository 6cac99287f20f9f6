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

"""Built-in knots and links together with the results they are known
to produce.  Every entry carries the checks ``vkgroups check`` runs.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from .braids import BraidWord, Rep, parse_braid
from .errors import PresentationError
from .fbc import ShiftedRelator, VerdictKind
from .lattice import AbelianInvariants, IntMatrix, kernel_lattice, lattice_quotient
from .lcs import free_quotients
from .logging import get_logger
from .magnus import leading_weight
from .pipeline import Pipeline, get_pipeline
from .presentations import (
    Diagram, Presentation, add_relators, eliminate_generator, introduce_generator, kauffman_quotient
)
from .words import Alphabet, commutator

#: The sentence reported when two abelianizations tell groups apart.
DISTINCT_ABELIANIZATIONS = "not isomorphic (distinct abelianizations)"


def _diagram(arcs, real, virtual):
    return Diagram.from_dict({
        "arcs": ["x%d" % i for i in range(1, arcs + 1)],
        "real": [
            {"over": "x%d" % over, "underIn": "x%d" % a, "underOut": "x%d" % b, "sign": sign}
            for a, b, over, sign in real
        ],
        "virtual": [
            {"aIn": "x%d" % a, "aOut": "x%d" % b, "bIn": "x%d" % c, "bOut": "x%d" % d}
            for (a, b), (c, d) in virtual
        ],
    })


@dataclass(frozen=True)
class CatalogEntry:
    """A knot or link, given by a virtual braid, by a stored one
    relator presentation ``[left, right]`` over ``x, y`` or both.

    Parameters:
      id(str): The catalog key.
      description(str): What the entry is.
      braid(str): Braid text, see :func:`parse_braid`.
      strands(int): The braid's strand count.
      commutator(tuple[str, str]): The stored relator's two sides.
      diagram(Diagram): A labeled diagram of the knot.
      stable(str): The generator the group maps onto ``Z`` by.
      rename(dict): Renames applied to the simplified braid group.
    """

    id: str
    description: str
    braid: Optional[str] = None
    strands: Optional[int] = None
    commutator: Optional[Tuple[str, str]] = None
    diagram: Optional[Diagram] = None
    stable: Optional[str] = None
    rename: Mapping[str, str] = field(default_factory=dict)

    def braid_word(self) -> BraidWord:
        if self.braid is None:
            raise PresentationError("%s isn't stored as a braid" % self.id)
        return parse_braid(self.braid, self.strands)

    def group(self, pipeline: Pipeline, rep: Rep = Rep.A) -> Presentation:
        """The raw group: from the braid when there is one, from the
        diagram otherwise.  Diagrams only give the A representation.
        """
        rep = Rep(rep)
        if self.braid is not None:
            return pipeline.group(rep, self.braid_word())
        if rep is not Rep.A:
            raise PresentationError("%s has no braid, so only rep A is available" % self.id)
        return pipeline.diagram_group(self.diagram)

    def simplified(self, pipeline: Pipeline, rep: Rep = Rep.A) -> Presentation:
        p = pipeline.simplify(self.group(pipeline, rep))
        if Rep(rep) is Rep.A and self.rename:
            p = p.rename(self.rename)
        return p

    def one_relator(self, pipeline: Pipeline) -> Presentation:
        """The stored one relator presentation, or the simplified braid
        group when nothing is stored.
        """
        if self.commutator is None:
            return self.simplified(pipeline)

        alphabet = Alphabet.free(["x", "y"])
        left, right = (alphabet.word(text) for text in self.commutator)
        return Presentation(alphabet, (commutator(left, right),), "%s stored relator" % self.id)


CATALOG: Dict[str, CatalogEntry] = {
    # Closure of s1^-2 r1.  Simplifies to a single relator of weight 4.
    "K1": CatalogEntry(
        "K1", "virtual knot, closure of s1^-2 r1",
        braid="s1^-2 r1", strands=2, stable="x", rename={"x1": "x"},
    ),
    # Final relator [x^(y^-1 x y^-1) x^(y x^-1 y), x], one arc per
    # diagram segment oriented 1 -> 2 -> ... -> 14 -> 1.
    "K2": CatalogEntry(
        "K2", "virtual knot with two real crossing pairs and five virtual crossings",
        commutator=("y x^-1 y x y^-1 x y^-2 x y^-1 x y x^-1 y", "x"),
        diagram=_diagram(
            14,
            [(5, 6, 12, 1), (7, 8, 3, 1), (9, 10, 1, 1), (12, 13, 2, -1)],
            [((2, 3), (1, 2)), ((3, 4), (4, 5)), ((11, 12), (6, 7)), ((13, 14), (8, 9)), ((14, 1), (10, 11))],
        ),
        stable="x",
    ),
    # Closure of r1 s1^-2 r1 s1.
    "K3": CatalogEntry(
        "K3", "virtual knot, closure of r1 s1^-2 r1 s1",
        braid="r1 s1^-2 r1 s1", strands=2,
    ),
    # Final relator x^a = x^b, written as [x, c] with c = a b^-1.
    "K4": CatalogEntry(
        "K4", "virtual knot whose commutator subgroup is an amalgam",
        commutator=("x", "y^-1 x^-1 y x y^-1 x^-1 y^2 x^-1 y^-1 x y x^-1 y^-1"),
        diagram=_diagram(
            6,
            [(1, 2, 5, -1), (2, 3, 6, -1), (4, 5, 2, -1), (5, 6, 1, -1)],
            [((3, 4), (6, 1))],
        ),
        stable="y",
    ),
    # Closure of s1^-1 r1: a two component link.
    "HOPF": CatalogEntry(
        "HOPF", "virtual Hopf link, closure of s1^-1 r1",
        braid="s1^-1 r1", strands=2,
    ),
}


def get_entry(entry_id: str) -> CatalogEntry:
    try:
        return CATALOG[entry_id.upper()]
    except KeyError:
        raise PresentationError("unknown catalog entry %r, expected one of %s" % (
            entry_id, ", ".join(CATALOG),
        )) from None


@dataclass(frozen=True)
class CheckResult:
    entry: str
    name: str
    passed: bool
    detail: str = ""

    def asdict(self):
        return {"entry": self.entry, "check": self.name, "pass": self.passed, "detail": self.detail}


class Checker:
    """Collects the outcome of the comparisons made for one entry.
    """

    def __init__(self, entry: CatalogEntry):
        self.logger = get_logger(__name__, type(self))
        self.entry = entry
        self.results: List[CheckResult] = []

    def expect(self, name: str, actual, expected):
        passed = actual == expected
        detail = "%s" % (actual,) if passed else "expected %s, got %s" % (expected, actual)
        if not passed:
            self.logger.warning("%s %s: %s", self.entry.id, name, detail)
        self.results.append(CheckResult(self.entry.id, name, passed, detail))


def _quotients(pipeline, p, cls):
    return pipeline.lcs(p, cls).quotients()


def _z(rank, *torsion):
    return AbelianInvariants(rank, torsion)


def _check_kauffman(c: Checker, pipeline: Pipeline, p: Presentation):
    quotient = pipeline.simplify(kauffman_quotient(p))
    c.expect("kauffman-weight-2", str(_quotients(pipeline, quotient, 2)[1]), "0")


def _check_diagram(c: Checker, pipeline: Pipeline, stored: Presentation):
    p = pipeline.simplify(c.entry.group(pipeline))
    c.expect("diagram-abelianization", pipeline.abelianize(p), pipeline.abelianize(stored))
    c.expect("diagram-quotients", _quotients(pipeline, p, 4), _quotients(pipeline, stored, 4))


def check_k1(c: Checker, pipeline: Pipeline):
    raw = c.entry.group(pipeline)
    c.expect("abelianization", str(pipeline.abelianize(raw)), "Z^2")

    p = c.entry.one_relator(pipeline)
    c.expect("shape", (p.generators.names, len(p.relators)), (("x", "y"), 1))
    c.expect("leading-weight", leading_weight(p.relators[0], 5).weight, 4)
    c.expect("quotients", _quotients(pipeline, p, 5)[:4], [_z(2), _z(1), _z(2), _z(2)])

    report = pipeline.fbc(p, c.entry.stable)
    d = report.decomposition
    c.expect("fbc-rank", d.rank, 3)
    c.expect("action-matrix", d.action_matrix, IntMatrix.from_rows([(0, 1, 0), (0, 0, 1), (1, -3, 3)]))
    c.expect("verdict", (report.verdict.kind, report.verdict.exponent), (VerdictKind.RESIDUALLY_NILPOTENT, 3))

    kauffman = pipeline.simplify(kauffman_quotient(raw))
    c.expect("kauffman-abelianization", str(pipeline.abelianize(kauffman)), "Z")
    _check_kauffman(c, pipeline, raw)


def check_k2(c: Checker, pipeline: Pipeline):
    p = c.entry.one_relator(pipeline)
    c.expect("weight-4", _quotients(pipeline, p, 4)[3], _z(2, 4))

    report = pipeline.fbc(p, c.entry.stable)
    d = report.decomposition
    A = d.action_matrix
    I = IntMatrix.identity(d.rank)
    c.expect("fbc-rank", d.rank, 5)
    c.expect("action-last-row", A.row(d.rank - 1), (1, -1, -2, 2, 1))
    c.expect("char-poly", report.char_poly.factors, (((1, -1), 3), ((1, 1), 2)))

    unipotent_part = kernel_lattice(A - I, 3)
    involutive_part = kernel_lattice(A + I, 2)
    c.expect("kernel-ranks", (unipotent_part.rank, involutive_part.rank), (3, 2))
    c.expect("kernel-quotient", lattice_quotient(unipotent_part + involutive_part, d.rank), _z(0, 4, 16))

    verdict = report.verdict
    c.expect("verdict", verdict.kind, VerdictKind.OMEGA_SQUARED)
    c.expect("congruence-pair", verdict.m <= 7 and verdict.modulus % 2 == 0 and verdict.verify(A), True)

    _check_diagram(c, pipeline, p)
    _check_kauffman(c, pipeline, c.entry.group(pipeline))


def check_k3(c: Checker, pipeline: Pipeline):
    raw = c.entry.group(pipeline)
    p = pipeline.simplify(raw)
    c.expect("generators", p.generators.names, ("x1", "x2", "y"))
    c.expect("abelianization", str(pipeline.abelianize(p)), "Z^2")

    quotients = _quotients(pipeline, p, 4)
    c.expect("free-below-weight-4", quotients[:3], free_quotients(2, 3))
    c.expect("weight-4", quotients[3], _z(2, 4))

    y = raw.generators.generator("y")
    squared = pipeline.simplify(add_relators(raw, [y ** 2]))
    c.expect("y-squared-abelianization", str(pipeline.abelianize(squared)), "Z + Z_2")

    kauffman = pipeline.simplify(kauffman_quotient(raw))
    word = kauffman.word("x2^-1 x1")
    kauffman = eliminate_generator(introduce_generator(kauffman, "z", word), "x2")
    c.expect("kauffman-generators", kauffman.generators.names, ("x1", "z"))
    c.expect("kauffman-abelianization", str(pipeline.abelianize(kauffman)), "Z")
    c.expect("kauffman-weight-2", str(_quotients(pipeline, kauffman, 2)[1]), "0")


def check_k4(c: Checker, pipeline: Pipeline):
    p = c.entry.one_relator(pipeline)
    c.expect("weight-4", _quotients(pipeline, p, 4)[3], _z(2, 2))

    report = pipeline.fbc(p, c.entry.stable)
    expected = ShiftedRelator.parse(
        "x0^-1 x-1 x0^-1 x-1 x1 x0^-1 x1 x0 x1^-1 x0 x1^-1 x-1^-1 x0 x-1^-1", "y", "x",
    )
    c.expect("shifted-relator", [r.normalized() for r in report.shifted], [expected.normalized()])
    c.expect("fbc", report.decomposition, None)
    amalgam = report.amalgam
    c.expect("amalgam-edge", amalgam is not None and amalgam.edge(0), ["x1", "x2"])
    c.expect("amalgam-piece", amalgam is not None and amalgam.piece(0).rank, 3)

    _check_diagram(c, pipeline, p)
    _check_kauffman(c, pipeline, c.entry.group(pipeline))


def check_hopf(c: Checker, pipeline: Pipeline):
    c.expect("components", c.entry.braid_word().components(), 2)

    p = c.entry.simplified(pipeline)
    c.expect("shape", (p.rank, len(p.relators)), (3, 2))

    a, m = compare_representations(c.entry, pipeline)
    c.expect("abelianization-a", str(a), "Z^3")
    c.expect("abelianization-m", str(m), "Z^4")
    c.expect("comparison", DISTINCT_ABELIANIZATIONS if a != m else "", DISTINCT_ABELIANIZATIONS)


def compare_representations(entry: CatalogEntry, pipeline: Pipeline) -> Tuple[AbelianInvariants, AbelianInvariants]:
    """The abelianizations of the A and M groups of a braid entry.
    """
    return tuple(pipeline.abelianize(entry.group(pipeline, rep)) for rep in (Rep.A, Rep.M))


#: Maps entry ids to their checks.
CHECKS: Dict[str, Callable[[Checker, Pipeline], None]] = {
    "K1": check_k1,
    "K2": check_k2,
    "K3": check_k3,
    "K4": check_k4,
    "HOPF": check_hopf,
}


@dataclass(frozen=True)
class CatalogReport:
    results: Tuple[CheckResult, ...]

    @property
    def passed(self):
        return all(r.passed for r in self.results)

    def asdict(self):
        return {"pass": self.passed, "results": [r.asdict() for r in self.results]}


def check_entry(entry_id: str, pipeline: Optional[Pipeline] = None) -> List[CheckResult]:
    """Run an entry's checks.  An exception counts as a failed check
    named ``error``.
    """
    pipeline = pipeline or get_pipeline()
    entry = get_entry(entry_id)
    checker = Checker(entry)
    try:
        CHECKS[entry.id](checker, pipeline)
    except Exception as e:
        checker.logger.error("%s raised while being checked.", entry.id, exc_info=True)
        checker.results.append(CheckResult(entry.id, "error", False, "%s: %s" % (type(e).__name__, e)))
    return checker.results


def check_catalog(
        entry_ids: Optional[Sequence[str]] = None, *,
        pipeline: Optional[Pipeline] = None, workers: Optional[int] = None,
) -> CatalogReport:
    """Check catalog entries on a thread pool.  Results come back in
    entry order no matter which entry finishes first.
    """
    pipeline = pipeline or get_pipeline()
    entry_ids = [get_entry(i).id for i in (entry_ids or CATALOG)]
    with ThreadPoolExecutor(max_workers=workers or pipeline.settings.workers) as executor:
        batches = list(executor.map(lambda i: check_entry(i, pipeline), entry_ids))
    return CatalogReport(tuple(r for batch in batches for r in batch))
