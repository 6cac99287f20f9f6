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

import argparse
import sys

from vkgroups import __version__
from vkgroups.braids import Rep, parse_braid
from vkgroups.catalog import DISTINCT_ABELIANIZATIONS, check_catalog, compare_representations, get_entry
from vkgroups.config import load_settings
from vkgroups.encoder import get_encoder, read_document
from vkgroups.errors import PresentationError, VKGroupsError
from vkgroups.lcs import expected_local_torsion, first_difference, free_quotients, local_torsion
from vkgroups.logging import setup_logging
from vkgroups.middleware import Prometheus
from vkgroups.pipeline import Pipeline, set_pipeline
from vkgroups.presentations import Diagram, Presentation

#: The exit codes the command line returns.
RET_OK = 0  # The command ran and every check passed.
RET_CHECK = 1  # A catalog or representation check failed.
RET_INPUT = 2  # Bad input: unparsable text, bad files or invalid arguments.

#: Printed when two abelianizations don't tell groups apart.
SAME_ABELIANIZATIONS = "not distinguished by abelianization"

#: Message printed after the help text.
HELP_EPILOG = """\
examples:
  # Print the raw and simplified group of a catalog knot.
  $ vkgroups group --knot K1

  # Build the M group of a braid on two strands.
  $ vkgroups group --braid "s1^-1 r1" --strands 2 --rep M

  # Lower central quotients up to class 5, with a 2-primary cross-check.
  $ vkgroups lcs --knot K2 --class 5 --oracle 2

  # Compare the abelianizations of both representations.
  $ vkgroups abelianize --knot HOPF --compare-reps

  # Free-by-cyclic decomposition along x.
  $ vkgroups fbc --knot K1 --stable x

  # Check every catalog entry and keep stage metrics.
  $ vkgroups check --metrics-file vkgroups.prom
"""


def add_source_arguments(parser, *, rep=True):
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--knot", help="a catalog entry (K1, K2, K3, K4 or HOPF)")
    source.add_argument("--braid", help="a virtual braid word such as 's1^-2 r1'")
    source.add_argument("--diagram", metavar="FILE", help="a diagram document")
    source.add_argument("--presentation", metavar="FILE", help="a presentation document")
    parser.add_argument(
        "--strands", "-n", type=int, default=2,
        help="the number of strands of --braid (default: 2)",
    )
    if rep:
        parser.add_argument(
            "--rep", choices=[r.value for r in Rep], default=Rep.A.value,
            help="the representation braids are closed with (default: A)",
        )


def make_argument_parser():
    parser = argparse.ArgumentParser(
        prog="vkgroups",
        description="Compute groups of virtual knots and their lower central series.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=HELP_EPILOG,
    )
    output = parser.add_mutually_exclusive_group()
    output.add_argument(
        "--json", dest="text", action="store_false", default=False,
        help="print reports as JSON (default)",
    )
    output.add_argument(
        "--text", dest="text", action="store_true",
        help="print reports as indented text",
    )
    parser.add_argument(
        "--config", metavar="FILE",
        help="a JSON settings file (default: none)",
    )
    parser.add_argument(
        "--tietze-budget", type=int,
        help="the maximum number of Tietze eliminations (default: 1000)",
    )
    parser.add_argument(
        "--metrics-file", metavar="FILE",
        help="write stage metrics in Prometheus text format to a file",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--verbose", "-v", default=0, action="count", help="turn on verbose log output")

    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    group = commands.add_parser("group", help="print the raw and simplified presentations")
    add_source_arguments(group)

    lcs = commands.add_parser("lcs", help="lower central series quotients")
    add_source_arguments(lcs)
    lcs.add_argument(
        "--class", "-c", dest="cls", type=int,
        help="the nilpotency class to compute up to (default: 5)",
    )
    lcs.add_argument(
        "--oracle", metavar="P", type=int,
        help="cross-check the p-primary torsion of every weight",
    )

    abelianize = commands.add_parser("abelianize", help="abelian invariants")
    add_source_arguments(abelianize)
    abelianize.add_argument(
        "--compare-reps", action="store_true",
        help="compare the abelianizations of the A and M groups of a braid",
    )

    fbc = commands.add_parser("fbc", help="free-by-cyclic decomposition and verdict")
    add_source_arguments(fbc)
    fbc.add_argument("--stable", "-s", help="the generator the group maps onto Z by")
    fbc.add_argument(
        "--m-max", type=int,
        help="the largest power tried by the congruence search (default: 32)",
    )

    verify = commands.add_parser("verify-rep", help="check a representation against every defining relation")
    verify.add_argument("--rep", choices=[r.value for r in Rep], default=Rep.A.value)
    verify.add_argument("--strands", "-n", type=int, default=3, help="the number of strands (default: 3)")

    check = commands.add_parser("check", help="check the catalog against its known results")
    check.add_argument("knots", metavar="knot", nargs="*", help="entries to check (default: all)")
    check.add_argument("--workers", "-w", type=int, help="the number of entries checked at once (default: 4)")
    return parser


def load_group(args, pipeline):
    """The raw group named by the source arguments.
    """
    rep = Rep(getattr(args, "rep", Rep.A.value))
    if args.knot:
        return get_entry(args.knot).group(pipeline, rep)
    if args.braid is not None:
        return pipeline.group(rep, parse_braid(args.braid, args.strands))
    if args.diagram:
        if rep is not Rep.A:
            raise PresentationError("diagrams only give the A representation")
        return pipeline.diagram_group(Diagram.from_dict(read_document(args.diagram)))
    return Presentation.from_dict(read_document(args.presentation))


def load_presentation(args, pipeline):
    """The presentation an analysis runs on.  Catalog knots use their
    stored relator, presentation files are taken as they are and
    everything else is simplified first.
    """
    if args.knot and Rep(args.rep) is Rep.A:
        return get_entry(args.knot).one_relator(pipeline)
    if args.presentation:
        return load_group(args, pipeline)
    return pipeline.simplify(load_group(args, pipeline))


def cmd_group(args, pipeline):
    raw = load_group(args, pipeline)
    if args.knot:
        simplified = get_entry(args.knot).simplified(pipeline, Rep(args.rep))
    else:
        simplified = pipeline.simplify(raw)
    return RET_OK, {
        "raw": raw.asdict(),
        "simplified": simplified.asdict(),
        "incomplete": simplified.incomplete,
    }


def cmd_lcs(args, pipeline):
    p = load_presentation(args, pipeline)
    lattice = pipeline.lcs(p, args.cls)
    quotients = lattice.quotients()
    rank = quotients[0].free_rank
    report = {
        "presentation": p.asdict(),
        "class": lattice.cls,
        "quotients": [dict(weight=w, **q.asdict()) for w, q in enumerate(quotients, start=1)],
        "free": [q.asdict() for q in free_quotients(rank, lattice.cls)],
        "firstDifference": first_difference(quotients, rank),
    }
    if args.oracle is not None:
        if args.oracle < 2:
            raise ValueError("--oracle needs a prime, not %r" % args.oracle)
        report["oracle"] = [{
            "weight": w,
            "observed": local_torsion(lattice, w, args.oracle).asdict(),
            "expected": expected_local_torsion(q, args.oracle).asdict(),
        } for w, q in enumerate(quotients, start=1)]
    return RET_OK, report


def cmd_abelianize(args, pipeline):
    if not args.compare_reps:
        invariants = pipeline.abelianize(load_group(args, pipeline))
        return RET_OK, {"abelianization": invariants.asdict(), "text": str(invariants)}

    if args.knot:
        a, m = compare_representations(get_entry(args.knot), pipeline)
    elif args.braid is not None:
        braid = parse_braid(args.braid, args.strands)
        a, m = (pipeline.abelianize(pipeline.group(rep, braid)) for rep in (Rep.A, Rep.M))
    else:
        raise PresentationError("--compare-reps needs a braid or a catalog knot")

    return RET_OK, {
        "A": {"abelianization": a.asdict(), "text": str(a)},
        "M": {"abelianization": m.asdict(), "text": str(m)},
        "comparison": DISTINCT_ABELIANIZATIONS if a != m else SAME_ABELIANIZATIONS,
    }


def cmd_fbc(args, pipeline):
    stable = args.stable
    if stable is None and args.knot:
        stable = get_entry(args.knot).stable
    if stable is None:
        raise PresentationError("--stable is required for this source")

    p = load_presentation(args, pipeline)
    report = pipeline.fbc(p, stable, args.m_max)
    return RET_OK, dict(presentation=p.asdict(), **report.asdict())


def cmd_verify_rep(args, pipeline):
    report = pipeline.verify_representation(Rep(args.rep), args.strands)
    return RET_OK if report.passed else RET_CHECK, {
        "rep": report.rep.value,
        "strands": report.strands,
        "pass": report.passed,
        "checks": report.asdict(),
    }


def cmd_check(args, pipeline):
    report = check_catalog(args.knots or None, pipeline=pipeline, workers=args.workers)
    return RET_OK if report.passed else RET_CHECK, report.asdict()


#: Maps subcommands to their implementations.
COMMANDS = {
    "group": cmd_group,
    "lcs": cmd_lcs,
    "abelianize": cmd_abelianize,
    "fbc": cmd_fbc,
    "verify-rep": cmd_verify_rep,
    "check": cmd_check,
}


def format_text(data, indent=0):
    """Render report data as indented ``key: value`` lines.
    """
    pad = "  " * indent
    lines = []
    if isinstance(data, dict):
        for key, value in data.items():
            if isinstance(value, (dict, list)) and value:
                lines.append("%s%s:" % (pad, key))
                lines.extend(format_text(value, indent + 1))
            else:
                lines.append("%s%s: %s" % (pad, key, _scalar(value)))
    elif isinstance(data, list):
        for item in data:
            if isinstance(item, (dict, list)):
                lines.append("%s-" % pad)
                lines.extend(format_text(item, indent + 1))
            else:
                lines.append("%s- %s" % (pad, _scalar(item)))
    else:
        lines.append(pad + _scalar(data))
    return lines


def _scalar(value):
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if value == [] or value == {}:
        return "none"
    return str(value)


def main(args=None):
    args = args or make_argument_parser().parse_args()
    logger = setup_logging(args.verbose)

    try:
        settings = load_settings(
            args.config,
            class_bound=getattr(args, "cls", None),
            tietze_budget=args.tietze_budget,
            m_max=getattr(args, "m_max", None),
            workers=getattr(args, "workers", None),
        )
        pipeline = Pipeline(settings=settings)
        set_pipeline(pipeline)
        code, report = COMMANDS[args.command](args, pipeline)
    except (VKGroupsError, ValueError) as e:
        logger.error("%s", e)
        return RET_INPUT

    if args.text:
        sys.stdout.write("\n".join(format_text(report)) + "\n")
    else:
        sys.stdout.write(get_encoder().encode(report).decode("utf-8") + "\n")

    if args.metrics_file:
        pipeline.get_middleware(Prometheus).write(args.metrics_file)

    return code
