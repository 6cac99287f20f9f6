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

from .braids import BraidLetter, BraidWord, Rep, parse_braid, phi_a, phi_m, represent, verify_representation
from .catalog import CATALOG, CatalogEntry, check_catalog, get_entry
from .config import Settings, load_settings
from .encoder import Encoder, JSONEncoder, get_encoder, set_encoder
from .errors import (
    AlphabetMismatch, ClassOutOfRange, ConfigError, DecodeError, DiagramError, ExponentSumError, NotALieElement,
    ParseError, PresentationError, UnsupportedRelator, VKGroupsError
)
from .fbc import (
    AmalgamReport, FbcDecomposition, ShiftedRelator, Verdict, VerdictKind, amalgam_report, fbc_decompose,
    residual_nilpotence_verdict, rewrite_along_z, semidirect_presentation
)
from .lattice import AbelianInvariants, IntMatrix, char_poly, find_congruence_pair, hnf, kernel_lattice, snf
from .lcs import compare_with_free, lcs_quotients
from .logging import get_logger
from .magnus import leading_weight, magnus
from .middleware import Middleware
from .pipeline import Pipeline, get_pipeline, set_pipeline
from .presentations import (
    Diagram, Presentation, abelianization, add_relators, group_from_braid, group_from_diagram, kauffman_quotient,
    tietze_simplify
)
from .words import Alphabet, Endo, Word

__all__ = [
    # Words
    "Alphabet", "Endo", "Word",

    # Braids
    "BraidLetter", "BraidWord", "Rep", "parse_braid", "phi_a", "phi_m", "represent", "verify_representation",

    # Presentations
    "Diagram", "Presentation", "abelianization", "add_relators", "group_from_braid", "group_from_diagram",
    "kauffman_quotient", "tietze_simplify",

    # Lower central series
    "compare_with_free", "lcs_quotients", "leading_weight", "magnus",

    # Lattices
    "AbelianInvariants", "IntMatrix", "char_poly", "find_congruence_pair", "hnf", "kernel_lattice", "snf",

    # Free-by-cyclic structure
    "AmalgamReport", "FbcDecomposition", "ShiftedRelator", "Verdict", "VerdictKind",
    "amalgam_report", "fbc_decompose", "residual_nilpotence_verdict", "rewrite_along_z",
    "semidirect_presentation",

    # Catalog
    "CATALOG", "CatalogEntry", "check_catalog", "get_entry",

    # Configuration
    "Settings", "load_settings",

    # Encoding
    "Encoder", "JSONEncoder", "get_encoder", "set_encoder",

    # Errors
    "VKGroupsError",
    "AlphabetMismatch", "ClassOutOfRange", "ConfigError", "DecodeError", "DiagramError",
    "ExponentSumError", "NotALieElement", "ParseError", "PresentationError", "UnsupportedRelator",

    # Logging
    "get_logger",

    # Middleware
    "Middleware",

    # Pipelines
    "Pipeline", "get_pipeline", "set_pipeline",
]

__version__ = "0.1.0"
