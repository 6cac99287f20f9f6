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

from typing import Optional

from .braids import BraidWord, Rep, verify_representation
from .config import Settings
from .fbc import FbcReport, analyze
from .lcs import GradedLattice, check_class, lcs_lattice
from .logging import get_logger
from .middleware import Middleware, MiddlewareError, default_middleware
from .presentations import Diagram, Presentation, TietzeSimplifier, abelianization, group_from_braid, group_from_diagram

#: The global pipeline instance.
global_pipeline = None


def get_pipeline() -> "Pipeline":
    """Get the global pipeline instance, creating one with the
    default middleware if there is none yet.

    Returns:
      Pipeline
    """
    global global_pipeline
    if global_pipeline is None:
        set_pipeline(Pipeline())
    return global_pipeline


def set_pipeline(pipeline: "Pipeline"):
    """Configure the global pipeline instance.

    Parameters:
      pipeline(Pipeline): The pipeline to use by default.
    """
    global global_pipeline
    global_pipeline = pipeline


class Pipeline:
    """Runs the stages of an analysis and lets middleware observe
    each of them.

    Parameters:
      middleware(list[Middleware]): The set of middleware that apply
        to this pipeline.  If you supply this parameter, you are
        expected to declare *all* middleware.  Most of the time,
        you'll want to use :meth:`.add_middleware` instead.
      settings(Settings): Defaults for class bounds and budgets.
    """

    def __init__(self, middleware=None, settings: Optional[Settings] = None):
        self.logger = get_logger(__name__, type(self))
        self.settings = settings or Settings()
        self.middleware = []

        if middleware is None:
            middleware = [m() for m in default_middleware]

        for m in middleware:
            self.add_middleware(m)

    def emit_before(self, signal, *args, **kwargs):
        signal = "before_" + signal
        for middleware in self.middleware:
            try:
                getattr(middleware, signal)(self, *args, **kwargs)
            except MiddlewareError:
                raise
            except Exception:
                self.logger.critical("Unexpected failure in %s of %r.", signal, middleware, exc_info=True)

    def emit_after(self, signal, *args, **kwargs):
        signal = "after_" + signal
        for middleware in reversed(self.middleware):
            try:
                getattr(middleware, signal)(self, *args, **kwargs)
            except Exception:
                self.logger.critical("Unexpected failure in %s of %r.", signal, middleware, exc_info=True)

    def add_middleware(self, middleware: Middleware, *, before=None, after=None):
        """Add a middleware object to this pipeline.  The middleware is
        appended to the end of the middleware list by default.

        Raises:
          ValueError: When either ``before`` or ``after`` refer to a
            middleware that hasn't been registered yet.
        """
        assert not (before and after), \
            "provide either 'before' or 'after', but not both"

        if before or after:
            for i, m in enumerate(self.middleware):  # noqa
                if isinstance(m, before or after):
                    break
            else:
                raise ValueError("Middleware %r not found" % (before or after))

            self.middleware.insert(i if before else i + 1, middleware)
        else:
            self.middleware.append(middleware)

        try:
            middleware.after_pipeline_boot(self)
        except Exception:
            self.logger.critical("Unexpected failure in after_pipeline_boot of %r.", middleware, exc_info=True)

    def get_middleware(self, kind):
        """The first registered middleware of a given type, or None.
        """
        return next((m for m in self.middleware if isinstance(m, kind)), None)

    def run(self, stage, fn, *args, **kwargs):
        """Run ``fn`` as the named stage.  Middleware see the result or
        the exception, which is re-raised.
        """
        self.emit_before("stage", stage)
        self.logger.debug("Running stage %r...", stage)
        try:
            result = fn(*args, **kwargs)
        except BaseException as e:
            self.emit_after("stage", stage, exception=e)
            raise

        self.emit_after("stage", stage, result=result)
        return result

    def group(self, rep: Rep, braid: BraidWord) -> Presentation:
        return self.run("group", group_from_braid, rep, braid)

    def diagram_group(self, diagram: Diagram) -> Presentation:
        return self.run("diagram_group", group_from_diagram, diagram)

    def simplify(self, p: Presentation) -> Presentation:
        simplifier = TietzeSimplifier(self.settings.tietze_budget)
        return self.run("simplify", simplifier.simplify, p)

    def abelianize(self, p: Presentation):
        return self.run("abelianize", abelianization, p)

    def lcs(self, p: Presentation, cls: Optional[int] = None) -> GradedLattice:
        if cls is None:
            cls = self.settings.class_bound
        check_class(cls)
        return self.run("lcs", lcs_lattice, p, cls)

    def fbc(self, p: Presentation, stable: str, m_max: Optional[int] = None) -> FbcReport:
        if m_max is None:
            m_max = self.settings.m_max
        return self.run("fbc", analyze, p, stable, m_max)

    def verify_representation(self, rep: Rep, strands: int):
        return self.run("verify_representation", verify_representation, rep, strands)
