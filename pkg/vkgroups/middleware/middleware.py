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

class MiddlewareError(Exception):
    """Base class for middleware errors.  Raising one from a
    ``before_stage`` hook aborts the stage.
    """


class Middleware:
    """Base class for pipeline middleware.  The default implementations
    for all hooks are no-ops and subclasses may implement whatever
    subset of hooks they like.
    """

    def after_pipeline_boot(self, pipeline):
        """Called once, right after the middleware is added to a
        pipeline.
        """

    def before_stage(self, pipeline, stage):
        """Called before a stage runs.

        Raises:
          MiddlewareError: If the stage should not run.
        """

    def after_stage(self, pipeline, stage, *, result=None, exception=None):
        """Called after a stage has run, whether it succeeded or not.
        """
