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

import inspect
import logging
import sys

#: The log format shared by the CLI and the test suite.
LOGFORMAT = "[%(asctime)s] [%(threadName)s] [%(name)s] [%(levelname)s] %(message)s"

#: Maps the number of -v flags to a root log level.
VERBOSITY = {
    0: logging.INFO,
    1: logging.DEBUG,
}


def get_logger(module, name=None):
    """Get a logger named after a module and, optionally, a class
    within it.

    Parameters:
      module(str): Usually ``__name__``.
      name(str|type): A class or a suffix.

    Returns:
      logging.Logger
    """
    logger_fqn = module
    if name is not None:
        if inspect.isclass(name):
            name = name.__name__
        logger_fqn += "." + name

    return logging.getLogger(logger_fqn)


def setup_logging(verbosity=0, *, stream=sys.stderr):
    level = VERBOSITY.get(verbosity, logging.DEBUG)
    logging.basicConfig(level=level, format=LOGFORMAT, stream=stream)
    # sympy's own loggers are chatty at DEBUG.
    logging.getLogger("sympy").setLevel(max(level, logging.INFO))
    return get_logger("vkgroups")
