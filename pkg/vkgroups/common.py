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

from os import getenv
from time import time


def getenv_int(name):
    """Parse an optional environment variable as an integer.
    """
    v = getenv(name, None)
    if v is None:
        return None
    try:
        return int(v)
    except ValueError:
        raise ValueError("invalid integer value for env var %r: %r" % (name, v)) from None


def current_millis():
    """Returns the current UNIX time in milliseconds.
    """
    return int(time() * 1000)


def extgcd(a, b):
    """Extended Euclid.

    Returns:
      tuple: ``(g, s, t)`` with ``g = s*a + t*b`` and ``g >= 0``.
    """
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t

    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def valuation(n, p):
    """The p-adic valuation of a nonzero integer.
    """
    if n == 0:
        raise ValueError("valuation of zero is undefined")

    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v
