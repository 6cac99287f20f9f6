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


class VKGroupsError(Exception):  # pragma: no cover
    """Base class for all vkgroups errors.
    """

    def __init__(self, message):
        self.message = message

    def __str__(self):
        return str(self.message) or repr(self.message)


class ParseError(VKGroupsError):
    """Raised when word, braid or diagram text can't be parsed.
    """

    def __init__(self, message, text=None):
        super().__init__(message)
        self.text = text


class AlphabetMismatch(VKGroupsError):
    """Raised when words or endomorphisms over different alphabets are
    combined.
    """


class DiagramError(VKGroupsError):
    """Raised when a diagram isn't a well-formed closed diagram.
    """


class PresentationError(VKGroupsError):
    """Raised when a presentation lacks something an operation needs.
    """


class ClassOutOfRange(VKGroupsError):
    """Raised when a nilpotency class outside the supported range is
    requested.
    """


class NotALieElement(VKGroupsError):
    """Raised when a homogeneous series component can't be written in
    the Lyndon basis.  Group elements never trigger this.
    """


class UnsupportedRelator(VKGroupsError):
    """Raised when a relator family falls outside what a structural
    analysis handles.
    """


class ExponentSumError(VKGroupsError):
    """Raised when a relator has a nonzero exponent sum in the stable
    generator of a cyclic cover.
    """

    def __init__(self, message, relator):
        super().__init__(message)
        self.relator = relator


class ConfigError(VKGroupsError):
    """Raised when settings can't be loaded.
    """


class DecodeError(VKGroupsError):
    """Raised when a report or input document fails to decode.
    """

    def __init__(self, message, data, error):
        super().__init__(message)
        self.data = data
        self.error = error
