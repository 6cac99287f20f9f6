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

import abc
import json
import typing

from .errors import DecodeError

#: Represents a report or an input document as plain data.
ReportData = typing.Dict[str, typing.Any]


class Encoder(abc.ABC):
    """Base class for report encoders.
    """

    @abc.abstractmethod
    def encode(self, data: ReportData) -> bytes:  # pragma: no cover
        """Convert report data into a bytestring.
        """
        raise NotImplementedError

    @abc.abstractmethod
    def decode(self, data: bytes) -> ReportData:  # pragma: no cover
        """Convert a bytestring into report data.
        """
        raise NotImplementedError


class JSONEncoder(Encoder):
    """Encodes reports as compact JSON.  This is the default encoder.
    """

    def encode(self, data: ReportData) -> bytes:
        return json.dumps(data, separators=(",", ":")).encode("utf-8")

    def decode(self, data: bytes) -> ReportData:
        try:
            data_str = data.decode("utf-8")
        except UnicodeDecodeError as e:
            raise DecodeError("failed to decode data %r" % (data,), data, e) from None

        try:
            return json.loads(data_str)
        except json.decoder.JSONDecodeError as e:
            raise DecodeError("failed to decode document %r" % (data_str,), data_str, e) from None


#: The global encoder instance.
global_encoder: Encoder = JSONEncoder()


def get_encoder() -> Encoder:
    """Get the global encoder object.

    Returns:
      Encoder
    """
    global global_encoder
    return global_encoder


def set_encoder(encoder: Encoder) -> None:
    """Set the global encoder object.

    Parameters:
      encoder(Encoder): The encoder instance to use when reading
        documents and writing reports.
    """
    global global_encoder
    global_encoder = encoder


def read_document(path: str) -> ReportData:
    """Read and decode a document with the global encoder.

    Raises:
      DecodeError: If the file is missing or malformed.
    """
    try:
        with open(path, "rb") as f:
            data = f.read()
    except OSError as e:
        raise DecodeError("failed to read %r" % (path,), path, e) from None
    return global_encoder.decode(data)
