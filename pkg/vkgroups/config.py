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

from dataclasses import asdict, dataclass, fields, replace
from typing import Optional

from .common import getenv_int
from .errors import ConfigError, DecodeError
from .encoder import read_document
from .lcs import CLASS_CAP

#: Maps settings fields to the environment variables that override them.
ENVIRONMENT = {
    "class_bound": "VKGROUPS_CLASS",
    "tietze_budget": "VKGROUPS_TIETZE_BUDGET",
    "m_max": "VKGROUPS_M_MAX",
    "workers": "VKGROUPS_WORKERS",
}

#: Maps settings fields to their keys in a settings file.
FILE_KEYS = {
    "class": "class_bound",
    "tietzeBudget": "tietze_budget",
    "mMax": "m_max",
    "workers": "workers",
}


@dataclass(frozen=True)
class Settings:
    """Runtime settings.  Later sources override earlier ones:
    defaults, then the environment, then a settings file, then
    explicit command line flags.

    Parameters:
      class_bound(int): The nilpotency class lcs computes by default.
      tietze_budget(int): The maximum number of Tietze eliminations.
      m_max(int): The largest m tried in congruence pair searches.
      workers(int): The number of threads ``check`` runs entries on.
    """

    class_bound: int = 5
    tietze_budget: int = 1000
    m_max: int = 32
    workers: int = 4

    def __post_init__(self):
        for field in fields(self):
            value = getattr(self, field.name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise ConfigError("setting %r must be an integer, not %r" % (field.name, value))
            if value < 1:
                raise ConfigError("setting %r must be positive, not %r" % (field.name, value))

        if self.class_bound > CLASS_CAP:
            raise ConfigError("setting 'class_bound' is capped at %d, not %r" % (CLASS_CAP, self.class_bound))

    def override(self, **changes) -> "Settings":
        """Replace the settings that aren't ``None``.
        """
        return replace(self, **{k: v for k, v in changes.items() if v is not None})

    def asdict(self):
        return asdict(self)


def settings_from_env(base: Optional[Settings] = None) -> Settings:
    base = base or Settings()
    try:
        changes = {name: getenv_int(var) for name, var in ENVIRONMENT.items()}
    except ValueError as e:
        raise ConfigError(str(e)) from None
    return base.override(**changes)


def settings_from_file(path: str, base: Optional[Settings] = None) -> Settings:
    """Apply a JSON settings file on top of ``base``.

    Raises:
      ConfigError: If the file can't be decoded or has unknown keys.
    """
    base = base or Settings()
    try:
        data = read_document(path)
    except DecodeError as e:
        raise ConfigError("failed to load settings from %r: %s" % (path, e)) from None

    if not isinstance(data, dict):
        raise ConfigError("settings file %r must hold an object" % path)

    unknown = sorted(set(data) - set(FILE_KEYS))
    if unknown:
        raise ConfigError("unknown settings in %r: %s" % (path, ", ".join(unknown)))

    return replace(base, **{FILE_KEYS[key]: value for key, value in data.items()})


def load_settings(path: Optional[str] = None, **flags) -> Settings:
    """Build settings from every source in precedence order.
    """
    settings = settings_from_env()
    if path is not None:
        settings = settings_from_file(path, settings)
    return settings.override(**flags)
