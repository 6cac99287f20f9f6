import json

import pytest

from vkgroups.config import Settings, load_settings, settings_from_env, settings_from_file
from vkgroups.errors import ConfigError


@pytest.fixture
def settings_file(tmp_path):
    def write(data):
        path = tmp_path / "settings.json"
        path.write_text(json.dumps(data))
        return str(path)

    return write


def test_default_settings():
    assert Settings().asdict() == {"class_bound": 5, "tietze_budget": 1000, "m_max": 32, "workers": 4}


@pytest.mark.parametrize("given", [
    {"class_bound": 0},
    {"class_bound": 7},
    {"workers": -1},
    {"m_max": "8"},
    {"tietze_budget": True},
])
def test_invalid_settings_are_rejected(given):
    with pytest.raises(ConfigError):
        Settings(**given)


def test_environment_variables_override_defaults(monkeypatch):
    # Given that the class bound and worker count are set in the environment
    monkeypatch.setenv("VKGROUPS_CLASS", "3")
    monkeypatch.setenv("VKGROUPS_WORKERS", "2")

    # When I load settings from the environment
    settings = settings_from_env()

    # Then those two should be overridden
    assert settings == Settings(class_bound=3, workers=2)


def test_malformed_environment_variables_raise_config_errors(monkeypatch):
    monkeypatch.setenv("VKGROUPS_M_MAX", "lots")
    with pytest.raises(ConfigError):
        settings_from_env()


def test_settings_files_use_camel_case_keys(settings_file):
    path = settings_file({"class": 4, "tietzeBudget": 50})
    assert settings_from_file(path) == Settings(class_bound=4, tietze_budget=50)


@pytest.mark.parametrize("given", [
    {"klass": 4},
    {"class": None},
    {"mMax": 0},
    [1, 2],
])
def test_bad_settings_files_raise_config_errors(settings_file, given):
    with pytest.raises(ConfigError):
        settings_from_file(settings_file(given))


def test_missing_settings_files_raise_config_errors(tmp_path):
    with pytest.raises(ConfigError):
        settings_from_file(str(tmp_path / "nope.json"))


def test_flags_take_precedence_over_files_and_environment(monkeypatch, settings_file):
    # Given a class bound in the environment, in a file and on the command line
    monkeypatch.setenv("VKGROUPS_CLASS", "2")
    monkeypatch.setenv("VKGROUPS_M_MAX", "9")
    path = settings_file({"class": 3, "workers": 1})

    # When I load settings from all of them
    settings = load_settings(path, class_bound=4, tietze_budget=None)

    # Then the flag should win, and unset flags should leave the rest alone
    assert settings == Settings(class_bound=4, tietze_budget=1000, m_max=9, workers=1)
