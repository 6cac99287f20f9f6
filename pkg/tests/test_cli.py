import json

import pytest

from vkgroups.cli import RET_CHECK, RET_INPUT, RET_OK, format_text


def run_json(run_cli, *args):
    proc = run_cli(*args)
    return proc, json.loads(proc.stdout) if proc.returncode != RET_INPUT else None


def test_cli_prints_catalog_groups(run_cli):
    # Given the Hopf link from the catalog
    # When I print its group
    proc, report = run_json(run_cli, "group", "--knot", "HOPF")

    # Then the command should succeed
    assert proc.returncode == RET_OK

    # And the simplified group should have 3 generators and 2 relators
    assert len(report["simplified"]["generators"]) == 3
    assert len(report["simplified"]["relators"]) == 2
    assert report["incomplete"] is False


def test_cli_builds_the_group_of_the_trivial_braid(run_cli):
    proc, report = run_json(run_cli, "group", "--braid", "", "--strands", "1")
    assert proc.returncode == RET_OK
    assert report["raw"] == {"generators": ["x1", "y"], "relators": []}


def test_cli_abelianizes_braids(run_cli):
    proc, report = run_json(run_cli, "abelianize", "--braid", "s1^-2 r1", "--strands", "2")
    assert proc.returncode == RET_OK
    assert report["text"] == "Z^2"


def test_cli_compares_representations(run_cli):
    proc, report = run_json(run_cli, "abelianize", "--knot", "HOPF", "--compare-reps")
    assert proc.returncode == RET_OK
    assert report["A"]["text"] == "Z^3"
    assert report["M"]["text"] == "Z^4"
    assert report["comparison"] == "not isomorphic (distinct abelianizations)"


def test_cli_decomposes_k1(run_cli):
    # Given K1 and its stable generator
    # When I run the fbc command
    proc, report = run_json(run_cli, "fbc", "--knot", "K1", "--stable", "x")

    # Then the kernel should have rank 3 and the verdict should be residual nilpotence
    assert proc.returncode == RET_OK
    assert report["decomposition"]["rank"] == 3
    assert report["decomposition"]["actionMatrix"][2] == ["1", "-3", "3"]
    assert report["decomposition"]["verdict"]["kind"] == "ResiduallyNilpotent"
    assert report["decomposition"]["verdict"]["certificate"] == {"exponent": 3}


def test_cli_computes_lower_central_quotients_with_an_oracle(run_cli):
    proc, report = run_json(run_cli, "lcs", "--knot", "K1", "--class", "4", "--oracle", "2")
    assert proc.returncode == RET_OK
    assert [q["freeRank"] for q in report["quotients"]] == [2, 1, 2, 2]
    assert report["firstDifference"] == 4
    assert all(entry["observed"] == entry["expected"] for entry in report["oracle"])


def test_cli_reads_presentation_files(tmp_path, run_cli):
    # Given a presentation of Z^2 on disk
    path = tmp_path / "z2.json"
    path.write_text(json.dumps({"generators": ["a", "b"], "relators": ["a b a^-1 b^-1"]}))

    # When I ask for its quotients
    proc, report = run_json(run_cli, "lcs", "--presentation", str(path), "--class", "2")

    # Then weight two should vanish
    assert proc.returncode == RET_OK
    assert report["quotients"][1] == {"weight": 2, "freeRank": 0, "torsion": []}


def test_cli_computes_quotients_of_the_trivial_group(tmp_path, run_cli):
    # Given the presentation with no generators on disk
    path = tmp_path / "trivial.json"
    path.write_text(json.dumps({"generators": [], "relators": []}))

    # When I ask for its quotients with an oracle
    proc, report = run_json(run_cli, "lcs", "--presentation", str(path), "--class", "3", "--oracle", "2")

    # Then every quotient should be trivial
    assert proc.returncode == RET_OK
    assert [q["freeRank"] for q in report["quotients"]] == [0, 0, 0]
    assert report["firstDifference"] is None
    assert all(entry["observed"] == entry["expected"] for entry in report["oracle"])


def test_cli_verifies_representations(run_cli):
    proc, report = run_json(run_cli, "verify-rep", "--rep", "M", "--strands", "4")
    assert proc.returncode == RET_OK
    assert report["pass"] is True
    assert {check["relation"] for check in report["checks"]} >= {"braid", "mixed", "far-mixed"}


def test_cli_checks_catalog_entries(tmp_path, run_cli):
    # Given a metrics file path
    metrics = tmp_path / "vkgroups.prom"

    # When I check the Hopf link and K1
    proc, report = run_json(run_cli, "--metrics-file", str(metrics), "check", "HOPF", "K1", "--workers", "2")

    # Then every check should pass
    assert proc.returncode == RET_OK
    assert report["pass"] is True

    # And stage metrics should have been written
    assert 'vkgroups_stages_total{stage="group"}' in metrics.read_text()


@pytest.mark.parametrize("args", [
    ("group", "--braid", "s1 q2", "--strands", "2"),
    ("group", "--braid", "s3", "--strands", "2"),
    ("group", "--knot", "K9"),
    ("lcs", "--knot", "K1", "--class", "9"),
    ("fbc", "--braid", "s1", "--strands", "2"),
    ("verify-rep", "--strands", "7"),
    ("group",),
])
def test_cli_exits_with_2_on_bad_input(run_cli, args):
    proc = run_cli(*args)
    assert proc.returncode == RET_INPUT


def test_cli_reports_bad_settings_files(tmp_path, run_cli):
    path = tmp_path / "settings.json"
    path.write_text('{"klass": 3}')
    assert run_cli("--config", str(path), "group", "--knot", "K1").returncode == RET_INPUT


def test_cli_prints_text_reports(run_cli):
    proc = run_cli("--text", "abelianize", "--knot", "HOPF", "--compare-reps")
    assert proc.returncode == RET_OK
    assert b"comparison: not isomorphic (distinct abelianizations)" in proc.stdout


def test_check_failures_use_their_own_exit_code():
    assert RET_CHECK not in (RET_OK, RET_INPUT)


@pytest.mark.parametrize("given,expected", [
    ({"a": 1, "b": None}, ["a: 1", "b: -"]),
    ({"pass": True, "torsion": []}, ["pass: yes", "torsion: none"]),
    ({"xs": [1, {"k": "v"}]}, ["xs:", "  - 1", "  -", "    k: v"]),
])
def test_format_text(given, expected):
    assert format_text(given) == expected
