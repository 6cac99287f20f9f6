import pytest

from vkgroups.braids import Rep, parse_braid
from vkgroups.errors import ParseError


def test_prometheus_middleware_counts_stages(pipeline, prometheus):
    # Given a pipeline with the Prometheus middleware
    # When I run the group stage twice
    for _ in range(2):
        pipeline.group(Rep.A, parse_braid("s1 r1", 2))

    # Then the stage counter should be at 2
    assert prometheus.sample("vkgroups_stages_total", "group") == 2

    # And no errors should have been counted
    assert prometheus.sample("vkgroups_stage_errors_total", "group") is None

    # And every run should have been timed
    assert prometheus.sample("vkgroups_stage_duration_milliseconds_count", "group") == 2


def test_prometheus_middleware_counts_errors(pipeline, prometheus):
    # Given a stage that raises
    with pytest.raises(ParseError):
        pipeline.run("parse", parse_braid, "t1", 2)

    # Then both counters should have moved
    assert prometheus.sample("vkgroups_stages_total", "parse") == 1
    assert prometheus.sample("vkgroups_stage_errors_total", "parse") == 1


def test_prometheus_middleware_writes_text_files(tmp_path, pipeline, prometheus):
    # Given that a stage has run
    pipeline.abelianize(pipeline.group(Rep.M, parse_braid("s1^-1 r1", 2)))

    # When I write the metrics
    path = tmp_path / "vkgroups.prom"
    prometheus.write(str(path))

    # Then the file should hold the stage counter
    contents = path.read_text()
    assert 'vkgroups_stages_total{stage="abelianize"} 1.0' in contents
