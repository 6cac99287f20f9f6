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

import os
import threading

from ..common import current_millis
from ..logging import get_logger
from .middleware import Middleware

#: The buckets of the stage duration histogram, in milliseconds.
DURATION_BUCKETS = (
    1, 5, 10, 25, 50, 100, 250, 500, 1000, 2500, 5000,
    10000, 30000, 60000, 600000, float("inf"),
)

#: The file metrics are written to when no path is given.
METRICS_PATH = os.getenv("vkgroups_prom_file", "vkgroups.prom")


class Prometheus(Middleware):
    """A middleware that counts and times pipeline stages with
    Prometheus_ collectors kept in a private registry.

    .. _Prometheus: https://prometheus.io
    """

    def __init__(self):
        self.logger = get_logger(__name__, type(self))
        self.stage_start_times = {}
        self.registry = None

    def after_pipeline_boot(self, pipeline):
        import prometheus_client as prom

        self.logger.debug("Setting up metrics...")
        self.registry = registry = prom.CollectorRegistry()
        self.total_stages = prom.Counter(
            "vkgroups_stages_total",
            "The total number of stages run.",
            ["stage"],
            registry=registry,
        )
        self.total_errored_stages = prom.Counter(
            "vkgroups_stage_errors_total",
            "The total number of stages that raised.",
            ["stage"],
            registry=registry,
        )
        self.stage_durations = prom.Histogram(
            "vkgroups_stage_duration_milliseconds",
            "The time spent running stages.",
            ["stage"],
            buckets=DURATION_BUCKETS,
            registry=registry,
        )

    def before_stage(self, pipeline, stage):
        self.stage_start_times[threading.get_ident(), stage] = current_millis()

    def after_stage(self, pipeline, stage, *, result=None, exception=None):
        stage_start_time = self.stage_start_times.pop((threading.get_ident(), stage), current_millis())
        stage_duration = current_millis() - stage_start_time
        self.stage_durations.labels(stage).observe(stage_duration)
        self.total_stages.labels(stage).inc()
        if exception is not None:
            self.total_errored_stages.labels(stage).inc()

    def sample(self, name, stage):
        """The current value of one of this middleware's samples, or
        ``None`` if it hasn't been recorded.
        """
        return self.registry.get_sample_value(name, {"stage": stage})

    def write(self, path=METRICS_PATH):
        from prometheus_client import write_to_textfile

        self.logger.debug("Writing metrics to %r...", path)
        write_to_textfile(path, self.registry)
