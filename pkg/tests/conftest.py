import logging
import random
import subprocess
import sys

import pytest

from vkgroups import CATALOG, Pipeline, set_pipeline
from vkgroups.config import Settings
from vkgroups.logging import LOGFORMAT
from vkgroups.middleware import Prometheus
from vkgroups.presentations import tietze_simplify

logging.basicConfig(level=logging.INFO, format=LOGFORMAT)

random.seed(1337)


@pytest.fixture()
def pipeline():
    pipeline = Pipeline(settings=Settings())
    set_pipeline(pipeline)
    yield pipeline
    set_pipeline(None)


@pytest.fixture()
def bare_pipeline():
    return Pipeline(middleware=[])


@pytest.fixture()
def prometheus(pipeline):
    return pipeline.get_middleware(Prometheus)


@pytest.fixture
def info_logging():
    logger = logging.getLogger()
    logger.setLevel(logging.INFO)
    yield
    logger.setLevel(logging.DEBUG)


@pytest.fixture
def run_cli():
    def run(*args, **kwargs):
        kwargs.setdefault("capture_output", True)
        kwargs.setdefault("timeout", 600)
        return subprocess.run([sys.executable, "-m", "vkgroups", *args], **kwargs)

    return run


@pytest.fixture(scope="session")
def session_pipeline():
    return Pipeline(middleware=[])


@pytest.fixture(scope="session")
def k1(session_pipeline):
    return CATALOG["K1"].one_relator(session_pipeline)


@pytest.fixture(scope="session")
def k2(session_pipeline):
    return CATALOG["K2"].one_relator(session_pipeline)


@pytest.fixture(scope="session")
def k3(session_pipeline):
    return tietze_simplify(CATALOG["K3"].group(session_pipeline))


@pytest.fixture(scope="session")
def k4(session_pipeline):
    return CATALOG["K4"].one_relator(session_pipeline)


@pytest.fixture(scope="session")
def k2_lattice(session_pipeline, k2):
    return session_pipeline.lcs(k2, 4)


@pytest.fixture(scope="session")
def k3_lattice(session_pipeline, k3):
    return session_pipeline.lcs(k3, 4)


@pytest.fixture(scope="session")
def class_5_lattices(session_pipeline, k1, k2, k3, k4):
    return {
        name: session_pipeline.lcs(p, 5)
        for name, p in (("K1", k1), ("K2", k2), ("K3", k3), ("K4", k4))
    }
