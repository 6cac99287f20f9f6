import random

import pytest

from vkgroups.braids import Rep
from vkgroups.lattice import hnf, snf
from vkgroups.lcs import lcs_quotients
from vkgroups.presentations import tietze_simplify

from ..common import random_braid, random_matrix


@pytest.mark.benchmark(group="lcs-class-5")
def test_k2_quotients_up_to_class_5(benchmark, info_logging, k2):
    # I expect computing K2's quotients up to class 5 to be consistently fast
    benchmark.pedantic(lcs_quotients, args=(k2, 5), rounds=3)


@pytest.mark.benchmark(group="normal-forms")
def test_normal_forms_of_1k_matrices(benchmark):
    rng = random.Random(31)
    matrices = [random_matrix(8, 10 ** 6, rng=rng) for _ in range(1000)]

    def run():
        for M in matrices:
            hnf(M)
            snf(M)

    benchmark(run)


@pytest.mark.benchmark(group="tietze")
def test_simplifying_100_braid_groups(benchmark, session_pipeline):
    rng = random.Random(37)
    groups = [session_pipeline.group(Rep.A, random_braid(4, 12, rng=rng)) for _ in range(100)]

    def run():
        for p in groups:
            tietze_simplify(p)

    benchmark(run)
