import pytest

from corpus import corpus_instance
from spas import enumerate_all

CORPUS_SEEDS = range(1, 501)


@pytest.fixture(scope="session")
def corpus7():
    """500 seeded instances (<=7 students, <=6 projects, <=3 lecturers) with
    their enumerated stable sets; shared by the theorem-suite criteria."""
    out = []
    for seed in CORPUS_SEEDS:
        instance = corpus_instance(seed, 7, 6, 3)
        out.append((seed, instance, enumerate_all(instance)))
    return out
