"""Seeded corpus recipes shared by the property and acceptance suites."""

import random

from spas import GenParams, generate


def corpus_params(
    seed: int,
    max_students: int,
    max_projects: int,
    max_lecturers: int,
) -> GenParams:
    """Deterministic size/shape draw for one corpus slot.

    The shape comes from its own stream keyed by the seed; the instance
    generator then reuses the same seed for the contents.
    """
    rng = random.Random(seed)
    projects = rng.randint(1, max_projects)
    lecturers = rng.randint(1, min(max_lecturers, projects))
    students = rng.randint(1, max_students)
    lo = 0 if rng.random() < 0.15 else 1
    hi = rng.randint(max(lo, 1), projects)
    cap_hi = rng.randint(1, 2)
    density = rng.uniform(0.3, 0.9)
    return GenParams(
        students=students,
        projects=projects,
        lecturers=lecturers,
        pref_len=(lo, hi),
        project_cap=(1, cap_hi),
        seed=seed,
        density=density,
    )


def corpus_instance(seed: int, max_students: int, max_projects: int,
                    max_lecturers: int):
    return generate(corpus_params(seed, max_students, max_projects, max_lecturers))
