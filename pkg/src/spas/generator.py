"""Seeded pseudo-random instance generator for property testing and sweeps.

All draws come from one ``random.Random(seed)`` (Mersenne Twister) in a
fixed order, so a parameter set is a pure recipe: identical parameters
give identical instances on every platform and run.  Lecturer lists are
derived from the student lists rather than sampled, which satisfies the
acceptability correspondence by construction, and lecturer capacities are
drawn inside the feasible band, so every generated instance validates.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .model import Instance, RawInstance, build_instance


@dataclass(frozen=True)
class GenParams:
    """Generation recipe; the seed is part of the identity of the output.

    ``density`` is the probability that any given project enters a
    student's candidate list before the length range is applied.
    """

    students: int
    projects: int
    lecturers: int
    pref_len: tuple[int, int] = (1, 4)
    project_cap: tuple[int, int] = (1, 2)
    seed: int = 0
    density: float = 0.5


def _validate_params(params: GenParams) -> None:
    if min(params.students, params.projects, params.lecturers) < 0:
        raise ValueError("entity counts must be non-negative")
    lo, hi = params.pref_len
    if lo < 0 or lo > hi:
        raise ValueError(f"empty preference-length range {params.pref_len}")
    clo, chi = params.project_cap
    if clo < 1 or clo > chi:
        raise ValueError(f"empty capacity range {params.project_cap}")
    if not 0.0 <= params.density <= 1.0:
        raise ValueError(f"density {params.density} outside [0, 1]")
    if params.projects > 0 and params.lecturers == 0:
        raise ValueError("projects need an owning lecturer")
    if params.lecturers > params.projects:
        raise ValueError(
            "more lecturers than projects: every lecturer must offer at "
            "least one project"
        )


def generate(params: GenParams) -> Instance:
    """A valid instance, a pure function of ``params`` including the seed."""
    _validate_params(params)
    rng = random.Random(params.seed)
    n1, n2, n3 = params.students, params.projects, params.lecturers

    # partition projects among lecturers, each lecturer getting at least one
    owner = [0] * n2
    perm = list(range(1, n2 + 1))
    rng.shuffle(perm)
    for k, p in enumerate(perm[:n3], start=1):
        owner[p - 1] = k
    for p in perm[n3:]:
        owner[p - 1] = rng.randint(1, n3)

    clo, chi = params.project_cap
    capacity = [rng.randint(clo, chi) for _ in range(n2)]

    lo = min(params.pref_len[0], n2)
    hi = min(params.pref_len[1], n2)
    student_prefs: list[list[int]] = []
    for _ in range(n1):
        cands = [p for p in range(1, n2 + 1) if rng.random() < params.density]
        if len(cands) < lo:
            missing = [p for p in range(1, n2 + 1) if p not in cands]
            cands.extend(rng.sample(missing, lo - len(cands)))
        if len(cands) > hi:
            cands = rng.sample(cands, hi)
        rng.shuffle(cands)
        student_prefs.append(cands)

    lecturer_prefs: list[list[int]] = []
    lecturer_capacity: list[int] = []
    for k in range(1, n3 + 1):
        offered = [p for p in range(1, n2 + 1) if owner[p - 1] == k]
        ranked = [
            s for s in range(1, n1 + 1)
            if any(p in student_prefs[s - 1] for p in offered)
        ]
        rng.shuffle(ranked)
        lecturer_prefs.append(ranked)
        caps = [capacity[p - 1] for p in offered]
        lecturer_capacity.append(rng.randint(max(caps), sum(caps)))

    built = build_instance(RawInstance(
        student_prefs=student_prefs,
        project_capacity=capacity,
        project_owner=owner,
        lecturer_capacity=lecturer_capacity,
        lecturer_prefs=lecturer_prefs,
    ))
    if not isinstance(built, Instance):
        raise AssertionError(
            f"generator produced an invalid instance: {built.violations}"
        )
    return built
