"""Student-optimal and lecturer-optimal stable matching solvers.

The reference method folds meet (resp. join) over the full enumerated
stable set, which pins correctness to the enumeration oracle but is
exponential; it refuses instances beyond the size guard unless forced.
The deferred-acceptance method runs the two linear-time proposal
algorithms and must agree with the reference everywhere, which the test
suite cross-checks.
"""

from __future__ import annotations

from collections import deque
from enum import Enum

from .enumeration import DEFAULT_SIZE_GUARD, enumerate_all
from .lattice import join_all, meet_all
from .model import Instance, Matching


class SolveMethod(Enum):
    ENUMERATION = "enum"
    DEFERRED_ACCEPTANCE = "da"


def _student_proposal(instance: Instance) -> Matching:
    """Student-proposing deferred acceptance with list truncation.

    Free students propose down their lists; oversubscribed projects and
    lecturers drop their worst assignee, and once full they delete every
    pair they could never keep, so nobody proposes to a lost cause twice.
    """
    prefs = instance.student_prefs
    cap = instance.project_capacity
    dcap = instance.lecturer_capacity
    owner = instance.project_owner

    deleted: set[tuple[int, int]] = set()
    assigned: dict[int, int] = {}
    of_project: dict[int, set[int]] = {p: set() for p in instance.projects()}
    of_lecturer: dict[int, set[int]] = {k: set() for k in instance.lecturers()}

    def lrank(k: int, s: int) -> int:
        return instance._lrank[k - 1][s]

    def unassign(s: int) -> None:
        p = assigned.pop(s)
        of_project[p].discard(s)
        of_lecturer[owner[p - 1]].discard(s)

    free = deque(instance.students())
    while free:
        s = free.popleft()
        if s in assigned:
            continue
        p = next((q for q in prefs[s - 1] if (s, q) not in deleted), None)
        if p is None:
            continue
        k = owner[p - 1]
        assigned[s] = p
        of_project[p].add(s)
        of_lecturer[k].add(s)

        if len(of_project[p]) > cap[p - 1]:
            worst = max(of_project[p], key=lambda t: lrank(k, t))
            unassign(worst)
            free.append(worst)
        elif len(of_lecturer[k]) > dcap[k - 1]:
            worst = max(of_lecturer[k], key=lambda t: lrank(k, t))
            unassign(worst)
            free.append(worst)

        if len(of_project[p]) == cap[p - 1]:
            worst = max(of_project[p], key=lambda t: lrank(k, t))
            wr = lrank(k, worst)
            for t in instance.projected_list(k, p):
                if lrank(k, t) > wr:
                    deleted.add((t, p))
        if len(of_lecturer[k]) == dcap[k - 1]:
            worst = max(of_lecturer[k], key=lambda t: lrank(k, t))
            wr = lrank(k, worst)
            for t in instance.lecturer_prefs[k - 1]:
                if lrank(k, t) > wr:
                    for q in instance.lecturer_projects[k - 1]:
                        if instance.acceptable_pair(t, q):
                            deleted.add((t, q))

    return Matching.from_assignments(assigned)


def _lecturer_proposal(instance: Instance) -> Matching:
    """Lecturer-proposing offers; students trade up, never get ejected.

    An offer (s, p) by lecturer k is open when p has room, s would strictly
    improve, and k has room or s is already with k (an internal move).
    Each round the lowest-indexed lecturer with an open offer serves the
    best such student on its list, who takes their favourite open project
    of that lecturer.  Every acceptance strictly improves a student, so the
    loop ends after at most one pass per acceptable pair.
    """
    cap = instance.project_capacity
    dcap = instance.lecturer_capacity
    owner = instance.project_owner

    assigned: dict[int, int] = {}
    pload = [0] * (instance.num_projects + 1)
    lload = [0] * (instance.num_lecturers + 1)

    def srank(s: int, p: int) -> int:
        return instance._srank[s - 1][p]

    def open_offer(k: int) -> tuple[int, int] | None:
        for s in instance.lecturer_prefs[k - 1]:
            current = assigned.get(s)
            in_k = current is not None and owner[current - 1] == k
            if lload[k] == dcap[k - 1] and not in_k:
                continue
            best: int | None = None
            for p in instance.lecturer_projects[k - 1]:
                if pload[p] == cap[p - 1]:
                    continue
                if p not in instance._srank[s - 1] or p == current:
                    continue
                if current is not None and srank(s, p) >= srank(s, current):
                    continue
                if best is None or srank(s, p) < srank(s, best):
                    best = p
            if best is not None:
                return s, best
        return None

    while True:
        moved = False
        for k in instance.lecturers():
            offer = open_offer(k)
            if offer is None:
                continue
            s, p = offer
            current = assigned.get(s)
            if current is not None:
                pload[current] -= 1
                lload[owner[current - 1]] -= 1
            assigned[s] = p
            pload[p] += 1
            lload[k] += 1
            moved = True
            break
        if not moved:
            return Matching.from_assignments(assigned)


def solve_student_optimal(
    instance: Instance,
    method: SolveMethod = SolveMethod.ENUMERATION,
    *,
    force: bool = False,
    size_guard: int = DEFAULT_SIZE_GUARD,
) -> Matching:
    """The stable matching giving every student their best stable project."""
    if method is SolveMethod.DEFERRED_ACCEPTANCE:
        return _student_proposal(instance)
    stable = enumerate_all(instance, force=force, size_guard=size_guard)
    return meet_all(instance, stable, check=False)


def solve_lecturer_optimal(
    instance: Instance,
    method: SolveMethod = SolveMethod.ENUMERATION,
    *,
    force: bool = False,
    size_guard: int = DEFAULT_SIZE_GUARD,
) -> Matching:
    """The stable matching giving every student their worst stable project."""
    if method is SolveMethod.DEFERRED_ACCEPTANCE:
        return _lecturer_proposal(instance)
    stable = enumerate_all(instance, force=force, size_guard=size_guard)
    return join_all(instance, stable, check=False)
