"""Blocking-pair detection and stability of a matching.

An acceptable pair (s, p) outside the matching blocks it when the student
side holds (S1: s unassigned, or S2: s prefers p to their assignment) and
one project/lecturer condition holds:

P1  p undersubscribed and its lecturer undersubscribed
P2  p undersubscribed, lecturer full, s already assigned to that lecturer
P3  p undersubscribed, lecturer full, lecturer prefers s to their worst
    assigned student
P4  p full, lecturer prefers s to the worst student assigned to p

When several P conditions hold the lowest-numbered one is reported, so
output is deterministic.  S1 together with P2 cannot occur.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import Instance, Matching, MatchingView, is_valid_matching

STUDENT_CONDITIONS = ("S1", "S2")
PROJECT_CONDITIONS = ("P1", "P2", "P3", "P4")


@dataclass(frozen=True)
class BlockingPair:
    """Witness that a matching is unstable."""

    student: int
    project: int
    student_condition: str
    project_condition: str


def _project_condition(
    instance: Instance, view: MatchingView, s: int, p: int
) -> str | None:
    k = instance.owner(p)
    if not view.project_full(p):
        if not view.lecturer_full(k):
            return "P1"
        assigned = view.project_of(s)
        if assigned is not None and instance.owner(assigned) == k:
            return "P2"
        worst = view.worst_of_lecturer(k)
        if worst is not None and instance.lecturer_prefers(k, s, worst):
            return "P3"
        return None
    worst = view.worst_of_project(p)
    if worst is not None and instance.lecturer_prefers(k, s, worst):
        return "P4"
    return None


def find_blocking_pairs(
    instance: Instance, matching: Matching
) -> tuple[BlockingPair, ...]:
    """All blocking pairs, ordered by (student index, project index).

    Each student's list is scanned only down to (and excluding) their
    current assignment: S2 needs strict preference, so nothing below the
    assignment can block.
    """
    report = is_valid_matching(instance, matching)
    if not report.ok:
        raise ValueError(
            f"invalid matching: {report.violations[0].render()}"
        )
    view = MatchingView(instance, matching)
    found: list[BlockingPair] = []
    for s in instance.students():
        assigned = view.project_of(s)
        prefs = instance.student_prefs[s - 1]
        if assigned is None:
            scan = prefs
            s_cond = "S1"
        else:
            scan = prefs[: instance.student_rank(s, assigned)]
            s_cond = "S2"
        for p in scan:
            p_cond = _project_condition(instance, view, s, p)
            if p_cond is not None:
                found.append(BlockingPair(s, p, s_cond, p_cond))
    found.sort(key=lambda bp: (bp.student, bp.project))
    return tuple(found)


def is_stable(instance: Instance, matching: Matching) -> bool:
    """True iff the matching admits no blocking pair."""
    return not find_blocking_pairs(instance, matching)
