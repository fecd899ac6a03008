"""Exhaustive enumeration of all stable matchings at desk scale.

Depth-first search assigns students in index order, branching over each
student's preference list and the explicit choice "unassigned".  A branch
dies as soon as a blocking pair is already decided by the frozen prefix:

* once a project is full its assignee set can no longer change, so a
  skipped project that is full and whose lecturer prefers the skipping
  student blocks every completion (P4);
* once a lecturer is full, their student set and all their project loads
  are final, which settles the two conditions that pair an
  undersubscribed project with a full lecturer (P2, P3).

Only the both-undersubscribed condition (P1) stays open until the leaves,
where it is checked against the recorded skipped pairs.  Cuts fire only on
state that can no longer change, so they are conservative; equality with a
brute-force oracle is pinned in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .model import Instance, Matching

DEFAULT_SIZE_GUARD = 20


class SizeGuardError(RuntimeError):
    """Instance exceeds the enumeration size guard."""

    def __init__(self, students: int, guard: int) -> None:
        super().__init__(
            f"instance has {students} students, enumeration guard is {guard}; "
            "rerun with force to search anyway"
        )
        self.students = students
        self.guard = guard


@dataclass(frozen=True)
class StableSet:
    """All stable matchings of one instance.

    Deduplicated and ordered lexicographically on the canonical pair lists,
    so repeated runs and golden files agree byte for byte.
    """

    matchings: tuple[Matching, ...]

    def __len__(self) -> int:
        return len(self.matchings)

    def __iter__(self) -> Iterator[Matching]:
        return iter(self.matchings)

    def __getitem__(self, i: int) -> Matching:
        return self.matchings[i]

    def __contains__(self, m: object) -> bool:
        return m in self.matchings

    def index(self, m: Matching) -> int:
        return self.matchings.index(m)


def enumerate_all(
    instance: Instance,
    *,
    force: bool = False,
    size_guard: int = DEFAULT_SIZE_GUARD,
) -> StableSet:
    """Exactly the stable matchings of the instance.

    Raises :class:`SizeGuardError` beyond ``size_guard`` students unless
    ``force`` is set; the search is exponential in the worst case.
    """
    n1 = instance.num_students
    if not force and n1 > size_guard:
        raise SizeGuardError(n1, size_guard)

    prefs = instance.student_prefs
    cap = (0,) + instance.project_capacity
    dcap = (0,) + instance.lecturer_capacity
    owner = (0,) + instance.project_owner
    lrank = instance._lrank

    assigned = [0] * (n1 + 1)
    pload = [0] * len(cap)
    lload = [0] * len(dcap)
    pworst = [-1] * len(cap)  # worst (largest) lecturer rank assigned to p
    lworst = [-1] * len(dcap)
    envy: list[list[tuple[int, int]]] = [[] for _ in range(len(dcap))]
    found: list[Matching] = []

    def blocked(s: int, p: int) -> bool:
        # (s, p) skipped earlier; decide P-conditions that are already final
        k = owner[p]
        if pload[p] == cap[p]:
            return lrank[k - 1][s] < pworst[p]
        if lload[k] == dcap[k]:
            a = assigned[s]
            if a and owner[a] == k:
                return True
            return lrank[k - 1][s] < lworst[k]
        return False

    def extend(i: int) -> None:
        if i > n1:
            for k in range(1, len(dcap)):
                if lload[k] < dcap[k]:
                    for _, p in envy[k]:
                        if pload[p] < cap[p]:
                            return  # P1 blocks; everything else was settled
            found.append(
                Matching(tuple((s, assigned[s]) for s in range(1, n1 + 1) if assigned[s]))
            )
            return
        plist = prefs[i - 1]
        for idx in range(len(plist) + 1):
            choice = plist[idx] if idx < len(plist) else 0
            skipped = plist[:idx]
            if choice:
                k0 = owner[choice]
                if pload[choice] == cap[choice] or lload[k0] == dcap[k0]:
                    continue
                assigned[i] = choice
                pload[choice] += 1
                lload[k0] += 1
                old_pw, old_lw = pworst[choice], lworst[k0]
                r = lrank[k0 - 1][i]
                if r > pworst[choice]:
                    pworst[choice] = r
                if r > lworst[k0]:
                    lworst[k0] = r
            else:
                k0 = 0
                assigned[i] = 0

            dead = any(blocked(i, p) for p in skipped)
            if not dead and choice:
                if pload[choice] == cap[choice]:
                    dead = any(
                        p == choice and blocked(s, p) for s, p in envy[k0]
                    )
                if not dead and lload[k0] == dcap[k0]:
                    dead = any(blocked(s, p) for s, p in envy[k0])

            if not dead:
                pushed = []
                for p in skipped:
                    envy[owner[p]].append((i, p))
                    pushed.append(owner[p])
                extend(i + 1)
                for kp in reversed(pushed):
                    envy[kp].pop()

            if choice:
                pload[choice] -= 1
                lload[k0] -= 1
                pworst[choice], lworst[k0] = old_pw, old_lw
            assigned[i] = 0

    extend(1)
    found.sort(key=lambda m: m.pairs)
    return StableSet(tuple(found))


def stable_pairs(
    instance: Instance,
    *,
    force: bool = False,
    size_guard: int = DEFAULT_SIZE_GUARD,
) -> frozenset[tuple[int, int]]:
    """Pairs that belong to at least one stable matching."""
    stable = enumerate_all(instance, force=force, size_guard=size_guard)
    return frozenset(pair for m in stable for pair in m.pairs)
