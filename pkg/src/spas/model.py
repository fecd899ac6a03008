"""Core data model: instances, matchings, validation, and assignment views.

Students rank projects, lecturers rank students, and every project is
offered by exactly one lecturer; projects and lecturers carry capacities.
Identifiers are dense 1-based integers per role; the ``s1``/``p2``/``l3``
text forms appear only in file formats and messages.  Rank tables are
precomputed at build time so preference queries are O(1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Mapping


def student_name(s: int) -> str:
    return f"s{s}"


def project_name(p: int) -> str:
    return f"p{p}"


def lecturer_name(k: int) -> str:
    return f"l{k}"


@dataclass(frozen=True)
class Violation:
    """One broken rule, naming the offending identifier(s)."""

    rule: str
    subject: str
    message: str

    def render(self) -> str:
        return f"{self.rule} [{self.subject}]: {self.message}"


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of validating an instance or a matching.

    An empty ``violations`` tuple means the checked object is valid;
    ``warnings`` never block construction.
    """

    violations: tuple[Violation, ...] = ()
    warnings: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass
class RawInstance:
    """Unvalidated instance description, as parsed or hand-built.

    Lists are indexed by entity number minus one; preference entries are
    1-based identifiers of the other role.
    """

    student_prefs: list[list[int]] = field(default_factory=list)
    project_capacity: list[int] = field(default_factory=list)
    project_owner: list[int] = field(default_factory=list)
    lecturer_capacity: list[int] = field(default_factory=list)
    lecturer_prefs: list[list[int]] = field(default_factory=list)


@dataclass(frozen=True)
class Instance:
    """A validated, immutable problem instance.

    Construct through :func:`build_instance`; direct construction skips
    validation.  Immutable after construction and safe to share across
    concurrent readers.
    """

    student_prefs: tuple[tuple[int, ...], ...]
    project_capacity: tuple[int, ...]
    project_owner: tuple[int, ...]
    lecturer_capacity: tuple[int, ...]
    lecturer_prefs: tuple[tuple[int, ...], ...]

    # -- sizes and id ranges -------------------------------------------------

    @property
    def num_students(self) -> int:
        return len(self.student_prefs)

    @property
    def num_projects(self) -> int:
        return len(self.project_capacity)

    @property
    def num_lecturers(self) -> int:
        return len(self.lecturer_capacity)

    def students(self) -> range:
        return range(1, self.num_students + 1)

    def projects(self) -> range:
        return range(1, self.num_projects + 1)

    def lecturers(self) -> range:
        return range(1, self.num_lecturers + 1)

    # -- derived tables ------------------------------------------------------

    @cached_property
    def lecturer_projects(self) -> tuple[tuple[int, ...], ...]:
        """Offered project sets, ascending, one tuple per lecturer."""
        out: list[list[int]] = [[] for _ in range(self.num_lecturers)]
        for p, k in enumerate(self.project_owner, start=1):
            out[k - 1].append(p)
        return tuple(tuple(ps) for ps in out)

    @cached_property
    def _srank(self) -> tuple[dict[int, int], ...]:
        return tuple(
            {p: r for r, p in enumerate(prefs)} for prefs in self.student_prefs
        )

    @cached_property
    def _lrank(self) -> tuple[dict[int, int], ...]:
        return tuple(
            {s: r for r, s in enumerate(prefs)} for prefs in self.lecturer_prefs
        )

    # -- queries ---------------------------------------------------------------

    def _check_student(self, s: int) -> None:
        if not 1 <= s <= self.num_students:
            raise ValueError(f"unknown student {student_name(s)}")

    def _check_project(self, p: int) -> None:
        if not 1 <= p <= self.num_projects:
            raise ValueError(f"unknown project {project_name(p)}")

    def _check_lecturer(self, k: int) -> None:
        if not 1 <= k <= self.num_lecturers:
            raise ValueError(f"unknown lecturer {lecturer_name(k)}")

    def owner(self, p: int) -> int:
        self._check_project(p)
        return self.project_owner[p - 1]

    def acceptable_pair(self, s: int, p: int) -> bool:
        """True iff student ``s`` ranks project ``p``.

        Validation guarantees the lecturer side: whoever offers ``p`` then
        also ranks ``s``.
        """
        self._check_student(s)
        self._check_project(p)
        return p in self._srank[s - 1]

    def student_rank(self, s: int, p: int) -> int:
        """0-based position of ``p`` on the list of ``s`` (0 = best)."""
        self._check_student(s)
        try:
            return self._srank[s - 1][p]
        except KeyError:
            raise ValueError(
                f"{project_name(p)} is not on the list of {student_name(s)}"
            ) from None

    def student_prefers(self, s: int, p: int, q: int) -> bool:
        return self.student_rank(s, p) < self.student_rank(s, q)

    def lecturer_rank(self, k: int, s: int) -> int:
        self._check_lecturer(k)
        try:
            return self._lrank[k - 1][s]
        except KeyError:
            raise ValueError(
                f"{student_name(s)} is not on the list of {lecturer_name(k)}"
            ) from None

    def lecturer_prefers(self, k: int, s: int, t: int) -> bool:
        return self.lecturer_rank(k, s) < self.lecturer_rank(k, t)

    def projected_list(self, k: int, p: int) -> tuple[int, ...]:
        """The list of lecturer ``k`` restricted to students ranking ``p``."""
        self._check_lecturer(k)
        self._check_project(p)
        if self.project_owner[p - 1] != k:
            raise ValueError(
                f"{project_name(p)} is not offered by {lecturer_name(k)}"
            )
        return tuple(
            s for s in self.lecturer_prefs[k - 1] if p in self._srank[s - 1]
        )

    def __repr__(self) -> str:  # the field dump is unusable for big instances
        return (
            f"Instance(students={self.num_students}, "
            f"projects={self.num_projects}, lecturers={self.num_lecturers})"
        )


@dataclass(frozen=True)
class Matching:
    """A set of (student, project) pairs in canonical ascending order.

    Two matchings with equal pair sets compare and hash equal regardless of
    construction order.  Whether the pairs are legal for some instance is
    the business of :func:`is_valid_matching`.
    """

    pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        canon = []
        for pair in self.pairs:
            s, p = pair
            if not (isinstance(s, int) and isinstance(p, int) and s > 0 and p > 0):
                raise ValueError(f"malformed pair {pair!r}")
            canon.append((s, p))
        object.__setattr__(self, "pairs", tuple(sorted(set(canon))))

    @classmethod
    def from_assignments(cls, assignments: Mapping[int, int | None]) -> "Matching":
        return cls(tuple((s, p) for s, p in assignments.items() if p is not None))

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.pairs)


EMPTY_MATCHING = Matching(())


def validate_raw(raw: RawInstance) -> ValidationReport:
    """Check every instance rule, collecting all violations and warnings."""
    n1 = len(raw.student_prefs)
    n2 = len(raw.project_capacity)
    n3 = len(raw.lecturer_capacity)
    if len(raw.project_owner) != n2:
        raise ValueError("project_owner and project_capacity lengths differ")
    if len(raw.lecturer_prefs) != n3:
        raise ValueError("lecturer_prefs and lecturer_capacity lengths differ")

    violations: list[Violation] = []
    warnings: list[Violation] = []

    for j, c in enumerate(raw.project_capacity, start=1):
        if c < 1:
            violations.append(Violation(
                "project-capacity", project_name(j),
                f"capacity must be positive, got {c}"))
    for k, d in enumerate(raw.lecturer_capacity, start=1):
        if d < 1:
            violations.append(Violation(
                "lecturer-capacity", lecturer_name(k),
                f"capacity must be positive, got {d}"))
    for j, k in enumerate(raw.project_owner, start=1):
        if not 1 <= k <= n3:
            violations.append(Violation(
                "dangling-identifier", project_name(j),
                f"owner {lecturer_name(k)} does not exist"))

    for i, prefs in enumerate(raw.student_prefs, start=1):
        seen: set[int] = set()
        for p in prefs:
            if not 1 <= p <= n2:
                violations.append(Violation(
                    "dangling-identifier", student_name(i),
                    f"ranked project {project_name(p)} does not exist"))
            elif p in seen:
                violations.append(Violation(
                    "duplicate-preference", student_name(i),
                    f"{project_name(p)} appears twice"))
            seen.add(p)
        if not prefs:
            warnings.append(Violation(
                "empty-preference-list", student_name(i),
                "student ranks no project and stays unassigned"))

    for k, prefs in enumerate(raw.lecturer_prefs, start=1):
        seen = set()
        for s in prefs:
            if not 1 <= s <= n1:
                violations.append(Violation(
                    "dangling-identifier", lecturer_name(k),
                    f"ranked student {student_name(s)} does not exist"))
            elif s in seen:
                violations.append(Violation(
                    "duplicate-preference", lecturer_name(k),
                    f"{student_name(s)} appears twice"))
            seen.add(s)

    # offered sets, capacity bounds, and the list correspondence need clean
    # identifiers, so guard each piece on the entities it touches
    offered: list[list[int]] = [[] for _ in range(n3)]
    for j, k in enumerate(raw.project_owner, start=1):
        if 1 <= k <= n3:
            offered[k - 1].append(j)

    for k in range(1, n3 + 1):
        caps = [raw.project_capacity[j - 1] for j in offered[k - 1]]
        if not caps:
            violations.append(Violation(
                "no-offered-projects", lecturer_name(k),
                "every lecturer must offer at least one project"))
            continue
        if min(caps) < 1:
            continue  # already reported on the project
        d = raw.lecturer_capacity[k - 1]
        if not max(caps) <= d <= sum(caps):
            violations.append(Violation(
                "capacity-bound", lecturer_name(k),
                f"capacity {d} must lie between the largest offered project "
                f"capacity {max(caps)} and the capacity sum {sum(caps)}"))

    for k in range(1, n3 + 1):
        expected = {
            i for i, prefs in enumerate(raw.student_prefs, start=1)
            if any(p in prefs for p in offered[k - 1])
        }
        listed = {s for s in raw.lecturer_prefs[k - 1] if 1 <= s <= n1}
        for s in sorted(expected - listed):
            violations.append(Violation(
                "lecturer-list-mismatch", lecturer_name(k),
                f"{student_name(s)} ranks an offered project but is missing "
                f"from the list"))
        for s in sorted(listed - expected):
            violations.append(Violation(
                "lecturer-list-mismatch", lecturer_name(k),
                f"{student_name(s)} is listed but ranks no offered project"))

    return ValidationReport(tuple(violations), tuple(warnings))


def build_instance(raw: RawInstance) -> Instance | ValidationReport:
    """Validate ``raw`` and return an :class:`Instance`, or the full report."""
    report = validate_raw(raw)
    if not report.ok:
        return report
    return Instance(
        student_prefs=tuple(tuple(p) for p in raw.student_prefs),
        project_capacity=tuple(raw.project_capacity),
        project_owner=tuple(raw.project_owner),
        lecturer_capacity=tuple(raw.lecturer_capacity),
        lecturer_prefs=tuple(tuple(p) for p in raw.lecturer_prefs),
    )


def is_valid_matching(instance: Instance, matching: Matching) -> ValidationReport:
    """Report every violated matching condition (capacities, acceptability)."""
    violations: list[Violation] = []

    per_student: dict[int, list[int]] = {}
    for s, p in matching.pairs:
        per_student.setdefault(s, []).append(p)
    for s in sorted(per_student):
        if len(per_student[s]) > 1:
            names = " ".join(project_name(p) for p in per_student[s])
            violations.append(Violation(
                "multiple-assignment", student_name(s),
                f"assigned to more than one project: {names}"))

    for s, p in matching.pairs:
        subject = f"{student_name(s)},{project_name(p)}"
        if not 1 <= s <= instance.num_students:
            violations.append(Violation(
                "dangling-identifier", subject, "student does not exist"))
            continue
        if not 1 <= p <= instance.num_projects:
            violations.append(Violation(
                "dangling-identifier", subject, "project does not exist"))
            continue
        if not instance.acceptable_pair(s, p):
            violations.append(Violation(
                "unacceptable-pair", subject,
                f"{project_name(p)} is not on the list of {student_name(s)}"))

    load_p: dict[int, int] = {}
    load_l: dict[int, int] = {}
    for s, p in matching.pairs:
        if 1 <= p <= instance.num_projects:
            load_p[p] = load_p.get(p, 0) + 1
            k = instance.project_owner[p - 1]
            load_l[k] = load_l.get(k, 0) + 1
    for p in sorted(load_p):
        if load_p[p] > instance.project_capacity[p - 1]:
            violations.append(Violation(
                "project-capacity", project_name(p),
                f"{load_p[p]} students assigned, capacity is "
                f"{instance.project_capacity[p - 1]}"))
    for k in sorted(load_l):
        if load_l[k] > instance.lecturer_capacity[k - 1]:
            violations.append(Violation(
                "lecturer-capacity", lecturer_name(k),
                f"{load_l[k]} students assigned, capacity is "
                f"{instance.lecturer_capacity[k - 1]}"))

    return ValidationReport(tuple(violations))


class MatchingView:
    """O(1) accessors over one matching: M(s), M(p), M(l), loads, worsts.

    Assumes the matching is valid for the instance (at most one project per
    student, acceptable pairs only); validate first where that is in doubt.
    """

    def __init__(self, instance: Instance, matching: Matching) -> None:
        self.instance = instance
        self.matching = matching
        self._of_student: dict[int, int] = {}
        self._of_project: dict[int, set[int]] = {}
        self._of_lecturer: dict[int, set[int]] = {}
        for s, p in matching.pairs:
            self._of_student[s] = p
            self._of_project.setdefault(p, set()).add(s)
            self._of_lecturer.setdefault(instance.owner(p), set()).add(s)

    def project_of(self, s: int) -> int | None:
        self.instance._check_student(s)
        return self._of_student.get(s)

    def project_students(self, p: int) -> frozenset[int]:
        self.instance._check_project(p)
        return frozenset(self._of_project.get(p, ()))

    def lecturer_students(self, k: int) -> frozenset[int]:
        self.instance._check_lecturer(k)
        return frozenset(self._of_lecturer.get(k, ()))

    def project_load(self, p: int) -> int:
        self.instance._check_project(p)
        return len(self._of_project.get(p, ()))

    def lecturer_load(self, k: int) -> int:
        self.instance._check_lecturer(k)
        return len(self._of_lecturer.get(k, ()))

    def project_full(self, p: int) -> bool:
        return self.project_load(p) >= self.instance.project_capacity[p - 1]

    def lecturer_full(self, k: int) -> bool:
        return self.lecturer_load(k) >= self.instance.lecturer_capacity[k - 1]

    def unassigned_students(self) -> frozenset[int]:
        return frozenset(
            s for s in self.instance.students() if s not in self._of_student
        )

    def worst_of_lecturer(self, k: int) -> int | None:
        """Assigned student appearing last on the lecturer's list, if any."""
        students = self._of_lecturer.get(k)
        if not students:
            self.instance._check_lecturer(k)
            return None
        return max(students, key=lambda s: self.instance.lecturer_rank(k, s))

    def worst_of_project(self, p: int) -> int | None:
        """Assigned student appearing last on the projected list, if any.

        The projected list preserves the lecturer's order, so ranks on the
        full list decide this too.
        """
        students = self._of_project.get(p)
        if not students:
            self.instance._check_project(p)
            return None
        k = self.instance.owner(p)
        return max(students, key=lambda s: self.instance.lecturer_rank(k, s))


def matching_views(instance: Instance, matching: Matching) -> MatchingView:
    return MatchingView(instance, matching)
