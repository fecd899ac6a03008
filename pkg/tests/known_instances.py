"""Two hand-checked instances whose stable structure is fully worked out.

INSTANCE_A: 5 students, 5 unit-capacity projects, 2 lecturers.  A_M1 is
student-optimal and A_M2 lecturer-optimal.  The instance decomposes into
two independent sub-markets (the s1-s2-s3 rotation and the s4/s5 swap),
each with two stable configurations, so the full stable set has four
members forming a diamond; the swap variants A_SWAP1/A_SWAP2 are stable
because neither lecturer consents to undoing the swap.

INSTANCE_B: 9 students, 8 projects, 2 lecturers; exactly seven stable
matchings B_M[0..6] whose cover graph is B_HASSE_EDGES.
"""

from spas import Instance, Matching, RawInstance, build_instance


def _build(raw: RawInstance) -> Instance:
    built = build_instance(raw)
    assert isinstance(built, Instance), built
    return built


INSTANCE_A = _build(RawInstance(
    student_prefs=[[1, 2], [2, 3], [3, 1], [4, 5], [5, 4]],
    project_capacity=[1, 1, 1, 1, 1],
    project_owner=[1, 1, 2, 2, 1],
    lecturer_capacity=[3, 2],
    lecturer_prefs=[[4, 5, 3, 1, 2], [2, 3, 5, 4]],
))

A_M1 = Matching(((1, 1), (2, 2), (3, 3), (4, 4), (5, 5)))
A_M2 = Matching(((1, 2), (2, 3), (3, 1), (4, 5), (5, 4)))
A_SWAP1 = Matching(((1, 1), (2, 2), (3, 3), (4, 5), (5, 4)))
A_SWAP2 = Matching(((1, 2), (2, 3), (3, 1), (4, 4), (5, 5)))

# lexicographic enumeration order
A_STABLE = (A_M1, A_SWAP1, A_SWAP2, A_M2)
A_HASSE_EDGES = ((0, 1), (0, 2), (1, 3), (2, 3))

A_STABLE_PAIRS = frozenset({
    (1, 1), (1, 2), (2, 2), (2, 3), (3, 3), (3, 1),
    (4, 4), (4, 5), (5, 5), (5, 4),
})


INSTANCE_B = _build(RawInstance(
    student_prefs=[
        [1, 2, 4, 3],
        [1, 4, 3, 2],
        [3, 1, 2, 4],
        [3, 2, 1, 4],
        [4, 3, 1],
        [5, 2, 7],
        [7, 3, 6],
        [6, 8],
        [8, 2, 3],
    ],
    project_capacity=[2, 1, 2, 1, 1, 1, 1, 1],
    project_owner=[1, 1, 2, 2, 1, 1, 2, 2],
    lecturer_capacity=[4, 5],
    lecturer_prefs=[
        [7, 9, 3, 4, 5, 1, 2, 6, 8],
        [6, 1, 2, 5, 3, 4, 7, 8, 9],
    ],
))

_B_TABLE = (
    {1: 1, 2: 1, 3: 3, 4: 3, 5: 4, 6: 5, 7: 7, 8: 6, 9: 8},
    {1: 1, 2: 1, 3: 3, 4: 3, 5: 4, 6: 5, 7: 7, 8: 8, 9: 2},
    {1: 1, 2: 1, 3: 3, 4: 3, 5: 4, 6: 7, 7: 6, 8: 8, 9: 2},
    {1: 1, 2: 4, 3: 3, 4: 1, 5: 3, 6: 5, 7: 7, 8: 8, 9: 2},
    {1: 1, 2: 4, 3: 3, 4: 1, 5: 3, 6: 7, 7: 6, 8: 8, 9: 2},
    {1: 4, 2: 3, 3: 1, 4: 1, 5: 3, 6: 5, 7: 7, 8: 8, 9: 2},
    {1: 4, 2: 3, 3: 1, 4: 1, 5: 3, 6: 7, 7: 6, 8: 8, 9: 2},
)
B_M = tuple(Matching.from_assignments(row) for row in _B_TABLE)

B_HASSE_EDGES = (
    (0, 1), (1, 2), (1, 3), (2, 4), (3, 4), (3, 5), (4, 6), (5, 6),
)
