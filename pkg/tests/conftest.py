"""Shared fixtures: frozen landmark sets, golden matrices, witness pairs."""

from __future__ import annotations

import pytest

from metricdim import LandmarkSet, Params

# ---------------------------------------------------------------------------
# The published 13-landmark minimum resolving set for K(4,5,7).
# ---------------------------------------------------------------------------
FIG1_PARAMS = (4, 5, 7)
FIG1_LANDMARKS = (
    (1, 1, 1), (1, 2, 5), (1, 3, 2), (1, 4, 6),
    (2, 1, 3), (2, 2, 1), (2, 3, 4), (2, 4, 2),
    (3, 1, 5), (3, 2, 3), (3, 3, 6), (3, 4, 4),
    (4, 5, 7),
)

# ---------------------------------------------------------------------------
# Hand-built forbidden-configuration fixtures.  "stated_pair" is the known
# unresolved pair quoted alongside each fixture; "least_pair" is the
# lexicographically least unresolved pair, which is what the verifiers must
# report.  Both were confirmed by the BFS oracle before being frozen here.
# ---------------------------------------------------------------------------
BAD4_PARAMS = (3, 3, 3)
BAD4_LANDMARKS = ((1, 1, 1), (2, 2, 1), (3, 2, 2), (1, 3, 2))
BAD4_STATED_PAIR = ((1, 2, 1), (1, 2, 2))
BAD4_LEAST_PAIR = ((1, 1, 2), (3, 1, 2))

HEX_PARAMS = (3, 4, 5)
HEX_LANDMARKS = (
    (1, 1, 1), (1, 2, 2), (2, 2, 3), (3, 3, 3), (3, 4, 4), (2, 4, 1)
)
HEX_STATED_PAIR = ((3, 2, 1), (1, 4, 3))
HEX_LEAST_PAIR = ((1, 1, 2), (1, 1, 5))

SHARK_PARAMS = (3, 4, 5)
SHARK_LANDMARKS = (
    (1, 1, 1), (2, 1, 2), (1, 2, 2), (1, 3, 3), (3, 3, 4), (1, 4, 4)
)
SHARK_STATED_PAIR = ((1, 1, 4), (1, 3, 2))
SHARK_LEAST_PAIR = ((1, 1, 2), (1, 1, 3))

# Three landmarks forming one rainbow 2-2-triangle per choice of middle
# vertex (their graph is a triangle of three sticks, one per color).
RAINBOW_PARAMS = (3, 3, 3)
RAINBOW_LANDMARKS = ((1, 1, 1), (2, 1, 2), (1, 2, 2))

# ---------------------------------------------------------------------------
# Golden construction matrices, given as (first row, second row, third row)
# for the left and right halves.
# ---------------------------------------------------------------------------
GOLDEN_5_6_11 = {
    "left": (
        (1, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5),
        (1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2),
        tuple(range(1, 12)),
    ),
    "right": (
        (2, 2, 2, 3, 3, 4, 4, 5, 5, 1, 1),
        (4, 5, 6, 4, 5, 6, 4, 5, 6, 4, 5),
        tuple(range(1, 12)),
    ),
}

GOLDEN_5_7_11 = {
    "left": (
        (1, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5),
        (7, 1, 2, 3, 1, 2, 3, 7, 2, 3, 1),
        tuple(range(1, 12)),
    ),
    "right": (
        (2, 2, 2, 3, 3, 4, 4, 5, 5, 1, 1),
        (4, 7, 5, 6, 4, 5, 6, 4, 5, 6, 4),
        tuple(range(1, 12)),
    ),
}

GOLDEN_5_7_17 = {
    "left": (
        (1, 1, 1, 1, 2, 2, 2, 3, 3, 3, 3, 4, 4, 4, 5, 5, 5),
        (7, 1, 2, 3, 1, 2, 3, 7, 1, 2, 3, 1, 2, 3, 1, 2, 3),
        tuple(range(1, 18)),
    ),
    "right": (
        (2, 2, 2, 2, 3, 3, 3, 4, 4, 4, 4, 5, 5, 5, 1, 1, 1),
        (4, 7, 5, 6, 4, 5, 6, 4, 7, 5, 6, 4, 5, 6, 4, 5, 6),
        tuple(range(1, 18)),
    ),
}


def landmarks_from_matrices(golden) -> list[tuple[int, int, int]]:
    """Flatten left-then-right column triples into a landmark list."""
    out = []
    for side in ("left", "right"):
        rows = golden[side]
        out.extend(zip(rows[0], rows[1], rows[2]))
    return out


def matrices_from_set(ls: LandmarkSet):
    """Recover (left rows, right rows) from a two-sided landmark set."""
    left = [v for v, s in zip(ls.landmarks, ls.sides) if s == "L"]
    right = [v for v, s in zip(ls.landmarks, ls.sides) if s == "R"]
    to_rows = lambda cols: tuple(tuple(v[i] for v in cols) for i in range(3))
    return to_rows(left), to_rows(right)


@pytest.fixture
def fig1_set() -> LandmarkSet:
    return LandmarkSet(Params(*FIG1_PARAMS), FIG1_LANDMARKS)


@pytest.fixture
def bad4_set() -> LandmarkSet:
    return LandmarkSet(Params(*BAD4_PARAMS), BAD4_LANDMARKS)


@pytest.fixture
def hex_set() -> LandmarkSet:
    return LandmarkSet(Params(*HEX_PARAMS), HEX_LANDMARKS)


@pytest.fixture
def shark_set() -> LandmarkSet:
    return LandmarkSet(Params(*SHARK_PARAMS), SHARK_LANDMARKS)


@pytest.fixture
def rainbow_set() -> LandmarkSet:
    return LandmarkSet(Params(*RAINBOW_PARAMS), RAINBOW_LANDMARKS)
