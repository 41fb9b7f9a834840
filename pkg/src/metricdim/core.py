"""Parameter space and distance kernel for direct products of three complete graphs.

The graph K(n1, n2, n3) is the direct product of complete graphs on n1, n2,
and n3 vertices.  Its vertices are the triples (x1, x2, x3) with 1 <= xi <= ni,
and two vertices are adjacent exactly when they differ in every coordinate.
With all factors of order at least 3 the product is connected with diameter
two, so the only distances are 0, 1, and 2: distance 1 when all coordinates
differ, distance 2 when the vertices agree in some but not all coordinates.

All parameter validation happens here; the other modules assume a validated
Params instance.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterator

# A vertex of the product graph, always 1-based.
Vertex = tuple[int, int, int]


class DomainError(ValueError):
    """Parameters or coordinates outside the supported domain."""


class InputError(ValueError):
    """Malformed landmark data or a violated operation precondition."""


class InternalError(RuntimeError):
    """An internal consistency check failed; signals a bug, not bad input."""


class Cone(enum.Enum):
    """Region of the parameter space, split by how large n3 is."""

    LOWER = "Lower"
    MIDDLE = "Middle"
    UPPER = "Upper"


@dataclass(frozen=True, order=True)
class Params:
    """Factor orders (n1, n2, n3) with 3 <= n1, n2 and n1, n2 <= n3."""

    n1: int
    n2: int
    n3: int

    def __post_init__(self) -> None:
        for value in (self.n1, self.n2, self.n3):
            if not isinstance(value, int) or isinstance(value, bool):
                raise DomainError(f"factor orders must be integers, got {value!r}")
        if self.n1 < 3 or self.n2 < 3:
            raise DomainError(
                f"factor orders n1, n2 must be at least 3, got {self.as_tuple()}"
            )
        if self.n3 < self.n1 or self.n3 < self.n2:
            raise DomainError(
                f"n3 must be the largest coordinate, got {self.as_tuple()}"
            )

    def as_tuple(self) -> Vertex:
        return (self.n1, self.n2, self.n3)

    @property
    def vertex_count(self) -> int:
        return self.n1 * self.n2 * self.n3

    def contains(self, v: Vertex) -> bool:
        return (
            len(v) == 3
            and all(isinstance(x, int) and not isinstance(x, bool) for x in v)
            and 1 <= v[0] <= self.n1
            and 1 <= v[1] <= self.n2
            and 1 <= v[2] <= self.n3
        )

    def require_vertex(self, v: Vertex) -> None:
        if not self.contains(v):
            raise DomainError(f"{v!r} is not a vertex of K{self.as_tuple()}")

    def plus_one(self) -> "Params":
        """Parameters with every factor order bumped by one."""
        return Params(self.n1 + 1, self.n2 + 1, self.n3 + 1)


def classify_cone(p: Params) -> Cone:
    """Classify parameters by comparing 2*n3 against 3*max(n1,n2) and n1*n2.

    Lower: 2*n3 < 3*max(n1, n2).  Upper: 2*n3 > n1*n2.  Middle: everything
    between, boundaries included.
    """
    doubled = 2 * p.n3
    if doubled < 3 * max(p.n1, p.n2):
        return Cone.LOWER
    if doubled > p.n1 * p.n2:
        return Cone.UPPER
    return Cone.MIDDLE


def distance(p: Params, a: Vertex, b: Vertex) -> int:
    """Graph distance between two vertices (0, 1, or 2)."""
    p.require_vertex(a)
    p.require_vertex(b)
    agree = (a[0] == b[0]) + (a[1] == b[1]) + (a[2] == b[2])
    if agree == 3:
        return 0
    if agree == 0:
        return 1
    return 2


def are_adjacent(p: Params, a: Vertex, b: Vertex) -> bool:
    """Adjacent iff the vertices differ in all three coordinates."""
    p.require_vertex(a)
    p.require_vertex(b)
    return a[0] != b[0] and a[1] != b[1] and a[2] != b[2]


def enumerate_vertices(p: Params) -> Iterator[Vertex]:
    """All vertices in lexicographic order, (1,1,1) first."""
    return itertools.product(
        range(1, p.n1 + 1), range(1, p.n2 + 1), range(1, p.n3 + 1)
    )


def all_params(max_n3: int) -> Iterator[Params]:
    """Every valid Params with n3 <= max_n3, in lexicographic order."""
    for n1 in range(3, max_n3 + 1):
        for n2 in range(3, max_n3 + 1):
            for n3 in range(max(n1, n2), max_n3 + 1):
                yield Params(n1, n2, n3)
