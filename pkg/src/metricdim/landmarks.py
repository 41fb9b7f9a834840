"""Landmark sets, their edge-colored hypergraphs, and the two resolving verifiers.

A landmark set W in K(n1, n2, n3) induces a hypergraph on W with one hyperedge
per coordinate value in use: for color i in {1, 2, 3} and value a, the edge
(i, a) collects the landmarks whose i-th coordinate equals a.  Color 1 is
drawn blue, color 2 green, color 3 pink.  Edges of size one are loops, size
two sticks, size three or more "poofy".

Resolving is checked two independent ways: via covered-set signatures read off
the hypergraph (footprint route) and via raw distance vectors (distance
route).  Both report the lexicographically least unresolved vertex pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterator

import numpy as np

from .core import (
    DomainError,
    InputError,
    Params,
    Vertex,
    enumerate_vertices,
)

COLORS = (1, 2, 3)
COLOR_NAMES = {1: "blue", 2: "green", 3: "pink"}
NAME_TO_COLOR = {name: color for color, name in COLOR_NAMES.items()}

# Edge identifier: (color, coordinate value).
EdgeId = tuple[int, int]

SIDE_TAGS = ("L", "R", "U")


@dataclass(frozen=True)
class LandmarkSet:
    """An ordered, duplicate-free set of landmarks, optionally tagged by side.

    Side tags record where a landmark came from in the two-block construction:
    "L" and "R" for the left and right blocks, "U" for the extra vertex added
    by a triple-loop extension.
    """

    params: Params
    landmarks: tuple[Vertex, ...]
    sides: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "landmarks", tuple(map(tuple, self.landmarks)))
        for v in self.landmarks:
            self.params.require_vertex(v)
        if len(set(self.landmarks)) != len(self.landmarks):
            seen: set[Vertex] = set()
            for v in self.landmarks:
                if v in seen:
                    raise InputError(f"duplicate landmark {v}")
                seen.add(v)
        if self.sides is not None:
            object.__setattr__(self, "sides", tuple(self.sides))
            if len(self.sides) != len(self.landmarks):
                raise InputError("sides must align one-to-one with landmarks")
            for tag in self.sides:
                if tag not in SIDE_TAGS:
                    raise InputError(f"unknown side tag {tag!r}")

    def __len__(self) -> int:
        return len(self.landmarks)

    def __iter__(self) -> Iterator[Vertex]:
        return iter(self.landmarks)

    def __contains__(self, v: object) -> bool:
        return v in self.landmarks

    def side_matrix(self, side: str) -> list[list[int]]:
        """Coordinates of the landmarks tagged `side`, as three rows of columns."""
        if self.sides is None:
            raise InputError("landmark set carries no side tags")
        cols = [v for v, tag in zip(self.landmarks, self.sides) if tag == side]
        return [[v[i] for v in cols] for i in range(3)]


@dataclass(frozen=True)
class LandmarkGraph:
    """The edge-colored hypergraph induced on a landmark set.

    `edges` maps (color, value) to the sorted indices of the landmarks in that
    fiber; only nonempty fibers are stored.  Same-color edges partition the
    landmark set.
    """

    params: Params
    landmarks: tuple[Vertex, ...]
    edges: dict[EdgeId, tuple[int, ...]]

    def edge_size(self, key: EdgeId) -> int:
        return len(self.edges[key])

    def is_loop(self, key: EdgeId) -> bool:
        return len(self.edges[key]) == 1

    def is_stick(self, key: EdgeId) -> bool:
        return len(self.edges[key]) == 2

    def is_poofy(self, key: EdgeId) -> bool:
        return len(self.edges[key]) >= 3

    def edges_of_color(self, color: int) -> list[EdgeId]:
        return sorted(key for key in self.edges if key[0] == color)

    def sticks_of_color(self, color: int) -> list[EdgeId]:
        return [key for key in self.edges_of_color(color) if self.is_stick(key)]

    def edge_at(self, color: int, landmark_index: int) -> EdgeId:
        """The unique color-`color` edge containing the landmark."""
        return (color, self.landmarks[landmark_index][color - 1])

    def stick_other_end(self, key: EdgeId, landmark_index: int) -> int | None:
        """The second endpoint of a stick, or None if `key` is not a stick."""
        members = self.edges[key]
        if len(members) != 2:
            return None
        return members[1] if members[0] == landmark_index else members[0]


@dataclass(frozen=True)
class Footprint:
    """The hyperedges a vertex touches, and the landmarks they cover.

    For a vertex (a1, a2, a3) the footprint collects the nonempty edges
    (1, a1), (2, a2), (3, a3).  A landmark is covered exactly when it agrees
    with the vertex in at least one coordinate, which for a vertex outside the
    landmark set is the same as being at distance two from it.
    """

    edges: tuple[EdgeId, ...]
    covered: frozenset[int]


@dataclass(frozen=True)
class BasicReport:
    """Outcome of the three-part basicness check.

    condition 1: every coordinate value of every color appears (witness: the
    first missing (color, value)).  condition 2: every nonempty edge has at
    least two landmarks (witness: the first undersized edge).  condition 3:
    different-color edges meet in at most one landmark (witness: the first
    offending edge pair).  The first violation wins, conditions checked in
    order and witnesses scanned lexicographically.
    """

    verdict: bool
    condition: int | None = None
    witness: Any = None


@dataclass(frozen=True)
class VerifyResult:
    """Verifier verdict plus the least unresolved pair when not resolving."""

    resolving: bool
    witness: tuple[Vertex, Vertex] | None
    method: str


def build_landmark_graph(lset: LandmarkSet) -> LandmarkGraph:
    """Group landmarks into fibers, one hyperedge per coordinate value in use."""
    if not lset.landmarks:
        raise InputError("cannot build a landmark graph from an empty set")
    fibers: dict[EdgeId, list[int]] = {}
    for index, v in enumerate(lset.landmarks):
        for color in COLORS:
            fibers.setdefault((color, v[color - 1]), []).append(index)
    edges = {key: tuple(members) for key, members in sorted(fibers.items())}
    return LandmarkGraph(lset.params, lset.landmarks, edges)


def check_basic(lset: LandmarkSet) -> BasicReport:
    """Check the three conditions of a basic landmark system, in order."""
    graph = build_landmark_graph(lset)
    p = lset.params
    sizes = (p.n1, p.n2, p.n3)
    for color in COLORS:
        present = {value for (c, value) in graph.edges if c == color}
        for value in range(1, sizes[color - 1] + 1):
            if value not in present:
                return BasicReport(False, 1, (color, value))
    for key in sorted(graph.edges):
        if len(graph.edges[key]) < 2:
            return BasicReport(False, 2, key)
    for color_a, color_b in ((1, 2), (1, 3), (2, 3)):
        for key_a in graph.edges_of_color(color_a):
            members_a = set(graph.edges[key_a])
            for key_b in graph.edges_of_color(color_b):
                shared = members_a.intersection(graph.edges[key_b])
                if len(shared) >= 2:
                    return BasicReport(False, 3, (key_a, key_b))
    return BasicReport(True)


def basic_size_bound(lset: LandmarkSet) -> bool:
    """True unless a basic system exceeds n1*n2 landmarks (which cannot happen).

    Pigeonhole: in a basic system any two landmarks differ in the first or the
    second coordinate, so there are at most n1*n2 of them.  Returns True when
    |W| <= n1*n2 or when the set is not basic at all.
    """
    if len(lset) <= lset.params.n1 * lset.params.n2:
        return True
    return not check_basic(lset).verdict


def extend_triple_loop(lset: LandmarkSet) -> LandmarkSet:
    """Add the vertex (n1+1, n2+1, n3+1) over the bumped parameters.

    The new landmark is alone in each of its three fibers, so the extended
    hypergraph is the old one plus a triple loop.
    """
    bumped = lset.params.plus_one()
    extra = (bumped.n1, bumped.n2, bumped.n3)
    sides = None if lset.sides is None else lset.sides + ("U",)
    return LandmarkSet(bumped, lset.landmarks + (extra,), sides)


def footprint(graph: LandmarkGraph, v: Vertex) -> Footprint:
    """Footprint of any vertex of the ambient graph (landmark or not)."""
    graph.params.require_vertex(v)
    edges = []
    covered: set[int] = set()
    for color in COLORS:
        key = (color, v[color - 1])
        members = graph.edges.get(key)
        if members:
            edges.append(key)
            covered.update(members)
    return Footprint(tuple(edges), frozenset(covered))


def _least_pair(
    pairs: list[tuple[Vertex, Vertex]],
) -> tuple[Vertex, Vertex] | None:
    return min(pairs) if pairs else None


def is_resolving_footprints(lset: LandmarkSet) -> VerifyResult:
    """Resolving check via covered-set signatures of vertex footprints.

    Two outside vertices are unresolved exactly when their footprints cover
    the same landmarks.  Signatures are bit vectors over landmark indices.
    """
    p = lset.params
    if not lset.landmarks:
        verts = enumerate_vertices(p)
        return VerifyResult(False, (next(verts), next(verts)), "footprint")
    graph = build_landmark_graph(lset)
    masks: dict[EdgeId, int] = {}
    for key, members in graph.edges.items():
        mask = 0
        for index in members:
            mask |= 1 << index
        masks[key] = mask
    in_set = set(lset.landmarks)
    first_with_sig: dict[int, Vertex] = {}
    collided: set[int] = set()
    pairs: list[tuple[Vertex, Vertex]] = []
    for v in enumerate_vertices(p):
        if v in in_set:
            continue
        sig = (
            masks.get((1, v[0]), 0)
            | masks.get((2, v[1]), 0)
            | masks.get((3, v[2]), 0)
        )
        earlier = first_with_sig.get(sig)
        if earlier is None:
            first_with_sig[sig] = v
        elif sig not in collided:
            # Only the first collision per signature can be the least pair.
            collided.add(sig)
            pairs.append((earlier, v))
    witness = _least_pair(pairs)
    return VerifyResult(witness is None, witness, "footprint")


def is_resolving_distances(lset: LandmarkSet) -> VerifyResult:
    """Resolving check via distance vectors; the independent oracle.

    Builds the full vertex-by-landmark distance matrix from coordinate
    agreement counts and looks for repeated rows among outside vertices.
    """
    p = lset.params
    verts = list(enumerate_vertices(p))
    in_set = set(lset.landmarks)
    outside = [v for v in verts if v not in in_set]
    if len(outside) < 2:
        return VerifyResult(True, None, "distance")
    coords = np.array(outside, dtype=np.int16)
    if lset.landmarks:
        marks = np.array(lset.landmarks, dtype=np.int16)
        agree = (coords[:, None, :] == marks[None, :, :]).sum(axis=2)
        # Outside vertices never coincide with a landmark, so distances are
        # 1 (no agreement) or 2 (partial agreement).
        dists = np.where(agree == 0, 1, 2).astype(np.int8)
    else:
        dists = np.zeros((len(outside), 0), dtype=np.int8)
    _, inverse, counts = np.unique(
        dists, axis=0, return_inverse=True, return_counts=True
    )
    inverse = inverse.reshape(-1)
    pairs: list[tuple[Vertex, Vertex]] = []
    for group in np.flatnonzero(counts >= 2):
        hits = np.flatnonzero(inverse == group)
        pairs.append((outside[hits[0]], outside[hits[1]]))
    witness = _least_pair(pairs)
    return VerifyResult(witness is None, witness, "distance")


# ---------------------------------------------------------------------------
# JSON round trip
# ---------------------------------------------------------------------------

def landmark_set_to_obj(lset: LandmarkSet) -> dict:
    """Plain-dict form of a landmark set, ready for json.dump."""
    obj: dict[str, Any] = {
        "n": list(lset.params.as_tuple()),
        "landmarks": [list(v) for v in lset.landmarks],
    }
    if lset.sides is not None:
        obj["sides"] = list(lset.sides)
    return obj


def landmark_set_from_obj(obj: Any) -> LandmarkSet:
    """Parse the JSON object form; unknown keys are rejected."""
    if not isinstance(obj, dict):
        raise InputError("landmark-set JSON must be an object")
    unknown = set(obj) - {"n", "landmarks", "sides"}
    if unknown:
        raise InputError(f"unknown keys in landmark-set JSON: {sorted(unknown)}")
    if "n" not in obj or "landmarks" not in obj:
        raise InputError('landmark-set JSON needs "n" and "landmarks"')
    n = obj["n"]
    if (
        not isinstance(n, list)
        or len(n) != 3
        or not all(isinstance(x, int) and not isinstance(x, bool) for x in n)
    ):
        raise InputError('"n" must be a list of three integers')
    try:
        params = Params(*n)
    except DomainError as exc:
        raise InputError(str(exc)) from exc
    raw = obj["landmarks"]
    if not isinstance(raw, list):
        raise InputError('"landmarks" must be a list of coordinate triples')
    landmarks = []
    for entry in raw:
        if (
            not isinstance(entry, list)
            or len(entry) != 3
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in entry)
        ):
            raise InputError(f"bad landmark entry {entry!r}")
        landmarks.append(tuple(entry))
    sides = obj.get("sides")
    if sides is not None:
        if not isinstance(sides, list) or not all(
            isinstance(tag, str) for tag in sides
        ):
            raise InputError('"sides" must be a list of side tags')
        sides = tuple(sides)
    try:
        return LandmarkSet(params, tuple(landmarks), sides)
    except DomainError as exc:
        raise InputError(str(exc)) from exc


__all__ = [
    "COLORS",
    "COLOR_NAMES",
    "NAME_TO_COLOR",
    "EdgeId",
    "LandmarkSet",
    "LandmarkGraph",
    "Footprint",
    "BasicReport",
    "VerifyResult",
    "build_landmark_graph",
    "check_basic",
    "basic_size_bound",
    "extend_triple_loop",
    "footprint",
    "is_resolving_footprints",
    "is_resolving_distances",
    "landmark_set_to_obj",
    "landmark_set_from_obj",
]
