"""Detectors for the hypergraph shapes that break resolving.

Five shapes matter.  A bad 4-cycle: a four-cycle whose opposite same-color
edges are sticks and whose other two edges carry the remaining two colors,
each meeting each stick in exactly one corner.  A plain hex: a six-cycle of
sticks colored blue-green-pink twice around.  A rainbow 2-2-triangle: two
sticks of different colors sharing a middle vertex whose far endpoints sit
together in an edge of the third color.  Shark teeth: two vertex-disjoint
rainbow 2-2-triangles whose four termini share one poofy edge.  A triple
loop: a landmark alone in all three of its fibers.

A bad 4-cycle, plain hex, or shark teeth pins down two non-landmark
vertices whose footprints cover the same landmarks, so any set whose graph
contains one cannot resolve — no basicness needed.  A rainbow 2-2-triangle
does the same for the triple-loop extension of the set.  The 4-cycle's
exactly-one-corner clause is what keeps its pair outside the landmark set;
without it a degenerate overlap can place one of the two vertices in the
set itself and the shape certifies nothing.

For a basic system, resolving is equivalent to avoiding bad 4-cycles, plain
hexes, and shark teeth; after a triple-loop extension the rainbow
2-2-triangles take over the role of the shark teeth.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import InputError
from .landmarks import (
    COLORS,
    COLOR_NAMES,
    EdgeId,
    LandmarkGraph,
    LandmarkSet,
    build_landmark_graph,
    check_basic,
)

BAD_4_CYCLE = "Bad4Cycle"
PLAIN_HEX = "PlainHex"
RAINBOW_22_TRIANGLE = "Rainbow22Triangle"
SHARK_TEETH = "SharkTeeth"
TRIPLE_LOOP = "TripleLoop"

KINDS = (BAD_4_CYCLE, PLAIN_HEX, RAINBOW_22_TRIANGLE, SHARK_TEETH, TRIPLE_LOOP)


@dataclass(frozen=True)
class ForbiddenWitness:
    """One concrete occurrence of a forbidden shape.

    `landmarks` holds indices into the landmark set, `hyperedges` the
    participating (color, value) pairs, both in the shape's canonical order.
    """

    kind: str
    landmarks: tuple[int, ...]
    hyperedges: tuple[EdgeId, ...]

    def sort_key(self) -> tuple:
        return (self.landmarks, self.hyperedges)


def _canonical_cycle(
    vertices: tuple[int, ...], edges: tuple[EdgeId, ...]
) -> tuple[tuple[int, ...], tuple[EdgeId, ...]]:
    """Least rotation/reflection of a cycle; edges[i] joins vertices[i], [i+1]."""
    size = len(vertices)
    best = None
    for direction in (1, -1):
        for start in range(size):
            vs = []
            es = []
            for step in range(size):
                i = (start + step * direction) % size
                vs.append(vertices[i])
                es.append(edges[i if direction == 1 else (i - 1) % size])
            candidate = (tuple(vs), tuple(es))
            if best is None or candidate < best:
                best = candidate
    return best


def _joining_colors(
    graph: LandmarkGraph, a: int, b: int, allowed: tuple[int, ...]
) -> list[int]:
    return [
        c for c in allowed if graph.landmarks[a][c - 1] == graph.landmarks[b][c - 1]
    ]


def find_bad_4_cycles(graph: LandmarkGraph) -> list[ForbiddenWitness]:
    """All bad 4-cycles, deduplicated up to rotation and reflection.

    Each joining edge must meet each stick in exactly one endpoint — the
    corner it passes through.  A stick endpoint sitting inside the far
    joining edge would make one of the two vertices the shape certifies as
    unresolved a landmark itself, and the certificate would say nothing.
    """
    found: dict[tuple, ForbiddenWitness] = {}
    for stick_color in COLORS:
        others = tuple(c for c in COLORS if c != stick_color)
        sticks = graph.sticks_of_color(stick_color)
        for i in range(len(sticks)):
            for j in range(i + 1, len(sticks)):
                s1, s2 = graph.edges[sticks[i]]
                t1, t2 = graph.edges[sticks[j]]
                # Same-color sticks are disjoint, so the four are distinct.
                for (a1, b1), (a2, b2) in (
                    ((s1, t1), (s2, t2)),
                    ((s1, t2), (s2, t1)),
                ):
                    colors_a = _joining_colors(graph, a1, b1, others)
                    colors_b = _joining_colors(graph, a2, b2, others)
                    for ca in colors_a:
                        for cb in colors_b:
                            if ca == cb:
                                continue
                            join_a = (ca, graph.landmarks[a1][ca - 1])
                            join_b = (cb, graph.landmarks[a2][cb - 1])
                            if (
                                graph.landmarks[a2][ca - 1] == join_a[1]
                                or graph.landmarks[b2][ca - 1] == join_a[1]
                                or graph.landmarks[a1][cb - 1] == join_b[1]
                                or graph.landmarks[b1][cb - 1] == join_b[1]
                            ):
                                continue
                            cycle_vs = (a1, a2, b2, b1)
                            cycle_es = (sticks[i], join_b, sticks[j], join_a)
                            canon = _canonical_cycle(cycle_vs, cycle_es)
                            found.setdefault(
                                canon, ForbiddenWitness(BAD_4_CYCLE, *canon)
                            )
    return sorted(found.values(), key=ForbiddenWitness.sort_key)


def _stick_step(
    graph: LandmarkGraph, color: int, vertex: int
) -> tuple[int | None, EdgeId]:
    """Walk across the color-`color` stick at `vertex`, if it is a stick."""
    key = graph.edge_at(color, vertex)
    return graph.stick_other_end(key, vertex), key


def find_plain_hexes(graph: LandmarkGraph) -> list[ForbiddenWitness]:
    """All six-cycles of sticks colored blue-green-pink twice around."""
    found: dict[tuple, ForbiddenWitness] = {}
    for start in graph.sticks_of_color(1):
        endpoints = graph.edges[start]
        for v0, v1 in (endpoints, endpoints[::-1]):
            vs = [v0, v1]
            es = [start]
            for color in (2, 3, 1, 2):
                nxt, key = _stick_step(graph, color, vs[-1])
                if nxt is None:
                    break
                vs.append(nxt)
                es.append(key)
            else:
                closer, key = _stick_step(graph, 3, vs[-1])
                if closer != v0 or len(set(vs)) != 6:
                    continue
                es.append(key)
                canon = _canonical_cycle(tuple(vs), tuple(es))
                found.setdefault(canon, ForbiddenWitness(PLAIN_HEX, *canon))
    return sorted(found.values(), key=ForbiddenWitness.sort_key)


def find_rainbow_triangles(graph: LandmarkGraph) -> list[ForbiddenWitness]:
    """All rainbow 2-2-triangles, terminus of smaller index first.

    Witness order: (terminus, middle, terminus) for the landmarks and (stick
    at first terminus, stick at second terminus, shared terminus edge) for the
    hyperedges.
    """
    out = []
    for middle in range(len(graph.landmarks)):
        for c1, c2 in ((1, 2), (1, 3), (2, 3)):
            key1 = graph.edge_at(c1, middle)
            u = graph.stick_other_end(key1, middle)
            if u is None:
                continue
            key2 = graph.edge_at(c2, middle)
            v = graph.stick_other_end(key2, middle)
            if v is None or u == v:
                continue
            c3 = 6 - c1 - c2
            if graph.landmarks[u][c3 - 1] != graph.landmarks[v][c3 - 1]:
                continue
            shared = (c3, graph.landmarks[u][c3 - 1])
            if u <= v:
                witness = ForbiddenWitness(
                    RAINBOW_22_TRIANGLE, (u, middle, v), (key1, key2, shared)
                )
            else:
                witness = ForbiddenWitness(
                    RAINBOW_22_TRIANGLE, (v, middle, u), (key2, key1, shared)
                )
            out.append(witness)
    return sorted(out, key=ForbiddenWitness.sort_key)


def find_shark_teeth(graph: LandmarkGraph) -> list[ForbiddenWitness]:
    """Disjoint rainbow-triangle pairs with all four termini in one poofy edge.

    The middles may or may not sit in the shared edge; either way the shape
    certifies an unresolved pair that mixes one triangle's green stick with
    the other's pink stick, and full sticks of disjoint triangles can never
    make such a mixed vertex a landmark.
    """
    triangles = find_rainbow_triangles(graph)
    out = []
    for i in range(len(triangles)):
        first = triangles[i]
        shared = first.hyperedges[2]
        if graph.edge_size(shared) < 3:
            continue
        for j in range(i + 1, len(triangles)):
            second = triangles[j]
            if second.hyperedges[2] != shared:
                continue
            if set(first.landmarks) & set(second.landmarks):
                continue
            out.append(
                ForbiddenWitness(
                    SHARK_TEETH,
                    first.landmarks + second.landmarks,
                    first.hyperedges[:2] + second.hyperedges[:2] + (shared,),
                )
            )
    return sorted(out, key=ForbiddenWitness.sort_key)


def find_triple_loops(graph: LandmarkGraph) -> list[ForbiddenWitness]:
    """Landmarks that are alone in all three of their fibers."""
    out = []
    for index in range(len(graph.landmarks)):
        keys = tuple(graph.edge_at(color, index) for color in COLORS)
        if all(graph.is_loop(key) for key in keys):
            out.append(ForbiddenWitness(TRIPLE_LOOP, (index,), keys))
    return out


def find_all_forbidden(graph: LandmarkGraph) -> dict[str, list[ForbiddenWitness]]:
    return {
        BAD_4_CYCLE: find_bad_4_cycles(graph),
        PLAIN_HEX: find_plain_hexes(graph),
        RAINBOW_22_TRIANGLE: find_rainbow_triangles(graph),
        SHARK_TEETH: find_shark_teeth(graph),
        TRIPLE_LOOP: find_triple_loops(graph),
    }


def predict_resolving_basic(lset: LandmarkSet) -> bool:
    """Resolving verdict for a basic system, read off the hypergraph alone.

    A basic system resolves exactly when its graph has no bad 4-cycle, no
    plain hex, and no shark teeth.  Non-basic input is rejected.
    """
    if not check_basic(lset).verdict:
        raise InputError("predict_resolving_basic needs a basic landmark system")
    graph = build_landmark_graph(lset)
    return (
        not find_bad_4_cycles(graph)
        and not find_plain_hexes(graph)
        and not find_shark_teeth(graph)
    )


def predict_resolving_triple_looped(lset: LandmarkSet) -> bool:
    """Verdict for the triple-loop extension of a basic system.

    The extension resolves the bumped graph exactly when the original graph
    has no bad 4-cycle, no plain hex, and no rainbow 2-2-triangle.  Avoiding
    rainbow triangles is strictly stronger than avoiding shark teeth.
    """
    if not check_basic(lset).verdict:
        raise InputError(
            "predict_resolving_triple_looped needs a basic landmark system"
        )
    graph = build_landmark_graph(lset)
    return (
        not find_bad_4_cycles(graph)
        and not find_plain_hexes(graph)
        and not find_rainbow_triangles(graph)
    )


# ---------------------------------------------------------------------------
# Structural revalidation, used by tests and the detect report
# ---------------------------------------------------------------------------

def _cycle_ok(graph: LandmarkGraph, w: ForbiddenWitness) -> bool:
    size = len(w.landmarks)
    if len(set(w.landmarks)) != size or len(set(w.hyperedges)) != size:
        return False
    for i in range(size):
        members = graph.edges.get(w.hyperedges[i])
        if members is None:
            return False
        if w.landmarks[i] not in members or w.landmarks[(i + 1) % size] not in members:
            return False
    # A vertex may touch the cycle only through its two incident edges.
    for i in range(size):
        for j in range(size):
            if j in (i, (i - 1) % size):
                continue
            if w.landmarks[i] in graph.edges[w.hyperedges[j]]:
                return False
    return True


def _rainbow_ok(
    graph: LandmarkGraph, vertices: tuple[int, ...], edges: tuple[EdgeId, ...]
) -> bool:
    u, middle, v = vertices
    if len({u, middle, v}) != 3:
        return False
    stick_u, stick_v, shared = edges
    if len({stick_u[0], stick_v[0], shared[0]}) != 3:
        return False
    if graph.edges.get(stick_u) != tuple(sorted((u, middle))):
        return False
    if graph.edges.get(stick_v) != tuple(sorted((middle, v))):
        return False
    members = graph.edges.get(shared)
    return members is not None and u in members and v in members


def witness_is_valid(graph: LandmarkGraph, w: ForbiddenWitness) -> bool:
    """Re-check a witness against the structural demands of its kind."""
    if w.kind == BAD_4_CYCLE:
        if len(w.landmarks) != 4 or not _cycle_ok(graph, w):
            return False
        colors = [key[0] for key in w.hyperedges]
        if len(set(colors)) != 3:
            return False
        for offset in (0, 1):
            pair = (w.hyperedges[offset], w.hyperedges[offset + 2])
            if pair[0][0] == pair[1][0]:
                return all(graph.is_stick(key) for key in pair)
        return False
    if w.kind == PLAIN_HEX:
        if len(w.landmarks) != 6 or not _cycle_ok(graph, w):
            return False
        colors = [key[0] for key in w.hyperedges]
        if set(colors) != set(COLORS):
            return False
        if any(colors[i] != colors[(i + 3) % 6] for i in range(3)):
            return False
        return all(graph.is_stick(key) for key in w.hyperedges)
    if w.kind == RAINBOW_22_TRIANGLE:
        return len(w.landmarks) == 3 and _rainbow_ok(graph, w.landmarks, w.hyperedges)
    if w.kind == SHARK_TEETH:
        if len(w.landmarks) != 6 or len(set(w.landmarks)) != 6:
            return False
        if len(w.hyperedges) != 5:
            return False
        shared = w.hyperedges[4]
        if not graph.is_poofy(shared):
            return False
        first = (w.landmarks[:3], w.hyperedges[:2] + (shared,))
        second = (w.landmarks[3:], w.hyperedges[2:4] + (shared,))
        return all(_rainbow_ok(graph, vs, es) for vs, es in (first, second))
    if w.kind == TRIPLE_LOOP:
        if len(w.landmarks) != 1 or len(w.hyperedges) != 3:
            return False
        index = w.landmarks[0]
        for color in COLORS:
            key = (color, graph.landmarks[index][color - 1])
            if w.hyperedges[color - 1] != key:
                return False
            if graph.edges.get(key) != (index,):
                return False
        return True
    return False


def witness_to_obj(graph: LandmarkGraph, w: ForbiddenWitness) -> dict:
    """JSON-ready form: kind, landmark coordinates, hyperedge identifiers."""
    return {
        "kind": w.kind,
        "landmarks": [list(graph.landmarks[i]) for i in w.landmarks],
        "hyperedges": [[COLOR_NAMES[color], value] for color, value in w.hyperedges],
    }


__all__ = [
    "BAD_4_CYCLE",
    "PLAIN_HEX",
    "RAINBOW_22_TRIANGLE",
    "SHARK_TEETH",
    "TRIPLE_LOOP",
    "KINDS",
    "ForbiddenWitness",
    "find_bad_4_cycles",
    "find_plain_hexes",
    "find_rainbow_triangles",
    "find_shark_teeth",
    "find_triple_loops",
    "find_all_forbidden",
    "predict_resolving_basic",
    "predict_resolving_triple_looped",
    "witness_is_valid",
    "witness_to_obj",
]
