"""Deterministic DOT rendering of landmark graphs.

Landmarks become nodes w1..wm labeled with their coordinates.  Sticks are
plain colored edges, loops are colored self-edges, and each poofy hyperedge
gets a point-shaped hub node h_<color>_<value> joined to its members.  Output
is byte-identical across runs for the same input.
"""

from __future__ import annotations

from .landmarks import COLOR_NAMES, LandmarkGraph


def landmark_graph_to_dot(graph: LandmarkGraph) -> str:
    lines = ["graph landmarks {"]
    for number, v in enumerate(graph.landmarks, start=1):
        lines.append(f'  w{number} [label="({v[0]},{v[1]},{v[2]})"];')
    for key in sorted(graph.edges):
        color, value = key
        name = COLOR_NAMES[color]
        members = graph.edges[key]
        if len(members) == 1:
            node = f"w{members[0] + 1}"
            lines.append(f"  {node} -- {node} [color={name}];")
        elif len(members) == 2:
            lines.append(
                f"  w{members[0] + 1} -- w{members[1] + 1} [color={name}];"
            )
        else:
            hub = f"h_{name}_{value}"
            lines.append(f"  {hub} [shape=point, color={name}];")
            for member in members:
                lines.append(f"  {hub} -- w{member + 1} [color={name}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


__all__ = ["landmark_graph_to_dot"]
