"""Domination-style properties of landmark sets.

A set dominates when every outside vertex has a landmark neighbor, and
totally dominates when every vertex (landmarks included) has one.  Combined
with resolving these give the locating variants.  In the diameter-two product
a vertex has a landmark neighbor exactly when some landmark differs from it
in all three coordinates, i.e. when its footprint fails to cover the whole
set.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Vertex, enumerate_vertices
from .landmarks import (
    COLORS,
    LandmarkSet,
    VerifyResult,
    is_resolving_distances,
)


@dataclass(frozen=True)
class DominationReport:
    """Flags plus the least failing vertex for each false domination flag.

    The locating flags are the conjunction of resolving with the matching
    domination flag; when they fail because resolving fails, the unresolved
    pair is in `unresolved_pair`.
    """

    dominating: bool
    total_dominating: bool
    locating_dominating: bool
    locating_total_dominating: bool
    dominating_witness: Vertex | None
    total_dominating_witness: Vertex | None
    unresolved_pair: tuple[Vertex, Vertex] | None


def domination_report(lset: LandmarkSet) -> DominationReport:
    p = lset.params
    count = len(lset.landmarks)
    masks: dict[tuple[int, int], int] = {}
    for index, v in enumerate(lset.landmarks):
        for color in COLORS:
            key = (color, v[color - 1])
            masks[key] = masks.get(key, 0) | (1 << index)
    everyone = (1 << count) - 1
    in_set = set(lset.landmarks)
    dominating_witness: Vertex | None = None
    total_witness: Vertex | None = None
    for v in enumerate_vertices(p):
        covered = (
            masks.get((1, v[0]), 0)
            | masks.get((2, v[1]), 0)
            | masks.get((3, v[2]), 0)
        )
        if covered != everyone:
            continue
        # No landmark differs from v everywhere, so v has no landmark neighbor.
        if total_witness is None:
            total_witness = v
        if v not in in_set:
            dominating_witness = v
            break
    check: VerifyResult = is_resolving_distances(lset)
    dominating = dominating_witness is None
    total = total_witness is None
    return DominationReport(
        dominating=dominating,
        total_dominating=total,
        locating_dominating=check.resolving and dominating,
        locating_total_dominating=check.resolving and total,
        dominating_witness=dominating_witness,
        total_dominating_witness=total_witness,
        unresolved_pair=check.witness,
    )


def domination_report_to_obj(report: DominationReport) -> dict:
    return {
        "dominating": report.dominating,
        "total_dominating": report.total_dominating,
        "locating_dominating": report.locating_dominating,
        "locating_total_dominating": report.locating_total_dominating,
        "dominating_witness": None
        if report.dominating_witness is None
        else list(report.dominating_witness),
        "total_dominating_witness": None
        if report.total_dominating_witness is None
        else list(report.total_dominating_witness),
        "unresolved_pair": None
        if report.unresolved_pair is None
        else [list(v) for v in report.unresolved_pair],
    }


__all__ = ["DominationReport", "domination_report", "domination_report_to_obj"]
