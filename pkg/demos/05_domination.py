"""Domination properties of landmark sets, and how they mesh with resolving.

A set dominates when every outside vertex has a neighbor inside it, and
totally dominates when every vertex — members included — has a neighbor
inside it.  Combining each with the resolving property gives the locating
variants.  In these graphs a resolving set of the middle-cone construction
turns out to earn all four flags at once, which is what makes its size
simultaneously the metric dimension, the locating-domination number, and
the locating-total-domination number one step up the parameter ladder.
"""

import json

from metricdim import (
    LandmarkSet,
    Params,
    build_landmark_graph,
    construct_middle,
    construct_plus_one,
    domination_report,
    domination_report_to_obj,
    enumerate_vertices,
    footprint,
)


def show(tag: str, lset: LandmarkSet) -> None:
    r = domination_report(lset)
    print(f"  {tag}")
    print(f"    dominating={r.dominating}  total={r.total_dominating}  "
          f"locating={r.locating_dominating}  "
          f"locating-total={r.locating_total_dominating}")
    if r.dominating_witness:
        print(f"    vertex with no neighbor in the set: "
              f"{r.dominating_witness}")
    if r.total_dominating_witness and not r.dominating_witness:
        print(f"    member with no neighbor in the set: "
              f"{r.total_dominating_witness}")
    if r.unresolved_pair:
        print(f"    unresolved pair blocking the locating flags: "
              f"{r.unresolved_pair}")


def main() -> None:
    print("Flags for three sets in K(3, 3, 3) / K(5, 6, 11):")
    p = Params(3, 3, 3)
    show("a single landmark ((1,1,1)):",
         LandmarkSet(p, ((1, 1, 1),)))
    mid = Params(5, 6, 11)
    built = construct_middle(mid)[0]
    show(f"the 22-landmark construction for K{mid.as_tuple()}:", built)
    bumped = construct_plus_one(mid)
    show(f"its 23-landmark extension in K{bumped.params.as_tuple()}:", bumped)
    print()

    print("Why a small set cannot fake it in the middle cone: any vertex")
    print("agrees with at most n1 + n2 + 2 landmarks of the construction")
    print("(two full third-coordinate sticks plus one edge of each other")
    print("color), while the construction has 2*n3 landmarks.")
    graph = build_landmark_graph(built)
    worst = max(
        len(footprint(graph, v).covered) for v in enumerate_vertices(mid)
    )
    print(f"  K{mid.as_tuple()}: worst-case coverage {worst} <= "
          f"{mid.n1 + mid.n2 + 2} < {2 * mid.n3} landmarks")
    print()

    print("The report serializes with its witnesses:")
    single = LandmarkSet(p, ((1, 1, 1),))
    print("  " + json.dumps(domination_report_to_obj(domination_report(single))))


if __name__ == "__main__":
    main()
