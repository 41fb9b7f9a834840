"""Reading a landmark set as a colored hypergraph.

Group the chosen landmarks by each coordinate: the landmarks sharing first
coordinate a form the blue edge (1, a), second coordinate the green edges,
third the pink edges.  Edge sizes get names — a loop holds one landmark, a
stick two, a poofy edge three or more.  A vertex outside the set is at
distance two from exactly the landmarks that share a coordinate with it, so
its three edges (its "footprint") are all the distance information there is.
That turns the resolving question into a question about this hypergraph.
"""

from metricdim import (
    COLOR_NAMES,
    LandmarkSet,
    Params,
    basic_size_bound,
    build_landmark_graph,
    check_basic,
    construct_middle,
    footprint,
    is_resolving_distances,
    is_resolving_footprints,
)

# A hand-picked resolving set of 13 landmarks for K(4, 5, 7).  The first 12
# sweep the coordinate values in a staggered pattern; the last sits alone in
# all three of its coordinate groups (a "triple loop").
LANDMARKS = (
    (1, 1, 1), (1, 2, 5), (1, 3, 2), (1, 4, 6),
    (2, 1, 3), (2, 2, 1), (2, 3, 4), (2, 4, 2),
    (3, 1, 5), (3, 2, 3), (3, 3, 6), (3, 4, 4),
    (4, 5, 7),
)


def size_name(k: int) -> str:
    return {1: "loop", 2: "stick"}.get(k, "poofy")


def main() -> None:
    p = Params(4, 5, 7)
    lset = LandmarkSet(p, LANDMARKS)
    graph = build_landmark_graph(lset)

    print(f"{len(lset)} landmarks in K{p.as_tuple()}, grouped three ways:")
    for color in (1, 2, 3):
        print(f"  {COLOR_NAMES[color]} edges (same coordinate {color}):")
        for key in graph.edges_of_color(color):
            members = graph.edges[key]
            triples = [graph.landmarks[i] for i in members]
            print(f"    value {key[1]}: {size_name(len(members)):<5} "
                  f"{triples}")
    print()

    v = (1, 5, 7)
    fp = footprint(graph, v)
    print(f"Footprint of the outside vertex {v}:")
    print(f"  edges {fp.edges}")
    print(f"  covers landmark indices {sorted(fp.covered)}")
    print("  (exactly the landmarks at distance two from it)")
    print()

    print("A landmark set is 'basic' when (1) every coordinate value of every")
    print("color appears, (2) every edge has at least two landmarks, and (3)")
    print("different-color edges share at most one landmark.")
    report = check_basic(lset)
    print(f"  the 13-set:      basic={report.verdict}  "
          f"(condition {report.condition} fails at {report.witness}: "
          "the triple loop's edges have size one)")
    first12 = LandmarkSet(p, LANDMARKS[:12])
    report12 = check_basic(first12)
    print(f"  its first 12:    basic={report12.verdict}  "
          f"(condition {report12.condition} fails at {report12.witness}: "
          "that coordinate value appears on no landmark)")
    basic_set = construct_middle(Params(3, 4, 6))[0]
    report_c = check_basic(basic_set)
    print(f"  a built system:  basic={report_c.verdict}  "
          f"({len(basic_set)} landmarks for K(3, 4, 6); see demo 04)")
    print(f"  basic systems obey the size cap |W| <= n1*n2: "
          f"{len(basic_set)} <= 12 is {basic_size_bound(basic_set)}")
    print()

    by_dist = is_resolving_distances(lset)
    by_fp = is_resolving_footprints(lset)
    print("Two independent verifiers, one comparing whole distance vectors,")
    print("one comparing footprints:")
    print(f"  distance verifier:  resolving={by_dist.resolving}")
    print(f"  footprint verifier: resolving={by_fp.resolving}")
    print()

    reduced = is_resolving_distances(first12)
    print(f"Dropping the triple loop breaks it: resolving={reduced.resolving},")
    print(f"least unresolved pair {reduced.witness}")


if __name__ == "__main__":
    main()
