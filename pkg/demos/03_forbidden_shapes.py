"""The hypergraph shapes that doom a landmark set.

Certain small patterns in the colored hypergraph of a landmark set already
force two outside vertices to agree with exactly the same landmarks, so no
distance vector can tell them apart.  Three shapes kill a set on its own
graph — the bad 4-cycle, the plain hex, and the shark teeth — and a fourth,
the rainbow 2-2-triangle, kills the set obtained by appending a new landmark
that is alone in all three of its coordinate groups.

For basic systems this is the whole story: a basic system resolves exactly
when its graph avoids the first three shapes, and its triple-loop extension
resolves the bumped graph exactly when it also avoids rainbow triangles.
"""

from metricdim import (
    LandmarkSet,
    Params,
    build_landmark_graph,
    construct_middle,
    extend_triple_loop,
    find_all_forbidden,
    find_bad_4_cycles,
    is_resolving_distances,
    predict_resolving_basic,
    predict_resolving_triple_looped,
    witness_to_obj,
)

EXAMPLES = {
    "bad 4-cycle": (
        Params(3, 3, 3),
        ((1, 1, 1), (2, 2, 1), (3, 2, 2), (1, 3, 2)),
    ),
    "plain hex": (
        Params(3, 4, 5),
        ((1, 1, 1), (1, 2, 2), (2, 2, 3), (3, 3, 3), (3, 4, 4), (2, 4, 1)),
    ),
    "shark teeth": (
        Params(3, 4, 5),
        ((1, 1, 1), (2, 1, 2), (1, 2, 2), (1, 3, 3), (3, 3, 4), (1, 4, 4)),
    ),
}


def main() -> None:
    for name, (p, landmarks) in EXAMPLES.items():
        lset = LandmarkSet(p, landmarks)
        graph = build_landmark_graph(lset)
        hits = find_all_forbidden(graph)
        verdict = is_resolving_distances(lset)
        print(f"--- {name} in K{p.as_tuple()} ---")
        print(f"  landmarks: {landmarks}")
        for kind, witnesses in hits.items():
            for w in witnesses:
                obj = witness_to_obj(graph, w)
                print(f"  found {kind}: landmarks {obj['landmarks']}")
                print(f"    via edges {obj['hyperedges']}")
        print(f"  resolving? {verdict.resolving}; least unresolved pair "
              f"{verdict.witness}")
        print()

    print("--- rainbow 2-2-triangle: deadly only after extension ---")
    p = Params(3, 3, 3)
    core = LandmarkSet(p, ((1, 1, 1), (2, 1, 2), (1, 2, 2)))
    graph = build_landmark_graph(core)
    rainbows = find_all_forbidden(graph)["Rainbow22Triangle"]
    print(f"  three mutually touching sticks = {len(rainbows)} rainbow "
          "triangles (every vertex can play the middle)")
    extended = extend_triple_loop(core)
    print(f"  appended landmark {extended.landmarks[-1]} is a triple loop in "
          f"K{extended.params.as_tuple()}")
    after = is_resolving_distances(extended)
    print(f"  the extension resolves? {after.resolving}; pair {after.witness}")
    print()

    print("--- reading the verdict off the graph alone (basic systems) ---")
    built = construct_middle(Params(4, 5, 8))[0]
    print(f"  built 16-landmark system for K(4, 5, 8):")
    print(f"    shape-free prediction:  {predict_resolving_basic(built)}")
    print(f"    extension prediction:   {predict_resolving_triple_looped(built)}")
    print(f"    distance verifier:      {is_resolving_distances(built).resolving}")
    print()

    print("--- a near-miss that is NOT a bad 4-cycle ---")
    tricky = LandmarkSet(
        Params(3, 3, 3),
        ((3, 1, 1), (3, 2, 2), (2, 2, 1), (1, 2, 3),
         (2, 3, 1), (3, 3, 3), (3, 1, 3)),
    )
    g = build_landmark_graph(tricky)
    print("  two green sticks joined by a blue and a pink edge exist here,")
    print("  but one stick endpoint also sits inside the far joining edge,")
    print("  so the vertex pair the shape would certify includes a landmark.")
    print(f"  detected bad 4-cycles: {find_bad_4_cycles(g)}")
    print(f"  and indeed the set resolves: "
          f"{is_resolving_distances(tricky).resolving}")


if __name__ == "__main__":
    main()
