"""Building resolving sets of size 2*n3 for the middle cone, by recipe.

For parameters with 3*max(n1, n2) <= 2*n3 <= n1*n2 the construction lays
out two blocks of n3 landmarks ("left" and "right") as 3 x n3 coordinate
matrices.  First coordinates follow a run-length schedule that splits n3
into n1 runs of lengths q and q+1; right first-coordinates are the left
ones shifted by one (mod n1).  Second coordinates cycle through half of
the available values on the left and the other half on the right.  Third
coordinates are simply 1..n3, so every third-coordinate group is a
two-landmark stick crossing the blocks.

An odd second factor needs retouching: the plain layout would let a right
stick land on the same second coordinate as its left partner.  With enough
long runs, each gets a "neutral" splice of the spare middle value at the
run's start; with too few, a single splice plus one landmark rewrite does
the job.  Either way the result is a basic system that avoids every
forbidden shape — and adding one landmark that is alone in all three of
its coordinate groups turns it into a minimum resolving set one size up.
"""

import json

from metricdim import (
    InputError,
    Params,
    check_basic,
    classify_cone,
    compute_multiplicities,
    construct_middle,
    construct_plus_one,
    is_resolving_distances,
    predict_resolving_triple_looped,
    trace_to_obj,
)


def show_matrices(lset) -> None:
    for side in ("L", "R"):
        rows = lset.side_matrix(side)
        label = {"L": "left ", "R": "right"}[side]
        for i, row in enumerate(rows):
            lead = f"  {label} " if i == 1 else "        "
            print(lead + " ".join(f"{v:>2}" for v in row))
        print()


def main() -> None:
    print("Run-length schedules (n3 split into n1 runs):")
    for n1, n3 in ((5, 11), (5, 17), (4, 7), (3, 6)):
        m = compute_multiplicities(n1, n3)
        print(f"  n1={n1}, n3={n3}:  q={m.q}, r={m.r}, schedule {m.schedule}")
    print()

    for tup in ((5, 6, 11), (5, 7, 11), (5, 7, 17)):
        p = Params(*tup)
        lset, trace = construct_middle(p)
        print(f"=== K{p.as_tuple()}  ({trace.parity} second factor) ===")
        show_matrices(lset)
        if trace.inserts:
            print(f"  spare-value splices at (left, right) columns: "
                  f"{trace.inserts}")
        if trace.replacement:
            old, new = trace.replacement
            print(f"  one landmark rewritten: {old} -> {new}")
        print(f"  basic: {check_basic(lset).verdict}   "
              f"resolving: {is_resolving_distances(lset).resolving}   "
              f"extension will resolve one size up: "
              f"{predict_resolving_triple_looped(lset)}")
        print()

    p = Params(5, 7, 11)
    print(f"The construction trace for K{p.as_tuple()} serializes for replay:")
    print("  " + json.dumps(trace_to_obj(construct_middle(p)[1])))
    print()

    bumped = construct_plus_one(p)
    verdict = is_resolving_distances(bumped)
    print(f"Adding the lone-in-every-group landmark {bumped.landmarks[-1]}")
    print(f"gives {len(bumped)} landmarks resolving "
          f"K{bumped.params.as_tuple()}: {verdict.resolving}")
    print(f"(2*n3 + 1 = {2 * p.n3 + 1} is the metric dimension there, so this")
    print("is a minimum resolving set.)")
    print()

    print("Outside the middle cone the recipe refuses to run:")
    for tup in ((4, 5, 7), (3, 3, 9)):
        q = Params(*tup)
        try:
            construct_middle(q)
        except InputError as exc:
            print(f"  K{q.as_tuple()} ({classify_cone(q).value} cone): {exc}")


if __name__ == "__main__":
    main()
