"""Hunting for minimum resolving sets when no recipe applies.

Three tools, in decreasing rigor: an exhaustive scan that proves the
minimum (and reports the lexicographically least witness), a greedy
refinement heuristic that only gives an upper bound, and a rejection
sampler that produces random basic systems for experiments.  The scan's
work is metered: each candidate subset costs its size-complement product,
and a budget caps the total so runs stay predictable.
"""

import json

from metricdim import (
    Params,
    check_basic,
    exhaustive_min_resolving,
    greedy_resolving,
    is_resolving_distances,
    random_basic_system,
    search_result_to_obj,
)


def main() -> None:
    p = Params(3, 3, 3)
    print(f"Exhaustive search on K{p.as_tuple()} (27 vertices):")
    result = exhaustive_min_resolving(p, max_size=6)
    print(f"  minimum size: {result.size}  (proved: {result.proved_minimum})")
    print(f"  sizes refuted on the way: {result.refuted_sizes}")
    print(f"  least witness set: {result.best.landmarks}")
    print(f"  subsets checked: {result.subsets_checked}")
    print()

    print("The same search under a tiny budget stops early but keeps what")
    print("it finished:")
    partial = exhaustive_min_resolving(p, max_size=6, budget=10_000)
    print(f"  refuted so far: {partial.refuted_sizes}")
    print(f"  inconclusive because: {partial.inconclusive_reason}")
    print()

    print("Greedy upper bounds (no optimality promise):")
    for tup, seeds in (((3, 3, 3), range(3)), ((3, 3, 8), range(5))):
        q = Params(*tup)
        best = None
        for seed in seeds:
            got = greedy_resolving(q, seed=seed)
            assert is_resolving_distances(got).resolving
            if best is None or len(got) < len(best):
                best = got
        print(f"  K{q.as_tuple()}: best of {len(list(seeds))} seeds has "
              f"{len(best)} landmarks")
    print("  (for K(3,3,3) the proved minimum is 6, so greedy's bound is")
    print("  close but not always tight)")
    print()

    print("Random basic systems, rejection-sampled at size 2*n3:")
    q = Params(3, 4, 5)
    sample = random_basic_system(q, seed=3)
    print(f"  K{q.as_tuple()} seed 3 -> {sample.landmarks}")
    print(f"  basic: {check_basic(sample).verdict}")
    upper = Params(3, 3, 7)
    print(f"  K{upper.as_tuple()} (upper cone, 2*n3 = {2 * upper.n3} > "
          f"{upper.n1 * upper.n2} cells): "
          f"{random_basic_system(upper, seed=0, attempts=300)}")
    print("  (no basic system of that size fits, so sampling always fails)")
    print()

    print("Search results serialize, seed and budget included:")
    print("  " + json.dumps(search_result_to_obj(partial)))


if __name__ == "__main__":
    main()
