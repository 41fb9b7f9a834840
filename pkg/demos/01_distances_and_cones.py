"""A tour of the graph family itself: vertices, distances, and the three
parameter regions.

The graph K(n1, n2, n3) has one vertex per triple (a1, a2, a3) with
1 <= ai <= ni, and two vertices are adjacent exactly when they differ in
every coordinate.  Everything else in this package builds on the curious
consequence that the graph has diameter two: agree somewhere (but not
everywhere) and you are at distance two.
"""

from metricdim import (
    Cone,
    Params,
    all_params,
    are_adjacent,
    classify_cone,
    distance,
    enumerate_vertices,
)


def main() -> None:
    p = Params(3, 4, 5)
    print(f"K{p.as_tuple()} has {p.vertex_count} vertices "
          f"({p.n1} * {p.n2} * {p.n3}).")
    print()

    u = (1, 1, 1)
    samples = [(1, 1, 1), (2, 2, 2), (2, 2, 1), (1, 4, 5), (3, 3, 3)]
    print(f"Distances from {u}:")
    for v in samples:
        d = distance(p, u, v)
        how = {
            0: "same vertex",
            1: "adjacent: differs in every coordinate",
            2: "agrees in at least one coordinate",
        }[d]
        print(f"  d({u}, {v}) = {d}   ({how})")
    print()

    neighbors = sum(1 for v in enumerate_vertices(p) if are_adjacent(p, u, v))
    expected = (p.n1 - 1) * (p.n2 - 1) * (p.n3 - 1)
    print(f"{u} has {neighbors} neighbors; every vertex has "
          f"(n1-1)(n2-1)(n3-1) = {expected}.")
    print()

    print("The parameter space splits into three cones by the size of n3")
    print("relative to the other two factors:")
    print("  lower cone   2*n3 <  3*max(n1, n2)")
    print("  middle cone  3*max(n1, n2) <= 2*n3 <= n1*n2")
    print("  upper cone   2*n3 >  n1*n2")
    print()
    for tup in [(4, 5, 7), (4, 5, 8), (4, 5, 10), (4, 5, 11),
                (3, 3, 3), (3, 3, 5), (4, 4, 6), (4, 4, 8)]:
        q = Params(*tup)
        cone = classify_cone(q)
        lo, mid_hi = 3 * max(q.n1, q.n2), q.n1 * q.n2
        print(f"  K{str(q.as_tuple()):<12}  2*n3 = {2 * q.n3:>3}  "
              f"window [{lo}, {mid_hi}]  ->  {cone.value}")
    print()

    middle = [q for q in all_params(8) if classify_cone(q) is Cone.MIDDLE]
    print(f"Middle-cone parameter points with n3 <= 8 ({len(middle)} total):")
    print("  " + ", ".join(str(q.as_tuple()) for q in middle))
    print()
    print("The middle cone is where the constructive machinery of this")
    print("package operates; the other demos pick their parameters from it.")


if __name__ == "__main__":
    main()
