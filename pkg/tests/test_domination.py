"""Domination flags, their witnesses, and the implication chain."""

import random

from metricdim import (
    Cone,
    LandmarkSet,
    Params,
    all_params,
    are_adjacent,
    build_landmark_graph,
    classify_cone,
    construct_middle,
    construct_plus_one,
    domination_report,
    domination_report_to_obj,
    enumerate_vertices,
    footprint,
    is_resolving_distances,
)


def brute_force_flags(lset: LandmarkSet):
    """Direct adjacency scan; returns the four flags plus least witnesses."""
    p = lset.params
    in_set = set(lset.landmarks)
    no_neighbor = [
        v
        for v in enumerate_vertices(p)
        if not any(are_adjacent(p, v, w) for w in lset.landmarks)
    ]
    outside_misses = [v for v in no_neighbor if v not in in_set]
    dominating = not outside_misses
    total = not no_neighbor
    resolving = is_resolving_distances(lset).resolving
    return {
        "dominating": dominating,
        "total_dominating": total,
        "locating_dominating": resolving and dominating,
        "locating_total_dominating": resolving and total,
        "dominating_witness": outside_misses[0] if outside_misses else None,
        "total_dominating_witness": no_neighbor[0] if no_neighbor else None,
    }


class TestKnownSets:
    def test_single_landmark_dominates_nothing_well(self):
        ls = LandmarkSet(Params(3, 3, 3), ((1, 1, 1),))
        report = domination_report(ls)
        assert not report.total_dominating
        # A vertex is never adjacent to itself, so the landmark is the first
        # vertex without a landmark neighbor.
        assert report.total_dominating_witness == (1, 1, 1)
        assert not report.dominating
        assert report.dominating_witness == (1, 1, 2)
        assert not report.locating_dominating
        assert not report.locating_total_dominating
        assert report.unresolved_pair == ((1, 1, 2), (1, 1, 3))

    def test_fig1_is_locating_total_dominating(self, fig1_set):
        report = domination_report(fig1_set)
        assert report.dominating
        assert report.total_dominating
        assert report.locating_dominating
        assert report.locating_total_dominating
        assert report.dominating_witness is None
        assert report.total_dominating_witness is None
        assert report.unresolved_pair is None

    def test_construction_output_is_total_dominating(self):
        lset, _ = construct_middle(Params(5, 6, 11))
        report = domination_report(lset)
        assert report.total_dominating
        assert report.locating_total_dominating

    def test_plus_one_output_is_locating_total_dominating(self):
        report = domination_report(construct_plus_one(Params(3, 4, 6)))
        assert report.dominating
        assert report.total_dominating
        assert report.locating_dominating
        assert report.locating_total_dominating


class TestAgainstBruteForce:
    def test_random_sets_match_adjacency_scan(self):
        rng = random.Random(5)
        for n in ((3, 3, 3), (3, 4, 5)):
            p = Params(*n)
            verts = list(enumerate_vertices(p))
            for _ in range(25):
                size = rng.randint(1, 8)
                ls = LandmarkSet(p, tuple(rng.sample(verts, size)))
                report = domination_report(ls)
                expected = brute_force_flags(ls)
                assert report.dominating == expected["dominating"]
                assert report.total_dominating == expected["total_dominating"]
                assert (
                    report.locating_dominating
                    == expected["locating_dominating"]
                )
                assert (
                    report.locating_total_dominating
                    == expected["locating_total_dominating"]
                )
                assert (
                    report.dominating_witness
                    == expected["dominating_witness"]
                )
                assert (
                    report.total_dominating_witness
                    == expected["total_dominating_witness"]
                )

    def test_implication_chain(self):
        rng = random.Random(77)
        p = Params(3, 3, 4)
        verts = list(enumerate_vertices(p))
        for _ in range(40):
            ls = LandmarkSet(p, tuple(rng.sample(verts, rng.randint(1, 10))))
            report = domination_report(ls)
            if report.total_dominating:
                assert report.dominating
            if report.locating_total_dominating:
                assert report.locating_dominating
                assert report.total_dominating
            if report.locating_dominating:
                assert report.dominating
                assert is_resolving_distances(ls).resolving


class TestFootprintSizeArgument:
    def test_construction_footprints_leave_a_landmark_uncovered(self):
        # Any vertex's footprint meets one blue fiber, one green fiber, and
        # one pink stick, which never adds up to the whole 2*n3-landmark set;
        # the uncovered landmark is then a neighbor, forcing total domination.
        for p in all_params(12):
            if classify_cone(p) is not Cone.MIDDLE:
                continue
            lset, _ = construct_middle(p)
            graph = build_landmark_graph(lset)
            bound = p.n1 + p.n2 + 2
            assert bound < len(lset)
            worst = max(
                len(footprint(graph, v).covered)
                for v in enumerate_vertices(p)
            )
            assert worst <= bound


class TestSerialization:
    def test_report_round_trips_to_plain_types(self):
        ls = LandmarkSet(Params(3, 3, 3), ((1, 1, 1),))
        obj = domination_report_to_obj(domination_report(ls))
        assert obj == {
            "dominating": False,
            "total_dominating": False,
            "locating_dominating": False,
            "locating_total_dominating": False,
            "dominating_witness": [1, 1, 2],
            "total_dominating_witness": [1, 1, 1],
            "unresolved_pair": [[1, 1, 2], [1, 1, 3]],
        }

    def test_all_clear_report_serializes_nones(self, fig1_set):
        obj = domination_report_to_obj(domination_report(fig1_set))
        assert obj["dominating_witness"] is None
        assert obj["total_dominating_witness"] is None
        assert obj["unresolved_pair"] is None
        assert all(
            obj[key]
            for key in (
                "dominating",
                "total_dominating",
                "locating_dominating",
                "locating_total_dominating",
            )
        )
