"""Two-block landmark constructions for middle-cone parameters.

For middle-cone (n1, n2, n3) the construction lays out two blocks of n3
landmarks each, one "left" and one "right", described by 3 x n3 coordinate
matrices.  Third coordinates run 1..n3 in both blocks, so every pink fiber is
a cross-block stick.  Second coordinates cycle through 1..floor(n2/2) on the
left and the upper half on the right.  First coordinates follow a run-length
schedule (the multiplicities), with the right block shifted up by one
cyclically.

Odd n2 starts from the even layout for n2 - 1 and splices in landmarks with
the spare second coordinate n2 ("neutral" landmarks): either one pair per
overweight run, or a single pair plus one in-place coordinate replacement
when fewer than two runs are overweight.

The resulting 2*n3 landmarks resolve K(n1, n2, n3); adding the triple-loop
vertex on top yields a minimum resolving set of K(n1+1, n2+1, n3+1).
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Cone, DomainError, InputError, InternalError, Params, Vertex, classify_cone
from .landmarks import LandmarkSet, extend_triple_loop


@dataclass(frozen=True)
class Multiplicities:
    """Run lengths for the first-coordinate rows.

    n3 = q*n1 + r with 0 <= r < n1.  The schedule spreads r runs of length
    q+1 among n1 - r runs of length q, alternating from the front so that
    equal lengths never have to sit together unless the tail forces it.
    """

    q: int
    r: int
    schedule: tuple[int, ...]


def compute_multiplicities(n1: int, n3: int) -> Multiplicities:
    if n1 < 3 or n3 < n1:
        raise DomainError(f"need 3 <= n1 <= n3, got n1={n1}, n3={n3}")
    q, r = divmod(n3, n1)
    if r <= n1 - r:
        schedule = (q + 1, q) * r + (q,) * (n1 - 2 * r)
    else:
        schedule = (q + 1, q) * (n1 - r) + (q + 1,) * (2 * r - n1)
    return Multiplicities(q, r, schedule)


def block_starts(schedule: tuple[int, ...]) -> tuple[int, ...]:
    """1-based starting column of each first-coordinate run."""
    starts = []
    position = 1
    for length in schedule:
        starts.append(position)
        position += length
    return tuple(starts)


@dataclass(frozen=True)
class ConstructionTrace:
    """Everything needed to replay a construction by hand.

    half = floor(n2/2); over_half counts the runs longer than half (only
    those trigger neutral-pair inserts in the odd case).  inserts lists the
    (left column, right column) positions that received the spare coordinate;
    replacement records the single landmark rewrite of the low-over_half odd
    case, as (old, new).
    """

    params: Params
    parity: str
    half: int
    multiplicities: Multiplicities
    starts: tuple[int, ...]
    over_half: int
    inserts: tuple[tuple[int, int], ...]
    replacement: tuple[Vertex, Vertex] | None


def _require_middle(p: Params) -> None:
    cone = classify_cone(p)
    if cone is not Cone.MIDDLE:
        raise InputError(
            f"parameters {p.as_tuple()} lie in the {cone.value.lower()} cone; "
            "the construction covers only the middle cone"
        )


def _even_rows(
    n1: int, even_n2: int, n3: int
) -> tuple[Multiplicities, list[list[int]], list[list[int]]]:
    """Left and right coordinate rows for an even second factor."""
    mult = compute_multiplicities(n1, n3)
    half = even_n2 // 2
    left_first: list[int] = []
    for value, length in enumerate(mult.schedule, start=1):
        left_first.extend([value] * length)
    right_first = [value % n1 + 1 for value in left_first]
    left_second = [(j % half) + 1 for j in range(n3)]
    right_second = [value + half for value in left_second]
    third = list(range(1, n3 + 1))
    return mult, [left_first, left_second, third], [right_first, right_second, third[:]]


def _rows_to_set(p: Params, left: list[list[int]], right: list[list[int]]) -> LandmarkSet:
    landmarks = [tuple(row[j] for row in left) for j in range(p.n3)]
    landmarks += [tuple(row[j] for row in right) for j in range(p.n3)]
    sides = ("L",) * p.n3 + ("R",) * p.n3
    try:
        return LandmarkSet(p, tuple(landmarks), sides)
    except InputError as exc:
        raise InternalError(f"construction produced an invalid set: {exc}") from exc


def construct_even(p: Params) -> tuple[LandmarkSet, ConstructionTrace]:
    """Two-block layout for even n2; all 2*n3 landmarks, no edits needed."""
    _require_middle(p)
    if p.n2 % 2 != 0:
        raise InputError(f"construct_even needs even n2, got {p.n2}")
    mult, left, right = _even_rows(p.n1, p.n2, p.n3)
    half = p.n2 // 2
    trace = ConstructionTrace(
        params=p,
        parity="even",
        half=half,
        multiplicities=mult,
        starts=block_starts(mult.schedule),
        over_half=sum(1 for length in mult.schedule if length > half),
        inserts=(),
        replacement=None,
    )
    return _rows_to_set(p, left, right), trace


def construct_odd(p: Params) -> tuple[LandmarkSet, ConstructionTrace]:
    """Odd-n2 layout: even layout for n2 - 1 plus neutral-coordinate edits.

    With at least two overweight runs, one neutral pair is spliced in at the
    start of each; the positions are read off the run schedule once and
    applied in increasing order, each insert shifting the second row right by
    one (the last entry falls out).  Otherwise a single pair goes in at
    column 1 and one left landmark (x, 1, z) with x not in {1, 2, n1} is
    rewritten to (x, n2, z), smallest x then smallest z first.
    """
    _require_middle(p)
    if p.n2 % 2 == 0:
        raise InputError(f"construct_odd needs odd n2, got {p.n2}")
    half = p.n2 // 2
    mult, left, right = _even_rows(p.n1, p.n2 - 1, p.n3)
    left_first, left_second, _ = left
    right_second = right[1]
    starts = block_starts(mult.schedule)
    heavy = [i for i, length in enumerate(mult.schedule) if length > half]

    inserts: list[tuple[int, int]] = []
    replacement: tuple[Vertex, Vertex] | None = None

    def splice(column: int) -> None:
        left_second.insert(column - 1, p.n2)
        left_second.pop()
        right_second.insert(column, p.n2)
        right_second.pop()
        inserts.append((column, column + 1))

    if len(heavy) >= 2:
        for run in heavy:
            splice(starts[run])
    else:
        splice(1)
        candidates = sorted(
            (left_first[j], j + 1)
            for j in range(p.n3)
            if left_second[j] == 1 and left_first[j] not in (1, 2, p.n1)
        )
        if not candidates:
            raise InternalError(
                "odd construction found no landmark (x,1,z) with x outside {1,2,n1}"
            )
        x, column = candidates[0]
        replacement = ((x, 1, column), (x, p.n2, column))
        left_second[column - 1] = p.n2

    lset = _rows_to_set(p, left, right)
    neutral_count = left_second.count(p.n2) + right_second.count(p.n2)
    expected = 2 * len(heavy) if len(heavy) >= 2 else 3
    if neutral_count != expected:
        raise InternalError(
            f"odd construction ended with {neutral_count} neutral landmarks, "
            f"expected {expected}"
        )
    trace = ConstructionTrace(
        params=p,
        parity="odd",
        half=half,
        multiplicities=mult,
        starts=starts,
        over_half=len(heavy),
        inserts=tuple(inserts),
        replacement=replacement,
    )
    return lset, trace


def construct_middle(p: Params) -> tuple[LandmarkSet, ConstructionTrace]:
    """Dispatch on the parity of n2; middle-cone parameters only."""
    _require_middle(p)
    if p.n2 % 2 == 0:
        return construct_even(p)
    return construct_odd(p)


def construct_plus_one(p: Params) -> LandmarkSet:
    """Construction for p plus the triple-loop vertex, over the bumped orders.

    The 2*n3 + 1 landmarks form a minimum resolving set of
    K(n1+1, n2+1, n3+1).
    """
    lset, _ = construct_middle(p)
    return extend_triple_loop(lset)


def trace_to_obj(trace: ConstructionTrace) -> dict:
    """JSON-ready form of a construction trace."""
    return {
        "n": list(trace.params.as_tuple()),
        "parity": trace.parity,
        "half": trace.half,
        "q": trace.multiplicities.q,
        "r": trace.multiplicities.r,
        "schedule": list(trace.multiplicities.schedule),
        "block_starts": list(trace.starts),
        "over_half": trace.over_half,
        "inserts": [list(pair) for pair in trace.inserts],
        "replacement": None
        if trace.replacement is None
        else {"from": list(trace.replacement[0]), "to": list(trace.replacement[1])},
    }


__all__ = [
    "Multiplicities",
    "ConstructionTrace",
    "compute_multiplicities",
    "block_starts",
    "construct_even",
    "construct_odd",
    "construct_middle",
    "construct_plus_one",
    "trace_to_obj",
]
