"""Exhaustive, greedy, and randomized searches for resolving sets.

The exhaustive search scans candidate subsets by increasing size, each size
in lexicographic order, and refuses to start a size whose estimated work
would blow the step budget.  The greedy search grows a set one landmark at a
time, always taking a landmark that separates the most currently-unresolved
pairs, breaking ties by seeded coin flip.  The randomized sampler draws
size-2*n3 sets with every fiber forced to hold at least two landmarks and
rejects until the basicness check passes.
"""

from __future__ import annotations

import itertools
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .core import InternalError, Params, Vertex, enumerate_vertices
from .landmarks import LandmarkSet, check_basic, is_resolving_distances

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a search run.

    proved_minimum is True only when every smaller size was exhaustively
    refuted and a set of this size was found.  refuted_sizes lists the sizes
    scanned to completion without a hit.  subsets_checked counts candidate
    subsets actually verified (with early exit, so thread counts change it;
    run single-threaded for byte-stable counters).
    """

    params: Params
    mode: str
    best: LandmarkSet | None
    size: int | None
    proved_minimum: bool
    refuted_sizes: tuple[int, ...]
    subsets_checked: int
    budget: int | None = None
    inconclusive_reason: str | None = None
    seed: int | None = None


def _share_masks(p: Params) -> tuple[list[Vertex], list[int]]:
    """Per-vertex bit vectors marking the other vertices sharing a coordinate."""
    verts = list(enumerate_vertices(p))
    fibers: dict[tuple[int, int], int] = {}
    for index, v in enumerate(verts):
        for color in (1, 2, 3):
            key = (color, v[color - 1])
            fibers[key] = fibers.get(key, 0) | (1 << index)
    masks = []
    for index, v in enumerate(verts):
        mask = fibers[(1, v[0])] | fibers[(2, v[1])] | fibers[(3, v[2])]
        masks.append(mask & ~(1 << index))
    return verts, masks


def _subset_resolves(members: tuple[int, ...], masks: list[int], total: int) -> bool:
    chosen = 0
    for index in members:
        chosen |= 1 << index
    seen: set[int] = set()
    for index in range(total):
        if (chosen >> index) & 1:
            continue
        signature = masks[index] & chosen
        if signature in seen:
            return False
        seen.add(signature)
    return True


def _scan_block(
    args: tuple[tuple[int, int, int], int, int | None]
) -> tuple[tuple[int, ...] | None, int]:
    """Scan all size-`size` subsets whose least element is `first` (or all)."""
    n, size, first = args
    p = Params(*n)
    _, masks = _share_masks(p)
    total = len(masks)
    checked = 0
    if first is None:
        pools = itertools.combinations(range(total), size)
    else:
        pools = (
            (first,) + rest
            for rest in itertools.combinations(range(first + 1, total), size - 1)
        )
    for members in pools:
        checked += 1
        if _subset_resolves(members, masks, total):
            return members, checked
    return None, checked


def exhaustive_min_resolving(
    p: Params,
    max_size: int,
    budget: int | None = None,
    threads: int = 1,
    allow_pruning: bool = False,
) -> SearchResult:
    """Provable minimum resolving-set search up to max_size landmarks.

    Sizes run 1..max_size; within a size, subsets are enumerated in
    lexicographic order and the first hit wins, so single-threaded runs
    report the lexicographically least resolving set of the minimum size.
    With allow_pruning (off by default, never used for acceptance runs) only
    subsets containing the first vertex are scanned; that is enough to decide
    existence because coordinate relabelings act transitively on vertices,
    but the reported set may differ from the unpruned scan.
    """
    if budget is None:
        budget = DEFAULT_BUDGET
    if max_size < 1:
        raise ValueError("max_size must be at least 1")
    verts, masks = _share_masks(p)
    total = len(verts)
    spent = 0
    checked_total = 0
    refuted: list[int] = []
    for size in range(1, min(max_size, total) + 1):
        if allow_pruning:
            cost = math.comb(total - 1, size - 1) * (total - size)
        else:
            cost = math.comb(total, size) * (total - size)
        if spent + cost > budget:
            return SearchResult(
                params=p,
                mode="exhaustive",
                best=None,
                size=None,
                proved_minimum=False,
                refuted_sizes=tuple(refuted),
                subsets_checked=checked_total,
                budget=budget,
                inconclusive_reason=(
                    f"size {size} needs about {cost} steps, budget has "
                    f"{budget - spent} left"
                ),
            )
        found: tuple[int, ...] | None = None
        if allow_pruning:
            found, checked = _scan_block((p.as_tuple(), size, 0))
            checked_total += checked
        elif threads <= 1:
            found, checked = _scan_block((p.as_tuple(), size, None))
            checked_total += checked
        else:
            firsts = list(range(total - size + 1))
            jobs = [(p.as_tuple(), size, first) for first in firsts]
            with ProcessPoolExecutor(max_workers=threads) as pool:
                for block_found, checked in pool.map(_scan_block, jobs):
                    checked_total += checked
                    if found is None and block_found is not None:
                        found = block_found
        spent += cost
        if found is not None:
            best = LandmarkSet(p, tuple(verts[i] for i in found))
            confirm = is_resolving_distances(best)
            if not confirm.resolving:
                raise InternalError(
                    f"search accepted a non-resolving set {best.landmarks}"
                )
            return SearchResult(
                params=p,
                mode="exhaustive",
                best=best,
                size=size,
                proved_minimum=True,
                refuted_sizes=tuple(refuted),
                subsets_checked=checked_total,
                budget=budget,
            )
        refuted.append(size)
    return SearchResult(
        params=p,
        mode="exhaustive",
        best=None,
        size=None,
        proved_minimum=False,
        refuted_sizes=tuple(refuted),
        subsets_checked=checked_total,
        budget=budget,
        inconclusive_reason=f"no resolving set of size <= {max_size}",
    )


def greedy_resolving(p: Params, seed: int = 0) -> LandmarkSet:
    """Grow a resolving set greedily; deterministic for a fixed seed.

    Keeps the outside vertices partitioned by their current distance
    signature; each step adds the vertex splitting the most same-class pairs,
    ties broken uniformly with the seeded generator.
    """
    rng = random.Random(seed)
    verts = list(enumerate_vertices(p))
    total = len(verts)
    coords = np.array(verts, dtype=np.int16)
    share = (
        (coords[:, None, 0] == coords[None, :, 0])
        | (coords[:, None, 1] == coords[None, :, 1])
        | (coords[:, None, 2] == coords[None, :, 2])
    )
    chosen: list[int] = []
    taken = np.zeros(total, dtype=bool)
    classes: list[np.ndarray] = [np.arange(total)]
    while True:
        splittable = [cls for cls in classes if len(cls) >= 2]
        if not splittable:
            break
        gains = np.zeros(total, dtype=np.int64)
        for cls in splittable:
            inside = share[cls].sum(axis=0)
            size = len(cls)
            gain = inside * (size - inside)
            # A candidate inside the class leaves it, shrinking both parts.
            gain[cls] = (inside[cls] - 1) * (size - inside[cls])
            gains += gain
        gains[taken] = -1
        best = int(gains.max())
        if best <= 0:
            raise InternalError("greedy stalled with unresolved pairs left")
        options = np.flatnonzero(gains == best)
        pick = int(options[rng.randrange(len(options))])
        taken[pick] = True
        chosen.append(pick)
        refined: list[np.ndarray] = []
        for cls in classes:
            cls = cls[cls != pick]
            if len(cls) == 0:
                continue
            hits = share[cls, pick]
            for part in (cls[hits], cls[~hits]):
                if len(part):
                    refined.append(part)
        classes = refined
    result = LandmarkSet(p, tuple(verts[i] for i in chosen))
    confirm = is_resolving_distances(result)
    if not confirm.resolving:
        raise InternalError("greedy returned a non-resolving set")
    return result


def random_basic_system(
    p: Params, seed: int, attempts: int = 10000
) -> LandmarkSet | None:
    """Rejection-sample a basic system of size 2*n3, or None on exhaustion.

    Coordinates are drawn with every value planted twice up front, so the
    fiber-presence and minimum-size conditions hold by construction and only
    the pairwise-intersection condition (and duplicate triples) can reject.
    In the upper cone 2*n3 exceeds n1*n2, so every attempt must fail.
    """
    rng = random.Random(seed)
    target = 2 * p.n3
    for _ in range(attempts):
        firsts = list(range(1, p.n1 + 1)) * 2
        firsts += [rng.randint(1, p.n1) for _ in range(target - 2 * p.n1)]
        seconds = list(range(1, p.n2 + 1)) * 2
        seconds += [rng.randint(1, p.n2) for _ in range(target - 2 * p.n2)]
        thirds = list(range(1, p.n3 + 1)) * 2
        rng.shuffle(firsts)
        rng.shuffle(seconds)
        rng.shuffle(thirds)
        triples = list(zip(firsts, seconds, thirds))
        if len(set(triples)) != target:
            continue
        candidate = LandmarkSet(p, tuple(triples))
        if check_basic(candidate).verdict:
            return candidate
    return None


def search_result_to_obj(result: SearchResult) -> dict:
    return {
        "n": list(result.params.as_tuple()),
        "mode": result.mode,
        "size": result.size,
        "landmarks": None
        if result.best is None
        else [list(v) for v in result.best.landmarks],
        "proved_minimum": result.proved_minimum,
        "refuted_sizes": list(result.refuted_sizes),
        "subsets_checked": result.subsets_checked,
        "budget": result.budget,
        "inconclusive_reason": result.inconclusive_reason,
        "seed": result.seed,
    }


__all__ = [
    "DEFAULT_BUDGET",
    "SearchResult",
    "exhaustive_min_resolving",
    "greedy_resolving",
    "random_basic_system",
    "search_result_to_obj",
]
