"""Exhaustive enumeration of labelings and orientations, with symmetry
reduction, a polynomial dynamic program for oriented paths, and small
census routines (alternating-path scan, tournament survey).

Orientation enumeration is ascending over the bit-vector integers; arc
reversal symmetry pins bit 0 to 0 and halves the range, complement
symmetry pins vertex 0's label to 0 and halves the labeling scan.
Parallel scans partition the orientation counter into contiguous integer
ranges, so results are independent of worker count.
"""

from __future__ import annotations

import enum
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from .engine import _first_balanced_mask, _friendly_masks
from .graphs import (
    Digraph,
    Graph,
    Orientation,
    VertexLabeling,
    alternating_path,
    complete_graph,
)


class SymmetryMode(enum.Enum):
    """Which symmetry reductions an orientation search applies."""

    NONE = "none"
    FIX_FIRST_ARC = "fix_first_arc"
    FIX_FIRST_LABEL = "fix_first_label"
    BOTH = "both"

    @property
    def fix_arc(self) -> bool:
        return self in (SymmetryMode.FIX_FIRST_ARC, SymmetryMode.BOTH)

    @property
    def fix_label(self) -> bool:
        return self in (SymmetryMode.FIX_FIRST_LABEL, SymmetryMode.BOTH)


def friendly_labelings(
    n: int, fix_first_label: bool = False
) -> Iterator[VertexLabeling]:
    """All friendly labelings of n vertices in ascending bitmask order.

    With fix_first_label, vertex 0 is always labeled 0, keeping one
    labeling per complement pair.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    for mask in _friendly_masks(n, fix_first_label):
        yield VertexLabeling(n, mask)


def orientations(graph: Graph, fix_first_arc: bool = False) -> Iterator[Orientation]:
    """All orientations of a graph as ascending bit-vector integers.

    With fix_first_arc, bit 0 is pinned to 0 (arc reversal symmetry),
    yielding 2^(m-1) orientations instead of 2^m.
    """
    m = graph.edge_count
    step = 2 if fix_first_arc and m > 0 else 1
    for bits in range(0, 1 << m, step):
        yield Orientation(graph, bits)


@dataclass(frozen=True)
class SearchReport:
    """Result of a non-cordial-orientation hunt over one graph."""

    graph_descriptor: str
    total_orientations_scanned: int
    noncordial: tuple[Orientation, ...]
    symmetry_mode: SymmetryMode
    wall_time: float


def _scan_chunk(args: tuple) -> list[int]:
    """Scan one contiguous range of orientation integers; return failures."""
    n, edges, start, stop, step, fix_label = args
    masks = list(_friendly_masks(n, fix_label))
    failures = []
    m = len(edges)
    for bits in range(start, stop, step):
        arcs = tuple(
            (v, u) if (bits >> j) & 1 else (u, v) for j, (u, v) in enumerate(edges)
        )
        if _first_balanced_mask(arcs, masks) is None:
            failures.append(bits)
    return failures


def noncordial_orientations(
    graph: Graph,
    symmetry: SymmetryMode = SymmetryMode.NONE,
    jobs: int | None = None,
    descriptor: str | None = None,
) -> SearchReport:
    """Enumerate orientations and collect those with no cordial labeling.

    Failures are listed in ascending bit-vector order regardless of the
    worker count.
    """
    n = graph.vertex_count
    edges = graph.edges
    m = len(edges)
    jobs = 1 if jobs is None else max(1, jobs)
    t0 = time.perf_counter()
    step = 2 if symmetry.fix_arc and m > 0 else 1
    hi = 1 << m
    total = (hi + step - 1) // step
    if jobs == 1 or total < 4096:
        failing = _scan_chunk((n, edges, 0, hi, step, symmetry.fix_label))
    else:
        per = (total + jobs - 1) // jobs
        chunks = []
        for k in range(jobs):
            start = min(k * per, total) * step
            stop = min((k + 1) * per, total) * step
            if start < stop:
                chunks.append((n, edges, start, stop, step, symmetry.fix_label))
        with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
            parts = list(pool.map(_scan_chunk, chunks))
        failing = sorted(bits for part in parts for bits in part)
    report = SearchReport(
        graph_descriptor=descriptor or f"graph(n={n},m={m})",
        total_orientations_scanned=total,
        noncordial=tuple(Orientation(graph, bits) for bits in failing),
        symmetry_mode=symmetry,
        wall_time=time.perf_counter() - t0,
    )
    return report


def path_cordial_dp(digraph: Digraph) -> VertexLabeling | None:
    """Polynomial-time cordiality decision for an oriented path.

    The underlying graph must be the path 0 - 1 - ... - (n-1) with arcs
    listed in path order.  A dynamic program over states (ones used,
    +1 count, -1 count, previous label) decides whether a friendly
    labeling with balanced final counts exists and reconstructs one.
    """
    n = digraph.vertex_count
    arcs = digraph.arcs
    if n < 1 or len(arcs) != n - 1:
        raise ValueError("input is not an oriented path")
    forward = []
    for j, (t, h) in enumerate(arcs):
        if {t, h} != {j, j + 1}:
            raise ValueError("input is not an oriented path in path order")
        forward.append(t == j)
    m = n - 1
    cap = (m + 2) // 3
    max_ones = (n + 1) // 2
    # states[i]: set of (ones, alpha, beta, label of vertex i)
    states: list[set[tuple[int, int, int, int]]] = [{(0, 0, 0, 0), (1, 0, 0, 1)}]
    for i in range(1, n):
        fwd = forward[i - 1]
        nxt = set()
        for ones, alpha, beta, prev in states[i - 1]:
            for x in (0, 1):
                d = (x - prev) if fwd else (prev - x)
                a2 = alpha + (d == 1)
                b2 = beta + (d == -1)
                if a2 > cap or b2 > cap:
                    continue
                k2 = ones + x
                if k2 > max_ones:
                    continue
                nxt.add((k2, a2, b2, x))
        states.append(nxt)
    ok_ones = {n // 2, (n + 1) // 2}
    finals = sorted(
        s
        for s in states[-1]
        if s[0] in ok_ones
        and max(s[1], s[2], m - s[1] - s[2]) - min(s[1], s[2], m - s[1] - s[2]) <= 1
    )
    if not finals:
        return None
    ones, alpha, beta, last = finals[0]
    labels = [0] * n
    labels[n - 1] = last
    for i in range(n - 1, 0, -1):
        for q in (0, 1):
            d = (labels[i] - q) if forward[i - 1] else (q - labels[i])
            prev_state = (ones - labels[i], alpha - (d == 1), beta - (d == -1), q)
            if (
                prev_state[0] >= 0
                and prev_state[1] >= 0
                and prev_state[2] >= 0
                and prev_state in states[i - 1]
            ):
                ones, alpha, beta, _ = prev_state
                labels[i - 1] = q
                break
        else:
            raise AssertionError("DP reconstruction lost a state")
    return VertexLabeling.from_labels(labels)


def scan_alternating_paths(n_max: int) -> list[int]:
    """Even path sizes up to n_max whose alternating orientation is not cordial."""
    if n_max < 2 or n_max % 2:
        raise ValueError("n_max must be an even integer >= 2")
    return [
        n
        for n in range(2, n_max + 1, 2)
        if path_cordial_dp(alternating_path(n)) is None
    ]


@dataclass(frozen=True)
class TournamentSurvey:
    """Census of cordiality over all labeled tournaments on n vertices."""

    n: int
    total: int
    noncordial_count: int


def tournament_survey(n: int) -> TournamentSurvey:
    """Check every orientation of the complete graph on n vertices.

    Guarded to 1 <= n <= 6; the census size is 2^C(n,2).
    """
    if not 1 <= n <= 6:
        raise ValueError("tournament survey supports 1 <= n <= 6")
    g = complete_graph(n)
    edges = g.edges
    m = len(edges)
    masks = list(_friendly_masks(n, fix_first=True))
    noncordial = 0
    for bits in range(1 << m):
        arcs = tuple(
            (v, u) if (bits >> j) & 1 else (u, v) for j, (u, v) in enumerate(edges)
        )
        if _first_balanced_mask(arcs, masks) is None:
            noncordial += 1
    return TournamentSurvey(n=n, total=1 << m, noncordial_count=noncordial)
