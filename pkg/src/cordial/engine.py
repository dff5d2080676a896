"""Core (2,3)-cordiality calculus.

An arc t -> h under a (0,1) vertex labeling f receives the induced label
f(h) - f(t).  A digon-free digraph is (2,3)-cordial when some friendly
labeling (counts of 0s and 1s within one of each other) makes the counts
of +1, -1 and 0 arc labels pairwise differ by at most one.  An undirected
graph is (2,3)-orientable when some orientation is (2,3)-cordial, which
holds exactly when some friendly labeling leaves the monochromatic edge
count inside the window {floor(m/3), ceil(m/3)}; the witness orientation
is then constructed directly.

Labeling scans are halved by complement symmetry: flipping every vertex
label swaps the +1 and -1 arc counts, so vertex 0 can be pinned to label
0 without changing any verdict.  Reported witnesses are therefore
normalized to label vertex 0 with 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .graphs import (
    Digraph,
    GammaTriple,
    Graph,
    Orientation,
    VertexLabeling,
    orient,
)


def arc_label(f_tail: int, f_head: int) -> int:
    """Induced label of an arc whose endpoints carry bits f_tail, f_head."""
    return f_head - f_tail


def gamma_triple(digraph: Digraph, labeling: VertexLabeling) -> GammaTriple:
    """Count arcs labeled +1, -1 and 0 under the labeling."""
    if labeling.vertex_count != digraph.vertex_count:
        raise ValueError(
            f"labeling has {labeling.vertex_count} vertices, "
            f"digraph has {digraph.vertex_count}"
        )
    mask = labeling.mask
    alpha = beta = zero = 0
    for t, h in digraph.arcs:
        d = ((mask >> h) & 1) - ((mask >> t) & 1)
        if d > 0:
            alpha += 1
        elif d < 0:
            beta += 1
        else:
            zero += 1
    return GammaTriple(alpha, beta, zero)


def is_friendly(labeling: VertexLabeling) -> bool:
    """True when the numbers of 0- and 1-labeled vertices differ by at most 1."""
    ones = labeling.ones_count
    return abs(labeling.vertex_count - 2 * ones) <= 1


def is_balanced_triple(triple: GammaTriple) -> bool:
    """True when all pairwise differences among the counts are at most 1."""
    return max(triple) - min(triple) <= 1


def lambda_count(graph: Graph, labeling: VertexLabeling) -> int:
    """Number of monochromatic edges: both endpoints share a label.

    Equals the 0-arc count of every orientation of the graph under the
    same labeling.
    """
    if labeling.vertex_count != graph.vertex_count:
        raise ValueError(
            f"labeling has {labeling.vertex_count} vertices, "
            f"graph has {graph.vertex_count}"
        )
    mask = labeling.mask
    return sum(
        1 for u, v in graph.edges if not (((mask >> u) ^ (mask >> v)) & 1)
    )


def _friendly_masks(n: int, fix_first: bool = False) -> Iterator[int]:
    """All friendly labeling bitmasks of n vertices in ascending order.

    With fix_first, vertex 0 is pinned to label 0, which keeps exactly
    one labeling of each complement pair.
    """
    counts = {n // 2, (n + 1) // 2}
    for mask in range(1 << n):
        if fix_first and mask & 1:
            continue
        if mask.bit_count() in counts:
            yield mask


def _first_balanced_mask(
    arcs: tuple[tuple[int, int], ...], masks: Iterable[int]
) -> int | None:
    """First labeling mask whose induced arc-label counts are balanced.

    Aborts a labeling as soon as any count exceeds ceil(m/3), which no
    balanced triple summing to m can contain.
    """
    m = len(arcs)
    cap = (m + 2) // 3
    for mask in masks:
        alpha = beta = zero = 0
        ok = True
        for t, h in arcs:
            d = ((mask >> h) & 1) - ((mask >> t) & 1)
            if d > 0:
                alpha += 1
                if alpha > cap:
                    ok = False
                    break
            elif d < 0:
                beta += 1
                if beta > cap:
                    ok = False
                    break
            else:
                zero += 1
                if zero > cap:
                    ok = False
                    break
        if ok and max(alpha, beta, zero) - min(alpha, beta, zero) <= 1:
            return mask
    return None


@dataclass(frozen=True)
class LabelingReport:
    """Outcome of a labeling check on one digraph or graph."""

    labeling: VertexLabeling
    verdict: bool
    gamma: GammaTriple | None = None
    monochromatic: int | None = None

    def __post_init__(self) -> None:
        if self.gamma is not None:
            expected = is_balanced_triple(self.gamma) and is_friendly(self.labeling)
            if self.verdict != expected:
                raise ValueError("verdict inconsistent with gamma and labeling")


def is_cordial(digraph: Digraph) -> LabelingReport | None:
    """Search friendly labelings for a balanced arc labeling.

    Returns the report of the first witness in ascending labeling-mask
    order (vertex 0 pinned to label 0), or None when the digraph is not
    (2,3)-cordial.
    """
    n = digraph.vertex_count
    mask = _first_balanced_mask(digraph.arcs, _friendly_masks(n, fix_first=True))
    if mask is None:
        return None
    labeling = VertexLabeling(n, mask)
    return LabelingReport(
        labeling=labeling, verdict=True, gamma=gamma_triple(digraph, labeling)
    )


@dataclass(frozen=True)
class OrientabilityWitness:
    """A friendly labeling plus an orientation with balanced arc counts."""

    labeling: VertexLabeling
    orientation: Orientation
    gamma: GammaTriple

    def __post_init__(self) -> None:
        if not is_friendly(self.labeling):
            raise ValueError("witness labeling is not friendly")
        if not is_balanced_triple(self.gamma):
            raise ValueError("witness gamma is not balanced")
        recomputed = gamma_triple(
            orient(self.orientation.graph, self.orientation), self.labeling
        )
        if recomputed != self.gamma:
            raise ValueError("witness gamma does not match its orientation")


def construct_witness_orientation(
    graph: Graph, labeling: VertexLabeling
) -> Orientation:
    """Orient a graph so the arc-label counts come out balanced.

    Requires a friendly labeling whose monochromatic edge count lies in
    {floor(m/3), ceil(m/3)}.  The bichromatic edges, in canonical order,
    are oriented so the first ceil(m'/2) of them run from the 0-labeled
    endpoint to the 1-labeled one (+1 arcs) and the rest the other way;
    monochromatic edges run low index to high.  The result has gamma =
    (ceil(m'/2), floor(m'/2), lambda), balanced whenever the
    precondition holds.
    """
    if not is_friendly(labeling):
        raise ValueError("labeling is not friendly")
    m = graph.edge_count
    lam = lambda_count(graph, labeling)
    if lam not in (m // 3, (m + 2) // 3):
        raise ValueError(
            f"monochromatic count {lam} outside the balanced window for m={m}"
        )
    mask = labeling.mask
    plus_quota = (m - lam + 1) // 2
    bi_seen = 0
    bits = 0
    for j, (u, v) in enumerate(graph.edges):
        fu = (mask >> u) & 1
        fv = (mask >> v) & 1
        if fu == fv:
            continue
        bi_seen += 1
        want_plus = bi_seen <= plus_quota
        # A +1 arc must point at the 1-labeled endpoint.
        if want_plus != (fv == 1):
            bits |= 1 << j
    return Orientation(graph, bits)


def is_orientable(graph: Graph) -> OrientabilityWitness | None:
    """Decide (2,3)-orientability and build a constructive witness.

    Scans friendly labelings (vertex 0 pinned to 0) in ascending mask
    order; the first one whose monochromatic edge count lands in the
    balanced window yields the witness.
    """
    m = graph.edge_count
    lo, hi = m // 3, (m + 2) // 3
    n = graph.vertex_count
    edges = graph.edges
    for mask in _friendly_masks(n, fix_first=True):
        lam = 0
        for u, v in edges:
            if not (((mask >> u) ^ (mask >> v)) & 1):
                lam += 1
                if lam > hi:
                    break
        if lo <= lam <= hi:
            labeling = VertexLabeling(n, mask)
            o = construct_witness_orientation(graph, labeling)
            return OrientabilityWitness(
                labeling, o, gamma_triple(orient(graph, o), labeling)
            )
    return None
