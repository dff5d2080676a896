"""Edge-count bounds for (2,3)-orientability.

Under any friendly labeling of n vertices, the two label classes have
sizes ceil(n/2) and floor(n/2), so a graph has at most
ceil(n/2)*floor(n/2) bichromatic edges.  On the complete graph the
remaining Z = C(ceil(n/2),2) + C(floor(n/2),2) edges are forced
monochromatic whatever the labeling, which certifies K_n non-orientable
for n >= 6 and drives the e_max formula implemented here.  verify_bound
checks the formula exhaustively at desk scale and produces a
constructive tightness witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .engine import OrientabilityWitness, is_orientable
from .graphs import Graph, complete_graph, tight_bound_graph


def z_value(n: int) -> int:
    """Monochromatic edge count forced on K_n by every friendly labeling."""
    if n < 2:
        raise ValueError("need n >= 2")
    return comb((n + 1) // 2, 2) + comb(n // 2, 2)


def bichromatic_capacity(n: int) -> int:
    """Largest possible number of bichromatic edges under a friendly labeling."""
    if n < 2:
        raise ValueError("need n >= 2")
    return ((n + 1) // 2) * (n // 2)


def max_edges(n: int) -> int:
    """Edge-count ceiling for (2,3)-orientable graphs on n vertices.

    C(n,2) - Z + ceil((C(n,2) - Z) / 2).  Stated for n >= 6; smaller n
    are computed anyway and flagged by BoundsRecord.in_stated_range.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    cap = comb(n, 2) - z_value(n)
    return cap + (cap + 1) // 2


def complete_graph_zero_excess(n: int) -> bool:
    """True when Z exceeds one third of C(n,2).

    This is the raw comparison certifying K_n non-orientable for n >= 6.
    For odd n below 6 the comparison can hold even though small complete
    graphs stay orientable, because the balanced window is two values
    wide; callers wanting the sharp test should use the window check.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    return 3 * z_value(n) > comb(n, 2)


@dataclass(frozen=True)
class BoundsRecord:
    """Evaluated bound quantities for one vertex count."""

    n: int
    z: int
    bichromatic_capacity: int
    e_max: int
    in_stated_range: bool


def bounds_record(n: int) -> BoundsRecord:
    return BoundsRecord(
        n=n,
        z=z_value(n),
        bichromatic_capacity=bichromatic_capacity(n),
        e_max=max_edges(n),
        in_stated_range=n >= 6,
    )


@dataclass(frozen=True)
class BoundCheckReport:
    """Outcome of the exhaustive bound verification at one vertex count."""

    n: int
    graphs_checked: int
    violations: tuple[Graph, ...]
    tight_witness: OrientabilityWitness | None


def verify_bound(n: int) -> BoundCheckReport:
    """Exhaustively test the e_max formula on n vertices.

    Every labeled graph with more than max_edges(n) edges is run through
    the orientability check; any that comes back orientable is collected
    as a violation.  The tight-bound construction at exactly max_edges(n)
    edges is checked for a witness.  Guarded to 6 <= n <= 7, where the
    census sizes stay tiny.
    """
    if not 6 <= n <= 7:
        raise ValueError("bound verification supports 6 <= n <= 7")
    all_edges = complete_graph(n).edges
    e_max = max_edges(n)
    checked = 0
    violations = []
    for m in range(e_max + 1, len(all_edges) + 1):
        for combo in combinations(all_edges, m):
            checked += 1
            g = Graph(n, combo)
            if is_orientable(g) is not None:
                violations.append(g)
    tight = is_orientable(tight_bound_graph(n))
    return BoundCheckReport(
        n=n,
        graphs_checked=checked,
        violations=tuple(violations),
        tight_witness=tight,
    )
