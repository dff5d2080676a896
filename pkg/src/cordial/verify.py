"""Built-in verification suite for the library's headline results.

Each check is a self-contained computation with a fixed expected outcome
and a wall-clock budget.  ``all_checks()`` runs them in order; the CLI
``verify-paper`` subcommand and the acceptance test module both consume
the same list.
"""

from __future__ import annotations

import contextlib
import io
import os
import random
import tempfile
import time
from dataclasses import dataclass
from typing import Callable

from .bounds import complete_graph_zero_excess, max_edges, verify_bound, z_value
from .engine import (
    _first_balanced_mask,
    _friendly_masks,
    OrientabilityWitness,
    gamma_triple,
    is_balanced_triple,
    is_cordial,
    is_friendly,
    is_orientable,
    lambda_count,
)
from .graphs import (
    Digraph,
    Graph,
    Orientation,
    VertexLabeling,
    alternating_path,
    complete_graph,
    counterexample_tree,
    orient,
    path_graph,
    petersen_graph,
    reverse,
    to_text,
)
from .quasigroup import (
    CayleyTable,
    is_subset_q_cordial,
    validate_latin,
    z3_minus_instance,
)
from .search import (
    SymmetryMode,
    friendly_labelings,
    noncordial_orientations,
    orientations,
    path_cordial_dp,
    scan_alternating_paths,
    tournament_survey,
)


class CheckFailure(AssertionError):
    """Raised by a check body when an expected outcome does not hold."""


def _expect(condition: bool, message: str) -> None:
    if not condition:
        raise CheckFailure(message)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    details: str
    elapsed: float
    budget: float


@dataclass(frozen=True)
class Check:
    name: str
    budget_seconds: float
    fn: Callable[[], str]

    def run(self) -> CheckResult:
        t0 = time.perf_counter()
        try:
            details = self.fn()
            passed = True
        except CheckFailure as exc:
            details = str(exc)
            passed = False
        except Exception as exc:  # report, never crash the table
            details = f"unexpected error: {exc!r}"
            passed = False
        elapsed = time.perf_counter() - t0
        if passed and elapsed > self.budget_seconds:
            passed = False
            details += f" (took {elapsed:.1f}s, budget {self.budget_seconds:g}s)"
        return CheckResult(self.name, passed, details, elapsed, self.budget_seconds)


# ---------------------------------------------------------------------------
# Helpers shared by several checks
# ---------------------------------------------------------------------------

def _connected(graph: Graph) -> bool:
    n = graph.vertex_count
    if n <= 1:
        return True
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in graph.edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def _random_graph(rng: random.Random, n: int) -> Graph:
    edges = tuple(
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.randrange(2)
    )
    return Graph(n, edges)


def _random_digraph(rng: random.Random, n: int) -> Digraph:
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            pick = rng.randrange(3)
            if pick == 1:
                arcs.append((u, v))
            elif pick == 2:
                arcs.append((v, u))
    return Digraph(n, tuple(arcs))


def _validate_witness(graph: Graph, witness: OrientabilityWitness) -> None:
    _expect(is_friendly(witness.labeling), "witness labeling is not friendly")
    gam = gamma_triple(orient(graph, witness.orientation), witness.labeling)
    _expect(gam == witness.gamma, "witness gamma does not recompute")
    _expect(is_balanced_triple(gam), "witness gamma is not balanced")


def _orientable_by_orientation_scan(graph: Graph) -> bool:
    """Oracle: try all 2^m orientations, each with a full labeling scan."""
    n = graph.vertex_count
    edges = graph.edges
    m = len(edges)
    masks = list(_friendly_masks(n, fix_first=True))
    for bits in range(1 << m):
        arcs = tuple(
            (v, u) if (bits >> j) & 1 else (u, v) for j, (u, v) in enumerate(edges)
        )
        if _first_balanced_mask(arcs, masks) is not None:
            return True
    return False


def _orientable_by_split_scan(graph: Graph) -> bool:
    """Oracle factored by labeling: enumerate the direction choices of the
    bichromatic edges for each friendly labeling (same-label edges keep
    their arc label 0 whichever way they point)."""
    n = graph.vertex_count
    edges = graph.edges
    for mask in _friendly_masks(n):
        mono = 0
        bi = 0
        for u, v in edges:
            if ((mask >> u) ^ (mask >> v)) & 1:
                bi += 1
            else:
                mono += 1
        for dirs in range(1 << bi):
            alpha = dirs.bit_count()
            trio = (alpha, bi - alpha, mono)
            if max(trio) - min(trio) <= 1:
                return True
    return False


def _all_graphs(n: int):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for gbits in range(1 << len(pairs)):
        yield Graph(
            n, tuple(p for j, p in enumerate(pairs) if (gbits >> j) & 1)
        )


def _cyclic_table(q: int) -> CayleyTable:
    return CayleyTable(tuple(tuple((i + j) % q for j in range(q)) for i in range(q)))


def _klein_table() -> CayleyTable:
    return CayleyTable(tuple(tuple(i ^ j for j in range(4)) for i in range(4)))


# ---------------------------------------------------------------------------
# The checks
# ---------------------------------------------------------------------------

def _check_alternating_p10() -> str:
    d = alternating_path(10)
    count = 0
    for lab in friendly_labelings(10):
        count += 1
        _expect(
            not is_balanced_triple(gamma_triple(d, lab)),
            f"balanced gamma found at labeling {lab.bit_string()}",
        )
    _expect(count == 252, f"expected 252 friendly labelings, saw {count}")
    from . import cli

    with tempfile.NamedTemporaryFile("w", suffix=".dg", delete=False) as fh:
        fh.write(to_text(d))
        path = fh.name
    try:
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            code = cli.run(["check-digraph", path])
    finally:
        os.unlink(path)
    _expect(code == 1, f"check-digraph exited {code}, expected 1")
    _expect(
        "no cordial labeling" in buf.getvalue(),
        "check-digraph report missing 'no cordial labeling'",
    )
    return "all 252 friendly labelings unbalanced; check-digraph exits 1"


def _check_p10_orientation_census() -> str:
    g = path_graph(10)
    full = noncordial_orientations(g, SymmetryMode.NONE)
    _expect(
        full.total_orientations_scanned == 512,
        f"scanned {full.total_orientations_scanned}, expected 512",
    )
    bits = [o.bits for o in full.noncordial]
    _expect(
        bits == [170, 341],
        f"non-cordial orientations {bits}, expected [170, 341]",
    )
    _expect(
        full.noncordial[0].bit_string() == "010101010",
        "first failure is not the alternating orientation",
    )
    for o in full.noncordial:
        _expect(
            is_cordial(orient(g, o)) is None,
            f"listed orientation {o.bit_string()} re-checks cordial",
        )
    fixed = noncordial_orientations(g, SymmetryMode.FIX_FIRST_ARC)
    _expect(
        fixed.total_orientations_scanned == 256,
        f"fixed-arc scan covered {fixed.total_orientations_scanned}, expected 256",
    )
    _expect(
        [o.bits for o in fixed.noncordial] == [170],
        "fixed-arc scan should keep exactly the alternating orientation",
    )
    return "512 orientations: failures are exactly 010101010 and its reversal"


def _check_path_landscape() -> str:
    r4 = noncordial_orientations(path_graph(4))
    _expect(len(r4.noncordial) >= 1, "P4 should have a non-cordial orientation")
    _expect(
        any(o.bits == 4 for o in r4.noncordial),
        "orientation bits 001 missing from P4 failures",
    )
    for n in range(5, 10):
        rep = noncordial_orientations(path_graph(n))
        _expect(
            not rep.noncordial,
            f"P{n} unexpectedly has non-cordial orientations",
        )
    t0 = time.perf_counter()
    failing = scan_alternating_paths(22)
    dp_time = time.perf_counter() - t0
    _expect(failing == [10, 22], f"alternating scan returned {failing}")
    _expect(dp_time < 10.0, f"DP route took {dp_time:.1f}s, budget 10s")
    d22 = alternating_path(22)
    t1 = time.perf_counter()
    count = 0
    witness = None
    for lab in friendly_labelings(22):
        count += 1
        if is_balanced_triple(gamma_triple(d22, lab)):
            witness = lab
            break
    direct_time = time.perf_counter() - t1
    _expect(witness is None, "direct scan found a cordial labeling at n=22")
    _expect(count == 705432, f"direct scan covered {count} labelings")
    _expect(direct_time < 60.0, f"direct scan took {direct_time:.1f}s, budget 60s")
    return (
        f"P4 fails, P5-P9 clean, alternating failures {failing}; "
        f"n=22 direct scan of {count} labelings in {direct_time:.1f}s"
    )


def _check_deg3_tree() -> str:
    g = counterexample_tree()
    _expect(g.edge_count == 9, "tree should have 9 edges")
    count = 0
    for lab in friendly_labelings(10):
        count += 1
        _expect(
            lambda_count(g, lab) != 3,
            f"labeling {lab.bit_string()} reaches 3 monochromatic edges",
        )
    _expect(count == 252, f"scanned {count} labelings, expected 252")
    _expect(is_orientable(g) is None, "tree reported orientable")
    return "all 252 friendly labelings miss the window; not orientable"


def _check_petersen() -> str:
    g = petersen_graph()
    _expect(g.edge_count == 15, "Petersen graph should have 15 edges")
    count = 0
    for lab in friendly_labelings(10):
        count += 1
        _expect(
            lambda_count(g, lab) != 5,
            f"labeling {lab.bit_string()} reaches 5 monochromatic edges",
        )
    _expect(count == 252, f"scanned {count} labelings, expected 252")
    _expect(is_orientable(g) is None, "Petersen graph reported orientable")
    return "all 252 friendly labelings miss the window; not orientable"


def _check_window_crossvalidation() -> str:
    checked = 0
    for n in range(1, 6):
        for g in _all_graphs(n):
            if not _connected(g):
                continue
            checked += 1
            witness = is_orientable(g)
            oracle = _orientable_by_orientation_scan(g)
            _expect(
                (witness is not None) == oracle,
                f"window test disagrees with orientation scan on n={n} "
                f"edges={g.edges}",
            )
            if witness is not None:
                _validate_witness(g, witness)
    rng = random.Random(64823)
    sampled = 0
    for _ in range(200):
        n = rng.choice((6, 7))
        g = _random_graph(rng, n)
        sampled += 1
        witness = is_orientable(g)
        oracle = _orientable_by_split_scan(g)
        _expect(
            (witness is not None) == oracle,
            f"window test disagrees with split scan on n={n} edges={g.edges}",
        )
        if witness is not None:
            _validate_witness(g, witness)
    return f"{checked} connected graphs on <=5 vertices + {sampled} random graphs agree"


def _check_edge_bound() -> str:
    _expect(z_value(6) == 6, f"z_value(6) = {z_value(6)}, expected 6")
    _expect(max_edges(6) == 14, f"max_edges(6) = {max_edges(6)}, expected 14")
    _expect(max_edges(7) == 18, f"max_edges(7) = {max_edges(7)}, expected 18")
    for n in range(6, 101):
        _expect(complete_graph_zero_excess(n), f"Z <= C(n,2)/3 at n={n}")
    parts = []
    for n in (6, 7):
        rep = verify_bound(n)
        _expect(
            rep.tight_witness is not None,
            f"no orientable witness at {max_edges(n)} edges for n={n}",
        )
        tight_graph = rep.tight_witness.orientation.graph
        _expect(
            tight_graph.edge_count == max_edges(n),
            f"tightness witness for n={n} has {tight_graph.edge_count} edges",
        )
        _validate_witness(tight_graph, rep.tight_witness)
        _expect(
            not rep.violations,
            f"{len(rep.violations)} graphs on {n} vertices exceed "
            f"max_edges({n})={max_edges(n)} yet are orientable; first violation "
            f"has {rep.violations[0].edge_count} edges: {rep.violations[0].edges}"
            if rep.violations
            else "",
        )
        parts.append(f"n={n}: {rep.graphs_checked} graphs checked, tight at {max_edges(n)}")
    return "; ".join(parts)


def _check_tournaments() -> str:
    s3 = tournament_survey(3)
    _expect(
        s3.total == 8 and s3.noncordial_count == 0,
        f"n=3 survey {s3}, expected 8 tournaments all cordial",
    )
    s4 = tournament_survey(4)
    _expect(
        s4.total == 64 and s4.noncordial_count > 0,
        f"n=4 survey {s4}, expected some non-cordial tournaments",
    )
    s5 = tournament_survey(5)
    _expect(
        s5.total == 1024 and s5.noncordial_count == 0,
        f"n=5 survey {s5}, expected 1024 tournaments all cordial",
    )
    s6 = tournament_survey(6)
    _expect(
        s6.total == 32768 and s6.noncordial_count == 32768,
        f"n=6 survey {s6}, expected all 32768 non-cordial",
    )
    g6 = complete_graph(6)
    _expect(
        all(lambda_count(g6, lab) != 5 for lab in friendly_labelings(6)),
        "some friendly labeling of K6 reaches 5 monochromatic edges",
    )
    return (
        f"n=3: 0/8, n=4: {s4.noncordial_count}/64, n=5: 0/1024, "
        f"n=6: 32768/32768 non-cordial"
    )


def _check_gamma_symmetries() -> str:
    rng = random.Random(90125)
    for _ in range(1000):
        n = rng.randrange(1, 9)
        d = _random_digraph(rng, n)
        lab = VertexLabeling(n, rng.randrange(1 << n))
        alpha, beta, zero = gamma_triple(d, lab)
        _expect(
            gamma_triple(reverse(d), lab) == (beta, alpha, zero),
            f"arc reversal identity fails on {d}",
        )
        _expect(
            gamma_triple(d, lab.complement()) == (beta, alpha, zero),
            f"label complement identity fails on {d}",
        )
        _expect(
            gamma_triple(reverse(d), lab.complement()) == (alpha, beta, zero),
            f"combined identity fails on {d}",
        )
    for _ in range(1000):
        n = rng.randrange(1, 9)
        g = _random_graph(rng, n)
        m = g.edge_count
        o = Orientation(g, rng.randrange(1 << m) if m else 0)
        lab = VertexLabeling(n, rng.randrange(1 << n))
        _expect(
            gamma_triple(orient(g, o), lab).gamma_zero == lambda_count(g, lab),
            f"gamma_zero depends on orientation for {g}",
        )
    return "1000 symmetry triples + 1000 orientation-invariance triples hold"


def _check_quasigroup_equivalence() -> str:
    inst = z3_minus_instance()

    def check_equiv(d: Digraph) -> None:
        q_witness = is_subset_q_cordial(d, inst)
        c_report = is_cordial(d)
        _expect(
            (q_witness is None) == (c_report is None),
            f"quasigroup engine disagrees on {d}",
        )
        if q_witness is not None:
            lab = VertexLabeling.from_labels(q_witness)
            _expect(
                is_friendly(lab) and is_balanced_triple(gamma_triple(d, lab)),
                f"quasigroup witness fails validation on {d}",
            )

    pairs = 0
    for n in range(2, 9):
        g = path_graph(n)
        for o in orientations(g):
            check_equiv(orient(g, o))
            pairs += 1
    rng = random.Random(40351)
    for _ in range(200):
        n = rng.randrange(1, 9)
        check_equiv(_random_digraph(rng, n))
        pairs += 1
    tables = [_cyclic_table(q) for q in range(1, 6)] + [_klein_table()]
    swaps = 0
    for table in tables:
        _expect(validate_latin(table), f"group table of order {table.order} rejected")
        q = table.order
        for i in range(q):
            for a in range(q):
                for b in range(a + 1, q):
                    rows = [list(r) for r in table.rows]
                    rows[i][a], rows[i][b] = rows[i][b], rows[i][a]
                    _expect(
                        not validate_latin(rows),
                        f"swap in row {i} of order-{q} table not rejected",
                    )
                    swaps += 1
    return f"{pairs} digraphs agree with the direct engine; {swaps} corrupted tables rejected"


def _check_path_dp() -> str:
    count = 0
    for n in range(2, 11):
        g = path_graph(n)
        for o in orientations(g):
            d = orient(g, o)
            dp_witness = path_cordial_dp(d)
            direct = is_cordial(d)
            _expect(
                (dp_witness is None) == (direct is None),
                f"DP disagrees with the scan on n={n} bits={o.bit_string()}",
            )
            if dp_witness is not None:
                _expect(
                    is_friendly(dp_witness)
                    and is_balanced_triple(gamma_triple(d, dp_witness)),
                    f"DP witness fails validation on n={n} bits={o.bit_string()}",
                )
            count += 1
    return f"{count} oriented paths cross-validated"


ALL_CHECKS: tuple[Check, ...] = (
    Check("alternating-p10-no-cordial-labeling", 1.0, _check_alternating_p10),
    Check("p10-orientation-census", 5.0, _check_p10_orientation_census),
    Check("path-family-landscape", 75.0, _check_path_landscape),
    Check("deg3-tree-not-orientable", 1.0, _check_deg3_tree),
    Check("petersen-not-orientable", 1.0, _check_petersen),
    Check("orientability-window-crosscheck", 60.0, _check_window_crossvalidation),
    Check("edge-count-bound", 30.0, _check_edge_bound),
    Check("tournament-census", 60.0, _check_tournaments),
    Check("gamma-symmetry-identities", 10.0, _check_gamma_symmetries),
    Check("quasigroup-instance-equivalence", 30.0, _check_quasigroup_equivalence),
    Check("path-dp-crosscheck", 30.0, _check_path_dp),
)


def all_checks(names: list[str] | None = None) -> list[CheckResult]:
    """Run the verification checks, optionally a named subset, in order."""
    selected = ALL_CHECKS
    if names:
        known = {c.name for c in ALL_CHECKS}
        unknown = [x for x in names if x not in known]
        if unknown:
            raise ValueError(f"unknown check names: {', '.join(unknown)}")
        selected = tuple(c for c in ALL_CHECKS if c.name in set(names))
    return [check.run() for check in selected]
