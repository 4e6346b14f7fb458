"""Closed-form versus oracle check suites, shared by the CLI and scripts.

Each suite walks a (p, n) grid, recomputes every identity from both sides,
and reports one result per identity and parameter p with the first
counterexample when something disagrees.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .cubes import cube_census
from .graph import (
    DEFAULT_GRAPH_CAP,
    PCubeGraph,
    bfs_distances,
    build,
    direction_edge_count,
    direction_edge_count_closed,
    hamming,
    total_edges_closed,
)
from .invariants import (
    imbalance_census,
    irregularity_closed,
    irregularity_oracle,
    left_pairs,
    lift_edge,
    mostar_closed,
    mostar_oracle,
    project_pair,
    right_pairs,
    wiener_closed,
    wiener_oracle,
)
from .polynomials import (
    BivarPoly,
    cube_count_closed,
    cube_poly_closed,
    dist_cube_count_closed,
    dist_cube_poly_closed,
    substitute,
    weight_poly,
)
from .sequences import kfold_convolution, pfib
from .series import (
    DEFAULT_ORDER,
    INTS,
    TruncatedSeries,
    gap_denominator,
    pfib_series,
    rational_gf,
    verify_cube_count_gf,
    verify_weight_gf_expansion,
)
from .strings import count_by_weight, max_weight

SUITES = ("cubes", "gf", "indices", "irregularity", "all")

# All-pairs BFS checks are quadratic in |V|; skip beyond this many vertices.
ALL_PAIRS_LIMIT = 4096


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _result(name: str, mismatches: list[str], note: str = "") -> CheckResult:
    if mismatches:
        return CheckResult(name, False, mismatches[0])
    return CheckResult(name, True, note)


def _graphs(p: int, ns: Iterable[int], cap: int) -> list[tuple[int, PCubeGraph]]:
    return [(n, build(p, n, cap=cap)) for n in ns]


def suite_counts(
    ps: Sequence[int], ns: Sequence[int], graph_cap: int = DEFAULT_GRAPH_CAP
) -> list[CheckResult]:
    """Order, size, direction counts, weight census, and structure checks."""
    results: list[CheckResult] = []
    for p in ps:
        bad_order: list[str] = []
        bad_size: list[str] = []
        bad_dir: list[str] = []
        bad_weight: list[str] = []
        bad_rec: list[str] = []
        bad_struct: list[str] = []
        bad_iso: list[str] = []
        for n, g in _graphs(p, ns, graph_cap):
            expected_order = pfib(p, n + p + 1)
            if g.vertex_count != expected_order:
                bad_order.append(
                    f"p={p} n={n}: |V|={g.vertex_count} expected {expected_order}"
                )
            expected_size = total_edges_closed(p, n)
            if g.edge_count != expected_size:
                bad_size.append(
                    f"p={p} n={n}: |E|={g.edge_count} expected {expected_size}"
                )
            for i in range(1, n + 1):
                counted = direction_edge_count(g, i)
                closed = direction_edge_count_closed(p, n, i)
                if counted != closed:
                    bad_dir.append(
                        f"p={p} n={n} i={i}: counted {counted} expected {closed}"
                    )
            census = Counter(v.weight for v in g.vertices)
            for w in range(max_weight(p, n) + 2):
                if census.get(w, 0) != count_by_weight(p, n, w):
                    bad_weight.append(
                        f"p={p} n={n} w={w}: census {census.get(w, 0)} "
                        f"expected {count_by_weight(p, n, w)}"
                    )
            if n >= p + 1:
                recursed = (
                    total_edges_closed(p, n - 1)
                    + total_edges_closed(p, n - p - 1)
                    + pfib(p, n)
                )
                if total_edges_closed(p, n) != recursed:
                    bad_rec.append(f"p={p} n={n}: recursion gives {recursed}")
            bad_struct.extend(_structure_mismatches(g))
            if g.vertex_count <= ALL_PAIRS_LIMIT:
                bad_iso.extend(_isometry_mismatches(g))
        results.append(_result(f"counts/order p={p}", bad_order))
        results.append(_result(f"counts/size p={p}", bad_size))
        results.append(_result(f"counts/directions p={p}", bad_dir))
        results.append(_result(f"counts/weight-census p={p}", bad_weight))
        results.append(_result(f"counts/edge-recursion p={p}", bad_rec))
        results.append(_result(f"counts/structure p={p}", bad_struct))
        results.append(_result(f"counts/partial-cube p={p}", bad_iso))
    return results


def _structure_mismatches(g: PCubeGraph) -> list[str]:
    out = []
    tag = f"p={g.p} n={g.n}"
    if sum(len(nbrs) for nbrs in g.adjacency) != 2 * g.edge_count:
        out.append(f"{tag}: degree sum != 2|E|")
    for lo, hi, _ in g.edges:
        if g.vertices[hi].weight != g.vertices[lo].weight + 1:
            out.append(f"{tag}: edge {lo}-{hi} does not raise weight by 1")
            break
    if g.vertex_count and min(bfs_distances(g, 0)) < 0:
        out.append(f"{tag}: graph is disconnected")
    return out


def _isometry_mismatches(g: PCubeGraph) -> list[str]:
    out = []
    for source in range(g.vertex_count):
        dist = bfs_distances(g, source)
        u = g.vertices[source]
        for target in range(source + 1, g.vertex_count):
            h = hamming(u, g.vertices[target])
            if dist[target] != h:
                out.append(
                    f"p={g.p} n={g.n}: d({source},{target})={dist[target]} "
                    f"but Hamming {h}"
                )
                return out
    return out


def suite_cubes(
    ps: Sequence[int], ns: Sequence[int], graph_cap: int = DEFAULT_GRAPH_CAP
) -> list[CheckResult]:
    """Cube counts against every closed form, plus the daisy identities."""
    results: list[CheckResult] = []
    for p in ps:
        bad_ck: list[str] = []
        bad_ckd: list[str] = []
        bad_daisy: list[str] = []
        for n, g in _graphs(p, ns, graph_cap):
            census = cube_census(g)
            poly = cube_poly_closed(p, n)
            wpoly = weight_poly(p, n)
            dpoly = dist_cube_poly_closed(p, n)
            top = max_weight(p, n)
            for k in range(top + 2):
                oracle = sum(v for (kk, _), v in census.items() if kk == k)
                closed = cube_count_closed(p, n, k)
                coeff = poly.coeff(k)
                m = n - k * p + p + 1
                conv = kfold_convolution(p, k, m) if m >= 0 else 0
                if not oracle == closed == coeff == conv:
                    bad_ck.append(
                        f"p={p} n={n} k={k}: oracle={oracle} sum={closed} "
                        f"expansion={coeff} convolution={conv}"
                    )
            for k in range(top + 2):
                for d in range(top + 2):
                    oracle = census.get((k, d), 0)
                    closed = dist_cube_count_closed(p, n, k, d)
                    if oracle != closed:
                        bad_ckd.append(
                            f"p={p} n={n} k={k} d={d}: oracle={oracle} "
                            f"closed={closed}"
                        )
            xq = BivarPoly.from_dict({(1, 0): 1, (0, 1): 1})
            xq_minus_1 = BivarPoly.from_dict({(1, 0): 1, (0, 1): 1, (0, 0): -1})
            if dpoly != substitute(wpoly, xq):
                bad_daisy.append(f"p={p} n={n}: D != W(x+q)")
            if poly != substitute(wpoly, 1):
                bad_daisy.append(f"p={p} n={n}: C != W(x+1)")
            if dpoly != substitute(poly, xq_minus_1):
                bad_daisy.append(f"p={p} n={n}: D != C(x+q-1)")
            if dpoly != dpoly.swap():
                bad_daisy.append(f"p={p} n={n}: D(x,q) != D(q,x)")
            if poly(0) != g.vertex_count or poly.coeff(1) != g.edge_count:
                bad_daisy.append(f"p={p} n={n}: C(0) or [x]C disagrees with graph")
            if poly.degree() != top:
                bad_daisy.append(f"p={p} n={n}: deg C = {poly.degree()} != {top}")
        results.append(_result(f"cubes/counts p={p}", bad_ck))
        results.append(_result(f"cubes/distance-counts p={p}", bad_ckd))
        results.append(_result(f"cubes/daisy-identities p={p}", bad_daisy))
    return results


def suite_gf(
    ps: Sequence[int],
    order: int = DEFAULT_ORDER,
    graph_cap: int = DEFAULT_GRAPH_CAP,
) -> list[CheckResult]:
    """All generating-function identities, coefficient-exact to the order."""
    results: list[CheckResult] = []
    oracle_cap = min(graph_cap, 9)
    for p in ps:
        bad: list[str] = []
        denom = gap_denominator(INTS, 1, p, order)
        t_series = TruncatedSeries.from_coeffs(INTS, [0, 1], order)
        if pfib_series(p, order) * denom != t_series:
            bad.append(f"p={p}: sequence series times (1 - t - t^{p + 1}) != t")
        cube_gf = rational_gf(p, "cube", order)
        weight_gf = rational_gf(p, "weight", order)
        distance_gf = rational_gf(p, "distance", order)
        for n in range(order + 1):
            if cube_gf.coeff(n) != cube_poly_closed(p, n):
                bad.append(
                    f"p={p} n={n}: cube gf gives {cube_gf.coeff(n).render()}, "
                    f"closed form {cube_poly_closed(p, n).render()}"
                )
                break
            if weight_gf.coeff(n) != weight_poly(p, n):
                bad.append(
                    f"p={p} n={n}: weight gf gives {weight_gf.coeff(n).render()}, "
                    f"closed form {weight_poly(p, n).render()}"
                )
                break
            if distance_gf.coeff(n) != dist_cube_poly_closed(p, n):
                bad.append(
                    f"p={p} n={n}: distance gf gives "
                    f"{distance_gf.coeff(n).render()}, "
                    f"closed form {dist_cube_poly_closed(p, n).render()}"
                )
                break
        if not verify_weight_gf_expansion(p, order):
            bad.append(f"p={p}: marked-series split/expansion identity fails")
        for k in range(4):
            if not verify_cube_count_gf(p, k, order, graph_cap=oracle_cap):
                bad.append(f"p={p} k={k}: fixed-k gf mismatch")
        results.append(_result(f"gf/identities p={p}", bad))
    return results


def suite_indices(
    ps: Sequence[int], ns: Sequence[int], graph_cap: int = DEFAULT_GRAPH_CAP
) -> list[CheckResult]:
    """Wiener and Mostar closed forms against the BFS oracles."""
    results: list[CheckResult] = []
    for p in ps:
        bad_w: list[str] = []
        bad_m: list[str] = []
        bad_rel: list[str] = []
        for n, g in _graphs(p, ns, graph_cap):
            wo, wc = wiener_oracle(g), wiener_closed(p, n)
            mo, mc = mostar_oracle(g), mostar_closed(p, n)
            if wo != wc:
                bad_w.append(f"p={p} n={n}: oracle {wo} closed {wc}")
            if mo != mc:
                bad_m.append(f"p={p} n={n}: oracle {mo} closed {mc}")
            squares = sum(
                direction_edge_count_closed(p, n, i) ** 2 for i in range(1, n + 1)
            )
            if wc - mc != squares or squares < 0:
                bad_rel.append(f"p={p} n={n}: W - Mo != sum of squared |E_i|")
        results.append(_result(f"indices/wiener p={p}", bad_w))
        results.append(_result(f"indices/mostar p={p}", bad_m))
        results.append(_result(f"indices/wiener-mostar-gap p={p}", bad_rel))
    return results


def suite_irregularity(
    ps: Sequence[int], ns: Sequence[int], graph_cap: int = DEFAULT_GRAPH_CAP
) -> list[CheckResult]:
    """Irregularity closed form, imbalanced-pair sets, and the projection."""
    results: list[CheckResult] = []
    for p in ps:
        bad_irr: list[str] = []
        bad_rec: list[str] = []
        bad_sets: list[str] = []
        bad_bij: list[str] = []
        bad_props: list[str] = []
        notes: list[str] = []
        for n, g in _graphs(p, ns, graph_cap):
            records = imbalance_census(g)
            oracle = irregularity_oracle(g)
            if sum(r.imbalance for r in records) != oracle:
                bad_rec.append(f"p={p} n={n}: imbalances do not sum to irr")
            for r in records:
                if r.imbalance != len(r.pairs):
                    bad_rec.append(
                        f"p={p} n={n}: edge at direction {r.direction} has "
                        f"imbalance {r.imbalance} but {len(r.pairs)} pairs"
                    )
                    break
                if any(not 1 <= pair.offset <= p for pair in r.pairs):
                    bad_rec.append(f"p={p} n={n}: pair offset outside [1, p]")
                    break
            bad_props.extend(_neighbour_prop_mismatches(g))
            if n < p:
                notes.append(
                    f"p={p} n={n}: theorem not applicable (n < p), oracle-only; "
                    f"irr={oracle}"
                )
                continue
            closed = irregularity_closed(p, n)
            if closed != oracle:
                bad_irr.append(f"p={p} n={n}: oracle {oracle} closed {closed}")
            for d in range(1, p + 1):
                rp = right_pairs(records, d)
                lp = left_pairs(records, d)
                expected = total_edges_closed(p, n - d)
                if len(rp) != expected or len(lp) != expected:
                    bad_sets.append(
                        f"p={p} n={n} d={d}: |R|={len(rp)} |L|={len(lp)} "
                        f"expected {expected}"
                    )
                bad_bij.extend(_projection_mismatches(g, rp, d))
        results.append(_result(f"irregularity/closed-form p={p}", bad_irr,
                               "; ".join(notes)))
        results.append(_result(f"irregularity/imbalance-records p={p}", bad_rec))
        results.append(_result(f"irregularity/pair-set-sizes p={p}", bad_sets))
        results.append(_result(f"irregularity/projection-bijection p={p}", bad_bij))
        results.append(_result(f"irregularity/neighbour-propositions p={p}",
                               bad_props))
    return results


def _neighbour_prop_mismatches(g: PCubeGraph) -> list[str]:
    # For an edge xy with the 1 at direction i: a valid neighbour of x at j
    # forces one of y, and beyond offset p the two sides always agree.
    out = []
    n, p = g.n, g.p
    for lo, hi, i in g.edges:
        x = g.vertices[hi].bits
        y = g.vertices[lo].bits
        for j in range(1, n + 1):
            mask = 1 << (n - j)
            x_ok = (x ^ mask) in g.index
            y_ok = (y ^ mask) in g.index
            if x_ok and not y_ok:
                out.append(f"p={p} n={n}: x+d_{j} valid but y+d_{j} invalid")
                return out
            if abs(i - j) > p and x_ok != y_ok:
                out.append(f"p={p} n={n}: far offset {j} not side-independent")
                return out
    return out


def _projection_mismatches(
    g: PCubeGraph, pairs: list, d: int
) -> list[str]:
    out = []
    tag = f"p={g.p} n={g.n} d={d}"
    smaller = build(g.p, g.n - d)
    target = {(smaller.vertices[hi].bits, dirn) for _, hi, dirn in smaller.edges}
    images = set()
    for pair in pairs:
        hi, lo = project_pair(g, pair)
        key = (hi.bits, pair.i)
        if key not in target:
            out.append(f"{tag}: projected edge is not in the smaller graph")
            return out
        if key in images:
            out.append(f"{tag}: projection is not injective")
            return out
        images.add(key)
        if lift_edge(g.n, d, hi, pair.i) != pair:
            out.append(f"{tag}: lift does not round-trip the pair")
            return out
    if len(images) != len(target):
        out.append(
            f"{tag}: image covers {len(images)} of {len(target)} edges"
        )
    return out


def run_suite(
    suite: str,
    ps: Sequence[int],
    ns: Sequence[int],
    order: int = DEFAULT_ORDER,
    graph_cap: int = DEFAULT_GRAPH_CAP,
) -> list[CheckResult]:
    """Run one named suite (or all of them) over the given grid."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITES}")
    results: list[CheckResult] = []
    if suite in ("cubes", "all"):
        results.extend(suite_cubes(ps, ns, graph_cap))
    if suite in ("gf", "all"):
        results.extend(suite_gf(ps, order, graph_cap))
    if suite in ("indices", "all"):
        results.extend(suite_indices(ps, ns, graph_cap))
    if suite in ("irregularity", "all"):
        results.extend(suite_irregularity(ps, ns, graph_cap))
    if suite == "all":
        results.extend(suite_counts(ps, ns, graph_cap))
    return results
