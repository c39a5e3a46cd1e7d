"""End-to-end acceptance suite.

Each test certifies one headline claim over its full instance set, prints a
single PASS/FAIL line (visible under pytest -s; the -v test line mirrors it),
and asserts exact integer agreement: the tolerance everywhere is zero.
"""

from __future__ import annotations

import time
from fractions import Fraction

from oidrd import formulas as F
from oidrd import graphs as G
from oidrd import harness as H
from oidrd import solver as S
from oidrd.labeling import classes

WORKERS = 2


def _finish(name: str, violations: list, detail: str = "") -> None:
    status = "PASS" if not violations else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"\nACCEPTANCE {name}: {status}{suffix}")
    assert not violations, f"{name}: {violations[:5]}"


def test_basic_family_closed_forms():
    t0 = time.monotonic()
    violations = []
    checked = 0

    def check(tag, expected, g):
        nonlocal checked
        checked += 1
        got = S.solve_oidrd(g).value
        if got != expected:
            violations.append((tag, expected, got))

    for n in range(1, 12):
        check(f"path:{n}", F.formula_path(n), G.path(n))
    for n in range(3, 12):
        check(f"cycle:{n}", F.formula_cycle(n), G.cycle(n))
    for n in range(1, 10):
        check(f"complete:{n}", F.formula_complete(n), G.complete(n))
    for m in range(1, 11):
        for n in range(m, 12 - m):
            check(f"kbipartite:{m},{n}", F.formula_complete_bipartite(m, n),
                  G.complete_bipartite(m, n))

    def part_lists(max_total):
        out = []

        def extend(parts, total):
            if len(parts) >= 3:
                out.append(tuple(parts))
            nxt = parts[-1] if parts else 1
            while total + nxt <= max_total:
                parts.append(nxt)
                extend(parts, total + nxt)
                parts.pop()
                nxt += 1

        extend([], 0)
        return out

    for parts in part_lists(10):
        check(f"kpartite:{parts}", F.formula_complete_multipartite(parts),
              G.complete_multipartite(parts))

    _finish("closed_forms", violations,
            f"{checked} family instances, {time.monotonic() - t0:.1f}s")


def test_small_value_classification_biconditional():
    report = H.audit_characterization(6, n7_samples=300, seed=0, workers=WORKERS)
    assert report.instances_checked == 4 + 38 + 728 + 26704 + 300
    _finish("classification", report.violations,
            f"{report.instances_checked} graphs, classes {report.extra['class_counts']}, "
            f"{report.runtime_ms}ms")


def test_gadget_identity():
    report = H.audit_reduction(5, samples_n5=50, seed=0, workers=WORKERS)
    assert report.instances_checked == 1 + 2 + 8 + 64 + 50
    assert not report.notes
    _finish("gadget_identity", report.violations,
            f"{report.instances_checked} base graphs, {report.runtime_ms}ms")


def test_roman_variant_comparisons():
    t0 = time.monotonic()
    violations = []
    checked = 0
    for n in range(1, 6):
        for g in G.enumerate_graphs(n):
            checked += 1
            text = G.to_edge_list_text(g)
            oir = S.solve_gamma_oir(g).value
            oidr = S.solve_oidrd(g).value
            if not oir < oidr:
                violations.append((text, "strict_gap", oir, oidr))
            if (oidr == 2 * oir) != (g.m == 0):
                violations.append((text, "doubling_equality_iff_edgeless", oidr, 2 * oir))
            if g.n >= 2 and G.is_connected(g) and not oidr < 2 * oir:
                violations.append((text, "connected_strict_doubling", oidr, 2 * oir))
            for f in S.enumerate_optimal_oir(g):
                v2 = len(classes(f).v2)
                if oidr > 2 * oir - v2:
                    violations.append((text, "doubling_minus_v2", oidr, 2 * oir - v2))
    _finish("roman_comparisons", violations,
            f"{checked} graphs incl. disconnected, {time.monotonic() - t0:.1f}s")


def test_sandwich_bounds_and_sharpness():
    violations = []
    report = H.audit_bounds(5, workers=WORKERS)
    violations += list(report.violations)
    # stars attain the rational lower bound
    for n in range(3, 9):
        star = G.star(n - 1)
        alpha = S.solve_alpha(star).value
        beta = star.n - alpha
        lower = Fraction(2 * alpha, star.max_degree) + beta
        goidr = S.solve_oidrd(star).value
        if lower != goidr:
            violations.append(("star", n, str(lower), goidr))
    # coronas with two isolated copies attain the 3 beta upper bound
    for base in (G.path(2), G.path(3), G.cycle(3)):
        c = G.corona(base, G.empty(2))
        goidr = S.solve_oidrd(c).value
        beta = S.solve_beta(c).value
        if goidr != 3 * beta:
            violations.append(("corona_3beta", G.to_edge_list_text(c), goidr, 3 * beta))
    sharp = H.audit_sharpness_h(3, (2, 2, 2))
    violations += list(sharp.violations)
    if sharp.extra != {"gamma_oidr": 14, "beta": 8, "gamma": 6}:
        violations.append(("sharpness_values", sharp.extra))
    _finish("sandwich_bounds", violations,
            f"bounds on {report.instances_checked} connected graphs, "
            f"sharpness instance {sharp.runtime_ms}ms")


def test_tree_lower_bound():
    report = H.audit_trees(10, samples=10000, seed=0, workers=WORKERS)
    violations = list(report.violations)
    assert report.extra["exhaustive_instances"] == sum(
        1 if n <= 2 else n ** (n - 2) for n in range(1, 9))
    assert report.instances_checked == report.extra["exhaustive_instances"] + 20000
    for n in (2, 4, 6, 8, 10):
        p = G.path(n)
        if S.solve_oidrd(p).value != 2 * S.solve_beta(p).value + 1:
            violations.append(("even_path", n))
    for b in range(1, 5):
        s = G.double_star(1, b)
        goidr = S.solve_oidrd(s).value
        beta = S.solve_beta(s).value
        if not (goidr == 5 and 2 * beta + 1 == 5):
            violations.append(("pendant_double_star", b, goidr, beta))
    for a in range(2, 4):
        for b in range(a, 4):
            s = G.double_star(a, b)
            goidr = S.solve_oidrd(s).value
            beta = S.solve_beta(s).value
            if not (goidr == 6 and 2 * beta + 1 == 5):
                violations.append(("strict_double_star", (a, b), goidr, beta))
    _finish("tree_lower_bound", violations,
            f"{report.instances_checked} trees "
            f"({report.extra['exhaustive_instances']} exhaustive), {report.runtime_ms}ms")


def test_corona_formula_matches_solver():
    t0 = time.monotonic()
    violations = []
    pairs = 0
    bases = [g for n in (1, 2, 3) for g in G.enumerate_connected_graphs(n)]
    copies = [h for n in (1, 2, 3, 4) for h in G.enumerate_graphs(n)
              if h.max_degree <= h.n - 2]
    for h in copies:
        hb = S.bundle(h)
        for g in bases:
            pairs += 1
            got = F.corona_formula(g, hb, h.n, h.max_degree)
            expected = S.solve_oidrd(G.corona(g, h)).value
            if got != expected:
                violations.append((G.to_edge_list_text(g), G.to_edge_list_text(h),
                                   got, expected))
    # the two pinned instances, certified by full enumeration
    if S.brute_force_oidrd(G.corona(G.path(2), G.empty(2))).value != 6:
        violations.append(("brute corona(P2,empty2)", 6))
    if S.brute_force_oidrd(G.corona(G.path(2), G.path(4))).value != 10:
        violations.append(("brute corona(P2,P4)", 10))
    _finish("corona_formula", violations,
            f"{pairs} (g,h) pairs, {time.monotonic() - t0:.1f}s")


def test_forced_ones_in_balanced_bipartite():
    report = H.audit_forced_ones()  # K_{5,5}, full scan of all 4^10 labelings
    violations = list(report.violations)
    if report.extra["gamma_oidr"] != 9:
        violations.append(("value", report.extra["gamma_oidr"]))
    if not report.extra["all_optima_have_v1"]:
        violations.append(("v1_empty_optimum_found",))
    _finish("forced_ones", violations,
            f"{report.extra['optimal_count']} optima of K(5,5), {report.runtime_ms}ms")


def test_oracle_equivalence():
    t0 = time.monotonic()
    violations = []
    checked = 0

    def compare(g):
        nonlocal checked
        checked += 1
        for key, solve in S.SOLVERS.items():
            r = solve(g)
            b = S.BRUTE_SOLVERS[key](g)
            if r.value != b.value or r.witness.values != b.witness.values:
                violations.append((G.to_edge_list_text(g), key,
                                   (r.value, r.witness.to_text()),
                                   (b.value, b.witness.to_text())))

    for n in range(1, 7):
        for g in G.enumerate_connected_graphs(n):
            compare(g)
    for n in (7, 8):
        for g in G.sample_connected_graphs(n, 100, seed=0):
            compare(g)
    _finish("oracle_equivalence", violations,
            f"{checked} graphs x 7 invariants, values and canonical witnesses, "
            f"{time.monotonic() - t0:.1f}s")
