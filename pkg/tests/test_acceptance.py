"""Acceptance criteria, one test each.

Every test records a PASS/FAIL line; the lines are printed at the end of the
pytest run (see conftest.py) and by ``python tests/test_acceptance.py``.
"""

import time

from boolean_schubert.bench import benchmark
from boolean_schubert.boolean_core import from_diagram, from_reduced_word
from boolean_schubert.constants import ordinary_constant
from boolean_schubert.fast_path import fast_ordinary_constant_type_a, find_insertion_path_type_a
from boolean_schubert.insertion import StepKind, insertion_targets, step_multiplicity, step_weight
from boolean_schubert.oracle import kk_constant
from boolean_schubert.polynomial import WeightPolynomial
from boolean_schubert.root_system import build_root_system
from boolean_schubert.verify import run_suite

RESULTS: dict[int, str] = {}


def record(number, title, ok, detail):
    RESULTS[number] = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({detail})"
    print(RESULTS[number])
    return ok


def sweep(suite, systems):
    checked, bad = 0, []
    for t, n in systems:
        report = run_suite(suite, build_root_system(t, n))
        checked += report["checked"]
        bad += report["mismatches"]
    return checked, bad


def test_criterion_1_example_in_a13():
    rs = build_root_system("A", 13)
    t0 = time.perf_counter()
    u = from_reduced_word(rs, [4, 3, 8, 11, 12])
    v = from_reduced_word(rs, [2, 3, 7, 6, 8, 12])
    w = from_reduced_word(rs, [7, 6, 5, 4, 2, 3, 9, 8, 11, 13, 12])
    general = ordinary_constant(u, v, w)
    fast = fast_ordinary_constant_type_a(u, v, w)
    kk = kk_constant(u, v, w).constant_term()
    path = find_insertion_path_type_a(u, v, w)
    elapsed = time.perf_counter() - t0
    order = path.roots if path else None
    ok = (general, fast, kk) == (1, 1, 1) and order == (2, 6, 7, 8, 3, 12) and elapsed < 1.0
    assert record(1, "A13 triple gives 1 by three routes, order (2,6,7,8,3,12), < 1 s", ok,
                  f"general={general} fast={fast} kk={kk} order={order} time={elapsed:.3f}s")


def test_criterion_2_e7_insertion_steps():
    rs = build_root_system("E", 7)
    u = from_reduced_word(rs, [3, 5, 4, 7])
    steps4 = insertion_targets(u, 4)
    base = [(4, 3), (4, 5)]
    fig4 = {
        from_diagram(rs, [1, 3, 4, 5, 7], base + [(3, 1)]),
        from_diagram(rs, [2, 3, 4, 5, 7], base + [(4, 2)]),
        from_diagram(rs, [3, 4, 5, 6, 7], base + [(5, 6), (7, 6)]),
        from_diagram(rs, [3, 4, 5, 6, 7], base + [(5, 6), (6, 7)]),
    }
    equivariant = [s for s in steps4 if s.kind is StepKind.EVENT2]
    ok4 = (
        len(steps4) == 5
        and len(equivariant) == 1
        and equivariant[0].weight == WeightPolynomial.linear([0, 0, 1, 1, 1, 0, 0])
        and {s.target for s in steps4 if not s.equivariant} == fig4
    )
    steps6 = insertion_targets(u, 6)
    fig5 = {
        from_diagram(rs, [3, 4, 5, 6, 7], base + [a, b])
        for a in [(5, 6), (6, 5)]
        for b in [(6, 7), (7, 6)]
    }
    ok6 = len(steps6) == 4 and {s.target for s in steps6} == fig5 and not any(s.equivariant for s in steps6)
    assert record(2, "E7 insertion of alpha4 (5 steps, t3+t4+t5) and alpha6 (4 diagrams)", ok4 and ok6,
                  f"alpha4: {len(steps4)} steps, weight {equivariant[0].weight if equivariant else None}; "
                  f"alpha6: {len(steps6)} steps")


def test_criterion_3_c4_weight_and_multiplicity():
    rs = build_root_system("C", 4)
    u = from_reduced_word(rs, [2, 3, 4])
    v = from_reduced_word(rs, [1, 2, 3, 4])
    wt = step_weight(u, 4)
    mul = step_multiplicity(u, 4, v)
    ok = wt == WeightPolynomial.linear([0, 2, 2, 1]) and mul == 2
    assert record(3, "C4 weight 2t2+2t3+t4 and multiplicity 2", ok, f"weight={wt} mul={mul}")


def test_criterion_4_oracle_equivalence():
    systems = [("A", 4), ("B", 3), ("C", 3), ("C", 4), ("D", 4), ("G", 2), ("F", 4)]
    t0 = time.perf_counter()
    checked, bad = sweep("kk", systems)
    assert record(4, "insertion = Kostant-Kumar on A4 B3 C3 C4 D4 G2 F4", not bad,
                  f"{checked} triples, {len(bad)} mismatches, {time.perf_counter() - t0:.1f}s")


def test_criterion_5_type_a_zero_one():
    systems = [("A", n) for n in range(1, 7)]
    checked, bad = sweep("zero-one", systems)
    assert record(5, "ordinary constants are 0/1 in A1..A6", not bad,
                  f"{checked} triples, {len(bad)} violations")


def test_criterion_6_boolean_chevalley_rule():
    systems = [("A", 3), ("B", 3), ("C", 3), ("D", 4), ("G", 2)]
    checked, bad = sweep("chevalley", systems)
    assert record(6, "boolean Chevalley rule = projected full Chevalley product", not bad,
                  f"{checked} checks (products and triples), {len(bad)} mismatches")


def test_criterion_7_ordering_and_uniqueness():
    systems = [("A", 4), ("B", 3), ("C", 3), ("G", 2)]
    n_order, bad_order = sweep("ordering", systems)
    n_unique, bad_unique = sweep("uniqueness", systems)
    assert record(7, "expansion independent of ordering; at most one non-equivariant path",
                  not bad_order and not bad_unique,
                  f"{n_order} orderings compared, {n_unique} orderings path-counted, "
                  f"{len(bad_order) + len(bad_unique)} mismatches")


def test_criterion_8_kk_words_and_positivity():
    systems = [("A", n) for n in range(1, 5)] + [("B", n) for n in (2, 3, 4)]
    systems += [("C", n) for n in (2, 3, 4)] + [("D", 4), ("F", 4), ("G", 2)]
    checked, bad = sweep("words", systems)
    assert record(8, "Kostant-Kumar value independent of reduced word and non-negative, rank <= 4",
                  not bad, f"{checked} triples over {len(systems)} systems, {len(bad)} mismatches")


def test_criterion_9_fast_path_scaling():
    report = benchmark([16, 32, 64, 128, 256], samples=50, seed=0)
    slope = report["loglog_slope"]
    found = all(r["paths_found"] == r["samples"] for r in report["results"])
    medians = ", ".join(f"n={r['n']}: {r['median_s'] * 1e3:.3f}ms" for r in report["results"])
    assert record(9, "fast path log-log slope <= 2.3 over n = 16..256", slope <= 2.3 and found,
                  f"slope={slope:.2f}; {medians}")


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
