"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with -v -s to see the per-criterion lines; the test names double as
the criterion labels.  Time budgets are asserted where the criterion
states one.
"""

import time

from quiddity.verify import census_memo, run_suite


def _run(number: str, suite: str, budget: float | None = None) -> None:
    start = time.monotonic()
    results = run_suite(suite)
    elapsed = time.monotonic() - start
    ok = all(r.passed for r in results)
    within = budget is None or elapsed <= budget
    verdict = "PASS" if (ok and within) else "FAIL"
    budget_note = f", budget {budget:.0f}s" if budget is not None else ""
    print(f"{verdict} criterion {number} [{suite}] ({elapsed:.2f}s{budget_note})")
    for r in results:
        if not r.passed:
            print("  " + r.line())
    assert ok, f"criterion {number}: failing rows in suite {suite}"
    assert within, f"criterion {number}: {elapsed:.1f}s over the {budget:.0f}s budget"


def test_criterion_01_closed_forms_small():
    _run("01", "closed-forms-small", budget=5.0)


def test_criterion_02_gluing_examples():
    _run("02", "gluing-examples")


def test_criterion_03_continuant_closed_form():
    _run("03", "continuant-closed-form")


def test_criterion_04_integer_irreducibles():
    _run("04", "integer-irreducibles", budget=120.0)


def test_criterion_05_sqrt_k_irreducibles():
    # each census carries its own five-minute budget
    for name in ("sqrt2", "sqrt3"):
        start = time.monotonic()
        census_memo(name)
        elapsed = time.monotonic() - start
        print(f"     census {name} built in {elapsed:.2f}s (budget 300s)")
        assert elapsed <= 300.0
    _run("05", "sqrt-k-irreducibles")


def test_criterion_06_conjugate_bound_family():
    _run("06", "conjugate-bound-family")


def test_criterion_07_gauss_unit_family():
    _run("07", "gauss-unit-family")


def test_criterion_08_odd_size_obstruction():
    _run("08", "odd-size-obstruction")


def test_criterion_09_constant_tuple_identities():
    _run("09", "constant-tuple-identities")


def test_criterion_10_rouche_examples():
    _run("10", "rouche-examples")


def test_criterion_11_conjugate_transfer():
    _run("11", "conjugate-transfer")


def test_criterion_12_reduction_oracle():
    _run("12", "reduction-oracle")


def test_criterion_13_small_entry_pairs():
    _run("13", "small-entry-pairs")
