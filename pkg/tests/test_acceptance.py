"""Acceptance gate: one test per criterion, each printing a pass/fail line.

Every criterion runs its suite over the full stated corpus at the stated
tolerance (zero disagreements unless noted) and within its wall-clock
budget.  Run with `pytest tests/test_acceptance.py -v -s` to see the lines.
"""

import time

from posetalg import suites

CONFIG = suites.SuiteConfig(max_size=5, samples=1000, seed=42, horizon=12)


def _run(number, suite, budget_s, config=CONFIG):
    start = time.perf_counter()
    report = suites.run_suite(suite, config)
    elapsed = time.perf_counter() - start
    ok = report["failures"] == 0 and elapsed <= budget_s
    status = "PASS" if ok else "FAIL"
    print(
        f"ACCEPTANCE {number:>2} {suite:<17} {status} "
        f"({elapsed:6.2f}s / budget {budget_s}s, cases={report['cases']})"
    )
    assert report["failures"] == 0, report.get("firstCounterexample")
    assert elapsed <= budget_s, f"budget exceeded: {elapsed:.2f}s > {budget_s}s"
    return report


def test_acceptance_01_elementary_zero_vs_oracle():
    report = _run(1, "fact24", 60)
    # 87 corpus posets exhaustively, plus the 1000 seeded cases at n=8
    corpus_records = [r for r in report["results"] if not r["poset"].startswith("n8r")]
    random_cases = sum(
        r["params"]["pairs"] for r in report["results"] if r["poset"].startswith("n8r")
    )
    assert len(corpus_records) == 87
    assert random_cases == 1000


def test_acceptance_02_product_order_three_ways():
    report = _run(2, "pi-order", 60)
    # sum over the 87 corpus posets of (#subsets of size <= 3) squared
    assert report["cases"] == 46544


def test_acceptance_03_join_primeness_grounds_lattice_order():
    _run(3, "join-prime", 120)


def test_acceptance_04_segments_isomorphic_to_products():
    report = _run(4, "is-pi-iso", 60)
    labels = {r["poset"] for r in report["results"]}
    assert {"rado3", "rado4", "rado5"} <= labels
    assert len(labels) == 90  # 87 corpus posets + three prefixes


def test_acceptance_05_chain_collapse():
    report = _run(5, "chain-lattice", 30)
    chains = [r for r in report["results"] if r["poset"].startswith("chain")]
    assert len(chains) == 8  # closures for chains of length 1..8


def test_acceptance_06_rado_prefix_width_and_bad_array():
    report = _run(6, "rado", 60)
    assert report["badArray"] is True
    assert report["antichainSize"] >= 5


def test_acceptance_07_product_map_properties():
    report = _run(7, "emap", 120)
    assert len(report["results"]) == 16  # all ordered base pairs


def test_acceptance_08_product_generation():
    report = _run(8, "product-gen", 120)
    assert len(report["results"]) == 17  # 16 pairs plus the premise probe


def test_acceptance_09_relativization_bijective():
    report = _run(9, "relativize", 60)
    assert len(report["results"]) == 87  # every corpus poset, every q inside


def test_acceptance_10_block_decomposition():
    report = _run(10, "h-construction", 120)
    assert len(report["results"]) == 88  # all directed posets with <= 6 elements


def test_acceptance_11_universal_property():
    report = _run(11, "hom-laws", 60)
    assert len(report["results"]) == 200


def test_acceptance_12_binary_subbase():
    report = _run(12, "binary-subbase", 60)
    sampled = [r for r in report["results"] if r["params"].get("mode") == "sampled"]
    assert all(r["params"]["samples"] == 10000 for r in sampled)
    assert len(sampled) == 63  # the five-element posets


def test_acceptance_13_interval_algebra():
    report = _run(13, "interval-algebra", 10)
    assert len(report["results"]) == 6


def test_acceptance_14_lex_layering():
    report = _run(14, "lex-layering", 60)
    assert len(report["results"]) == 50
