"""Acceptance suite: each numbered criterion runs at its stated tolerance
and prints one pass/fail line (run with ``pytest -s`` to see them inline).
"""

import math
import subprocess
import sys
import time
from fractions import Fraction

import mpmath
import numpy as np
import pytest

from citetrace import (
    CitationList,
    class_weights,
    h_index,
    i3_aggregate,
    indicator_bundle,
    partition_from_list,
    partition_from_summary,
    pearson,
    performance_matrix,
    rank_entities,
    score_entity,
    significance,
    spearman,
    summarize,
    trace_from_counts,
)
from citetrace.reference import matches_displayed, reference_corpus

CORPUS_SEED = 20130322
RANDOM_LISTS = 10_000
MONOTONE_POINTS = 1_000
REL_TOL = 1e-12


def _report(number: int, label: str, ok: bool) -> None:
    print(f"[criterion {number}] {label}: {'PASS' if ok else 'FAIL'}")
    assert ok, f"criterion {number} failed: {label}"


def _random_corpus():
    """Deterministic random citation lists: lengths 1-500, counts 0-1000."""
    rng = np.random.default_rng(CORPUS_SEED)
    lengths = rng.integers(1, 501, size=RANDOM_LISTS)
    for n in lengths:
        yield tuple(int(c) for c in rng.integers(0, 1001, size=int(n)))


def _h_oracle(counts) -> int:
    ranked = sorted(counts, reverse=True)
    return max(min(i, c) for i, c in enumerate(ranked, start=1))


def _rel_close(a: float, b: float) -> bool:
    return abs(a - b) <= REL_TOL * max(1.0, abs(a), abs(b))


def _golden_cells(rows):
    failures = []
    total = 0
    corpus = reference_corpus()
    for row in rows:
        part = partition_from_summary(corpus.record(row.name))
        _, matrix, bundle = row.name, performance_matrix(part), indicator_bundle(part)
        computed = {
            "X1": matrix.x1, "X2": matrix.x2, "X3": matrix.x3,
            "Y1": matrix.y1, "Y2": matrix.y2, "Y3": matrix.y3,
            "Z1": matrix.z1, "Z2": matrix.z2, "Z3": matrix.z3,
            "T": bundle.trace,
        }
        for cell, displayed in row.displayed.items():
            total += 1
            if not matches_displayed(computed[cell], displayed):
                failures.append((row.name, cell, computed[cell], displayed))
    return total, failures


def test_criterion_1_golden_journals():
    corpus = reference_corpus()
    total, failures = _golden_cells(corpus.golden_journals)
    assert total == 230  # 20 LIS journals + 3 multidisciplinary, 10 cells each
    _report(1, f"journal matrices and traces, {total} cells at displayed precision",
            not failures)


def test_criterion_2_worked_examples():
    corpus = reference_corpus()
    checked = 0
    failures = []
    for example in corpus.worked_examples:
        part = partition_from_summary(corpus.record(example.name))
        matrix = performance_matrix(part)
        bundle = indicator_bundle(part)
        computed = {
            "X1": matrix.x1, "X2": matrix.x2, "X3": matrix.x3,
            "Y1": matrix.y1, "Y2": matrix.y2, "Y3": matrix.y3,
            "Z1": matrix.z1, "Z2": matrix.z2, "Z3": matrix.z3,
        }
        for cell, displayed in example.matrix.items():
            checked += 1
            if not matches_displayed(computed[cell], displayed):
                failures.append((example.name, cell))
        for displayed in example.traces:
            checked += 1
            if not matches_displayed(bundle.trace, displayed):
                failures.append((example.name, f"T={displayed}"))
    # the author trace must hold at four decimals, not merely at the 2dp display
    ye = partition_from_summary(corpus.record("Ye FY"))
    checked += 1
    if not matches_displayed(indicator_bundle(ye).trace, "13.2739"):
        failures.append(("Ye FY", "T=13.2739"))
    _report(2, f"four worked matrices/traces, {checked} cells", not failures)


def test_criterion_3_golden_universities():
    corpus = reference_corpus()
    total, failures = _golden_cells(corpus.golden_universities)
    assert total == 20
    z3 = {row.name: row.displayed["Z3"] for row in corpus.golden_universities}
    assert z3 == {"Univ Heidelberg": "-2044", "Univ Hamburg": "-566.5"}
    for name in z3:
        part = partition_from_summary(corpus.record(name))
        assert performance_matrix(part).z3 < 0
    _report(3, f"university rows incl. negative Z3, {total} cells", not failures)


def test_criterion_4_ordering():
    corpus = reference_corpus()
    lis = [score_entity(rec) for rec in corpus.journals if rec.group == "LIS"]
    ranked = rank_entities(lis, key="T")
    expected = [row.name for row in sorted(
        (r for r in corpus.golden_journals if r.group == "LIS"), key=lambda r: r.rank)]
    top20_ok = [row.name for row in ranked.rows[:20]] == expected

    multi = [score_entity(rec) for rec in corpus.journals if rec.group == "multidisciplinary"]
    multi_ranked = rank_entities(multi, key="T")
    multi_ok = [row.name for row in multi_ranked.rows] == ["PNAS", "Nature", "Science"]
    _report(4, "LIS top-20 order and PNAS > Nature > Science by trace",
            top20_ok and multi_ok)


def test_criterion_5_oracle_equivalence():
    checked = 0
    for counts in _random_corpus():
        cl = CitationList("entity", counts)
        part = partition_from_list(cl)
        assert part.h == _h_oracle(counts)
        assert h_index(cl) == part.h
        assert partition_from_summary(summarize(cl)) == part
        checked += 1
    assert checked == RANDOM_LISTS
    _report(5, f"h-index brute-force oracle and summary round-trip on {checked} random lists",
            True)


def test_criterion_6_identity_suite():
    checked = 0
    for counts in _random_corpus():
        part = partition_from_list(counts)
        m = performance_matrix(part)
        b = indicator_bundle(part)
        w = class_weights(part)

        assert part.papers == part.core_papers + part.tail_papers + part.uncited_papers
        assert part.citations == (part.core_base_citations + part.tail_citations
                                  + part.excess_citations)
        assert part.core_base_citations == part.core_papers ** 2

        for z, y, x in ((m.z1, m.y1, m.x1), (m.z2, m.y2, m.x2), (m.z3, m.y3, m.x3)):
            assert _rel_close(z, y - x)
        assert _rel_close(m.trace, m.x1 + m.y2 + m.z3)
        assert _rel_close(m.trace, trace_from_counts(
            part.core_papers, part.tail_citations, part.excess_citations,
            part.uncited_papers, part.papers, part.citations))
        assert _rel_close(b.i3x, m.x1 + m.x2 + m.x3)
        assert _rel_close(b.i3y, m.y1 + m.y2 + m.y3)
        assert _rel_close(b.i3x, i3_aggregate(
            (part.core_papers, part.tail_papers, part.uncited_papers),
            (w.pub_core, w.pub_tail, w.pub_uncited)))
        assert _rel_close(w.pub_core + w.pub_tail + w.pub_uncited, 1.0)
        if part.citations > 0:
            assert _rel_close(w.cite_core + w.cite_tail + w.cite_excess, 1.0)
        checked += 1
    _report(6, f"exact and 1e-12 identities on {checked} random partitions", True)


def test_criterion_7_monotonicity_and_sign():
    rng = np.random.default_rng(CORPUS_SEED + 1)
    for _ in range(MONOTONE_POINTS):
        p = int(rng.integers(1, 1001))
        c = int(rng.integers(1, 100001))
        pc = int(rng.integers(0, p + 1))
        pz = int(rng.integers(0, p - pc + 1))
        ct = int(rng.integers(0, c + 1))
        ce = int(rng.integers(0, c - ct + 1))

        base = trace_from_counts(pc, ct, ce, pz, p, c)
        assert trace_from_counts(pc + 1, ct, ce, pz, p, c) > base
        assert trace_from_counts(pc, ct, ce + 1, pz, p, c) > base
        assert trace_from_counts(pc, ct, ce, pz + 1, p, c) < base

        exact = (Fraction(pc * pc, p) + Fraction(ct * ct, c) + Fraction(ce * ce, c)
                 - Fraction(pz * pz, p))
        if exact == 0:
            assert math.isclose(base, 0.0, abs_tol=1e-9)
        else:
            assert (base > 0) == (exact > 0)
    _report(7, f"unit-increment monotonicity and sign criterion at {MONOTONE_POINTS} points",
            True)


def _t_pvalue_oracle(r: float, n: int) -> float:
    """Independent oracle: numerical quadrature of the t density."""
    mpmath.mp.dps = 30
    df = n - 2
    t = mpmath.mpf(r) * mpmath.sqrt(df / (1 - mpmath.mpf(r) ** 2))

    def density(x):
        return (mpmath.gamma((df + 1) / 2)
                / (mpmath.sqrt(df * mpmath.pi) * mpmath.gamma(df / 2))
                * (1 + x * x / df) ** (-(df + 1) / 2))

    return float(2 * mpmath.quad(density, [abs(t), mpmath.inf]))


def test_criterion_8_correlation_machinery():
    # hand oracles, frozen before implementation
    assert abs(pearson((1, 2, 3), (3, 2, 4)) - 0.5) <= 1e-12
    assert abs(spearman((1, 2, 3), (3, 2, 4)) - 0.5) <= 1e-12
    assert abs(spearman((1, 1, 2), (5, 5, 9)) - 1.0) <= 1e-12

    assert abs(significance(0.5, 30) - _t_pvalue_oracle(0.5, 30)) <= 1e-4

    rng = np.random.default_rng(CORPUS_SEED + 2)
    for _ in range(200):
        n = int(rng.integers(3, 60))
        x = rng.normal(size=n)
        y = rng.normal(size=n)
        r = pearson(x, y)
        rho = spearman(x, y)
        assert -1.0 <= r <= 1.0 and -1.0 <= rho <= 1.0
        assert pearson(y, x) == r and spearman(y, x) == rho

        order = rng.permutation(n)
        assert abs(pearson(x[order], y[order]) - r) <= 1e-12
        assert abs(spearman(x[order], y[order]) - rho) <= 1e-12

        scale = float(rng.uniform(0.1, 10))
        shift = float(rng.uniform(-5, 5))
        assert abs(pearson(scale * x + shift, y) - r) <= 1e-9
        assert abs(spearman(x ** 3, y) - rho) <= 1e-12  # strictly increasing transform
    _report(8, "correlation oracles, invariants, and t-CDF significance oracle", True)


def test_criterion_9_validate_reference_cli():
    start = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "citetrace.cli", "validate-reference"],
        capture_output=True, text=True)
    elapsed = time.perf_counter() - start
    ok = (proc.returncode == 0
          and proc.stdout.strip().endswith("312/312 golden cells within displayed precision")
          and elapsed < 5.0)
    _report(9, f"validate-reference exits 0 in {elapsed:.2f}s (< 5s)", ok)
