import json
import math

import pytest

from cliquesub.experiments import (
    OPTIMAL_P,
    ExperimentRecord,
    SweepBudgets,
    emit_report,
    find_certified_ratio_violation,
    records_from_json,
    run_ratio_sweep,
)


class TestRecords:
    def test_complete_graph_record(self):
        # p = 1 gives K_50: chi bounds collapse to 50, the subdivision
        # certificate covers every vertex, and no counting certificate
        # exists below n, so the point ratio is exactly 1
        recs = run_ratio_sweep([50], 1.0, 1)
        (r,) = recs
        assert (r.chi_lower, r.chi_upper, r.sigma_lower) == (50, 50, 50)
        assert r.chi_lower_tag == "exact"
        assert r.sigma_upper_t is None
        assert r.ratio_point == 1.0

    def test_sorted_and_deterministic(self):
        a = run_ratio_sweep([40, 20], 0.5, 2)
        b = run_ratio_sweep([40, 20], 0.5, 2)
        assert [(r.n, r.seed) for r in a] == [(20, 0), (20, 1), (40, 0), (40, 1)]
        assert a == b

    def test_field_consistency(self):
        recs = run_ratio_sweep([30, 60], OPTIMAL_P, 2)
        for r in recs:
            assert r.chi_lower <= r.chi_upper
            assert r.sigma_lower >= 1
            if r.sigma_upper_t is not None:
                assert r.sigma_lower < r.sigma_upper_t
            assert r.reference == pytest.approx(math.sqrt(r.n) / math.log(r.n))

    def test_empty_ns_rejected(self):
        with pytest.raises(ValueError):
            run_ratio_sweep([], 0.5, 1)


class TestEmission:
    def test_empty_records(self):
        assert emit_report([], "csv").splitlines() == [
            "n,p,seed,chi_upper,chi_lower,chi_lower_tag,sigma_lower,"
            "sigma_upper_t,ratio_lower,ratio_point,reference"
        ]
        assert emit_report([], "json") == "[]"

    def test_single_row(self):
        rec = ExperimentRecord(
            n=50, p=1.0, seed=0, chi_upper=50, chi_lower=50,
            chi_lower_tag="exact", sigma_lower=50, sigma_upper_t=None,
            ratio_lower=None, ratio_point=1.0, reference=1.807,
        )
        text = emit_report([rec], "csv")
        lines = text.splitlines()
        assert len(lines) == 2
        assert lines[1].startswith("50,1.0,0,50,50,exact,50,,,1.0,")

    def test_lf_endings_and_stability(self):
        recs = run_ratio_sweep([25], 0.6, 2)
        text = emit_report(recs, "csv")
        assert "\r" not in text
        assert emit_report(recs, "csv") == text

    def test_json_round_trip(self):
        recs = run_ratio_sweep([25, 35], 0.6, 2)
        back = records_from_json(emit_report(recs, "json"))
        assert back == recs

    def test_unknown_format(self):
        with pytest.raises(ValueError, match="unknown format"):
            emit_report([], "tsv")


class TestViolationSearch:
    def test_small_sizes_report_gap_not_violation(self):
        # at these sizes the counting certificate is far above the coloring
        # bound, so the search must downgrade to reporting the gap
        rec, log = find_certified_ratio_violation([40, 60], seeds_per_n=1)
        assert rec is None
        assert any("best gap" in line for line in log)

    def test_log_names_budget_failures(self):
        budgets = SweepBudgets(omega_nodes=5)
        rec, log = find_certified_ratio_violation([40], budgets=budgets)
        assert rec is None
        assert any("omega not exact" in line for line in log)
