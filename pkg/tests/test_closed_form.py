import json

import pytest

from sgq import BlockProfile
from sgq.closed_form import generic_instance, solution_line_report
from sgq.flag import assemble, normal_form, standard_parabolic_member

# computed once by the solver on the generic instance, then frozen:
# the one-term interior candidates and the duplicated eta line disagree
EXPECTED_MISMATCHES = ["a22", "a33", "alpha23", "alpha32", "eta"]


def test_generic_instance_is_fully_generic():
    ring, bp, g = generic_instance()
    assert bp == BlockProfile(2, 2, 1, 1)
    assert ring.n_odd == 8
    # every entry nonzero, odd entries pairwise distinct generators
    odd_entries = set()
    for i in range(4):
        for j in range(4):
            assert not g[i, j].is_zero()
            if not g[i, j].is_even():
                odd_entries.add(repr(g[i, j]))
    assert len(odd_entries) == 8


def test_generic_instance_factors_exactly():
    _, bp, g = generic_instance()
    coords, p = normal_form(g, bp)
    assert assemble(coords) * p == g
    assert standard_parabolic_member(p, bp)


def test_first_line_readoff_matches_solver():
    _, bp, g = generic_instance()
    report = solution_line_report(g, bp)
    assert report["first_line_matches"]
    first = [c for c in report["lines"] if c["line"] == 1]
    assert all(c["matches"] for c in first)
    assert {c["target"] for c in first} >= {"a11", "a12", "alpha13", "alpha14", "alpha41", "a44"}


def test_one_term_interior_candidates_mismatch():
    _, bp, g = generic_instance()
    report = solution_line_report(g, bp)
    assert report["mismatched_targets"] == EXPECTED_MISMATCHES
    for entry in report["lines"]:
        if not entry["matches"]:
            assert entry["residual"]  # the report shows what is missing


def test_duplicated_eta_line_and_its_repair():
    _, bp, g = generic_instance()
    report = solution_line_report(g, bp)
    eta_lines = [c for c in report["lines"] if c["target"] == "eta"]
    assert len(eta_lines) == 2
    assert eta_lines[0]["matches"] and not eta_lines[1]["matches"]
    repaired = [c for c in report["lines"] if c["target"] == "xi"]
    assert len(repaired) == 1 and repaired[0]["matches"]


def test_solved_corner_formulas_match():
    _, bp, g = generic_instance()
    report = solution_line_report(g, bp)
    for target in ("u", "v"):
        entries = [c for c in report["lines"] if c["target"] == target]
        assert len(entries) == 1 and entries[0]["matches"]


def test_report_is_machine_readable():
    _, bp, g = generic_instance()
    report = solution_line_report(g, bp)
    assert json.loads(json.dumps(report)) == report


def test_report_rejects_larger_blocks():
    _, _, g = generic_instance()
    with pytest.raises(ValueError):
        solution_line_report(g, BlockProfile(2, 2, 2, 1))
