"""Claim registry: coverage, determinism, and the frozen status map.

Every structural claim must come back "pass" or "mismatch-noted" — a
"fail" means the implementation and the documented structure disagree in
an unexpected way.  The exact set of mismatch-noted (claim, n) pairs is
frozen here so any drift is caught.
"""

import pytest

from diamondsemi import verify
from diamondsemi.verify import (
    FAIL,
    MISMATCH,
    OUT_OF_SCOPE,
    PASS,
    REGISTRY,
    STATEMENT_MANIFEST,
    ClaimRangeError,
    UnknownClaimError,
    Workspace,
    run_all,
    run_claim,
)

# documented deviations: printed statements whose checks verify a corrected
# form and report the difference with a witness
EXPECTED_MISMATCHES = {
    ("Example 3.2", 4),   # two multiplication-table cells are typos
    ("Lemma 3.5", 4), ("Lemma 3.5", 5), ("Lemma 3.5", 6),   # infinity is one-sided
    ("Thm 3.8", 4), ("Thm 3.8", 5), ("Thm 3.8", 6),         # same, plus an index slip
    ("Prop 4.2", 4), ("Prop 4.2", 5), ("Prop 4.2", 6),      # identity not add-neutral
    ("Cor 4.5", 5),                                          # n=5 congruence-simple
    ("Thm 5.6", 4), ("Thm 5.6", 5), ("Thm 5.6", 6),         # ideal-simple only
    ("§7 chain", 4), ("§7 chain", 5), ("§7 chain", 6),      # ideal-simple only
    ("Thm 7.1", 5), ("Thm 7.1", 6),                          # ideal-simple only
    ("Thm 7.5", 6),                                          # k < n-2 not maximal
}


def test_registry_matches_manifest():
    assert tuple(REGISTRY) == STATEMENT_MANIFEST
    assert set(OUT_OF_SCOPE).isdisjoint(STATEMENT_MANIFEST)


def test_no_failures_and_frozen_mismatch_set(suite_reports):
    statuses = {(r.claim_id, r.n): r.status for r in suite_reports}
    failed = [k for k, s in statuses.items() if s == FAIL]
    assert not failed, failed
    mismatched = {k for k, s in statuses.items() if s == MISMATCH}
    assert mismatched == EXPECTED_MISMATCHES
    assert all(s in (PASS, MISMATCH) for s in statuses.values())


def test_mismatches_carry_witnesses_and_notes(suite_reports):
    for r in suite_reports:
        if r.status == MISMATCH:
            assert r.witness, (r.claim_id, r.n)
            assert r.notes, (r.claim_id, r.n)


def test_example_tables_witness(report_index):
    r = report_index[("Example 3.2", 4)]
    assert r.witness["add_mismatches"] == []
    cells = {(row, col) for row, col, _, _ in map(tuple, r.witness["mul_mismatches"])}
    assert cells == {("0aa", "ba1"), ("011", "bbb")}


def test_simplicity_threshold_witness(report_index):
    r = report_index[("Cor 4.5", 5)]
    assert r.witness["proper_ideal"] == "MAX"
    assert r.witness["ideal_size"] == 44
    assert r.witness["congruence_simple"] is True


def test_union_ideal_witness(report_index):
    r = report_index[("Thm 7.5", 6)]
    (entry,) = r.witness["intermediate_ideals"]
    assert entry["atom_set"] == (1, 2, 3)
    assert entry["union_size"] < entry["intermediate_size"] < entry["ambient_order"]


def test_applicability_rules():
    with pytest.raises(UnknownClaimError):
        run_claim("bogus", 4)
    with pytest.raises(ClaimRangeError):
        run_claim("Example 3.2", 5)
    with pytest.raises(ClaimRangeError):
        run_claim("Prop 4.4", 4)
    with pytest.raises(ClaimRangeError):
        run_claim("Remark 7.2", 6)


def test_determinism(workspaces):
    a = run_claim("Prop 3.1", 5, workspaces[5]).to_dict()
    b = run_claim("Prop 3.1", 5, workspaces[5]).to_dict()
    a.pop("seconds"), b.pop("seconds")
    assert a == b


def test_run_all_filter(workspaces):
    reports = run_all([4, 5], claim_filter="Lemma 3.7")
    assert [(r.claim_id, r.n) for r in reports] == [("Lemma 3.7", 4), ("Lemma 3.7", 5)]


def test_report_serialization(report_index):
    import json

    r = report_index[("Prop 5.4", 5)]
    d = r.to_dict()
    assert d["claim"] == "Prop 5.4" and d["n"] == 5 and d["status"] == PASS
    json.dumps(d, default=str)  # serializable
