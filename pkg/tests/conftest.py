"""Session-wide fixtures.

The claim suite and the acceptance tests share one cached run over
n = 4, 5, 6 so the full test session stays well under the runtime budget.
"""

from __future__ import annotations

import pytest

from diamondsemi import verify as verify_mod

SUITE_NS = (4, 5, 6)


@pytest.fixture(scope="session")
def workspaces():
    return {n: verify_mod.Workspace(n) for n in SUITE_NS}


@pytest.fixture(scope="session")
def semirings(workspaces):
    return {n: ws.semiring for n, ws in workspaces.items()}


@pytest.fixture(scope="session")
def suite_reports(workspaces):
    """Every applicable (claim, n) report, computed once per session."""
    reports = []
    for claim_id, claim in verify_mod.REGISTRY.items():
        for n in SUITE_NS:
            if claim.applies(n):
                reports.append(verify_mod.run_claim(claim_id, n, workspaces[n]))
    return reports


@pytest.fixture(scope="session")
def report_index(suite_reports):
    return {(r.claim_id, r.n): r for r in suite_reports}
