from __future__ import annotations

import pytest

from csmhyp.charclasses import build_report
from csmhyp.segre import TrialPolicy


@pytest.fixture(scope="session")
def report_cache():
    """Session-wide cache of full-pipeline reports keyed by (poly, nvars,
    policy); acceptance criteria share fixture runs instead of recomputing."""
    cache = {}

    def get(poly_text: str, nvars: int, policy: TrialPolicy = TrialPolicy()):
        key = (poly_text, nvars, policy)
        if key not in cache:
            cache[key] = build_report(poly_text, nvars, policy)
        return cache[key]

    return get
