"""Closed-form baselines and the affine Milnor oracle."""

from __future__ import annotations

import json

import pytest

from csmhyp.charclasses import build_report
from csmhyp.oracles import (
    FixtureCase,
    affine_milnor_total,
    check_fixture,
    default_fixtures,
    load_fixtures,
    segre_linear_subspace,
    smooth_chern_class,
)
from csmhyp.poly import parse_poly
from csmhyp.segre import TrialPolicy

LIGHT = TrialPolicy(primes=(32003,), seeds=(101,))


def test_smooth_chern_class_examples():
    assert smooth_chern_class(2, 2).coeffs == (0, 2, 2)
    assert smooth_chern_class(2, 3).coeffs == (0, 3, 0)
    assert smooth_chern_class(3, 2).coeffs == (0, 2, 4, 4)


def test_segre_linear_subspace_examples():
    assert segre_linear_subspace(2, 0).coeffs == (0, 0, 1)
    assert segre_linear_subspace(3, 1).coeffs == (0, 0, 1, -2)
    assert segre_linear_subspace(3, 2).coeffs == (0, 1, -1, 1)
    with pytest.raises(ValueError):
        segre_linear_subspace(3, 3)


def test_affine_milnor_node_and_cusp():
    nodal = parse_poly("x1^2*x2 - x0^3 - x0^2*x2", 3)
    assert affine_milnor_total(nodal, 2) == 1
    cusp = parse_poly("x1^2*x2 - x0^3", 3)
    assert affine_milnor_total(cusp, 2) == 2


def test_affine_milnor_smooth_and_cone():
    conic = parse_poly("x0^2 + x1^2 + x2^2", 3)
    assert affine_milnor_total(conic, 2) == 0
    cone = parse_poly("x0^2 + x1^2 + x2^2", 4)
    assert affine_milnor_total(cone, 3) == 1


def test_affine_milnor_non_isolated():
    double_line = parse_poly("x0^2*x1", 3)
    assert affine_milnor_total(double_line, 2) is None


def test_affine_milnor_two_lines():
    assert affine_milnor_total(parse_poly("x0*x1", 3), 2) == 1


def test_default_fixtures_well_formed():
    fixtures = default_fixtures()
    assert len(fixtures) >= 12
    names = [f.name for f in fixtures]
    assert len(names) == len(set(names))
    for fix in fixtures:
        poly = fix.parse()
        assert poly.nvars == fix.n + 1
        assert fix.provenance
        assert fix.expected


def test_fixture_corpus_matches_pipeline():
    for fix in default_fixtures():
        report = build_report(fix.parse(), policy=LIGHT)
        verdicts = check_fixture(fix, report.to_json_dict())
        bad = [k for k, ok in verdicts if not ok]
        assert not bad, f"{fix.name}: {bad}"
        assert report.all_passed, fix.name


def test_fixture_milnor_oracle_agreement():
    for fix in default_fixtures():
        if fix.milnor_oracle is None:
            continue
        got = affine_milnor_total(fix.parse(), fix.chart, LIGHT.primes)
        assert got == fix.milnor_oracle, fix.name


def test_fixture_json_round_trip(tmp_path):
    fixtures = default_fixtures()
    path = tmp_path / "corpus.json"
    path.write_text(json.dumps([f.to_json() for f in fixtures]), encoding="utf-8")
    loaded = load_fixtures(path)
    assert loaded == fixtures


def test_check_fixture_flags_corruption():
    fix = default_fixtures()[0]
    report = build_report(fix.parse(), policy=LIGHT)
    corrupted = FixtureCase(
        name=fix.name,
        poly=fix.poly,
        n=fix.n,
        expected={**fix.expected, "euler": 99},
        provenance=fix.provenance,
    )
    verdicts = check_fixture(corrupted, report.to_json_dict())
    assert ("euler", False) in verdicts
