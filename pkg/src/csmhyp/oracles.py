"""Independent baselines: closed-form classes, Segre classes of linear
subspaces, affine Milnor numbers by Jacobian colength, and the fixture
corpus used by the verification suite.

The affine Milnor oracle dimensions are computed modulo a prime (same
engine as everything else) and accepted only under multi-prime agreement.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import product

from .chow import ChowClass, chern_tangent_pn, hyperplane_power, line_bundle
from .errors import RandomnessError
from .groebner import buchberger
from .poly import Polynomial, parse_poly, reduce_mod_p
from .segre import DEFAULT_PRIMES


def smooth_chern_class(n: int, d: int) -> ChowClass:
    """Pushforward of c(TX) cap [X] for a smooth degree-d hypersurface in
    P^n, by adjunction: (1 + h)^(n+1) * d*h / (1 + d*h)."""
    return (
        chern_tangent_pn(n)
        * hyperplane_power(n, 1)
        * Fraction(d)
        * line_bundle(n, d).inverse()
    )


def segre_linear_subspace(n: int, m: int) -> ChowClass:
    """Segre class of a linear P^m inside P^n: h^(n-m) / (1 + h)^(n-m),
    the inverse normal-bundle Chern class capped with the class of P^m."""
    if not 0 <= m < n:
        raise ValueError("need 0 <= m < n for a proper linear subspace")
    return hyperplane_power(n, n - m) * (line_bundle(n, 1).inverse() ** (n - m))


# -- affine Milnor oracle -----------------------------------------------------


def _standard_monomial_count(lts, nvars):
    """Number of monomials outside a monomial ideal; None if infinite."""
    if not lts:
        return None  # zero ideal: the whole polynomial ring
    bounds = [None] * nvars
    for m in lts:
        support = [i for i, e in enumerate(m) if e]
        if not support:
            return 0  # unit ideal
        if len(support) == 1:
            i = support[0]
            if bounds[i] is None or m[i] < bounds[i]:
                bounds[i] = m[i]
    if any(b is None for b in bounds):
        return None  # some variable has no pure power: positive-dimensional
    # enumerate the finite box under the pure-power bounds
    def divisible(mono):
        return any(all(x >= y for x, y in zip(mono, lt)) for lt in lts)

    count = 0
    for mono in product(*[range(b) for b in bounds]):
        if not divisible(mono):
            count += 1
    return count


def affine_milnor_total(F: Polynomial, chart: int, primes=DEFAULT_PRIMES[:2]):
    """Total Milnor number of the affine part of V(F) in the given chart,
    as the GF(p) vector-space dimension of the quotient by the affine
    jacobian ideal (the dehomogenized F together with its partials).

    Valid when every singular point lies in the chart (caller obligation;
    re-chart otherwise) and, as a Milnor rather than Tjurina count, when
    the singularities are quasi-homogeneous, true of the whole fixture
    corpus.  Returns None for a non-isolated singular locus.
    """
    if F.field.kind != "rationals":
        raise ValueError("oracle input must be a polynomial over Q")
    f = F.dehomogenize(chart)
    gens_q = [f] + [f.partial(i) for i in range(f.nvars)]
    gens_q = [g for g in gens_q if not g.is_zero]
    values = []
    for p in primes:
        gens = [reduce_mod_p(g, p) for g in gens_q]
        basis = buchberger(gens)
        values.append(_standard_monomial_count(basis.leading_terms, f.nvars))
    if len(set(values)) == 1:
        return values[0]
    for p in DEFAULT_PRIMES:
        if p in primes:
            continue
        gens = [reduce_mod_p(g, p) for g in gens_q]
        basis = buchberger(gens)
        tie = _standard_monomial_count(basis.leading_terms, f.nvars)
        matches = [v for v in values if v == tie]
        if matches:
            return tie
    raise RandomnessError(
        f"affine Milnor dimensions disagree across primes: {values}"
    )


# -- fixture corpus -----------------------------------------------------------


@dataclass(frozen=True)
class FixtureCase:
    """One named hypersurface with independently derived expected values.

    ``expected`` holds any subset of the report fields (classes as
    codimension-indexed strings); ``chart`` selects the affine chart for
    the Milnor oracle, or None when its preconditions fail; ``provenance``
    names the oracle behind each expectation.
    """

    name: str
    poly: str
    n: int
    expected: dict = dc_field(default_factory=dict)
    chart: int | None = None
    milnor_oracle: int | None = None
    provenance: str = ""

    def parse(self) -> Polynomial:
        return parse_poly(self.poly, self.n + 1)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "poly": self.poly,
            "n": self.n,
            "expected": self.expected,
            "chart": self.chart,
            "milnor_oracle": self.milnor_oracle,
            "provenance": self.provenance,
        }


def load_fixtures(path) -> list[FixtureCase]:
    """Read a fixture corpus from a JSON list of FixtureCase dicts."""
    with open(path, "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    out = []
    for row in raw:
        out.append(
            FixtureCase(
                name=row["name"],
                poly=row["poly"],
                n=row["n"],
                expected=row.get("expected", {}),
                chart=row.get("chart"),
                milnor_oracle=row.get("milnor_oracle"),
                provenance=row.get("provenance", ""),
            )
        )
    return out


def default_fixtures() -> list[FixtureCase]:
    """The built-in corpus.  Every expected value was derived from a
    closed form or a topological count, as noted per case."""
    return [
        FixtureCase(
            name="smooth_conic",
            poly="x0^2 + x1^2 + x2^2",
            n=2,
            expected={
                "projective_degrees": [1, 1, 1],
                "segre_singular": ["0", "0", "0"],
                "csm": ["0", "2", "2"],
                "fulton": ["0", "2", "2"],
                "mu": ["0", "0", "0"],
                "euler": 2,
                "milnor_total": 0,
            },
            chart=2,
            milnor_oracle=0,
            provenance="smooth conic is P^1, chi=2; degrees (d-1)^i by Bezout",
        ),
        FixtureCase(
            name="smooth_cubic",
            poly="x0^3 + x1^3 + x2^3",
            n=2,
            expected={
                "projective_degrees": [1, 2, 4],
                "segre_singular": ["0", "0", "0"],
                "csm": ["0", "3", "0"],
                "euler": 0,
                "milnor_total": 0,
            },
            chart=2,
            milnor_oracle=0,
            provenance="smooth plane cubic is a genus-1 curve, chi=0",
        ),
        FixtureCase(
            name="smooth_quartic",
            poly="x0^4 + x1^4 + x2^4",
            n=2,
            expected={
                "projective_degrees": [1, 3, 9],
                "segre_singular": ["0", "0", "0"],
                "csm": ["0", "4", "-4"],
                "euler": -4,
                "milnor_total": 0,
            },
            provenance="smooth plane quartic has genus 3, chi=2-2g=-4",
        ),
        FixtureCase(
            name="nodal_cubic",
            poly="x1^2*x2 - x0^3 - x0^2*x2",
            n=2,
            expected={
                "projective_degrees": [1, 2, 3],
                "segre_singular": ["0", "0", "1"],
                "csm": ["0", "3", "1"],
                "mu": ["0", "0", "1"],
                "euler": 1,
                "milnor_total": 1,
            },
            chart=2,
            milnor_oracle=1,
            provenance=(
                "nodal cubic is a pinched torus, chi=1; node has Milnor "
                "number 1; jacobian scheme is one reduced point, s=h^2"
            ),
        ),
        FixtureCase(
            name="cuspidal_cubic",
            poly="x1^2*x2 - x0^3",
            n=2,
            expected={
                "projective_degrees": [1, 2, 2],
                "segre_singular": ["0", "0", "2"],
                "csm": ["0", "3", "2"],
                "mu": ["0", "0", "2"],
                "euler": 2,
                "milnor_total": 2,
            },
            chart=2,
            milnor_oracle=2,
            provenance=(
                "cuspidal cubic is homeomorphic to S^2, chi=2; cusp has "
                "Milnor number 2; jacobian point has multiplicity 2"
            ),
        ),
        FixtureCase(
            name="two_lines",
            poly="x0*x1",
            n=2,
            expected={
                "projective_degrees": [1, 1, 0],
                "segre_singular": ["0", "0", "1"],
                "csm": ["0", "2", "3"],
                "fulton": ["0", "2", "2"],
                "mu": ["0", "0", "1"],
                "euler": 3,
                "milnor_total": 1,
            },
            chart=2,
            milnor_oracle=1,
            provenance=(
                "two P^1 glued at a point: chi=2+2-1=3; crossing point is "
                "a node; s(point, P^2)=h^2"
            ),
        ),
        FixtureCase(
            name="three_lines",
            poly="x0*x1*x2",
            n=2,
            expected={
                "projective_degrees": [1, 2, 1],
                "segre_singular": ["0", "0", "3"],
                "csm": ["0", "3", "3"],
                "euler": 3,
                "milnor_total": 3,
            },
            provenance=(
                "triangle of lines: chi=3*2-3=3; three reduced nodes give "
                "s=3h^2; no single chart contains all three, so the affine "
                "oracle does not apply"
            ),
        ),
        FixtureCase(
            name="three_generic_lines",
            poly="x0*x1*(x0 + x1 + x2)",
            n=2,
            expected={
                "projective_degrees": [1, 2, 1],
                "segre_singular": ["0", "0", "3"],
                "csm": ["0", "3", "3"],
                "euler": 3,
                "milnor_total": 3,
            },
            provenance=(
                "projectively equivalent to the coordinate triangle, so the "
                "same classes: chi=3, three nodes"
            ),
        ),
        FixtureCase(
            name="double_line_plus_line",
            poly="x0^2*x1",
            n=2,
            expected={
                "projective_degrees": [1, 1, 0],
                "segre_singular": ["0", "1", "0"],
                "csm": ["0", "2", "3"],
                "euler": 3,
            },
            provenance=(
                "non-reduced: support is two crossing lines, so the class "
                "equals that of x0*x1 (chi=3); singular scheme is the "
                "double line's support"
            ),
        ),
        FixtureCase(
            name="double_line",
            poly="x0^2",
            n=2,
            expected={
                "projective_degrees": [1, 0, 0],
                "segre_singular": ["0", "1", "-1"],
                "csm": ["0", "1", "2"],
                "euler": 2,
            },
            provenance=(
                "support is one line P^1, chi=2; s(line, P^2) = h/(1+h) "
                "by the linear-subspace closed form"
            ),
        ),
        FixtureCase(
            name="double_two_lines",
            poly="x0^2*x1^2",
            n=2,
            expected={
                "projective_degrees": [1, 1, 0],
                "segre_singular": ["0", "2", "-3"],
                "csm": ["0", "2", "3"],
                "euler": 3,
            },
            provenance=(
                "non-reduced with one-dimensional singular scheme (both "
                "lines); class equals that of x0*x1, chi=3"
            ),
        ),
        FixtureCase(
            name="line_plus_conic",
            poly="(x0 + x1 + x2) * (x0^2 + x1^2 - x2^2)",
            n=2,
            expected={
                "projective_degrees": [1, 2, 2],
                "segre_singular": ["0", "0", "2"],
                "csm": ["0", "3", "2"],
                "mu": ["0", "0", "2"],
                "euler": 2,
                "milnor_total": 2,
            },
            chart=2,
            milnor_oracle=2,
            provenance=(
                "generic transversal line plus smooth conic: two P^1 glued "
                "at two points, chi=2+2-2=2; two nodes, both affine in "
                "chart 2, total Milnor number 2; normal-crossings closed "
                "form gives s=2h^2"
            ),
        ),
        FixtureCase(
            name="quadric_cone",
            poly="x0^2 + x1^2 + x2^2",
            n=3,
            expected={
                "projective_degrees": [1, 1, 1, 0],
                "segre_singular": ["0", "0", "0", "1"],
                "csm": ["0", "2", "4", "3"],
                "fulton": ["0", "2", "4", "4"],
                "mu": ["0", "0", "0", "1"],
                "euler": 3,
                "milnor_total": 1,
            },
            chart=3,
            milnor_oracle=1,
            provenance=(
                "cone over a conic: resolving the vertex gives chi=4-2+1=3; "
                "vertex is an ordinary double point, Milnor number 1"
            ),
        ),
        FixtureCase(
            name="smooth_quadric_p3",
            poly="x0^2 + x1^2 + x2^2 + x3^2",
            n=3,
            expected={
                "projective_degrees": [1, 1, 1, 1],
                "segre_singular": ["0", "0", "0", "0"],
                "csm": ["0", "2", "4", "4"],
                "euler": 4,
                "milnor_total": 0,
            },
            chart=3,
            milnor_oracle=0,
            provenance="smooth quadric surface is P^1 x P^1, chi=4",
        ),
        FixtureCase(
            name="smooth_cubic_p3",
            poly="x0^3 + x1^3 + x2^3 + x3^3",
            n=3,
            expected={
                "segre_singular": ["0", "0", "0", "0"],
                "csm": ["0", "3", "3", "9"],
                "euler": 9,
                "milnor_total": 0,
            },
            provenance="smooth cubic surface is P^2 blown up at 6 points, chi=3+6=9",
        ),
        FixtureCase(
            name="two_planes_p3",
            poly="x0*x1",
            n=3,
            expected={
                "projective_degrees": [1, 1, 0, 0],
                "segre_singular": ["0", "0", "1", "-2"],
                "csm": ["0", "2", "5", "4"],
                "mu": ["0", "0", "1", "0"],
                "euler": 4,
                "milnor_total": 0,
            },
            provenance=(
                "two P^2 glued along a P^1: chi=3+3-2=4; singular scheme is "
                "a line, s = h^2/(1+h)^2 by the linear-subspace closed form; "
                "one-dimensional singular locus, so the affine oracle does "
                "not apply"
            ),
        ),
        FixtureCase(
            name="three_planes_p3",
            poly="x0*x1*x2",
            n=3,
            expected={
                "projective_degrees": [1, 2, 1, 0],
                "segre_singular": ["0", "0", "3", "-10"],
                "csm": ["0", "3", "6", "4"],
                "euler": 4,
                "milnor_total": 5,
            },
            provenance=(
                "normal-crossings triple of planes: closed-form class gives "
                "chi=4; singular scheme is three concurrent lines, Segre "
                "class from the normal-crossings closed form"
            ),
        ),
        FixtureCase(
            name="double_plane_plus_plane",
            poly="x0^2*x1",
            n=3,
            expected={
                "projective_degrees": [1, 1, 0, 0],
                "segre_singular": ["0", "1", "0", "-4"],
                "csm": ["0", "2", "5", "4"],
                "euler": 4,
            },
            provenance=(
                "non-reduced: support is two planes, so the class equals "
                "that of x0*x1 in P^3 (chi=4)"
            ),
        ),
    ]


def check_fixture(fixture: FixtureCase, report_dict: dict):
    """Compare a computed report against a fixture's expected values.

    Returns a list of ``(key, ok)`` verdicts, one per expected field.
    """
    verdicts = []
    for key, want in fixture.expected.items():
        got = report_dict.get(key)
        verdicts.append((key, got == want))
    return verdicts
