"""Cross-checks between the independent evaluation routes for E_k, E*, and F.

Frozen reference values were produced at 50 significant digits with mpmath
(divisor-sum expansion, classical closed forms); the evaluators here must
reproduce them from the lattice side.
"""

import math
import cmath
import random

import pytest

from fricke_zeros import (
    Arc,
    ArcCoordinate,
    DomainError,
    NonConvergence,
    alpha_p,
    angle_constants,
    arc_range,
    arc_to_halfplane,
    arc2_shift,
    eisenstein_Ek,
    eisenstein_star,
    eisenstein_star_coset,
    F_arc,
    F_arc_series,
    F_glued,
    forced_junction_zero,
    glue_sign,
    glued_range,
    junction_phase,
    lattice_lambda,
    max_shell_default,
    MAX_SHELL_ENV,
)
from fricke_zeros.qexp import eisenstein_qexp

Z0 = 0.1 + 0.7j

# E_k(0.1 + 0.7i) at 50 digits, truncated; divisor-sum route, mpmath
FROZEN = {
    4: complex(3.484813413780831451183483, 2.057886589944226030031297),
    6: complex(-4.711322514405907210326156, -6.261028016276058745279397),
    12: complex(-7.399083115541746998437999, 63.63014110080773045990048),
}


def test_rows_matches_frozen_references():
    for k, expected in FROZEN.items():
        got = eisenstein_Ek(Z0, k, tol=1e-11)
        assert got.tail_bound <= 1e-11
        assert abs(got.value - expected) < 1e-10


def test_rows_matches_q_expansion_on_grid():
    rng = random.Random(20260815)
    for _ in range(12):
        z = complex(rng.uniform(-0.5, 0.5), rng.uniform(0.35, 1.2))
        for k in (4, 6, 12):
            got = eisenstein_Ek(z, k, tol=1e-12)
            ref, err = eisenstein_qexp(z, k, n_terms=300)
            assert abs(got.value - ref) <= 1e-10 + err


def test_classical_special_points():
    # E_6(i) = 0 and E_4(rho) = 0 (fixed points of order 2 and 3)
    assert abs(eisenstein_Ek(1j, 6, tol=1e-13).value) < 1e-12
    rho = complex(-0.5, math.sqrt(3) / 2)
    assert abs(eisenstein_Ek(rho, 4, tol=1e-13).value) < 1e-12
    # E_4(i) = 3 Gamma(1/4)^8 / (2 pi)^6
    assert abs(eisenstein_Ek(1j, 4, tol=1e-13).value - 1.4557628922687093224624220036) < 1e-12


def test_shells_agrees_with_rows():
    for k in (12, 16):
        a = eisenstein_Ek(Z0, k, tol=1e-9, method="shells")
        b = eisenstein_Ek(Z0, k, tol=1e-12, method="rows")
        assert abs(a.value - b.value) <= a.tail_bound + 1e-11


def test_shells_raises_when_cutoff_insufficient():
    with pytest.raises(NonConvergence):
        eisenstein_Ek(Z0, 4, tol=1e-10, method="shells", max_shell=20000)


def test_modular_invariance_of_level_one_series():
    # E_k((az+b)/(cz+d)) = (cz+d)^k E_k(z) for unimodular integer matrices
    rng = random.Random(7)
    mats = [(1, 0, 1, 1), (0, -1, 1, 0), (2, 1, 1, 1), (3, 2, 1, 1), (1, -2, 2, -3)]
    for a, b, c, d in mats:
        assert a * d - b * c == 1
        z = complex(rng.uniform(-0.4, 0.4), rng.uniform(0.6, 1.1))
        k = rng.choice((4, 6, 8))
        lhs = eisenstein_Ek((a * z + b) / (c * z + d), k, tol=1e-12).value
        rhs = (c * z + d) ** k * eisenstein_Ek(z, k, tol=1e-12).value
        assert abs(lhs - rhs) < 1e-9 * max(1.0, abs(rhs))


def test_star_routes_agree():
    for p in (5, 7):
        for k in (8, 10, 12, 16):
            combo = eisenstein_star(Z0, k, p, tol=1e-11)
            coset = eisenstein_star_coset(Z0, k, p, tol=1e-8)
            assert abs(combo.value - coset.value) <= coset.tail_bound + 1e-10
        # at k=4 the direct cusp-split enumeration converges too slowly for a
        # tight budget; its honest tail bound must still cover the difference
        combo = eisenstein_star(Z0, 4, p, tol=1e-11)
        coset = eisenstein_star_coset(Z0, 4, p, tol=0.05, max_shell=300000)
        assert coset.tail_bound < 0.5
        assert abs(combo.value - coset.value) <= coset.tail_bound
        assert abs(combo.value - coset.value) < 1e-3  # bound is very pessimistic here


def test_fricke_involution_invariance():
    # E*(-1/(p z)) = (sqrt(p) z)^k E*(z)
    for p in (5, 7):
        for k in (6, 8):
            lhs = eisenstein_star(-1 / (p * Z0), k, p, tol=1e-12).value
            rhs = (math.sqrt(p) * Z0) ** k * eisenstein_star(Z0, k, p, tol=1e-12).value
            assert abs(lhs - rhs) < 1e-9 * max(1.0, abs(rhs))


def test_atkin_lehner_average_fixes_star():
    # E* is not E_k of either argument alone; check the defining combination
    p, k = 5, 8
    w = p ** (k / 2)
    direct = (
        w * eisenstein_Ek(p * Z0, k, tol=1e-12).value
        + eisenstein_Ek(Z0, k, tol=1e-12).value
    ) / (w + 1)
    assert abs(eisenstein_star(Z0, k, p, tol=1e-11).value - direct) < 1e-10


def test_angle_constants_ranges_and_congruences():
    for p in (5, 7):
        a = alpha_p(p)
        expected_tan = 2.0 if p == 5 else 5.0 / math.sqrt(3.0)
        assert abs(math.tan(a) - expected_tan) < 1e-14
        for k in range(4, 80, 2):
            cst = angle_constants(p, k)
            assert 0.0 <= cst.alpha_pk < math.pi
            assert 0.0 <= cst.beta_pk < math.pi
            quot = (0.5 * k * (0.5 * math.pi + a) - cst.alpha_pk) / math.pi
            assert abs(quot - round(quot)) < 1e-9
            second = 0.5 * k * a if p == 5 else 0.5 * k * (a - math.pi / 6.0)
            quot2 = (second - cst.beta_pk) / math.pi
            assert abs(quot2 - round(quot2)) < 1e-9


def test_arc_parameterization_endpoints():
    # arc 1 meets arc 2 at the corner; arc 2 ends above -1/2; arc 1 starts at i/sqrt(p)
    for p in (5, 7):
        lo1, hi1 = arc_range(p, Arc.ONE)
        lo2, hi2 = arc_range(p, Arc.TWO)
        z_start = arc_to_halfplane(ArcCoordinate(p, Arc.ONE, lo1))
        assert abs(z_start - 1j / math.sqrt(p)) < 1e-15
        corner1 = arc_to_halfplane(ArcCoordinate(p, Arc.ONE, hi1))
        corner2 = arc_to_halfplane(ArcCoordinate(p, Arc.TWO, lo2))
        assert abs(corner1 - corner2) < 1e-14
        top2 = arc_to_halfplane(ArcCoordinate(p, Arc.TWO, hi2))
        assert abs(top2 - (-0.5 + 0.5j / math.sqrt(p))) < 1e-15
        # both corners sit on |z| = 1/sqrt(p) and |z + 1/2| = 1/(2 sqrt(p))
        assert abs(abs(corner1) - 1 / math.sqrt(p)) < 1e-14
        assert abs(abs(corner2 + 0.5) - 0.5 / math.sqrt(p)) < 1e-14


def test_arc_coordinate_rejects_out_of_range():
    with pytest.raises(DomainError):
        ArcCoordinate(5, Arc.ONE, 0.3)
    with pytest.raises(DomainError):
        ArcCoordinate(7, Arc.TWO, 2.0)
    with pytest.raises(DomainError):
        ArcCoordinate(11, Arc.ONE, 1.6)


def test_weight_validation():
    with pytest.raises(DomainError):
        eisenstein_Ek(Z0, 5)
    with pytest.raises(DomainError):
        eisenstein_Ek(Z0, 2)
    with pytest.raises(DomainError):
        F_glued(5, 7, 1.8)


def test_boundary_expansion_matches_star_route():
    # the two F evaluations are independent reorganizations of the same series
    for p in (5, 7):
        for arc in (Arc.ONE, Arc.TWO):
            lo, hi = arc_range(p, arc)
            for frac in (0.0, 0.25, 0.55, 0.85, 1.0):
                th = lo + frac * (hi - lo)
                direct = F_arc_series(p, arc, 12, th, tol=1e-10)
                z = arc_to_halfplane(ArcCoordinate(p, arc, th))
                star = eisenstein_star(z, 12, p, tol=1e-11)
                rotated = cmath.exp(0.5j * 12 * th) * star.value
                assert abs(rotated.imag) < 5e-10
                assert abs(direct.value - rotated.real) < 5e-10


def test_arc_values_are_real_sampled():
    rng = random.Random(99)
    for _ in range(60):
        p = rng.choice((5, 7))
        arc = rng.choice((Arc.ONE, Arc.TWO))
        lo, hi = arc_range(p, arc)
        th = rng.uniform(lo, hi)
        k = rng.choice((4, 6, 8, 12, 16, 30))
        got = F_arc(ArcCoordinate(p, arc, th), k, tol=1e-9)
        assert got.imag_defect <= 10 * max(1e-9, got.tail_bound)


def test_junction_phase_and_forced_zeros():
    for p, order in ((5, 4), (7, 6)):
        for k in range(4, 40, 2):
            phase = junction_phase(p, k)
            # the branch mismatch is exactly the half-angle of the glue shift
            expected = cmath.exp(0.5j * k * arc2_shift(p))
            assert abs(phase - expected) < 1e-13
            assert forced_junction_zero(p, k) == (k % order != 0)
            if k % order == 0:
                # the glue sign must equal the (real) junction phase
                assert abs(glue_sign(p, k) - phase.real) < 1e-12
    # where the phase is not real both branch values vanish at the junction
    for p, k in ((5, 10), (5, 14), (7, 8), (7, 10), (7, 16)):
        j = 0.5 * math.pi + alpha_p(p)
        assert abs(F_glued(p, k, j, tol=1e-9).value) < 1e-8


def test_glued_function_is_continuous_across_junction():
    for p in (5, 7):
        j = 0.5 * math.pi + alpha_p(p)
        for k in (8, 12, 16, 18):
            eps = 1e-7
            left = F_glued(p, k, j - eps, tol=1e-9).value
            right = F_glued(p, k, j + eps, tol=1e-9).value
            assert abs(left - right) < 1e-4 * max(1.0, abs(left))


def test_glued_range_and_shift():
    assert glued_range(5) == (0.5 * math.pi, math.pi)
    assert abs(glued_range(7)[1] - 7 * math.pi / 6) < 1e-15
    assert abs(arc2_shift(5) - 0.5 * math.pi) < 1e-15
    assert abs(arc2_shift(7) - 2 * math.pi / 3) < 1e-15
    with pytest.raises(DomainError):
        F_glued(5, 8, 0.2)


def test_published_sign_facts_low_weight():
    a5 = alpha_p(5)
    # zero forced at theta = pi/2 when the leading phase vanishes there
    for k in (6, 10, 14):
        assert abs(F_arc(ArcCoordinate(5, Arc.ONE, 0.5 * math.pi), k).value) < 1e-12
    # weight 10, level 5: one sign change strictly inside arc 1
    assert F_glued(5, 10, 3 * math.pi / 5).value < 0
    assert F_glued(5, 10, 4 * math.pi / 5).value > 0


def test_lattice_lambda_is_a_lower_bound():
    rng = random.Random(3)
    for _ in range(200):
        z = complex(rng.uniform(-0.8, 0.8), rng.uniform(0.2, 1.5))
        lam = lattice_lambda(z)
        c, d = rng.randint(-9, 9), rng.randint(-9, 9)
        if (c, d) == (0, 0):
            continue
        assert abs(c * z + d) ** 2 >= lam * (c * c + d * d) - 1e-12


def test_truncation_budgets_are_honest():
    # tighter-tolerance evaluations must land inside the looser tail bound
    for k in (4, 8):
        loose = eisenstein_Ek(Z0, k, tol=1e-6)
        tight = eisenstein_Ek(Z0, k, tol=1e-13)
        assert abs(loose.value - tight.value) <= loose.tail_bound
    th = 0.5 * math.pi + 0.2
    loose = F_arc_series(5, Arc.ONE, 14, th, tol=1e-4)
    tight = F_arc_series(5, Arc.ONE, 14, th, tol=1e-12)
    assert abs(loose.value - tight.value) <= loose.tail_bound


def test_huge_weight_boundary_values():
    # near the corner the expansion reduces to a handful of O(1) terms
    k = 2**14
    j = 0.5 * math.pi + alpha_p(5)
    v = F_arc(ArcCoordinate(5, Arc.ONE, j - math.pi / k), 2**14, tol=1e-8)
    assert v.tail_bound < 1e-8
    assert abs(v.value) < 10.0


def test_max_shell_env_override(monkeypatch):
    monkeypatch.setenv(MAX_SHELL_ENV, "5000")
    assert max_shell_default() == 5000
    monkeypatch.setenv(MAX_SHELL_ENV, "junk")
    with pytest.raises(DomainError):
        max_shell_default()
    monkeypatch.delenv(MAX_SHELL_ENV)
    assert max_shell_default() == 10**6
