"""State-function tests: closed forms against quadrature oracles."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad

from nozflow.errors import (
    BranchError,
    DomainError,
    SonicDegeneracyError,
    VacuumBudgetError,
)
from nozflow.gasdyn import (
    A_inverse_plus,
    GasModel,
    H_inverse,
    density,
    hodograph_A,
    hodograph_B,
    source_p,
    turning_H,
    wavespeed_b,
)

GAMMAS = [1.2, 1.4, 5.0 / 3.0, 2.0, 3.0]


@pytest.fixture(scope="module", params=GAMMAS)
def model(request):
    return GasModel(request.param)


@pytest.fixture(scope="module")
def air():
    return GasModel(1.4)


class TestGasModel:
    def test_derived_speeds(self, model):
        g = model.gamma
        assert model.c_star == pytest.approx(math.sqrt(2.0 / (g + 1.0)), abs=0)
        assert model.c_max == pytest.approx(math.sqrt(2.0 / (g - 1.0)), abs=0)
        assert model.c_star < model.c_max

    def test_gamma_must_exceed_one(self):
        with pytest.raises(DomainError):
            GasModel(1.0)
        with pytest.raises(DomainError):
            GasModel(0.9)

    def test_budget_finite_positive(self, model):
        assert 0.0 < model.h_max < math.inf

    def test_budget_decreases_with_gamma(self):
        budgets = [GasModel(g).h_max for g in GAMMAS]
        assert all(b1 > b2 for b1, b2 in zip(budgets, budgets[1:]))

    def test_budget_monatomic_value(self):
        # exact turning budget for gamma = 5/3 is a quarter turn
        assert GasModel(5.0 / 3.0).h_max == pytest.approx(math.pi / 2, abs=1e-8)


class TestDensity:
    def test_stagnation(self, model):
        assert density(model, 0.0) == 1.0

    def test_vacuum_endpoint(self, model):
        assert density(model, model.c_max) == pytest.approx(0.0, abs=1e-15)

    def test_closed_form_air(self, air):
        assert density(air, 1.0) == pytest.approx(0.8**2.5, rel=1e-14)

    def test_out_of_range(self, air):
        with pytest.raises(DomainError):
            density(air, -0.1)
        with pytest.raises(DomainError):
            density(air, air.c_max * 1.01)

    @given(st.floats(0.01, 0.99))
    @settings(max_examples=30, deadline=None)
    def test_monotone_decreasing(self, frac):
        m = GasModel(1.4)
        q1 = frac * m.c_max
        q2 = min(q1 * 1.01, m.c_max)
        assert density(m, q2) < density(m, q1)


class TestHodograph:
    def test_empty_integral_at_sonic(self, model):
        assert hodograph_A(model, model.c_star) == 0.0
        assert hodograph_B(model, model.c_star) == 0.0

    def test_A_negative_supersonic(self, air):
        for q in np.linspace(air.c_star * 1.001, air.c_max * 0.999, 17):
            assert hodograph_A(air, float(q)) < 0.0

    def test_A_strictly_decreasing_B_increasing(self, air):
        qs = np.linspace(air.c_star, air.c_max * 0.995, 40)
        A = [hodograph_A(air, float(q)) for q in qs]
        B = [hodograph_B(air, float(q)) for q in qs]
        assert all(a1 > a2 for a1, a2 in zip(A, A[1:]))
        assert all(b1 < b2 for b1, b2 in zip(B, B[1:]))

    def test_subsonic_branch_rejected(self, air):
        with pytest.raises(BranchError):
            hodograph_A(air, 0.5)

    def test_A_against_trapezoid_oracle(self, air):
        # brute-force composite trapezoid of the closed-form integrand
        q = 1.2
        s = np.linspace(air.c_star, q, 2_000_001)
        vals = air.A_prime(s)
        oracle = np.trapezoid(vals, s)
        assert hodograph_A(air, q) == pytest.approx(oracle, abs=1e-10)

    def test_b_equals_minus_Bprime_over_Aprime(self, air):
        # finite-difference oracle on the quadrature values of A and B
        for q in (1.0, 1.3, 1.8):
            eps = 1e-6
            dA = (hodograph_A(air, q + eps) - hodograph_A(air, q - eps)) / (2 * eps)
            dB = (hodograph_B(air, q + eps) - hodograph_B(air, q - eps)) / (2 * eps)
            b = wavespeed_b(air, hodograph_A(air, q))
            assert b == pytest.approx(-dB / dA, rel=1e-6)


class TestAInverse:
    def test_sonic_value(self, model):
        assert A_inverse_plus(model, 0.0) == model.c_star

    def test_round_trip(self, air):
        for q in np.linspace(air.c_star * 1.0001, air.c_max * 0.9999, 25):
            Q = hodograph_A(air, float(q))
            assert A_inverse_plus(air, Q) == pytest.approx(float(q), abs=1e-10)

    def test_deep_asymptote(self):
        # closed-form vacuum limit: tau ~ (-Q)^-(gamma-1), so for gamma=3
        # and Q=-1e6 the speed deficit is tau/((gamma-1)(c_max+q)) ~ 5e-13
        m = GasModel(3.0)
        q = A_inverse_plus(m, -1e6)
        assert m.c_max - q == pytest.approx(5e-13, rel=1e-2)
        assert m.c_max - q < 1e-6

    def test_positive_Q_rejected(self, air):
        with pytest.raises(DomainError):
            A_inverse_plus(air, 0.5)


class TestWavespeedAndSource:
    def test_positive(self, air):
        for Q in (-0.1, -1.0, -10.0):
            assert wavespeed_b(air, Q) > 0.0
            assert source_p(air, Q) > 0.0

    def test_sonic_degeneracy(self, air):
        with pytest.raises(SonicDegeneracyError):
            wavespeed_b(air, 0.0)
        with pytest.raises(SonicDegeneracyError):
            source_p(air, 0.0)

    def test_b_vanishes_toward_vacuum(self, air):
        b1 = wavespeed_b(air, -10.0)
        b2 = wavespeed_b(air, -1e3)
        b3 = wavespeed_b(air, -1e5)
        assert b1 > b2 > b3
        assert b3 < 1e-10

    def test_sonic_side_limit(self, model):
        # s b^-1(s) p(s) -> -1/2 as s -> 0^-; the approach is O(sqrt(-s)),
        # about 2% at s = -1e-4, within 1% only from |s| ~ 2.5e-5 down
        v4 = -1e-4 / wavespeed_b(model, -1e-4) * source_p(model, -1e-4)
        assert v4 == pytest.approx(-0.5, rel=2.5e-2)
        v6 = -1e-6 / wavespeed_b(model, -1e-6) * source_p(model, -1e-6)
        assert v6 == pytest.approx(-0.5, rel=2.5e-3)
        assert abs(v6 + 0.5) < abs(v4 + 0.5)

    def test_vacuum_side_limit(self, model):
        v = -1e4 / wavespeed_b(model, -1e4) * source_p(model, -1e4)
        target = -(model.gamma + 1.0)
        assert v == pytest.approx(target, rel=1.3e-2)


class TestTurning:
    def test_zero_at_sonic(self, model):
        assert turning_H(model, 0.0) == 0.0

    def test_increasing_in_minus_Q(self, air):
        Qs = -np.geomspace(1e-3, 1e3, 25)
        hs = [turning_H(air, float(Q)) for Q in Qs]
        assert all(h1 < h2 for h1, h2 in zip(hs, hs[1:]))
        assert all(0.0 < h < air.h_max for h in hs)

    def test_budget_is_limit(self, air):
        # tail decays like (-Q)^(-(gamma-1)/2): check the rate exactly
        gaps = [air.h_max - turning_H(air, Q) for Q in (-1e6, -1e9, -1e12)]
        assert gaps[0] > gaps[1] > gaps[2] > 0.0
        rate = 10.0 ** (3.0 * (air.gamma - 1.0) / 2.0)
        assert gaps[0] / gaps[1] == pytest.approx(rate, rel=1e-3)
        assert gaps[1] / gaps[2] == pytest.approx(rate, rel=1e-3)
        assert turning_H(air, -math.inf) == air.h_max

    def test_closed_form_equals_quadrature(self, model):
        # oracle: integrate b^(1/2)(A(s)) (-A'(s)) ds directly
        q_hi = model.c_star + 0.7 * (model.c_max - model.c_star)
        oracle, _ = quad(
            lambda s: model.wavespeed_of_speed(s) * (-model.A_prime(s)),
            model.c_star, q_hi, epsabs=1e-13, epsrel=1e-12, limit=300,
        )
        Q = hodograph_A(model, q_hi)
        assert turning_H(model, Q) == pytest.approx(oracle, abs=1e-11)

    def test_round_trip(self, air):
        for h in np.linspace(0.01, air.h_max * 0.98, 23):
            Q = H_inverse(air, float(h))
            assert turning_H(air, Q) == pytest.approx(float(h), abs=1e-10)

    def test_budget_exhausted_raises(self, air):
        with pytest.raises(VacuumBudgetError):
            H_inverse(air, air.h_max)
        with pytest.raises(VacuumBudgetError):
            H_inverse(air, air.h_max * 1.1)


class TestSpeedOfTurning:
    def test_endpoints_exact(self, model):
        assert model.speed_of_turning(0.0) == pytest.approx(model.c_star, abs=1e-15)
        assert model.speed_of_turning(model.h_max) == model.c_max

    def test_inverse_accuracy(self, model):
        hs = np.linspace(0.0, model.h_max, 5001)
        qs = np.clip(model.speed_of_turning(hs), model.c_star, model.c_max)
        back = np.asarray(model.turning_of_speed(qs))
        assert np.max(np.abs(back - hs)) < 1e-10

    def test_scalar_matches_vector(self, air):
        hs = np.linspace(0.0, air.h_max, 101)
        vec = air.speed_of_turning(hs)
        scal = np.array([air.speed_of_turning_scalar(float(h)) for h in hs])
        assert np.max(np.abs(vec - scal)) == 0.0

    @given(st.floats(0.0, 1.0))
    @settings(max_examples=50, deadline=None)
    def test_monotone(self, frac):
        m = GasModel(1.4)
        h1 = frac * m.h_max * 0.999
        h2 = min(h1 + 1e-6, m.h_max)
        assert m.speed_of_turning(h2) >= m.speed_of_turning(h1)

    def test_wavespeed_vanishes_at_budget(self, model):
        lam = model.wavespeed_of_turning(np.array([model.h_max]))
        assert lam[0] == 0.0


class TestMonotoneGrids:
    """Grid-based monotonicity sweeps of every state function."""

    def test_thousand_point_grids(self, air):
        qs = np.linspace(air.c_star * 1.0001, air.c_max * 0.9995, 1000)
        rho = np.asarray(air.density(qs))
        assert np.all(np.diff(rho) < 0)
        h = np.asarray(air.turning_of_speed(qs))
        assert np.all(np.diff(h) > 0)
        lam = np.asarray(air.wavespeed_of_speed(qs))
        assert np.all(np.diff(lam) < 0)
        bp = np.asarray(air.p_of_speed(qs))
        assert np.all(bp > 0)
