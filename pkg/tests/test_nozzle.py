"""Geometry validation and the potential-strip transform."""

import math

import numpy as np
import pytest

from nozflow.errors import DataError, FormatError
from nozflow.gasdyn import GasModel
from nozflow import nozzle as nz


@pytest.fixture(scope="module")
def air():
    return GasModel(1.4)


def parallel_channel(air, qbar=1.5, height=1.0):
    wall = nz.line_wall(0.0, height, 0.0)
    inlet = nz.vertical_inlet(0.0, height)
    return wall, inlet, nz.constant_profile(qbar)


def wedge(air, angle=0.35, l0=2.0, q_axis=1.3, fraction=0.9, blend=0.15):
    k = math.tan(angle)
    wall = nz.line_wall(l0, l0 * k, k)
    inlet = nz.arc_inlet(l0, l0 * k, k)
    prof = nz.turning_profile(air, inlet, q_axis, fraction, corner_blend=blend)
    return wall, inlet, prof


class TestValidate:
    def test_uniform_passes_with_zero_margin(self, air):
        wall, inlet, prof = parallel_channel(air)
        rep = nz.validate(wall, inlet, prof, air)
        assert rep.ok
        # every term vanishes: the slope bound holds with margin exactly 0
        assert np.max(np.abs(rep.margin_vals)) == 0.0
        assert not rep.strict_margin

    def test_constant_profile_on_concave_inlet_has_positive_margin(self, air):
        k = math.tan(0.3)
        wall = nz.line_wall(1.0, k, k)
        inlet = nz.arc_inlet(1.0, k, k)
        rep = nz.validate(wall, inlet, nz.constant_profile(1.4), air)
        assert rep.ok and rep.strict_margin
        assert np.min(rep.margin_vals) > 0.0

    def test_slope_violation_flags_phy8_with_interval(self, air):
        # doubling a saturating profile's slope must fail exactly phy-8
        wall, inlet, prof = wedge(air, fraction=1.0, blend=0.1)
        bad = nz.SpeedProfile(
            q=prof.q, dq=lambda y: 2.0 * np.asarray(prof.dq(y)),
            family="scaled", params={},
        )
        rep = nz.validate(wall, inlet, bad, air)
        failed = [c.cond_id for c in rep.failures()]
        assert failed == ["phy-8"]
        assert "violated on y in" in rep.condition("phy-8").detail

    def test_wedge_profile_all_conditions(self, air):
        wall, inlet, prof = wedge(air)
        rep = nz.validate(wall, inlet, prof, air)
        assert rep.ok and rep.strict_margin

    def test_bump_profile_against_straight_inlet_fails_phy8(self, air):
        wall, inlet, _ = parallel_channel(air)
        prof = nz.bump_profile(1.5, 0.05, inlet.y_top)
        rep = nz.validate(wall, inlet, prof, air)
        assert not rep.condition("phy-8").passed
        assert rep.condition("phy-9").passed

    def test_speed_window_enforced(self, air):
        wall, inlet, _ = parallel_channel(air)
        rep = nz.validate(wall, inlet, nz.constant_profile(0.8), air)
        assert not rep.condition("phy-8-q").passed

    def test_spline_rejects_nonmonotone_abscissas(self):
        with pytest.raises(FormatError):
            nz.spline_wall([0.0, 1.0, 0.5, 2.0], [1.0, 1.1, 1.2, 1.3])

    def test_nan_evaluator_raises_data_error(self, air):
        wall, inlet, prof = parallel_channel(air)
        bad = nz.SpeedProfile(
            q=lambda y: np.full_like(np.asarray(y, float), np.nan),
            dq=prof.dq, family="nan", params={},
        )
        with pytest.raises(DataError):
            nz.validate(wall, inlet, bad, air)


class TestWallFamilies:
    def test_line(self):
        w = nz.line_wall(1.0, 2.0, 0.3)
        assert float(w.f(3.0)) == pytest.approx(2.0 + 0.3 * 2.0)
        assert float(w.fsecond(5.0)) == 0.0
        assert w.tail == ("slope_limit", 0.3)

    def test_powerlaw_hinge_continuity(self):
        w = nz.powerlaw_wall(0.0, 1.0, 0.1, 0.02, 3.0)
        assert float(w.fsecond(0.0)) == 0.0
        assert float(w.fprime(0.0)) == pytest.approx(0.1)
        with pytest.raises(FormatError):
            nz.powerlaw_wall(0.0, 1.0, 0.1, 0.02, 1.5)

    def test_arctan_antiderivative(self):
        from scipy.integrate import quad

        w = nz.arctan_wall(1.0, 1.0, 0.1, 0.8, 1.5)
        v, _ = quad(lambda x: float(w.fprime(x)), 1.0, 4.0, epsabs=1e-12)
        assert float(w.f(4.0)) - float(w.f(1.0)) == pytest.approx(v, abs=1e-9)
        assert float(w.fsecond(1.0)) == 0.0  # p=2 gives zero hinge curvature
        xs = np.linspace(1.0, 30.0, 500)
        assert np.all(np.asarray(w.fsecond(xs)) >= 0.0)

    def test_bump_wall_is_nonconvex(self):
        w = nz.bump_wall(0.0, 1.0, 0.3, 0.05, 4.0, 1.0)
        xs = np.linspace(0.0, 10.0, 800)
        fpp = np.asarray(w.fsecond(xs))
        assert fpp.min() < 0.0
        # slope returns to the base value downstream of the dent
        assert float(w.fprime(9.0)) == pytest.approx(0.3, abs=1e-12)

    def test_spline_wall_matches_samples(self):
        xs = np.linspace(0.0, 5.0, 12)
        fs = 1.0 + 0.1 * xs + 0.02 * xs**2
        w = nz.spline_wall(xs, fs)
        assert float(w.f(2.5)) == pytest.approx(
            1.0 + 0.1 * 2.5 + 0.02 * 2.5**2, abs=1e-3
        )


class TestPotentialInlet:
    def test_uniform_mass_flux_closed_form(self, air):
        # constant integrand: m = qbar rho(qbar^2) height
        wall, inlet, prof = parallel_channel(air, qbar=1.5, height=1.0)
        data = nz.build_potential_inlet(wall, inlet, prof, air, 32)
        assert data.mass_flux == pytest.approx(
            1.5 * air.density(1.5) * 1.0, rel=1e-12
        )

    def test_uniform_strip_data(self, air):
        wall, inlet, prof = parallel_channel(air)
        data = nz.build_potential_inlet(wall, inlet, prof, air, 32)
        assert np.ptp(data.Q0) == 0.0
        assert np.all(data.G0 == 0.0)
        assert np.all(data.W0 == 0.0)
        assert np.all(data.Z0 == 0.0)
        assert np.all(data.theta0 == 0.0)

    def test_saturating_arc_inlet_kills_W0(self, air):
        # fraction-1 turning profile: W0 = 0 and Z0 = -2 G0 >= 0
        wall, inlet, _ = wedge(air)
        prof = nz.turning_profile(air, inlet, 1.3, 1.0)
        data = nz.build_potential_inlet(wall, inlet, prof, air, 64)
        assert np.max(np.abs(data.W0)) < 1e-8
        np.testing.assert_allclose(data.Z0, -2.0 * data.G0, atol=1e-8)
        assert np.all(data.Z0 >= 0.0)

    def test_admissible_sign_structure(self, air):
        wall, inlet, prof = wedge(air)
        data = nz.build_potential_inlet(wall, inlet, prof, air, 64)
        assert np.all(data.W0 <= 1e-12)
        assert np.all(data.Z0 >= -1e-12)
        assert np.all(data.Q0 < 0.0)

    def test_theta_caps(self, air):
        wall, inlet, prof = wedge(air)
        data = nz.build_potential_inlet(wall, inlet, prof, air, 64)
        assert data.theta0[0] == 0.0
        assert data.theta0[-1] == pytest.approx(math.atan(math.tan(0.35)), abs=1e-12)

    def test_turning_integral_identity_second_order(self, air):
        # theta0(m) - arctan f'(l0) from the trapezoid of -G0 shrinks at O(N^-2)
        wall, inlet, prof = wedge(air)
        errs = []
        for n in (32, 64, 128):
            data = nz.build_potential_inlet(wall, inlet, prof, air, n)
            integral = -np.trapezoid(data.G0, data.psi)
            errs.append(abs(integral - data.theta0[-1]))
        order = math.log2(errs[0] / errs[2]) / 2.0
        assert order > 1.8

    def test_stream_function_round_trip(self, air):
        wall, inlet, prof = wedge(air)
        data = nz.build_potential_inlet(wall, inlet, prof, air, 48)
        # Psi_in(y_of_psi) must reproduce the uniform grid
        from scipy.integrate import quad

        def integrand(y):
            qv = prof.q(y)
            return qv * air.density(qv) * math.sqrt(1 + float(inlet.xprime(y)) ** 2)

        for i in (1, 7, 24, 47):
            val, _ = quad(integrand, 0.0, data.y_of_psi[i], epsabs=1e-12, limit=200)
            assert val == pytest.approx(data.psi[i], abs=1e-9)

    def test_grid_floor(self, air):
        wall, inlet, prof = parallel_channel(air)
        with pytest.raises(DataError):
            nz.build_potential_inlet(wall, inlet, prof, air, 8)
