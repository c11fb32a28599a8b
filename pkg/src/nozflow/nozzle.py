"""Nozzle geometry, inlet data, validation, and the potential-strip transform.

The nozzle is the region between the symmetry axis y=0, an upper wall
y = f(x) on [l0, l1), and an inlet curve x = Upsilon(y) on [0, f(l0)]
that meets the axis and the wall orthogonally to the prescribed inflow.
Admissible geometry is convex (f'' >= 0) with concave inlet
(Upsilon'' <= 0); the inflow speed profile q0 must stay strictly
between the sonic and limit speeds and obey the slope bound

    |q0'(y)| <= -Upsilon''/(1 + Upsilon'^2) * q0 / sqrt(M0^2 - 1),

whose right-hand side is the admissibility margin reported by
``validate`` (condition id "phy-8").
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np
from scipy.integrate import quad
from scipy.interpolate import CubicSpline
from scipy.optimize import brentq

from .errors import DataError, FormatError, NumericError
from .gasdyn import GasModel

_EQ_TOL = 1e-8  # absolute tolerance for equality constraints on data


# ---------------------------------------------------------------------------
# wall curves
# ---------------------------------------------------------------------------


class _ChebAntiderivative:
    """Antiderivative of a smooth scalar function on an extendable domain,
    backed by a piecewise Chebyshev fit (construction cost paid once)."""

    def __init__(self, fun: Callable, x0: float, seg: float = 8.0, deg: int = 96):
        self.fun = fun
        self.x0 = x0
        self.seg = seg
        self.deg = deg
        self._coeffs = []  # per-segment integrated Chebyshev coefficients
        self._offsets = [0.0]

    def _extend_to(self, x_hi: float):
        from numpy.polynomial import chebyshev as cheb

        while self.x0 + len(self._coeffs) * self.seg < x_hi:
            k = len(self._coeffs)
            a = self.x0 + k * self.seg
            b = a + self.seg
            nodes = np.cos(np.pi * np.arange(self.deg + 1) / self.deg)
            xs = 0.5 * (a + b) + 0.5 * (b - a) * nodes
            c = cheb.chebfit(nodes, np.asarray(self.fun(xs), dtype=float), self.deg)
            ci = cheb.chebint(c, scl=0.5 * (b - a))
            ci0 = cheb.chebval(-1.0, ci)
            self._coeffs.append((a, b, ci, ci0))
            self._offsets.append(
                self._offsets[-1] + cheb.chebval(1.0, ci) - ci0
            )

    def __call__(self, x):
        from numpy.polynomial import chebyshev as cheb

        x = np.asarray(x, dtype=float)
        self._extend_to(float(np.max(x)) + 1e-12)
        k = np.minimum(
            ((x - self.x0) / self.seg).astype(np.int64), len(self._coeffs) - 1
        )
        k = np.maximum(k, 0)
        out = np.empty_like(x)
        for ki in np.unique(k):
            a, b, ci, ci0 = self._coeffs[ki]
            sel = k == ki
            t = 2.0 * (x[sel] - a) / (b - a) - 1.0
            out[sel] = self._offsets[ki] + cheb.chebval(np.clip(t, -1, 1), ci) - ci0
        return out if out.ndim else float(out)


@dataclass
class WallCurve:
    """Upper wall y = f(x) with evaluators for f, f', f''.

    ``tail`` describes the analytic behavior toward l1 so asymptotic
    criteria can be evaluated beyond any sampled range:
      ("slope_limit", s_inf)          f' -> s_inf < inf
      ("slope_unbounded", k)          f ~ x^k with k > 1
      ("curvature_power", c, beta)    f'' ~ c x^(-beta) with f' bounded
    """

    l0: float
    l1: float
    f: Callable
    fprime: Callable
    fsecond: Callable
    family: str
    tail: tuple
    params: dict = field(default_factory=dict)

    def wall_angle(self, x):
        return np.arctan(self.fprime(x))


def line_wall(l0: float, f0: float, slope: float) -> WallCurve:
    return WallCurve(
        l0=l0,
        l1=math.inf,
        f=lambda x: f0 + slope * (np.asarray(x, dtype=float) - l0),
        fprime=lambda x: np.full_like(np.asarray(x, dtype=float), slope),
        fsecond=lambda x: np.zeros_like(np.asarray(x, dtype=float)),
        family="line",
        tail=("slope_limit", slope),
        params={"f0": f0, "slope": slope},
    )


def powerlaw_wall(l0: float, f0: float, slope: float, coeff: float, k: float) -> WallCurve:
    """f(x) = f0 + slope (x-l0) + coeff (x-l0)^k, k >= 2 so f'' is continuous
    at the hinge."""
    if k < 2.0:
        raise FormatError("power-law wall needs exponent k >= 2 for C^2 data")

    def f(x):
        u = np.asarray(x, dtype=float) - l0
        return f0 + slope * u + coeff * u**k

    def fp(x):
        u = np.asarray(x, dtype=float) - l0
        return slope + coeff * k * u ** (k - 1.0)

    def fpp(x):
        u = np.asarray(x, dtype=float) - l0
        return coeff * k * (k - 1.0) * u ** (k - 2.0)

    tail = ("slope_unbounded", k) if coeff > 0 else ("slope_limit", slope)
    return WallCurve(
        l0=l0, l1=math.inf, f=f, fprime=fp, fsecond=fpp,
        family="powerlaw", tail=tail,
        params={"f0": f0, "slope": slope, "coeff": coeff, "k": k},
    )


def arctan_wall(
    l0: float, f0: float, slope: float, turn: float, width: float, p: int = 2
) -> WallCurve:
    """Convex wall whose slope rises from ``slope`` to ``slope + turn``:

        f'(x) = slope + turn * (2/pi) * arctan(((x-l0)/width)^p).

    p >= 2 gives f''(l0) = 0, which lets a constant inflow profile satisfy
    the inlet compatibility conditions exactly.
    """
    if p < 1:
        raise FormatError("arctan wall exponent p must be >= 1")

    def fp(x):
        u = (np.asarray(x, dtype=float) - l0) / width
        return slope + turn * (2.0 / math.pi) * np.arctan(u**p)

    def fpp(x):
        u = (np.asarray(x, dtype=float) - l0) / width
        return (
            turn * (2.0 / math.pi) * p * u ** (p - 1.0) / (1.0 + u ** (2 * p)) / width
        )

    anti = _ChebAntiderivative(fp, l0)
    return WallCurve(
        l0=l0, l1=math.inf,
        f=lambda x: f0 + anti(x),
        fprime=fp, fsecond=fpp,
        family="arctan", tail=("slope_limit", slope + turn),
        params={"f0": f0, "slope": slope, "turn": turn, "width": width, "p": p},
    )


def bump_wall(
    l0: float, f0: float, slope: float, depth: float, center: float, width: float
) -> WallCurve:
    """Straight wall with a localized nonconvex dent in the slope:

        f'(x) = slope - depth * g((x - center)/width),

    g a compactly supported C^2 bump (cos^4).  f'' < 0 on the upstream
    half of the dent, so the wall is a nonconvex perturbation of a line.
    """

    def g(t):
        t = np.asarray(t, dtype=float)
        inside = np.abs(t) < 1.0
        return np.where(inside, np.cos(0.5 * math.pi * np.clip(t, -1, 1)) ** 4, 0.0)

    def gp(t):
        t = np.asarray(t, dtype=float)
        inside = np.abs(t) < 1.0
        tc = np.clip(t, -1, 1)
        return np.where(
            inside,
            -2.0 * math.pi * np.cos(0.5 * math.pi * tc) ** 3 * np.sin(0.5 * math.pi * tc) * 0.5,
            0.0,
        )

    def fp(x):
        return slope - depth * g((np.asarray(x, dtype=float) - center) / width)

    def fpp(x):
        return -depth / width * gp((np.asarray(x, dtype=float) - center) / width)

    anti = _ChebAntiderivative(fp, l0)
    return WallCurve(
        l0=l0, l1=math.inf,
        f=lambda x: f0 + anti(x),
        fprime=fp, fsecond=fpp,
        family="bump", tail=("slope_limit", slope),
        params={
            "f0": f0, "slope": slope, "depth": depth,
            "center": center, "width": width,
        },
    )


def curvature_tail_wall(
    l0: float, f0: float, coeff: float, beta: float, width: float = 1.0
) -> WallCurve:
    """Wall with algebraically decaying curvature

        f''(x) = coeff * u^2/(1+u^2) * (1+u)^(-beta),   u = (x-l0)/width,

    so f''(l0) = 0 and f'' ~ coeff u^(-beta) downstream.  For beta > 1 the
    slope stays bounded while the total curvature integral diverges slowly
    enough to probe the asymptotic vacuum criteria.
    """

    def fpp(x):
        u = (np.asarray(x, dtype=float) - l0) / width
        return coeff * u * u / (1.0 + u * u) * (1.0 + u) ** (-beta) / width

    anti_p = _ChebAntiderivative(fpp, l0)

    def fp(x):
        return anti_p(x)

    anti = _ChebAntiderivative(fp, l0)
    return WallCurve(
        l0=l0, l1=math.inf,
        f=lambda x: f0 + anti(x),
        fprime=fp, fsecond=fpp,
        family="curvature_tail", tail=("curvature_power", coeff, beta),
        params={"f0": f0, "coeff": coeff, "beta": beta, "width": width},
    )


def spline_wall(xs, fs, tail: Optional[tuple] = None) -> WallCurve:
    """Natural cubic spline wall through samples (x_i, f_i)."""
    xs = np.asarray(xs, dtype=float)
    fs = np.asarray(fs, dtype=float)
    if xs.ndim != 1 or xs.shape != fs.shape or xs.size < 4:
        raise FormatError("spline wall needs >= 4 samples of equal length")
    if np.any(np.diff(xs) <= 0):
        raise FormatError("spline wall abscissas must be strictly increasing")
    sp = CubicSpline(xs, fs, bc_type="natural")
    d1 = sp.derivative(1)
    d2 = sp.derivative(2)
    if tail is None:
        tail = ("slope_limit", float(d1(xs[-1])))
    return WallCurve(
        l0=float(xs[0]), l1=float(xs[-1]),
        f=sp, fprime=d1, fsecond=d2,
        family="spline", tail=tail,
        params={"n_samples": int(xs.size)},
    )


# ---------------------------------------------------------------------------
# inlet curves
# ---------------------------------------------------------------------------


@dataclass
class InletCurve:
    """Inlet x = Upsilon(y) on [0, y_top] with evaluators to 2nd order."""

    y_top: float
    x: Callable
    xprime: Callable
    xsecond: Callable
    family: str
    params: dict = field(default_factory=dict)

    def normal_angle(self, y):
        """Flow angle of the inward normal, theta = arctan(-Upsilon')."""
        return np.arctan(-self.xprime(y))


def vertical_inlet(l0: float, y_top: float) -> InletCurve:
    z = lambda y: np.zeros_like(np.asarray(y, dtype=float))
    return InletCurve(
        y_top=y_top,
        x=lambda y: np.full_like(np.asarray(y, dtype=float), l0),
        xprime=z, xsecond=z,
        family="vertical", params={"l0": l0},
    )


def arc_inlet(l0: float, y_top: float, wall_slope: float) -> InletCurve:
    """Circular arc centered on the axis, orthogonal to the axis and
    meeting the wall with the matching slope -wall_slope."""
    if wall_slope <= 0.0:
        raise FormatError("arc inlet needs a positive wall slope; use vertical")
    theta_w = math.atan(wall_slope)
    R = y_top / math.sin(theta_w)
    xc = l0 - R * math.cos(theta_w)

    def x(y):
        return xc + np.sqrt(R * R - np.square(np.asarray(y, dtype=float)))

    def xp(y):
        y = np.asarray(y, dtype=float)
        return -y / np.sqrt(R * R - np.square(y))

    def xpp(y):
        y = np.asarray(y, dtype=float)
        return -R * R * (R * R - np.square(y)) ** -1.5

    return InletCurve(
        y_top=y_top, x=x, xprime=xp, xsecond=xpp,
        family="arc", params={"R": R, "xc": xc, "l0": l0},
    )


def spline_inlet(ys, xs) -> InletCurve:
    ys = np.asarray(ys, dtype=float)
    xs = np.asarray(xs, dtype=float)
    if ys.ndim != 1 or ys.shape != xs.shape or ys.size < 4:
        raise FormatError("spline inlet needs >= 4 samples of equal length")
    if np.any(np.diff(ys) <= 0):
        raise FormatError("spline inlet ordinates must be strictly increasing")
    sp = CubicSpline(ys, xs, bc_type="natural")
    return InletCurve(
        y_top=float(ys[-1]),
        x=sp, xprime=sp.derivative(1), xsecond=sp.derivative(2),
        family="spline", params={"n_samples": int(ys.size)},
    )


# ---------------------------------------------------------------------------
# inlet speed profiles
# ---------------------------------------------------------------------------


@dataclass
class SpeedProfile:
    """Inflow speed q0(y) with its derivative."""

    q: Callable
    dq: Callable
    family: str
    params: dict = field(default_factory=dict)


def constant_profile(qbar: float) -> SpeedProfile:
    return SpeedProfile(
        q=lambda y: np.full_like(np.asarray(y, dtype=float), qbar),
        dq=lambda y: np.zeros_like(np.asarray(y, dtype=float)),
        family="constant", params={"qbar": qbar},
    )


def _smoothstep(t):
    t = np.clip(t, 0.0, 1.0)
    return t * t * (3.0 - 2.0 * t)


def turning_profile(
    model: GasModel,
    inlet: InletCurve,
    q_axis: float,
    fraction: float,
    corner_blend: float = 0.0,
) -> SpeedProfile:
    """Profile whose turning recoding spends ``fraction`` of the admissible
    slope budget pointwise:

        d H(A(q0))/dy = fraction * w(y) * d(-arctan Upsilon')/dy,

    which saturates the admissibility bound at fraction = 1 (the
    shock-necessity equality case) and is constant at fraction = 0.
    ``corner_blend`` > 0 tapers the window w to zero over that fraction of
    the height at both ends, restoring the corner compatibility
    conditions q0'(0) = q0'(y_top) = 0 without giving up a strictly
    positive admissibility margin anywhere.
    """
    if not 0.0 <= fraction <= 1.0:
        raise FormatError("turning profile fraction must lie in [0, 1]")
    h_axis = float(model.turning_of_speed(q_axis))
    Y = inlet.y_top

    def window(y):
        if corner_blend <= 0.0:
            return np.ones_like(np.asarray(y, dtype=float))
        b = corner_blend * Y
        y = np.asarray(y, dtype=float)
        return _smoothstep(y / b) * _smoothstep((Y - y) / b)

    if corner_blend <= 0.0:

        def h_of_y(y):
            return h_axis + fraction * np.arctan(-inlet.xprime(y))

    else:
        from scipy.interpolate import PchipInterpolator

        y_fine = np.linspace(0.0, Y, 8193)
        alpha_rate = -np.asarray(inlet.xsecond(y_fine)) / (
            1.0 + np.square(inlet.xprime(y_fine))
        )
        slope = fraction * window(y_fine) * alpha_rate
        h_fine = h_axis + np.concatenate(
            ([0.0], np.cumsum(0.5 * (slope[1:] + slope[:-1]) * np.diff(y_fine)))
        )
        _h_interp = PchipInterpolator(y_fine, h_fine)

        def h_of_y(y):
            return _h_interp(np.clip(np.asarray(y, dtype=float), 0.0, Y))

    def q(y):
        return model.speed_of_turning(h_of_y(y))

    def dq(y):
        qv = np.asarray(model.speed_of_turning(h_of_y(y)))
        mu = np.sqrt(np.maximum(model.mach_sq_minus_one(qv), 1e-300))
        dh = (
            fraction
            * window(y)
            * (-inlet.xsecond(y))
            / (1.0 + np.square(inlet.xprime(y)))
        )
        return qv / mu * dh

    return SpeedProfile(
        q=q, dq=dq, family="turning",
        params={
            "q_axis": q_axis, "fraction": fraction, "corner_blend": corner_blend,
        },
    )


def bump_profile(qbar: float, amp: float, y_top: float) -> SpeedProfile:
    """q0 = qbar + amp sin^2(pi y / y_top); zero slope at both ends, so it
    violates the admissibility bound against a straight inlet wherever
    amp != 0."""

    def q(y):
        return qbar + amp * np.sin(math.pi * np.asarray(y, dtype=float) / y_top) ** 2

    def dq(y):
        y = np.asarray(y, dtype=float)
        return amp * math.pi / y_top * np.sin(2.0 * math.pi * y / y_top)

    return SpeedProfile(q=q, dq=dq, family="bump", params={"qbar": qbar, "amp": amp})


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


@dataclass
class ConditionResult:
    cond_id: str
    passed: bool
    detail: str
    margin: Optional[float] = None
    where: Optional[float] = None


@dataclass
class ValidationReport:
    conditions: list
    margin_y: np.ndarray
    margin_vals: np.ndarray
    strict_margin: bool

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.conditions)

    def failures(self):
        return [c for c in self.conditions if not c.passed]

    def condition(self, cond_id: str) -> ConditionResult:
        for c in self.conditions:
            if c.cond_id == cond_id:
                return c
        raise KeyError(cond_id)


def admissible_slope_bound(model: GasModel, inlet: InletCurve, q0, y):
    """Right-hand side of the inlet slope condition:
    -Upsilon''/(1+Upsilon'^2) * q0/sqrt(M0^2-1)."""
    y = np.asarray(y, dtype=float)
    geom = -inlet.xsecond(y) / (1.0 + np.square(inlet.xprime(y)))
    qv = np.asarray(q0.q(y), dtype=float)
    mu = np.sqrt(np.maximum(model.mach_sq_minus_one(qv), 0.0))
    with np.errstate(divide="ignore"):
        return geom * qv / np.where(mu > 0, mu, np.inf)


def validate(
    wall: WallCurve,
    inlet: InletCurve,
    q0: SpeedProfile,
    model: GasModel,
    n_samples: int = 2001,
    x_probe: Optional[float] = None,
) -> ValidationReport:
    """Check the admissibility conditions of the geometry and inflow.

    Condition ids follow the standard labels: "sss-0" (wall shape),
    "xc4" (inlet shape), "phy-8-q" (speed window), "phy-8" (slope
    bound), "phy-9" (corner compatibility).
    """
    conds = []
    y_top = inlet.y_top
    l0 = wall.l0
    ys = np.linspace(0.0, y_top, n_samples)

    for arrs, name in (
        ((wall.f, wall.fprime, wall.fsecond), "wall"),
        ((inlet.x, inlet.xprime, inlet.xsecond), "inlet"),
        ((q0.q, q0.dq), "q0"),
    ):
        probe = ys if name != "wall" else np.linspace(
            l0, x_probe if x_probe is not None else l0 + 10.0, n_samples
        )
        for f in arrs:
            v = np.asarray(f(probe), dtype=float)
            if not np.all(np.isfinite(v)):
                raise DataError(f"{name} evaluator returned non-finite values")

    # sss-0: wall shape
    xs = np.linspace(l0, x_probe if x_probe is not None else l0 + 10.0, n_samples)
    fl0 = float(wall.f(l0))
    fpl0 = float(wall.fprime(l0))
    fpp = np.asarray(wall.fsecond(xs), dtype=float)
    convex = bool(np.min(fpp) >= -_EQ_TOL)
    grows = float(xs[-1] + wall.f(xs[-1])) > float(l0 + fl0)
    ok = fl0 > 0.0 and fpl0 >= -_EQ_TOL and grows
    detail = (
        f"f(l0)={fl0:.6g}, f'(l0)={fpl0:.6g}, min f''={np.min(fpp):.3g}, "
        f"x+f(x) grows: {grows}"
    )
    conds.append(
        ConditionResult(
            "sss-0", ok and convex, detail,
            margin=float(np.min(fpp)),
            where=float(xs[int(np.argmin(fpp))]),
        )
    )

    # xc4: inlet shape and corner slopes
    x_top = float(inlet.x(y_top))
    up0 = float(inlet.xprime(0.0))
    up1 = float(inlet.xprime(y_top))
    upp = np.asarray(inlet.xsecond(ys), dtype=float)
    ok = (
        abs(x_top - l0) <= _EQ_TOL
        and abs(up0) <= _EQ_TOL
        and abs(up1 + fpl0) <= _EQ_TOL
        and np.max(upp) <= _EQ_TOL
    )
    conds.append(
        ConditionResult(
            "xc4", bool(ok),
            f"Upsilon(y_top)-l0={x_top - l0:.3g}, Upsilon'(0)={up0:.3g}, "
            f"Upsilon'(y_top)+f'(l0)={up1 + fpl0:.3g}, max Upsilon''={np.max(upp):.3g}",
            margin=float(-np.max(upp)),
        )
    )

    # phy-8-q: speed window strictly inside (c_star, c_max)
    qv = np.asarray(q0.q(ys), dtype=float)
    qmin, qmax = float(np.min(qv)), float(np.max(qv))
    ok = qmin > model.c_star and qmax < model.c_max
    conds.append(
        ConditionResult(
            "phy-8-q", bool(ok),
            f"q0 in [{qmin:.6g}, {qmax:.6g}], window ({model.c_star:.6g}, "
            f"{model.c_max:.6g})",
            margin=float(min(qmin - model.c_star, model.c_max - qmax)),
        )
    )

    # phy-8: slope bound with pointwise margin
    rhs = admissible_slope_bound(model, inlet, q0, ys)
    margin = rhs - np.abs(np.asarray(q0.dq(ys), dtype=float))
    i_min = int(np.argmin(margin))
    ok = margin[i_min] >= -_EQ_TOL
    strict = bool(margin[i_min] > _EQ_TOL)
    detail = f"min margin {margin[i_min]:.6g} at y={ys[i_min]:.6g}"
    if not ok:
        bad = ys[margin < -_EQ_TOL]
        detail += f"; violated on y in [{bad.min():.6g}, {bad.max():.6g}]"
    conds.append(
        ConditionResult(
            "phy-8", bool(ok), detail,
            margin=float(margin[i_min]), where=float(ys[i_min]),
        )
    )

    # phy-9: corner compatibility
    dq0_axis = float(q0.dq(0.0))
    dq0_wall = float(q0.dq(y_top))
    target = float(wall.fsecond(l0)) * float(q0.q(y_top)) / (1.0 + fpl0**2)
    ok = abs(dq0_axis) <= _EQ_TOL and abs(dq0_wall - target) <= _EQ_TOL
    conds.append(
        ConditionResult(
            "phy-9", bool(ok),
            f"q0'(0)={dq0_axis:.3g}, q0'(y_top)-target={dq0_wall - target:.3g}",
        )
    )

    return ValidationReport(
        conditions=conds, margin_y=ys, margin_vals=margin, strict_margin=strict
    )


# ---------------------------------------------------------------------------
# potential-strip inlet data
# ---------------------------------------------------------------------------


@dataclass
class PotentialInletData:
    """Initial data for the characteristic march on the uniform psi grid."""

    model: GasModel
    mass_flux: float
    psi: np.ndarray       # N+1 stream values, 0 .. m
    y_of_psi: np.ndarray  # inverse of the inlet stream function at the nodes
    Q0: np.ndarray
    G0: np.ndarray
    W0: np.ndarray
    Z0: np.ndarray
    theta0: np.ndarray
    h0: np.ndarray        # turning variable H(Q0)
    q0: np.ndarray

    @property
    def n_cells(self) -> int:
        return self.psi.size - 1

    @property
    def dpsi(self) -> float:
        return float(self.psi[1] - self.psi[0])


def mass_flux(inlet: InletCurve, q0: SpeedProfile, model: GasModel) -> float:
    """m = int_0^{y_top} q0 rho(q0^2) sqrt(1 + Upsilon'^2) dy."""

    def integrand(y):
        qv = q0.q(y)
        return qv * model.density(qv) * math.sqrt(1.0 + float(inlet.xprime(y)) ** 2)

    import warnings
    from scipy.integrate import IntegrationWarning

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IntegrationWarning)
        val, err = quad(
            integrand, 0.0, inlet.y_top, epsabs=1e-13, epsrel=1e-12, limit=200
        )
    if not math.isfinite(val) or val <= 0.0:
        raise NumericError("mass-flux quadrature failed")
    return val


def build_potential_inlet(
    wall: WallCurve,
    inlet: InletCurve,
    q0: SpeedProfile,
    model: GasModel,
    n_cells: int,
) -> PotentialInletData:
    """Transform inlet data to the potential strip on a uniform psi grid.

    Nodes are located by inverting the inlet stream function
    Psi_in(y) = int_0^y q0 rho sqrt(1+Upsilon'^2), which is strictly
    increasing because the integrand is positive.
    """
    if n_cells < 16:
        raise DataError(f"need at least 16 stream cells, got {n_cells}")
    m = mass_flux(inlet, q0, model)
    psi = np.linspace(0.0, m, n_cells + 1)

    def integrand(y):
        qv = q0.q(y)
        return qv * model.density(qv) * math.sqrt(1.0 + float(inlet.xprime(y)) ** 2)

    # cumulative stream function on a fine grid, then per-node refinement
    y_fine = np.linspace(0.0, inlet.y_top, 16 * n_cells + 1)
    dens = np.asarray(q0.q(y_fine), dtype=float)
    dens = dens * model.density(dens) * np.sqrt(1.0 + np.square(inlet.xprime(y_fine)))
    psi_fine = np.concatenate(
        ([0.0], np.cumsum(0.5 * (dens[1:] + dens[:-1]) * np.diff(y_fine)))
    )
    psi_fine *= m / psi_fine[-1]

    ys = np.interp(psi, psi_fine, y_fine)
    ys[0], ys[-1] = 0.0, inlet.y_top

    import warnings
    from scipy.integrate import IntegrationWarning

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IntegrationWarning)
        for i in range(1, n_cells):
            target = psi[i]

            def g(y, target=target):
                val, _ = quad(integrand, 0.0, y, epsabs=1e-12, epsrel=1e-11, limit=200)
                return val - target

            lo = max(ys[i] - 2.0 * (y_fine[1] - y_fine[0]) * 16, 0.0)
            hi = min(ys[i] + 2.0 * (y_fine[1] - y_fine[0]) * 16, inlet.y_top)
            try:
                ys[i] = brentq(g, lo, hi, xtol=1e-14, rtol=8.9e-16)
            except ValueError:
                ys[i] = brentq(g, 0.0, inlet.y_top, xtol=1e-14, rtol=8.9e-16)

    qv = np.asarray(q0.q(ys), dtype=float)
    dqv = np.asarray(q0.dq(ys), dtype=float)
    rho = np.asarray(model.density(qv), dtype=float)
    upr = np.asarray(inlet.xprime(ys), dtype=float)
    upp = np.asarray(inlet.xsecond(ys), dtype=float)

    Q0 = np.array([model.A(float(q)) for q in qv])
    G0 = upp * (1.0 + upr**2) ** -1.5 / (qv * rho)
    # dQ0/dpsi by the chain rule through y(psi)
    dy_dpsi = 1.0 / (qv * rho * np.sqrt(1.0 + upr**2))
    Ap = np.asarray(model.A_prime(qv), dtype=float)
    dQ0 = Ap * dqv * dy_dpsi
    lam = np.asarray(model.wavespeed_of_speed(qv), dtype=float)
    W0 = G0 - lam * dQ0
    Z0 = -G0 - lam * dQ0
    theta0 = np.arctan(-upr)
    h0 = np.asarray(model.turning_of_speed(qv), dtype=float)

    return PotentialInletData(
        model=model, mass_flux=m, psi=psi, y_of_psi=ys,
        Q0=Q0, G0=G0, W0=W0, Z0=Z0, theta0=theta0, h0=h0, q0=qv,
    )
