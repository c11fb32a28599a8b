"""State functions of a polytropic gas on the supersonic branch.

Units are normalized so that the stagnation sound speed and stagnation
density are both 1.  The Bernoulli law then reads

    rho(q^2) = (1 - (gamma-1) q^2 / 2)^(1/(gamma-1)),   0 <= q <= c_max,

with sonic speed ``c_star = sqrt(2/(gamma+1))`` and limit (vacuum) speed
``c_max = sqrt(2/(gamma-1))``.  Writing ``tau = 1 - (gamma-1) q^2/2`` for
the squared sound speed, the hodograph recodings of the speed are

    A(q) = int_{c_star}^q  -(s^2 - tau)/(s tau^{gamma/(gamma-1)}) ds,
    B(q) = int_{c_star}^q  rho(s^2)/s ds,

where ``q^2 - tau = (gamma+1) q^2/2 - 1 >= 0`` on the supersonic branch,
so A <= 0 there and A -> -infinity at vacuum.  The characteristic slope
factor and source factor in the hodograph strip are

    b(s) = tau^{(gamma+1)/(gamma-1)} / (q^2 - tau)  at  q = A^{-1}_+(s),
    p(s) = (gamma+1) q^4 tau^{(gamma+2)/(gamma-1)} / (q^2 - tau)^3,

and the turning recoding H(s) = int_s^0 b^{1/2} is, after the change of
variable s = A(q), the classical Prandtl-Meyer angle

    H(A(q)) = SQ * arctan(mu/SQ) - arctan(mu),
    mu = sqrt(M^2 - 1),  SQ = sqrt((gamma+1)/(gamma-1)),

which yields the closed-form turning budget
``h_max = H(-inf) = (SQ - 1) * pi/2``.  All monotonicity claims below are
relative to the supersonic branch q in [c_star, c_max).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from numpy.polynomial import chebyshev as _cheb
from scipy.integrate import quad
from scipy.optimize import brentq

from .errors import (
    BranchError,
    DomainError,
    NumericError,
    SonicDegeneracyError,
    VacuumBudgetError,
)

_QUAD_ABS_TOL = 1e-13
_QUAD_REL_TOL = 1e-12
# nodes of the cubic-Hermite inversion table for q as a function of
# u = h^(2/3); the 2/3 power removes the cube-root contact at the sonic
# end so the table converges at O(du^4) with a tiny constant
_TABLE_SIZE = 4097
# sound-speed-squared value below which the analytic vacuum-tail
# expansion replaces direct quadrature
_TAU_SWITCH = 0.02


@dataclass(frozen=True)
class GasModel:
    """Immutable polytropic-gas model; owner of all state functions.

    All operations are pure, so a model can be shared freely across
    threads and solver instances.
    """

    gamma: float
    c_star: float = field(init=False)
    c_max: float = field(init=False)
    h_max: float = field(init=False)
    _inv_table: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        g = self.gamma
        if not (g > 1.0):
            raise DomainError(f"adiabatic exponent must exceed 1, got {g}")
        object.__setattr__(self, "c_star", math.sqrt(2.0 / (g + 1.0)))
        object.__setattr__(self, "c_max", math.sqrt(2.0 / (g - 1.0)))
        sq = math.sqrt((g + 1.0) / (g - 1.0))
        object.__setattr__(self, "h_max", (sq - 1.0) * math.pi / 2.0)
        object.__setattr__(self, "_inv_table", self._build_speed_table())

    # -- primitive thermodynamic quantities --------------------------------

    def sound_speed_sq(self, q):
        """tau = c^2 = 1 - (gamma-1) q^2 / 2.

        Near the vacuum speed the factored form
        (gamma-1)/2 (c_max - q)(c_max + q) is used instead, which is free
        of cancellation as q -> c_max.
        """
        q = np.asarray(q, dtype=float)
        gm = 0.5 * (self.gamma - 1.0)
        out = np.where(
            q < 0.9 * self.c_max,
            1.0 - gm * np.square(q),
            gm * (self.c_max - q) * (self.c_max + q),
        )
        return out if out.ndim else float(out)

    def density(self, q):
        """Bernoulli density rho(q^2); monotone decreasing, rho(c_max)=0."""
        q = np.asarray(q, dtype=float)
        if np.any(q < 0.0) or np.any(q > self.c_max * (1 + 1e-14)):
            raise DomainError("speed outside [0, c_max]")
        tau = np.maximum(self.sound_speed_sq(q), 0.0)
        out = tau ** (1.0 / (self.gamma - 1.0))
        return out if out.ndim else float(out)

    def mach_sq_minus_one(self, q):
        """mu^2 = M^2 - 1 = (q^2 - tau)/tau; nonnegative supersonic,
        infinite at the vacuum speed."""
        q2 = np.square(np.asarray(q, dtype=float))
        tau = self.sound_speed_sq(q)
        with np.errstate(divide="ignore"):
            return (0.5 * (self.gamma + 1.0) * q2 - 1.0) / tau

    # -- hodograph integrand derivatives (closed forms) --------------------

    def A_prime(self, q):
        """dA/dq = -(q^2 - tau) / (q tau^{gamma/(gamma-1)})."""
        g = self.gamma
        q = np.asarray(q, dtype=float)
        q2 = np.square(q)
        tau = self.sound_speed_sq(q)
        return -(0.5 * (g + 1.0) * q2 - 1.0) / (q * tau ** (g / (g - 1.0)))

    def B_prime(self, q):
        """dB/dq = rho(q^2)/q."""
        return self.density(q) / np.asarray(q, dtype=float)

    # -- quadrature-backed hodograph functions -----------------------------

    def A(self, q):
        """Hodograph variable A(q); 0 at c_star, strictly decreasing to
        -infinity on the supersonic branch.  Adaptive quadrature."""
        return _A_cached(self.gamma, float(q))

    def B(self, q):
        """Hodograph companion B(q); strictly increasing."""
        return _B_cached(self.gamma, float(q))

    def A_inverse(self, Q):
        """The supersonic inverse of A: unique q in [c_star, c_max) with
        A(q) = Q, for Q <= 0."""
        if Q > 0.0:
            raise DomainError(f"A is nonpositive on the supersonic branch, got Q={Q}")
        if Q == 0.0:
            return self.c_star
        Q_switch = self.A_of_tau_deep(_TAU_SWITCH)
        if Q <= Q_switch:
            tau = self.tau_of_A_deep(Q)
            return self.speed_of_tau(tau)
        q_hi = self.speed_of_tau(_TAU_SWITCH)
        q = brentq(lambda s: self.A(s) - Q, self.c_star, q_hi, xtol=1e-15, rtol=8.9e-16)
        # Newton polish with the closed-form derivative
        for _ in range(3):
            r = self.A(q) - Q
            if abs(r) <= 1e-13 * max(1.0, abs(Q)):
                break
            q -= r / self.A_prime(q)
            q = min(max(q, self.c_star), self.c_max * (1 - 1e-16))
        return q

    # -- characteristic speed and source factors ---------------------------

    def wavespeed_of_speed(self, q):
        """b^{1/2} as a function of speed:
        tau^{(gamma+1)/(2(gamma-1))} / sqrt(q^2 - tau)."""
        g = self.gamma
        q = np.asarray(q, dtype=float)
        q2 = np.square(q)
        tau = np.maximum(self.sound_speed_sq(q), 0.0)
        return tau ** (0.5 * (g + 1.0) / (g - 1.0)) / np.sqrt(
            0.5 * (g + 1.0) * q2 - 1.0
        )

    def b_of_speed(self, q):
        """b = tau^{(gamma+1)/(gamma-1)} / (q^2 - tau)."""
        return np.square(self.wavespeed_of_speed(q))

    def p_of_speed(self, q):
        """p = (gamma+1) q^4 tau^{(gamma+2)/(gamma-1)} / (q^2 - tau)^3."""
        g = self.gamma
        q = np.asarray(q, dtype=float)
        q2 = np.square(q)
        tau = self.sound_speed_sq(q)
        d = 0.5 * (g + 1.0) * q2 - 1.0
        return (g + 1.0) * q2 * q2 * tau ** ((g + 2.0) / (g - 1.0)) / d**3

    # -- turning (Prandtl-Meyer) recoding -----------------------------------

    def turning_of_speed(self, q):
        """H(A(q)) in closed form: the Prandtl-Meyer angle of the local
        Mach number, zero at c_star, increasing to h_max at c_max."""
        g = self.gamma
        q = np.asarray(q, dtype=float)
        q2 = np.square(q)
        tau = self.sound_speed_sq(q)
        num = 0.5 * (g + 1.0) * q2 - 1.0
        sq = math.sqrt((g + 1.0) / (g - 1.0))
        with np.errstate(divide="ignore", invalid="ignore"):
            mu = np.sqrt(np.maximum(num, 0.0) / np.maximum(tau, 0.0))
        out = np.where(
            tau <= 0.0,
            self.h_max,
            sq * np.arctan(mu / sq) - np.arctan(mu),
        )
        return out if out.ndim else float(out)

    def dturning_dspeed(self, q):
        """dH(A(q))/dq = sqrt(M^2 - 1) / q."""
        return np.sqrt(np.maximum(self.mach_sq_minus_one(q), 0.0)) / q

    def _build_speed_table(self):
        """Cubic-Hermite table of D = c_max - q against u = h^(2/3).

        Built by dense forward sampling in w = sqrt(c_max - q) (which is
        uniform in u near the vacuum end) followed by vectorized Newton
        onto the uniform u grid.  Storing the deficit D keeps relative
        precision where q approaches c_max.
        """
        u_max = self.h_max ** (2.0 / 3.0)
        du = u_max / (_TABLE_SIZE - 1)
        u_nodes = np.linspace(0.0, u_max, _TABLE_SIZE)

        w = np.linspace(0.0, math.sqrt(self.c_max - self.c_star), 8 * _TABLE_SIZE)
        q_samp = np.clip(self.c_max - w**2, self.c_star, self.c_max)[::-1]
        u_samp = np.asarray(self.turning_of_speed(q_samp)) ** (2.0 / 3.0)
        q = np.interp(u_nodes, u_samp, q_samp)
        # Newton in q on h(q)^(2/3) - u = 0
        for _ in range(40):
            inner = q < self.c_max * (1 - 1e-15)
            hq = np.asarray(self.turning_of_speed(q))
            f = hq ** (2.0 / 3.0) - u_nodes
            mu = np.sqrt(np.maximum(self.mach_sq_minus_one(q), 0.0))
            with np.errstate(divide="ignore", invalid="ignore"):
                slope = (2.0 / 3.0) * hq ** (-1.0 / 3.0) * mu / q
            stepv = np.where(inner & (slope > 0), f / np.where(slope > 0, slope, 1.0), 0.0)
            q = np.clip(q - stepv, self.c_star, self.c_max)
            if np.max(np.abs(stepv)) < 1e-15:
                break
        q[0], q[-1] = self.c_star, self.c_max
        D = self.c_max - q
        # dD/du = -(3/2) sqrt(u) q / mu, finite and nonzero at both ends
        mu = np.sqrt(np.maximum(self.mach_sq_minus_one(q), 0.0))
        with np.errstate(divide="ignore", invalid="ignore"):
            dDdu = -1.5 * np.sqrt(u_nodes) * q / mu
        # sonic end: one-sided 4th-order estimate (mu vanishes there)
        dDdu[0] = (
            -25.0 * D[0] + 48.0 * D[1] - 36.0 * D[2] + 16.0 * D[3] - 3.0 * D[4]
        ) / (12.0 * du)
        dDdu[-1] = 0.0  # quadratic contact at the vacuum end
        return (du, D, dDdu)

    def speed_of_turning(self, h):
        """Inverse of turning_of_speed: q with H(A(q)) = h, h in [0, h_max].

        Hermite table lookup, accurate to ~1e-12 over the whole branch and
        exact at both endpoints.
        """
        h_arr = np.asarray(h, dtype=float)
        if np.any(h_arr < -1e-12) or np.any(h_arr > self.h_max * (1 + 1e-12)):
            raise VacuumBudgetError("turning value outside [0, h_max]")
        du, D, dDdu = self._inv_table
        u = np.clip(h_arr, 0.0, self.h_max) ** (2.0 / 3.0)
        j = np.minimum((u / du).astype(np.int64), _TABLE_SIZE - 2)
        t = u / du - j
        t2 = t * t
        t3 = t2 * t
        h00 = 2.0 * t3 - 3.0 * t2 + 1.0
        h10 = t3 - 2.0 * t2 + t
        h01 = -2.0 * t3 + 3.0 * t2
        h11 = t3 - t2
        Dv = (
            h00 * D[j]
            + h01 * D[j + 1]
            + du * (h10 * dDdu[j] + h11 * dDdu[j + 1])
        )
        q = self.c_max - np.maximum(Dv, 0.0)
        return q if q.ndim else float(q)

    def speed_of_turning_scalar(self, h: float) -> float:
        """Scalar fast path of speed_of_turning (plain-float table lookup)."""
        if h >= self.h_max:
            return self.c_max
        if h <= 0.0:
            return self.c_star
        du, D, dDdu = self._inv_table
        u = h ** (2.0 / 3.0)
        j = min(int(u / du), _TABLE_SIZE - 2)
        t = u / du - j
        t2 = t * t
        t3 = t2 * t
        h00 = 2.0 * t3 - 3.0 * t2 + 1.0
        h10 = t3 - 2.0 * t2 + t
        h11 = t3 - t2
        Dv = h00 * D[j] + (1.0 - h00) * D[j + 1] + du * (h10 * dDdu[j] + h11 * dDdu[j + 1])
        return self.c_max - max(Dv, 0.0)

    def wavespeed_of_turning(self, h):
        """b^{1/2}(H^{-1}(h)) as a direct map of the turning variable;
        decreases to 0 at the vacuum budget."""
        q = np.minimum(self.speed_of_turning(h), self.c_max)
        return self.wavespeed_of_speed(q)

    # -- analytic vacuum-tail expansion -------------------------------------
    #
    # With w = tau(s) the hodograph integral becomes
    #   dA = (1 - (gamma+1) w/2) / ((gamma-1)(1-w) w^{gamma/(gamma-1)}) dw
    # and expanding 1/(1-w) geometrically gives
    #   A(q) = C - tau^{-1/(gamma-1)} - (1/2) F(tau),
    #   F(tau) = sum_k tau^{e_k}/e_k,  e_k = k + 1 - 1/(gamma-1),
    # with a log term replacing any resonant e_k = 0.  This removes the
    # loss of significance of direct quadrature as tau -> 0.

    @property
    def _tail(self):
        try:
            return self._tail_cache
        except AttributeError:
            pass
        g = self.gamma
        n_terms = max(14, int(math.ceil(1.0 / (g - 1.0))) + 8)
        exps = np.arange(n_terms) + 1.0 - 1.0 / (g - 1.0)
        tau_s = _TAU_SWITCH
        q_s = self.speed_of_tau(tau_s)
        A_s = _A_quad(self.gamma, self.c_star, q_s)
        const = A_s + tau_s ** (-1.0 / (g - 1.0)) + 0.5 * self._tail_F(exps, tau_s)
        object.__setattr__(self, "_tail_cache", (const, exps))
        return self._tail_cache

    @staticmethod
    def _tail_F(exps, tau):
        terms = np.where(
            np.abs(exps) < 1e-12,
            math.log(tau) if tau > 0 else -math.inf,
            tau ** exps / np.where(np.abs(exps) < 1e-12, 1.0, exps),
        )
        return float(np.sum(terms))

    def tau_of_A_deep(self, Q):
        """Solve A = C - tau^{-1/(gamma-1)} - F(tau)/2 for tau << 1."""
        g = self.gamma
        const, exps = self._tail
        u = const - Q  # leading order: u = tau^{-1/(gamma-1)}
        tau = u ** -(g - 1.0)
        for _ in range(60):
            u_new = const - Q - 0.5 * self._tail_F(exps, tau)
            tau_new = u_new ** -(g - 1.0)
            if abs(tau_new - tau) <= 1e-15 * tau:
                return tau_new
            tau = tau_new
        return tau

    def A_of_tau_deep(self, tau):
        const, exps = self._tail
        g = self.gamma
        return const - tau ** (-1.0 / (g - 1.0)) - 0.5 * self._tail_F(exps, tau)

    def speed_of_tau(self, tau):
        """q from tau, stable near the vacuum endpoint."""
        return math.sqrt(max(2.0 * (1.0 - tau) / (self.gamma - 1.0), 0.0))

    def turning_of_tau(self, tau):
        """Prandtl-Meyer turning from tau, stable as tau -> 0."""
        g = self.gamma
        mu2 = 2.0 * (1.0 - tau) / ((g - 1.0) * tau) - 1.0
        mu = math.sqrt(max(mu2, 0.0))
        sq = math.sqrt((g + 1.0) / (g - 1.0))
        return sq * math.atan(mu / sq) - math.atan(mu)


@lru_cache(maxsize=100_000)
def _A_cached(gamma: float, q: float) -> float:
    model = _bare_model(gamma)
    if q < model.c_star * (1 - 1e-12):
        raise BranchError(f"A served on [c_star, c_max) only, got q={q}")
    if q >= model.c_max:
        raise DomainError(f"A diverges at the vacuum speed, got q={q}")
    if abs(q - model.c_star) < 1e-15:
        return 0.0
    tau = model.sound_speed_sq(q)
    if tau < _TAU_SWITCH:
        return model.A_of_tau_deep(tau)
    return _A_quad(gamma, model.c_star, q)


def _A_quad(gamma: float, lo: float, hi: float) -> float:
    model = _bare_model(gamma)
    val, err = quad(
        model.A_prime,
        lo,
        hi,
        epsabs=_QUAD_ABS_TOL,
        epsrel=_QUAD_REL_TOL,
        limit=400,
    )
    if not math.isfinite(val):
        raise NumericError(f"quadrature for A on [{lo}, {hi}] failed")
    return val


@lru_cache(maxsize=100_000)
def _B_cached(gamma: float, q: float) -> float:
    model = _bare_model(gamma)
    if q < model.c_star * (1 - 1e-12):
        raise BranchError(f"B served on [c_star, c_max) only, got q={q}")
    if abs(q - model.c_star) < 1e-15:
        return 0.0
    val, err = quad(
        lambda s: model.density(s) / s,
        model.c_star,
        min(q, model.c_max),
        epsabs=_QUAD_ABS_TOL,
        epsrel=_QUAD_REL_TOL,
        limit=400,
    )
    if not math.isfinite(val):
        raise NumericError(f"quadrature for B({q}) failed")
    return val


@lru_cache(maxsize=64)
def _bare_model(gamma: float) -> GasModel:
    return GasModel(gamma)


# ---------------------------------------------------------------------------
# module-level operations in the hodograph variable Q
# ---------------------------------------------------------------------------


def density(model: GasModel, q):
    """Normalized Bernoulli density at speed q."""
    return model.density(q)


def hodograph_A(model: GasModel, q: float) -> float:
    """A(q) on the supersonic branch by adaptive quadrature."""
    return model.A(q)


def hodograph_B(model: GasModel, q: float) -> float:
    """B(q) by adaptive quadrature."""
    return model.B(q)


def A_inverse_plus(model: GasModel, Q: float) -> float:
    """Supersonic inverse of A."""
    return model.A_inverse(Q)


def wavespeed_b(model: GasModel, Q: float) -> float:
    """b(Q) > 0 for Q < 0; unbounded at the sonic value Q = 0."""
    if Q >= 0.0:
        raise SonicDegeneracyError("b is unbounded at the sonic state Q=0")
    return float(model.b_of_speed(model.A_inverse(Q)))

def source_p(model: GasModel, Q: float) -> float:
    """p(Q) > 0 for Q < 0."""
    if Q >= 0.0:
        raise SonicDegeneracyError("p is evaluated on Q<0 only")
    return float(model.p_of_speed(model.A_inverse(Q)))


def turning_H(model: GasModel, Q: float) -> float:
    """H(Q) = int_Q^0 b^{1/2}; 0 at Q=0, increasing in -Q, bounded by h_max."""
    if Q > 0.0:
        raise DomainError(f"H is defined for Q <= 0, got {Q}")
    if Q == 0.0:
        return 0.0
    if math.isinf(Q):
        return model.h_max
    if Q <= model.A_of_tau_deep(_TAU_SWITCH):
        return model.turning_of_tau(model.tau_of_A_deep(Q))
    return float(model.turning_of_speed(model.A_inverse(Q)))


def H_inverse(model: GasModel, h: float) -> float:
    """Inverse of turning_H; raises VacuumBudgetError for h >= h_max."""
    if h < 0.0:
        raise DomainError(f"turning values are nonnegative, got {h}")
    if h >= model.h_max:
        raise VacuumBudgetError(
            f"turning {h} meets or exceeds the budget {model.h_max}"
        )
    if h == 0.0:
        return 0.0
    return model.A(float(model.speed_of_turning(h)))
