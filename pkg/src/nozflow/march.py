"""Characteristic marching of the supersonic strip in the potential plane.

State is carried in the invariant pair (h, theta), where h is the
turning recoding of the hodograph variable and theta the flow angle.
The quantities R+ = h - theta and R- = h + theta are exactly constant
along the characteristic families dpsi/dphi = +lambda and -lambda with
lambda = b^{1/2}; a semi-Lagrangian step therefore traces each family
one step back, interpolates the corresponding invariant with a
monotonicity-preserving cubic, and recombines.  Marching in h rather
than the hodograph variable itself compactifies the vacuum singularity
(h -> h_max finite) and makes the source terms vanish identically.

Sign structure: the admissible regime has R+ nonincreasing and R-
nondecreasing across the strip (equivalently W <= 0 <= Z for the
derived slopes).  Monotone interpolation composed with order-preserving
foot maps keeps that structure to roundoff, not merely to truncation
order, which is what the sign-preservation checks rely on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from . import _fast
from .errors import ConsistencyError, NumericError, VacuumReached
from .gasdyn import GasModel
from .interp import hermite_eval, pchip_slopes
from .nozzle import PotentialInletData, WallCurve

NO_VACUUM = "no-vacuum"
VACUUM_AT_WALL = "vacuum-at-wall"
SHOCK_DETECTED = "shock-detected"


@dataclass
class StripState:
    """Marching state on the uniform psi grid at fixed phi."""

    phi: float
    h: np.ndarray
    theta: np.ndarray
    x_wall: float
    dphi_last: float = 0.0

    def copy(self) -> "StripState":
        return StripState(
            self.phi, self.h.copy(), self.theta.copy(), self.x_wall, self.dphi_last
        )


@dataclass
class MarchOptions:
    safety: float = 0.5
    phi_max: float = math.inf
    x_max: float = math.inf
    vac_tol_rel: float = 1e-6       # vacuum threshold h_max * (1 - vac_tol_rel)
    vac_band_rel: float = 1e-3      # diagnostics exclusion band below h_max
    grad_blowup_factor: float = 50.0
    sign_tol_rel: float = 1e-5      # detector (c) threshold relative to data scale
    sign_persist: int = 3
    snapshot_stride: int = 0        # 0: auto (~2000 snapshots kept per run)
    max_steps: int = 5_000_000
    keep_history: bool = True

    def __post_init__(self):
        if not 0.0 < self.safety <= 1.0:
            raise ValueError("safety factor must lie in (0, 1].")


@dataclass
class ShockDiagnostic:
    kind: str          # "compression" | "gradient" | "sign"
    phi: float
    psi: float
    detail: str


@dataclass
class WallTrace:
    phi: np.ndarray
    x: np.ndarray
    q: np.ndarray
    theta: np.ndarray
    h: np.ndarray


@dataclass
class Snapshots:
    phi: list = field(default_factory=list)
    h: list = field(default_factory=list)
    theta: list = field(default_factory=list)
    x_wall: list = field(default_factory=list)

    def append(self, state: StripState):
        self.phi.append(state.phi)
        self.h.append(state.h.copy())
        self.theta.append(state.theta.copy())
        self.x_wall.append(state.x_wall)

    def __len__(self):
        return len(self.phi)


@dataclass
class RunDiagnostics:
    """Extremes of derived quantities accumulated over a run.

    W and Z are the psi-slopes of R+ and R-; U and V their
    wave-speed-scaled versions (the Lipschitz-stable quantities); Q_phi
    is the acceleration of the hodograph variable.  All exclude the
    vacuum band.
    """

    max_W: float = -math.inf
    min_Z: float = math.inf
    max_Q_phi: float = -math.inf
    max_absU: float = 0.0
    max_absV: float = 0.0
    min_h: float = math.inf
    max_h: float = -math.inf
    min_dtheta_wall: float = math.inf
    min_dRplus_wall: float = math.inf
    sign_scale: float = 1.0
    steps: int = 0
    vacuum_first_at_wall: Optional[bool] = None


@dataclass
class SolveOutcome:
    tag: str
    phi_end: float
    zeta: Optional[float]
    x0: Optional[float]
    shock: Optional[ShockDiagnostic]
    snapshots: Snapshots
    wall_trace: WallTrace
    diagnostics: RunDiagnostics
    final_state: StripState
    model: GasModel
    dpsi: float
    mass_flux: float


# ---------------------------------------------------------------------------
# step core: numpy reference and numba dispatch
# ---------------------------------------------------------------------------


def _lam_of_h(model: GasModel, h):
    if _fast.HAVE_NUMBA:
        du, D, dDdu = model._inv_table
        return _fast.lam_of_h(
            h, du, D, dDdu, model.h_max, model.c_max, model.gamma
        )
    return np.asarray(model.wavespeed_of_turning(h))


def _advance_core_numpy(h, theta, lam, dphi, dpsi, model):
    """Two-pass semi-Lagrangian step (trapezoid along characteristics);
    reference implementation of _fast.step_core.  Boundary nodes carry
    interior-formula values for the caller to overwrite."""
    n = h.shape[0]
    psi_top = (n - 1) * dpsi
    psi = np.arange(n) * dpsi
    Rp = h - theta
    Rm = h + theta
    sp = pchip_slopes(Rp, dpsi)
    sm = pchip_slopes(Rm, dpsi)

    half = 0.5 * dphi * lam
    feet_p = psi - dphi * np.interp(psi - half, psi, lam)
    feet_m = psi + dphi * np.interp(psi + half, psi, lam)
    h_star = 0.5 * (
        hermite_eval(Rp, sp, dpsi, np.clip(feet_p, 0.0, psi_top))
        + hermite_eval(Rm, sm, dpsi, np.clip(feet_m, 0.0, psi_top))
    )
    lam_star = _lam_of_h(model, h_star)

    feet_p = psi - dphi * 0.5 * (np.interp(feet_p, psi, lam) + lam_star)
    feet_m = psi + dphi * 0.5 * (np.interp(feet_m, psi, lam) + lam_star)
    Rp_new = hermite_eval(Rp, sp, dpsi, np.clip(feet_p, 0.0, psi_top))
    Rm_new = hermite_eval(Rm, sm, dpsi, np.clip(feet_m, 0.0, psi_top))
    h_new = 0.5 * (Rp_new + Rm_new)
    th_new = 0.5 * (Rm_new - Rp_new)
    return h_new, th_new, feet_p, feet_m


def _advance_core(h, theta, lam, dphi, dpsi, model):
    if _fast.HAVE_NUMBA:
        du, D, dDdu = model._inv_table
        return _fast.step_core(
            h, theta, lam, dphi, dpsi,
            du, D, dDdu, model.h_max, model.c_max, model.gamma,
        )
    return _advance_core_numpy(h, theta, lam, dphi, dpsi, model)


def _apply_boundaries(
    h_new, th_new, Rp_top, x_wall, h_wall_old, dphi, model, wall,
    bottom, top, pin_theta_bottom, pin_theta_top, Rm_arrays=None,
):
    """Overwrite the boundary nodes of a freshly advanced strip.

    Returns the new wall abscissa (unchanged unless top == 'wall').
    Rp_top is the incoming + invariant at the top node; Rm_arrays
    (Rm, feet_m, dpsi) is needed only by the 'open' closure.
    """
    # bottom
    if bottom == "axis":
        # reflection: theta = 0, both invariants equal the incoming R-
        rm0 = h_new[0] + th_new[0]
        th_new[0] = 0.0
        h_new[0] = rm0
    elif bottom == "vacuum":
        th_new[0] = pin_theta_bottom
        h_new[0] = model.h_max
    else:
        raise ValueError(f"unknown bottom boundary {bottom!r}")

    x_new = x_wall
    if top == "wall":
        q_w = model.speed_of_turning_scalar(h_wall_old)
        fp0 = float(wall.fprime(x_wall))
        g0 = 1.0 / (q_w * math.sqrt(1.0 + fp0 * fp0))
        x_pred = x_wall + dphi * g0
        fp1 = float(wall.fprime(x_pred))
        th_pred = math.atan(fp1)
        q_pred = model.speed_of_turning_scalar(Rp_top + th_pred)
        g1 = 1.0 / (q_pred * math.sqrt(1.0 + fp1 * fp1))
        x_new = x_wall + 0.5 * dphi * (g0 + g1)
        th_new[-1] = math.atan(float(wall.fprime(x_new)))
        h_new[-1] = Rp_top + th_new[-1]
    elif top == "vacuum":
        th_new[-1] = pin_theta_top
        h_new[-1] = model.h_max
    elif top == "open":
        Rm, feet_m, dpsi = Rm_arrays
        psi_top = (Rm.shape[0] - 1) * dpsi
        rm_top = Rm[-1] + (Rm[-1] - Rm[-2]) / dpsi * (feet_m[-1] - psi_top)
        h_new[-1] = 0.5 * (Rp_top + rm_top)
        th_new[-1] = 0.5 * (rm_top - Rp_top)
    else:
        raise ValueError(f"unknown top boundary {top!r}")
    return x_new


def _advance(
    h, theta, x_wall, dphi, dpsi, model, wall, bottom, top,
    pin_theta_bottom, pin_theta_top, lam=None,
):
    if lam is None:
        lam = _lam_of_h(model, h)
    h_new, th_new, feet_p, feet_m = _advance_core(h, theta, lam, dphi, dpsi, model)
    Rp_top = float(h_new[-1] - th_new[-1])
    rm_args = (h + theta, feet_m, dpsi) if top == "open" else None
    x_new = _apply_boundaries(
        h_new, th_new, Rp_top, x_wall, float(h[-1]), dphi, model, wall,
        bottom, top, pin_theta_bottom, pin_theta_top, Rm_arrays=rm_args,
    )
    h_min = h_new.min()
    if h_min < 0.0:
        if h_min < -1e-12:
            raise NumericError(f"turning variable went negative: {h_min}")
        np.clip(h_new, 0.0, None, out=h_new)
    np.clip(h_new, None, model.h_max, out=h_new)
    return h_new, th_new, x_new, feet_p, feet_m, lam


# ---------------------------------------------------------------------------
# public single-step operations
# ---------------------------------------------------------------------------


def cfl_step(state: StripState, model: GasModel, dpsi: float, safety: float) -> float:
    """dphi = safety * dpsi / max_i lambda(h_i); positive on non-vacuum
    states because the wave speed is bounded there."""
    lam = _lam_of_h(model, state.h)
    lam_max = float(np.max(lam))
    if lam_max <= 0.0:
        raise NumericError("wave speed vanished everywhere; state is all vacuum")
    return safety * dpsi / lam_max


def step(
    state: StripState,
    wall: Optional[WallCurve],
    model: GasModel,
    dphi: float,
    dpsi: float,
    bottom: str = "axis",
    top: str = "wall",
    pin_theta_bottom: float = 0.0,
    pin_theta_top: float = 0.0,
) -> StripState:
    """Advance one step of size dphi; raises VacuumReached if the wall
    node meets the turning budget."""
    h, th, x_new, _, _, _ = _advance(
        state.h, state.theta, state.x_wall, dphi, dpsi,
        model, wall, bottom, top, pin_theta_bottom, pin_theta_top,
    )
    new = StripState(state.phi + dphi, h, th, x_new, dphi)
    if top == "wall" and h[-1] >= model.h_max:
        raise VacuumReached(new.phi, new)
    return new


# ---------------------------------------------------------------------------
# shock detection
# ---------------------------------------------------------------------------


def _scan_compression(feet_p, feet_m, bottom, top):
    n = feet_p.shape[0]
    lo_p = 1 if bottom in ("axis", "vacuum") else 0
    hi_m = n - 1 if top in ("wall", "vacuum") else n
    if _fast.HAVE_NUMBA:
        gp, ip, gm, im = _fast.compression_scan(feet_p, feet_m, lo_p, hi_m)
    else:
        dfp = np.diff(feet_p[lo_p:])
        dfm = np.diff(feet_m[:hi_m])
        ip = int(np.argmin(dfp)) + lo_p if dfp.size else 0
        gp = float(dfp.min()) if dfp.size else math.inf
        im = int(np.argmin(dfm)) if dfm.size else 0
        gm = float(dfm.min()) if dfm.size else math.inf
    return gp, ip, gm, im


def _scan_gradient(h, lam, band):
    if _fast.HAVE_NUMBA:
        return _fast.gradient_scan(h, lam, band)
    h_mid = 0.5 * (h[1:] + h[:-1])
    lam_mid = 0.5 * (lam[1:] + lam[:-1])
    with np.errstate(divide="ignore", invalid="ignore"):
        v = np.abs(np.diff(h)) / np.where(lam_mid > 0, lam_mid, np.inf)
    v = np.where(h_mid < band, v, 0.0)
    i = int(np.argmax(v))
    return float(v[i]), i


def _detect(h, lam, feet_p, feet_m, dpsi, phi, model, opts, bottom, top):
    """Detectors (a) characteristic compression and (b) gradient blow-up."""
    gp, ip, gm, im = _scan_compression(feet_p, feet_m, bottom, top)
    if gp <= 0.0:
        return ShockDiagnostic(
            "compression", phi, ip * dpsi,
            f"positive-family feet crossed between nodes {ip} and {ip + 1}",
        )
    if gm <= 0.0:
        return ShockDiagnostic(
            "compression", phi, im * dpsi,
            f"negative-family feet crossed between nodes {im} and {im + 1}",
        )
    band = model.h_max * (1.0 - opts.vac_band_rel)
    best, i = _scan_gradient(h, lam, band)
    if best > opts.grad_blowup_factor:
        return ShockDiagnostic(
            "gradient", phi, (i + 0.5) * dpsi,
            f"|Q_psi| = {best / dpsi:.3g} exceeded "
            f"{opts.grad_blowup_factor:.3g}/dpsi",
        )
    return None


def detect_shock(
    prev: StripState,
    state: StripState,
    model: GasModel,
    dpsi: float,
    opts: Optional[MarchOptions] = None,
    bottom: str = "axis",
    top: str = "wall",
) -> Optional[ShockDiagnostic]:
    """Standalone two-state detector (compression + gradient); the
    persistence-based sign detector lives in the march loop."""
    opts = opts or MarchOptions()
    dphi = state.phi - prev.phi
    if dphi <= 0.0:
        raise ConsistencyError("states are not consecutive")
    lam = _lam_of_h(model, prev.h)
    _, _, feet_p, feet_m = _advance_core(prev.h, prev.theta, lam, dphi, dpsi, model)
    return _detect(
        prev.h, lam, feet_p, feet_m, dpsi, state.phi, model, opts, bottom, top
    )


def _extremes(h, theta, h_new, lam, dphi, dpsi, band):
    if _fast.HAVE_NUMBA:
        return _fast.run_extremes(h, theta, h_new, lam, dphi, dpsi, band)
    dh = np.diff(h)
    dth = np.diff(theta)
    W_d = (dh - dth) / dpsi
    Z_d = (dh + dth) / dpsi
    h_mid = 0.5 * (h[1:] + h[:-1])
    in_gas = h_mid < band
    lam_mid = 0.5 * (lam[1:] + lam[:-1])
    if np.any(in_gas):
        max_W = float(np.max(np.where(in_gas, W_d, -np.inf)))
        min_Z = float(np.min(np.where(in_gas, Z_d, np.inf)))
        max_absU = float(np.max(np.where(in_gas, np.abs(lam_mid * W_d), 0.0)))
        max_absV = float(np.max(np.where(in_gas, np.abs(lam_mid * Z_d), 0.0)))
    else:
        max_W, min_Z, max_absU, max_absV = -math.inf, math.inf, 0.0, 0.0
    gas_nodes = (h < band) & (lam > 0.0)
    if np.any(gas_nodes):
        with np.errstate(divide="ignore", invalid="ignore"):
            q_phi = -(h_new - h) / dphi / np.where(lam > 0, lam, np.inf)
        max_Q_phi = float(np.max(np.where(gas_nodes, q_phi, -np.inf)))
    else:
        max_Q_phi = -math.inf
    return (
        max_W, min_Z, max_absU, max_absV, max_Q_phi,
        float(np.min(h)), float(np.max(h)),
    )


# ---------------------------------------------------------------------------
# full march
# ---------------------------------------------------------------------------


def initial_state(inlet: PotentialInletData, wall: WallCurve) -> StripState:
    return StripState(
        phi=0.0, h=inlet.h0.copy(), theta=inlet.theta0.copy(),
        x_wall=wall.l0, dphi_last=0.0,
    )


def march(
    inlet: PotentialInletData,
    wall: WallCurve,
    model: GasModel,
    opts: Optional[MarchOptions] = None,
    snapshot_sink: Optional[Callable] = None,
    arm_sign_detector: bool = True,
) -> SolveOutcome:
    """March downstream until the domain bound, the vacuum budget, or a
    shock signature is reached.

    ``snapshot_sink``, if given, receives (phi, h_view, theta_view,
    x_wall) after every accepted step; the views are read-only.
    """
    opts = opts or MarchOptions()
    n = inlet.psi.size
    dpsi = inlet.dpsi
    state = initial_state(inlet, wall)

    sign_scale = max(
        1.0, float(np.max(np.abs(inlet.W0))), float(np.max(np.abs(inlet.Z0)))
    )
    diag = RunDiagnostics(sign_scale=sign_scale)
    band = model.h_max * (1.0 - opts.vac_band_rel)
    vac_threshold = model.h_max * (1.0 - opts.vac_tol_rel)
    sign_tol = opts.sign_tol_rel * sign_scale

    snaps = Snapshots()
    stride = max(1, opts.snapshot_stride)
    trace_phi = [0.0]
    trace_x = [wall.l0]
    trace_th = [float(state.theta[-1])]
    trace_h = [float(state.h[-1])]
    trace_q = [model.speed_of_turning_scalar(float(state.h[-1]))]
    if opts.keep_history:
        snaps.append(state)

    shock: Optional[ShockDiagnostic] = None
    sign_count = 0
    step_idx = 0
    lam = _lam_of_h(model, state.h)
    tag = NO_VACUUM
    zeta = x0 = None

    while True:
        if state.phi >= opts.phi_max or state.x_wall >= opts.x_max:
            tag, zeta, x0 = NO_VACUUM, None, None
            break
        if step_idx >= opts.max_steps:
            raise NumericError(f"step budget exhausted at phi={state.phi}")

        lam_max = float(np.max(lam))
        if lam_max <= 0.0:
            raise NumericError("wave speed vanished everywhere")
        dphi = opts.safety * dpsi / lam_max
        if math.isfinite(opts.phi_max):
            dphi = min(dphi, opts.phi_max - state.phi)

        h_new, th_new, feet_p, feet_m = _advance_core(
            state.h, state.theta, lam, dphi, dpsi, model
        )
        Rp_top = float(h_new[-1] - th_new[-1])
        x_new = _apply_boundaries(
            h_new, th_new, Rp_top, state.x_wall, float(state.h[-1]), dphi,
            model, wall, "axis", "wall", 0.0, 0.0,
        )
        if h_new.min() < -1e-12:
            raise NumericError(f"turning variable went negative: {h_new.min()}")
        np.clip(h_new, 0.0, model.h_max, out=h_new)
        phi_new = state.phi + dphi
        step_idx += 1

        # --- inline diagnostics (vacuum band excluded) ---
        wmax, zmin, aU, aV, qphi_max, hmin, hmax = _extremes(
            state.h, state.theta, h_new, lam, dphi, dpsi, band
        )
        diag.max_W = max(diag.max_W, wmax)
        diag.min_Z = min(diag.min_Z, zmin)
        diag.max_absU = max(diag.max_absU, aU)
        diag.max_absV = max(diag.max_absV, aV)
        diag.max_Q_phi = max(diag.max_Q_phi, qphi_max)
        diag.min_h = min(diag.min_h, hmin)
        diag.max_h = max(diag.max_h, hmax)

        # --- shock detectors ---
        if shock is None:
            shock = _detect(
                state.h, lam, feet_p, feet_m, dpsi, phi_new, model, opts,
                "axis", "wall",
            )
        if shock is None and arm_sign_detector:
            if wmax > sign_tol or zmin < -sign_tol:
                sign_count += 1
                if sign_count >= opts.sign_persist:
                    shock = ShockDiagnostic(
                        "sign", phi_new, float("nan"),
                        f"invariant slopes violated admissible signs for "
                        f"{sign_count} consecutive steps "
                        f"(max W={wmax:.3g}, min Z={zmin:.3g})",
                    )
            else:
                sign_count = 0
        if shock is not None:
            tag, zeta, x0 = SHOCK_DETECTED, None, None
            break

        # --- accept ---
        state = StripState(phi_new, h_new, th_new, x_new, dphi)
        lam = _lam_of_h(model, state.h)
        diag.steps += 1

        trace_phi.append(phi_new)
        trace_x.append(x_new)
        th_w = float(th_new[-1])
        h_w = float(h_new[-1])
        trace_th.append(th_w)
        trace_h.append(h_w)
        trace_q.append(model.speed_of_turning_scalar(h_w))
        diag.min_dtheta_wall = min(diag.min_dtheta_wall, trace_th[-1] - trace_th[-2])
        diag.min_dRplus_wall = min(
            diag.min_dRplus_wall,
            (trace_h[-1] - trace_th[-1]) - (trace_h[-2] - trace_th[-2]),
        )
        if opts.keep_history and step_idx % stride == 0:
            snaps.append(state)
        if snapshot_sink is not None:
            hv = state.h.view()
            tv = state.theta.view()
            hv.flags.writeable = False
            tv.flags.writeable = False
            snapshot_sink(state.phi, hv, tv, state.x_wall)

        # --- vacuum threshold ---
        if h_w >= vac_threshold:
            diag.vacuum_first_at_wall = bool(int(np.argmax(h_new)) == n - 1)
            h1, h0_ = trace_h[-1], trace_h[-2]
            p1, p0 = trace_phi[-1], trace_phi[-2]
            x1, xw0 = trace_x[-1], trace_x[-2]
            frac = (vac_threshold - h0_) / (h1 - h0_) if h1 != h0_ else 1.0
            zeta = p0 + frac * (p1 - p0)
            x0 = xw0 + frac * (x1 - xw0)
            tag = VACUUM_AT_WALL
            break

    wall_trace = WallTrace(
        phi=np.asarray(trace_phi), x=np.asarray(trace_x), q=np.asarray(trace_q),
        theta=np.asarray(trace_th), h=np.asarray(trace_h),
    )
    if opts.keep_history and (len(snaps) == 0 or snaps.phi[-1] != state.phi):
        snaps.append(state)
    return SolveOutcome(
        tag=tag, phi_end=state.phi, zeta=zeta, x0=x0, shock=shock,
        snapshots=snaps, wall_trace=wall_trace, diagnostics=diag,
        final_state=state, model=model, dpsi=dpsi, mass_flux=inlet.mass_flux,
    )


# ---------------------------------------------------------------------------
# characteristic tracing through stored history (verification tool)
# ---------------------------------------------------------------------------


def trace_characteristic(
    snaps: Snapshots,
    model: GasModel,
    dpsi: float,
    family: int,
    psi_start: float,
    k_start: int = 0,
    k_end: Optional[int] = None,
):
    """Integrate dpsi/dphi = family * lambda through the stored field and
    return (phi_path, psi_path, invariant_path) with the transported
    invariant R(+/-) = h -/+ family*theta sampled along the path.

    Uses Heun steps between consecutive snapshots with monotone cubic
    interpolation in psi; stops at the strip boundary.
    """
    if family not in (+1, -1):
        raise ValueError("family must be +1 or -1")
    n = snaps.h[0].shape[0]
    psi_top = (n - 1) * dpsi
    k_end = len(snaps) if k_end is None else k_end

    def lam_at(k, psi):
        lam = _lam_of_h(model, snaps.h[k])
        return float(
            hermite_eval(lam, pchip_slopes(lam, dpsi), dpsi, np.array([psi]))[0]
        )

    def invariant_at(k, psi):
        arr = snaps.h[k] - family * snaps.theta[k]
        return float(
            hermite_eval(arr, pchip_slopes(arr, dpsi), dpsi, np.array([psi]))[0]
        )

    psi = float(psi_start)
    phis = [snaps.phi[k_start]]
    psis = [psi]
    invs = [invariant_at(k_start, psi)]
    for k in range(k_start, k_end - 1):
        dphi = snaps.phi[k + 1] - snaps.phi[k]
        v0 = family * lam_at(k, psi)
        psi_pred = psi + dphi * v0
        if not 0.0 <= psi_pred <= psi_top:
            break
        v1 = family * lam_at(k + 1, psi_pred)
        psi = psi + 0.5 * dphi * (v0 + v1)
        if not 0.0 <= psi <= psi_top:
            break
        phis.append(snaps.phi[k + 1])
        psis.append(psi)
        invs.append(invariant_at(k + 1, psi))
    return np.asarray(phis), np.asarray(psis), np.asarray(invs)
