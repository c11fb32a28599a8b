"""Optional numba-accelerated array core of the marching step.

Same math as the numpy reference path in march._advance_core; the
marching loop picks whichever is available.  Set NOZFLOW_NO_NUMBA=1 to
force the numpy path.
"""

from __future__ import annotations

import os

import numpy as np

HAVE_NUMBA = False
if not os.environ.get("NOZFLOW_NO_NUMBA"):
    try:
        from numba import njit

        HAVE_NUMBA = True
    except ImportError:  # pragma: no cover
        pass

if HAVE_NUMBA:

    @njit(cache=True)
    def lam_of_h(h, du, D, dDdu, h_max, c_max, gamma):
        """Wave speed b^{1/2}(H^{-1}(h)): table lookup for q, closed form."""
        n = h.shape[0]
        out = np.empty(n)
        size = D.shape[0]
        for i in range(n):
            hv = h[i]
            if hv >= h_max:
                out[i] = 0.0
                continue
            if hv < 0.0:
                hv = 0.0
            u = hv ** (2.0 / 3.0)
            j = int(u / du)
            if j > size - 2:
                j = size - 2
            t = u / du - j
            t2 = t * t
            t3 = t2 * t
            h00 = 2.0 * t3 - 3.0 * t2 + 1.0
            h10 = t3 - 2.0 * t2 + t
            h11 = t3 - t2
            Dv = (
                h00 * D[j]
                + (1.0 - h00) * D[j + 1]
                + du * (h10 * dDdu[j] + h11 * dDdu[j + 1])
            )
            if Dv < 0.0:
                Dv = 0.0
            q = c_max - Dv
            q2 = q * q
            tau = 0.5 * (gamma - 1.0) * (c_max - q) * (c_max + q)
            den = 0.5 * (gamma + 1.0) * q2 - 1.0
            if den <= 0.0 or tau <= 0.0:
                out[i] = 0.0
            else:
                out[i] = tau ** (0.5 * (gamma + 1.0) / (gamma - 1.0)) / np.sqrt(den)
        return out

    @njit(cache=True)
    def _slopes(y, dx, m):
        n = y.shape[0]
        # interior: harmonic mean of adjacent secants when same-signed
        for i in range(1, n - 1):
            d0 = (y[i] - y[i - 1]) / dx
            d1 = (y[i + 1] - y[i]) / dx
            p = d0 * d1
            m[i] = 2.0 * p / (d0 + d1) if p > 0.0 else 0.0
        d0 = (y[1] - y[0]) / dx
        d1 = (y[2] - y[1]) / dx
        s = 1.5 * d0 - 0.5 * d1
        if s * d0 <= 0.0:
            s = 0.0
        elif d1 * d0 <= 0.0 and abs(s) > 3.0 * abs(d0):
            s = 3.0 * d0
        m[0] = s
        d0 = (y[n - 1] - y[n - 2]) / dx
        d1 = (y[n - 2] - y[n - 3]) / dx
        s = 1.5 * d0 - 0.5 * d1
        if s * d0 <= 0.0:
            s = 0.0
        elif d1 * d0 <= 0.0 and abs(s) > 3.0 * abs(d0):
            s = 3.0 * d0
        m[n - 1] = s

    @njit(cache=True, inline="always")
    def _lin_at(arr, s, dpsi, n):
        if s <= 0.0:
            return arr[0]
        top = (n - 1) * dpsi
        if s >= top:
            return arr[n - 1]
        j = int(s / dpsi)
        t = s / dpsi - j
        return arr[j] * (1.0 - t) + arr[j + 1] * t

    @njit(cache=True, inline="always")
    def _hermite_at(y, m, x, dpsi, n):
        if x < 0.0:
            x = 0.0
        top = (n - 1) * dpsi
        if x > top:
            x = top
        s = x / dpsi
        j = int(s)
        if j > n - 2:
            j = n - 2
        t = s - j
        t2 = t * t
        t3 = t2 * t
        h00 = 2.0 * t3 - 3.0 * t2 + 1.0
        h10 = t3 - 2.0 * t2 + t
        h11 = t3 - t2
        return h00 * y[j] + (1.0 - h00) * y[j + 1] + dpsi * (
            h10 * m[j] + h11 * m[j + 1]
        )

    @njit(cache=True)
    def step_core(h, theta, lam, dphi, dpsi, du, D, dDdu, h_max, c_max, gamma):
        """Two-pass semi-Lagrangian step (trapezoid along characteristics).

        Pass 1 traces feet with the old-level wave speed at the spatial
        midpoint and builds a provisional state; pass 2 retraces with the
        average of the old-level speed at the provisional foot and the
        new-level speed at the node.  Returns (h_new, th_new, feet_p,
        feet_m); boundary nodes carry interior-formula values for the
        caller to overwrite.
        """
        n = h.shape[0]
        Rp = np.empty(n)
        Rm = np.empty(n)
        for i in range(n):
            Rp[i] = h[i] - theta[i]
            Rm[i] = h[i] + theta[i]
        sp = np.empty(n)
        sm = np.empty(n)
        _slopes(Rp, dpsi, sp)
        _slopes(Rm, dpsi, sm)

        feet_p = np.empty(n)
        feet_m = np.empty(n)
        h_star = np.empty(n)
        for i in range(n):
            psi = i * dpsi
            half = 0.5 * dphi * lam[i]
            lmp = _lin_at(lam, psi - half, dpsi, n)
            lmm = _lin_at(lam, psi + half, dpsi, n)
            feet_p[i] = psi - dphi * lmp
            feet_m[i] = psi + dphi * lmm
            rp = _hermite_at(Rp, sp, feet_p[i], dpsi, n)
            rm = _hermite_at(Rm, sm, feet_m[i], dpsi, n)
            h_star[i] = 0.5 * (rp + rm)

        lam_star = lam_of_h(h_star, du, D, dDdu, h_max, c_max, gamma)

        h_new = np.empty(n)
        th_new = np.empty(n)
        for i in range(n):
            psi = i * dpsi
            vp = 0.5 * (_lin_at(lam, feet_p[i], dpsi, n) + lam_star[i])
            vm = 0.5 * (_lin_at(lam, feet_m[i], dpsi, n) + lam_star[i])
            feet_p[i] = psi - dphi * vp
            feet_m[i] = psi + dphi * vm
            rp = _hermite_at(Rp, sp, feet_p[i], dpsi, n)
            rm = _hermite_at(Rm, sm, feet_m[i], dpsi, n)
            h_new[i] = 0.5 * (rp + rm)
            th_new[i] = 0.5 * (rm - rp)
        return h_new, th_new, feet_p, feet_m

    @njit(cache=True)
    def run_extremes(h, theta, h_new, lam, dphi, dpsi, band):
        """Per-step extremes of the derived sign/Lipschitz quantities,
        excluding cells whose midpoint lies in the vacuum band.

        Returns (max_W, min_Z, max_absU, max_absV, max_Q_phi,
                 min_feet_p_gap_unused=0, h_min, h_max_val).
        """
        n = h.shape[0]
        max_W = -1e300
        min_Z = 1e300
        max_absU = 0.0
        max_absV = 0.0
        for i in range(n - 1):
            h_mid = 0.5 * (h[i] + h[i + 1])
            if h_mid >= band:
                continue
            dh = h[i + 1] - h[i]
            dth = theta[i + 1] - theta[i]
            W = (dh - dth) / dpsi
            Z = (dh + dth) / dpsi
            if W > max_W:
                max_W = W
            if Z < min_Z:
                min_Z = Z
            lam_mid = 0.5 * (lam[i] + lam[i + 1])
            aU = abs(lam_mid * W)
            aV = abs(lam_mid * Z)
            if aU > max_absU:
                max_absU = aU
            if aV > max_absV:
                max_absV = aV
        max_Q_phi = -1e300
        h_min = 1e300
        h_max_val = -1e300
        for i in range(n):
            if h[i] < h_min:
                h_min = h[i]
            if h[i] > h_max_val:
                h_max_val = h[i]
            if h[i] < band and lam[i] > 0.0:
                qphi = -(h_new[i] - h[i]) / dphi / lam[i]
                if qphi > max_Q_phi:
                    max_Q_phi = qphi
        return max_W, min_Z, max_absU, max_absV, max_Q_phi, h_min, h_max_val

    @njit(cache=True)
    def compression_scan(feet_p, feet_m, lo_p, hi_m):
        """Smallest same-family foot gap: (gap_p, idx_p, gap_m, idx_m)."""
        n = feet_p.shape[0]
        gp = 1e300
        ip = 0
        for i in range(lo_p, n - 1):
            d = feet_p[i + 1] - feet_p[i]
            if d < gp:
                gp = d
                ip = i
        gm = 1e300
        im = 0
        for i in range(hi_m - 1):
            d = feet_m[i + 1] - feet_m[i]
            if d < gm:
                gm = d
                im = i
        return gp, ip, gm, im

    @njit(cache=True)
    def gradient_scan(h, lam, band):
        """Max of |dh|/lam_mid outside the band, with its cell index."""
        n = h.shape[0]
        best = 0.0
        idx = 0
        for i in range(n - 1):
            h_mid = 0.5 * (h[i] + h[i + 1])
            if h_mid >= band:
                continue
            lam_mid = 0.5 * (lam[i] + lam[i + 1])
            if lam_mid <= 0.0:
                continue
            v = abs(h[i + 1] - h[i]) / lam_mid
            if v > best:
                best = v
                idx = i
        return best, idx
