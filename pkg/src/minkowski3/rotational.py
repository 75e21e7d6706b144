"""Rotational and circle-foliated spacelike CMC surfaces by profile ODEs.

A surface foliated by horizontal Euclidean circles of radius r(u) centered
at (a(u), b(u), u) has constant mean curvature H exactly when

    -1 + (c^2 + d^2) r^4 + r'^2 - r r'' - 2 H r (r'^2 - 1)^(3/2) = 0,
    a' = c r^2,   b' = d r^2,

where the center drift constants (c, d) must vanish unless H = 0 (the
minimal "shifted-center" family).  The rotational H = 0 solution is the
Lorentzian catenoid r = sinh(s); spacelike charts require r'^2 > 1 along
the profile and the full chart condition EG - F^2 > 0 when centers drift.

Integration is a classical fixed-step 4-stage Runge-Kutta scheme with an
event guard stopping at r'^2 - 1 <= guard or r <= guard; fixed stepping
keeps runs bit-reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.interpolate import CubicHermiteSpline

from .core import GeometryError
from .surfaces import SurfaceChart, graph_chart

__all__ = [
    "ProfileODEParams",
    "ProfileSolution",
    "HyperbolicCap",
    "catenoid_profile",
    "integrate_rotational",
    "integrate_riemann",
    "profile_chart",
    "hyperbolic_cap_chart",
]

#: guard band for the spacelike condition r'^2 > 1 and for r > 0
GUARD = 1e-6


@dataclass(frozen=True)
class ProfileODEParams:
    """Initial data and stepping for a profile integration.

    `H` is the target mean curvature (rotational family, requires c = d = 0);
    `c`, `d` drift the circle centers (minimal family, requires H = 0).
    Spacelike admissibility at the start demands |rp0| > 1.
    """

    H: float = 0.0
    c: float = 0.0
    d: float = 0.0
    r0: float = 1.0
    rp0: float = 1.5
    s0: float = 0.0
    s1: float = 1.0
    h: float = 1e-3

    def __post_init__(self):
        if self.h <= 0:
            raise GeometryError("step h must be positive")
        if self.s1 <= self.s0:
            raise GeometryError("span must be increasing")
        if self.r0 <= 0:
            raise GeometryError("initial radius must be positive")
        if self.rp0 * self.rp0 <= 1.0 + GUARD:
            raise GeometryError("spacelike admissibility requires |rp0| > 1")


@dataclass
class ProfileSolution:
    s: np.ndarray
    r: np.ndarray
    rp: np.ndarray
    a: np.ndarray
    b: np.ndarray
    params: ProfileODEParams
    #: max absolute residual of the printed ODE identity over interior samples
    residual_max: float = 0.0
    #: True when the integration stopped early at the guard band
    truncated: bool = False
    spacelike_violation: bool = False
    diagnostics: dict = field(default_factory=dict)


def _rpp(r: float, rp: float, H: float, c: float, d: float) -> float:
    """r'' solved once, analytically, from the curvature identity.

    The spacelike branch needs rp^2 > 1; inner integrator stages may dip
    below transiently near the guard band, where the clamped power keeps the
    step finite (the guard then stops the run cleanly).
    """
    q = max(rp * rp - 1.0, 0.0)
    return (-1.0 + (c * c + d * d) * r ** 4 + rp * rp
            - 2.0 * H * r * q ** 1.5) / r


def _identity_residual(r, rp, rpp, H, c, d):
    """The identity as printed (not rearranged), evaluated termwise."""
    return (-1.0 + (c * c + d * d) * r ** 4 + rp * rp - r * rpp
            - 2.0 * H * r * (rp * rp - 1.0) ** 1.5)


def _integrate(params: ProfileODEParams) -> ProfileSolution:
    H, c, d = params.H, params.c, params.d
    n = int(round((params.s1 - params.s0) / params.h))
    h = params.h

    def rhs(y):
        r, rp, _a, _b = y
        return np.array([rp, _rpp(r, rp, H, c, d), c * r * r, d * r * r])

    ys = np.empty((n + 1, 4))
    ys[0] = (params.r0, params.rp0, 0.0, 0.0)
    truncated = False
    last = n
    def at_guard(y):
        return y[0] <= GUARD or y[1] * y[1] - 1.0 <= GUARD

    for k in range(n):
        y = ys[k]
        if at_guard(y):
            truncated = True
            last = k
            break
        k1 = rhs(y)
        k2 = rhs(y + 0.5 * h * k1)
        k3 = rhs(y + 0.5 * h * k2)
        k4 = rhs(y + h * k3)
        y_next = y + (h / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)
        # reject the step (not just the next one) if it leaves the admissible set
        if not np.all(np.isfinite(y_next)) or at_guard(y_next):
            truncated = True
            last = k
            break
        ys[k + 1] = y_next
    ys = ys[: last + 1]
    s = params.s0 + h * np.arange(last + 1)
    r, rp, a, b = ys.T
    # plugging the rearranged r'' back into the printed identity catches
    # any algebra slip in the rearrangement itself
    rpp = np.array([_rpp(ri, rpi, H, c, d) for ri, rpi in zip(r, rp)])
    resid = np.abs(_identity_residual(r, rp, rpp, H, c, d))
    sol = ProfileSolution(
        s=s, r=r, rp=rp, a=a, b=b, params=params,
        residual_max=float(resid.max()) if len(resid) else 0.0,
        truncated=truncated,
        spacelike_violation=truncated,
        diagnostics={"steps": int(last)},
    )
    return sol


def integrate_rotational(params: ProfileODEParams) -> ProfileSolution:
    """Rotational profile with target mean curvature H (c = d = 0)."""
    if params.c != 0.0 or params.d != 0.0:
        raise GeometryError("rotational profiles require c = d = 0")
    return _integrate(params)


def integrate_riemann(params: ProfileODEParams) -> ProfileSolution:
    """Minimal circle-foliated profile with drifting centers (H = 0).

    c = d = 0 degenerates to the rotational minimal profile and is allowed.
    """
    if params.H != 0.0:
        raise GeometryError("center drift is only minimal: set H = 0")
    sol = _integrate(params)
    sol.spacelike_violation = sol.truncated or not _chart_spacelike(sol)
    return sol


def _chart_spacelike(sol: ProfileSolution, n_v: int = 64) -> bool:
    """Check W = EG - F^2 > 0 of the induced chart, sampled over v."""
    c, d = sol.params.c, sol.params.d
    vs = np.linspace(0.0, 2 * np.pi, n_v, endpoint=False)
    for r, rp, _a, _b in zip(sol.r, sol.rp, sol.a, sol.b):
        ap = c * r * r
        bp = d * r * r
        xu = np.stack(
            [ap + rp * np.cos(vs), bp + rp * np.sin(vs), np.ones_like(vs)], axis=1
        )
        e_val = xu[:, 0] ** 2 + xu[:, 1] ** 2 - 1.0
        f_val = -xu[:, 0] * r * np.sin(vs) + xu[:, 1] * r * np.cos(vs)
        w = e_val * r * r - f_val ** 2
        if np.any(w <= 0):
            return False
    return True


def profile_chart(sol: ProfileSolution) -> SurfaceChart:
    """Chart X(u, v) = (a + r cos v, b + r sin v, u) from an integrated profile.

    r, a, b are cubic Hermite interpolants of the integrated samples, so
    the measured curvature of the chart reflects the numerical solution
    (second derivatives come from the interpolant, not from the governing
    identity).
    """
    if len(sol.s) < 4:
        raise GeometryError("profile too short to interpolate")
    c, d = sol.params.c, sol.params.d
    r_sp = CubicHermiteSpline(sol.s, sol.r, sol.rp)
    a_sp = CubicHermiteSpline(sol.s, sol.a, c * sol.r ** 2)
    b_sp = CubicHermiteSpline(sol.s, sol.b, d * sol.r ** 2)
    r1, a1, b1 = r_sp.derivative(), a_sp.derivative(), b_sp.derivative()
    r2, a2, b2 = r1.derivative(), a1.derivative(), b1.derivative()

    def x(u, v):
        return np.array([a_sp(u) + r_sp(u) * np.cos(v), b_sp(u) + r_sp(u) * np.sin(v), u])

    def xu(u, v):
        return np.array([a1(u) + r1(u) * np.cos(v), b1(u) + r1(u) * np.sin(v), 1.0])

    def xv(u, v):
        return np.array([-r_sp(u) * np.sin(v), r_sp(u) * np.cos(v), 0.0])

    def xuu(u, v):
        return np.array([a2(u) + r2(u) * np.cos(v), b2(u) + r2(u) * np.sin(v), 0.0])

    def xuv(u, v):
        return np.array([-r1(u) * np.sin(v), r1(u) * np.cos(v), 0.0])

    def xvv(u, v):
        return np.array([-r_sp(u) * np.cos(v), -r_sp(u) * np.sin(v), 0.0])

    dom = ((float(sol.s[0]), float(sol.s[-1])), (0.0, 2 * np.pi))
    return SurfaceChart(x, xu, xv, xuu, xuv, xvv, domain=dom)


def catenoid_profile(s: float) -> tuple[float, float]:
    """Closed-form minimal rotational profile r = sinh(s) for s > 0.

    The governing identity -1 + r'^2 - r r'' vanishes identically for it
    (cosh^2 - sinh^2 = 1), so the returned residual is exactly zero.
    """
    if s <= 0:
        raise GeometryError("the catenoid profile needs s > 0")
    return float(np.sinh(s)), 0.0


def catenoid_chart(span=(0.5, 3.0)) -> SurfaceChart:
    """Analytic chart X(u, v) = (sinh u cos v, sinh u sin v, u)."""
    sh, ch = np.sinh, np.cosh

    def x(u, v):
        return np.array([sh(u) * np.cos(v), sh(u) * np.sin(v), u])

    def xu(u, v):
        return np.array([ch(u) * np.cos(v), ch(u) * np.sin(v), 1.0])

    def xv(u, v):
        return np.array([-sh(u) * np.sin(v), sh(u) * np.cos(v), 0.0])

    def xuu(u, v):
        return np.array([sh(u) * np.cos(v), sh(u) * np.sin(v), 0.0])

    def xuv(u, v):
        return np.array([-ch(u) * np.sin(v), ch(u) * np.cos(v), 0.0])

    def xvv(u, v):
        return np.array([-sh(u) * np.cos(v), -sh(u) * np.sin(v), 0.0])

    return SurfaceChart(x, xu, xv, xuu, xuv, xvv, domain=(span, (0.0, 2 * np.pi)))


@dataclass(frozen=True)
class HyperbolicCap:
    """The compact piece of the hyperboloid x^2+y^2-z^2 = -r^2, z > 0 with
    z <= sqrt(r^2 + R^2); its boundary is the circle of radius R at that
    height and its mean curvature is 1/r with the future orientation."""

    r: float
    R: float

    def __post_init__(self):
        if self.r <= 0 or self.R <= 0:
            raise GeometryError("cap parameters r, R must be positive")

    @property
    def rim_height(self) -> float:
        return float(np.sqrt(self.r ** 2 + self.R ** 2))

    @property
    def height(self) -> float:
        """Vertex-to-boundary height sqrt(r^2 + R^2) - r."""
        return self.rim_height - self.r


def hyperbolic_cap_chart(r: float, R: float, rim_at_zero: bool = False):
    """Graph chart u(x, y) = sqrt(r^2 + x^2 + y^2) over the disk of radius R.

    With rim_at_zero the graph is translated down by sqrt(r^2 + R^2) so the
    boundary circle lies in {z = 0}.  Returns (chart, cap descriptor).
    """
    cap = HyperbolicCap(r, R)
    shift = cap.rim_height if rim_at_zero else 0.0

    def w(x, y):
        return np.sqrt(r * r + x * x + y * y)

    chart = graph_chart(
        lambda x, y: w(x, y) - shift,
        fx=lambda x, y: x / w(x, y),
        fy=lambda x, y: y / w(x, y),
        fxx=lambda x, y: (y * y + r * r) / w(x, y) ** 3,
        fxy=lambda x, y: -x * y / w(x, y) ** 3,
        fyy=lambda x, y: (x * x + r * r) / w(x, y) ** 3,
        domain=((-R, R), (-R, R)),
    )
    return chart, cap
