"""Curves in Minkowski 3-space: causal type, reparametrization, Frenet frames.

A curve is carried around as a `CurveJet`: the map alpha together with
evaluators for its first three derivatives (closed-form callbacks, or
central finite differences built from a position-only callback).

Frenet data splits into five cases: timelike curves, spacelike curves with
spacelike / timelike / lightlike normal, and lightlike curves.  Curvature
exists except in the two null-normal cases.  Frame conventions:

  timelike            <T,T>=-1, N=T'/k spacelike, B=TxN spacelike
  spacelike, N space  <T,T>=1,  N=T'/k spacelike, B=TxN timelike
  spacelike, N time   <T,T>=1,  N=T'/k timelike,  B=TxN spacelike
  spacelike, N null   N=T' lightlike, B lightlike, <N,B>=1, <T,B>=0
  lightlike           T lightlike, N=alpha'' unit spacelike, B lightlike,
                      <N,B>=0, <T,B>=1

The pairing for the last case is the unique one consistent with the
derivative system T'=N, N'=tau T - B, B'=-tau N.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, NamedTuple, Optional

import numpy as np
from scipy.integrate import solve_ivp

from .core import (
    REL_TOL,
    AmbiguousCaseError,
    CausalClass,
    CausalTypeError,
    GeometryError,
    as_vec3,
    causal_class,
    cross,
    hyperbolic_angle,
    lorentz_dot,
    lorentz_norm,
)

__all__ = [
    "CurveJet",
    "FrenetCase",
    "FrenetFrame",
    "PlaneCase",
    "BertrandFit",
    "classify_curve",
    "reparam_arclength",
    "reparam_pseudo_arclength",
    "frenet",
    "curvature_torsion_general",
    "generate_constant_curvature",
    "theorem_angle_check",
    "is_helix",
    "bertrand_fit",
    "export_curve_csv",
]

#: relative tolerance for deciding the causal case of T' in `frenet`
CASE_TOL = 1e-9


class CurveJet:
    """A curve with evaluators for alpha, alpha', alpha'', alpha'''.

    Missing derivative callbacks are replaced by central finite differences
    of step `h_fd` (default 1e-4 times the domain length); the third
    derivative uses a Richardson-extrapolated stencil.  Evaluators must be
    re-entrant; everything here is a pure closure over them.
    """

    def __init__(self, x, dx=None, ddx=None, dddx=None,
                 domain=(0.0, 1.0), h_fd: float | None = None):
        t0, t1 = float(domain[0]), float(domain[1])
        if not t1 > t0:
            raise GeometryError("domain must be a nondegenerate interval")
        self.domain = (t0, t1)
        self.h_fd = float(h_fd) if h_fd is not None else 1e-4 * (t1 - t0)
        self._x = x
        h = self.h_fd
        if dx is None:
            dx = lambda t: (self.position(t + h) - self.position(t - h)) / (2 * h)
        if ddx is None:
            ddx = lambda t: (
                self.position(t + h) - 2 * self.position(t) + self.position(t - h)
            ) / (h * h)
        if dddx is None:
            def dddx(t, _d2=ddx):
                # Richardson extrapolation of the central difference of alpha''
                d_h = (_d2(t + h) - _d2(t - h)) / (2 * h)
                d_2h = (_d2(t + 2 * h) - _d2(t - 2 * h)) / (4 * h)
                return (4.0 * d_h - d_2h) / 3.0
        self._dx, self._ddx, self._dddx = dx, ddx, dddx

    def position(self, t: float) -> np.ndarray:
        return as_vec3(self._x(t))

    def velocity(self, t: float) -> np.ndarray:
        return as_vec3(self._dx(t))

    def acceleration(self, t: float) -> np.ndarray:
        return as_vec3(self._ddx(t))

    def jerk(self, t: float) -> np.ndarray:
        return as_vec3(self._dddx(t))

    def transformed(self, motion) -> "CurveJet":
        """Image of the curve under a rigid motion (linear part + translation)."""
        a, b = motion.linear, motion.translation
        return CurveJet(
            lambda t: a @ self.position(t) + b,
            lambda t: a @ self.velocity(t),
            lambda t: a @ self.acceleration(t),
            lambda t: a @ self.jerk(t),
            domain=self.domain,
            h_fd=self.h_fd,
        )


class FrenetCase(Enum):
    TIMELIKE = "timelike"
    SPACELIKE_SP_N = "spacelike, spacelike normal"
    SPACELIKE_TL_N = "spacelike, timelike normal"
    SPACELIKE_LL_N = "spacelike, lightlike normal"
    LIGHTLIKE = "lightlike"


@dataclass(frozen=True)
class FrenetFrame:
    T: np.ndarray
    N: np.ndarray
    B: np.ndarray
    case: FrenetCase
    kappa: Optional[float]  # None in the two null-normal cases
    tau: float


def classify_curve(jet: CurveJet, t: float) -> CausalClass:
    """Causal character of the curve at t = causal character of alpha'(t)."""
    return causal_class(jet.velocity(t))


def _check_constant_class(jet: CurveJet, expected, n: int = 129) -> None:
    ts = np.linspace(jet.domain[0], jet.domain[1], n)
    for t in ts:
        c = causal_class(jet.velocity(t))
        if c not in expected:
            raise CausalTypeError(
                f"causal type changes within the requested span: {c} at t={t:g}"
            )


_IVP_OPTS = dict(rtol=1e-12, atol=1e-14, dense_output=True, method="RK45")


def _monotone_map(rate: Callable[[float], float], t0: float, domain):
    """Solve s(t) with ds/dt = rate > 0, s(t0) = 0; return (s_lo, s_hi, t_of_s)."""
    t_lo, t_hi = domain

    def f_t(t, _y):
        return [rate(t)]

    s_hi = 0.0
    sol_fwd = None
    if t_hi > t0:
        sol_fwd = solve_ivp(f_t, (t0, t_hi), [0.0], **_IVP_OPTS)
        s_hi = float(sol_fwd.y[0, -1])
    s_lo = 0.0
    sol_bwd = None
    if t_lo < t0:
        sol_bwd = solve_ivp(f_t, (t0, t_lo), [0.0], **_IVP_OPTS)
        s_lo = float(sol_bwd.y[0, -1])

    def f_s(_s, y):
        return [1.0 / rate(float(y[0]))]

    inv_fwd = solve_ivp(f_s, (0.0, s_hi), [t0], **_IVP_OPTS) if s_hi > 0 else None
    inv_bwd = solve_ivp(f_s, (0.0, s_lo), [t0], **_IVP_OPTS) if s_lo < 0 else None

    def t_of_s(s: float) -> float:
        if s >= 0:
            if inv_fwd is None:
                return t0
            s = min(s, s_hi)
            return float(inv_fwd.sol(s)[0])
        if inv_bwd is None:
            return t0
        s = max(s, s_lo)
        return float(inv_bwd.sol(s)[0])

    return s_lo, s_hi, t_of_s


def reparam_arclength(jet: CurveJet, t0: float) -> CurveJet:
    """Arc-length reparametrization of a (strictly) spacelike or timelike curve.

    The returned jet beta satisfies |<beta', beta'>| = 1, with beta(0) the
    original point alpha(t0).  The unit-speed identity holds to rounding:
    the chain-rule factors are evaluated analytically at the inverted
    parameter, so errors in the inversion only slide along the curve.
    """
    c0 = classify_curve(jet, t0)
    if c0 is CausalClass.LIGHTLIKE:
        raise CausalTypeError("arc length needs a spacelike or timelike curve")
    _check_constant_class(jet, {c0})
    eps = 1.0 if c0 is CausalClass.SPACELIKE else -1.0

    def speed(t: float) -> float:
        return float(lorentz_norm(jet.velocity(t)))

    s_lo, s_hi, t_of_s = _monotone_map(speed, t0, jet.domain)

    def dv_dt(t: float) -> float:
        # d|alpha'|/dt = eps <alpha'', alpha'> / |alpha'|
        return eps * float(lorentz_dot(jet.acceleration(t), jet.velocity(t))) / speed(t)

    def beta(s):
        return jet.position(t_of_s(s))

    def dbeta(s):
        t = t_of_s(s)
        return jet.velocity(t) / speed(t)

    def ddbeta(s):
        t = t_of_s(s)
        v = speed(t)
        tp = 1.0 / v
        tpp = -dv_dt(t) / v ** 3
        return jet.acceleration(t) * tp * tp + jet.velocity(t) * tpp

    def dddbeta(s):
        t = t_of_s(s)
        v = speed(t)
        vd = dv_dt(t)
        vdd = (
            eps
            * (
                float(lorentz_dot(jet.jerk(t), jet.velocity(t)))
                + float(lorentz_dot(jet.acceleration(t), jet.acceleration(t)))
            )
            / v
            - vd * vd / v
        )
        tp = 1.0 / v
        tpp = -vd / v ** 3
        tppp = -vdd / v ** 4 + 3.0 * vd * vd / v ** 5
        return (
            jet.jerk(t) * tp ** 3
            + 3.0 * jet.acceleration(t) * tp * tpp
            + jet.velocity(t) * tppp
        )

    return CurveJet(beta, dbeta, ddbeta, dddbeta, domain=(s_lo, s_hi), h_fd=jet.h_fd)


def reparam_pseudo_arclength(jet: CurveJet, t0: float) -> CurveJet:
    """Pseudo-arc-length reparametrization of a lightlike curve.

    Normalizes |beta''| = 1 by solving phi'(s) = |alpha''(phi)|^(-1/2).
    Requires alpha'' spacelike and nonzero along the span.  The lightlike
    acceptance tolerance widens with h_fd^2 so that position-only jets,
    whose derivative products carry stencil noise, are still accepted.
    """
    light_tol = 1e-9 + 100.0 * jet.h_fd ** 2
    ts = np.linspace(jet.domain[0], jet.domain[1], 65)
    for t in ts:
        vel = jet.velocity(t)
        q = float(lorentz_dot(vel, vel))
        if abs(q) > light_tol * (1.0 + float((vel * vel).sum())):
            raise CausalTypeError(
                f"curve is not lightlike at t={t:g} (<a',a'> = {q:.3e})"
            )
        acc = jet.acceleration(t)
        if float(lorentz_dot(acc, acc)) <= REL_TOL * (1.0 + float((acc * acc).sum())):
            raise GeometryError("alpha'' must be spacelike and nonzero for pseudo-arc length")

    def w(t: float) -> float:
        return float(lorentz_norm(jet.acceleration(t)))

    s_lo, s_hi, t_of_s = _monotone_map(lambda t: np.sqrt(w(t)), t0, jet.domain)

    def wdot(t: float) -> float:
        return float(lorentz_dot(jet.jerk(t), jet.acceleration(t))) / w(t)

    def beta(s):
        return jet.position(t_of_s(s))

    def dbeta(s):
        t = t_of_s(s)
        return jet.velocity(t) / np.sqrt(w(t))

    def ddbeta(s):
        t = t_of_s(s)
        wt = w(t)
        pp = 1.0 / np.sqrt(wt)
        ppp = -0.5 * wdot(t) / (wt * wt)
        return jet.acceleration(t) * pp * pp + jet.velocity(t) * ppp

    return CurveJet(beta, dbeta, ddbeta, None, domain=(s_lo, s_hi), h_fd=jet.h_fd)


def _classify_normal(tp: np.ndarray) -> CausalClass:
    """Causal case of T', with an ambiguity band around the null cone."""
    q = float(lorentz_dot(tp, tp))
    scale = 1.0 + float((tp * tp).sum())
    if abs(q) <= REL_TOL * scale:
        return CausalClass.LIGHTLIKE
    if abs(q) <= CASE_TOL * scale:
        raise AmbiguousCaseError(
            "T' sits within tolerance of the light cone; causal case is ambiguous"
        )
    return CausalClass.SPACELIKE if q > 0 else CausalClass.TIMELIKE


def _null_partner(unit: np.ndarray, null: np.ndarray, pair_with_null: bool) -> np.ndarray:
    """The unique lightlike B with either <B,null>=1, <B,unit>=0 (pair_with_null)
    or <B,null>=1 ... see below.

    pair_with_null=True : unit=T spacelike, null=N;   <B,B>=0, <B,T>=0, <B,N>=1
    pair_with_null=False: null=T lightlike, unit=N;   <B,B>=0, <B,N>=0, <B,T>=1
    """
    w = np.array([0.0, 0.0, 1.0])  # <w, null> = -null_z, nonzero for null vectors
    d = float(lorentz_dot(w, null))
    if abs(d) < 1e-14:
        raise GeometryError("degenerate null direction")
    c = 1.0 / d
    if pair_with_null:
        t, n = unit, null
        a = -c * float(lorentz_dot(w, t))
        b = -0.5 * (a * a + c * c * float(lorentz_dot(w, w)) + 2 * a * c * float(lorentz_dot(t, w)))
        return a * t + b * n + c * w
    t, n = null, unit
    b = -c * float(lorentz_dot(w, n))
    a = -0.5 * (b * b + c * c * float(lorentz_dot(w, w)) + 2 * b * c * float(lorentz_dot(n, w)))
    return a * t + b * n + c * w


def _frame_at(jet: CurveJet, s: float):
    """Frame (T, N, B) and case at s, without torsion."""
    t_vec = jet.velocity(s)
    cc = causal_class(t_vec)
    q = float(lorentz_dot(t_vec, t_vec))
    if cc is CausalClass.LIGHTLIKE:
        n_vec = jet.acceleration(s)
        if abs(float(lorentz_dot(n_vec, n_vec)) - 1.0) > 1e-6:
            raise GeometryError("lightlike curve must be pseudo-arc-length parametrized")
        b_vec = _null_partner(n_vec, t_vec, pair_with_null=False)
        return t_vec, n_vec, b_vec, FrenetCase.LIGHTLIKE, None
    if abs(abs(q) - 1.0) > 1e-6:
        raise GeometryError("curve must be arc-length parametrized (|<T,T>| = 1)")
    tp = jet.acceleration(s)
    if float(np.linalg.norm(tp)) <= 1e-12:
        raise GeometryError("T' vanishes: straight line, no Frenet frame")
    if cc is CausalClass.TIMELIKE:
        kappa = float(lorentz_norm(tp))
        n_vec = tp / kappa
        b_vec = cross(t_vec, n_vec)
        return t_vec, n_vec, b_vec, FrenetCase.TIMELIKE, kappa
    nc = _classify_normal(tp)
    if nc is CausalClass.SPACELIKE:
        kappa = float(lorentz_norm(tp))
        n_vec = tp / kappa
        b_vec = cross(t_vec, n_vec)
        return t_vec, n_vec, b_vec, FrenetCase.SPACELIKE_SP_N, kappa
    if nc is CausalClass.TIMELIKE:
        kappa = float(lorentz_norm(tp))
        n_vec = tp / kappa
        b_vec = cross(t_vec, n_vec)
        return t_vec, n_vec, b_vec, FrenetCase.SPACELIKE_TL_N, kappa
    n_vec = tp
    b_vec = _null_partner(t_vec, n_vec, pair_with_null=True)
    return t_vec, n_vec, b_vec, FrenetCase.SPACELIKE_LL_N, None


def _frame_derivative(jet: CurveJet, s: float, index: int) -> np.ndarray:
    """d/ds of the frame field (0=T, 1=N, 2=B) by a five-point stencil."""
    h = jet.h_fd

    def field(u: float) -> np.ndarray:
        fr = _frame_at(jet, u)
        return fr[index]

    return (
        -field(s + 2 * h) + 8.0 * field(s + h) - 8.0 * field(s - h) + field(s - 2 * h)
    ) / (12.0 * h)


def frenet(jet: CurveJet, s: float) -> FrenetFrame:
    """Frenet frame, causal case, curvature and torsion at s.

    The jet must be arc-length parametrized (pseudo-arc-length for lightlike
    curves).  N' is obtained by numerically differentiating the frame field,
    so torsion carries an O(h_fd^4) stencil error.
    """
    t_vec, n_vec, b_vec, case, kappa = _frame_at(jet, s)
    np_vec = _frame_derivative(jet, s, 1)
    if case is FrenetCase.TIMELIKE:
        tau = float(lorentz_dot(np_vec, b_vec))
    elif case is FrenetCase.SPACELIKE_SP_N:
        tau = -float(lorentz_dot(np_vec, b_vec))
    elif case is FrenetCase.SPACELIKE_TL_N:
        tau = float(lorentz_dot(np_vec, b_vec))
    elif case is FrenetCase.SPACELIKE_LL_N:
        tau = float(lorentz_dot(np_vec, b_vec))  # <N',B> = tau <N,B> = tau
    else:  # LIGHTLIKE: N' = tau T - B and <T,B>=1 give <N',B> = tau
        tau = float(lorentz_dot(np_vec, b_vec))
    return FrenetFrame(t_vec, n_vec, b_vec, case, kappa, tau)


#: derivative system matrix per case, rows (T', N', B') in the frame basis
def frenet_matrix(case: FrenetCase, kappa: Optional[float], tau: float) -> np.ndarray:
    k = 0.0 if kappa is None else kappa
    if case is FrenetCase.TIMELIKE:
        return np.array([[0, k, 0], [k, 0, tau], [0, -tau, 0.0]])
    if case is FrenetCase.SPACELIKE_SP_N:
        return np.array([[0, k, 0], [-k, 0, tau], [0, tau, 0.0]])
    if case is FrenetCase.SPACELIKE_TL_N:
        return np.array([[0, k, 0], [k, 0, tau], [0, tau, 0.0]])
    if case is FrenetCase.SPACELIKE_LL_N:
        return np.array([[0, 1, 0], [0, tau, 0], [-1, 0, -tau]])
    return np.array([[0, 1, 0], [tau, 0, -1], [0, -tau, 0.0]])


def curvature_torsion_general(jet: CurveJet, t: float) -> tuple[float, float]:
    """Curvature and torsion of a timelike curve without reparametrizing:

        kappa = |a' x a''| / (-<a',a'>)^(3/2)
        tau   = det(a', a'', a''') / |a' x a''|^2

    Straight pieces return (0, 0).  The torsion sign matches the arc-length
    definition tau = <N', B>.
    """
    v = jet.velocity(t)
    if causal_class(v) is not CausalClass.TIMELIKE:
        raise CausalTypeError("the closed-form kappa/tau formulas assume a timelike curve")
    a = jet.acceleration(t)
    cva = cross(v, a)
    cva_sq = float(lorentz_dot(cva, cva))
    speed_sq = -float(lorentz_dot(v, v))
    scale = (1.0 + float((v * v).sum())) * (1.0 + float((a * a).sum()))
    if abs(cva_sq) <= REL_TOL * scale:
        return 0.0, 0.0
    kappa = float(np.sqrt(abs(cva_sq))) / speed_sq ** 1.5
    j = jet.jerk(t)
    tau = float(np.linalg.det(np.column_stack([v, a, j]))) / abs(cva_sq)
    return kappa, tau


class PlaneCase(Enum):
    """Vector plane + causal type of the constant-curvature curve it carries."""

    SPACELIKE_PLANE = "spacelike plane"
    TIMELIKE_PLANE_SPACELIKE_CURVE = "timelike plane, spacelike curve"
    TIMELIKE_PLANE_TIMELIKE_CURVE = "timelike plane, timelike curve"
    LIGHTLIKE_PLANE = "lightlike plane"


def generate_constant_curvature(plane_case: PlaneCase, a: float, b: float = 0.0,
                                span: tuple[float, float] = (-1.0, 1.0)) -> CurveJet:
    """Unit-speed planar curve of constant curvature |a|.

    Circles in spacelike planes, hyperbola branches in timelike planes
    (one spacelike, one timelike curve), and the parabola in a lightlike
    plane, where `a` is the slope coefficient c of the spacelike ruling and
    no curvature is defined (null normal).
    """
    a = float(a)
    b = float(b)
    if plane_case is not PlaneCase.LIGHTLIKE_PLANE and a == 0.0:
        raise GeometryError("constant curvature a must be nonzero")
    if plane_case is PlaneCase.SPACELIKE_PLANE:
        r = 1.0 / a
        x = lambda s: np.array([r * np.cos(a * s + b), r * np.sin(a * s + b), 0.0])
        dx = lambda s: np.array([-np.sin(a * s + b), np.cos(a * s + b), 0.0])
        ddx = lambda s: np.array([-a * np.cos(a * s + b), -a * np.sin(a * s + b), 0.0])
        dddx = lambda s: np.array([a * a * np.sin(a * s + b), -a * a * np.cos(a * s + b), 0.0])
    elif plane_case is PlaneCase.TIMELIKE_PLANE_SPACELIKE_CURVE:
        r = 1.0 / a
        x = lambda s: np.array([0.0, r * np.sinh(a * s + b), r * np.cosh(a * s + b)])
        dx = lambda s: np.array([0.0, np.cosh(a * s + b), np.sinh(a * s + b)])
        ddx = lambda s: np.array([0.0, a * np.sinh(a * s + b), a * np.cosh(a * s + b)])
        dddx = lambda s: np.array([0.0, a * a * np.cosh(a * s + b), a * a * np.sinh(a * s + b)])
    elif plane_case is PlaneCase.TIMELIKE_PLANE_TIMELIKE_CURVE:
        r = 1.0 / a
        x = lambda s: np.array([0.0, r * np.cosh(a * s + b), r * np.sinh(a * s + b)])
        dx = lambda s: np.array([0.0, np.sinh(a * s + b), np.cosh(a * s + b)])
        ddx = lambda s: np.array([0.0, a * np.cosh(a * s + b), a * np.sinh(a * s + b)])
        dddx = lambda s: np.array([0.0, a * a * np.sinh(a * s + b), a * a * np.cosh(a * s + b)])
    else:
        c = a
        x = lambda s: np.array([s, c * s + 0.5 * s * s, c * s + 0.5 * s * s])
        dx = lambda s: np.array([1.0, c + s, c + s])
        ddx = lambda s: np.array([0.0, 1.0, 1.0])
        dddx = lambda s: np.zeros(3)
    return CurveJet(x, dx, ddx, dddx, domain=span)


def theorem_angle_check(jet: CurveJet, v, s: float) -> tuple[float, float]:
    """For a unit-speed timelike planar curve: curvature vs. turning rate.

    Returns (kappa(s), |phi'(s)|) where phi is the hyperbolic angle between
    T(s) and the fixed unit future timelike vector v of the same plane; the
    two agree for planar timelike curves.
    """
    v = as_vec3(v)
    if causal_class(jet.velocity(s)) is not CausalClass.TIMELIKE:
        raise CausalTypeError("angle/curvature comparison is for timelike curves")
    if float(np.linalg.norm(jet.acceleration(s))) <= 1e-12:
        kappa = 0.0  # straight line: zero curvature, constant angle
    else:
        fr = frenet(jet, s)
        if fr.case is not FrenetCase.TIMELIKE:
            raise CausalTypeError("angle/curvature comparison is for timelike curves")
        kappa = fr.kappa
    h = jet.h_fd

    def phi(u: float) -> float:
        return hyperbolic_angle(jet.velocity(u), v)

    dphi = (phi(s + h) - phi(s - h)) / (2 * h)
    return kappa, abs(float(dphi))


def is_helix(kappa_tau_samples) -> bool:
    """True iff tau/kappa is constant across the samples.

    Constancy means stdev(tau/kappa) / (1 + |mean|) <= 1e-6; curvature must
    be positive on every sample.
    """
    arr = np.asarray(kappa_tau_samples, dtype=float)
    if arr.ndim != 2 or arr.shape[1] != 2 or len(arr) < 2:
        raise GeometryError("need at least two (kappa, tau) samples")
    kappa, tau = arr[:, 0], arr[:, 1]
    if np.any(kappa <= 0):
        raise GeometryError("helix test requires kappa > 0 on all samples")
    ratio = tau / kappa
    return bool(np.std(ratio) / (1.0 + abs(float(np.mean(ratio)))) <= 1e-6)


class BertrandFit(NamedTuple):
    A: float
    B: float
    #: True when some nontrivial (A,B) also fits A*kappa + B*tau = 0,
    #: i.e. the samples lie on a line through the origin (a helix).
    helix_degenerate: bool


def bertrand_fit(kappa_tau_samples, residual_tol: float = 1e-6) -> Optional[BertrandFit]:
    """Least-squares constants with A*kappa_i + B*tau_i = 1, or None.

    Returns the minimum-norm solution when the fit is underdetermined
    (e.g. constant kappa, tau).  The fit is accepted only if the maximum
    residual |A*kappa_i + B*tau_i - 1| is at most `residual_tol`.
    """
    arr = np.asarray(kappa_tau_samples, dtype=float)
    if arr.ndim != 2 or arr.shape[1] != 2 or len(arr) < 3:
        raise GeometryError("need at least three (kappa, tau) samples")
    rhs = np.ones(len(arr))
    sol, _res, _rank, sv = np.linalg.lstsq(arr, rhs, rcond=None)
    resid = arr @ sol - rhs
    if float(np.max(np.abs(resid))) > residual_tol:
        return None
    helix = bool(sv[-1] <= 1e-9 * max(sv[0], 1e-300))
    return BertrandFit(float(sol[0]), float(sol[1]), helix)


def export_curve_csv(jet: CurveJet, ts, path, kappa_tau=None) -> None:
    """Write a polyline CSV with columns t,x,y,z[,kappa,tau]."""
    ts = np.asarray(ts, dtype=float)
    with open(path, "w") as fh:
        if kappa_tau is None:
            fh.write("t,x,y,z\n")
            for t in ts:
                p = jet.position(t)
                fh.write(f"{t:.17g},{p[0]:.17g},{p[1]:.17g},{p[2]:.17g}\n")
        else:
            fh.write("t,x,y,z,kappa,tau\n")
            for t, (k, tau) in zip(ts, kappa_tau):
                p = jet.position(t)
                kv = float("nan") if k is None else k
                fh.write(
                    f"{t:.17g},{p[0]:.17g},{p[1]:.17g},{p[2]:.17g},{kv:.17g},{tau:.17g}\n"
                )
