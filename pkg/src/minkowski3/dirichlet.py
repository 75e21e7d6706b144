"""Finite-difference Dirichlet solver for the constant-mean-curvature graph equation.

The graph z = u(x, y) over a plane domain Omega has mean curvature H (with
the upwards orientation) exactly when

    div( Du / sqrt(1 + eps |Du|^2) ) = 2 H,      u = 0 on the boundary,

with eps = +1 for the Euclidean ambient and eps = -1 for the Lorentzian
one, where the solution must in addition be spacelike: |Du| < 1.

Discretization: conservative half-node flux differencing on a uniform grid
(second order), with Shortley-Weller-style unequal arms where a grid arm
crosses the curved or polygonal boundary, so u = 0 holds exactly on the
boundary trace.  The nonlinear system is solved by damped Newton steps with
a sparse finite-difference Jacobian (9-point stencil coloring), continuing
in H from the trivial solution at H = 0 with automatic step halving.

Solvability differs sharply by ambient: the Lorentzian problem is solvable
for any H on bounded convex domains, while the Euclidean one requires the
boundary curvature to dominate H; disks accept H <= 1/R (the hemisphere is
the borderline case) and convex polygons are screened with a rolling-disc
surrogate, refusing targets it cannot certify.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np
import scipy.sparse as sp
from scipy.sparse.linalg import splu

from .core import GeometryError

__all__ = [
    "Disk",
    "ConvexPolygon",
    "GridDomain",
    "SolverConfig",
    "GraphSolution",
    "ContinuationStallError",
    "SolvabilityError",
    "SpacelikeViolationError",
    "cmc_operator_residual",
    "solve_dirichlet",
    "height_bound_report",
    "gradient_boundary_check",
    "exact_cap_values",
]

_THETA_MIN = 1e-3


class ContinuationStallError(GeometryError):
    """Continuation step halving exhausted without Newton convergence."""


class SolvabilityError(GeometryError):
    """The Euclidean curvature condition cannot be certified for this input."""


class SpacelikeViolationError(GeometryError):
    """A Lorentzian-mode gradient reached the guard band."""


@dataclass(frozen=True)
class Disk:
    R: float

    def __post_init__(self):
        if self.R <= 0:
            raise GeometryError("disk radius must be positive")

    def bbox(self):
        return (-self.R, self.R, -self.R, self.R)

    def inside(self, x, y):
        return x * x + y * y < self.R * self.R

    def boundary_distance(self, x, y):
        return self.R - np.hypot(x, y)

    def exit_fraction(self, x, y, dx, dy, h):
        """Fraction t in (0,1] where (x,y) + t*h*(dx,dy) crosses the boundary."""
        a = h * h * (dx * dx + dy * dy)
        b = 2 * h * (x * dx + y * dy)
        c = x * x + y * y - self.R * self.R
        disc = b * b - 4 * a * c
        t = (-b + np.sqrt(max(disc, 0.0))) / (2 * a)
        return min(max(t, 0.0), 1.0)

    def max_boundary_radius(self):
        return self.R

    def rolling_radius(self):
        return self.R


@dataclass(frozen=True)
class ConvexPolygon:
    vertices: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.vertices, dtype=float)
        if v.ndim != 2 or v.shape[1] != 2 or len(v) < 3:
            raise GeometryError("polygon needs at least three 2D vertices")
        # normalize to counterclockwise order
        area2 = 0.0
        for i in range(len(v)):
            x0, y0 = v[i]
            x1, y1 = v[(i + 1) % len(v)]
            area2 += x0 * y1 - x1 * y0
        if area2 < 0:
            v = v[::-1].copy()
        crosses = []
        for i in range(len(v)):
            a = v[(i + 1) % len(v)] - v[i]
            b = v[(i + 2) % len(v)] - v[(i + 1) % len(v)]
            crosses.append(a[0] * b[1] - a[1] * b[0])
        if min(crosses) <= 0:
            raise GeometryError("polygon must be strictly convex")
        object.__setattr__(self, "vertices", v)
        # outward edge normals and offsets: n . x <= b inside
        n = []
        b = []
        for i in range(len(v)):
            d = v[(i + 1) % len(v)] - v[i]
            nn = np.array([d[1], -d[0]])
            nn = nn / np.linalg.norm(nn)
            n.append(nn)
            b.append(float(nn @ v[i]))
        object.__setattr__(self, "_normals", np.asarray(n))
        object.__setattr__(self, "_offsets", np.asarray(b))

    def bbox(self):
        v = self.vertices
        return (v[:, 0].min(), v[:, 0].max(), v[:, 1].min(), v[:, 1].max())

    def inside(self, x, y):
        p = np.array([x, y])
        return bool(np.all(self._normals @ p < self._offsets))

    def boundary_distance(self, x, y):
        p = np.array([x, y])
        return float(np.min(self._offsets - self._normals @ p))

    def exit_fraction(self, x, y, dx, dy, h):
        p = np.array([x, y])
        d = h * np.array([dx, dy])
        best = 1.0
        for nn, bb in zip(self._normals, self._offsets):
            nd = float(nn @ d)
            if nd > 0:
                t = (bb - float(nn @ p)) / nd
                if 0.0 <= t < best:
                    best = t
        return best

    def max_boundary_radius(self):
        return float(np.max(np.linalg.norm(self.vertices, axis=1)))

    def rolling_radius(self, n_samples: int = 64):
        """Smallest radius of a disc that can touch every boundary point while
        containing the polygon; 1/rolling_radius plays the role of the
        boundary curvature in the Euclidean solvability screen."""
        v = self.vertices
        worst = 0.0
        for i in range(len(v)):
            p0, p1 = v[i], v[(i + 1) % len(v)]
            nn = -self._normals[i]  # inward
            for t in np.linspace(0.0, 1.0, n_samples):
                p = p0 + t * (p1 - p0)
                for q in v:
                    d = q - p
                    denom = 2.0 * float(d @ nn)
                    if denom > 1e-12:
                        worst = max(worst, float(d @ d) / denom)
        return worst


class GridDomain:
    """Uniform grid over a disk or convex polygon with boundary arm data.

    Interior nodes are the grid points strictly inside the domain; each of
    their four axis arms either reaches another interior node (length h) or
    crosses the boundary at length theta*h, where the value u = 0 is imposed
    exactly.  Nodes with at least one shortened arm form the boundary ring.
    """

    def __init__(self, shape, h: float):
        if h <= 0:
            raise GeometryError("grid spacing must be positive")
        self.shape = shape
        self.h = float(h)
        x0, x1, y0, y1 = shape.bbox()
        nx = int(np.floor((x1 - x0) / h)) + 3
        ny = int(np.floor((y1 - y0) / h)) + 3
        xs = x0 - h + h * np.arange(nx)
        ys = y0 - h + h * np.arange(ny)
        index = -np.ones((nx, ny), dtype=int)
        coords = []
        ij = []
        # nodes closer to the boundary than _THETA_MIN * h are snapped out of
        # the unknown set; arms from their neighbors then cross the true
        # boundary at well-conditioned fractions
        snap = _THETA_MIN * h
        for i in range(nx):
            for j in range(ny):
                if shape.inside(xs[i], ys[j]) and shape.boundary_distance(xs[i], ys[j]) > snap:
                    index[i, j] = len(coords)
                    coords.append((xs[i], ys[j]))
                    ij.append((i, j))
        if not coords:
            raise GeometryError("grid spacing too coarse for the domain")
        self.xy = np.asarray(coords)
        self._ij = np.asarray(ij)
        self.n = len(coords)
        dirs = [(1, 0), (-1, 0), (0, 1), (0, -1)]  # E, W, N, S
        nbr = -np.ones((self.n, 4), dtype=int)
        theta = np.ones((self.n, 4))
        for k, (i, j) in enumerate(self._ij):
            x, y = self.xy[k]
            for d, (di, dj) in enumerate(dirs):
                ii, jj = i + di, j + dj
                if 0 <= ii < nx and 0 <= jj < ny and index[ii, jj] >= 0:
                    nbr[k, d] = index[ii, jj]
                else:
                    t = shape.exit_fraction(x, y, di, dj, h)
                    theta[k, d] = max(t, _THETA_MIN)
        self.nbr = nbr
        self.theta = theta
        self.boundary_arm = nbr < 0
        self.ring = np.any(self.boundary_arm, axis=1)
        # 5x5-neighborhood color map for the finite-difference Jacobian
        # (transverse extrapolation at boundary arms gives the residual a
        #  dependency reach of two nodes per axis)
        self.n_colors = 25
        self.color = (self._ij[:, 0] % 5) + 5 * (self._ij[:, 1] % 5)
        self.color_nbr = -np.ones((self.n, self.n_colors), dtype=int)
        for k, (i, j) in enumerate(self._ij):
            for di in (-2, -1, 0, 1, 2):
                for dj in (-2, -1, 0, 1, 2):
                    ii, jj = i + di, j + dj
                    if 0 <= ii < nx and 0 <= jj < ny and index[ii, jj] >= 0:
                        q = index[ii, jj]
                        self.color_nbr[k, self.color[q]] = q

    def values_with_boundary(self, u: np.ndarray):
        """Per-arm neighbor values (0 on boundary crossings), shape (n, 4)."""
        vals = np.zeros((self.n, 4))
        mask = self.nbr >= 0
        vals[mask] = u[self.nbr[mask]]
        return vals

    def node_gradient(self, u: np.ndarray):
        """Unequal-arm O(h^2) central derivatives (ux, uy) at every node."""
        vals = self.values_with_boundary(u)
        h = self.h
        tE, tW, tN, tS = (self.theta[:, d] for d in range(4))
        uE, uW, uN, uS = (vals[:, d] for d in range(4))
        ux = (tW ** 2 * uE - tE ** 2 * uW + (tE ** 2 - tW ** 2) * u) / (tE * tW * (tE + tW) * h)
        uy = (tS ** 2 * uN - tN ** 2 * uS + (tN ** 2 - tS ** 2) * u) / (tN * tS * (tN + tS) * h)
        return ux, uy


@dataclass(frozen=True)
class SolverConfig:
    """eps = +1 for the Euclidean ambient, -1 for the Lorentzian one."""

    eps: int = -1
    H: float = 1.0
    dH: float = 0.1
    newton_tol: float = 1e-10
    max_iter: int = 40
    delta_guard: float = 0.01

    def __post_init__(self):
        if self.eps not in (1, -1):
            raise GeometryError("eps must be +1 (Euclidean) or -1 (Lorentzian)")
        if self.dH <= 0:
            raise GeometryError("continuation step must be positive")
        if not 0 < self.delta_guard < 0.5:
            raise GeometryError("delta_guard must lie in (0, 0.5)")


@dataclass
class GraphSolution:
    domain: GridDomain
    u: np.ndarray
    H: float
    eps: int
    Du_max: float
    residual_max: float
    newton_iters: int
    continuation_steps: int
    delta_guard: float
    converged: bool = True
    warnings: list = field(default_factory=list)

    def gradient_magnitude(self) -> np.ndarray:
        ux, uy = self.domain.node_gradient(self.u)
        return np.hypot(ux, uy)


def _flux(a, b, eps):
    m = 1.0 + eps * (a * a + b * b)
    return a / np.sqrt(m)


_OPP = (1, 0, 3, 2)  # opposite arm index: W of E, E of W, S of N, N of S


def _half_data(dom: GridDomain, u: np.ndarray):
    """Primary and transverse derivative per arm half-point, shape (n, 4).

    On full arms the transverse derivative is the average of the two node
    gradients.  On boundary-terminated arms it is extrapolated linearly to
    the half point from the node and its opposite neighbor, which keeps the
    half-point value second-order accurate at the boundary ring.
    """
    vals = dom.values_with_boundary(u)
    h = dom.h
    ux, uy = dom.node_gradient(u)
    sgn = np.array([1.0, -1.0, 1.0, -1.0])
    prim = np.empty((dom.n, 4))
    trans = np.empty((dom.n, 4))
    for d in range(4):
        prim[:, d] = sgn[d] * (vals[:, d] - u) / (dom.theta[:, d] * h)
        own = uy if d < 2 else ux
        nb = dom.nbr[:, d]
        other = np.where(nb >= 0, own[nb], own)
        avg = 0.5 * (own + other)
        opp = dom.nbr[:, _OPP[d]]
        slope = np.where(
            opp >= 0,
            (own - own[opp]) / (dom.theta[:, _OPP[d]] * h),
            0.0,
        )
        extrap = own + 0.5 * dom.theta[:, d] * h * slope
        trans[:, d] = np.where(nb >= 0, avg, extrap)
    return prim, trans


def cmc_operator_residual(dom: GridDomain, u: np.ndarray, H: float, eps: int,
                          check_spacelike: bool = True):
    """Per-node residual of div(Du / sqrt(1 + eps|Du|^2)) - 2H.

    In Lorentzian mode (eps = -1) the stencil gradients must stay strictly
    below the light-cone slope; a violation raises SpacelikeViolationError
    rather than letting NaNs propagate.
    """
    u = np.asarray(u, dtype=float)
    if u.shape != (dom.n,):
        raise GeometryError(f"expected {dom.n} interior node values")
    prim, trans = _half_data(dom, u)
    if eps == -1:
        m = prim * prim + trans * trans
        if check_spacelike and np.any(m >= 1.0 - 1e-12):
            raise SpacelikeViolationError("stencil gradient reached the light cone")
        m = np.minimum(m, 1.0 - 1e-12)
        flux = prim / np.sqrt(1.0 - m)
    else:
        flux = prim / np.sqrt(1.0 + prim * prim + trans * trans)
    h = dom.h
    div_x = (flux[:, 0] - flux[:, 1]) / (0.5 * (dom.theta[:, 0] + dom.theta[:, 1]) * h)
    div_y = (flux[:, 2] - flux[:, 3]) / (0.5 * (dom.theta[:, 2] + dom.theta[:, 3]) * h)
    return div_x + div_y - 2.0 * H


def _half_gradient_max(dom: GridDomain, u: np.ndarray) -> float:
    prim, trans = _half_data(dom, u)
    return float(np.sqrt(np.max(prim * prim + trans * trans)))


def _jacobian(dom: GridDomain, u: np.ndarray, H: float, eps: int,
              base: np.ndarray) -> sp.csr_matrix:
    delta = 1e-7 * (1.0 + float(np.max(np.abs(u))))
    rows_all, cols_all, data_all = [], [], []
    for c in range(dom.n_colors):
        up = u.copy()
        mask = dom.color == c
        up[mask] += delta
        rp = cmc_operator_residual(dom, up, H, eps, check_spacelike=False)
        cols = dom.color_nbr[:, c]
        valid = (cols >= 0) & (rp != base)
        rows_all.append(np.nonzero(valid)[0])
        cols_all.append(cols[valid])
        data_all.append((rp[valid] - base[valid]) / delta)
    rows = np.concatenate(rows_all)
    cols = np.concatenate(cols_all)
    data = np.concatenate(data_all)
    return sp.csr_matrix((data, (rows, cols)), shape=(dom.n, dom.n))


def _newton(dom: GridDomain, u0: np.ndarray, H: float, cfg: SolverConfig):
    u = u0.copy()
    guard_half = 1.0 - 0.5 * cfg.delta_guard
    guard_node = 1.0 - cfg.delta_guard

    def admissible(v):
        if cfg.eps != -1:
            return True
        if _half_gradient_max(dom, v) >= guard_half:
            return False
        ux, uy = dom.node_gradient(v)
        return bool(np.max(np.hypot(ux, uy)) <= guard_node)

    try:
        r = cmc_operator_residual(dom, u, H, cfg.eps)
    except SpacelikeViolationError:
        return None, 0
    rnorm = float(np.max(np.abs(r)))
    iters = 0
    while rnorm > cfg.newton_tol:
        if iters >= cfg.max_iter:
            return None, iters
        jac = _jacobian(dom, u, H, cfg.eps, r)
        try:
            du = splu(jac.tocsc()).solve(-r)
        except RuntimeError:
            return None, iters
        lam = 1.0
        accepted = False
        for _ in range(12):
            trial = u + lam * du
            if admissible(trial):
                try:
                    rt = cmc_operator_residual(dom, trial, H, cfg.eps)
                except SpacelikeViolationError:
                    rt = None
                if rt is not None:
                    tnorm = float(np.max(np.abs(rt)))
                    if tnorm < rnorm or tnorm <= cfg.newton_tol:
                        u, r, rnorm = trial, rt, tnorm
                        accepted = True
                        break
            lam *= 0.5
        iters += 1
        if not accepted:
            return None, iters
    return u, iters


def _check_euclid_solvable(dom: GridDomain, H: float) -> None:
    if H == 0:
        return
    shape = dom.shape
    if isinstance(shape, Disk):
        kappa = 1.0 / shape.R
        if abs(H) > kappa * (1.0 + 1e-12):
            raise SolvabilityError(
                f"Euclidean target |H|={abs(H):g} exceeds the boundary curvature "
                f"{kappa:g} of the disk; no graph exists"
            )
        return
    roll = shape.rolling_radius()
    if abs(H) >= 1.0 / roll:
        raise SolvabilityError(
            f"Euclidean target |H|={abs(H):g} is not below the rolling-disc "
            f"curvature bound {1.0 / roll:g} for this polygon; refusing "
            "(smooth-boundary existence theory does not cover it)"
        )


def solve_dirichlet(dom: GridDomain, cfg: SolverConfig) -> GraphSolution:
    """Continuation-in-H damped-Newton solve with zero boundary data.

    Starts from the exact solution u = 0 at H = 0 and steps the target mean
    curvature in increments of at most cfg.dH, warm-starting Newton at each
    step and halving the increment (down to 1e-3) when Newton fails.
    """
    if cfg.eps == 1:
        _check_euclid_solvable(dom, cfg.H)
    target = abs(cfg.H)
    flip = cfg.H < 0
    u = np.zeros(dom.n)
    h_cur = 0.0
    steps = 0
    iters_total = 0
    if target > 0:
        dh = min(cfg.dH, target)
        while h_cur < target - 1e-15:
            h_try = min(h_cur + dh, target)
            u_new, iters = _newton(dom, u, h_try, cfg)
            iters_total += iters
            if u_new is None:
                dh *= 0.5
                if dh < 1e-3:
                    raise ContinuationStallError(
                        f"continuation stalled at H={h_cur:g} toward {target:g} "
                        "(step halving exhausted)"
                    )
                continue
            u = u_new
            h_cur = h_try
            steps += 1
            dh = min(cfg.dH, target - h_cur) if target > h_cur else dh
    if flip:
        u = -u
    r = cmc_operator_residual(dom, u, cfg.H, cfg.eps)
    ux, uy = dom.node_gradient(u)
    du_max = float(np.max(np.hypot(ux, uy))) if dom.n else 0.0
    sol = GraphSolution(
        domain=dom, u=u, H=cfg.H, eps=cfg.eps,
        Du_max=du_max, residual_max=float(np.max(np.abs(r))),
        newton_iters=iters_total, continuation_steps=steps,
        delta_guard=cfg.delta_guard,
    )
    if cfg.eps == -1 and du_max > 1.0 - cfg.delta_guard:
        raise SpacelikeViolationError("returned gradient exceeds the guard band")
    return sol


def exact_cap_values(dom: GridDomain, H: float) -> np.ndarray:
    """Translated hyperboloid-cap solution on a disk domain of radius R:
    u = sqrt(1/H^2 + rho^2) - sqrt(1/H^2 + R^2) (zero on the rim)."""
    if not isinstance(dom.shape, Disk):
        raise GeometryError("the exact cap solution lives on a disk domain")
    if H <= 0:
        raise GeometryError("cap comparison requires H > 0")
    r = 1.0 / H
    rho2 = (dom.xy ** 2).sum(axis=1)
    return np.sqrt(r * r + rho2) - np.sqrt(r * r + dom.shape.R ** 2)


def height_bound_report(sol: GraphSolution) -> dict:
    """Height of the solution against the ambient-specific a-priori bound.

    Euclidean: max|u| <= 1/|H|.  Lorentzian: max|u| is bounded by the height
    sqrt(1/H^2 + R^2) - 1/|H| of an enclosing cap with rim radius
    R = 1 + r0, r0 the largest boundary radius.  (The alternative form
    sqrt(R^2 - 1/H^2) - 1/H is not real for R < 1/|H| and is not used.)
    """
    H = sol.H
    max_u = float(np.max(np.abs(sol.u))) if sol.domain.n else 0.0
    report = {
        "H": H,
        "max_abs_u": max_u,
        "applicable": H != 0,
    }
    if H == 0:
        report["note"] = "height bounds assume H != 0"
        return report
    slack = 5.0 * sol.domain.h
    if sol.eps == 1:
        bound = 1.0 / abs(H)
        report["bound"] = bound
        report["kind"] = "euclidean 1/|H|"
    else:
        r0 = sol.domain.shape.max_boundary_radius()
        renc = 1.0 + r0
        hh = 1.0 / abs(H)
        bound = float(np.sqrt(hh * hh + renc * renc) - hh)
        report["bound"] = bound
        report["enclosing_rim_radius"] = renc
        report["kind"] = "lorentzian enclosing-cap height sqrt(1/H^2+R^2)-1/|H|"
        report["note"] = (
            "bound uses sqrt(1/H^2+R^2)-1/H; the variant sqrt(R^2-1/H^2)-1/H "
            "is not real for R<1/|H| and is not the enclosing-cap height"
        )
    report["margin"] = bound + slack - max_u
    report["satisfied"] = bool(max_u <= bound + slack)
    return report


def gradient_boundary_check(sol: GraphSolution) -> dict:
    """Interior gradients against the boundary ring, plus the convex slope note.

    For converged Lorentzian solutions the maximum of |Du| is attained on
    the boundary ring up to O(h); on convex domains the report also states
    whether the maximum slope stays below sqrt(2)/2 (up to O(h) slack).
    """
    g = sol.gradient_magnitude()
    ring = sol.domain.ring
    ring_max = float(g[ring].max()) if ring.any() else 0.0
    inner = ~ring
    inner_max = float(g[inner].max()) if inner.any() else 0.0
    h = sol.domain.h
    slack = 2.0 * h
    out = {
        "interior_max": inner_max,
        "boundary_ring_max": ring_max,
        "slack": slack,
        "interior_le_boundary": bool(inner_max <= ring_max + slack),
        "Du_max": sol.Du_max,
    }
    if sol.eps == -1:
        thresh = np.sqrt(2.0) / 2.0
        out["convex_slope_threshold"] = thresh
        out["convex_slope_ok"] = bool(sol.Du_max < thresh + slack)
    return out
