"""Command-line front end: `mink3 <subcommand>`.

Every subcommand prints a JSON run report to stdout (and optionally writes
CSV / Wavefront mesh files).  All numeric output is printed with 17
significant digits so regression diffs are exact; identical invocations
produce byte-identical output.

Exit status: 0 on success, 1 on domain errors (bad causal type, stalled
continuation, unsatisfiable preconditions), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import hashlib
import sys

import numpy as np

from . import core, curves, dirichlet, isometry, meshing, rotational, surfaces

# ---------------------------------------------------------------------------
# deterministic JSON with 17-significant-digit floats


def _fmt_float(x: float) -> str:
    if np.isnan(x):
        return "NaN"
    if np.isinf(x):
        return "Infinity" if x > 0 else "-Infinity"
    return format(float(x), ".17g")


def dump_json(obj, indent: int = 0) -> str:
    pad = "  " * indent
    pad1 = "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [
            f'{pad1}"{k}": {dump_json(obj[k], indent + 1)}' for k in sorted(obj)
        ]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        seq = list(obj.tolist()) if isinstance(obj, np.ndarray) else list(obj)
        if not seq:
            return "[]"
        return "[" + ", ".join(dump_json(v, indent) for v in seq) + "]"
    if isinstance(obj, bool) or isinstance(obj, np.bool_):
        return "true" if obj else "false"
    if obj is None:
        return "null"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _fmt_float(float(obj))
    return '"' + str(obj).replace("\\", "\\\\").replace('"', '\\"') + '"'


def _digest(args: argparse.Namespace) -> str:
    payload = repr(sorted(
        (k, v) for k, v in vars(args).items() if k != "func"
    ))
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


def _report(args, command: str, outputs: dict, warnings=None) -> dict:
    return {
        "command": command,
        "input_digest": _digest(args),
        "outputs": outputs,
        "warnings": list(warnings or []),
    }


# ---------------------------------------------------------------------------
# small parsers


def _vec(text: str) -> np.ndarray:
    parts = [float(p) for p in text.split(",")]
    if len(parts) != 3:
        raise core.GeometryError(f"expected 3 comma-separated numbers, got {text!r}")
    return np.asarray(parts)


def _span(text: str) -> tuple[float, float]:
    a, b = (float(p) for p in text.split(":"))
    return a, b


def _params(text: str) -> np.ndarray:
    bits = text.split(":")
    if len(bits) != 3:
        raise core.GeometryError("expected start:stop:count")
    return np.linspace(float(bits[0]), float(bits[1]), int(bits[2]))


def _write_csv(path, header: str, rows) -> None:
    with open(path, "w") as fh:
        fh.write(header + "\n")
        for row in rows:
            fh.write(",".join(_fmt_float(x) for x in row) + "\n")


# ---------------------------------------------------------------------------
# subcommand handlers


def cmd_classify(args) -> dict:
    out = {}
    if args.vec is not None:
        v = _vec(args.vec)
        cc = core.causal_class(v)
        out["vector"] = list(v)
        out["causal_class"] = str(cc)
        out["lorentz_norm"] = core.lorentz_norm(v)
        if cc is not core.CausalClass.SPACELIKE:
            out["future_directed"] = core.future_directed(v)
    elif args.plane is not None:
        gens = [_vec(p) for p in args.plane.split(";")]
        sub = core.Subspace(tuple(gens))
        out["generators"] = [list(g) for g in gens]
        out["causal_class"] = str(core.causal_class_subspace(sub))
    else:
        raise core.GeometryError("classify needs --vec or --plane")
    return _report(args, "classify", out)


def cmd_orbit(args) -> dict:
    axis = {
        "timelike": core.CausalClass.TIMELIKE,
        "spacelike": core.CausalClass.SPACELIKE,
        "lightlike": core.CausalClass.LIGHTLIKE,
    }[args.axis]
    p0 = _vec(args.p0)
    ts = _params(args.params)
    pts = isometry.orbit(axis, p0, ts)
    out = {"n_samples": len(pts)}
    x0, y0, z0 = p0
    if axis is core.CausalClass.TIMELIKE:
        resid = np.abs(pts[:, 0] ** 2 + pts[:, 1] ** 2 - (x0 ** 2 + y0 ** 2))
        resid = np.maximum(resid, np.abs(pts[:, 2] - z0))
        out["conic"] = "circle x^2+y^2=x0^2+y0^2 in {z=z0}"
    elif axis is core.CausalClass.SPACELIKE:
        resid = np.abs(pts[:, 1] ** 2 - pts[:, 2] ** 2 - (y0 ** 2 - z0 ** 2))
        resid = np.maximum(resid, np.abs(pts[:, 0] - x0))
        out["conic"] = "hyperbola y^2-z^2=y0^2-z0^2 in {x=x0}"
    else:
        if abs(z0 + y0) < 1e-12 * (1 + abs(y0) + abs(z0)) and abs(y0) > 1e-12:
            resid = np.abs(
                pts[:, 1] - (y0 + x0 ** 2 / (4 * y0) - pts[:, 0] ** 2 / (4 * y0))
            )
            out["conic"] = "parabola Y=y+x^2/(4y)-X^2/(4y) in <E1,E2-E3>"
        else:
            resid = np.zeros(1)
            out["conic"] = "orbit plane is a translate of <E1,E2-E3>; no canonical relation checked"
    out["conic_residual_max"] = float(resid.max())
    if args.out:
        _write_csv(args.out, "t,x,y,z", [(t, *p) for t, p in zip(ts, pts)])
        out["csv"] = args.out
    return _report(args, "orbit", out)


_CURVE_KINDS = {
    "circle": curves.PlaneCase.SPACELIKE_PLANE,
    "hyperbola-spacelike": curves.PlaneCase.TIMELIKE_PLANE_SPACELIKE_CURVE,
    "hyperbola-timelike": curves.PlaneCase.TIMELIKE_PLANE_TIMELIKE_CURVE,
    "parabola": curves.PlaneCase.LIGHTLIKE_PLANE,
}


def cmd_curve(args) -> dict:
    kind = _CURVE_KINDS[args.kind]
    s0, s1 = _span(args.span)
    jet = curves.generate_constant_curvature(kind, args.a, args.b, span=(s0 - 0.1, s1 + 0.1))
    ts = np.linspace(s0, s1, args.n)
    kts = []
    cases = set()
    for t in ts:
        fr = curves.frenet(jet, t)
        kts.append((fr.kappa, fr.tau))
        cases.add(fr.case.name)
    out = {
        "case": sorted(cases),
        "kappa_min": min(k for k, _ in kts if k is not None) if any(k is not None for k, _ in kts) else None,
        "kappa_max": max(k for k, _ in kts if k is not None) if any(k is not None for k, _ in kts) else None,
        "tau_abs_max": max(abs(t) for _, t in kts),
    }
    if args.out:
        curves.export_curve_csv(jet, ts, args.out, kappa_tau=kts)
        out["csv"] = args.out
    return _report(args, "curve", out)


def _surface_chart(args):
    center = _vec(args.center) if args.center else np.zeros(3)
    if args.kind == "plane":
        return surfaces.plane_chart(center, core.E1, core.E2)
    if args.kind == "hyperbolic":
        return surfaces.hyperbolic_plane_chart(args.r, center)
    if args.kind == "desitter":
        return surfaces.de_sitter_chart(args.r, center)
    if args.kind == "catenoid":
        return rotational.catenoid_chart()
    raise core.GeometryError(f"unknown surface kind {args.kind}")


def cmd_surface(args) -> dict:
    chart = _surface_chart(args)
    wrap = args.kind in ("desitter", "catenoid")
    mesh = meshing.triangulate_chart(chart, args.nu, args.nv, wrap_v=wrap)
    out = {
        "vertices": len(mesh.vertices),
        "faces": len(mesh.faces),
        "H_min": float(mesh.mean_curvature.min()),
        "H_max": float(mesh.mean_curvature.max()),
        "K_min": float(mesh.gauss_curvature.min()),
        "K_max": float(mesh.gauss_curvature.max()),
        "umbilic_fraction": float(mesh.umbilic.mean()),
    }
    if args.mesh:
        meshing.export_obj(mesh, args.mesh)
        sidecar = args.mesh + ".csv"
        meshing.export_mesh_csv(mesh, sidecar)
        out["mesh"] = args.mesh
        out["sidecar"] = sidecar
    return _report(args, "surface", out)


def cmd_umbilic(args) -> dict:
    chart = _surface_chart(args)
    (u0, u1), (v0, v1) = chart.domain
    us = np.linspace(u0 + 0.1 * (u1 - u0), u1 - 0.1 * (u1 - u0), args.nu)
    vs = np.linspace(v0 + 0.1 * (v1 - v0), v1 - 0.1 * (v1 - v0), args.nv)
    samples = [(u, v) for u in us for v in vs]
    kind = surfaces.classify_totally_umbilical(chart, samples)
    out = {"kind": kind.tag.value, "residual": kind.residual}
    if kind.radius is not None:
        out["radius"] = kind.radius
        out["center"] = list(kind.center)
    if kind.normal is not None:
        out["normal"] = list(kind.normal)
        out["offset"] = kind.offset
    return _report(args, "umbilic", out)


def _measured_h_stats(chart, nu=24, nv=24, shrink=0.02):
    (u0, u1), (v0, v1) = chart.domain
    du = shrink * (u1 - u0)
    dv = shrink * (v1 - v0)
    us = np.linspace(u0 + du, u1 - du, nu)
    vs = np.linspace(v0 + dv, v1 - dv, nv)
    hs = [surfaces.shape_and_curvatures(chart, u, v).H for u in us for v in vs]
    return float(np.min(hs)), float(np.max(hs))


def cmd_rotational(args) -> dict:
    s0, s1 = _span(args.span)
    warnings = []
    if args.catenoid:
        params = rotational.ProfileODEParams(
            H=0.0, r0=float(np.sinh(s0)), rp0=float(np.cosh(s0)),
            s0=s0, s1=s1, h=args.step,
        )
        sol = rotational.integrate_rotational(params)
        err = float(np.max(np.abs(sol.r - np.sinh(sol.s))))
        out = {"max_error_vs_sinh": err}
    else:
        if args.r0 is None or args.rp0 is None:
            raise core.GeometryError("non-catenoid runs need --r0 and --rp0")
        params = rotational.ProfileODEParams(
            H=args.H, r0=args.r0, rp0=args.rp0, s0=s0, s1=s1, h=args.step,
        )
        sol = rotational.integrate_rotational(params)
        out = {}
    out.update(
        {
            "samples": len(sol.s),
            "residual_max": sol.residual_max,
            "truncated": sol.truncated,
        }
    )
    if sol.truncated:
        warnings.append("integration stopped at the guard band")
    chart = rotational.profile_chart(sol)
    hmin, hmax = _measured_h_stats(chart)
    out["measured_H_min"] = hmin
    out["measured_H_max"] = hmax
    out["measured_H_abs_dev"] = max(abs(hmin - params.H), abs(hmax - params.H))
    if args.csv:
        _write_csv(args.csv, "s,r,rp,a,b",
                   zip(sol.s, sol.r, sol.rp, sol.a, sol.b))
        out["csv"] = args.csv
    if args.mesh:
        mesh = meshing.triangulate_chart(chart, args.nu, args.nv, wrap_v=True)
        meshing.export_obj(mesh, args.mesh)
        meshing.export_mesh_csv(mesh, args.mesh + ".csv")
        out["mesh"] = args.mesh
    return _report(args, "rotational", out, warnings)


def cmd_riemann(args) -> dict:
    s0, s1 = _span(args.span)
    params = rotational.ProfileODEParams(
        H=0.0, c=args.c, d=args.d, r0=args.r0, rp0=args.rp0,
        s0=s0, s1=s1, h=args.step,
    )
    sol = rotational.integrate_riemann(params)
    warnings = []
    if sol.spacelike_violation:
        warnings.append("chart fails the spacelike condition somewhere")
    # drift relation a' = c r^2, b' = d r^2 checked by a five-point stencil
    def deriv(arr):
        return (-arr[4:] + 8 * arr[3:-1] - 8 * arr[1:-3] + arr[:-4]) / (12 * params.h)

    drift_resid = 0.0
    if len(sol.s) >= 5:
        drift_resid = float(
            max(
                np.max(np.abs(deriv(sol.a) - params.c * sol.r[2:-2] ** 2)),
                np.max(np.abs(deriv(sol.b) - params.d * sol.r[2:-2] ** 2)),
            )
        )
    chart = rotational.profile_chart(sol)
    hmin, hmax = _measured_h_stats(chart)
    out = {
        "samples": len(sol.s),
        "residual_max": sol.residual_max,
        "center_drift_residual": drift_resid,
        "measured_H_abs_max": max(abs(hmin), abs(hmax)),
        "truncated": sol.truncated,
    }
    if args.csv:
        _write_csv(args.csv, "s,r,rp,a,b", zip(sol.s, sol.r, sol.rp, sol.a, sol.b))
        out["csv"] = args.csv
    if args.mesh:
        mesh = meshing.triangulate_chart(chart, args.nu, args.nv, wrap_v=True)
        meshing.export_obj(mesh, args.mesh)
        meshing.export_mesh_csv(mesh, args.mesh + ".csv")
        out["mesh"] = args.mesh
    return _report(args, "riemann", out, warnings)


def cmd_cap(args) -> dict:
    chart, cap = rotational.hyperbolic_cap_chart(args.r, args.R, rim_at_zero=args.rim_at_zero)
    rs = np.linspace(0, args.R * 0.95, 12)
    hs = [surfaces.shape_and_curvatures(chart, x, 0.0).H for x in rs]
    out = {
        "rim_height": cap.rim_height,
        "cap_height": cap.height,
        "measured_H_min": float(np.min(hs)),
        "measured_H_max": float(np.max(hs)),
        "expected_H": 1.0 / args.r,
    }
    if args.mesh:
        mesh = meshing.disk_graph_mesh(chart, args.R, args.nu, args.nv)
        meshing.export_obj(mesh, args.mesh)
        meshing.export_mesh_csv(mesh, args.mesh + ".csv")
        out["mesh"] = args.mesh
    if args.csv:
        rows = []
        for x in np.linspace(-args.R, args.R, 41):
            for y in np.linspace(-args.R, args.R, 41):
                if x * x + y * y <= args.R ** 2:
                    rows.append((x, y, float(chart.position(x, y)[2])))
        _write_csv(args.csv, "x,y,z", rows)
        out["csv"] = args.csv
    return _report(args, "cap", out)


def cmd_dirichlet(args) -> dict:
    if args.disk is not None:
        shape = dirichlet.Disk(args.disk)
    elif args.polygon is not None:
        verts = []
        with open(args.polygon) as fh:
            for line in fh:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                x, y = (float(p) for p in line.split(","))
                verts.append((x, y))
        shape = dirichlet.ConvexPolygon(np.asarray(verts))
    else:
        raise core.GeometryError("dirichlet needs --disk R or --polygon FILE")
    eps = -1 if args.ambient == "lorentz" else 1
    dom = dirichlet.GridDomain(shape, args.h)
    cfg = dirichlet.SolverConfig(
        eps=eps, H=args.H, dH=args.dH, newton_tol=args.newton_tol,
        delta_guard=args.delta_guard,
    )
    sol = dirichlet.solve_dirichlet(dom, cfg)
    bounds = dirichlet.height_bound_report(sol)
    grad = dirichlet.gradient_boundary_check(sol)
    out = {
        "nodes": dom.n,
        "residual_max": sol.residual_max,
        "Du_max": sol.Du_max,
        "newton_iters": sol.newton_iters,
        "continuation_steps": sol.continuation_steps,
        "max_abs_u": float(np.max(np.abs(sol.u))) if dom.n else 0.0,
        "bounds": bounds,
        "gradient_check": grad,
    }
    cap_err = None
    if isinstance(shape, dirichlet.Disk) and eps == -1 and args.H > 0:
        u_exact = dirichlet.exact_cap_values(dom, args.H)
        cap_err = np.abs(sol.u - u_exact)
        out["error_vs_cap_max"] = float(cap_err.max())
    if args.out:
        g = sol.gradient_magnitude()
        if cap_err is not None:
            rows = zip(dom.xy[:, 0], dom.xy[:, 1], sol.u, g, cap_err)
            _write_csv(args.out, "x,y,u,|Du|,err_cap", rows)
        else:
            rows = zip(dom.xy[:, 0], dom.xy[:, 1], sol.u, g)
            _write_csv(args.out, "x,y,u,|Du|", rows)
        out["csv"] = args.out
    return _report(args, "dirichlet", out)


def _verify_checks():
    """Cross-module identity suite; yields (name, passed, detail)."""
    a = core.E3
    chart = surfaces.hyperbolic_plane_chart(1.0, domain=((-0.8, 0.8), (-0.8, 0.8)))

    def lap_resid(n, which):
        us = np.linspace(-0.8, 0.8, n)
        vs = np.linspace(-0.8, 0.8, n)
        worst = 0.0
        if which == "x":
            fgrid = np.array(
                [[core.lorentz_dot(chart.position(u, v), a) for v in vs] for u in us]
            )
        else:
            fgrid = np.array(
                [[core.lorentz_dot(surfaces.gauss_map(chart, u, v), a) for v in vs] for u in us]
            )
        for i in range(1, n - 1, max(1, (n - 2) // 8)):
            for j in range(1, n - 1, max(1, (n - 2) // 8)):
                lap = surfaces.laplace_beltrami(chart, fgrid, us, vs, i, j)
                data = surfaces.shape_and_curvatures(chart, us[i], vs[j])
                nval = core.lorentz_dot(surfaces.gauss_map(chart, us[i], vs[j]), a)
                if which == "x":
                    target = 2 * data.H * nval
                else:
                    target = (4 * data.H ** 2 + 2 * data.K) * nval
                worst = max(worst, abs(lap - target))
        return worst

    for which, label in (("x", "laplacian of <x,a>"), ("n", "laplacian of <N,a>")):
        r1 = lap_resid(33, which)
        r2 = lap_resid(65, which)
        order = float(np.log2(r1 / r2)) if r2 > 0 else np.inf
        yield (
            f"{label}: order {order:.2f}",
            bool(1.7 <= order <= 2.3) or r2 < 1e-12,
            {"coarse": r1, "fine": r2, "order": order},
        )

    cap_chart, cap = rotational.hyperbolic_cap_chart(1.0, 1.0)
    mesh = meshing.disk_graph_mesh(cap_chart, 1.0, 40, 80)
    rho = np.linalg.norm(mesh.uv, axis=1)
    f = np.where(rho < 1.0, np.exp(-1.0 / np.maximum(1e-12, 1.0 - rho ** 2)), 0.0)
    f[mesh.boundary] = 0.0
    da_n, da_f, dv_n, dv_f, _ = meshing.first_variation_check(mesh, f, 1e-4)
    ok_a = abs(da_n - da_f) <= 0.02 * abs(da_f)
    ok_v = abs(dv_n - dv_f) <= 0.02 * abs(dv_f)
    yield ("area first variation", bool(ok_a), {"numeric": da_n, "formula": da_f})
    yield ("volume first variation", bool(ok_v), {"numeric": dv_n, "formula": dv_f})

    worst = 0.0
    for c, name in ((cap_chart, "cap"), (rotational.catenoid_chart(), "catenoid")):
        (u0, u1), (v0, v1) = c.domain
        for u in np.linspace(u0 + 0.1, u1 - 0.1, 5):
            for v in np.linspace(v0 + 0.1, v1 - 0.1, 5):
                hf = surfaces.mean_curvature_foliated(c, u, v)
                hs = surfaces.shape_and_curvatures(c, u, v).H
                worst = max(worst, abs(abs(hf) - abs(hs)))
    yield ("foliated |H| identity", bool(worst <= 1e-8), {"max_dev": worst})


def cmd_verify(args) -> dict:
    results = []
    ok_all = True
    for name, ok, detail in _verify_checks():
        results.append({"check": name, "passed": ok, "detail": detail})
        print(f"[{'PASS' if ok else 'FAIL'}] {name}")
        ok_all = ok_all and ok
    rep = _report(args, "verify", {"passed": ok_all, "checks": results})
    if not ok_all:
        raise core.GeometryError("verification suite failed")
    return rep


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mink3", description=__doc__)
    sub = p.add_subparsers(dest="subcommand", required=True)

    c = sub.add_parser("classify", help="causal class of a vector or plane")
    c.add_argument("--vec", help="x,y,z")
    c.add_argument("--plane", help="two generators 'x,y,z;x,y,z'")
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("orbit", help="boost orbit of a point")
    c.add_argument("--axis", choices=["timelike", "spacelike", "lightlike"], required=True)
    c.add_argument("--p0", required=True, help="x,y,z")
    c.add_argument("--params", default="0:6.283185307179586:100", help="start:stop:count")
    c.add_argument("--out", help="CSV output path")
    c.set_defaults(func=cmd_orbit)

    c = sub.add_parser("curve", help="constant-curvature planar curve sampling")
    c.add_argument("--kind", choices=sorted(_CURVE_KINDS), required=True)
    c.add_argument("--a", type=float, default=1.0, help="curvature (or parabola coefficient)")
    c.add_argument("--b", type=float, default=0.0, help="phase")
    c.add_argument("--span", default="-1:1")
    c.add_argument("--n", type=int, default=50)
    c.add_argument("--out", help="CSV output path")
    c.set_defaults(func=cmd_curve)

    for name, handler in (("surface", cmd_surface), ("umbilic", cmd_umbilic)):
        c = sub.add_parser(name)
        c.add_argument("--kind", choices=["plane", "hyperbolic", "desitter", "catenoid"],
                       required=True)
        c.add_argument("--r", type=float, default=1.0)
        c.add_argument("--center", help="x,y,z")
        c.add_argument("--nu", type=int, default=12 if name == "umbilic" else 33)
        c.add_argument("--nv", type=int, default=12 if name == "umbilic" else 33)
        if name == "surface":
            c.add_argument("--mesh", help="Wavefront mesh output path")
        c.set_defaults(func=handler)

    c = sub.add_parser("rotational", help="rotational CMC profile by RK4")
    c.add_argument("--catenoid", action="store_true")
    c.add_argument("--H", type=float, default=0.0)
    c.add_argument("--r0", type=float)
    c.add_argument("--rp0", type=float)
    c.add_argument("--span", default="0.5:3")
    c.add_argument("--step", type=float, default=1e-3)
    c.add_argument("--csv", help="profile CSV path")
    c.add_argument("--mesh", help="Wavefront mesh output path")
    c.add_argument("--nu", type=int, default=40)
    c.add_argument("--nv", type=int, default=64)
    c.set_defaults(func=cmd_rotational)

    c = sub.add_parser("riemann", help="minimal circle-foliated profile with center drift")
    c.add_argument("--c", type=float, default=0.3)
    c.add_argument("--d", type=float, default=0.0)
    c.add_argument("--r0", type=float, default=1.0)
    c.add_argument("--rp0", type=float, default=1.5)
    c.add_argument("--span", default="0:1")
    c.add_argument("--step", type=float, default=1e-3)
    c.add_argument("--csv")
    c.add_argument("--mesh")
    c.add_argument("--nu", type=int, default=40)
    c.add_argument("--nv", type=int, default=64)
    c.set_defaults(func=cmd_riemann)

    c = sub.add_parser("cap", help="hyperbolic cap chart and mesh")
    c.add_argument("--r", type=float, default=1.0)
    c.add_argument("--R", type=float, default=1.0)
    c.add_argument("--rim-at-zero", action="store_true")
    c.add_argument("--mesh")
    c.add_argument("--csv")
    c.add_argument("--nu", type=int, default=30)
    c.add_argument("--nv", type=int, default=60)
    c.set_defaults(func=cmd_cap)

    c = sub.add_parser("dirichlet", help="CMC graph Dirichlet solve")
    c.add_argument("--disk", type=float, help="disk radius")
    c.add_argument("--polygon", help="vertex file, one 'x,y' per line")
    c.add_argument("--H", type=float, required=True)
    c.add_argument("--ambient", choices=["lorentz", "euclid"], default="lorentz")
    c.add_argument("--h", type=float, default=0.05)
    c.add_argument("--dH", type=float, default=0.1)
    c.add_argument("--newton-tol", type=float, default=1e-10)
    c.add_argument("--delta-guard", type=float, default=0.01)
    c.add_argument("--out", help="CSV output path")
    c.set_defaults(func=cmd_dirichlet)

    c = sub.add_parser("verify", help="cross-module identity suite")
    c.set_defaults(func=cmd_verify)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        report = args.func(args)
    except core.GeometryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(dump_json(report))
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
