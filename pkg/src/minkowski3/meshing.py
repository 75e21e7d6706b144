"""Triangulated spacelike surface meshes: areas, volumes, variation checks.

Areas are Lorentzian: a spacelike triangle with edge vectors d1, d2 has
area 0.5 * sqrt(<d1,d1><d2,d2> - <d1,d2>^2) (the Gram determinant of the
induced metric, positive for spacelike triangles).  The enclosed "cone
volume" functional is (1/3) * sum <centroid, N> dA with N the future unit
normal of each face.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import GeometryError, cross, lorentz_dot
from .surfaces import SurfaceChart, gauss_map, shape_and_curvatures

__all__ = [
    "SurfaceMesh",
    "triangulate_chart",
    "disk_graph_mesh",
    "lorentz_area",
    "cone_volume",
    "first_variation_check",
    "export_obj",
    "export_mesh_csv",
]


@dataclass
class SurfaceMesh:
    """Vertices (n,3), triangles (m,3) int, per-vertex normals / H / boundary flag.

    `uv` keeps the parameter coordinates each vertex came from (n,2); it is
    carried through to CSV sidecars.
    """

    vertices: np.ndarray
    faces: np.ndarray
    uv: np.ndarray
    normals: np.ndarray
    mean_curvature: np.ndarray
    gauss_curvature: np.ndarray
    umbilic: np.ndarray
    boundary: np.ndarray

    def displaced(self, t: float, f: np.ndarray) -> "SurfaceMesh":
        """Normal variation X + t * f * N with the variation field frozen at t=0."""
        out = SurfaceMesh(
            self.vertices + t * f[:, None] * self.normals,
            self.faces,
            self.uv,
            self.normals,
            self.mean_curvature,
            self.gauss_curvature,
            self.umbilic,
            self.boundary,
        )
        return out


def _vertex_data(chart: SurfaceChart, u: float, v: float):
    n = gauss_map(chart, u, v)
    data = shape_and_curvatures(chart, u, v)
    return chart.position(u, v), n, data.H, data.K, data.umbilic


def triangulate_chart(chart: SurfaceChart, nu: int, nv: int,
                      wrap_v: bool = False) -> SurfaceMesh:
    """Structured triangulation of the parameter rectangle.

    With wrap_v the last v-row is identified with the first (periodic
    charts such as surfaces of revolution); boundary vertices are then the
    two u-extremes only.
    """
    us, vs = chart.grid(nu, nv)
    if wrap_v:
        vs = vs[:-1]
        nv = nv - 1
    verts, uvs, norms, hs, ks, umb = [], [], [], [], [], []
    for i, u in enumerate(us):
        for j, v in enumerate(vs):
            p, n, h, k, um = _vertex_data(chart, u, v)
            verts.append(p)
            uvs.append((u, v))
            norms.append(n)
            hs.append(h)
            ks.append(k)
            umb.append(um)
    idx = lambda i, j: i * nv + (j % nv if wrap_v else j)
    faces = []
    jmax = nv if wrap_v else nv - 1
    for i in range(nu - 1):
        for j in range(jmax):
            a, b = idx(i, j), idx(i + 1, j)
            c, d = idx(i + 1, j + 1), idx(i, j + 1)
            faces.append((a, b, c))
            faces.append((a, c, d))
    boundary = np.zeros(len(verts), dtype=bool)
    for i in (0, nu - 1):
        for j in range(nv):
            boundary[idx(i, j)] = True
    if not wrap_v:
        for i in range(nu):
            for j in (0, nv - 1):
                boundary[idx(i, j)] = True
    return SurfaceMesh(
        np.asarray(verts), np.asarray(faces, dtype=int), np.asarray(uvs),
        np.asarray(norms), np.asarray(hs), np.asarray(ks),
        np.asarray(umb, dtype=bool), boundary,
    )


def disk_graph_mesh(chart: SurfaceChart, radius: float, n_r: int,
                    n_theta: int) -> SurfaceMesh:
    """Polar triangulation of a graph chart over the disk of given radius.

    The chart is evaluated at (x, y) = (rho cos th, rho sin th); the center
    gets a single vertex with a triangle fan, the rim is flagged boundary.
    """
    verts, uvs, norms, hs, ks, umb = [], [], [], [], [], []

    def add(x, y):
        p, n, h, k, um = _vertex_data(chart, x, y)
        verts.append(p)
        uvs.append((x, y))
        norms.append(n)
        hs.append(h)
        ks.append(k)
        umb.append(um)
        return len(verts) - 1

    center = add(0.0, 0.0)
    rings = []
    for i in range(1, n_r + 1):
        rho = radius * i / n_r
        ring = []
        for j in range(n_theta):
            th = 2 * np.pi * j / n_theta
            ring.append(add(rho * np.cos(th), rho * np.sin(th)))
        rings.append(ring)
    faces = []
    first = rings[0]
    for j in range(n_theta):
        faces.append((center, first[j], first[(j + 1) % n_theta]))
    for i in range(n_r - 1):
        inner, outer = rings[i], rings[i + 1]
        for j in range(n_theta):
            a, b = inner[j], outer[j]
            c, d = outer[(j + 1) % n_theta], inner[(j + 1) % n_theta]
            faces.append((a, b, c))
            faces.append((a, c, d))
    boundary = np.zeros(len(verts), dtype=bool)
    boundary[rings[-1]] = True
    return SurfaceMesh(
        np.asarray(verts), np.asarray(faces, dtype=int), np.asarray(uvs),
        np.asarray(norms), np.asarray(hs), np.asarray(ks),
        np.asarray(umb, dtype=bool), boundary,
    )


def _face_geometry(mesh: SurfaceMesh):
    v = mesh.vertices
    f = mesh.faces
    d1 = v[f[:, 1]] - v[f[:, 0]]
    d2 = v[f[:, 2]] - v[f[:, 0]]
    g11 = lorentz_dot(d1, d1)
    g22 = lorentz_dot(d2, d2)
    g12 = lorentz_dot(d1, d2)
    gram = g11 * g22 - g12 * g12
    if np.any(gram <= 0):
        raise GeometryError("mesh contains non-spacelike triangles")
    areas = 0.5 * np.sqrt(gram)
    nrm = cross(d1, d2)
    nn = lorentz_dot(nrm, nrm)  # = -gram < 0 for spacelike faces
    nrm = nrm / np.sqrt(np.abs(nn))[:, None]
    flip = nrm[:, 2] < 0
    nrm[flip] = -nrm[flip]
    centroids = (v[f[:, 0]] + v[f[:, 1]] + v[f[:, 2]]) / 3.0
    return areas, nrm, centroids


def lorentz_area(mesh: SurfaceMesh) -> float:
    areas, _, _ = _face_geometry(mesh)
    return float(areas.sum())


def cone_volume(mesh: SurfaceMesh) -> float:
    """(1/3) * sum over faces of <centroid, N_future> * area."""
    areas, nrm, centroids = _face_geometry(mesh)
    return float((lorentz_dot(centroids, nrm) * areas).sum() / 3.0)


def _integral_over_mesh(mesh: SurfaceMesh, vertex_values: np.ndarray) -> float:
    areas, _, _ = _face_geometry(mesh)
    per_face = vertex_values[mesh.faces].mean(axis=1)
    return float((per_face * areas).sum())


def first_variation_check(mesh: SurfaceMesh, f: np.ndarray, dt: float):
    """Central-difference area/volume derivatives vs. the first-variation formulas.

    Displaces the mesh by +-dt f N and returns
        (dA_numeric, dA_formula, dV_numeric, dV_formula, dJc_numeric)
    with dA_formula = 2 * integral(H f) dA, dV_formula = -integral(f) dA and
    dJc the derivative of A + 2 c V at c = mean mesh H (zero for a
    constant-mean-curvature mesh up to discretization error).
    `f` must vanish on boundary vertices.
    """
    f = np.asarray(f, dtype=float)
    if f.shape != (len(mesh.vertices),):
        raise GeometryError("f must be a per-vertex scalar")
    if np.any(np.abs(f[mesh.boundary]) > 0):
        raise GeometryError("the variation field must vanish on the boundary")
    plus = mesh.displaced(dt, f)
    minus = mesh.displaced(-dt, f)
    da_num = (lorentz_area(plus) - lorentz_area(minus)) / (2 * dt)
    dv_num = (cone_volume(plus) - cone_volume(minus)) / (2 * dt)
    da_formula = 2.0 * _integral_over_mesh(mesh, mesh.mean_curvature * f)
    dv_formula = -_integral_over_mesh(mesh, f)
    c = float(mesh.mean_curvature.mean())
    djc_num = da_num + 2.0 * c * dv_num
    return da_num, da_formula, dv_num, dv_formula, djc_num


def export_obj(mesh: SurfaceMesh, path) -> None:
    """Wavefront-style text mesh: "v x y z" lines then 1-based "f i j k"."""
    with open(path, "w") as fh:
        for p in mesh.vertices:
            fh.write(f"v {p[0]:.17g} {p[1]:.17g} {p[2]:.17g}\n")
        for a, b, c in mesh.faces:
            fh.write(f"f {a + 1} {b + 1} {c + 1}\n")


def export_mesh_csv(mesh: SurfaceMesh, path) -> None:
    """Sidecar CSV with per-vertex u,v,x,y,z,H,K,umbilic."""
    with open(path, "w") as fh:
        fh.write("u,v,x,y,z,H,K,umbilic\n")
        for (u, v), p, h, k, um in zip(
            mesh.uv, mesh.vertices, mesh.mean_curvature,
            mesh.gauss_curvature, mesh.umbilic,
        ):
            fh.write(
                f"{u:.17g},{v:.17g},{p[0]:.17g},{p[1]:.17g},{p[2]:.17g},"
                f"{h:.17g},{k:.17g},{int(um)}\n"
            )
