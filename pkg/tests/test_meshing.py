import numpy as np
import numpy.testing as npt
import pytest

from minkowski3.core import GeometryError, E1, E2
from minkowski3.meshing import (
    cone_volume,
    disk_graph_mesh,
    export_mesh_csv,
    export_obj,
    first_variation_check,
    lorentz_area,
    triangulate_chart,
)
from minkowski3.rotational import catenoid_chart, hyperbolic_cap_chart
from minkowski3.surfaces import plane_chart


def bump(mesh, radius):
    rho = np.linalg.norm(mesh.uv, axis=1)
    f = np.where(
        rho < radius,
        np.exp(-1.0 / np.maximum(1e-12, 1.0 - (rho / radius) ** 2)),
        0.0,
    )
    f[mesh.boundary] = 0.0
    return f


class TestMeshGeometry:
    def test_flat_disk_area(self):
        chart = plane_chart([0, 0, 0], E1, E2)
        mesh = disk_graph_mesh(chart, 1.0, 40, 80)
        npt.assert_allclose(lorentz_area(mesh), np.pi, rtol=2e-3)

    def test_cap_area_against_closed_form(self):
        # cap piece of the unit hyperboloid over rho <= R: the graph area
        # element is sqrt(1 - |Du|^2) dx dy = dx dy / sqrt(1 + rho^2), so
        # A = int_0^R 2 pi rho / sqrt(1 + rho^2) drho = 2 pi (sqrt(1+R^2) - 1)
        chart, _ = hyperbolic_cap_chart(1.0, 1.0)
        mesh = disk_graph_mesh(chart, 1.0, 60, 120)
        exact = 2 * np.pi * (np.sqrt(2.0) - 1.0)
        npt.assert_allclose(lorentz_area(mesh), exact, rtol=2e-3)

    def test_flat_disk_cone_volume(self):
        # V = (1/3) <x, N> dA for the unit disk at height c: N = E3,
        # <x, E3> = -c, so V = -c * area / 3
        c = 0.7
        chart = plane_chart([0, 0, c], E1, E2)
        mesh = disk_graph_mesh(chart, 1.0, 40, 80)
        npt.assert_allclose(cone_volume(mesh), -c * np.pi / 3.0, rtol=2e-3)

    def test_wrapped_triangulation_closes(self):
        # wrap_v identifies the duplicate last column: 24 columns -> 23 kept
        mesh = triangulate_chart(catenoid_chart(), 12, 24, wrap_v=True)
        assert len(mesh.vertices) == 12 * 23
        assert len(mesh.faces) == 2 * 11 * 23
        assert mesh.boundary.sum() == 2 * 23


class TestFirstVariation:
    def test_zero_field(self):
        chart, _ = hyperbolic_cap_chart(1.0, 1.0)
        mesh = disk_graph_mesh(chart, 1.0, 20, 40)
        out = first_variation_check(mesh, np.zeros(len(mesh.vertices)), 1e-4)
        assert out == (0.0, 0.0, -0.0, -0.0, 0.0) or all(abs(x) < 1e-15 for x in out)

    def test_cap_bump_matches_formulas(self):
        chart, _ = hyperbolic_cap_chart(1.0, 1.0)
        mesh = disk_graph_mesh(chart, 1.0, 50, 100)
        f = bump(mesh, 1.0)
        da_n, da_f, dv_n, dv_f, _ = first_variation_check(mesh, f, 1e-4)
        assert abs(da_n - da_f) <= 0.02 * abs(da_f)
        assert abs(dv_n - dv_f) <= 0.02 * abs(dv_f)

    def test_zero_mean_field_is_critical(self):
        # constant-H mesh with integral(f) = 0: area derivative ~ 0
        chart, _ = hyperbolic_cap_chart(1.0, 1.0)
        mesh = disk_graph_mesh(chart, 1.0, 50, 100)
        f = bump(mesh, 1.0) * mesh.uv[:, 0]  # odd in x, zero integral
        da_n, da_f, _, dv_f = first_variation_check(mesh, f, 1e-4)[:4]
        scale = float(np.abs(f).max())
        assert abs(da_f) < 1e-12 * max(1, scale)
        assert abs(da_n) < 2e-4 * max(1, scale)

    def test_boundary_field_rejected(self):
        chart, _ = hyperbolic_cap_chart(1.0, 1.0)
        mesh = disk_graph_mesh(chart, 1.0, 10, 20)
        with pytest.raises(GeometryError):
            first_variation_check(mesh, np.ones(len(mesh.vertices)), 1e-4)


class TestExport:
    def test_obj_and_sidecar(self, tmp_path):
        mesh = triangulate_chart(hyperbolic_cap_chart(1.0, 1.0)[0], 5, 5)
        obj = tmp_path / "m.obj"
        csv = tmp_path / "m.csv"
        export_obj(mesh, obj)
        export_mesh_csv(mesh, csv)
        lines = obj.read_text().strip().split("\n")
        vlines = [l for l in lines if l.startswith("v ")]
        flines = [l for l in lines if l.startswith("f ")]
        assert len(vlines) == len(mesh.vertices)
        assert len(flines) == len(mesh.faces)
        # 1-based indexing, within range
        idx = np.array([[int(t) for t in l.split()[1:]] for l in flines])
        assert idx.min() >= 1 and idx.max() <= len(mesh.vertices)
        first = np.array([float(t) for t in vlines[0].split()[1:]])
        npt.assert_allclose(first, mesh.vertices[0], rtol=1e-15)
        head = csv.read_text().split("\n")[0]
        assert head == "u,v,x,y,z,H,K,umbilic"
