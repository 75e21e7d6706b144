"""Shared builders for analytic curve jets and random Lorentz data."""

from __future__ import annotations

import numpy as np
import pytest

from minkowski3 import isometry
from minkowski3.curves import CurveJet


def timelike_hyperbola_jet(a: float, span=(-1.0, 1.0)) -> CurveJet:
    """Unit-speed timelike curve (0, cosh(as)/a, sinh(as)/a), curvature |a|."""
    return CurveJet(
        lambda s: np.array([0.0, np.cosh(a * s) / a, np.sinh(a * s) / a]),
        lambda s: np.array([0.0, np.sinh(a * s), np.cosh(a * s)]),
        lambda s: np.array([0.0, a * np.cosh(a * s), a * np.sinh(a * s)]),
        lambda s: np.array([0.0, a * a * np.sinh(a * s), a * a * np.cosh(a * s)]),
        domain=span,
    )


def lightlike_helix_jet(span=(-3.0, 3.0)) -> CurveJet:
    """Pseudo-arc-length lightlike helix (cos s, sin s, s); torsion -1/2."""
    return CurveJet(
        lambda s: np.array([np.cos(s), np.sin(s), s]),
        lambda s: np.array([-np.sin(s), np.cos(s), 1.0]),
        lambda s: np.array([-np.cos(s), -np.sin(s), 0.0]),
        lambda s: np.array([np.sin(s), -np.cos(s), 0.0]),
        domain=span,
    )


def scaled_null_helix_jet(c: float, span=(-3.0, 3.0)) -> CurveJet:
    """Pseudo-arc-length null helix (c^2 cos(s/c), c^2 sin(s/c), c s);
    torsion -1/(2 c^2)."""
    c2 = c * c
    return CurveJet(
        lambda s: np.array([c2 * np.cos(s / c), c2 * np.sin(s / c), c * s]),
        lambda s: np.array([-c * np.sin(s / c), c * np.cos(s / c), c]),
        lambda s: np.array([-np.cos(s / c), -np.sin(s / c), 0.0]),
        lambda s: np.array([np.sin(s / c) / c, -np.cos(s / c) / c, 0.0]),
        domain=span,
    )


def euclidean_helix_jet(a: float, span=(-2.0, 2.0)) -> CurveJet:
    """(cos t, sin t, a t): timelike for |a| > 1, constant kappa and tau."""
    return CurveJet(
        lambda t: np.array([np.cos(t), np.sin(t), a * t]),
        lambda t: np.array([-np.sin(t), np.cos(t), a]),
        lambda t: np.array([-np.cos(t), -np.sin(t), 0.0]),
        lambda t: np.array([np.sin(t), -np.cos(t), 0.0]),
        domain=span,
    )


def random_timelike_jet(rng: np.random.Generator, check_ts) -> CurveJet:
    """Random analytic timelike curve with trigonometric coordinates."""
    while True:
        lin = rng.uniform(-0.4, 0.4, size=3)
        lin[2] = rng.uniform(2.0, 3.0)
        amp = rng.uniform(-0.3, 0.3, size=(3, 2))
        om = rng.uniform(0.5, 1.5, size=(3, 2))

        def x(t, lin=lin, amp=amp, om=om):
            return np.array([
                lin[i] * t
                + amp[i, 0] * np.cos(om[i, 0] * t)
                + amp[i, 1] * np.sin(om[i, 1] * t)
                for i in range(3)
            ])

        def dx(t, lin=lin, amp=amp, om=om):
            return np.array([
                lin[i]
                - amp[i, 0] * om[i, 0] * np.sin(om[i, 0] * t)
                + amp[i, 1] * om[i, 1] * np.cos(om[i, 1] * t)
                for i in range(3)
            ])

        def ddx(t, amp=amp, om=om):
            return np.array([
                -amp[i, 0] * om[i, 0] ** 2 * np.cos(om[i, 0] * t)
                - amp[i, 1] * om[i, 1] ** 2 * np.sin(om[i, 1] * t)
                for i in range(3)
            ])

        def dddx(t, amp=amp, om=om):
            return np.array([
                amp[i, 0] * om[i, 0] ** 3 * np.sin(om[i, 0] * t)
                - amp[i, 1] * om[i, 1] ** 3 * np.cos(om[i, 1] * t)
                for i in range(3)
            ])

        jet = CurveJet(x, dx, ddx, dddx, domain=(-1.0, 1.0))
        q = [jet.velocity(t) for t in check_ts]
        if all(v[0] ** 2 + v[1] ** 2 - v[2] ** 2 < -0.1 for v in q):
            return jet


def random_pp_motion(rng: np.random.Generator) -> isometry.RigidMotion:
    """Random element of the special ortocrone component with a translation."""
    a = (
        isometry.boost_timelike(rng.uniform(0, 2 * np.pi))
        @ isometry.boost_spacelike(rng.uniform(-1.5, 1.5))
        @ isometry.boost_timelike(rng.uniform(0, 2 * np.pi))
        @ isometry.boost_lightlike(rng.uniform(-1.0, 1.0))
    )
    return isometry.RigidMotion(a, rng.uniform(-2, 2, size=3))


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
