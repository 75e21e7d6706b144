"""Lorentzian linear algebra in Minkowski 3-space.

The ambient space is R^3 equipped with the index-1 metric

    <u, v> = u1*v1 + u2*v2 - u3*v3

in the standard basis E1=(1,0,0), E2=(0,1,0), E3=(0,0,1).  E3 spans the
timelike direction and the future is the timelike cone of E3 (third
coordinate positive).

All vector arguments accept anything convertible to a float array whose
last axis has length 3; `lorentz_dot`, `lorentz_norm` and `cross`
broadcast over leading axes.  Classification helpers operate on single
vectors and return enums.

A vector v is spacelike when <v,v> > 0 *or* v = 0, timelike when
<v,v> < 0, lightlike when <v,v> = 0 and v != 0.  The zero-vector
convention (spacelike) is deliberate.  Exact-zero tests use the
scale-invariant tolerance |q| <= REL_TOL * (1 + |v|_euclid^2), which
keeps exact integer inputs exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

__all__ = [
    "REL_TOL",
    "GeometryError",
    "CausalTypeError",
    "AmbiguousCaseError",
    "CausalClass",
    "Subspace",
    "as_vec3",
    "lorentz_dot",
    "lorentz_norm",
    "cross",
    "causal_class",
    "causal_class_subspace",
    "same_timelike_cone",
    "hyperbolic_angle",
    "future_directed",
    "E1",
    "E2",
    "E3",
    "METRIC",
]

#: relative tolerance used for all "is this Lorentz product zero" decisions
REL_TOL = 1e-12

E1 = np.array([1.0, 0.0, 0.0])
E2 = np.array([0.0, 1.0, 0.0])
E3 = np.array([0.0, 0.0, 1.0])

#: matrix of the metric in the standard basis, G = diag(1, 1, -1)
METRIC = np.diag([1.0, 1.0, -1.0])


class GeometryError(ValueError):
    """Domain-level failure: a precondition on causal type or geometry."""


class CausalTypeError(GeometryError):
    """An argument has the wrong causal character for the operation."""


class AmbiguousCaseError(GeometryError):
    """Input sits on a causal-case boundary within tolerance; refusing to guess."""


class CausalClass(Enum):
    SPACELIKE = "spacelike"
    TIMELIKE = "timelike"
    LIGHTLIKE = "lightlike"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


def as_vec3(v) -> np.ndarray:
    """Validate and convert to a float array with trailing axis of length 3."""
    a = np.asarray(v, dtype=float)
    if a.shape[-1:] != (3,):
        raise GeometryError(f"expected 3 coordinates, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise GeometryError("coordinates must be finite")
    return a


def lorentz_dot(u, v) -> np.ndarray | float:
    """<u,v> = u1 v1 + u2 v2 - u3 v3.  Broadcasts over leading axes."""
    u = as_vec3(u)
    v = as_vec3(v)
    r = u[..., 0] * v[..., 0] + u[..., 1] * v[..., 1] - u[..., 2] * v[..., 2]
    return r if r.ndim else float(r)


def lorentz_norm(v) -> np.ndarray | float:
    """Modulus sqrt(|<v,v>|); zero exactly for lightlike or zero vectors."""
    q = lorentz_dot(v, v)
    return np.sqrt(np.abs(q))


def _euclid_sq(v: np.ndarray) -> np.ndarray | float:
    return (v * v).sum(axis=-1)


def _is_null_product(q, scale_sq) -> bool:
    return abs(q) <= REL_TOL * (1.0 + scale_sq)


def cross(u, v) -> np.ndarray:
    """Lorentzian vector product, defined by <u x v, w> = det(u, v, w).

    Equals the Euclidean cross product reflected through the plane {z=0};
    the result is Lorentz-orthogonal to both factors.
    """
    u = as_vec3(u)
    v = as_vec3(v)
    e = np.cross(u, v)
    e[..., 2] = -e[..., 2]
    return e


def causal_class(v) -> CausalClass:
    """Causal character of a single vector (zero vector counts as spacelike)."""
    v = as_vec3(v)
    if v.ndim != 1:
        raise GeometryError("causal_class expects a single vector")
    q = lorentz_dot(v, v)
    if _is_null_product(q, _euclid_sq(v)):
        if _euclid_sq(v) <= REL_TOL:
            return CausalClass.SPACELIKE  # zero vector, by convention
        return CausalClass.LIGHTLIKE
    return CausalClass.SPACELIKE if q > 0 else CausalClass.TIMELIKE


@dataclass(frozen=True)
class Subspace:
    """One- or two-dimensional linear subspace, given by independent generators.

    `gram` is the matrix of pairwise Lorentz products of the generators;
    its signature decides the causal character of the subspace.
    """

    generators: tuple
    gram: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        gens = tuple(as_vec3(g) for g in self.generators)
        if len(gens) not in (1, 2):
            raise GeometryError("a Subspace needs 1 or 2 generators")
        # Euclidean Gram determinant detects dependence regardless of causal type.
        m = np.stack(gens)
        ge = m @ m.T
        scale = float(np.prod(1.0 + np.diag(ge)))
        if np.linalg.det(ge) <= REL_TOL * scale and len(gens) == 2:
            raise GeometryError("generators are linearly dependent")
        if len(gens) == 1 and _euclid_sq(gens[0]) <= REL_TOL:
            raise GeometryError("a single generator must be nonzero")
        object.__setattr__(self, "generators", gens)
        gl = m @ METRIC @ m.T
        object.__setattr__(self, "gram", gl)

    @property
    def dim(self) -> int:
        return len(self.generators)


def causal_class_subspace(s: Subspace) -> CausalClass:
    """Spacelike = induced metric positive definite, timelike = index 1,
    lightlike = degenerate (and the subspace is nonzero)."""
    if s.dim == 1:
        g = float(s.gram[0, 0])
        scale = float(_euclid_sq(s.generators[0]))
        if _is_null_product(g, scale):
            return CausalClass.LIGHTLIKE
        return CausalClass.SPACELIKE if g > 0 else CausalClass.TIMELIKE
    det = float(np.linalg.det(s.gram))
    scale = float(np.prod([1.0 + _euclid_sq(g) for g in s.generators]))
    if abs(det) <= REL_TOL * scale:
        return CausalClass.LIGHTLIKE
    # In index-1 ambient a definite restriction to a plane is positive definite.
    return CausalClass.SPACELIKE if det > 0 else CausalClass.TIMELIKE


def _require_timelike(v: np.ndarray, name: str) -> None:
    if causal_class(v) is not CausalClass.TIMELIKE:
        raise CausalTypeError(f"{name} must be timelike, got {causal_class(v)}")


def same_timelike_cone(u, v) -> bool:
    """True iff the timelike vectors u, v lie in the same timelike cone,
    i.e. <u,v> < 0."""
    u = as_vec3(u)
    v = as_vec3(v)
    _require_timelike(u, "u")
    _require_timelike(v, "v")
    return bool(lorentz_dot(u, v) < 0)


def hyperbolic_angle(u, v) -> float:
    """Hyperbolic angle phi >= 0 between same-cone timelike vectors:
    cosh(phi) = -<u,v> / (|u| |v|).

    Raises CausalTypeError for non-timelike input and GeometryError when the
    vectors lie in opposite cones.
    """
    u = as_vec3(u)
    v = as_vec3(v)
    _require_timelike(u, "u")
    _require_timelike(v, "v")
    d = lorentz_dot(u, v)
    if d >= 0:
        raise GeometryError("vectors lie in opposite timelike cones")
    c = -d / (lorentz_norm(u) * lorentz_norm(v))
    # reversed Cauchy-Schwarz guarantees c >= 1; clip rounding noise
    return float(np.arccosh(max(c, 1.0)))


def future_directed(v) -> bool:
    """True iff the timelike or lightlike vector v points to the future
    (third coordinate positive, equivalently <v,E3> < 0 for timelike v)."""
    v = as_vec3(v)
    cc = causal_class(v)
    if cc is CausalClass.SPACELIKE:
        raise CausalTypeError("future/past makes sense only for timelike or lightlike vectors")
    return bool(v[2] > 0)
