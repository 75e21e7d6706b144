"""Computational differential geometry in Lorentz-Minkowski 3-space.

Subpackages:

* `core`       -- metric, causal classes, cones, hyperbolic angle, product
* `isometry`   -- the Lorentz group, components, boosts, orbits
* `curves`     -- Frenet theory across all causal cases
* `surfaces`   -- fundamental forms, curvature, umbilics, catalog charts
* `meshing`    -- triangulated meshes, areas/volumes, variation checks
* `rotational` -- rotational / circle-foliated CMC profile ODEs
* `dirichlet`  -- the CMC graph equation solver (both ambients)
* `cli`        -- the `mink3` command-line front end
"""

from .core import (
    CausalClass,
    GeometryError,
    CausalTypeError,
    AmbiguousCaseError,
    Subspace,
    lorentz_dot,
    lorentz_norm,
    cross,
    causal_class,
    causal_class_subspace,
    same_timelike_cone,
    hyperbolic_angle,
    future_directed,
    E1,
    E2,
    E3,
)

__version__ = "0.1.0"
