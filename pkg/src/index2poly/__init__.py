"""Exact enumeration and verification of the regular polyhedra of index two
with vertices in one symmetry orbit.

The package builds the five admissible vertex sets (the orbits of the cube,
cuboctahedron, icosahedron, dodecahedron and icosidodecahedron), traces
candidate face polygons symbolically over exact quadratic-field arithmetic,
assembles the resulting maps, checks combinatorial regularity and index, and
exports the ten survivors as OFF meshes plus a classification report.
"""

from .exact import QuadExt, Vec3, Mat3, PHI, SQRT2, SQRT5

__all__ = ["QuadExt", "Vec3", "Mat3", "PHI", "SQRT2", "SQRT5"]
__version__ = "0.1.0"
