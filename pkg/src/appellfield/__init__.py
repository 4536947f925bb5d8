"""appellfield: closed-form electrostatic and field-line potentials for
uniformly charged cylinders, tubes and disks, together with the underlying
special-function stack (Carlson symmetric elliptic integrals, Jacobi
elliptic/zeta/theta functions, Gauss/Appell/generalized hypergeometric
series) and brute-force verification oracles."""

from . import elliptic, errors, fields, geometry, hypergeom, jacobi, oracle, verify
from .geometry import (AuxGeometry, CylinderSpec, DiskSpec, FieldSample,
                       PointCharges, TubeSpec, aux)
from .hypergeom import IhygArgs, SeriesControl
from .oracle import QuadratureSpec

__all__ = [
    "AuxGeometry", "CylinderSpec", "DiskSpec", "FieldSample", "IhygArgs",
    "PointCharges", "QuadratureSpec", "SeriesControl", "TubeSpec", "aux",
    "elliptic", "errors", "fields", "geometry", "hypergeom", "jacobi",
    "oracle", "verify",
]
__version__ = "0.1.0"
