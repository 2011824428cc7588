"""
Weak Fano Workbench - Exact Arithmetic for Rank-2 Bundles on del Pezzo 3-folds
=============================================================================

This package mechanizes the numerical side of the classification of rank-2
weak Fano bundles on del Pezzo threefolds of Picard rank one:
- Exact rational linear algebra (exactnum)
- Numerical intersection rings and projective bundles (chow)
- Chern characters and Riemann-Roch (bundles)
- The exceptional collection on the quintic threefold (exccol)
- Resolutions and multiplicity solving (resolve)
- Weak Fano criteria and the family of lines (fano)
- 5-Kronecker quiver stability (kronecker)
"""

from .bundles import BundleClass, Catalog, chi, chi_pair
from .chow import ProjBundleRing, ThreefoldRing, PlaneRing
from .exccol import ExceptionalCollection, KClass
from .kronecker import DimVector, KroneckerRep
from .report import build_report

__version__ = "1.0.0"
__author__ = "Weak Fano Workbench Team"

__all__ = [
    "BundleClass",
    "Catalog",
    "chi",
    "chi_pair",
    "ProjBundleRing",
    "ThreefoldRing",
    "PlaneRing",
    "ExceptionalCollection",
    "KClass",
    "DimVector",
    "KroneckerRep",
    "build_report",
]
