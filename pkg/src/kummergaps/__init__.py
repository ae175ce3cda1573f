"""Weierstrass gaps and pure gaps on Kummer extensions, and the AG codes they give."""

from .closedform import PureGapBox
from .codes import CodeDesign, CurveFamilyInstance, catalog, code_from_box
from .curve import INF, KummerCurve, genus, new_curve
from .errors import KummerGapsError
from .gaps import gap_set, is_gap
from .puregaps import bottom_pure_gaps, full_pure_gap_set, is_pure_gap, is_pure_gap_oracle

__all__ = [
    "INF",
    "CodeDesign",
    "CurveFamilyInstance",
    "KummerCurve",
    "KummerGapsError",
    "PureGapBox",
    "bottom_pure_gaps",
    "catalog",
    "code_from_box",
    "full_pure_gap_set",
    "gap_set",
    "genus",
    "is_gap",
    "is_pure_gap",
    "is_pure_gap_oracle",
    "new_curve",
]
