"""Fundamental groups of generalized Takahashi manifolds and cyclic branched
covers of two-bridge knots, cross-checked with exact homology oracles."""

__version__ = "0.1.0"

from .exactalg import AbelianGroup, IntMatrix, LaurentPoly, cokernel, resultant, smith_normal_form
from .fpgroup import Presentation, ShiftMap, homology, make_cyclic_presentation
from .takahashi import (PeriodicSurgeryData, SurgeryData, corollary2_presentation,
                        surgered_presentation, theorem1_presentation)
from .twobridge import (ConwayEven, KnotFraction, alexander_polynomial, conway_to_fraction,
                        cover_homology_order, fraction_to_conway)
from .cyclicpres import cyclic_presentation_for_cover, theorem5_word
from .words import Word

__all__ = [
    "AbelianGroup", "IntMatrix", "LaurentPoly", "cokernel", "resultant", "smith_normal_form",
    "Presentation", "ShiftMap", "homology", "make_cyclic_presentation",
    "PeriodicSurgeryData", "SurgeryData", "corollary2_presentation", "surgered_presentation",
    "theorem1_presentation", "ConwayEven", "KnotFraction", "alexander_polynomial",
    "conway_to_fraction", "cover_homology_order", "fraction_to_conway",
    "cyclic_presentation_for_cover", "theorem5_word", "Word",
]
