"""Chain complexes over Z2 polynomial rings: Koszul and HOMFLY-PT cubes,
cancellation and degree-truncated homology."""
from .ring import PolyRingZ2, quotient_hilbert
from .free import (FreeComplex, GradedDims, GradingError, change_basis, graded_homology, koszul,
                   random_complex, two_step_homology, unit_cancel)
from .homfly import (SINGULAR, SMOOTH, CROSSING, homfly_cube, homfly_euler, middle_homfly_homology,
                     resolution_cycles, resolution_homology, sl_minus1_expected, sl_minus1_homology)
from .fixtures import cycle_fixtures, load_fixture

__all__ = [
    "PolyRingZ2", "quotient_hilbert", "FreeComplex", "GradedDims", "GradingError", "change_basis",
    "graded_homology", "koszul", "random_complex", "two_step_homology", "unit_cancel",
    "SINGULAR", "SMOOTH", "CROSSING", "homfly_cube", "homfly_euler", "middle_homfly_homology",
    "resolution_cycles", "resolution_homology", "sl_minus1_expected", "sl_minus1_homology",
    "cycle_fixtures", "load_fixture",
]
