"""Exact computation engine for finite W-algebras of the queer superalgebra.

The package builds presentations of q(n), osp(1|2) and sl(1|2) with exact
rational structure constants, straightens products in the universal
enveloping algebra, reduces modulo the Whittaker ideal, projects onto the
Cartan Clifford algebra, and mechanically verifies the identity suites
exposed through :mod:`queerw.verify` and the command line.
"""

from .core import (AlgebraSpec, GeneratorId, Scalar, build_preset,
                   bracket_gen, gen_e, gen_f, grading)
from .pbw import (Element, GeneratorOrder, multiply, restraighten,
                  supercommutator)
from .whittaker import WhittakerData, whittaker_data
from .cartan import (CartanElement, char_poly, elementary_symmetric,
                     h_multiply, independence_det, supercent_check, t_matrix)

__all__ = [
    "AlgebraSpec", "GeneratorId", "Scalar", "build_preset", "bracket_gen",
    "gen_e", "gen_f", "grading", "Element", "GeneratorOrder", "multiply",
    "restraighten", "supercommutator", "WhittakerData", "whittaker_data",
    "CartanElement", "char_poly", "elementary_symmetric", "h_multiply",
    "independence_det", "supercent_check", "t_matrix",
]

__version__ = "0.1.0"
