"""Exact verification of the twelve-conic configuration of the index-2
Halphen pencil of Hesse type: incidences, the sextic pencil, the rank-10
class lattice with its 144 exceptional classes, torsion loci, and the
arrangement invariants.  All arithmetic is exact."""

from .field import (GF, GFext, QQ_EPS, QQ_EPS_A, BadSpecializationError,
                    FieldError, MixedContextError, parse_element,
                    specialize_scalar, to_text)
from .plane import Poly3, ProjPoint, gens

__version__ = "0.1.0"
