"""Stuquandle colorings and Boltzmann-weight state sums for stuck links."""

from .algebra import (AxiomReport, FiniteBinOp, Stuquandle,
                      enumerate_affine_stuquandles, make_affine_stuquandle,
                      make_alexander_stuquandle, make_conjugation_singquandle,
                      verify_quandle, verify_singquandle, verify_stuquandle)
from .coloring import affine_coloring_count, counting_invariant, enumerate_colorings
from .diagram import Crossing, StuckDiagram, from_code, to_code, unknot, validate_diagram
from .statesum import (BWVector, StateSumPolynomial, boltzmann_weight,
                       poly_to_string, state_sum)
from .weights import (WeightReport, WeightTriple, check_strong_compatibility,
                      search_boltzmann_weights, verify_boltzmann_weight,
                      weight_from_polynomial)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
