"""Exact symbolic computation for the quantum 7-sphere as a Galois object over SU_q(2)."""

from .coeff import LaurentCoeff
from .s7 import PElement
from .suq2 import Su2Element
from .cmod import CElement
from .galois import PPElement, PCElement, chi, delta_r, quotient_eq, tau

__all__ = [
    "LaurentCoeff", "PElement", "Su2Element", "CElement", "PPElement", "PCElement",
    "chi", "delta_r", "quotient_eq", "tau",
]
__version__ = "0.1.0"
