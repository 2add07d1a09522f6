"""Exact construction of modular forms from invariants of binary forms."""
from ._backend import BACKEND
from .binforms import (
    CATALOG,
    BinaryFormSpec,
    Convention,
    CovariantSpec,
    InvariantSpec,
    act,
    catalog,
    form_poly,
    transvectant,
    verify_invariance,
)
from .exactnum import CoeffK, GaussianRational
from .modforms import EllipticForm, basis, delta, eisenstein, identify, membership
from .multipoly import MultiPoly
from .psi import psi_apply, rankin_cohen
from .qseries import QSeries

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CATALOG",
    "BinaryFormSpec",
    "CoeffK",
    "Convention",
    "CovariantSpec",
    "EllipticForm",
    "GaussianRational",
    "InvariantSpec",
    "MultiPoly",
    "QSeries",
    "act",
    "basis",
    "catalog",
    "delta",
    "eisenstein",
    "form_poly",
    "identify",
    "membership",
    "psi_apply",
    "rankin_cohen",
    "transvectant",
    "verify_invariance",
]
