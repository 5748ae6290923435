"""Exact-arithmetic toolkit for symplectic hypergeometric groups in degree six."""
from .certify import Certificate, load_certificate, load_fixture, verify_certificate
from .cyclotomic import ClosureClass, ParameterVector, params_to_poly, zariski_closure_class
from .exactmat import Convention, RationalMatrix, companion

__version__ = "0.1.0"

__all__ = [
    "Certificate", "ClosureClass", "Convention", "ParameterVector", "RationalMatrix",
    "companion", "load_certificate", "load_fixture", "params_to_poly", "verify_certificate",
    "zariski_closure_class",
]
