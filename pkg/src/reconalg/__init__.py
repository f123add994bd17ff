"""Reconstruction algebras for cyclic surface quotient singularities.

Computes the invariant ring of ``1/r(1,a)``, its special modules, the
quiver with relations of the reconstruction algebra, and the lift of all
of these to the Artin-component deformation.
"""
from .deformation import (
    DeformedRingPresentation,
    deformed_module_classes,
    deformed_quiver,
    deformed_ring,
    specialize_central_fiber,
    weyl_generators,
)
from .errors import BoundExhausted, DomainError, LiftSearchExhausted, ReconError, VerificationError
from .fixtures import load_fixture, verify_fixture
from .groebner import GroebnerBasis, buchberger, ideal_intersection, ideal_quotient
from .invariant_ring import RingPresentation, ring_generators, ring_presentation
from .monomial import InvariantSemigroup, LaurentMonomial, MonomialModule
from .numtheory import HJFraction, hj_dual, hj_evaluate, hj_expand, versal_dimension
from .polyring import MonomialOrder, Polynomial, PolyRing, parse_polynomial, parse_polynomials
from .quiver import QuiverPresentation, build_quiver, hom_generators
from .specials import module_classes

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
