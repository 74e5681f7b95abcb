"""Elementary one-dimensional L-systems and their closed forms.

For a parameter lambda0 in the open upper half-plane the elementary
system has main operator [lambda0], channel [sqrt(Im lambda0)] and
directing sign +1; the colligation identity then holds exactly by
construction.  Its transfer function is the degree-one Blaschke-type
factor

    W(z) = (conj(lambda0) - z) / (lambda0 - z),

and its impedance function the one-pole Herglotz function

    V(z) = Im(lambda0) / (Re(lambda0) - z).

The skew-adjoint companion replaces the main operator by [-conj(lambda0)]
while keeping the channel, which mirrors both closed forms across the
imaginary axis.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .colligation import LSystem
from .errors import DomainError
from .ratfun import RationalFunction


def _check_upper(lambda0: complex) -> complex:
    lambda0 = complex(lambda0)
    if not cmath.isfinite(lambda0) or not lambda0.imag > 0:
        raise DomainError(f"parameter must satisfy Im > 0, got {lambda0}")
    return lambda0


@dataclass(frozen=True)
class ElementarySystem:
    lambda0: complex
    system: LSystem


@dataclass(frozen=True)
class SkewAdjointSystem:
    lambda0: complex
    system: LSystem


def make_elementary(lambda0: complex) -> ElementarySystem:
    """Build the 1x1 system ([lambda0], [sqrt(Im lambda0)], +1)."""
    lambda0 = _check_upper(lambda0)
    k = math.sqrt(lambda0.imag)
    return ElementarySystem(lambda0, LSystem([[lambda0]], [k], 1))


def make_skew_adjoint(lambda0: complex) -> SkewAdjointSystem:
    """Build the companion system ([-conj(lambda0)], [sqrt(Im lambda0)], +1)."""
    lambda0 = _check_upper(lambda0)
    k = math.sqrt(lambda0.imag)
    return SkewAdjointSystem(lambda0, LSystem([[-lambda0.conjugate()]], [k], 1))


def transfer_closed(lambda0: complex) -> RationalFunction:
    """W(z) = (conj(lambda0) - z)/(lambda0 - z), denominator made monic."""
    lambda0 = _check_upper(lambda0)
    return RationalFunction((lambda0.conjugate(), -1.0), (lambda0, -1.0))


def impedance_closed(lambda0: complex) -> RationalFunction:
    """V(z) = Im(lambda0)/(Re(lambda0) - z)."""
    lambda0 = _check_upper(lambda0)
    return RationalFunction((lambda0.imag,), (lambda0.real, -1.0))


def skew_transfer_closed(lambda0: complex) -> RationalFunction:
    """W(z) = (lambda0 + z)/(conj(lambda0) + z) of the skew companion."""
    lambda0 = _check_upper(lambda0)
    return RationalFunction((lambda0, 1.0), (lambda0.conjugate(), 1.0))


def skew_impedance_closed(lambda0: complex) -> RationalFunction:
    """V(z) = -Im(lambda0)/(Re(lambda0) + z) of the skew companion."""
    lambda0 = _check_upper(lambda0)
    return RationalFunction((-lambda0.imag,), (lambda0.real, 1.0))


def elementary_to_json(sys: ElementarySystem | SkewAdjointSystem) -> dict:
    return {"lambda0": {"re": sys.lambda0.real, "im": sys.lambda0.imag}}
