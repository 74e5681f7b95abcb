"""Complex polynomials, rational functions and atomic measures.

Everything downstream (closed-form transfer and impedance functions,
Cayley transforms between them, Foster-form circuit data) is carried by
the two value types defined here.  All values are immutable and all
operations are pure.

Conventions:

* polynomial coefficients are stored ascending in degree, with exact
  trailing zeros trimmed; the empty tuple is the zero polynomial;
* rational functions are normalized so the denominator is monic — no
  symbolic gcd cancellation is attempted, since exact cancellation is
  ill-posed in floating point;
* rational functions are compared by evaluation on a fixed seeded point
  set, never by coefficient equality.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly

from .errors import DegenerateError, NotHerglotzAtomicError, PoleError

# Numerical guards.  Root/residue checks follow standard companion-matrix
# practice; the pole guard is scaled by denominator coefficient size.
TAU_POLE = 1e-12
TAU_ROOT = 1e-8
TAU_RESIDUE = 1e-8


def _as_complex_tuple(coeffs) -> tuple[complex, ...]:
    out = []
    for c in coeffs:
        z = complex(c)
        if not cmath.isfinite(z):
            raise ValueError(f"non-finite coefficient {z!r}")
        out.append(z)
    # trim exact trailing zeros only
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class Polynomial:
    """Polynomial with complex coefficients, ascending degree order."""

    coeffs: tuple[complex, ...]

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", _as_complex_tuple(coeffs))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with -1 denoting the zero polynomial."""
        return len(self.coeffs) - 1

    def __call__(self, z: complex) -> complex:
        # Horner evaluation
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        a = a + (0j,) * (n - len(a))
        b = b + (0j,) * (n - len(b))
        return Polynomial([x + y for x, y in zip(a, b)])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if self.is_zero or other.is_zero:
                return Polynomial()
            prod = np.convolve(np.asarray(self.coeffs), np.asarray(other.coeffs))
            return Polynomial(prod)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, factor: complex) -> "Polynomial":
        return Polynomial([factor * c for c in self.coeffs])

    def derivative(self) -> "Polynomial":
        return Polynomial([k * c for k, c in enumerate(self.coeffs)][1:])

    def roots(self) -> np.ndarray:
        """Roots via eigenvalues of the companion matrix."""
        if self.degree < 1:
            return np.empty(0, dtype=complex)
        return npoly.polyroots(np.asarray(self.coeffs))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            term = f"({c.real:.12g}{c.imag:+.12g}i)"
            if k == 1:
                term += "z"
            elif k > 1:
                term += f"z^{k}"
            parts.append(term)
        return " + ".join(parts)


@dataclass(frozen=True)
class RationalFunction:
    """Ratio of two complex polynomials, denominator kept monic."""

    num: Polynomial
    den: Polynomial

    def __init__(self, num, den=(1.0,)):
        num = num if isinstance(num, Polynomial) else Polynomial(num)
        den = den if isinstance(den, Polynomial) else Polynomial(den)
        if den.is_zero:
            raise ZeroDivisionError("denominator is the zero polynomial")
        lead = den.coeffs[-1]
        object.__setattr__(self, "num", num.scale(1.0 / lead))
        object.__setattr__(self, "den", den.scale(1.0 / lead))

    @property
    def degrees(self) -> tuple[int, int]:
        return self.num.degree, self.den.degree

    def __call__(self, z: complex) -> complex:
        return rat_eval(self, z)

    def poles(self) -> np.ndarray:
        return self.den.roots()

    def __str__(self) -> str:
        return f"[{self.num}] / [{self.den}]"


ONE = RationalFunction((1.0,), (1.0,))


def rat_eval(r: RationalFunction, z: complex) -> complex:
    """Evaluate ``r`` at ``z``; both polynomials are evaluated Horner-style.

    Raises PoleError when the denominator value falls below the scaled
    pole guard, signalling evaluation at or too close to a pole.
    """
    z = complex(z)
    den = r.den(z)
    scale = max(1.0, max(abs(c) for c in r.den.coeffs))
    if abs(den) < TAU_POLE * scale:
        raise PoleError(f"denominator ~ 0 at z={z}")
    return r.num(z) / den


def rat_mul(r1: RationalFunction, r2: RationalFunction) -> RationalFunction:
    """Product of two rational functions (no cancellation of common factors)."""
    return RationalFunction(r1.num * r2.num, r1.den * r2.den)


def rat_add(r1: RationalFunction, r2: RationalFunction) -> RationalFunction:
    """Sum over the common denominator (no cancellation)."""
    return RationalFunction(r1.num * r2.den + r2.num * r1.den, r1.den * r2.den)


def cayley_w_to_v(w: RationalFunction) -> RationalFunction:
    """Map a transfer-side function W to the impedance side,
    V = i(W - 1)/(W + 1), performed on numerator/denominator pairs."""
    num = (w.num - w.den).scale(1j)
    den = w.num + w.den
    if den.is_zero:
        raise DegenerateError("W + 1 vanishes identically")
    return RationalFunction(num, den)


def cayley_v_to_w(v: RationalFunction) -> RationalFunction:
    """Inverse Cayley map, W = (1 - iV)/(1 + iV)."""
    num = v.den - v.num.scale(1j)
    den = v.den + v.num.scale(1j)
    if den.is_zero:
        raise DegenerateError("1 + iV vanishes identically")
    return RationalFunction(num, den)


@dataclass(frozen=True)
class AtomicMeasure:
    """Finitely many point masses on the real line, weights > 0."""

    atoms: tuple[tuple[float, float], ...]

    def __init__(self, atoms):
        pairs = sorted((float(t) + 0.0, float(w)) for t, w in atoms)
        for i, (t, w) in enumerate(pairs):
            if w <= 0:
                raise ValueError(f"weight at t={t} must be positive, got {w}")
            if i and pairs[i - 1][0] == t:
                raise ValueError(f"duplicate atom location t={t}")
        object.__setattr__(self, "atoms", tuple(pairs))

    def cauchy_transform(self, z: complex) -> complex:
        """Sum of w/(t - z) over all atoms."""
        return sum(w / (t - z) for t, w in self.atoms)

    def poisson_mass(self) -> float:
        """Sum of w/(1 + t^2); equals Im of the Cauchy transform at i."""
        return sum(w / (1.0 + t * t) for t, w in self.atoms)

    def skew_moment(self) -> float:
        """Sum of t*w/(1 + t^2); zero for measures symmetric about the
        origin, and equals Re of the Cauchy transform at i."""
        return sum(t * w / (1.0 + t * t) for t, w in self.atoms)


def partial_fractions_real_poles(r: RationalFunction) -> AtomicMeasure:
    """Extract point masses (t_j, w_j) with r(z) = sum w_j/(t_j - z).

    Requires a strictly proper function whose poles are real and simple
    and whose weights come out positive real — i.e. the rational part of
    a Herglotz function with purely atomic representing measure.
    """
    if r.num.is_zero:
        return AtomicMeasure(())
    if r.num.degree >= r.den.degree:
        raise NotHerglotzAtomicError(
            f"not strictly proper: degrees {r.degrees}")
    roots = r.den.roots()
    for i, t in enumerate(roots):
        if abs(t.imag) > TAU_ROOT:
            raise NotHerglotzAtomicError(f"complex pole {t}")
        for s in roots[:i]:
            if abs(t - s) <= TAU_ROOT:
                raise NotHerglotzAtomicError(f"repeated pole near {t}")
    dden = r.den.derivative()
    atoms = []
    for t in roots:
        t = t.real + 0.0
        # simple pole: residue = num(t)/den'(t); weight is its negative
        w = -r.num(t) / dden(t)
        if abs(w.imag) > TAU_RESIDUE * max(1.0, abs(w)) or w.real <= 0:
            raise NotHerglotzAtomicError(f"weight {w} at t={t} not positive real")
        atoms.append((t, w.real))
    return AtomicMeasure(atoms)


# Fixed seeded sample points for rational-function comparison.  Generic
# complex points: the chance of landing on a pole of any function under
# test is negligible, and near-pole points are skipped anyway.
_POINT_RNG = np.random.default_rng(20240831)
_SAMPLE_POINTS = tuple(
    complex(re, im)
    for re, im in zip(_POINT_RNG.uniform(-3, 3, 24), _POINT_RNG.uniform(-3, 3, 24))
)
N_SAMPLE_POINTS = 8


def rat_sampled_equal(r1: RationalFunction, r2: RationalFunction,
                      rel_tol: float = 1e-12) -> bool:
    """Equality by evaluation at the fixed seeded sample points.

    The first ``N_SAMPLE_POINTS`` points where both functions evaluate
    cleanly are compared with relative tolerance ``rel_tol`` (absolute
    floor 1 for values near zero).
    """
    used = 0
    for z in _SAMPLE_POINTS:
        try:
            v1, v2 = rat_eval(r1, z), rat_eval(r2, z)
        except PoleError:
            continue
        if abs(v1 - v2) > rel_tol * max(1.0, abs(v1), abs(v2)):
            return False
        used += 1
        if used == N_SAMPLE_POINTS:
            return True
    raise PoleError("too few clean sample points; functions too singular")
