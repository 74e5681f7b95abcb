"""Matrix-backed canonical L-systems and resolvent evaluation.

An L-system here is a colligation (T, K, J) on a finite-dimensional state
space with a one-dimensional input-output space: T is the main operator,
K the channel column, and J = +/-1 the directing sign, tied together by
the colligation identity Im T = K J K*.

The two evaluators below work directly off dense linear solves and serve
as the independent oracle for every closed form in the package:

    transfer(z)  = 1 - 2i K* (T - zI)^(-1) K J
    impedance(z) = K* (Re T - zI)^(-1) K
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, SingularResolventError

#: Default bound on ||Im T - K J K*|| / (1 + ||T||) for a valid system.
TAU_COLLIGATION = 1e-9


def _freeze(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=complex)
    a.flags.writeable = False
    return a


@dataclass(frozen=True)
class LSystem:
    """Colligation (T, K, J) with scalar input-output space.

    T is n-by-n complex, K a length-n complex column, J is +1 or -1.
    Construction checks shapes only; use :func:`validate` to test the
    colligation identity itself (deliberately broken systems must remain
    constructible so that validation can report on them).
    """

    T: np.ndarray
    K: np.ndarray
    J: int

    def __init__(self, T, K, J=1):
        T = np.atleast_2d(np.asarray(T, dtype=complex))
        K = np.asarray(K, dtype=complex).reshape(-1)
        if T.ndim != 2 or T.shape[0] != T.shape[1]:
            raise DimensionError(f"main operator must be square, got {T.shape}")
        if K.shape[0] != T.shape[0]:
            raise DimensionError(
                f"channel length {K.shape[0]} != state dimension {T.shape[0]}")
        if J not in (1, -1):
            raise DimensionError(f"directing sign must be +1 or -1, got {J!r}")
        if not (np.isfinite(T).all() and np.isfinite(K).all()):
            raise ValueError("non-finite entries in system matrices")
        object.__setattr__(self, "T", _freeze(T))
        object.__setattr__(self, "K", _freeze(K))
        object.__setattr__(self, "J", int(J))

    @property
    def dim(self) -> int:
        return self.T.shape[0]

    def spectrum(self) -> np.ndarray:
        """Eigenvalues of the main operator."""
        return np.linalg.eigvals(self.T)


@dataclass(frozen=True)
class ValidationReport:
    residual: float
    threshold: float
    tol: float
    passed: bool


def validate(sys: LSystem, tol: float = TAU_COLLIGATION) -> ValidationReport:
    """Check the colligation identity Im T = K J K*.

    The residual ||(T - T*)/2i - J K K*|| (Frobenius) is compared against
    tol * (1 + ||T||).
    """
    im_t = (sys.T - sys.T.conj().T) / 2j
    outer = sys.J * np.outer(sys.K, sys.K.conj())
    residual = float(np.linalg.norm(im_t - outer))
    threshold = tol * (1.0 + float(np.linalg.norm(sys.T)))
    return ValidationReport(residual, threshold, tol, residual <= threshold)


def _solve_guarded(a: np.ndarray, b: np.ndarray, what: str) -> np.ndarray:
    # smallest singular value against n*eps*||A||: n stays tiny, so a full
    # SVD per evaluation is cheap and gives a reliable singularity signal
    s = np.linalg.svd(a, compute_uv=False)
    if s[-1] <= a.shape[0] * np.finfo(float).eps * s[0]:
        raise SingularResolventError(what)
    return np.linalg.solve(a, b)


def transfer_eval(sys: LSystem, z: complex) -> complex:
    """Transfer function by resolvent: 1 - 2i K*(T - zI)^(-1) K J."""
    z = complex(z)
    a = sys.T - z * np.eye(sys.dim)
    x = _solve_guarded(a, sys.K, f"z={z} is in the spectrum of the main operator")
    return complex(1.0 - 2j * np.vdot(sys.K, x) * sys.J)


def impedance_eval(sys: LSystem, z: complex) -> complex:
    """Impedance function by resolvent: K*(Re T - zI)^(-1) K."""
    z = complex(z)
    re_t = (sys.T + sys.T.conj().T) / 2.0
    a = re_t - z * np.eye(sys.dim)
    x = _solve_guarded(a, sys.K, f"z={z} is in the spectrum of Re T")
    return complex(np.vdot(sys.K, x))


# -- JSON wire format ---------------------------------------------------

def _c_to_json(z: complex) -> dict:
    return {"re": float(z.real), "im": float(z.imag)}


def _c_from_json(doc) -> complex:
    return complex(float(doc["re"]), float(doc["im"]))


def lsystem_to_json(sys: LSystem) -> dict:
    """Descriptor of the form {"T": [[{re,im},..],..], "K": [{re,im},..], "J": 1}."""
    return {
        "T": [[_c_to_json(v) for v in row] for row in sys.T],
        "K": [_c_to_json(v) for v in sys.K],
        "J": sys.J,
    }


def lsystem_from_json(doc: dict) -> LSystem:
    t = [[_c_from_json(v) for v in row] for row in doc["T"]]
    k = [_c_from_json(v) for v in doc["K"]]
    return LSystem(t, k, int(doc.get("J", 1)))
