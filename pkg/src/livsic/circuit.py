"""Foster-form reactance data and LC ladder synthesis.

Foster data (a0, {(a_k, b_k)}) with a0 >= 0, a_k > 0 and distinct b_k > 0
describes the rational Herglotz function

    M(z) = -a0/z + sum_k a_k z / (b_k^2 - z^2),

whose representing measure is atomic: mass a0 at the origin and a_k/2 at
+/- b_k.  The substitution Z(p) = M(ip)/i produces a positive-real
driving-point impedance

    Z(p) = a0/p + sum_k a_k p / (b_k^2 + p^2),

realized as a series chain: a capacitor 1/a0 (absent when a0 = 0)
followed by parallel LC blocks with L_k = a_k/b_k^2 and C_k = 1/a_k, each
resonating at b_k = 1/sqrt(L_k C_k).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .analysis import DonoghueClassification, classify_at_i
from .elementary import _check_upper
from .errors import FosterSpecError
from .ratfun import AtomicMeasure, RationalFunction, rat_add


@dataclass(frozen=True)
class FosterStage:
    a: float
    b: float


@dataclass(frozen=True)
class FosterSpec:
    a0: float
    stages: tuple[FosterStage, ...]

    def __init__(self, a0: float, stages=()):
        a0 = float(a0)
        stages = tuple(
            s if isinstance(s, FosterStage) else FosterStage(float(s[0]), float(s[1]))
            for s in stages)
        if a0 < 0:
            raise FosterSpecError(f"origin weight a0 must be >= 0, got {a0}")
        for s in stages:
            if s.a <= 0 or s.b <= 0:
                raise FosterSpecError(f"stage weights must be positive, got {s}")
        bs = [s.b for s in stages]
        if len(set(bs)) != len(bs):
            raise FosterSpecError(f"resonances must be pairwise distinct, got {bs}")
        object.__setattr__(self, "a0", a0)
        object.__setattr__(self, "stages", stages)


@dataclass(frozen=True)
class LCStage:
    inductance: float
    capacitance: float

    @property
    def resonance(self) -> float:
        return 1.0 / math.sqrt(self.inductance * self.capacitance)


@dataclass(frozen=True)
class Netlist:
    """Series chain of parallel LC blocks, optionally led by a capacitor."""

    series_capacitor: float | None
    stages: tuple[LCStage, ...]
    topology: str = "series chain of parallel LC blocks"

    def __post_init__(self):
        if self.series_capacitor is not None and self.series_capacitor <= 0:
            raise FosterSpecError("series capacitance must be positive")
        for s in self.stages:
            if s.inductance <= 0 or s.capacitance <= 0:
                raise FosterSpecError("stage component values must be positive")


def foster_to_herglotz(spec: FosterSpec) -> RationalFunction:
    """Assemble M(z) = -a0/z + sum a_k z/(b_k^2 - z^2) over a common
    denominator.  The origin term is omitted entirely when a0 = 0 so the
    denominator carries no spurious root there."""
    terms = []
    if spec.a0 > 0:
        terms.append(RationalFunction((-spec.a0,), (0.0, 1.0)))
    for s in spec.stages:
        terms.append(RationalFunction((0.0, s.a), (s.b * s.b, 0.0, -1.0)))
    if not terms:
        return RationalFunction((0.0,), (1.0,))
    out = terms[0]
    for t in terms[1:]:
        out = rat_add(out, t)
    return out


def measure_atoms(spec: FosterSpec) -> AtomicMeasure:
    """Atomic representing measure: a0 at 0 and a_k/2 at +/- b_k."""
    atoms = []
    if spec.a0 > 0:
        atoms.append((0.0, spec.a0))
    for s in spec.stages:
        atoms.append((s.b, s.a / 2.0))
        atoms.append((-s.b, s.a / 2.0))
    return AtomicMeasure(atoms)


def foster_mass(spec: FosterSpec) -> float:
    """a = a0 + sum a_k/(b_k^2 + 1) = Im M(i), the class-deciding number."""
    return spec.a0 + sum(s.a / (s.b * s.b + 1.0) for s in spec.stages)


def classify_foster(spec: FosterSpec) -> DonoghueClassification:
    """Donoghue class of M from circuit data; M(i) = i * foster_mass."""
    return classify_at_i(1j * foster_mass(spec))


def synthesize(spec: FosterSpec) -> Netlist:
    """Component values for the series chain realizing Z(p)."""
    c0 = 1.0 / spec.a0 if spec.a0 > 0 else None
    stages = tuple(LCStage(s.a / (s.b * s.b), 1.0 / s.a) for s in spec.stages)
    return Netlist(c0, stages)


def netlist_to_foster(netlist: Netlist) -> FosterSpec:
    """Recover Foster data: a0 = 1/C0, a_k = 1/C_k, b_k = 1/sqrt(L_k C_k)."""
    a0 = 0.0 if netlist.series_capacitor is None else 1.0 / netlist.series_capacitor
    return FosterSpec(a0, [(1.0 / s.capacitance, s.resonance) for s in netlist.stages])


def positive_real_z(spec: FosterSpec) -> RationalFunction:
    """Z(p) = a0/p + sum a_k p/(b_k^2 + p^2), a positive-real function of p."""
    terms = []
    if spec.a0 > 0:
        terms.append(RationalFunction((spec.a0,), (0.0, 1.0)))
    for s in spec.stages:
        terms.append(RationalFunction((0.0, s.a), (s.b * s.b, 0.0, 1.0)))
    if not terms:
        return RationalFunction((0.0,), (1.0,))
    out = terms[0]
    for t in terms[1:]:
        out = rat_add(out, t)
    return out


def skew_coupling_foster(lambda0: complex) -> FosterSpec:
    """Foster data of the impedance of the coupling of an elementary
    system with its skew-adjoint companion: single stage with weight
    2 Im(lambda0) at resonance |lambda0| (so M(z) = 2 Im(l) z/(|l|^2 - z^2))."""
    lambda0 = _check_upper(lambda0)
    return FosterSpec(0.0, [(2.0 * lambda0.imag, abs(lambda0))])


def skew_coupling_circuit(lambda0: complex) -> Netlist:
    """Parallel LC block attached to the elementary/skew-adjoint coupling:
    L = Im(lambda0)/|lambda0|^2 and C = 1/Im(lambda0).

    Note the LC product fixes only the resonance 1/sqrt(LC) = |lambda0|;
    these component values carry half the Foster stage weight of
    :func:`skew_coupling_foster` (a bookkeeping convention, not a
    different resonant circuit).
    """
    lambda0 = _check_upper(lambda0)
    m2 = lambda0.real ** 2 + lambda0.imag ** 2
    return Netlist(None, (LCStage(lambda0.imag / m2, 1.0 / lambda0.imag),))


def emit_netlist(netlist: Netlist) -> str:
    """Deterministic line-oriented netlist text.

    Optional series capacitor line first, then per-stage inductor and
    capacitor lines sharing a node pair (parallel block); values printed
    with 12 significant digits; LF line endings; terminated by ".end".
    """
    lines = []
    node = 0
    if netlist.series_capacitor is not None:
        lines.append(f"C0 n{node} n{node + 1} {netlist.series_capacitor:#.12g}")
        node += 1
    for k, s in enumerate(netlist.stages, start=1):
        lines.append(f"L{k} n{node} n{node + 1} {s.inductance:#.12g}")
        lines.append(f"C{k} n{node} n{node + 1} {s.capacitance:#.12g}")
        node += 1
    lines.append(".end")
    return "\n".join(lines) + "\n"


def foster_to_json(spec: FosterSpec) -> dict:
    return {"a0": spec.a0, "stages": [{"a": s.a, "b": s.b} for s in spec.stages]}


def foster_from_json(doc: dict) -> FosterSpec:
    return FosterSpec(float(doc["a0"]),
                      [(float(s["a"]), float(s["b"])) for s in doc.get("stages", [])])
