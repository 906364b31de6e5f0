"""Momentum-space Dirac operator and the two-readings classifier.

The block operator for eigenvalue symbols (E, p) and mass sign s is

    [[ (E - s*m) I , -sigma.p ],
     [  sigma.p    , (-E - s*m) I ]]

i.e. gamma.p - s*m.  A state's effective eigenvalues are its recorded ones
multiplied by the exponent sign, because i*d/dt acting on exp(s*i(p.x - E t))
scales the eigenvalues by s.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .matrices import Matrix4C
from .planewave import FLOAT_TOL, PlaneWaveState
from .scalars import ComplexRational


class EquationTag(str, Enum):
    GAMMA_P_MINUS_M = "gamma.p-m"
    GAMMA_P_PLUS_M = "gamma.p+m"


class Reading(str, Enum):
    FEYNMAN_STUECKELBERG = "feynman-stueckelberg"
    NEGATIVE_MASS_ENERGY = "negative-mass-energy"


def _operator_rows(E, p1, p2, p3, m, mass_sign, cplx):
    top = E - mass_sign * m
    bot = -E - mass_sign * m
    zero = cplx(0 * m, 0 * m)
    # sigma.p = [[p3, p1 - i p2], [p1 + i p2, -p3]]
    sp = (
        (cplx(p3, 0 * m), cplx(p1, -p2)),
        (cplx(p1, p2), cplx(-p3, 0 * m)),
    )
    rows = [
        [cplx(top, 0 * m), zero, -sp[0][0], -sp[0][1]],
        [zero, cplx(top, 0 * m), -sp[1][0], -sp[1][1]],
        [sp[0][0], sp[0][1], cplx(bot, 0 * m), zero],
        [sp[1][0], sp[1][1], zero, cplx(bot, 0 * m)],
    ]
    return rows


@dataclass(frozen=True)
class DiracOperatorMomSpace:
    E: object
    p: tuple
    m: object
    mass_sign: int
    matrix: object = field(compare=False)  # Matrix4C (exact) or row list (float)
    exact: bool = True

    def apply(self, bispinor):
        if isinstance(self.matrix, Matrix4C):
            return self.matrix.apply(bispinor)
        out = []
        for row in self.matrix:
            out.append(sum(a * complex(b) for a, b in zip(row, bispinor)))
        return tuple(out)


def assemble(E, p, m, mass_sign: int = 1) -> DiracOperatorMomSpace:
    """Operator gamma.p - mass_sign*m at eigenvalue symbols (E, p); off shell allowed."""
    if mass_sign not in (1, -1):
        raise ValueError("mass_sign must be +1 or -1")
    p = tuple(p)
    exact = not (
        isinstance(E, float) or isinstance(m, float) or any(isinstance(x, float) for x in p)
    )
    if exact:
        E = Fraction(E)
        m = Fraction(m)
        p = tuple(Fraction(x) for x in p)
        rows = _operator_rows(E, p[0], p[1], p[2], m, mass_sign, ComplexRational)
        matrix = Matrix4C.from_rows(rows)
    else:
        E, m = float(E), float(m)
        pf = tuple(float(x) for x in p)
        matrix = _operator_rows(E, pf[0], pf[1], pf[2], m, mass_sign, complex)
    return DiracOperatorMomSpace(E=E, p=p, m=m, mass_sign=mass_sign, matrix=matrix, exact=exact)


def effective_eigenvalues(state: PlaneWaveState):
    """Recorded (E, p) scaled by the exponent sign."""
    s = state.exponent_sign
    m = state.momentum
    return s * m.E, tuple(s * x for x in m.p)


def residual(state: PlaneWaveState, mass_sign: int = 1):
    """Amplitudes of (gamma.p_eff - mass_sign*m) applied to the bispinor."""
    e_eff, p_eff = effective_eigenvalues(state)
    if state.exact:
        op = assemble(e_eff, p_eff, state.momentum.m, mass_sign)
    else:
        op = assemble(float(e_eff), tuple(float(x) for x in p_eff), float(state.momentum.m), mass_sign)
    return op.apply(state.bispinor)


def residual_norm(amps) -> float:
    """Max absolute component; scale-free and exactly zero on exact zeros."""
    worst = 0.0
    for a in amps:
        if isinstance(a, ComplexRational):
            mag = math.sqrt(float(a.abs2()))
        else:
            mag = abs(a)
        worst = max(worst, mag)
    return worst


def amplitudes_vanish(amps, exact: bool) -> bool:
    if exact:
        return not any(bool(a) for a in amps)
    return residual_norm(amps) <= FLOAT_TOL


@dataclass(frozen=True)
class Classification:
    equation_tag: EquationTag
    reading: Reading
    satisfied: bool
    residual_norm: float


def classify(state: PlaneWaveState) -> list:
    """Every (equation form, reading) under which the state's residual vanishes.

    Reading (a), the reinterpreted/default one: eigenvalue symbols as
    recorded, positive mass symbol, both equation forms tested.  Reading (b),
    the negative-energy/negative-mass one: symbols negated, minus form only
    (the plus form at negated symbols is the same operator as reading (a)'s
    minus form up to an overall sign, so it would only duplicate).
    """
    mom = state.momentum
    exact = state.exact
    results = []

    def run(E, p, mass_sign, tag, reading):
        if exact:
            op = assemble(E, p, mom.m, mass_sign)
        else:
            op = assemble(float(E), tuple(float(x) for x in p), float(mom.m), mass_sign)
        amps = op.apply(state.bispinor)
        if amplitudes_vanish(amps, exact):
            results.append(
                Classification(tag, reading, True, residual_norm(amps))
            )

    run(mom.E, mom.p, 1, EquationTag.GAMMA_P_MINUS_M, Reading.FEYNMAN_STUECKELBERG)
    run(mom.E, mom.p, -1, EquationTag.GAMMA_P_PLUS_M, Reading.FEYNMAN_STUECKELBERG)
    run(
        -mom.E,
        tuple(-x for x in mom.p),
        1,
        EquationTag.GAMMA_P_MINUS_M,
        Reading.NEGATIVE_MASS_ENERGY,
    )
    return results


def determinant_identity_holds(E, p, m) -> bool:
    """det(gamma.p - m) == (E^2 - p^2 - m^2)^2, exact rationals."""
    op = assemble(Fraction(E), tuple(Fraction(x) for x in p), Fraction(m), 1)
    lam = Fraction(E) ** 2 - sum(Fraction(x) ** 2 for x in p) - Fraction(m) ** 2
    return op.matrix.det() == ComplexRational(lam * lam)


def flip_equivalence_holds(E, p, m) -> bool:
    """The eigenvalue-flipped operator is exactly minus the mass-flipped one."""
    a = assemble(-Fraction(E), tuple(-Fraction(x) for x in p), Fraction(m), 1)
    b = assemble(Fraction(E), tuple(Fraction(x) for x in p), Fraction(m), -1)
    return a.matrix == -b.matrix
