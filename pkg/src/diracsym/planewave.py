"""The six plane-wave solution families and their reinterpretation.

Bispinors are stored unnormalized (the column between the parentheses);
the squared normalization (E + eps*m)/(2E) is kept as an exact ratio, with
eps the family's mass sign.  States built on a rational mass shell carry
ComplexRational amplitudes and all identity checks on them are exact;
otherwise amplitudes are machine complex numbers with tolerance 1e-12.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction

from .momenta import OnShellMomentum, on_shell
from .scalars import ComplexRational

FLOAT_TOL = 1e-12


class Family(str, Enum):
    PSI1_PLUS = "psi1+"
    PSI2_PLUS = "psi2+"
    PSI1_MINUS = "psi1-"
    PSI2_MINUS = "psi2-"
    CHI1_PLUS = "chi1+"
    CHI2_PLUS = "chi2+"

    @classmethod
    def from_label(cls, label: str) -> "Family":
        for f in cls:
            if f.value == label:
                return f
        raise ValueError(f"unknown family {label!r}")


PSI_FAMILIES = (Family.PSI1_PLUS, Family.PSI2_PLUS, Family.PSI1_MINUS, Family.PSI2_MINUS)
CHI_FAMILIES = (Family.CHI1_PLUS, Family.CHI2_PLUS)

# (energy sign, family mass sign eps, exponent sign, spin sector)
_FAMILY_DATA = {
    Family.PSI1_PLUS: (1, 1, 1, 1),
    Family.PSI2_PLUS: (1, 1, 1, 2),
    Family.PSI1_MINUS: (-1, -1, 1, 1),
    Family.PSI2_MINUS: (-1, -1, 1, 2),
    Family.CHI1_PLUS: (1, 1, -1, 1),
    Family.CHI2_PLUS: (1, 1, -1, 2),
}


def energy_sign_of(family: Family) -> int:
    return _FAMILY_DATA[family][0]


def mass_sign_of(family: Family) -> int:
    return _FAMILY_DATA[family][1]


def exponent_sign_of(family: Family) -> int:
    return _FAMILY_DATA[family][2]


def sector_of(family: Family) -> int:
    return _FAMILY_DATA[family][3]


@dataclass(frozen=True)
class Interpretation:
    energy_sign: int
    mass_sign: int


@dataclass(frozen=True)
class PlaneWaveState:
    family: Family
    momentum: OnShellMomentum
    bispinor: tuple
    norm_factor_squared: object  # Fraction (exact) or float
    exponent_sign: int
    interpretation: Interpretation

    @property
    def exact(self) -> bool:
        return self.momentum.exact


def _pattern(family: Family, p1, p2, p3, d, one, zero, cplx):
    """Bispinor column for a family; cplx(re, im) builds a scalar."""
    a = cplx(p3 / d, 0 * p3)
    b = cplx(p1 / d, p2 / d)
    c = cplx(p1 / d, -p2 / d)
    e = cplx(-p3 / d, 0 * p3)
    if family is Family.PSI1_PLUS:
        return (one, zero, a, b)
    if family is Family.PSI2_PLUS:
        return (zero, one, c, e)
    if family in (Family.PSI1_MINUS, Family.CHI1_PLUS):
        return (a, b, one, zero)
    return (c, e, zero, one)


def bispinor_for(family: Family, momentum: OnShellMomentum):
    """The family's amplitude column at the given momentum record."""
    eps = mass_sign_of(family)
    p1, p2, p3 = momentum.p
    if momentum.exact:
        d = momentum.E + eps * momentum.m
        if d == 0:
            raise ValueError("vanishing denominator E + eps*m for this family")
        return _pattern(
            family, p1, p2, p3, d,
            ComplexRational(1), ComplexRational(0), ComplexRational,
        )
    d = float(momentum.E) + eps * float(momentum.m)
    if d == 0.0:
        raise ValueError("vanishing denominator E + eps*m for this family")
    return _pattern(
        family, float(p1), float(p2), float(p3), d,
        complex(1), complex(0), complex,
    )


def norm_factor_squared_for(family: Family, momentum: OnShellMomentum):
    eps = mass_sign_of(family)
    if momentum.exact:
        return (momentum.E + eps * momentum.m) / (2 * momentum.E)
    return (float(momentum.E) + eps * float(momentum.m)) / (2.0 * float(momentum.E))


def make_state(family, p, m, exact: bool | None = None) -> PlaneWaveState:
    """Construct a family state at 3-momentum p and mass m.

    Interpretation defaults: psi+ carries (+E, +m), psi- carries (-E, +m),
    chi+ carries the (+E, +m) reinterpreted reading; the negative reading of
    a chi state is opt-in through reinterpret_flip.
    """
    family = family if isinstance(family, Family) else Family.from_label(family)
    momentum = on_shell(p, m, energy_sign_of(family), exact=exact)
    return PlaneWaveState(
        family=family,
        momentum=momentum,
        bispinor=bispinor_for(family, momentum),
        norm_factor_squared=norm_factor_squared_for(family, momentum),
        exponent_sign=exponent_sign_of(family),
        interpretation=Interpretation(energy_sign_of(family), 1),
    )


def as_complex(z) -> complex:
    if isinstance(z, ComplexRational):
        return complex(z)
    return complex(z)


def evaluate(state: PlaneWaveState, t, x):
    """Amplitudes at spacetime point (t, x), machine precision."""
    norm = float(state.norm_factor_squared) ** 0.5
    p = [float(v) for v in state.momentum.p]
    e = float(state.momentum.E)
    arg = state.exponent_sign * (sum(pi * xi for pi, xi in zip(p, x)) - e * t)
    factor = norm * cmath.exp(1j * arg)
    return tuple(factor * as_complex(b) for b in state.bispinor)


_S3_DIAG = (Fraction(1, 2), Fraction(-1, 2), Fraction(1, 2), Fraction(-1, 2))


def s3_check(state: PlaneWaveState):
    """Spin-z eigenvalue of the bispinor, or None if not an eigenvector.

    Only defined for momentum along the 3-axis (or at rest); transverse
    momentum mixes the components and the check refuses to guess.
    """
    p1, p2, _ = state.momentum.p
    if p1 != 0 or p2 != 0:
        raise ValueError("s3_check requires p1 = p2 = 0")
    v = state.bispinor
    for lam in (Fraction(1, 2), Fraction(-1, 2)):
        if state.exact:
            if all(d * c == lam * c for d, c in zip(_S3_DIAG, v)):
                return lam
        else:
            if all(
                abs(float(d) * c - float(lam) * c) <= FLOAT_TOL for d, c in zip(_S3_DIAG, v)
            ):
                return lam
    return None


def reinterpret_flip(state: PlaneWaveState) -> PlaneWaveState:
    """Negative-energy/negative-mass reading of a chi state.

    Flips E, m and p simultaneously in the record and the attributed signs
    in the interpretation; amplitudes and squared norm are unchanged because
    numerators and denominators flip together.
    """
    if state.family not in CHI_FAMILIES:
        raise ValueError("reinterpretation applies to chi-family states only")
    flipped = state.momentum.negated()
    out = PlaneWaveState(
        family=state.family,
        momentum=flipped,
        bispinor=state.bispinor,
        norm_factor_squared=state.norm_factor_squared,
        exponent_sign=state.exponent_sign,
        interpretation=Interpretation(
            -state.interpretation.energy_sign, -state.interpretation.mass_sign
        ),
    )
    # the flip must be invisible on the amplitudes; guard against drift
    assert out.bispinor == bispinor_for(state.family, flipped)
    assert out.norm_factor_squared == norm_factor_squared_for(state.family, flipped)
    return out


def rescale(state: PlaneWaveState, c) -> PlaneWaveState:
    """Same state with every amplitude multiplied by a nonzero scalar."""
    if state.exact and not isinstance(c, ComplexRational):
        c = ComplexRational(c)
    return replace(state, bispinor=tuple(b * c for b in state.bispinor))


def bispinor_inner(u, v):
    """Standard inner product sum(conj(u_k) v_k)."""
    acc = None
    for a, b in zip(u, v):
        term = a.conjugate() * b
        acc = term if acc is None else acc + term
    return acc


def _scalar_json(z):
    if isinstance(z, ComplexRational):
        return {"re": str(z.re), "im": str(z.im)}
    return {"re": z.real, "im": z.imag}


def state_to_json(state: PlaneWaveState) -> dict:
    m = state.momentum
    return {
        "family": state.family.value,
        "p": [str(v) for v in m.p],
        "m": str(m.m),
        "E": {"exact": str(m.E)} if m.exact else {"float": float(m.E)},
        "bispinor": [_scalar_json(b) for b in state.bispinor],
        "norm_factor_squared": str(state.norm_factor_squared)
        if m.exact
        else float(state.norm_factor_squared),
        "exponent_sign": state.exponent_sign,
        "interpretation": {
            "energy_sign": state.interpretation.energy_sign,
            "mass_sign": state.interpretation.mass_sign,
        },
    }
