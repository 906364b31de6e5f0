"""The three named gamma-matrix realizations over metric diag(1,-1,-1,-1).

Conventions fixed here:

* Dirac: g0 = diag(I, -I) and g^k = [[0, sigma_k], [-sigma_k, 0]].
* Majorana: conjugate of the Dirac set by U = [[I, s2], [s2, -I]]; every
  generator is purely imaginary, so complex conjugation flips all four.
* Weyl (chiral): conjugate of the Dirac set by U = [[I, -I], [I, I]];
  g0 is off-diagonal and i*g0*g1*g2*g3 = diag(-I, I).

The stored transforms are rational matrices whose conjugation action agrees
with the usual unitary similarity (the 1/sqrt(2) normalizations cancel).
"""
from __future__ import annotations

from dataclasses import dataclass

from .matrices import IDENTITY, Matrix4C, anticommutator, block4, scalar_matrix
from .scalars import CR_I, CR_MINUS_I, CR_MINUS_ONE, CR_ONE, CR_ZERO, ComplexRational

METRIC = (1, -1, -1, -1)

REPRESENTATION_NAMES = ("dirac", "majorana", "weyl")

_0 = CR_ZERO
_1 = CR_ONE
_m1 = CR_MINUS_ONE
_i = CR_I
_mi = CR_MINUS_I

I2 = [[_1, _0], [_0, _1]]
Z2 = [[_0, _0], [_0, _0]]
SIGMA1 = [[_0, _1], [_1, _0]]
SIGMA2 = [[_0, _mi], [_i, _0]]
SIGMA3 = [[_1, _0], [_0, _m1]]


def metric_sign(mu: int) -> int:
    return METRIC[mu]


def _neg2(b):
    return [[-x for x in row] for row in b]


def _scale2(c, b):
    return [[c * x for x in row] for row in b]


@dataclass(frozen=True)
class GammaRepresentation:
    name: str
    gammas: tuple
    gamma5: Matrix4C
    imaginary_indices: frozenset
    transform_from_dirac: Matrix4C
    transform_inverse: Matrix4C


def _gamma5_of(gammas) -> Matrix4C:
    return CR_I * (gammas[0] * gammas[1] * gammas[2] * gammas[3])


def _dirac_gammas():
    g0 = block4(I2, Z2, Z2, _neg2(I2))
    gs = [block4(Z2, s, _neg2(s), Z2) for s in (SIGMA1, SIGMA2, SIGMA3)]
    return (g0, *gs)


def _majorana_gammas():
    g0 = block4(Z2, SIGMA2, SIGMA2, Z2)
    g1 = block4(_scale2(_i, SIGMA3), Z2, Z2, _scale2(_i, SIGMA3))
    g2 = block4(Z2, _neg2(SIGMA2), SIGMA2, Z2)
    g3 = block4(_scale2(_mi, SIGMA1), Z2, Z2, _scale2(_mi, SIGMA1))
    return (g0, g1, g2, g3)


def _weyl_gammas():
    g0 = block4(Z2, I2, I2, Z2)
    gs = [block4(Z2, s, _neg2(s), Z2) for s in (SIGMA1, SIGMA2, SIGMA3)]
    return (g0, *gs)


_HALF = ComplexRational(1) / ComplexRational(2)

_BUILDERS = {
    "dirac": (
        _dirac_gammas,
        frozenset({2}),
        lambda: (IDENTITY, IDENTITY),
    ),
    "majorana": (
        _majorana_gammas,
        frozenset({0, 1, 2, 3}),
        lambda: _transform_pair(block4(I2, SIGMA2, SIGMA2, _neg2(I2))),
    ),
    "weyl": (
        _weyl_gammas,
        frozenset({2}),
        lambda: (
            block4(I2, _neg2(I2), I2, I2),
            _HALF * block4(I2, I2, _neg2(I2), I2),
        ),
    ),
}


def _transform_pair(u: Matrix4C):
    # u squares to 2*I, so the inverse is u/2
    return (u, _HALF * u)


_CACHE: dict = {}


def build_representation(name: str) -> GammaRepresentation:
    """Return one of the named realizations; results are cached."""
    key = name.lower()
    if key in _CACHE:
        return _CACHE[key]
    if key not in _BUILDERS:
        raise ValueError(f"unknown representation {name!r}; expected one of {REPRESENTATION_NAMES}")
    builder, imag, transform = _BUILDERS[key]
    gammas = builder()
    u, uinv = transform()
    rep = GammaRepresentation(
        name=key,
        gammas=tuple(gammas),
        gamma5=_gamma5_of(gammas),
        imaginary_indices=imag,
        transform_from_dirac=u,
        transform_inverse=uinv,
    )
    _CACHE[key] = rep
    return rep


def check_clifford(rep: GammaRepresentation) -> bool:
    """True iff {g^mu, g^nu} = 2 g^{mu nu} I holds exactly for all 10 pairs."""
    for mu in range(4):
        for nu in range(mu, 4):
            expected = scalar_matrix(2 * METRIC[mu]) if mu == nu else Matrix4C.zero()
            if anticommutator(rep.gammas[mu], rep.gammas[nu]) != expected:
                return False
    return True


def gamma5(rep: GammaRepresentation) -> Matrix4C:
    """i * g0 * g1 * g2 * g3 in the given realization."""
    return rep.gamma5


DIRAC = build_representation("dirac")
MAJORANA = build_representation("majorana")
WEYL = build_representation("weyl")
