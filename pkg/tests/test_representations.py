from fractions import Fraction

import pytest

from diracsym.matrices import IDENTITY, Matrix4C, anticommutator, scalar_matrix
from diracsym.representations import (
    DIRAC,
    MAJORANA,
    METRIC,
    WEYL,
    build_representation,
    check_clifford,
    gamma5,
)
from diracsym.scalars import CR_I, CR_MINUS_I, ComplexRational

ZERO = ComplexRational(0)
ONE = ComplexRational(1)


def test_dirac_gamma0_diagonal():
    assert DIRAC.gammas[0] == Matrix4C.from_rows(
        [
            [ONE, ZERO, ZERO, ZERO],
            [ZERO, ONE, ZERO, ZERO],
            [ZERO, ZERO, -ONE, ZERO],
            [ZERO, ZERO, ZERO, -ONE],
        ]
    )


def test_dirac_gamma2_entries_from_sigma_blocks():
    # expanding the sigma-block form by hand: (0,3) and (3,0) both hold -i
    g2 = DIRAC.gammas[2]
    assert g2.entry(0, 3) == CR_MINUS_I
    assert g2.entry(3, 0) == CR_MINUS_I
    assert g2.entry(1, 2) == CR_I
    assert g2.entry(2, 1) == CR_I


def test_clifford_relation_all_representations():
    for name in ("dirac", "majorana", "weyl"):
        assert check_clifford(build_representation(name))


def test_clifford_fails_with_identity_generator():
    broken = DIRAC.__class__(
        name="broken",
        gammas=(DIRAC.gammas[0], IDENTITY, DIRAC.gammas[2], DIRAC.gammas[3]),
        gamma5=DIRAC.gamma5,
        imaginary_indices=DIRAC.imaginary_indices,
        transform_from_dirac=DIRAC.transform_from_dirac,
        transform_inverse=DIRAC.transform_inverse,
    )
    assert not check_clifford(broken)


def test_weyl_anticommutators_by_direct_multiplication():
    # independent oracle: raw matrix products, no helper functions
    for mu in range(4):
        for nu in range(mu, 4):
            a, b = WEYL.gammas[mu], WEYL.gammas[nu]
            got = a * b + b * a
            want = scalar_matrix(2 * METRIC[mu]) if mu == nu else Matrix4C.zero()
            assert got == want, (mu, nu)


def test_majorana_purely_imaginary():
    for g in MAJORANA.gammas:
        assert all(x.re == 0 for x in g.flat())


def test_gamma5_dirac_block_form():
    want = Matrix4C.from_rows(
        [
            [ZERO, ZERO, ONE, ZERO],
            [ZERO, ZERO, ZERO, ONE],
            [ONE, ZERO, ZERO, ZERO],
            [ZERO, ONE, ZERO, ZERO],
        ]
    )
    assert gamma5(DIRAC) == want


def test_gamma5_squares_to_identity_and_anticommutes():
    for rep in (DIRAC, MAJORANA, WEYL):
        g5 = gamma5(rep)
        assert g5 * g5 == IDENTITY
        for mu in range(4):
            assert anticommutator(g5, rep.gammas[mu]).is_zero()


def test_adjointness():
    for rep in (DIRAC, MAJORANA, WEYL):
        assert rep.gammas[0].adjoint() == rep.gammas[0]
        for j in (1, 2, 3):
            assert rep.gammas[j].adjoint() == -rep.gammas[j]


def test_named_matrices_unitary():
    g = DIRAC.gammas
    named = (
        g[0],
        g[1] * g[2] * g[3],
        DIRAC.gamma5,
        CR_I * g[2],
        CR_I * (g[0] * g[1] * g[3]),
    )
    for m in named:
        assert m.is_unitary()


def test_similarity_transforms_reproduce_generators():
    for rep in (MAJORANA, WEYL):
        u, uinv = rep.transform_from_dirac, rep.transform_inverse
        assert u * uinv == IDENTITY
        for mu in range(4):
            assert rep.gammas[mu] == u * DIRAC.gammas[mu] * uinv
        assert rep.gamma5 == u * DIRAC.gamma5 * uinv


def test_unknown_representation_rejected():
    with pytest.raises(ValueError):
        build_representation("bogus")
