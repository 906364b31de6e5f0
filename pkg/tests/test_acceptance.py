"""Acceptance battery: one test per exit criterion, each printing a
PASS/FAIL line.  Tolerances are pinned here: exact (zero tolerance) for
everything on rational shells, 1e-9 for the float Lorentz sample, and the
stated wall-clock budgets for the timed criteria.
"""
import json
import random
import time
from fractions import Fraction

from diracsym.canonical import (
    CommutationConstraint,
    Relation,
    canonicalize,
    expr_to_matrix,
    monomial_search,
    to_matrix,
)
from diracsym.cli import main
from diracsym.matrices import IDENTITY, anticommutator, scalar_matrix
from diracsym.momenta import REST, pythagorean_momenta
from diracsym.operators import (
    apply,
    bare_conjugation_variant,
    make_operator,
    verify_mapping,
)
from diracsym.planewave import (
    CHI_FAMILIES,
    Family,
    make_state,
    reinterpret_flip,
)
from diracsym.report import random_expression
from diracsym.representations import METRIC, build_representation
from diracsym.residual import EquationTag, Reading, classify
from diracsym.lorentz import (
    L_MINUS_DOWN,
    L_MINUS_UP,
    L_PLUS_DOWN,
    L_PLUS_UP,
    PARITY_MATRIX,
    PT_MATRIX,
    TIME_REVERSAL_MATRIX,
    act,
    boost,
    classify as classify_lorentz,
    group_components,
    is_lorentz,
    random_orthochronous,
    random_timelike_future,
)
from diracsym.scalars import ComplexRational

F = Fraction
ZERO4 = (ComplexRational(0),) * 4


def announce(num, name, ok):
    print(f"ACCEPTANCE {num} {name}: {'PASS' if ok else 'FAIL'}")
    assert ok, f"criterion {num} ({name}) failed"


def test_criterion_1_clifford_identities():
    t0 = time.perf_counter()
    ok = True
    for name in ("dirac", "majorana", "weyl"):
        rep = build_representation(name)
        for mu in range(4):
            for nu in range(mu, 4):
                want = scalar_matrix(2 * METRIC[mu]) if mu == nu else None
                got = anticommutator(rep.gammas[mu], rep.gammas[nu])
                ok = ok and (got == want if want is not None else got.is_zero())
        g5 = rep.gamma5
        ok = ok and g5 * g5 == IDENTITY
        ok = ok and all(anticommutator(g5, rep.gammas[mu]).is_zero() for mu in range(4))
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 1.0
    announce(1, f"clifford identities in {elapsed:.3f}s", ok)


def test_criterion_2_canonicalizer_oracle():
    rng = random.Random(20240)
    rep = build_representation("dirac")
    t0 = time.perf_counter()
    ok = True
    for _ in range(1000):
        e = random_expression(rng)
        if to_matrix(canonicalize(e), rep) != expr_to_matrix(e, rep):
            ok = False
            break
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 10.0
    announce(2, f"canonicalizer oracle, 1000 expressions in {elapsed:.2f}s", ok)


def test_criterion_3_constraint_solver_derivations():
    t_u = monomial_search(
        [
            CommutationConstraint(0, Relation.ANTICOMMUTE),
            CommutationConstraint(1, Relation.COMMUTE),
            CommutationConstraint(2, Relation.COMMUTE),
            CommutationConstraint(3, Relation.COMMUTE),
        ]
    )
    t_au = monomial_search(
        [
            CommutationConstraint(0, Relation.COMMUTE),
            CommutationConstraint(2, Relation.COMMUTE),
            CommutationConstraint(1, Relation.ANTICOMMUTE),
            CommutationConstraint(3, Relation.ANTICOMMUTE),
        ]
    )
    top = monomial_search(
        [CommutationConstraint(mu, Relation.ANTICOMMUTE) for mu in range(4)]
    )
    ok = t_u == [(1, 2, 3)] and t_au == [(1, 3)] and top == [(0, 1, 2, 3)]
    announce(3, "constraint-solver derivations", ok)


def test_criterion_4_solution_residuals():
    momenta = [REST] + pythagorean_momenta(100, seed=404)
    ok = True
    chi_want = {
        (EquationTag.GAMMA_P_PLUS_M, Reading.FEYNMAN_STUECKELBERG),
        (EquationTag.GAMMA_P_MINUS_M, Reading.NEGATIVE_MASS_ENERGY),
    }
    psi_want = {(EquationTag.GAMMA_P_MINUS_M, Reading.FEYNMAN_STUECKELBERG)}
    for p in momenta:
        for fam in Family:
            st = make_state(fam, p, 1)
            if not st.exact:
                ok = False
                continue
            results = classify(st)
            if not all(c.satisfied and c.residual_norm == 0.0 for c in results):
                ok = False
            tags = {(c.equation_tag, c.reading) for c in results}
            want = chi_want if fam in CHI_FAMILIES else psi_want
            if tags != want:
                ok = False
    announce(4, f"solution residuals over {len(momenta)} exact momenta", ok)


def test_criterion_5_mapping_relations():
    momenta = [(F(0), F(0), F(3, 4))] + pythagorean_momenta(20, seed=505)
    one = ComplexRational(1)
    minus = ComplexRational(-1)
    cases = (
        (make_operator("C"), "psi1+", "chi2+", one),
        (make_operator("C"), "psi2+", "chi1+", minus),
        (bare_conjugation_variant(make_operator("PT_AU")), "psi1+", "psi2+", minus),
        (bare_conjugation_variant(make_operator("PT_AU")), "psi2+", "psi1+", one),
        (make_operator("PT_U"), "psi1+", "chi1+", one),
        (make_operator("PT_U"), "psi2+", "chi2+", one),
    )
    ok = True
    for op, fin, fout, want in cases:
        phases = []
        for p in momenta:
            r = verify_mapping(op, fin, fout, p, 1)
            if not r.amplitudes_matched:
                ok = False
                break
            phases.append(r.phase_found)
        if not phases or any(ph != want for ph in phases):
            ok = False

    witness = make_state("psi1+", (0, 0, F(3, 4)), 1)
    image = apply(make_operator("C"), witness)
    ok = ok and witness.bispinor == (
        ComplexRational(1),
        ComplexRational(0),
        ComplexRational(F(1, 3)),
        ComplexRational(0),
    )
    ok = ok and image.bispinor == (
        ComplexRational(0),
        ComplexRational(F(-1, 3)),
        ComplexRational(0),
        ComplexRational(1),
    )
    announce(5, "mapping relations with measured phases", ok)


def test_criterion_6_reinterpretation_invariance():
    momenta = [REST] + pythagorean_momenta(40, seed=606)
    ok = True
    for p in momenta:
        for fam in CHI_FAMILIES:
            st = make_state(fam, p, 1)
            fl = reinterpret_flip(st)
            ok = ok and fl.bispinor == st.bispinor
            ok = ok and fl.norm_factor_squared == st.norm_factor_squared
            ok = ok and fl.momentum.p == tuple(-x for x in st.momentum.p)
            ok = ok and fl.momentum.E == -st.momentum.E and fl.momentum.m == -st.momentum.m
            ok = ok and fl.interpretation.energy_sign == -st.interpretation.energy_sign
            ok = ok and fl.interpretation.mass_sign == -st.interpretation.mass_sign
            for s in (st, fl):
                agree = s.interpretation.energy_sign == s.interpretation.mass_sign
                ok = ok and (s.norm_factor_squared > 0) is agree
    announce(6, "reinterpretation invariance", ok)


def test_criterion_7_lorentz_suite():
    t0 = time.perf_counter()
    ok = (
        classify_lorentz(PARITY_MATRIX) == L_MINUS_UP
        and classify_lorentz(TIME_REVERSAL_MATRIX) == L_MINUS_DOWN
        and classify_lorentz(PT_MATRIX) == L_PLUS_DOWN
    )
    ok = ok and len(group_components()) == 5

    rng = random.Random(707)
    for _ in range(200):
        lam = random_orthochronous(rng)
        if not (is_lorentz(lam, tol=1e-9) and classify_lorentz(lam) == L_PLUS_UP):
            ok = False
        v = random_timelike_future(rng)
        if act(lam, v).causal_class != "timelike-future":
            ok = False
        anti = (TIME_REVERSAL_MATRIX if rng.random() < 0.5 else PT_MATRIX) @ lam
        if classify_lorentz(anti).time_sign != -1:
            ok = False
        if act(anti, v).causal_class != "timelike-past":
            ok = False

    exact = boost(3, F(3, 5)) @ boost(1, F(5, 13))
    ok = ok and exact.is_exact and is_lorentz(exact)
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 5.0
    announce(7, f"lorentz suite in {elapsed:.2f}s", ok)


def test_criterion_8_deterministic_reports(capsys):
    assert main(["verify", "all", "--seed", "13"]) == 0
    first = capsys.readouterr().out
    assert main(["verify", "all", "--seed", "13"]) == 0
    second = capsys.readouterr().out
    ok = first == second and json.loads(first)["summary"]["failed"] == 0
    with capsys.disabled():
        announce(8, "byte-identical verify output", ok)
