"""Verification suites and report emission.

Every check record carries a short anchor naming the identity it exercises
(or "plumbing" for infrastructure checks).  Reports are deterministic:
given the same (suite, seed, representation) the emitted JSON is
byte-identical across runs.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from .canonical import (
    SUBSETS,
    CanonicalForm,
    CommutationConstraint,
    Relation,
    canonicalize,
    clifford_product,
    expr_to_matrix,
    monomial_matrix,
    monomial_search,
    monomial_str,
    to_matrix,
)
from .expr import Gamma5, Generator, Identity, Negate, Product, ScalarLiteral, Sum
from .lorentz import (
    FourVector,
    L_MINUS_DOWN,
    L_MINUS_UP,
    L_PLUS_DOWN,
    L_PLUS_UP,
    LorentzMatrix,
    PARITY_MATRIX,
    PT_MATRIX,
    TIME_REVERSAL_MATRIX,
    act,
    boost,
    classify as lorentz_classify,
    group_components,
    is_lorentz,
    random_orthochronous,
    random_timelike_future,
)
from .matrices import IDENTITY, anticommutator, matrix_rank
from .momenta import FIXTURE_MOMENTA, REST, pythagorean_momenta
from .operators import (
    DiscreteOperator,
    apply as apply_operator,
    bare_conjugation_variant,
    derived_monomials,
    intertwine_check,
    make_operator,
    pairing_table,
    phases_equal,
    verify_mapping,
)
from .planewave import (
    CHI_FAMILIES,
    Family,
    bispinor_inner,
    make_state,
    reinterpret_flip,
    s3_check,
)
from .representations import (
    DIRAC,
    REPRESENTATION_NAMES,
    build_representation,
    check_clifford,
)
from .residual import (
    EquationTag,
    Reading,
    classify as classify_state,
    determinant_identity_holds,
    flip_equivalence_holds,
)
from .scalars import CR_I, CR_ONE, ComplexRational

SUITE_NAMES = ("clifford", "solutions", "symmetries", "lorentz", "all")


@dataclass(frozen=True)
class CheckRecord:
    check_id: str
    anchor: str
    status: str  # "pass" | "fail"
    detail: str


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    seed: int
    representation: str
    version: str
    checks: tuple

    @property
    def passed(self) -> int:
        return sum(1 for c in self.checks if c.status == "pass")

    @property
    def failed(self) -> int:
        return sum(1 for c in self.checks if c.status == "fail")

    @property
    def all_passed(self) -> bool:
        return self.failed == 0


def _record(checks, check_id, anchor, ok, detail=""):
    checks.append(CheckRecord(check_id, anchor, "pass" if ok else "fail", detail))


# ---------------------------------------------------------------- clifford

def random_expression(rng: random.Random, depth: int = 4):
    """Random AST: depth <= 4, product length <= 4, small rational scalars."""
    roll = rng.random()
    if depth <= 0 or roll < 0.40:
        leaf = rng.random()
        if leaf < 0.45:
            return Generator(rng.randrange(4))
        if leaf < 0.60:
            return Gamma5()
        if leaf < 0.70:
            return Identity()
        re = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
        im = Fraction(rng.randint(-2, 2), rng.randint(1, 2))
        return ScalarLiteral(ComplexRational(re, im))
    if roll < 0.55:
        return Negate(random_expression(rng, depth - 1))
    if roll < 0.85:
        n = rng.randint(2, 4)
        return Product(tuple(random_expression(rng, depth - 1) for _ in range(n)))
    n = rng.randint(2, 3)
    return Sum(tuple(random_expression(rng, depth - 1) for _ in range(n)))


def _named_unitary_parts():
    return (
        ("g0", CanonicalForm({(0,): CR_ONE})),
        ("g1*g2*g3", CanonicalForm({(1, 2, 3): CR_ONE})),
        ("g5", CanonicalForm({(0, 1, 2, 3): CR_I})),
        ("i*g2", CanonicalForm({(2,): CR_I})),
        ("i*g0*g1*g3", CanonicalForm({(0, 1, 3): CR_I})),
    )


def suite_clifford(seed: int, rep_name: str) -> list:
    checks = []
    rng = random.Random(seed)

    for name in REPRESENTATION_NAMES:
        rep = build_representation(name)
        ok = check_clifford(rep)
        g5 = rep.gamma5
        ok = ok and g5 * g5 == IDENTITY
        ok = ok and all(
            anticommutator(g5, rep.gammas[mu]).is_zero() for mu in range(4)
        )
        ok = ok and rep.gammas[0].adjoint() == rep.gammas[0]
        ok = ok and all(
            rep.gammas[j].adjoint() == -rep.gammas[j] for j in (1, 2, 3)
        )
        _record(
            checks,
            f"clifford:relations:{name}",
            "{g^mu,g^nu} = 2 g^{mu nu} I; g5 anticommutes and squares to I",
            ok,
            f"representation={name}",
        )

    for name in REPRESENTATION_NAMES:
        rep = build_representation(name)
        ok = all(to_matrix(part, rep).is_unitary() for _, part in _named_unitary_parts())
        _record(
            checks,
            f"clifford:unitary-catalog:{name}",
            "g0, g1*g2*g3, g5, i*g2, i*g0*g1*g3 are all unitary",
            ok,
            f"representation={name}",
        )

    rep = build_representation(rep_name)
    n_expr = 1000
    bad = 0
    for _ in range(n_expr):
        e = random_expression(rng)
        if to_matrix(canonicalize(e), rep) != expr_to_matrix(e, rep):
            bad += 1
    _record(
        checks,
        f"clifford:canonical-oracle:{rep_name}",
        "canonical form evaluates to the same matrix as direct evaluation",
        bad == 0,
        f"expressions={n_expr} mismatches={bad}",
    )

    bad = 0
    for _ in range(200):
        a = random_expression(rng, 3)
        b = random_expression(rng, 3)
        ca, cb = canonicalize(a), canonicalize(b)
        if canonicalize(Product((a, b))) != clifford_product(ca, cb):
            bad += 1
        if canonicalize(ca) != ca:
            bad += 1
    _record(
        checks,
        "clifford:canonical-homomorphism",
        "canonicalize is idempotent and multiplicative",
        bad == 0,
        f"pairs=200 mismatches={bad}",
    )

    solver_cases = (
        (
            "unitary-time-reversal",
            [(0, Relation.ANTICOMMUTE), (1, Relation.COMMUTE), (2, Relation.COMMUTE), (3, Relation.COMMUTE)],
            [(1, 2, 3)],
        ),
        (
            "antiunitary-time-reversal",
            [(0, Relation.COMMUTE), (1, Relation.ANTICOMMUTE), (2, Relation.COMMUTE), (3, Relation.ANTICOMMUTE)],
            [(1, 3)],
        ),
        (
            "all-anticommuting",
            [(mu, Relation.ANTICOMMUTE) for mu in range(4)],
            [(0, 1, 2, 3)],
        ),
        (
            "parity",
            [(0, Relation.COMMUTE), (1, Relation.ANTICOMMUTE), (2, Relation.ANTICOMMUTE), (3, Relation.ANTICOMMUTE)],
            [(0,)],
        ),
    )
    ok = True
    details = []
    for label, cons, expected in solver_cases:
        got = monomial_search([CommutationConstraint(i, r) for i, r in cons])
        details.append(f"{label}->{[monomial_str(s) for s in got]}")
        ok = ok and got == expected
    _record(
        checks,
        "clifford:monomial-solver",
        "commutation constraints single out g1*g2*g3, g1*g3, g5 monomial, g0",
        ok,
        "; ".join(details),
    )

    rep = build_representation(rep_name)
    vectors = [list(monomial_matrix(s, rep).flat()) for s in SUBSETS]
    rank = matrix_rank(vectors)
    _record(
        checks,
        f"clifford:basis-rank:{rep_name}",
        "the 16 basis monomials are linearly independent matrices",
        rank == 16,
        f"rank={rank}",
    )

    for name in ("majorana", "weyl"):
        other = build_representation(name)
        ok = True
        for _ in range(25):
            e = random_expression(rng, 3)
            c = canonicalize(e)
            transported = (
                other.transform_from_dirac
                * to_matrix(c, DIRAC)
                * other.transform_inverse
            )
            if to_matrix(c, other) != transported:
                ok = False
        _record(
            checks,
            f"clifford:similarity:{name}",
            "canonical forms evaluate consistently across realizations",
            ok,
            f"samples=25 target={name}",
        )

    return checks


# ---------------------------------------------------------------- solutions

def _solution_momenta(seed: int, count: int = 100):
    return list(FIXTURE_MOMENTA) + pythagorean_momenta(count, seed)


def suite_solutions(seed: int) -> list:
    checks = []
    momenta = _solution_momenta(seed)

    ok = True
    for p in momenta:
        for fam in Family:
            st = make_state(fam, p, 1)
            mom = st.momentum
            if not mom.exact or mom.E * mom.E != sum(x * x for x in mom.p) + mom.m * mom.m:
                ok = False
    _record(
        checks,
        "solutions:mass-shell",
        "E^2 = p^2 + m^2 exactly on every constructed state",
        ok,
        f"momenta={len(momenta)} families=6",
    )

    ok = True
    for p in momenta:
        for fam in Family:
            st = make_state(fam, p, 1)
            tags = {(c.equation_tag, c.reading) for c in classify_state(st)}
            if fam in CHI_FAMILIES:
                want = {
                    (EquationTag.GAMMA_P_PLUS_M, Reading.FEYNMAN_STUECKELBERG),
                    (EquationTag.GAMMA_P_MINUS_M, Reading.NEGATIVE_MASS_ENERGY),
                }
            else:
                want = {(EquationTag.GAMMA_P_MINUS_M, Reading.FEYNMAN_STUECKELBERG)}
            if tags != want:
                ok = False
    _record(
        checks,
        "solutions:residual-zero",
        "psi states solve gamma.p-m; chi states satisfy both readings",
        ok,
        f"momenta={len(momenta)}",
    )

    ok = True
    for p in momenta[:40]:
        for fam in CHI_FAMILIES:
            st = make_state(fam, p, 1)
            flipped = reinterpret_flip(st)
            if flipped.bispinor != st.bispinor:
                ok = False
            if flipped.norm_factor_squared != st.norm_factor_squared:
                ok = False
            if flipped.interpretation.energy_sign != -st.interpretation.energy_sign:
                ok = False
            if flipped.interpretation.mass_sign != -st.interpretation.mass_sign:
                ok = False
            if flipped.momentum.p != tuple(-x for x in st.momentum.p):
                ok = False
            if flipped.momentum.E != -st.momentum.E or flipped.momentum.m != -st.momentum.m:
                ok = False
    _record(
        checks,
        "solutions:flip-invariance",
        "simultaneous E, m, p flip leaves chi amplitudes and norm bit-identical",
        ok,
        "families=chi1+,chi2+",
    )

    ok = True
    for p in momenta[:40]:
        for fam in CHI_FAMILIES:
            st = make_state(fam, p, 1)
            for s in (st, reinterpret_flip(st)):
                agree = s.interpretation.energy_sign == s.interpretation.mass_sign
                if (s.norm_factor_squared > 0) != agree:
                    ok = False
    _record(
        checks,
        "solutions:density-sign",
        "squared norm positive exactly when attributed E and m signs agree",
        ok,
        "readings=default,flipped",
    )

    pairs = ((Family.PSI1_PLUS, Family.PSI2_PLUS), (Family.PSI1_MINUS, Family.PSI2_MINUS), (Family.CHI1_PLUS, Family.CHI2_PLUS))
    ok = True
    for p in momenta[:40]:
        for f1, f2 in pairs:
            u = make_state(f1, p, 1).bispinor
            v = make_state(f2, p, 1).bispinor
            if bool(bispinor_inner(u, v)):
                ok = False
    _record(
        checks,
        "solutions:orthogonality",
        "the two bispinors of each family pair are orthogonal",
        ok,
        "pairs=3",
    )

    expected_s3 = {
        Family.PSI1_PLUS: Fraction(1, 2),
        Family.PSI2_PLUS: Fraction(-1, 2),
        Family.PSI1_MINUS: Fraction(1, 2),
        Family.PSI2_MINUS: Fraction(-1, 2),
        Family.CHI1_PLUS: Fraction(1, 2),
        Family.CHI2_PLUS: Fraction(-1, 2),
    }
    ok = True
    for p3 in (Fraction(0), Fraction(3, 4), Fraction(-5, 12)):
        for fam, want in expected_s3.items():
            got = s3_check(make_state(fam, (0, 0, p3), 1))
            if got != want:
                ok = False
    _record(
        checks,
        "solutions:spin-z",
        "longitudinal states are spin-z eigenvectors with the family's eigenvalue",
        ok,
        "axis=3",
    )

    rng = random.Random(seed + 1)
    ok = True
    for _ in range(50):
        e = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        p = tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(3))
        m = Fraction(rng.randint(1, 9), rng.randint(1, 4))
        if not determinant_identity_holds(e, p, m):
            ok = False
        if not flip_equivalence_holds(e, p, m):
            ok = False
    _record(
        checks,
        "solutions:operator-determinant",
        "det(gamma.p - m) = (E^2 - p^2 - m^2)^2; eigenvalue flip = minus mass flip",
        ok,
        "triples=50",
    )

    return checks


# ---------------------------------------------------------------- symmetries

_MAPPING_CASES = (
    ("C", Family.PSI1_PLUS, Family.CHI2_PLUS, ComplexRational(1)),
    ("C", Family.PSI2_PLUS, Family.CHI1_PLUS, ComplexRational(-1)),
    ("PT_AU:bare", Family.PSI1_PLUS, Family.PSI2_PLUS, ComplexRational(-1)),
    ("PT_AU:bare", Family.PSI2_PLUS, Family.PSI1_PLUS, ComplexRational(1)),
    ("PT_U", Family.PSI1_PLUS, Family.CHI1_PLUS, ComplexRational(1)),
    ("PT_U", Family.PSI2_PLUS, Family.CHI2_PLUS, ComplexRational(1)),
)


def _mapping_operator(tag: str) -> DiscreteOperator:
    if tag == "PT_AU:bare":
        return bare_conjugation_variant(make_operator("PT_AU"))
    return make_operator(tag)


def mapping_battery(samples) -> list:
    """One record per mapping relation, phase measured across (p, m) samples."""
    results = []
    for tag, fin, fout, want in _MAPPING_CASES:
        op = _mapping_operator(tag)
        phases = []
        ok = True
        for p, m in samples:
            rep = verify_mapping(op, fin, fout, p, m)
            if not rep.amplitudes_matched:
                ok = False
                break
            phases.append(rep.phase_found)
        if ok:
            ok = all(phases_equal(ph, phases[0]) for ph in phases) and phases_equal(
                phases[0], want
            )
        results.append((tag, fin, fout, want, phases[0] if phases else None, ok))
    return results


def suite_symmetries(seed: int, rep_name: str, reference=None) -> list:
    """reference, when given, is an extra exact (p, m) pair to run the
    mapping relations at, on top of the seeded sample."""
    checks = []
    rep = build_representation(rep_name)
    momenta = [REST, (Fraction(0), Fraction(0), Fraction(3, 4))] + pythagorean_momenta(20, seed + 2)
    samples = [(p, 1) for p in momenta]
    if reference is not None:
        ref_p, ref_m = reference
        samples = [(tuple(Fraction(x) for x in ref_p), Fraction(ref_m))] + samples

    if rep_name == "dirac":
        for tag, fin, fout, want, got, ok in mapping_battery(samples):
            _record(
                checks,
                f"symmetries:map:{tag}:{fin.value}",
                f"{tag.split(':')[0]} maps {fin.value} to {fout.value}",
                ok,
                f"phase={got} expected={want} momenta={len(samples)}",
            )

        witness = make_state(Family.PSI1_PLUS, (0, 0, Fraction(3, 4)), 1)
        image = apply_operator(make_operator("C"), witness)
        got = image.bispinor
        ok = (
            witness.bispinor
            == (
                ComplexRational(1),
                ComplexRational(0),
                ComplexRational(Fraction(1, 3)),
                ComplexRational(0),
            )
            and got
            == (
                ComplexRational(0),
                ComplexRational(Fraction(-1, 3)),
                ComplexRational(0),
                ComplexRational(1),
            )
        )
        _record(
            checks,
            "symmetries:witness:C",
            "charge conjugation sends (1,0,1/3,0) to (0,-1/3,0,1) at p=(0,0,3/4), m=1",
            ok,
            f"got={tuple(str(a) for a in got)}",
        )

        ok = True
        details = []
        p_ref = (Fraction(0), Fraction(0), Fraction(3, 4))
        pt_u = make_operator("PT_U")
        t_u = make_operator("T_U")
        parity = make_operator("P")
        ratios = []
        for fam in Family:
            st = make_state(fam, p_ref, 1)
            via = apply_operator(parity, apply_operator(t_u, st))
            direct = apply_operator(pt_u, st)
            if via.family is not direct.family or via.momentum.p != direct.momentum.p:
                ok = False
                continue
            num, den = None, None
            for a, b in zip(via.bispinor, direct.bispinor):
                if bool(b):
                    num, den = a, b
                    break
            ratio = num / den
            ratios.append(ratio)
            if any(a != ratio * b for a, b in zip(via.bispinor, direct.bispinor)):
                ok = False
        ok = ok and all(r == ratios[0] for r in ratios) and ratios[0].is_unit_modulus()
        details.append(f"phase={ratios[0] if ratios else None}")
        _record(
            checks,
            "symmetries:composition",
            "P composed with unitary T equals the unitary PT up to one unit phase",
            ok,
            "; ".join(details),
        )

        ok = True
        for name in ("P", "PT_U", "C"):
            op = make_operator(name)
            for fam in (Family.PSI1_PLUS, Family.PSI2_PLUS):
                st = make_state(fam, p_ref, 1)
                twice = apply_operator(op, apply_operator(op, st))
                if twice.family is not st.family or twice.momentum.p != st.momentum.p:
                    ok = False
                    continue
                ratio = None
                for a, b in zip(twice.bispinor, st.bispinor):
                    if bool(b):
                        ratio = a / b
                        break
                if ratio is None or not ratio.is_unit_modulus():
                    ok = False
                if any(a != ratio * b for a, b in zip(twice.bispinor, st.bispinor)):
                    ok = False
        _record(
            checks,
            "symmetries:involutions",
            "P, unitary PT and C square to the identity up to a unit phase",
            ok,
            "families=psi1+,psi2+",
        )

        ct = pairing_table(make_operator("C"), p_ref, 1)
        pt = pairing_table(pt_u, p_ref, 1)
        ok = (
            ct[Family.PSI1_PLUS] is Family.CHI2_PLUS
            and ct[Family.PSI2_PLUS] is Family.CHI1_PLUS
            and pt[Family.PSI1_PLUS] is Family.CHI1_PLUS
            and pt[Family.PSI2_PLUS] is Family.CHI2_PLUS
        )
        _record(
            checks,
            "symmetries:pairing",
            "C crosses the spin sectors; the unitary PT preserves them",
            ok,
            f"C:psi1+->{ct[Family.PSI1_PLUS].value} PT_U:psi1+->{pt[Family.PSI1_PLUS].value}",
        )

        m_op = make_operator("M")
        st = make_state(Family.PSI1_PLUS, p_ref, 1)
        image = apply_operator(m_op, st)
        ok = (
            image.bispinor == st.bispinor
            and image.family is st.family
            and image.interpretation.mass_sign == -st.interpretation.mass_sign
            and image.interpretation.energy_sign == st.interpretation.energy_sign
        )
        _record(
            checks,
            "symmetries:mass-flip",
            "the mass-flip operator changes attribution only",
            ok,
            "",
        )

    ok = True
    details = []
    for name in ("P", "T_U", "PT_U", "T_AU", "PT_AU", "C"):
        op = make_operator(name, rep)
        good = intertwine_check(op, 1, rep)
        details.append(f"{name}={'ok' if good else 'FAIL'}")
        ok = ok and good
    g5_fixed_coords = DiscreteOperator(
        name="G5_MASS_FLIP",
        matrix_part=CanonicalForm({(0, 1, 2, 3): CR_I}),
        conjugates=False,
        time_sign=1,
        space_sign=1,
        phase=CR_ONE,
        mass_action=-1,
    )
    good = intertwine_check(g5_fixed_coords, -1, rep)
    details.append(f"g5-mass-flip={'ok' if good else 'FAIL'}")
    ok = ok and good
    _record(
        checks,
        f"symmetries:intertwine:{rep_name}",
        "conjugation contracts hold; g5 with coordinates fixed flips the mass",
        ok,
        "; ".join(details),
    )

    ok = True
    details = []
    for name in ("P", "T_U", "PT_U", "T_AU", "PT_AU", "C"):
        op = make_operator(name, rep)
        found = derived_monomials(op, rep)
        expected = op.matrix_part.support()
        good = len(found) == 1 and found[0] == expected[0]
        details.append(f"{name}->{monomial_str(found[0]) if found else 'none'}")
        ok = ok and good
    _record(
        checks,
        f"symmetries:solver-consistency:{rep_name}",
        "the constraint solver re-derives every catalog matrix part",
        ok,
        "; ".join(details),
    )

    if rep_name == "majorana":
        op = make_operator("C", rep)
        found = derived_monomials(op, rep)
        ok = found == [()]
        _record(
            checks,
            "symmetries:majorana-conjugation",
            "charge conjugation reduces to plain complex conjugation when all generators are imaginary",
            ok,
            f"monomial={monomial_str(found[0]) if found else 'none'}",
        )

    return checks


# ---------------------------------------------------------------- lorentz

def suite_lorentz(seed: int) -> list:
    checks = []
    rng = random.Random(seed + 3)

    ok = (
        lorentz_classify(PARITY_MATRIX) == L_MINUS_UP
        and lorentz_classify(TIME_REVERSAL_MATRIX) == L_MINUS_DOWN
        and lorentz_classify(PT_MATRIX) == L_PLUS_DOWN
        and lorentz_classify(boost(3, Fraction(3, 5))) == L_PLUS_UP
    )
    _record(
        checks,
        "lorentz:discrete-labels",
        "P, T, PT land in L-up, L-down, L+down; boosts stay in L+up",
        ok,
        "",
    )

    groups = group_components()
    names = sorted(",".join(l.name for l in combo) for combo in groups)
    expected = sorted(
        [
            "L+up",
            "L+up,L-up",
            "L+up,L+down",
            "L+up,L-down",
            "L+up,L-up,L-down,L+down",
        ]
    )
    ok = len(groups) == 5 and names == expected
    _record(
        checks,
        "lorentz:component-closure",
        "exactly five component unions are closed groups",
        ok,
        f"found={len(groups)}",
    )

    ok = True
    flips_ok = True
    for _ in range(200):
        lam = random_orthochronous(rng)
        if not is_lorentz(lam):
            ok = False
        if lorentz_classify(lam) != L_PLUS_UP:
            ok = False
        v = random_timelike_future(rng)
        if act(lam, v).causal_class != "timelike-future":
            ok = False
        flipped = PT_MATRIX @ lam if rng.random() < 0.5 else TIME_REVERSAL_MATRIX @ lam
        lab = lorentz_classify(flipped)
        if lab.time_sign != -1:
            flips_ok = False
        if act(flipped, v).causal_class != "timelike-past":
            flips_ok = False
    _record(
        checks,
        "lorentz:orthochronous-sample",
        "orthochronous products preserve the future light-cone half",
        ok,
        "samples=200 tol=1e-9",
    )
    _record(
        checks,
        "lorentz:antichronous-flip",
        "composing with T or PT flips the time sign and the cone half",
        flips_ok,
        "samples=200",
    )

    ok = True
    for _ in range(40):
        lam = random_orthochronous(rng, exact=True)
        if not lam.is_exact or not is_lorentz(lam):
            ok = False
        if lorentz_classify(lam) != L_PLUS_UP:
            ok = False
    b = boost(3, Fraction(3, 5))
    ok = ok and b.entry(0, 0) == Fraction(5, 4)
    ok = ok and (b @ boost(3, Fraction(-3, 5))) == LorentzMatrix.identity()
    _record(
        checks,
        "lorentz:exact-boosts",
        "rational boosts and rotations satisfy the defining relation exactly",
        ok,
        "samples=40",
    )

    ok = True
    for _ in range(60):
        lam = random_orthochronous(rng)
        v = random_timelike_future(rng)
        before = v.norm2()
        after = act(lam, v).norm2()
        scale = abs(before) + 1.0
        if abs(after - before) > 1e-9 * scale:
            ok = False
    m = Fraction(2)
    rest = FourVector((m, Fraction(0), Fraction(0), Fraction(0)))
    moved = act(PT_MATRIX, rest)
    ok = ok and moved.components[0] == -m and moved.causal_class == "timelike-past"
    _record(
        checks,
        "lorentz:interval-invariance",
        "v.v is invariant and only antichronous maps join the cone halves",
        ok,
        "samples=60",
    )

    return checks


# ---------------------------------------------------------------- assembly

def run_suite(name: str, seed: int = 0, rep: str = "dirac", reference=None) -> SuiteReport:
    """Execute a verification suite; deterministic given (name, seed, rep).

    reference is an optional exact (p, m) pair the symmetry mapping
    relations are additionally run at.
    """
    if name not in SUITE_NAMES:
        raise ValueError(f"unknown suite {name!r}; expected one of {SUITE_NAMES}")
    if rep not in REPRESENTATION_NAMES:
        raise ValueError(f"unknown representation {rep!r}")
    checks = []
    if name in ("clifford", "all"):
        checks += suite_clifford(seed, rep)
    if name in ("solutions", "all"):
        checks += suite_solutions(seed)
    if name in ("symmetries", "all"):
        checks += suite_symmetries(seed, rep, reference)
    if name in ("lorentz", "all"):
        checks += suite_lorentz(seed)
    return SuiteReport(
        suite=name,
        seed=seed,
        representation=rep,
        version=__version__,
        checks=tuple(checks),
    )


def report_to_obj(report: SuiteReport) -> dict:
    return {
        "suite": report.suite,
        "seed": report.seed,
        "representation": report.representation,
        "version": report.version,
        "checks": [
            {
                "id": c.check_id,
                "anchor": c.anchor,
                "status": c.status,
                "detail": c.detail,
            }
            for c in report.checks
        ],
        "summary": {
            "total": len(report.checks),
            "passed": report.passed,
            "failed": report.failed,
        },
    }


def report_from_obj(obj: dict) -> SuiteReport:
    return SuiteReport(
        suite=obj["suite"],
        seed=obj["seed"],
        representation=obj["representation"],
        version=obj["version"],
        checks=tuple(
            CheckRecord(c["id"], c["anchor"], c["status"], c["detail"])
            for c in obj["checks"]
        ),
    )


def emit(report: SuiteReport, fmt: str = "json") -> str:
    """Render a report; JSON round-trips losslessly, markdown is tabular."""
    if fmt == "json":
        return json.dumps(report_to_obj(report), indent=2)
    if fmt in ("md", "markdown"):
        lines = [
            f"# verification report: {report.suite}",
            "",
            f"- seed: {report.seed}",
            f"- representation: {report.representation}",
            f"- version: {report.version}",
            f"- result: {report.passed}/{len(report.checks)} passed",
            "",
            "| check | anchor | status | detail |",
            "| --- | --- | --- | --- |",
        ]
        for c in report.checks:
            lines.append(
                f"| {c.check_id} | {c.anchor} | {c.status} | {c.detail} |"
            )
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
