"""Reduction onto the 16-monomial basis of the gamma algebra.

A canonical form maps ordered index subsets of {0,1,2,3} to scalars; the
monomial for a subset is the ascending product of its generators.  The
rewrite g^nu g^mu = 2 g^{mu nu} I - g^mu g^nu (for nu > mu) together with
(g^mu)^2 = g^{mu mu} I makes this form unique.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .expr import Gamma5, Generator, Identity, Negate, Product, ScalarLiteral, Sum
from .matrices import IDENTITY, Matrix4C, scalar_matrix
from .representations import METRIC, GammaRepresentation
from .scalars import CR_I, CR_ONE, ComplexRational

SUBSETS = (
    (),
    (0,), (1,), (2,), (3,),
    (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
    (0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3),
    (0, 1, 2, 3),
)

_SUBSET_ORDER = {s: k for k, s in enumerate(SUBSETS)}


def monomial_str(subset) -> str:
    if not subset:
        return "1"
    return "*".join(f"g{mu}" for mu in subset)


class CanonicalForm:
    """Coefficients on the 16 ascending monomials; zeros are dropped."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for key, val in coeffs.items():
                key = tuple(key)
                if key not in _SUBSET_ORDER:
                    raise ValueError(f"not an ascending index subset: {key}")
                if not isinstance(val, ComplexRational):
                    val = ComplexRational(val)
                if val:
                    c[key] = val
        self._c = c

    def coeff(self, subset) -> ComplexRational:
        return self._c.get(tuple(subset), ComplexRational(0))

    def items(self):
        """Nonzero (subset, coefficient) pairs in canonical subset order."""
        return [(s, self._c[s]) for s in SUBSETS if s in self._c]

    def support(self):
        return tuple(s for s in SUBSETS if s in self._c)

    def is_zero(self) -> bool:
        return not self._c

    def __add__(self, other):
        if not isinstance(other, CanonicalForm):
            return NotImplemented
        c = dict(self._c)
        for key, val in other._c.items():
            c[key] = c.get(key, ComplexRational(0)) + val
        return CanonicalForm(c)

    def __sub__(self, other):
        if not isinstance(other, CanonicalForm):
            return NotImplemented
        return self + other.scale(ComplexRational(-1))

    def scale(self, c) -> "CanonicalForm":
        if not isinstance(c, ComplexRational):
            c = ComplexRational(c)
        return CanonicalForm({k: v * c for k, v in self._c.items()})

    def __eq__(self, other):
        if not isinstance(other, CanonicalForm):
            return NotImplemented
        return self._c == other._c

    __hash__ = None

    def __repr__(self):
        if not self._c:
            return "CanonicalForm(0)"
        parts = [f"{coeff} {monomial_str(s)}" for s, coeff in self.items()]
        return "CanonicalForm(" + " + ".join(parts) + ")"


ZERO_FORM = CanonicalForm()
IDENTITY_FORM = CanonicalForm({(): CR_ONE})
GAMMA5_FORM = CanonicalForm({(0, 1, 2, 3): CR_I})


def monomial_product(s, t):
    """Multiply two ascending monomials; returns (integer sign, subset)."""
    out = list(s)
    sign = 1
    for a in t:
        j = len(out) - 1
        while j >= 0 and out[j] > a:
            sign = -sign
            j -= 1
        if j >= 0 and out[j] == a:
            sign *= METRIC[a]
            out.pop(j)
        else:
            out.insert(j + 1, a)
    return sign, tuple(out)


def clifford_product(a: CanonicalForm, b: CanonicalForm) -> CanonicalForm:
    acc: dict = {}
    for s, ca in a._c.items():
        for t, cb in b._c.items():
            sign, u = monomial_product(s, t)
            term = ca * cb
            if sign < 0:
                term = -term
            acc[u] = acc.get(u, ComplexRational(0)) + term
    return CanonicalForm(acc)


def canonicalize(e) -> CanonicalForm:
    """Reduce an AST (or pass through a CanonicalForm) to canonical form."""
    if isinstance(e, CanonicalForm):
        return e
    if isinstance(e, Generator):
        return CanonicalForm({(e.index,): CR_ONE})
    if isinstance(e, Gamma5):
        return GAMMA5_FORM
    if isinstance(e, Identity):
        return IDENTITY_FORM
    if isinstance(e, ScalarLiteral):
        return CanonicalForm({(): e.value})
    if isinstance(e, Negate):
        return canonicalize(e.child).scale(-1)
    if isinstance(e, Sum):
        acc = ZERO_FORM
        for t in e.terms:
            acc = acc + canonicalize(t)
        return acc
    if isinstance(e, Product):
        acc = IDENTITY_FORM
        for f in e.factors:
            acc = clifford_product(acc, canonicalize(f))
        return acc
    raise TypeError(f"not a gamma expression: {e!r}")


def expr_to_matrix(e, rep: GammaRepresentation) -> Matrix4C:
    """Direct matrix evaluation of an AST; independent of canonicalize."""
    if isinstance(e, Generator):
        return rep.gammas[e.index]
    if isinstance(e, Gamma5):
        return rep.gamma5
    if isinstance(e, Identity):
        return IDENTITY
    if isinstance(e, ScalarLiteral):
        return scalar_matrix(e.value)
    if isinstance(e, Negate):
        return -expr_to_matrix(e.child, rep)
    if isinstance(e, Sum):
        acc = Matrix4C.zero()
        for t in e.terms:
            acc = acc + expr_to_matrix(t, rep)
        return acc
    if isinstance(e, Product):
        acc = IDENTITY
        for f in e.factors:
            acc = acc * expr_to_matrix(f, rep)
        return acc
    raise TypeError(f"not a gamma expression: {e!r}")


_MONOMIAL_CACHE: dict = {}


def monomial_matrix(subset, rep: GammaRepresentation) -> Matrix4C:
    cache = _MONOMIAL_CACHE.setdefault(rep.name, {})
    subset = tuple(subset)
    if subset not in cache:
        m = IDENTITY
        for mu in subset:
            m = m * rep.gammas[mu]
        cache[subset] = m
    return cache[subset]


def to_matrix(c: CanonicalForm, rep: GammaRepresentation) -> Matrix4C:
    acc = Matrix4C.zero()
    for s, coeff in c.items():
        acc = acc + monomial_matrix(s, rep) * coeff
    return acc


def conjugate_canonical(c: CanonicalForm, rep: GammaRepresentation) -> CanonicalForm:
    """Entrywise complex conjugation expressed in the basis.

    Valid because every generator of the supported realizations is either
    purely real or purely imaginary, so conj(g^mu) = +/- g^mu.
    """
    out = {}
    for s, coeff in c.items():
        flips = sum(1 for mu in s if mu in rep.imaginary_indices)
        val = coeff.conjugate()
        if flips % 2:
            val = -val
        out[s] = val
    return CanonicalForm(out)


class Relation(Enum):
    COMMUTE = "commute"
    ANTICOMMUTE = "anticommute"
    NEITHER = "neither"


@dataclass(frozen=True)
class CommutationConstraint:
    index: int
    relation: Relation


def relation(a, b) -> Relation:
    """Classify the pair by canonicalizing ab -+ ba."""
    ca, cb = canonicalize(a), canonicalize(b)
    ab = clifford_product(ca, cb)
    ba = clifford_product(cb, ca)
    if (ab - ba).is_zero():
        return Relation.COMMUTE
    if (ab + ba).is_zero():
        return Relation.ANTICOMMUTE
    return Relation.NEITHER


def monomial_search(constraints) -> list:
    """All basis monomials satisfying every commutation constraint."""
    found = []
    for s in SUBSETS:
        mono = CanonicalForm({s: CR_ONE})
        ok = True
        for c in constraints:
            gen = CanonicalForm({(c.index,): CR_ONE})
            if relation(mono, gen) is not c.relation:
                ok = False
                break
        if ok:
            found.append(s)
    return found
