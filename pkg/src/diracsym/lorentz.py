"""Real Lorentz matrices, the four components, and light-cone tracking.

Matrices with all-rational entries are handled exactly (zero tolerance);
float entries fall back to a 1e-9 componentwise tolerance.  Rational boosts
(beta = 3/5, 5/13, ...) and rational cos/sin rotations stay exact.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .scalars import rational_sqrt

FLOAT_TOL = 1e-9

_G = (1, -1, -1, -1)


@dataclass(frozen=True)
class ComponentLabel:
    det_sign: int
    time_sign: int

    @property
    def name(self) -> str:
        d = "+" if self.det_sign > 0 else "-"
        t = "up" if self.time_sign > 0 else "down"
        return f"L{d}{t}"

    def __str__(self):
        return self.name


L_PLUS_UP = ComponentLabel(1, 1)
L_MINUS_UP = ComponentLabel(-1, 1)
L_MINUS_DOWN = ComponentLabel(-1, -1)
L_PLUS_DOWN = ComponentLabel(1, -1)

ALL_COMPONENTS = (L_PLUS_UP, L_MINUS_UP, L_MINUS_DOWN, L_PLUS_DOWN)


def label_from_name(name: str) -> ComponentLabel:
    for lab in ALL_COMPONENTS:
        if lab.name == name:
            return lab
    raise ValueError(f"unknown component label {name!r}")


class LorentzMatrix:
    """Immutable real 4x4 matrix; exact when every entry is rational."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(x for x in row) for row in rows)
        if len(rows) != 4 or any(len(r) != 4 for r in rows):
            raise ValueError("need a 4x4 matrix")
        self.rows = rows

    @classmethod
    def identity(cls) -> "LorentzMatrix":
        return cls([[Fraction(int(i == j)) for j in range(4)] for i in range(4)])

    @classmethod
    def diagonal(cls, d) -> "LorentzMatrix":
        return cls([[d[i] if i == j else 0 for j in range(4)] for i in range(4)])

    @property
    def is_exact(self) -> bool:
        return all(isinstance(x, (Fraction, int)) for row in self.rows for x in row)

    def __matmul__(self, other: "LorentzMatrix") -> "LorentzMatrix":
        a, b = self.rows, other.rows
        return LorentzMatrix(
            [
                [sum(a[i][k] * b[k][j] for k in range(4)) for j in range(4)]
                for i in range(4)
            ]
        )

    def transpose(self) -> "LorentzMatrix":
        return LorentzMatrix([[self.rows[j][i] for j in range(4)] for i in range(4)])

    def det(self):
        m = [list(r) for r in self.rows]
        total = 0
        for perm, sign in _PERMS:
            term = sign
            for i, j in enumerate(perm):
                term = term * m[i][j]
            total = total + term
        return total

    def entry(self, i, j):
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, LorentzMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __repr__(self):
        return f"LorentzMatrix({[list(r) for r in self.rows]!r})"


def _permutations4():
    import itertools

    out = []
    for perm in itertools.permutations(range(4)):
        inversions = sum(
            1 for i in range(4) for j in range(i + 1, 4) if perm[i] > perm[j]
        )
        out.append((perm, -1 if inversions % 2 else 1))
    return tuple(out)


_PERMS = _permutations4()

PARITY_MATRIX = LorentzMatrix.diagonal((Fraction(1), Fraction(-1), Fraction(-1), Fraction(-1)))
TIME_REVERSAL_MATRIX = LorentzMatrix.diagonal((Fraction(-1), Fraction(1), Fraction(1), Fraction(1)))
PT_MATRIX = LorentzMatrix.diagonal((Fraction(-1), Fraction(-1), Fraction(-1), Fraction(-1)))


def is_lorentz(lam: LorentzMatrix, tol: float = FLOAT_TOL) -> bool:
    """Lambda^T g Lambda == g, exactly or within tol componentwise."""
    lt = lam.transpose()
    prod = [
        [
            sum(lt.rows[i][k] * _G[k] * lam.rows[k][j] for k in range(4))
            for j in range(4)
        ]
        for i in range(4)
    ]
    exact = lam.is_exact
    for i in range(4):
        for j in range(4):
            target = _G[i] if i == j else 0
            if exact:
                if prod[i][j] != target:
                    return False
            else:
                if abs(prod[i][j] - target) > tol:
                    return False
    return True


def classify(lam: LorentzMatrix) -> ComponentLabel:
    """(sign of det, sign of the 00 entry); requires a Lorentz matrix.

    The 00 entry of a Lorentz matrix satisfies |entry| >= 1; the identity
    sits at exactly 1 and is classified as orthochronous.
    """
    if not is_lorentz(lam):
        raise ValueError("not a Lorentz matrix")
    d = lam.det()
    t = lam.entry(0, 0)
    return ComponentLabel(1 if d > 0 else -1, 1 if t > 0 else -1)


def boost(axis: int, beta) -> LorentzMatrix:
    """Standard boost along axis 1..3; exact when gamma is rational."""
    if axis not in (1, 2, 3):
        raise ValueError("axis must be 1, 2 or 3")
    if isinstance(beta, float):
        b = beta
        if not abs(b) < 1:
            raise ValueError("|beta| must be < 1")
        g = 1.0 / math.sqrt(1.0 - b * b)
    else:
        b = Fraction(beta)
        if not abs(b) < 1:
            raise ValueError("|beta| must be < 1")
        g = rational_sqrt(1 / (1 - b * b))
        if g is None:
            b = float(b)
            g = 1.0 / math.sqrt(1.0 - b * b)
    rows = [[Fraction(int(i == j)) if not isinstance(g, float) else float(i == j) for j in range(4)] for i in range(4)]
    rows[0][0] = g
    rows[axis][axis] = g
    rows[0][axis] = -g * b
    rows[axis][0] = -g * b
    return LorentzMatrix(rows)


def rotation(axis: int, cos_val, sin_val) -> LorentzMatrix:
    """Rotation about a spatial axis given by an exact or float (cos, sin) pair."""
    if axis not in (1, 2, 3):
        raise ValueError("axis must be 1, 2 or 3")
    exact = not (isinstance(cos_val, float) or isinstance(sin_val, float))
    if exact:
        c, s = Fraction(cos_val), Fraction(sin_val)
        if c * c + s * s != 1:
            raise ValueError("cos^2 + sin^2 must equal 1 exactly")
    else:
        c, s = float(cos_val), float(sin_val)
        if abs(c * c + s * s - 1.0) > FLOAT_TOL:
            raise ValueError("cos^2 + sin^2 must equal 1 within tolerance")
    j, k = [u for u in (1, 2, 3) if u != axis]
    rows = [[(Fraction(int(i == jj)) if exact else float(i == jj)) for jj in range(4)] for i in range(4)]
    rows[j][j] = c
    rows[k][k] = c
    rows[j][k] = -s
    rows[k][j] = s
    return LorentzMatrix(rows)


def component_composition(a: ComponentLabel, b: ComponentLabel) -> ComponentLabel:
    return ComponentLabel(a.det_sign * b.det_sign, a.time_sign * b.time_sign)


def union_is_group(labels) -> bool:
    """True iff the component union contains the identity component and is closed."""
    got = set((l.det_sign, l.time_sign) for l in labels)
    if not got:
        raise ValueError("need a nonempty set of components")
    if (1, 1) not in got:
        return False
    for a in got:
        for b in got:
            if (a[0] * b[0], a[1] * b[1]) not in got:
                return False
    return True


def group_components() -> list:
    """The component subsets that form groups, among all 15 nonempty ones."""
    from itertools import combinations

    out = []
    for r in range(1, 5):
        for combo in combinations(ALL_COMPONENTS, r):
            if union_is_group(combo):
                out.append(combo)
    return out


@dataclass(frozen=True)
class FourVector:
    components: tuple

    def __post_init__(self):
        if len(self.components) != 4:
            raise ValueError("need 4 components")

    @property
    def is_exact(self) -> bool:
        return all(isinstance(x, (Fraction, int)) for x in self.components)

    def norm2(self):
        v = self.components
        return v[0] * v[0] - v[1] * v[1] - v[2] * v[2] - v[3] * v[3]

    @property
    def causal_class(self) -> str:
        n = self.norm2()
        v0 = self.components[0]
        if self.is_exact:
            if n == 0:
                return "lightlike"
        else:
            scale = sum(float(x) * float(x) for x in self.components) or 1.0
            if abs(n) <= FLOAT_TOL * scale:
                return "lightlike"
        if n < 0:
            return "spacelike"
        return "timelike-future" if v0 > 0 else "timelike-past"


def act(lam: LorentzMatrix, v: FourVector) -> FourVector:
    if not is_lorentz(lam):
        raise ValueError("not a Lorentz matrix")
    comps = tuple(
        sum(lam.rows[i][j] * v.components[j] for j in range(4)) for i in range(4)
    )
    return FourVector(comps)


EXACT_BETAS = (Fraction(3, 5), Fraction(5, 13), Fraction(8, 17), Fraction(7, 25), Fraction(20, 29))
EXACT_COS_SIN = (
    (Fraction(3, 5), Fraction(4, 5)),
    (Fraction(5, 13), Fraction(12, 13)),
    (Fraction(8, 17), Fraction(15, 17)),
    (Fraction(7, 25), Fraction(24, 25)),
)


def random_orthochronous(rng: random.Random, exact: bool = False, factors: int = 4) -> LorentzMatrix:
    """Product of random boosts and rotations; always lands in L+up."""
    lam = LorentzMatrix.identity()
    if not exact:
        lam = LorentzMatrix([[float(x) for x in row] for row in lam.rows])
    for _ in range(factors):
        axis = rng.randint(1, 3)
        if rng.random() < 0.5:
            if exact:
                beta = rng.choice(EXACT_BETAS) * rng.choice((1, -1))
            else:
                beta = rng.uniform(-0.6, 0.6)
            lam = lam @ boost(axis, beta)
        else:
            if exact:
                c, s = rng.choice(EXACT_COS_SIN)
                if rng.random() < 0.5:
                    s = -s
            else:
                theta = rng.uniform(0.0, 2.0 * math.pi)
                c, s = math.cos(theta), math.sin(theta)
            lam = lam @ rotation(axis, c, s)
    return lam


def random_timelike_future(rng: random.Random) -> FourVector:
    v = [rng.uniform(-1.0, 1.0) for _ in range(3)]
    space2 = sum(x * x for x in v)
    v0 = math.sqrt(space2 + rng.uniform(0.1, 4.0))
    return FourVector((v0, *v))
