"""On-shell momentum records and exact momentum fixtures.

Exact mode needs E = sqrt(p^2 + m^2) rational.  Squaring a quaternion
a + b i + c j + d k gives the identity

    (a^2 - b^2 - c^2 - d^2)^2 + (2ab)^2 + (2ac)^2 + (2ad)^2 = (a^2+b^2+c^2+d^2)^2

so scaling (2ab, 2ac, 2ad) by m / (a^2 - b^2 - c^2 - d^2) produces a momentum
that is exactly on the mass-m shell.  That is the seeded generator used by the
verification suites.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .scalars import rational_sqrt

FLOAT_SHELL_TOL = 1e-12


class IrrationalEnergyError(ValueError):
    """Exact mode was requested but p^2 + m^2 is not a rational square."""


@dataclass(frozen=True)
class OnShellMomentum:
    p: tuple
    m: Fraction
    energy_sign: int
    E: object  # Fraction in exact mode, float otherwise
    exact: bool

    def __post_init__(self):
        if self.m == 0:
            raise ValueError("mass must be nonzero")
        if self.energy_sign not in (1, -1):
            raise ValueError("energy_sign must be +1 or -1")
        shell = sum(x * x for x in self.p) + self.m * self.m
        if self.exact:
            if self.E * self.E != shell:
                raise ValueError("off shell: E^2 != p^2 + m^2")
        else:
            if abs(self.E * self.E - shell) > FLOAT_SHELL_TOL * float(shell):
                raise ValueError("off shell beyond float tolerance")
        if (self.E > 0) != (self.energy_sign > 0):
            raise ValueError("sign(E) must match energy_sign")

    def negated(self) -> "OnShellMomentum":
        """Simultaneous flip of the full record: E, p and m all change sign."""
        return OnShellMomentum(
            p=tuple(-x for x in self.p),
            m=-self.m,
            energy_sign=-self.energy_sign,
            E=-self.E,
            exact=self.exact,
        )


def on_shell(p, m, energy_sign: int = 1, exact: bool | None = None) -> OnShellMomentum:
    """Build a momentum record, exact when the shell square root is rational.

    exact=True forces exact mode (raising IrrationalEnergyError when
    impossible); exact=False forces the float path.
    """
    p = tuple(Fraction(x) for x in p)
    m = Fraction(m)
    if m == 0:
        raise ValueError("mass must be nonzero")
    shell = sum(x * x for x in p) + m * m
    root = rational_sqrt(shell)
    if exact is True and root is None:
        raise IrrationalEnergyError(
            f"p^2 + m^2 = {shell} has no rational square root"
        )
    use_exact = root is not None and exact is not False
    if use_exact:
        e = root if energy_sign > 0 else -root
    else:
        e = math.sqrt(float(shell))
        e = e if energy_sign > 0 else -e
    return OnShellMomentum(p=p, m=m, energy_sign=energy_sign, E=e, exact=use_exact)


REST = (Fraction(0), Fraction(0), Fraction(0))

# classic 3-4-5 / 5-12-13 style fixtures for mass 1
FIXTURE_MOMENTA = (
    REST,
    (Fraction(0), Fraction(0), Fraction(3, 4)),
    (Fraction(0), Fraction(5, 12), Fraction(0)),
    (Fraction(8, 15), Fraction(0), Fraction(0)),
    (Fraction(1, 4), Fraction(1, 2), Fraction(1, 2)),
)


def pythagorean_momenta(count: int, seed: int, mass=1, bound: int = 9):
    """Deterministic list of exact on-shell 3-momenta for the given mass."""
    rng = random.Random(seed)
    mass = Fraction(mass)
    out = []
    while len(out) < count:
        a = rng.randint(1, bound)
        b, c, d = (rng.randint(-bound, bound) for _ in range(3))
        w = a * a - (b * b + c * c + d * d)
        if w == 0:
            continue
        scale = mass / w
        out.append((2 * a * b * scale, 2 * a * c * scale, 2 * a * d * scale))
    return out
