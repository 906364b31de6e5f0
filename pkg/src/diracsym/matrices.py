"""Exact 4x4 complex-rational matrices."""
from __future__ import annotations

from fractions import Fraction

from .scalars import CR_ONE, CR_ZERO, ComplexRational, parse_rational, rational_str


class Matrix4C:
    """Immutable 4x4 matrix over ComplexRational, stored flat row-major."""

    __slots__ = ("_e",)

    def __init__(self, flat):
        flat = tuple(flat)
        if len(flat) != 16:
            raise ValueError("Matrix4C needs 16 entries")
        self._e = tuple(
            x if isinstance(x, ComplexRational) else ComplexRational(x) for x in flat
        )

    @classmethod
    def from_rows(cls, rows) -> "Matrix4C":
        return cls([x for row in rows for x in row])

    @classmethod
    def zero(cls) -> "Matrix4C":
        return _ZERO

    @classmethod
    def identity(cls) -> "Matrix4C":
        return _IDENTITY

    def entry(self, i: int, j: int) -> ComplexRational:
        return self._e[4 * i + j]

    def rows(self):
        return tuple(self._e[4 * i : 4 * i + 4] for i in range(4))

    def flat(self):
        return self._e

    def __add__(self, other):
        if not isinstance(other, Matrix4C):
            return NotImplemented
        return Matrix4C(a + b for a, b in zip(self._e, other._e))

    def __sub__(self, other):
        if not isinstance(other, Matrix4C):
            return NotImplemented
        return Matrix4C(a - b for a, b in zip(self._e, other._e))

    def __neg__(self):
        return Matrix4C(-a for a in self._e)

    def __mul__(self, other):
        if isinstance(other, Matrix4C):
            a, b = self._e, other._e
            out = [CR_ZERO] * 16
            for i in range(4):
                ro = 4 * i
                for k in range(4):
                    aik = a[ro + k]
                    if not aik:
                        continue
                    rb = 4 * k
                    for j in range(4):
                        bkj = b[rb + j]
                        if bkj:
                            out[ro + j] = out[ro + j] + aik * bkj
            return Matrix4C(out)
        if isinstance(other, (ComplexRational, int, Fraction)):
            c = other if isinstance(other, ComplexRational) else ComplexRational(other)
            return Matrix4C(a * c for a in self._e)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (ComplexRational, int, Fraction)):
            return self.__mul__(other)
        return NotImplemented

    def conjugate(self) -> "Matrix4C":
        return Matrix4C(a.conjugate() for a in self._e)

    def transpose(self) -> "Matrix4C":
        return Matrix4C(self._e[4 * j + i] for i in range(4) for j in range(4))

    def adjoint(self) -> "Matrix4C":
        return self.conjugate().transpose()

    def trace(self) -> ComplexRational:
        return self._e[0] + self._e[5] + self._e[10] + self._e[15]

    def det(self) -> ComplexRational:
        r = self.rows()
        total = CR_ZERO
        sign = CR_ONE
        for j in range(4):
            if r[0][j]:
                minor = [
                    [r[i][k] for k in range(4) if k != j] for i in range(1, 4)
                ]
                total = total + sign * r[0][j] * _det3(minor)
            sign = -sign
        return total

    def apply(self, vec):
        """Matrix-vector product on a length-4 tuple of ComplexRational."""
        out = []
        for i in range(4):
            acc = CR_ZERO
            ro = 4 * i
            for j in range(4):
                if self._e[ro + j]:
                    acc = acc + self._e[ro + j] * vec[j]
            out.append(acc)
        return tuple(out)

    def is_zero(self) -> bool:
        return not any(self._e)

    def is_unitary(self) -> bool:
        return self * self.adjoint() == _IDENTITY

    def __eq__(self, other):
        if not isinstance(other, Matrix4C):
            return NotImplemented
        return self._e == other._e

    def __hash__(self):
        return hash(self._e)

    def __repr__(self):
        body = "; ".join(
            " ".join(str(x) for x in self._e[4 * i : 4 * i + 4]) for i in range(4)
        )
        return f"Matrix4C[{body}]"

    def to_json(self) -> list:
        """Row-major array of 16 {re, im} objects with decimal-free strings."""
        return [
            {"re": rational_str(x.re), "im": rational_str(x.im)} for x in self._e
        ]

    @classmethod
    def from_json(cls, data) -> "Matrix4C":
        if len(data) != 16:
            raise ValueError("matrix JSON must have 16 entries")
        return cls(
            ComplexRational(parse_rational(d["re"]), parse_rational(d["im"]))
            for d in data
        )


def _det3(m) -> ComplexRational:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


_IDENTITY = Matrix4C(
    [CR_ONE if i == j else CR_ZERO for i in range(4) for j in range(4)]
)
_ZERO = Matrix4C([CR_ZERO] * 16)

IDENTITY = _IDENTITY
ZERO = _ZERO


def scalar_matrix(c) -> Matrix4C:
    c = c if isinstance(c, ComplexRational) else ComplexRational(c)
    return Matrix4C([c if i == j else CR_ZERO for i in range(4) for j in range(4)])


def block4(tl, tr, bl, br) -> Matrix4C:
    """Assemble a 4x4 matrix from four 2x2 blocks (nested lists)."""
    rows = []
    for i in range(2):
        rows.append(list(tl[i]) + list(tr[i]))
    for i in range(2):
        rows.append(list(bl[i]) + list(br[i]))
    return Matrix4C.from_rows(rows)


def commutator(a: Matrix4C, b: Matrix4C) -> Matrix4C:
    return a * b - b * a


def anticommutator(a: Matrix4C, b: Matrix4C) -> Matrix4C:
    return a * b + b * a


def matrix_rank(rows) -> int:
    """Rank of a list of equal-length ComplexRational vectors, exact."""
    work = [list(r) for r in rows]
    ncols = len(work[0]) if work else 0
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(work)):
            if work[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = CR_ONE / work[rank][col]
        work[rank] = [x * inv for x in work[rank]]
        for r in range(len(work)):
            if r != rank and work[r][col]:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[rank])]
        rank += 1
        if rank == len(work):
            break
    return rank
