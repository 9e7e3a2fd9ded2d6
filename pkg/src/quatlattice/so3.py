"""Exact rational rotations ``y -> x y x^-1`` of the imaginary quaternions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, NamedTuple, Tuple

from .errors import CentralQuaternion, ZeroQuaternion
from .quat import GroupElement, as_quaternion, is_central, tau_direction
from .relations import ExponentWord, parse_exponent_word

Rows = Tuple[Tuple[Fraction, ...], ...]


def _frac(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


@dataclass(frozen=True)
class RotationMatrix:
    rows: Rows

    @classmethod
    def of(cls, rows) -> "RotationMatrix":
        return cls(tuple(tuple(_frac(v) for v in row) for row in rows))

    @classmethod
    def identity(cls) -> "RotationMatrix":
        return cls.of([[int(i == j) for j in range(3)] for i in range(3)])

    def __matmul__(self, other: "RotationMatrix") -> "RotationMatrix":
        a, b = self.rows, other.rows
        return RotationMatrix(tuple(
            tuple(sum(a[i][t] * b[t][j] for t in range(3)) for j in range(3))
            for i in range(3)
        ))

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def transpose(self) -> "RotationMatrix":
        return RotationMatrix(tuple(zip(*self.rows)))

    def det(self) -> Fraction:
        (a, b, c), (d, e, f), (g, h, i) = self.rows
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)

    def trace(self) -> Fraction:
        return sum(self.rows[i][i] for i in range(3))

    def apply(self, v) -> Tuple[Fraction, ...]:
        return tuple(sum(row[j] * v[j] for j in range(3)) for row in self.rows)

    def is_identity(self) -> bool:
        return self == RotationMatrix.identity()

    def to_strings(self):
        return [[str(v) for v in row] for row in self.rows]

    def __str__(self):
        cells = self.to_strings()
        width = max(len(s) for row in cells for s in row)
        return "\n".join("[" + " ".join(s.rjust(width) for s in row) + "]" for row in cells)


def theta(x) -> RotationMatrix:
    q = as_quaternion(x)
    if q == 0:
        raise ZeroQuaternion("theta is undefined at 0")
    x0, x1, x2, x3 = q.coords
    n = x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3
    rows = (
        (x0 * x0 + x1 * x1 - x2 * x2 - x3 * x3, 2 * (x1 * x2 - x0 * x3), 2 * (x1 * x3 + x0 * x2)),
        (2 * (x1 * x2 + x0 * x3), x0 * x0 - x1 * x1 + x2 * x2 - x3 * x3, 2 * (x2 * x3 - x0 * x1)),
        (2 * (x1 * x3 - x0 * x2), 2 * (x2 * x3 + x0 * x1), x0 * x0 - x1 * x1 - x2 * x2 + x3 * x3),
    )
    return RotationMatrix(tuple(tuple(Fraction(v) / n for v in row) for row in rows))


def eta(g: GroupElement) -> RotationMatrix:
    """Rotation attached to a group element through its canonical lift."""
    return theta(g.rep)


class AxisAngle(NamedTuple):
    axis: Tuple[int, int, int]
    cos_omega: Fraction
    cos_half_sq: Fraction
    cos_half_sign: int


def rotation_axis_angle(x) -> AxisAngle:
    q = as_quaternion(x)
    if q == 0:
        raise ZeroQuaternion("no rotation for 0")
    if is_central(q):
        raise CentralQuaternion(f"{q} is central; its rotation is the identity")
    x0, x1, x2, x3 = q.coords
    n = Fraction(x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3)
    sign = (x0 > 0) - (x0 < 0)
    return AxisAngle(tau_direction(q), (x0 * x0 - x1 * x1 - x2 * x2 - x3 * x3) / n,
                     x0 * x0 / n, sign)


def is_special_orthogonal(m) -> bool:
    if not isinstance(m, RotationMatrix):
        m = RotationMatrix.of(m)
    return (m.transpose() @ m).is_identity() and m.det() == 1


def evaluate_matrix_word(word: ExponentWord, values: Dict[str, RotationMatrix]) -> RotationMatrix:
    cache: Dict[Tuple[str, int], RotationMatrix] = {}
    out = RotationMatrix.identity()
    for sym, exp in word:
        key = (sym, exp)
        if key not in cache:
            base = values[sym] if exp > 0 else values[sym].transpose()
            power = RotationMatrix.identity()
            for _ in range(abs(exp)):
                power = power @ base
            cache[key] = power
        out = out @ cache[key]
    return out


def relation_transfer_check(word, x, y) -> bool:
    """True iff the word in ``theta(x)``, ``theta(y)`` is the identity matrix."""
    if isinstance(word, str):
        word = parse_exponent_word(word)
    return evaluate_matrix_word(word, {"x": theta(x), "y": theta(y)}).is_identity()
