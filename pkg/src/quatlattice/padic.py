"""Truncated p-adic matrices for the quaternion embedding into PGL_2.

Elements are always compared through their quaternion canonical form; the
matrices here are only a cross-check, computed modulo ``p**k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .gensets import require_odd_prime
from .quat import as_quaternion

Matrix2 = Tuple[Tuple[int, int], Tuple[int, int]]


@dataclass(frozen=True)
class PadicParams:
    p: int
    k: int
    c: int
    d: int

    @property
    def modulus(self) -> int:
        return self.p ** self.k

    def residual(self) -> int:
        return (self.c * self.c + self.d * self.d + 1) % self.modulus


def _solve_mod_p(p: int) -> Tuple[int, int]:
    if p % 4 == 1:
        for c in range(p):
            if (c * c + 1) % p == 0:
                return c, 0
    for c in range(p):
        for d in range(p):
            if (c * c + d * d + 1) % p == 0:
                return c, d
    raise AssertionError(f"no solution mod {p}")  # unreachable for odd p


def _hensel(root: int, other: int, p: int, k: int) -> int:
    """Lift ``root`` so that root^2 + other^2 + 1 = 0 mod p^k, ``other`` fixed."""
    for j in range(2, k + 1):
        mod = p ** j
        f = root * root + other * other + 1
        root = (root - f * pow(2 * root, -1, mod)) % mod
    return root


def solve_cd(p: int, k: int = 1) -> PadicParams:
    """``c, d`` with ``c^2 + d^2 + 1 = 0 mod p^k``; ``d = 0`` when ``p = 1 mod 4``."""
    p = require_odd_prime(p)
    if k < 1:
        raise ValueError("precision must be at least 1")
    c, d = _solve_mod_p(p)
    mod = p ** k
    if c % p:
        c = _hensel(c, d, p, k)
    else:
        d = _hensel(d, c, p, k)
    params = PadicParams(p, k, c % mod, d % mod)
    assert params.residual() == 0
    return params


def psi_matrix_mod_pk(x, params: PadicParams) -> Matrix2:
    q = as_quaternion(x)
    if not q.is_integral():
        raise ValueError("an integer quaternion is required")
    x0, x1, x2, x3 = q.as_ints()
    c, d, m = params.c, params.d, params.modulus
    return (
        ((x0 + x1 * c + x3 * d) % m, (-x1 * d + x2 + x3 * c) % m),
        ((-x1 * d - x2 + x3 * c) % m, (x0 - x1 * c - x3 * d) % m),
    )


def matmul_mod(a: Matrix2, b: Matrix2, m: int) -> Matrix2:
    return tuple(
        tuple(sum(a[i][t] * b[t][j] for t in range(2)) % m for j in range(2))
        for i in range(2)
    )


def det_mod(a: Matrix2, m: int) -> int:
    return (a[0][0] * a[1][1] - a[0][1] * a[1][0]) % m


def is_scalar_mod(a: Matrix2, m: int) -> bool:
    return a[0][1] % m == 0 and a[1][0] % m == 0 and (a[0][0] - a[1][1]) % m == 0


def embed_pair(x, p: int, l: int, k: int) -> Tuple[Matrix2, Matrix2]:
    """Images of ``x`` in both factors, modulo ``p^k`` and ``l^k``."""
    return psi_matrix_mod_pk(x, solve_cd(p, k)), psi_matrix_mod_pk(x, solve_cd(l, k))
