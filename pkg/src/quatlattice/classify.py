"""Commutation, anti-torus classification and centralizer certificates.

``Gamma_{p,l}`` is commutative transitive and two lifts commute in the group
exactly when they commute as quaternions, so the pair ``<a, b>`` (``a``
horizontal, ``b`` vertical, both nontrivial) is either ``Z x Z`` or an
anti-torus, decided by a cross product.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd, isqrt
from typing import List, NamedTuple, Optional, Tuple

from .errors import RealQuaternion, SideMismatch
from .gensets import require_odd_prime
from .quat import GroupElement, commutes, imul, primitive, reduce_canonical, tau_direction
from .square_complex import Presentation, fixed_points, rho_v


class PairClass(str, enum.Enum):
    TRIVIAL_FACTOR = "TRIVIAL_FACTOR"
    Z_CROSS_Z = "Z_CROSS_Z"
    ANTI_TORUS = "ANTI_TORUS"

    def __str__(self):
        return self.value


class Certificate(str, enum.Enum):
    CYCLIC_CERTIFIED = "CYCLIC_CERTIFIED"
    INCONCLUSIVE = "INCONCLUSIVE"

    def __str__(self):
        return self.value


def as_element(x) -> GroupElement:
    return x if isinstance(x, GroupElement) else reduce_canonical(x)


def element_side(g: GroupElement, p: int, l: int) -> str:
    """``"identity"``, ``"h"`` (norm a power of p), ``"v"`` (of l) or ``"mixed"``."""
    if g.is_identity():
        return "identity"
    exps = g.exponents(p, l)
    if exps is None:
        return "foreign"
    r, s = exps
    if s == 0:
        return "h"
    if r == 0:
        return "v"
    return "mixed"


def commute_in_group(g, h) -> bool:
    return commutes(as_element(g).rep, as_element(h).rep)


def classify_pair(a, b, p: int, l: int) -> PairClass:
    a, b = as_element(a), as_element(b)
    side_a, side_b = element_side(a, p, l), element_side(b, p, l)
    if side_a not in ("h", "identity"):
        raise SideMismatch(f"{a} is not in the horizontal free factor")
    if side_b not in ("v", "identity"):
        raise SideMismatch(f"{b} is not in the vertical free factor")
    if a.is_identity() or b.is_identity():
        return PairClass.TRIVIAL_FACTOR
    return PairClass.Z_CROSS_Z if commute_in_group(a, b) else PairClass.ANTI_TORUS


def power_commute_scan(a, b, bound: int) -> Optional[Tuple[int, int]]:
    """Least ``(r, s)`` in ``[1, bound]^2`` with ``a^r b^s == b^s a^r``.

    Uses full quaternion products, not the cross-product test, so it is an
    independent witness for :func:`classify_pair`.  Negative exponents are
    not scanned: ``a^-r`` commutes with ``b^s`` iff ``a^r`` does.
    """
    if bound < 1:
        raise ValueError("bound must be positive")
    a, b = as_element(a), as_element(b)
    a_pows, b_pows = [a.rep], [b.rep]
    for _ in range(bound - 1):
        a_pows.append(primitive(imul(a_pows[-1], a.rep)))
        b_pows.append(primitive(imul(b_pows[-1], b.rep)))
    for r, ar in enumerate(a_pows, 1):
        for s, bs in enumerate(b_pows, 1):
            if primitive(imul(ar, bs)) == primitive(imul(bs, ar)):
                return (r, s)
    return None


def legendre_symbol(n: int, p: int) -> int:
    """Euler's criterion ``n^((p-1)/2) mod p`` mapped to ``{-1, 0, 1}``."""
    require_odd_prime(p)
    t = pow(n % p, (p - 1) // 2, p)
    return -1 if t == p - 1 else t


def n_invariant(b) -> int:
    """``c1^2 + c2^2 + c3^2`` for the primitive imaginary direction of ``b``."""
    b = as_element(b)
    if b.rep[1:] == (0, 0, 0):
        raise RealQuaternion(f"{b} has no imaginary direction")
    return sum(c * c for c in tau_direction(b.rep))


@dataclass(frozen=True)
class CentralizerReport:
    status: Certificate
    rho_fixpoint_free: Optional[bool]
    legendre_criterion: bool
    n: int
    symbol_p: int
    symbol_l: int


def centralizer_is_cyclic(pres: Presentation, b) -> CentralizerReport:
    """Sufficient certificates that the centralizer of ``b`` is ``<b>``.

    Route (i) applies to single vertical letters: ``rho_v(b)`` has no fixed
    point.  Route (ii) is the Legendre criterion
    ``-(-n/p) = 1 = (-n/l)`` on the imaginary direction of ``b``.
    """
    b = as_element(b)
    if element_side(b, pres.p, pres.l) != "v":
        raise SideMismatch(f"{b} is not a nontrivial vertical element")
    letter = pres.letter_of_rep.get(b.rep)
    rho_free = None
    if letter is not None and pres.is_v(letter):
        rho_free = not fixed_points(rho_v(pres, [letter]))
    n = n_invariant(b)
    sp, sl = legendre_symbol(-n, pres.p), legendre_symbol(-n, pres.l)
    legendre_ok = -sp == 1 == sl
    certified = bool(rho_free) or legendre_ok
    return CentralizerReport(
        Certificate.CYCLIC_CERTIFIED if certified else Certificate.INCONCLUSIVE,
        rho_free, legendre_ok, n, sp, sl,
    )


class NormFormWitness(NamedTuple):
    t: int
    u: int
    r: int
    s: int


def _targets(p: int, l: int, exp_max: int, include_zero: bool) -> List[Tuple[int, int, int]]:
    lo = 0 if include_zero else 1
    return [(p ** r * l ** s, r, s)
            for r in range(lo, exp_max + 1)
            for s in range(lo, exp_max + 1 - r)]


def norm_form_search(n: int, p: int, l: int, t_max: int, u_max: int, exp_max: int,
                     include_zero: bool = False) -> List[NormFormWitness]:
    """Positive ``(t, u)`` with ``t^2 + 4 n u^2 = p^r l^s`` and the gcd conditions.

    ``r + s <= exp_max``; ``include_zero`` admits ``r = 0`` or ``s = 0``.
    Signs of ``t`` and ``u`` are irrelevant and ``t = 0`` or ``u = 0`` always
    violates ``gcd(., pl) = 1``, so only positive pairs are reported.  An
    empty result is bounded evidence, not a proof.
    """
    pl = p * l
    targets = _targets(p, l, exp_max, include_zero)
    found = []
    for u in range(1, u_max + 1):
        if gcd(u, pl) != 1:
            continue
        base = 4 * n * u * u
        for value, r, s in targets:
            rest = value - base
            if rest <= 0:
                continue
            t = isqrt(rest)
            if t * t == rest and 1 <= t <= t_max and gcd(t, u) == 1 and gcd(t, pl) == 1:
                found.append(NormFormWitness(t, u, r, s))
    found.sort()
    return found
