"""Membership in the positive monoid of Q_{p,l} and factorization into letters."""

from __future__ import annotations

from math import gcd
from typing import List, Optional, Tuple

from .errors import NoFactorization, NotAdmissible
from .gensets import parity_class
from .quat import GroupElement, IntQuat, as_quaternion, iconj, imul, inorm
from .square_complex import Presentation
from .words import Word


def _split_norm(n: int, p: int, l: int) -> Optional[Tuple[int, int]]:
    r = s = 0
    while n % p == 0:
        n //= p
        r += 1
    while n % l == 0:
        n //= l
        s += 1
    return (r, s) if n == 1 else None


def is_admissible(x, p: int, l: int) -> Tuple[bool, Optional[Tuple[int, int]]]:
    """Whether ``|x|^2 = p^r l^s`` with the parity pattern of ``|x|^2 mod 4``."""
    q = as_quaternion(x)
    if not q.is_integral() or q == 0:
        return False, None
    xi = q.as_ints()
    exps = _split_norm(inorm(xi), p, l)
    if exps is None or parity_class(xi) is None:
        return False, None
    return True, exps


def factor_to_word(x, pres: Presentation) -> Word:
    """A word whose evaluation is the class of the admissible quaternion ``x``.

    The content (a product of powers of p and l) is divided out first.  Then
    generators ``g`` are peeled off the left while ``conj(g) * current`` is
    divisible by ``|g|^2``, with backtracking on dead ends.  The resulting
    word has length ``r + s`` for the primitive representative.
    """
    ok, _ = is_admissible(x, pres.p, pres.l)
    if not ok:
        raise NotAdmissible(f"{as_quaternion(x)} is not admissible for ({pres.p}, {pres.l})")
    xi = as_quaternion(x).as_ints()
    content = gcd(*xi)
    start = tuple(c // content for c in xi)

    candidates = [(a, pres.lift(a)) for a in range(pres.num_letters)]
    candidates = [(a, g, iconj(g), inorm(g)) for a, g in candidates]

    # explicit DFS stack of (residue, next candidate index, letter taken to get here)
    stack: List[Tuple[IntQuat, int, int]] = [(start, 0, -1)]
    while stack:
        z, k, _ = stack[-1]
        if z[1:] == (0, 0, 0):
            return Word(tuple(entry[2] for entry in stack[1:]), pres)
        nz = inorm(z)
        while k < len(candidates):
            a, g, gbar, q = candidates[k]
            k += 1
            if nz % q:
                continue
            w = imul(gbar, z)
            if any(c % q for c in w):
                continue
            stack[-1] = (z, k, stack[-1][2])
            stack.append((tuple(c // q for c in w), 0, a))
            break
        else:
            stack.pop()
    raise NoFactorization(f"no factorization found for {as_quaternion(x)}")


def factor_element(g: GroupElement, pres: Presentation) -> Word:
    return factor_to_word(g.rep, pres)
