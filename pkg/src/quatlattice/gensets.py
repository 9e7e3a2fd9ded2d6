"""Generator sets X_q: integer quaternions of odd prime norm q with fixed parity.

For ``q = 1 mod 4`` the real part is odd and the imaginary parts even; for
``q = 3 mod 4`` the ``i`` coordinate is even and the other three odd.
Jacobi's four-square count gives ``|X_q| = 2(q + 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt
from typing import Dict, Optional, Tuple

from .errors import NotAGenerator, NotOddPrime
from .quat import GroupElement, IntQuat, as_quaternion, iconj, inorm, primitive

CLASS_1_MOD_4 = "1 mod 4"
CLASS_3_MOD_4 = "3 mod 4"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def require_odd_prime(q) -> int:
    if not isinstance(q, int) or isinstance(q, bool) or q == 2 or not is_prime(q):
        raise NotOddPrime(f"{q!r} is not an odd prime")
    return q


def _parity_pattern(x: IntQuat) -> Tuple[int, ...]:
    return tuple(c & 1 for c in x)


def parity_class(x, q: Optional[int] = None) -> Optional[str]:
    """Which parity pattern ``x`` satisfies for its norm residue mod 4.

    Returns ``"1 mod 4"`` or ``"3 mod 4"`` when the pattern matches the
    residue of the norm (of ``q`` if given), otherwise None.
    """
    x = as_quaternion(x).as_ints()
    n = inorm(x) if q is None else q
    if n % 2 == 0:
        return None
    pattern = _parity_pattern(x)
    if n % 4 == 1 and pattern == (1, 0, 0, 0):
        return CLASS_1_MOD_4
    if n % 4 == 3 and pattern == (1, 0, 1, 1):
        return CLASS_3_MOD_4
    return None


@dataclass(frozen=True)
class GeneratorSet:
    """The set X_q together with its letter pairing.

    ``letters`` lists the canonical representative of each positive letter;
    the inverse letter is the canonical form of the conjugate.
    """

    q: int
    elements: Tuple[IntQuat, ...]
    letters: Tuple[IntQuat, ...] = ()
    prefix: str = "a"
    _lookup: Dict[IntQuat, Tuple[int, int]] = field(default_factory=dict, repr=False, compare=False)

    @property
    def rank(self) -> int:
        return (self.q + 1) // 2

    def letter_name(self, index: int, exponent: int = 1) -> str:
        name = f"{self.prefix}{index + 1}"
        return name if exponent == 1 else f"{name}^-1"

    def lift(self, index: int, exponent: int = 1) -> IntQuat:
        rep = self.letters[index]
        return rep if exponent == 1 else iconj(rep)


def enumerate_Xq(q: int) -> GeneratorSet:
    """All ``2(q+1)`` integer solutions of ``|x|^2 = q`` with the right parity."""
    require_odd_prime(q)
    bound = isqrt(q)
    rng = range(-bound, bound + 1)
    elements = []
    for x0 in rng:
        r0 = q - x0 * x0
        for x1 in rng:
            r1 = r0 - x1 * x1
            if r1 < 0:
                continue
            for x2 in rng:
                r2 = r1 - x2 * x2
                if r2 < 0:
                    continue
                x3 = isqrt(r2)
                if x3 * x3 != r2:
                    continue
                for s3 in {x3, -x3}:
                    x = (x0, x1, x2, s3)
                    if parity_class(x, q) is not None:
                        elements.append(x)
    elements.sort()
    return GeneratorSet(q=q, elements=tuple(elements))


def build_generator_labels(gs: GeneratorSet, prefix: str = "a") -> GeneratorSet:
    """Pair the ``q + 1`` distinct classes into ``(q+1)/2`` letters.

    In each ``{g, conj g}`` pair the lexicographically larger representative
    is the positive letter, and letters are numbered by descending
    representative. For X_3 and X_5 this gives exactly ``1+j+k, 1+j-k`` and
    ``1+2i, 1+2j, 1+2k``.
    """
    classes = sorted({primitive(x) for x in gs.elements}, reverse=True)
    seen = set()
    letters = []
    for rep in classes:
        if rep in seen:
            continue
        inv = primitive(iconj(rep))
        if inv == rep:
            raise AssertionError(f"{rep} is its own inverse")
        seen.update((rep, inv))
        letters.append(max(rep, inv))
    letters.sort(reverse=True)
    lookup = {}
    for index, rep in enumerate(letters):
        lookup[rep] = (index, 1)
        lookup[primitive(iconj(rep))] = (index, -1)
    return GeneratorSet(q=gs.q, elements=gs.elements, letters=tuple(letters),
                        prefix=prefix, _lookup=lookup)


def generator_set(q: int, prefix: str = "a") -> GeneratorSet:
    return build_generator_labels(enumerate_Xq(q), prefix)


def lookup_letter(gs: GeneratorSet, e) -> Tuple[int, int]:
    """``(letter index, exponent)`` whose image is the element ``e``."""
    rep = e.rep if isinstance(e, GroupElement) else primitive(as_quaternion(e).as_ints())
    try:
        return gs._lookup[rep]
    except KeyError:
        raise NotAGenerator(f"{rep} is not the class of an element of X_{gs.q}") from None
