"""Exponent words in formal symbols and exact relation checks."""

from __future__ import annotations

import re
from typing import Dict, List, Mapping, Tuple

from .errors import NotAdmissible, ParseError, ZeroProduct
from .quat import Quaternion, as_quaternion, inverse, is_central, mul

ExponentWord = List[Tuple[str, int]]

# Relation of length 106 between x = 1+2i and y = 1+4k.
LONG_RELATION_5_17 = (
    "x^3 y^2 x y^-1 x^2 y^-1 x^2 y^-1 x^-4 y^-2 x^-1 y x^-2 y^-1 x^-8 y^-1 x y^2 "
    "x y^-1 x^-2 y x^-1 y^-2 x^-2 y^-2 x^3 y x^-2 y^2 x^2 y^2 x y^-1 x^2 y x^-1 y^-2 "
    "x^-1 y x^8 y x^2 y^-1 x y^2 x^4 y x^-2 y x^-2 y x^-1 y^-2 x^-5 y^-1 x"
)

# Relation between x = 1+j+k and y = 1+2i.
SHORT_RELATION_3_5 = "y x^3 y^2 x y^-1 x^-3 y^-2 x^-1"

_TOKEN = re.compile(r"([A-Za-z]\w*)(?:\^\(?(-?\d+)\)?)?")


def parse_exponent_word(text: str) -> ExponentWord:
    """``"y x^3 y^-1"`` -> ``[("y", 1), ("x", 3), ("y", -1)]``."""
    out: ExponentWord = []
    for token in text.replace("*", " ").split():
        match = _TOKEN.fullmatch(token)
        if not match:
            raise ParseError(f"malformed exponent-word token {token!r}")
        exp = int(match.group(2)) if match.group(2) is not None else 1
        if exp:
            out.append((match.group(1), exp))
    return out


def word_length(word: ExponentWord) -> int:
    return sum(abs(e) for _, e in word)


def format_exponent_word(word: ExponentWord) -> str:
    return " ".join(s if e == 1 else f"{s}^{e}" for s, e in word)


def commutator_word(a: str = "x", b: str = "y") -> ExponentWord:
    return [(a, 1), (b, 1), (a, -1), (b, -1)]


def evaluate_exponent_word(word: ExponentWord, values: Mapping[str, Quaternion]) -> Quaternion:
    """Exact product, with inverses taken as ``conj(q) / |q|^2``."""
    powers: Dict[Tuple[str, int], Quaternion] = {}
    result = Quaternion(1)
    for sym, exp in word:
        if sym not in values:
            raise ParseError(f"symbol {sym!r} has no value")
        key = (sym, exp)
        if key not in powers:
            base = as_quaternion(values[sym])
            powers[key] = base ** exp if exp > 0 else inverse(base) ** (-exp)
        result = mul(result, powers[key])
    return result


def verify_relation(pres, word, x, y) -> bool:
    """True iff ``word(x, y)`` is a nonzero central quaternion.

    ``pres`` may be a :class:`Presentation` (or a ``(p, l)`` pair) to insist
    that ``x`` and ``y`` lift to ``Q_{p,l}``; None skips that check.
    """
    from .membership import is_admissible

    if isinstance(word, str):
        word = parse_exponent_word(word)
    x, y = as_quaternion(x), as_quaternion(y)
    if pres is not None:
        p, l = (pres.p, pres.l) if hasattr(pres, "p") else pres
        for q in (x, y):
            if not is_admissible(q, p, l)[0]:
                raise NotAdmissible(f"{q} does not lie in Q_{{{p},{l}}}")
    value = evaluate_exponent_word(word, {"x": x, "y": y})
    if value == 0:
        raise ZeroProduct("product of invertible quaternions vanished")
    return is_central(value)
