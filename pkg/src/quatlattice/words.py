"""Words over a square presentation: evaluation and ab/ba normal forms.

Element equality is always decided by quaternion evaluation.  The rewriting
normal forms are an independent second route to the same answer.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from .errors import AlphabetMismatch, ParseError
from .quat import GroupElement, IDENTITY, imul, primitive
from .square_complex import Presentation, inv


@dataclass(frozen=True)
class Word:
    letters: Tuple[int, ...]
    pres: Presentation

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        bad = [a for a in self.letters if not 0 <= a < self.pres.num_letters]
        if bad:
            raise AlphabetMismatch(f"letters {bad} are outside the alphabet")

    @classmethod
    def parse(cls, pres: Presentation, text: str) -> "Word":
        """Parse ``"a1 b2^-1 a1^3"``; ``1`` or an empty string is the empty word."""
        letters: List[int] = []
        for token in text.replace("*", " ").split():
            if token == "1":
                continue
            match = re.fullmatch(r"([ab]\d+)(?:\^(-?\d+))?", token)
            if not match:
                raise ParseError(f"malformed word token {token!r}")
            letter = pres.letter_from_name(match.group(1))
            power = int(match.group(2) or 1)
            letters.extend([letter if power > 0 else inv(letter)] * abs(power))
        return cls(tuple(letters), pres)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __add__(self, other: "Word") -> "Word":
        _same_context(self, other)
        return Word(self.letters + other.letters, self.pres)

    def inverse(self) -> "Word":
        return Word(tuple(inv(a) for a in reversed(self.letters)), self.pres)

    def is_h(self) -> bool:
        return all(self.pres.is_h(a) for a in self.letters)

    def is_v(self) -> bool:
        return all(self.pres.is_v(a) for a in self.letters)

    def __str__(self):
        return " ".join(self.pres.letter_name(a) for a in self.letters) or "1"


@dataclass(frozen=True)
class NormalForm:
    """``sigma_a sigma_b`` (order ``"ab"``) or ``sigma_b sigma_a`` (order ``"ba"``)."""

    sigma_a: Tuple[int, ...]
    sigma_b: Tuple[int, ...]
    order: str

    @property
    def letters(self) -> Tuple[int, ...]:
        if self.order == "ab":
            return self.sigma_a + self.sigma_b
        return self.sigma_b + self.sigma_a

    def __len__(self):
        return len(self.sigma_a) + len(self.sigma_b)

    def word(self, pres: Presentation) -> Word:
        return Word(self.letters, pres)


def _same_context(u: Word, v: Word) -> None:
    if u.pres is not v.pres and u.pres != v.pres:
        raise AlphabetMismatch("words belong to different presentations")


def free_reduce(letters: Iterable[int]) -> Tuple[int, ...]:
    out: List[int] = []
    for a in letters:
        if out and out[-1] == inv(a):
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def evaluate_letters(pres: Presentation, letters: Sequence[int]) -> GroupElement:
    q = IDENTITY
    for a in letters:
        q = imul(q, pres.lift(a))
        # dividing out the content keeps numbers small without changing the class
        q = primitive(q)
    return GroupElement(q)


def evaluate_word(w: Word) -> GroupElement:
    """Product of the quaternion lifts, reduced to its canonical class."""
    return evaluate_letters(w.pres, w.letters)


def _push(stack: List[int], a: int) -> None:
    if stack and stack[-1] == inv(a):
        stack.pop()
    else:
        stack.append(a)


def normalize_ab(w: Word) -> NormalForm:
    """Rewrite ``w`` as ``sigma_a sigma_b`` using the swaps ``b a -> a' b'``.

    Letters are streamed in; each horizontal letter is pushed left through
    the current vertical suffix by table swaps, and both parts are kept
    freely reduced.
    """
    pres = w.pres
    table = pres.ab_table
    A: List[int] = []
    B: List[int] = []
    for x in w.letters:
        if pres.is_v(x):
            _push(B, x)
            continue
        h = x
        for i in range(len(B) - 1, -1, -1):
            h, B[i] = table[(B[i], h)]
        _push(A, h)
    return NormalForm(tuple(A), tuple(B), "ab")


def normalize_ba(w: Word) -> NormalForm:
    """Mirror of :func:`normalize_ab` producing ``sigma_b sigma_a``."""
    pres = w.pres
    table = pres.ba_table
    A: List[int] = []
    B: List[int] = []
    for x in w.letters:
        if pres.is_h(x):
            _push(A, x)
            continue
        v = x
        for i in range(len(A) - 1, -1, -1):
            v, A[i] = table[(A[i], v)]
        _push(B, v)
    return NormalForm(tuple(A), tuple(B), "ba")


def words_equal(u: Word, v: Word, cross_check: bool = False) -> bool:
    _same_context(u, v)
    equal = evaluate_word(u) == evaluate_word(v)
    if cross_check:
        by_rewriting = normalize_ab(u).letters == normalize_ab(v).letters
        if by_rewriting != equal:
            raise AssertionError(f"evaluation and normal forms disagree on {u} vs {v}")
    return equal
