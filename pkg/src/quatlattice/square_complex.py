"""One-vertex square complexes: presentations, link condition, rho_v.

Letters are small integers.  With ``m`` horizontal and ``n`` vertical
generators, generator ``g`` (``0 <= g < m + n``; horizontal first) has the
positive letter ``2g`` and the inverse letter ``2g + 1``, so inversion is
``letter ^ 1``.  Coset tables use the same numbering for their columns.
"""

from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Sequence, Tuple

from .errors import DuplicateCorner, LinkViolation, NoMatch, ParseError
from .gensets import generator_set, lookup_letter, require_odd_prime
from .quat import IntQuat, iconj, imul, primitive

Square = Tuple[int, int, int, int]


def inv(letter: int) -> int:
    return letter ^ 1


def h_first_forms(square: Sequence[int]) -> List[Square]:
    """The four readings ``h v h v`` of an unoriented square cell."""
    x, y, z, w = square
    return [
        (x, y, z, w),
        (z, w, x, y),
        (inv(z), inv(y), inv(x), inv(w)),
        (inv(x), inv(w), inv(z), inv(y)),
    ]


def normalize_square(square: Sequence[int]) -> Square:
    return min(h_first_forms(square))


@dataclass(frozen=True)
class Presentation:
    """Presentation ``<a_1..a_m, b_1..b_n | squares>`` with quaternion lifts."""

    p: int
    l: int
    h_lifts: Tuple[IntQuat, ...]
    v_lifts: Tuple[IntQuat, ...]
    squares: Tuple[Square, ...]

    @property
    def m(self) -> int:
        return len(self.h_lifts)

    @property
    def n(self) -> int:
        return len(self.v_lifts)

    @property
    def num_letters(self) -> int:
        return 2 * (self.m + self.n)

    @property
    def h_letters(self) -> range:
        return range(2 * self.m)

    @property
    def v_letters(self) -> range:
        return range(2 * self.m, self.num_letters)

    def is_h(self, letter: int) -> bool:
        return letter < 2 * self.m

    def is_v(self, letter: int) -> bool:
        return 2 * self.m <= letter < self.num_letters

    def lift(self, letter: int) -> IntQuat:
        g, e = divmod(letter, 2)
        rep = self.h_lifts[g] if g < self.m else self.v_lifts[g - self.m]
        return iconj(rep) if e else rep

    def letter_name(self, letter: int) -> str:
        g, e = divmod(letter, 2)
        name = f"a{g + 1}" if g < self.m else f"b{g - self.m + 1}"
        return name + ("^-1" if e else "")

    def letter_from_name(self, name: str) -> int:
        match = re.fullmatch(r"([ab])(\d+)(\^-1|\^1)?", name.strip())
        if not match:
            raise ParseError(f"malformed letter {name!r}")
        kind, idx, exp = match.group(1), int(match.group(2)), match.group(3)
        count = self.m if kind == "a" else self.n
        if not 1 <= idx <= count:
            raise ParseError(f"letter {name!r} outside the alphabet")
        g = idx - 1 if kind == "a" else self.m + idx - 1
        return 2 * g + (exp == "^-1")

    @cached_property
    def letter_of_rep(self) -> Dict[IntQuat, int]:
        return {primitive(self.lift(a)): a for a in range(self.num_letters)}

    @cached_property
    def ab_table(self) -> Dict[Tuple[int, int], Tuple[int, int]]:
        """``(v, h) -> (h', v')`` with ``v h = h' v'``."""
        table = {}
        for sq in self.squares:
            for x, y, z, w in h_first_forms(sq):
                table.setdefault((y, z), (inv(x), inv(w)))
        return table

    @cached_property
    def ba_table(self) -> Dict[Tuple[int, int], Tuple[int, int]]:
        """``(h, v) -> (v', h')`` with ``h v = v' h'``."""
        table = {}
        for sq in self.squares:
            for x, y, z, w in h_first_forms(sq):
                table.setdefault((x, y), (inv(w), inv(z)))
        return table

    def relators(self) -> List[Square]:
        return list(self.squares)

    def without_square(self, index: int) -> "Presentation":
        squares = self.squares[:index] + self.squares[index + 1:]
        return Presentation(self.p, self.l, self.h_lifts, self.v_lifts, squares)


def build_squares(p: int, l: int) -> Presentation:
    """Square presentation of the quaternion lattice ``Gamma_{p,l}``.

    For each corner ``(a, b)`` the lifts satisfy ``x y = +-y' x'`` for a
    unique ``x' in X_p``, ``y' in X_l``; the square is then
    ``a b psi(x')^-1 psi(y')^-1``.
    """
    require_odd_prime(p)
    require_odd_prime(l)
    if p == l:
        raise ValueError("p and l must be distinct")
    H = generator_set(p, "a")
    V = generator_set(l, "b")
    m, n = H.rank, V.rank
    pres = Presentation(p, l, H.letters, V.letters, ())

    swapped: Dict[IntQuat, Tuple[IntQuat, IntQuat]] = {}
    for yp in V.elements:
        for xp in H.elements:
            swapped[imul(yp, xp)] = (yp, xp)

    found: Dict[Square, Square] = {}
    for a in pres.h_letters:
        x = pres.lift(a)
        for b in pres.v_letters:
            z = imul(x, pres.lift(b))
            hit = swapped.get(z) or swapped.get(tuple(-c for c in z))
            if hit is None:
                raise NoMatch(f"no factorization y'x' for corner "
                              f"({pres.letter_name(a)}, {pres.letter_name(b)})")
            yp, xp = hit
            gi, ge = lookup_letter(H, iconj(xp))
            vi, ve = lookup_letter(V, iconj(yp))
            a2 = 2 * gi + (ge == -1)
            b2 = 2 * (m + vi) + (ve == -1)
            square = (a, b, a2, b2)
            found.setdefault(normalize_square(square), square)

    squares = tuple(sorted(found))
    if len(squares) != m * n:
        raise DuplicateCorner(f"expected {m * n} squares, built {len(squares)}")
    return Presentation(p, l, H.letters, V.letters, squares)


@dataclass(frozen=True)
class LinkGraph:
    """Corner multiplicities between horizontal and vertical letters."""

    h_letters: Tuple[int, ...]
    v_letters: Tuple[int, ...]
    counts: Dict[Tuple[int, int], int]

    def is_complete_bipartite(self) -> bool:
        return all(self.counts.get((a, b), 0) == 1
                   for a in self.h_letters for b in self.v_letters)

    @property
    def shape(self) -> Tuple[int, int]:
        return (len(self.h_letters), len(self.v_letters))


def corners(pres: Presentation) -> Counter:
    return Counter(form[:2] for sq in pres.squares for form in h_first_forms(sq))


def check_link(pres: Presentation, strict: bool = True) -> LinkGraph:
    counts = corners(pres)
    graph = LinkGraph(tuple(pres.h_letters), tuple(pres.v_letters), dict(counts))
    if strict:
        missing = [(a, b) for a in pres.h_letters for b in pres.v_letters
                   if counts.get((a, b), 0) == 0]
        repeated = [c for c, k in counts.items() if k > 1]
        if missing or repeated:
            raise LinkViolation(missing, repeated)
    return graph


Permutation = Tuple[int, ...]


def rho_v(pres: Presentation, word: Iterable[int]) -> Permutation:
    """Permutation of the horizontal letters induced by a vertical word.

    For a single letter ``b``, ``a`` maps to the unique ``a'`` with
    ``a^-1 b a'`` a vertical letter.  Words act left to right:
    ``rho(b1 b2) = rho(b2) o rho(b1)``.
    """
    perm = tuple(pres.h_letters)
    for b in word:
        if not pres.is_v(b):
            raise ValueError(f"{pres.letter_name(b)} is not a vertical letter")
        single = [0] * (2 * pres.m)
        for a2 in pres.h_letters:
            a, _ = pres.ab_table[(b, a2)]
            single[a] = a2
        perm = tuple(single[perm[a]] for a in pres.h_letters)
    return perm


def fixed_points(perm: Permutation) -> List[int]:
    return [i for i, j in enumerate(perm) if i == j]


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def export_presentation(pres: Presentation, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(presentation_to_dict(pres), indent=2) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    lines = [f"gamma {pres.p} {pres.l}"]
    for kind, lifts, offset in (("hgen", pres.h_lifts, 0), ("vgen", pres.v_lifts, pres.m)):
        for g, rep in enumerate(lifts):
            name = pres.letter_name(2 * (g + offset))
            lines.append(f"{kind} {name} = " + " ".join(str(c) for c in rep))
    for sq in pres.squares:
        lines.append("square " + " ".join(pres.letter_name(a) for a in sq))
    return "\n".join(lines) + "\n"


def presentation_to_dict(pres: Presentation) -> dict:
    return {
        "p": pres.p,
        "l": pres.l,
        "hgens": [{"name": pres.letter_name(2 * g), "lift": list(rep)}
                  for g, rep in enumerate(pres.h_lifts)],
        "vgens": [{"name": pres.letter_name(2 * (g + pres.m)), "lift": list(rep)}
                  for g, rep in enumerate(pres.v_lifts)],
        "squares": [[pres.letter_name(a) for a in sq] for sq in pres.squares],
    }


def _from_parts(p, l, hgens, vgens, square_names) -> Presentation:
    shell = Presentation(p, l, tuple(hgens), tuple(vgens), ())
    squares = tuple(tuple(shell.letter_from_name(s) for s in names) for names in square_names)
    if any(len(sq) != 4 for sq in squares):
        raise ParseError("squares must have exactly four letters")
    return Presentation(p, l, tuple(hgens), tuple(vgens), squares)


def parse_presentation(text: str) -> Presentation:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        data = json.loads(stripped)
        return _from_parts(
            data["p"], data["l"],
            [tuple(g["lift"]) for g in data["hgens"]],
            [tuple(g["lift"]) for g in data["vgens"]],
            data["squares"],
        )
    p = l = None
    hgens, vgens, squares = [], [], []
    for lineno, line in enumerate(text.splitlines(), 1):
        fields = line.split()
        if not fields:
            continue
        try:
            if fields[0] == "gamma":
                p, l = int(fields[1]), int(fields[2])
            elif fields[0] in ("hgen", "vgen"):
                lift = tuple(int(c) for c in fields[3:7])
                if fields[2] != "=" or len(lift) != 4:
                    raise ValueError
                (hgens if fields[0] == "hgen" else vgens).append(lift)
            elif fields[0] == "square":
                squares.append(fields[1:])
            else:
                raise ValueError
        except (ValueError, IndexError):
            raise ParseError(f"line {lineno}: cannot parse {line!r}") from None
    if p is None:
        raise ParseError("missing 'gamma p l' header")
    return _from_parts(p, l, hgens, vgens, squares)
