"""Todd-Coxeter coset enumeration over square presentations.

The inner loop runs in a compiled extension when it was built, and in the
pure-Python kernel otherwise.  Set ``QUATLATTICE_PURE_PYTHON=1`` to force
the fallback.  Both kernels return the same standardized table.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from ..errors import TableNotClosed
from ..square_complex import Presentation
from ..words import Word
from . import _kernel_py

try:
    from . import _kernel_cy
except ImportError:  # extension not built
    _kernel_cy = None

DEFAULT_MAX_COSETS = 10 ** 6

KERNELS = {"python": _kernel_py.enumerate_cosets}
if _kernel_cy is not None:
    KERNELS["compiled"] = _kernel_cy.enumerate_cosets

if os.environ.get("QUATLATTICE_PURE_PYTHON") == "1" or _kernel_cy is None:
    BACKEND = "python"
else:
    BACKEND = "compiled"

CLOSED, OVERFLOW = "closed", "overflow"


@dataclass
class CosetTable:
    """Result of an enumeration.  Coset 0 is the subgroup coset."""

    pres: Presentation
    subgens: List[Word]
    status: str
    rows: Optional[List[List[int]]]
    stats: Dict[str, int] = field(default_factory=dict)
    backend: str = BACKEND
    strategy: str = "felsch"

    @property
    def is_closed(self) -> bool:
        return self.status == CLOSED

    @property
    def index(self) -> Optional[int]:
        return len(self.rows) if self.is_closed else None

    def _require_closed(self):
        if not self.is_closed:
            raise TableNotClosed(f"table status is {self.status}")

    def trace(self, coset: int, letters: Sequence[int]) -> int:
        self._require_closed()
        for a in letters:
            coset = self.rows[coset][a]
        return coset

    def check(self) -> None:
        """Assert closure: relators fix every coset, subgroup words fix coset 0."""
        self._require_closed()
        n = len(self.rows)
        for c in range(n):
            row = self.rows[c]
            for a, d in enumerate(row):
                if not 0 <= d < n or self.rows[d][a ^ 1] != c:
                    raise AssertionError(f"table is not a permutation table at ({c}, {a})")
            for r in self.pres.squares:
                if self.trace(c, r) != c:
                    raise AssertionError(f"relator does not close at coset {c}")
        for w in self.subgens:
            if self.trace(0, w.letters) != 0:
                raise AssertionError(f"subgroup generator {w} moves coset 0")

    def to_json(self) -> str:
        """JSON array of rows keyed by signed generator names."""
        self._require_closed()
        names = [self.pres.letter_name(a) for a in range(self.pres.num_letters)]
        rows = [{name: d for name, d in zip(names, row)} for row in self.rows]
        return json.dumps(rows) + "\n"


def table_from_json(pres: Presentation, text: str) -> List[List[int]]:
    names = [pres.letter_name(a) for a in range(pres.num_letters)]
    return [[row[name] for name in names] for row in json.loads(text)]


def _as_word(pres: Presentation, g) -> Word:
    if isinstance(g, Word):
        if g.pres != pres:
            from ..errors import AlphabetMismatch
            raise AlphabetMismatch("subgroup word belongs to another presentation")
        return g
    if isinstance(g, str):
        return Word.parse(pres, g)
    from ..membership import factor_to_word
    from ..quat import GroupElement
    return factor_to_word(g.rep if isinstance(g, GroupElement) else g, pres)


def todd_coxeter(pres: Presentation, subgens, max_cosets: int = DEFAULT_MAX_COSETS,
                 strategy: str = "felsch", backend: Optional[str] = None) -> CosetTable:
    """Enumerate the cosets of ``<subgens>`` using the square relators only.

    ``subgens`` may hold Words, word strings or admissible quaternions.  An
    overflowing run returns a table with status ``"overflow"``; it never
    claims the index is infinite.
    """
    words = [_as_word(pres, g) for g in subgens]
    if not words:
        raise ValueError("at least one subgroup generator is required")
    backend = backend or BACKEND
    try:
        kernel = KERNELS[backend]
    except KeyError:
        raise ValueError(f"backend {backend!r} is not available") from None
    status, rows, stats = kernel(pres.num_letters, [list(r) for r in pres.squares],
                                 [list(w.letters) for w in words], max_cosets, strategy)
    table = CosetTable(pres, words, status, rows, stats, backend, strategy)
    if table.is_closed:
        table.check()
    return table


def index(pres: Presentation, subgens, **kwargs) -> Optional[int]:
    return todd_coxeter(pres, subgens, **kwargs).index


def permutation_representation(table: CosetTable) -> Dict[str, Tuple[int, ...]]:
    """Right action of each generator on the cosets: ``perm[c] = c . g``."""
    table._require_closed()
    pres = table.pres
    return {
        pres.letter_name(2 * g): tuple(row[2 * g] for row in table.rows)
        for g in range(pres.m + pres.n)
    }


def act(perms: Dict[str, Tuple[int, ...]], pres: Presentation, letters: Sequence[int],
        coset: int) -> int:
    """Image of ``coset`` under a word, using only the generator permutations."""
    inverses = {}
    for a in letters:
        name = pres.letter_name(a & ~1)
        perm = perms[name]
        if a & 1:
            if name not in inverses:
                inv = [0] * len(perm)
                for c, d in enumerate(perm):
                    inv[d] = c
                inverses[name] = inv
            coset = inverses[name][coset]
        else:
            coset = perm[coset]
    return coset


def is_transitive(perms: Dict[str, Tuple[int, ...]], degree: int) -> bool:
    seen = {0}
    frontier = [0]
    while frontier:
        c = frontier.pop()
        for perm in perms.values():
            d = perm[c]
            if d not in seen:
                seen.add(d)
                frontier.append(d)
    return len(seen) == degree
