"""Pure-Python coset enumeration (Felsch and HLT strategies).

Interface shared with the compiled kernel::

    enumerate_cosets(ncols, relators, subgens, max_cosets)
        -> (status, table, stats)

``ncols`` is even and column ``c ^ 1`` is the inverse of column ``c``.
``status`` is ``"closed"`` or ``"overflow"``.  A closed table is compacted
and standardized (cosets renumbered by first appearance scanning rows, then
columns), so it does not depend on the enumeration order.  On overflow
``table`` is None.
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

UNDEF = -1
_OK, _FULL = 0, 1


class _Enumerator:
    def __init__(self, ncols: int, max_cosets: int, track: bool = True):
        self.ncols = ncols
        self.track = track
        self.capacity = max_cosets
        self.table: List[List[int]] = [[UNDEF] * ncols]
        self.parent: List[int] = [0]
        self.dead = 0
        self.defined = 1
        self.queue: List[int] = []
        self.deductions: List[Tuple[int, int]] = []

    # -- union-find -------------------------------------------------------
    def rep(self, c: int) -> int:
        parent = self.parent
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    def merge(self, a: int, b: int) -> None:
        a, b = self.rep(a), self.rep(b)
        if a == b:
            return
        if a > b:
            a, b = b, a
        self.parent[b] = a
        self.queue.append(b)
        self.dead += 1

    def coincidence(self, a: int, b: int) -> None:
        table = self.table
        self.queue = []
        self.merge(a, b)
        i = 0
        while i < len(self.queue):
            g = self.queue[i]
            i += 1
            row = table[g]
            for x in range(self.ncols):
                d = row[x]
                if d == UNDEF:
                    continue
                xi = x ^ 1
                table[d][xi] = UNDEF
                mu, nu = self.rep(g), self.rep(d)
                if table[mu][x] != UNDEF:
                    self.merge(nu, table[mu][x])
                elif table[nu][xi] != UNDEF:
                    self.merge(mu, table[nu][xi])
                else:
                    table[mu][x] = nu
                    table[nu][xi] = mu
                    if self.track:
                        self.deductions.append((mu, x))
        self.queue = []

    # -- definitions and scanning -----------------------------------------
    def define(self, a: int, x: int) -> int:
        if len(self.table) >= self.capacity:
            return _FULL
        b = len(self.table)
        self.table.append([UNDEF] * self.ncols)
        self.parent.append(b)
        self.defined += 1
        self.table[a][x] = b
        self.table[b][x ^ 1] = a
        if self.track:
            self.deductions.append((a, x))
        return _OK

    def scan_and_fill(self, a: int, word: Sequence[int]) -> int:
        table = self.table
        f = b = a
        i, j = 0, len(word) - 1
        while True:
            while i <= j and table[f][word[i]] != UNDEF:
                f = table[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return _OK
            while j >= i and table[b][word[j] ^ 1] != UNDEF:
                b = table[b][word[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return _OK
            if i == j:
                table[f][word[i]] = b
                table[b][word[i] ^ 1] = f
                if self.track:
                    self.deductions.append((f, word[i]))
                return _OK
            if self.define(f, word[i]) == _FULL:
                return _FULL
            table = self.table

    def scan(self, a: int, word: Sequence[int]) -> None:
        """Scan without defining; record a deduction when exactly one gap is left."""
        table = self.table
        f = b = a
        i, j = 0, len(word) - 1
        while i <= j and table[f][word[i]] != UNDEF:
            f = table[f][word[i]]
            i += 1
        if i > j:
            if f != b:
                self.coincidence(f, b)
            return
        while j >= i and table[b][word[j] ^ 1] != UNDEF:
            b = table[b][word[j] ^ 1]
            j -= 1
        if j < i:
            self.coincidence(f, b)
        elif i == j:
            table[f][word[i]] = b
            table[b][word[i] ^ 1] = f
            self.deductions.append((f, word[i]))

    def process_deductions(self, by_first: List[List[List[int]]]) -> None:
        while self.deductions:
            a, x = self.deductions.pop()
            if self.parent[a] != a:
                continue
            for w in by_first[x]:
                self.scan(a, w)
                if self.parent[a] != a:
                    break
            if self.parent[a] != a:
                continue
            b = self.table[a][x]
            if b == UNDEF or self.parent[b] != b:
                continue
            for w in by_first[x ^ 1]:
                self.scan(b, w)
                if self.parent[b] != b:
                    break

    def compact(self, keep: int) -> int:
        """Drop dead rows; returns the new index of live coset ``keep``."""
        live = [c for c in range(len(self.table)) if self.parent[c] == c]
        new = {c: k for k, c in enumerate(live)}
        self.table = [[new[d] if d != UNDEF else UNDEF for d in self.table[c]] for c in live]
        self.parent = list(range(len(live)))
        self.dead = 0
        self.deductions = [(new[c], x) for c, x in self.deductions if c in new]
        return new[keep]


def _standardize(table: List[List[int]]) -> List[List[int]]:
    order = [0]
    index = {0: 0}
    k = 0
    while k < len(order):
        for d in table[order[k]]:
            if d not in index:
                index[d] = len(order)
                order.append(d)
        k += 1
    return [[index[d] for d in table[c]] for c in order]


def cyclic_conjugates(ncols: int, relators: Sequence[Sequence[int]]) -> List[List[List[int]]]:
    """Distinct cyclic rotations of each relator and its inverse, by first letter."""
    seen = set()
    by_first: List[List[List[int]]] = [[] for _ in range(ncols)]
    for r in relators:
        inverse = [x ^ 1 for x in reversed(r)]
        for w in (list(r), inverse):
            for k in range(len(w)):
                rot = tuple(w[k:] + w[:k])
                if rot not in seen:
                    seen.add(rot)
                    by_first[rot[0]].append(list(rot))
    return by_first


def enumerate_cosets(ncols: int, relators: Sequence[Sequence[int]],
                     subgens: Sequence[Sequence[int]], max_cosets: int,
                     strategy: str = "felsch") -> Tuple[str, Optional[List[List[int]]], dict]:
    if max_cosets < 1:
        raise ValueError("max_cosets must be positive")
    if strategy == "felsch":
        return _felsch(ncols, relators, subgens, max_cosets)
    if strategy != "hlt":
        raise ValueError(f"unknown strategy {strategy!r}")
    en = _Enumerator(ncols, max_cosets, track=False)
    relators = [list(r) for r in relators if r]
    subgens = [list(w) for w in subgens if w]

    def overflow():
        return "overflow", None, {"defined": en.defined, "rows": len(en.table)}

    for w in subgens:
        while en.scan_and_fill(0, w) == _FULL:
            if en.dead == 0:
                return overflow()
            en.compact(0)

    a = 0
    while a < len(en.table):
        if en.parent[a] != a:
            a += 1
            continue
        restart = False
        for r in relators:
            if en.scan_and_fill(a, r) == _FULL:
                restart = True
                break
            if en.parent[a] != a:
                break
        if not restart and en.parent[a] == a:
            row = en.table[a]
            for x in range(ncols):
                if row[x] == UNDEF and en.define(a, x) == _FULL:
                    restart = True
                    break
        if restart:
            if en.dead == 0:
                return overflow()
            a = en.compact(a)
            continue
        a += 1

    if en.dead:
        en.compact(0)
    table = _standardize(en.table)
    return "closed", table, {"defined": en.defined, "rows": len(table)}


def _felsch(ncols, relators, subgens, max_cosets):
    en = _Enumerator(ncols, max_cosets)
    by_first = cyclic_conjugates(ncols, [r for r in relators if r])

    def overflow():
        return "overflow", None, {"defined": en.defined, "rows": len(en.table)}

    for w in subgens:
        if not w:
            continue
        while en.scan_and_fill(0, list(w)) == _FULL:
            if en.dead == 0:
                return overflow()
            en.compact(0)
        en.process_deductions(by_first)

    a = 0
    while a < len(en.table):
        if en.parent[a] == a:
            x = 0
            while x < ncols and en.parent[a] == a:
                if en.table[a][x] == UNDEF:
                    if en.define(a, x) == _FULL:
                        if en.dead == 0:
                            return overflow()
                        a = en.compact(a)
                        continue
                    en.process_deductions(by_first)
                x += 1
        a += 1

    if en.dead:
        en.compact(0)
    table = _standardize(en.table)
    return "closed", table, {"defined": en.defined, "rows": len(table)}
