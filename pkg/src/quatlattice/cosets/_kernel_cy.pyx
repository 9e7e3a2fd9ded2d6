# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled coset enumeration; same interface as ``_kernel_py``."""

from libc.stdlib cimport malloc, realloc, free
from libc.string cimport memset

cdef enum:
    UNDEF = -1
    OK = 0
    FULL = 1
    NOMEM = 2


cdef class _Enumerator:
    cdef int ncols
    cdef long capacity
    cdef long nrows
    cdef long alloc_rows
    cdef long dead
    cdef long defined
    cdef bint track
    cdef int *table
    cdef long *parent
    cdef long *queue
    cdef long *deds
    cdef long nded
    cdef long ded_alloc
    # cyclic conjugates grouped by first letter: words[word_start[k] .. +word_len[k]]
    cdef int *words
    cdef int *word_start
    cdef int *word_len
    cdef int *first_start
    cdef int *first_count

    def __cinit__(self, int ncols, long capacity, bint track):
        self.ncols = ncols
        self.capacity = capacity
        self.track = track
        self.alloc_rows = 0
        self.nrows = 0
        self.table = NULL
        self.parent = NULL
        self.queue = NULL
        self.deds = NULL
        self.words = NULL
        self.word_start = NULL
        self.word_len = NULL
        self.first_start = NULL
        self.first_count = NULL
        self.ded_alloc = 1024
        self.nded = 0
        self.deds = <long *> malloc(2 * self.ded_alloc * sizeof(long))
        if self.deds == NULL or self.grow(1) != OK:
            raise MemoryError()
        self.nrows = 1
        self.parent[0] = 0
        self.dead = 0
        self.defined = 1

    def __dealloc__(self):
        free(self.table)
        free(self.parent)
        free(self.queue)
        free(self.deds)
        free(self.words)
        free(self.word_start)
        free(self.word_len)
        free(self.first_start)
        free(self.first_count)

    def set_conjugates(self, list by_first):
        cdef int total = 0, nwords = 0, x, k, pos = 0, widx = 0
        for group in by_first:
            for w in group:
                total += len(w)
                nwords += 1
        self.words = <int *> malloc((total + 1) * sizeof(int))
        self.word_start = <int *> malloc((nwords + 1) * sizeof(int))
        self.word_len = <int *> malloc((nwords + 1) * sizeof(int))
        self.first_start = <int *> malloc(self.ncols * sizeof(int))
        self.first_count = <int *> malloc(self.ncols * sizeof(int))
        if (self.words == NULL or self.word_start == NULL or self.word_len == NULL
                or self.first_start == NULL or self.first_count == NULL):
            raise MemoryError()
        for x in range(self.ncols):
            self.first_start[x] = widx
            self.first_count[x] = len(by_first[x])
            for w in by_first[x]:
                self.word_start[widx] = pos
                self.word_len[widx] = len(w)
                for k in range(len(w)):
                    self.words[pos] = w[k]
                    pos += 1
                widx += 1

    cdef int grow(self, long need) nogil:
        cdef long new_rows = self.alloc_rows if self.alloc_rows > 0 else 1024
        cdef int *t
        cdef long *p
        cdef long *q
        if need <= self.alloc_rows:
            return OK
        while new_rows < need:
            new_rows *= 2
        if new_rows > self.capacity:
            new_rows = self.capacity
        t = <int *> realloc(self.table, new_rows * self.ncols * sizeof(int))
        if t == NULL:
            return NOMEM
        self.table = t
        p = <long *> realloc(self.parent, new_rows * sizeof(long))
        if p == NULL:
            return NOMEM
        self.parent = p
        q = <long *> realloc(self.queue, new_rows * sizeof(long))
        if q == NULL:
            return NOMEM
        self.queue = q
        memset(self.table + self.alloc_rows * self.ncols, 0xff,
               (new_rows - self.alloc_rows) * self.ncols * sizeof(int))
        self.alloc_rows = new_rows
        return OK

    cdef int push_ded(self, long a, int x) nogil:
        cdef long *d
        if not self.track:
            return OK
        if self.nded == self.ded_alloc:
            d = <long *> realloc(self.deds, 4 * self.ded_alloc * sizeof(long))
            if d == NULL:
                return NOMEM
            self.deds = d
            self.ded_alloc *= 2
        self.deds[2 * self.nded] = a
        self.deds[2 * self.nded + 1] = x
        self.nded += 1
        return OK

    cdef inline long rep(self, long c) nogil:
        cdef long root = c, nxt
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            nxt = self.parent[c]
            self.parent[c] = root
            c = nxt
        return root

    cdef inline void merge(self, long a, long b, long *qlen) nogil:
        a = self.rep(a)
        b = self.rep(b)
        if a == b:
            return
        if a > b:
            a, b = b, a
        self.parent[b] = a
        self.queue[qlen[0]] = b
        qlen[0] += 1
        self.dead += 1

    cdef int coincidence(self, long a, long b) nogil:
        cdef long qlen = 0, i = 0, g, d, mu, nu, e
        cdef int x, xi
        cdef int nc = self.ncols
        cdef int *T = self.table
        self.merge(a, b, &qlen)
        while i < qlen:
            g = self.queue[i]
            i += 1
            for x in range(nc):
                d = T[g * nc + x]
                if d == UNDEF:
                    continue
                xi = x ^ 1
                T[d * nc + xi] = UNDEF
                mu = self.rep(g)
                nu = self.rep(d)
                e = T[mu * nc + x]
                if e != UNDEF:
                    self.merge(nu, e, &qlen)
                else:
                    e = T[nu * nc + xi]
                    if e != UNDEF:
                        self.merge(mu, e, &qlen)
                    else:
                        T[mu * nc + x] = <int> nu
                        T[nu * nc + xi] = <int> mu
                        if self.push_ded(mu, x) != OK:
                            return NOMEM
        return OK

    cdef int define(self, long a, int x) nogil:
        cdef long b
        if self.nrows >= self.capacity:
            return FULL
        if self.grow(self.nrows + 1) != OK:
            return NOMEM
        b = self.nrows
        self.nrows += 1
        self.parent[b] = b
        self.defined += 1
        self.table[a * self.ncols + x] = <int> b
        self.table[b * self.ncols + (x ^ 1)] = <int> a
        return self.push_ded(a, x)

    cdef int scan_and_fill(self, long a, int *w, int n) nogil:
        cdef long f = a, b = a
        cdef int i = 0, j = n - 1, rc
        cdef int nc = self.ncols
        while True:
            while i <= j and self.table[f * nc + w[i]] != UNDEF:
                f = self.table[f * nc + w[i]]
                i += 1
            if i > j:
                if f != b:
                    return self.coincidence(f, b)
                return OK
            while j >= i and self.table[b * nc + (w[j] ^ 1)] != UNDEF:
                b = self.table[b * nc + (w[j] ^ 1)]
                j -= 1
            if j < i:
                return self.coincidence(f, b)
            if i == j:
                self.table[f * nc + w[i]] = <int> b
                self.table[b * nc + (w[i] ^ 1)] = <int> f
                return self.push_ded(f, w[i])
            rc = self.define(f, w[i])
            if rc != OK:
                return rc

    cdef int scan(self, long a, int *w, int n) nogil:
        cdef long f = a, b = a
        cdef int i = 0, j = n - 1
        cdef int nc = self.ncols
        while i <= j and self.table[f * nc + w[i]] != UNDEF:
            f = self.table[f * nc + w[i]]
            i += 1
        if i > j:
            if f != b:
                return self.coincidence(f, b)
            return OK
        while j >= i and self.table[b * nc + (w[j] ^ 1)] != UNDEF:
            b = self.table[b * nc + (w[j] ^ 1)]
            j -= 1
        if j < i:
            return self.coincidence(f, b)
        if i == j:
            self.table[f * nc + w[i]] = <int> b
            self.table[b * nc + (w[i] ^ 1)] = <int> f
            return self.push_ded(f, w[i])
        return OK

    cdef int scan_group(self, long a, int x) nogil:
        cdef int k, widx, rc
        for k in range(self.first_count[x]):
            widx = self.first_start[x] + k
            rc = self.scan(a, self.words + self.word_start[widx], self.word_len[widx])
            if rc != OK:
                return rc
            if self.parent[a] != a:
                break
        return OK

    cdef int process_deductions(self) nogil:
        cdef long a, b
        cdef int x, rc
        while self.nded > 0:
            self.nded -= 1
            a = self.deds[2 * self.nded]
            x = <int> self.deds[2 * self.nded + 1]
            if self.parent[a] != a:
                continue
            rc = self.scan_group(a, x)
            if rc != OK:
                return rc
            if self.parent[a] != a:
                continue
            b = self.table[a * self.ncols + x]
            if b == UNDEF or self.parent[b] != b:
                continue
            rc = self.scan_group(b, x ^ 1)
            if rc != OK:
                return rc
        return OK

    cdef long compact(self, long keep) nogil:
        """Drop dead rows in place; returns the new index of ``keep``."""
        cdef long c, k = 0, d, i, j = 0
        cdef int x
        cdef int nc = self.ncols
        # queue doubles as the old -> new index map
        for c in range(self.nrows):
            if self.parent[c] == c:
                self.queue[c] = k
                k += 1
            else:
                self.queue[c] = UNDEF
        for c in range(self.nrows):
            if self.parent[c] != c:
                continue
            for x in range(nc):
                d = self.table[c * nc + x]
                self.table[self.queue[c] * nc + x] = <int> (self.queue[d] if d != UNDEF else UNDEF)
        for c in range(k, self.nrows):
            for x in range(nc):
                self.table[c * nc + x] = UNDEF
        for i in range(self.nded):
            c = self.deds[2 * i]
            if c < self.nrows and self.parent[c] == c:
                self.deds[2 * j] = self.queue[c]
                self.deds[2 * j + 1] = self.deds[2 * i + 1]
                j += 1
        self.nded = j
        keep = self.queue[keep]
        for c in range(k):
            self.parent[c] = c
        self.nrows = k
        self.dead = 0
        return keep

    cdef list standardized(self):
        cdef long nc = self.ncols, n = self.nrows, k = 0, nord = 1, c, d
        cdef int x
        cdef long *order = <long *> malloc(n * sizeof(long))
        cdef long *index = <long *> malloc(n * sizeof(long))
        if order == NULL or index == NULL:
            free(order)
            free(index)
            raise MemoryError()
        for c in range(n):
            index[c] = UNDEF
        order[0] = 0
        index[0] = 0
        while k < nord:
            c = order[k]
            for x in range(nc):
                d = self.table[c * nc + x]
                if index[d] == UNDEF:
                    index[d] = nord
                    order[nord] = d
                    nord += 1
            k += 1
        out = []
        for k in range(n):
            c = order[k]
            out.append([index[self.table[c * nc + x]] for x in range(nc)])
        free(order)
        free(index)
        return out


cdef int *_as_cwords(list words) except NULL:
    cdef int total = 0, pos = 0
    for w in words:
        total += len(w)
    cdef int *buf = <int *> malloc((total + 1) * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    for w in words:
        for x in w:
            buf[pos] = x
            pos += 1
    return buf


def enumerate_cosets(int ncols, relators, subgens, long max_cosets, str strategy="felsch"):
    from ._kernel_py import cyclic_conjugates

    if max_cosets < 1:
        raise ValueError("max_cosets must be positive")
    if strategy not in ("felsch", "hlt"):
        raise ValueError(f"unknown strategy {strategy!r}")
    cdef bint felsch = strategy == "felsch"
    cdef _Enumerator en = _Enumerator(ncols, max_cosets, felsch)
    rels = [list(r) for r in relators if len(r)]
    sgs = [list(w) for w in subgens if len(w)]
    if felsch:
        en.set_conjugates(cyclic_conjugates(ncols, rels))
    cdef int *rbuf = _as_cwords(rels)
    cdef int *sbuf = _as_cwords(sgs)
    cdef int nrel = len(rels), nsg = len(sgs), k, x, rc = OK
    cdef int *rlen = <int *> malloc((nrel + 1) * sizeof(int))
    cdef int *roff = <int *> malloc((nrel + 1) * sizeof(int))
    cdef int *slen = <int *> malloc((nsg + 1) * sizeof(int))
    cdef int *soff = <int *> malloc((nsg + 1) * sizeof(int))
    cdef long a
    cdef bint restart, overflow = False
    cdef int pos = 0
    try:
        if rlen == NULL or roff == NULL or slen == NULL or soff == NULL:
            raise MemoryError()
        for k in range(nrel):
            roff[k] = pos
            rlen[k] = len(rels[k])
            pos += rlen[k]
        pos = 0
        for k in range(nsg):
            soff[k] = pos
            slen[k] = len(sgs[k])
            pos += slen[k]

        with nogil:
            for k in range(nsg):
                while True:
                    rc = en.scan_and_fill(0, sbuf + soff[k], slen[k])
                    if rc == FULL and en.dead > 0:
                        en.compact(0)
                        continue
                    break
                if rc == OK and felsch:
                    rc = en.process_deductions()
                if rc != OK:
                    break

            a = 0
            while rc == OK and a < en.nrows:
                if en.parent[a] != a:
                    a += 1
                    continue
                restart = False
                if felsch:
                    x = 0
                    while x < ncols and en.parent[a] == a:
                        if en.table[a * ncols + x] == UNDEF:
                            rc = en.define(a, x)
                            if rc == FULL and en.dead > 0:
                                a = en.compact(a)
                                rc = OK
                                continue
                            if rc != OK:
                                break
                            rc = en.process_deductions()
                            if rc != OK:
                                break
                        x += 1
                else:
                    for k in range(nrel):
                        rc = en.scan_and_fill(a, rbuf + roff[k], rlen[k])
                        if rc != OK or en.parent[a] != a:
                            break
                    if rc == OK and en.parent[a] == a:
                        for x in range(ncols):
                            if en.table[a * ncols + x] == UNDEF:
                                rc = en.define(a, x)
                                if rc != OK:
                                    break
                    if rc == FULL and en.dead > 0:
                        a = en.compact(a)
                        rc = OK
                        restart = True
                if rc != OK:
                    break
                if not restart:
                    a += 1

        if rc == NOMEM:
            raise MemoryError("coset table allocation failed")
        if rc == FULL:
            return "overflow", None, {"defined": en.defined, "rows": en.nrows}
        if en.dead:
            en.compact(0)
        table = en.standardized()
        return "closed", table, {"defined": en.defined, "rows": len(table)}
    finally:
        free(rbuf)
        free(sbuf)
        free(rlen)
        free(roff)
        free(slen)
        free(soff)
