# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled Groebner kernel: array-based twin of ``_kernel_pure``.

Same pair selection (normal strategy), same Gebauer-Moeller pruning,
same first-divisor full normal form, same canonical reduced output,
same budget semantics -- only the data structures differ (packed-key
term arrays and geobuckets instead of dicts and heaps), so results are
identical to the pure backend term for term and pair for pair.

A monomial is stored as its order-key field vector -- per block, the
reversed partial sums of the exponents (plain exponents under lex) --
packed four 16-bit fields per 64-bit word.  Key comparison is then
word-wise integer comparison, monomial multiplication is word-wise
addition (fields never overflow 16 bits for sane degrees), and
divisibility is a per-block monotone-chain test on field differences.
"""

from libc.stdlib cimport malloc, realloc, free
from libc.string cimport memcpy

import heapq

from .errors import BudgetExceeded

BACKEND_NAME = "compiled"
MAX_VARS = 16
MAX_COEFF_MODULUS = 1 << 31
MAX_FIELD = 0xFFFF

ctypedef unsigned long long u64
ctypedef unsigned int u32
ctypedef unsigned short u16
ctypedef long long i64

DEF KW = 4           # 64-bit words per key
DEF KF = 16          # 16-bit fields per key
DEF NSLOTS = 16      # geobucket levels
DEF SLOT0 = 16       # capacity of level 0; level i holds SLOT0 << (2*i)


cdef inline int cmp_key(const u64 *a, const u64 *b) nogil:
    cdef int w
    for w in range(KW):
        if a[w] != b[w]:
            return 1 if a[w] > b[w] else -1
    return 0


cdef inline void add_key(u64 *out, const u64 *a, const u64 *b) nogil:
    cdef int w
    for w in range(KW):
        out[w] = a[w] + b[w]


cdef inline void sub_key(u64 *out, const u64 *a, const u64 *b) nogil:
    cdef int w
    for w in range(KW):
        out[w] = a[w] - b[w]


cdef inline int key_is_zero(const u64 *a) nogil:
    cdef int w
    for w in range(KW):
        if a[w] != 0:
            return 0
    return 1


cdef inline int get_field(const u64 *key, int t) nogil:
    return <int>((key[t >> 2] >> (48 - ((t & 3) << 4))) & 0xFFFF)


cdef class _Ctx:
    """Ring context: variable count, modulus, and order block layout."""

    cdef int n, nblocks, bpv
    cdef int bstart[KF + 1]
    cdef u64 p

    def __cinit__(self, int nvars, u64 p, str kind, split):
        cdef int i
        if nvars < 1 or nvars > MAX_VARS:
            raise ValueError(f"compiled kernel supports 1..{MAX_VARS} variables")
        if p >= MAX_COEFF_MODULUS:
            raise ValueError("modulus too large for the compiled kernel")
        self.n = nvars
        self.p = p
        if kind == "degrevlex":
            self.nblocks = 1
            self.bstart[0] = 0
            self.bstart[1] = nvars
        elif kind == "lex":
            self.nblocks = nvars
            for i in range(nvars + 1):
                self.bstart[i] = i
        elif kind == "block":
            if split is None or not (0 < <int>split < nvars):
                raise ValueError("block orders need 0 < split < nvars")
            self.nblocks = 2
            self.bstart[0] = 0
            self.bstart[1] = <int>split
            self.bstart[2] = nvars
        else:
            raise ValueError(f"unknown monomial order kind: {kind!r}")

    cdef int enc(self, object exps, u64 *out) except -1:
        """Exponent tuple -> packed key words."""
        cdef u16 fields[KF]
        cdef int b, j, b0, b1, total, e
        cdef int w, t
        for t in range(KF):
            fields[t] = 0
        for b in range(self.nblocks):
            b0 = self.bstart[b]
            b1 = self.bstart[b + 1]
            total = 0
            for j in range(b0, b1):
                e = exps[j]
                if e < 0:
                    raise ValueError("negative exponent")
                total += e
                if total > MAX_FIELD:
                    raise ValueError("degree too large for the compiled kernel")
                # reversed partials: partial through j lands at b1-1-(j-b0)+b0
                fields[b0 + (b1 - 1 - j) ] = <u16>total
        for w in range(KW):
            out[w] = ((<u64>fields[4 * w] << 48) | (<u64>fields[4 * w + 1] << 32)
                      | (<u64>fields[4 * w + 2] << 16) | <u64>fields[4 * w + 3])
        return 0

    cdef tuple dec(self, const u64 *key):
        """Packed key words -> exponent tuple."""
        cdef int b, b0, b1, j, prev, cur
        cdef list exps = [0] * self.n
        for b in range(self.nblocks):
            b0 = self.bstart[b]
            b1 = self.bstart[b + 1]
            prev = 0
            for j in range(b0, b1):
                cur = get_field(key, b0 + (b1 - 1 - j))
                exps[j] = cur - prev
                prev = cur
        return tuple(exps)

    cdef tuple keytuple(self, const u64 *key):
        """Key fields as a Python tuple (same value as MonomialOrder.key)."""
        cdef int t
        return tuple([get_field(key, t) for t in range(self.n)])

    cdef int divides(self, const u64 *a, const u64 *m) nogil:
        """True when monomial a divides monomial m (key fields)."""
        cdef int b, b0, b1, t, cur, prev
        for b in range(self.nblocks):
            b0 = self.bstart[b]
            b1 = self.bstart[b + 1]
            prev = 0x7FFFFFFF
            for t in range(b0, b1):
                cur = get_field(m, t) - get_field(a, t)
                if cur < 0 or cur > prev:
                    return 0
                prev = cur
        return 1

    cdef u32 divmask(self, const u64 *key) nogil:
        """Coarse divisibility filter: bit (v*bpv + k) set iff e_v >= 2^k."""
        cdef int b, b0, b1, j, prev, cur, e, k, bpv
        cdef u32 mask = 0
        bpv = 32 // self.n
        if bpv > 8:
            bpv = 8
        for b in range(self.nblocks):
            b0 = self.bstart[b]
            b1 = self.bstart[b + 1]
            prev = 0
            for j in range(b0, b1):
                cur = get_field(key, b0 + (b1 - 1 - j))
                e = cur - prev
                prev = cur
                for k in range(bpv):
                    if e >= (1 << k):
                        mask |= (<u32>1) << (j * bpv + k)
                    else:
                        break
        return mask


cdef class TV:
    """Term vector: keys (KW words each) + coefficients, descending order."""

    cdef u64 *k
    cdef u32 *c
    cdef Py_ssize_t n, cap, off

    def __cinit__(self, Py_ssize_t cap=8):
        if cap < 4:
            cap = 4
        self.k = <u64 *>malloc(cap * KW * sizeof(u64))
        self.c = <u32 *>malloc(cap * sizeof(u32))
        if self.k == NULL or self.c == NULL:
            raise MemoryError()
        self.n = 0
        self.cap = cap
        self.off = 0

    def __dealloc__(self):
        if self.k != NULL:
            free(self.k)
        if self.c != NULL:
            free(self.c)

    cdef int reserve(self, Py_ssize_t want) except -1:
        cdef Py_ssize_t newcap
        cdef u64 *nk
        cdef u32 *nc
        if want <= self.cap:
            return 0
        newcap = self.cap
        while newcap < want:
            newcap *= 2
        nk = <u64 *>realloc(self.k, newcap * KW * sizeof(u64))
        if nk == NULL:
            raise MemoryError()
        self.k = nk
        nc = <u32 *>realloc(self.c, newcap * sizeof(u32))
        if nc == NULL:
            raise MemoryError()
        self.c = nc
        self.cap = newcap
        return 0

    cdef inline Py_ssize_t size(self) nogil:
        return self.n - self.off


cdef int merge_into(TV dst, TV a, TV b, u64 p) except -1:
    """dst := a + b (both descending, distinct keys within each), mod p."""
    cdef Py_ssize_t ia = a.off, ib = b.off, o = 0
    cdef int cv
    cdef u64 s
    dst.reserve(a.size() + b.size())
    dst.off = 0
    while ia < a.n and ib < b.n:
        cv = cmp_key(a.k + ia * KW, b.k + ib * KW)
        if cv > 0:
            memcpy(dst.k + o * KW, a.k + ia * KW, KW * sizeof(u64))
            dst.c[o] = a.c[ia]
            ia += 1
            o += 1
        elif cv < 0:
            memcpy(dst.k + o * KW, b.k + ib * KW, KW * sizeof(u64))
            dst.c[o] = b.c[ib]
            ib += 1
            o += 1
        else:
            s = (<u64>a.c[ia] + <u64>b.c[ib]) % p
            if s != 0:
                memcpy(dst.k + o * KW, a.k + ia * KW, KW * sizeof(u64))
                dst.c[o] = <u32>s
                o += 1
            ia += 1
            ib += 1
    while ia < a.n:
        memcpy(dst.k + o * KW, a.k + ia * KW, KW * sizeof(u64))
        dst.c[o] = a.c[ia]
        ia += 1
        o += 1
    while ib < b.n:
        memcpy(dst.k + o * KW, b.k + ib * KW, KW * sizeof(u64))
        dst.c[o] = b.c[ib]
        ib += 1
        o += 1
    dst.n = o
    return 0


cdef class Buckets:
    """Geobucket accumulator: log-structured sorted runs with merge carry."""

    cdef list slots          # NSLOTS term vectors
    cdef list pool           # recycled empty term vectors
    cdef u64 p

    def __cinit__(self, u64 p):
        self.p = p
        self.slots = [TV(4) for _ in range(NSLOTS)]
        self.pool = []

    cdef inline Py_ssize_t _cap(self, Py_ssize_t i) nogil:
        if i >= NSLOTS - 1:
            return (<Py_ssize_t>1) << 60
        return (<Py_ssize_t>SLOT0) << (2 * i)

    cdef inline Py_ssize_t _level(self, Py_ssize_t ln) nogil:
        cdef Py_ssize_t i = 0
        while self._cap(i) < ln:
            i += 1
        return i

    cdef TV _grab(self):
        cdef TV t
        if self.pool:
            t = <TV>self.pool.pop()
        else:
            t = TV(8)
        t.n = 0
        t.off = 0
        return t

    cdef void _release(self, TV t):
        t.n = 0
        t.off = 0
        if len(self.pool) < 2 * NSLOTS:
            self.pool.append(t)

    cdef int _insert(self, TV x) except -1:
        """Insert owned run x, merging with occupied levels and carrying."""
        cdef Py_ssize_t i = self._level(x.size())
        cdef TV s, dst, tmp
        while True:
            s = <TV>self.slots[i]
            if s.size() == 0:
                self.slots[i] = x
                self._release(s)
                if x.size() <= self._cap(i):
                    return 0
                tmp = self._grab()
                self.slots[i] = tmp
                i += 1
                continue
            dst = self._grab()
            merge_into(dst, s, x, self.p)
            tmp = <TV>self.slots[i]
            self.slots[i] = self._grab()
            self._release(tmp)
            self._release(x)
            x = dst
            if x.size() <= self._cap(i):
                s = <TV>self.slots[i]
                self.slots[i] = x
                self._release(s)
                return 0
            i += 1

    cdef int axpy(self, u64 coef, const u64 *shift, TV src,
                  Py_ssize_t soff, bint negate) except -1:
        """Add coef * x^shift * src[soff:] (negated when asked), mod p."""
        cdef TV buf = self._grab()
        cdef Py_ssize_t m = src.n - soff, i, o = 0
        cdef u64 v
        if m <= 0 or coef == 0:
            self._release(buf)
            return 0
        buf.reserve(m)
        for i in range(m):
            v = (<u64>src.c[soff + i] * coef) % self.p
            if v == 0:
                continue
            if negate:
                v = self.p - v
            if shift == NULL:
                memcpy(buf.k + o * KW, src.k + (soff + i) * KW, KW * sizeof(u64))
            else:
                add_key(buf.k + o * KW, src.k + (soff + i) * KW, shift)
            buf.c[o] = <u32>v
            o += 1
        buf.n = o
        if o == 0:
            self._release(buf)
            return 0
        self._insert(buf)
        return 0

    cdef int extract_max(self, u64 *kout, u64 *cout) except -1:
        """Pop the largest monomial with its net coefficient; 0 when empty."""
        cdef Py_ssize_t i, best
        cdef TV s
        cdef u64 acc
        cdef int cv
        while True:
            best = -1
            for i in range(NSLOTS):
                s = <TV>self.slots[i]
                if s.size() == 0:
                    continue
                if best < 0:
                    best = i
                else:
                    cv = cmp_key(s.k + s.off * KW,
                                 (<TV>self.slots[best]).k
                                 + (<TV>self.slots[best]).off * KW)
                    if cv > 0:
                        best = i
            if best < 0:
                return 0
            s = <TV>self.slots[best]
            memcpy(kout, s.k + s.off * KW, KW * sizeof(u64))
            acc = 0
            for i in range(NSLOTS):
                s = <TV>self.slots[i]
                if s.size() == 0:
                    continue
                if cmp_key(s.k + s.off * KW, kout) == 0:
                    acc = (acc + s.c[s.off]) % self.p
                    s.off += 1
            if acc != 0:
                cout[0] = acc
                return 1


cdef class RedSet:
    """Reducers: leading keys, divmasks, inverse leading coefficients, bodies."""

    cdef Py_ssize_t n, cap
    cdef u64 *lmw
    cdef u32 *mask
    cdef u64 *lcinv
    cdef list polys

    def __cinit__(self, Py_ssize_t cap=16):
        self.n = 0
        self.cap = cap
        self.lmw = <u64 *>malloc(cap * KW * sizeof(u64))
        self.mask = <u32 *>malloc(cap * sizeof(u32))
        self.lcinv = <u64 *>malloc(cap * sizeof(u64))
        if self.lmw == NULL or self.mask == NULL or self.lcinv == NULL:
            raise MemoryError()
        self.polys = []

    def __dealloc__(self):
        if self.lmw != NULL:
            free(self.lmw)
        if self.mask != NULL:
            free(self.mask)
        if self.lcinv != NULL:
            free(self.lcinv)

    cdef int add(self, _Ctx ctx, TV poly, u64 lcinv) except -1:
        cdef Py_ssize_t newcap
        cdef u64 *nl
        cdef u32 *nm
        cdef u64 *ni
        if self.n == self.cap:
            newcap = self.cap * 2
            nl = <u64 *>realloc(self.lmw, newcap * KW * sizeof(u64))
            if nl == NULL:
                raise MemoryError()
            self.lmw = nl
            nm = <u32 *>realloc(self.mask, newcap * sizeof(u32))
            if nm == NULL:
                raise MemoryError()
            self.mask = nm
            ni = <u64 *>realloc(self.lcinv, newcap * sizeof(u64))
            if ni == NULL:
                raise MemoryError()
            self.lcinv = ni
            self.cap = newcap
        memcpy(self.lmw + self.n * KW, poly.k, KW * sizeof(u64))
        self.mask[self.n] = ctx.divmask(poly.k)
        self.lcinv[self.n] = lcinv
        self.polys.append(poly)
        self.n += 1
        return 0


cdef TV _nf_c(_Ctx ctx, Buckets W, RedSet R):
    """Full normal form of the bucket contents modulo R (descending out).

    The divisor is the first reducer (insertion order) whose leading
    monomial divides the candidate -- the same rule as the pure kernel.
    """
    cdef TV out = TV(16)
    cdef u64 mkey[KW]
    cdef u64 coef, factor
    cdef u64 shift[KW]
    cdef u32 mmask
    cdef Py_ssize_t r, hit
    cdef TV g
    while W.extract_max(mkey, &coef):
        mmask = ctx.divmask(mkey)
        hit = -1
        for r in range(R.n):
            if (R.mask[r] & ~mmask) == 0 and ctx.divides(R.lmw + r * KW, mkey):
                hit = r
                break
        if hit < 0:
            out.reserve(out.n + 1)
            memcpy(out.k + out.n * KW, mkey, KW * sizeof(u64))
            out.c[out.n] = <u32>coef
            out.n += 1
            continue
        g = <TV>R.polys[hit]
        factor = (coef * R.lcinv[hit]) % ctx.p
        sub_key(shift, mkey, R.lmw + hit * KW)
        # the head term cancels the candidate exactly; push the negated tail
        W.axpy(factor, shift, g, 1, True)
    return out


# -- boundary helpers ----------------------------------------------------------


cdef TV _terms_to_tv(_Ctx ctx, object terms):
    """Term list -> canonical TV (duplicate exponents: last one wins)."""
    d = dict(terms)
    cdef TV tv = TV(max(len(d), 4))
    cdef Py_ssize_t o = 0
    cdef u64 kw[KW]
    rows = []
    for exps, c in d.items():
        cv = int(c) % ctx.p
        if cv == 0:
            continue
        ctx.enc(exps, kw)
        rows.append((ctx.keytuple(kw), tuple(exps), cv))
    rows.sort(reverse=True)
    tv.reserve(len(rows))
    for ktup, exps, cv in rows:
        ctx.enc(exps, kw)
        memcpy(tv.k + o * KW, kw, KW * sizeof(u64))
        tv.c[o] = <u32>cv
        o += 1
    tv.n = o
    return tv


cdef list _tv_to_terms(_Ctx ctx, TV tv):
    cdef Py_ssize_t i
    cdef list out = []
    for i in range(tv.off, tv.n):
        out.append((ctx.dec(tv.k + i * KW), int(tv.c[i])))
    return out


cdef inline u64 _inv_mod(u64 a, u64 p):
    return <u64>pow(<object>a, <object>(p - 2), <object>p)


# -- public: normal form ---------------------------------------------------------


def normal_form(f_terms, gens_terms, nvars, p, kind, split=None):
    cdef _Ctx ctx = _Ctx(nvars, p, kind, split)
    cdef RedSet R = RedSet()
    cdef Buckets W = Buckets(p)
    cdef TV g, r
    for terms in gens_terms:
        g = _terms_to_tv(ctx, terms)
        if g.n == 0:
            continue
        R.add(ctx, g, _inv_mod(g.c[0], ctx.p))
    f = _terms_to_tv(ctx, f_terms)
    W.axpy(1, NULL, f, 0, False)
    r = _nf_c(ctx, W, R)
    return _tv_to_terms(ctx, r)


# -- Buchberger ------------------------------------------------------------------


cdef class _LmTable:
    """Leading-monomial store for the working basis (exponents + keys)."""

    cdef Py_ssize_t n, cap
    cdef int nvars
    cdef u16 *exps
    cdef u64 *words

    def __cinit__(self, int nvars, Py_ssize_t cap=64):
        self.n = 0
        self.cap = cap
        self.nvars = nvars
        self.exps = <u16 *>malloc(cap * nvars * sizeof(u16))
        self.words = <u64 *>malloc(cap * KW * sizeof(u64))
        if self.exps == NULL or self.words == NULL:
            raise MemoryError()

    def __dealloc__(self):
        if self.exps != NULL:
            free(self.exps)
        if self.words != NULL:
            free(self.words)

    cdef int push(self, _Ctx ctx, const u64 *key) except -1:
        cdef Py_ssize_t newcap
        cdef u16 *ne
        cdef u64 *nw
        cdef int j
        if self.n == self.cap:
            newcap = self.cap * 2
            ne = <u16 *>realloc(self.exps, newcap * self.nvars * sizeof(u16))
            if ne == NULL:
                raise MemoryError()
            self.exps = ne
            nw = <u64 *>realloc(self.words, newcap * KW * sizeof(u64))
            if nw == NULL:
                raise MemoryError()
            self.words = nw
            self.cap = newcap
        exps = ctx.dec(key)
        for j in range(self.nvars):
            self.exps[self.n * self.nvars + j] = <u16>exps[j]
        memcpy(self.words + self.n * KW, key, KW * sizeof(u64))
        self.n += 1
        return 0


cdef inline int _exps_divides(const u16 *a, const u16 *b, int n) nogil:
    cdef int j
    for j in range(n):
        if a[j] > b[j]:
            return 0
    return 1


cdef class _PairQueueC:
    """Normal-strategy pair queue with Gebauer-Moeller pruning (mirror)."""

    cdef _Ctx ctx
    cdef _LmTable lms
    cdef list heap
    cdef dict alive

    def __cinit__(self, _Ctx ctx, _LmTable lms):
        self.ctx = ctx
        self.lms = lms
        self.heap = []
        self.alive = {}

    cdef int update(self, Py_ssize_t t) except -1:
        """Install pairs of new element t against 0..t-1 (GM criteria)."""
        cdef _Ctx ctx = self.ctx
        cdef int n = self.lms.nvars
        cdef u16 *lt = self.lms.exps + t * n
        cdef u16 *lrows = <u16 *>malloc(t * n * sizeof(u16)) if t > 0 else NULL
        cdef char *coprime = <char *>malloc(t if t > 0 else 1)
        cdef char *keptf = <char *>malloc(t if t > 0 else 1)
        cdef Py_ssize_t i, j, kcount
        cdef u16 *li
        cdef u16 a, b2
        cdef bint dominated, cop
        cdef int jj
        if (t > 0 and lrows == NULL) or coprime == NULL or keptf == NULL:
            if lrows != NULL:
                free(lrows)
            if coprime != NULL:
                free(coprime)
            if keptf != NULL:
                free(keptf)
            raise MemoryError()
        try:
            for i in range(t):
                li = self.lms.exps + i * n
                cop = 1
                for jj in range(n):
                    a = li[jj]
                    b2 = lt[jj]
                    lrows[i * n + jj] = a if a > b2 else b2
                    if a != 0 and b2 != 0:
                        cop = 0
                coprime[i] = 1 if cop else 0
                keptf[i] = 0
            # first pass: plain-divisibility domination, mirror of the pure
            # kernel's remaining/kept scan in ascending index order
            for i in range(t):
                if not coprime[i]:
                    dominated = False
                    for j in range(i + 1, t):  # still in "remaining"
                        if _exps_divides(lrows + j * n, lrows + i * n, n):
                            dominated = True
                            break
                    if not dominated:
                        for j in range(t):     # the "kept" list so far
                            if keptf[j] and _exps_divides(lrows + j * n,
                                                          lrows + i * n, n):
                                dominated = True
                                break
                    if dominated:
                        continue
                keptf[i] = 1
            # chain-criterion filter on the existing queue
            doomed = []
            for item in self.alive.items():
                ij = <tuple>(<tuple>item)[0]
                l = <tuple>(<tuple>item)[1]
                i = <Py_ssize_t>(<tuple>ij)[0]
                j = <Py_ssize_t>(<tuple>ij)[1]
                if not _tuple_div_exps(lt, l, n):
                    continue
                if _tuple_lcm_eq(self.lms.exps + i * n, lt, l, n):
                    continue
                if _tuple_lcm_eq(self.lms.exps + j * n, lt, l, n):
                    continue
                doomed.append(ij)
            for ij in doomed:
                del self.alive[ij]
            # queue surviving non-coprime pairs
            for i in range(t):
                if not keptf[i] or coprime[i]:
                    continue
                ltup = tuple([int(lrows[i * n + jj]) for jj in range(n)])
                self.alive[(int(i), int(t))] = ltup
                heapq.heappush(self.heap, (sum(ltup), _keytuple_of(ctx, ltup),
                                           int(i), int(t), ltup))
        finally:
            if lrows != NULL:
                free(lrows)
            free(coprime)
            free(keptf)
        return 0

    cdef tuple pop(self):
        while self.heap:
            entry = heapq.heappop(self.heap)
            ij = (entry[2], entry[3])
            l = entry[4]
            if self.alive.get(ij) == l:
                del self.alive[ij]
                return (entry[2], entry[3], l)
        return None


cdef inline bint _tuple_div_exps(const u16 *a, tuple l, int n):
    cdef int j
    for j in range(n):
        if a[j] > <int>l[j]:
            return False
    return True


cdef inline bint _tuple_lcm_eq(const u16 *a, const u16 *b, tuple l, int n):
    cdef int j, m
    cdef int av, bv
    for j in range(n):
        av = a[j]
        bv = b[j]
        m = av if av > bv else bv
        if m != <int>l[j]:
            return False
    return True


cdef _keytuple_of(_Ctx ctx, tuple exps):
    cdef u64 kw[KW]
    ctx.enc(exps, kw)
    return ctx.keytuple(kw)


cdef list _reduce_basis_c(_Ctx ctx, list basis, _LmTable lms):
    """Minimalize + tail-reduce + canonical descending sort (mirror)."""
    cdef Py_ssize_t i, j, idx, m
    cdef int n = lms.nvars
    order = sorted(range(len(basis)),
                   key=lambda q: ctx.keytuple(lms.words + (<Py_ssize_t>q) * KW))
    kept = []
    for oi in order:
        i = <Py_ssize_t>oi
        dominated = False
        for kj in kept:
            j = <Py_ssize_t>kj
            if _exps_divides(lms.exps + j * n, lms.exps + i * n, n):
                dominated = True
                break
        if not dominated:
            kept.append(oi)
    cdef list nb = [basis[q] for q in kept]
    cdef _LmTable nl = _LmTable(n, max(len(kept), 4))
    for q in kept:
        nl.push(ctx, lms.words + (<Py_ssize_t>q) * KW)
    cdef RedSet R
    cdef Buckets W
    cdef TV cur, red
    m = len(nb)
    for idx in range(m):
        R = RedSet(max(m, 4))
        for j in range(m):
            if j != idx:
                R.add(ctx, <TV>nb[j], 1)
        W = Buckets(ctx.p)
        cur = <TV>nb[idx]
        W.axpy(1, NULL, cur, 0, False)
        red = _nf_c(ctx, W, R)
        nb[idx] = red
    final = sorted(range(m),
                   key=lambda q: ctx.keytuple(nl.words + (<Py_ssize_t>q) * KW),
                   reverse=True)
    return [nb[q] for q in final]


cdef int _install(_Ctx ctx, list basis, _LmTable lms, _PairQueueC queue,
                  TV d) except -1:
    """Monic-normalize and adopt d into the basis; 1 when d is the unit."""
    cdef u64 iv
    cdef Py_ssize_t q
    if d.c[0] != 1:
        iv = _inv_mod(d.c[0], ctx.p)
        for q in range(d.n):
            d.c[q] = <u32>((<u64>d.c[q] * iv) % ctx.p)
    if d.n == 1 and key_is_zero(d.k):
        return 1
    basis.append(d)
    lms.push(ctx, d.k)
    queue.update(lms.n - 1)
    return 0


def buchberger(gens_terms, nvars, p, kind, split=None, budget=None):
    """Reduced Groebner basis and processed-pair count (pure-kernel mirror)."""
    cdef _Ctx ctx = _Ctx(nvars, p, kind, split)
    cdef list basis = []
    cdef _LmTable lms = _LmTable(nvars)
    cdef _PairQueueC queue = _PairQueueC(ctx, lms)
    cdef Py_ssize_t pairs_processed = 0
    cdef TV g, r
    cdef RedSet R
    cdef Buckets W
    cdef u64 shift[KW]
    cdef u64 lw[KW]
    cdef Py_ssize_t i, j, k

    one_terms = [((0,) * nvars, 1)]

    for terms in gens_terms:
        g = _terms_to_tv(ctx, terms)
        if g.n == 0:
            continue
        if _install(ctx, basis, lms, queue, g):
            return [one_terms], int(pairs_processed)

    while True:
        item = queue.pop()
        if item is None:
            break
        if budget is not None and pairs_processed >= <Py_ssize_t>budget:
            raise BudgetExceeded(int(pairs_processed), len(basis))
        pairs_processed += 1
        i = <Py_ssize_t>item[0]
        j = <Py_ssize_t>item[1]
        ctx.enc(item[2], lw)
        W = Buckets(ctx.p)
        sub_key(shift, lw, lms.words + i * KW)
        W.axpy(1, shift, <TV>basis[i], 0, False)
        sub_key(shift, lw, lms.words + j * KW)
        W.axpy(1, shift, <TV>basis[j], 0, True)
        R = RedSet(max(len(basis), 4))
        for k in range(len(basis)):
            R.add(ctx, <TV>basis[k], 1)
        r = _nf_c(ctx, W, R)
        if r.n and _install(ctx, basis, lms, queue, r):
            return [one_terms], int(pairs_processed)

    cdef list reduced = _reduce_basis_c(ctx, basis, lms)
    return [_tv_to_terms(ctx, <TV>t) for t in reduced], int(pairs_processed)
