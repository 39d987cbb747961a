"""Pure-Python Groebner kernel: reference implementation.

The compiled extension (``godeaux._kernel``) mirrors this module
step-for-step — same pair selection, same pruning, same reduction,
same canonical output — so the two backends are interchangeable and
byte-for-byte comparable.  Tracked (cofactor-recording) variants exist
only here; the compiled backend accelerates the untracked hot paths.

Boundary format: a polynomial is a list of ``(exponent_tuple, coeff)``
pairs with distinct exponents and coefficients in [1, p).  Outputs are
sorted largest-monomial-first.

Algorithm notes:

* S-pair selection is the normal strategy — minimal lcm total degree,
  ties by the monomial order on lcms, then by pair indices.
* Pair pruning is the Gebauer–Moeller installation of Buchberger's
  coprimality and chain criteria.
* Reduction is full normal form; the divisor is the first basis element
  (in insertion order) whose leading monomial divides the candidate.
* The budget caps processed S-pairs and raises ``BudgetExceeded``.
"""

from __future__ import annotations

import heapq

from .errors import BudgetExceeded
from .rings import MonomialOrder

BACKEND_NAME = "pure"


def _key_func(kind, split):
    order = MonomialOrder(kind, split if kind == "block" else None)
    return order.key


def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _neg(key):
    return tuple(-k for k in key)


# -- normal form ---------------------------------------------------------------


def _nf(fdict, reducers, key, p):
    """Full normal form of ``fdict`` modulo ``reducers``.

    ``reducers``: list of (lm, lc_inv, terms_dict) scanned in order; the
    first dividing leading monomial wins.  Returns a fresh dict.
    """
    work = dict(fdict)
    heap = [(_neg(key(m)), m) for m in work]
    heapq.heapify(heap)
    out = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = work.get(m)
        if not c:
            continue
        hit = None
        for lm, lcinv, g in reducers:
            if _divides(lm, m):
                hit = (lm, lcinv, g)
                break
        if hit is None:
            out[m] = c
            del work[m]
            continue
        lm, lcinv, g = hit
        q = tuple(a - b for a, b in zip(m, lm))
        factor = (c * lcinv) % p
        for e2, c2 in g.items():
            e = tuple(a + b for a, b in zip(q, e2))
            prev = work.get(e, 0)
            s = (prev - factor * c2) % p
            if s:
                if prev == 0:
                    heapq.heappush(heap, (_neg(key(e)), e))
                work[e] = s
            else:
                work.pop(e, None)
    return out


def _nf_tracked(fdict, reducers, key, p):
    """Normal form plus quotients: f = sum(q_i * g_i) + r."""
    work = dict(fdict)
    heap = [(_neg(key(m)), m) for m in work]
    heapq.heapify(heap)
    out = {}
    quots = [dict() for _ in reducers]
    while heap:
        _, m = heapq.heappop(heap)
        c = work.get(m)
        if not c:
            continue
        hit = None
        for idx, (lm, lcinv, g) in enumerate(reducers):
            if _divides(lm, m):
                hit = (idx, lm, lcinv, g)
                break
        if hit is None:
            out[m] = c
            del work[m]
            continue
        idx, lm, lcinv, g = hit
        q = tuple(a - b for a, b in zip(m, lm))
        factor = (c * lcinv) % p
        qd = quots[idx]
        s = (qd.get(q, 0) + factor) % p
        if s:
            qd[q] = s
        else:
            qd.pop(q, None)
        for e2, c2 in g.items():
            e = tuple(a + b for a, b in zip(q, e2))
            prev = work.get(e, 0)
            s = (prev - factor * c2) % p
            if s:
                if prev == 0:
                    heapq.heappush(heap, (_neg(key(e)), e))
                work[e] = s
            else:
                work.pop(e, None)
    return out, quots


# -- dict helpers ---------------------------------------------------------------


def _scale(d, c, p):
    if c == 1:
        return dict(d)
    return {e: (v * c) % p for e, v in d.items()}


def _axpy(target, c, shift, src, p):
    """target += c * x^shift * src, in place."""
    for e2, c2 in src.items():
        e = tuple(a + b for a, b in zip(shift, e2))
        s = (target.get(e, 0) + c * c2) % p
        if s:
            target[e] = s
        else:
            target.pop(e, None)


def _is_one(d):
    return len(d) == 1 and not any(next(iter(d)))


# -- Buchberger -----------------------------------------------------------------


class _PairQueue:
    """Normal-strategy pair queue with Gebauer–Moeller pruning."""

    def __init__(self, key):
        self.key = key
        self.heap = []
        self.alive = {}  # (i, j) -> lcm exps

    def update(self, lms, t):
        """Install pairs of the new element ``t`` against 0..t-1."""
        key = self.key
        lt = lms[t]
        remaining = [(i, _lcm(lms[i], lt)) for i in range(t)]
        prods = [tuple(a + b for a, b in zip(lms[i], lt)) for i in range(t)]
        kept = []
        while remaining:
            i, l = remaining.pop(0)
            if l != prods[i]:
                dominated = any(_divides(l2, l) for _, l2 in remaining) or \
                    any(_divides(l2, l) for _, l2 in kept)
                if dominated:
                    continue
            kept.append((i, l))
        # Chain-criterion filter on the existing queue.
        for (i, j), l in list(self.alive.items()):
            if _divides(lt, l) and _lcm(lms[i], lt) != l and _lcm(lms[j], lt) != l:
                del self.alive[(i, j)]
        # Coprime survivors are dropped (criterion 1); the rest are queued.
        for i, l in kept:
            if l == prods[i]:
                continue
            self.alive[(i, t)] = l
            heapq.heappush(self.heap, (sum(l), key(l), i, t, l))

    def pop(self):
        """Next live pair as (i, j, lcm), or None when drained."""
        while self.heap:
            _, _, i, j, l = heapq.heappop(self.heap)
            if self.alive.get((i, j)) == l:
                del self.alive[(i, j)]
                return i, j, l
        return None


def _reduce_basis(basis, lms, key, p, reps=None):
    """Minimalize and tail-reduce to the canonical reduced basis.

    Returns (basis, reps) sorted largest leading monomial first; ``reps``
    is carried through the same row operations when provided.
    """
    order = sorted(range(len(basis)), key=lambda i: key(lms[i]))
    kept = []
    for i in order:
        if any(_divides(lms[j], lms[i]) for j in kept):
            continue
        kept.append(i)
    basis = [basis[i] for i in kept]
    lms = [lms[i] for i in kept]
    if reps is not None:
        reps = [reps[i] for i in kept]
    for idx in range(len(basis)):
        others = [(lms[j], 1, basis[j]) for j in range(len(basis)) if j != idx]
        if reps is None:
            basis[idx] = _nf(basis[idx], others, key, p)
        else:
            basis[idx], quots = _nf_tracked(basis[idx], others, key, p)
            rep = reps[idx]
            slot = 0
            for j in range(len(basis)):
                if j == idx:
                    continue
                for q, c in quots[slot].items():
                    for k, other in enumerate(reps[j]):
                        if other:
                            _axpy(rep[k], p - c, q, other, p)
                slot += 1
    final = sorted(range(len(basis)), key=lambda i: key(lms[i]), reverse=True)
    basis = [basis[i] for i in final]
    if reps is not None:
        reps = [reps[i] for i in final]
    return basis, reps


# -- public boundary --------------------------------------------------------------


def _to_terms(d, key):
    return [(e, d[e]) for e in sorted(d, key=key, reverse=True)]


def normal_form(f_terms, gens_terms, nvars, p, kind, split=None):
    key = _key_func(kind, split)
    reducers = []
    for terms in gens_terms:
        d = dict(terms)
        if not d:
            continue
        lm = max(d, key=key)
        reducers.append((lm, pow(d[lm], p - 2, p), d))
    r = _nf(dict(f_terms), reducers, key, p)
    return _to_terms(r, key)


def buchberger(gens_terms, nvars, p, kind, split=None, budget=None):
    """Reduced Groebner basis and the processed-pair count."""
    key = _key_func(kind, split)
    zero_exps = (0,) * nvars
    one_terms = [(zero_exps, 1)]

    basis = []
    lms = []
    queue = _PairQueue(key)
    pairs_processed = 0

    def install(d):
        lm = max(d, key=key)
        lc = d[lm]
        if lc != 1:
            d = _scale(d, pow(lc, p - 2, p), p)
        if _is_one(d):
            return True
        basis.append(d)
        lms.append(lm)
        queue.update(lms, len(basis) - 1)
        return False

    for terms in gens_terms:
        d = dict(terms)
        if not d:
            continue
        if install(d):
            return [one_terms], pairs_processed

    while True:
        item = queue.pop()
        if item is None:
            break
        if budget is not None and pairs_processed >= budget:
            raise BudgetExceeded(pairs_processed, len(basis))
        pairs_processed += 1
        i, j, l = item
        s = {}
        _axpy(s, 1, tuple(a - b for a, b in zip(l, lms[i])), basis[i], p)
        _axpy(s, p - 1, tuple(a - b for a, b in zip(l, lms[j])), basis[j], p)
        reducers = [(lms[k], 1, basis[k]) for k in range(len(basis))]
        r = _nf(s, reducers, key, p)
        if r and install(r):
            return [one_terms], pairs_processed

    basis, _ = _reduce_basis(basis, lms, key, p)
    return [_to_terms(d, key) for d in basis], pairs_processed


def normal_form_tracked(f_terms, gens_terms, nvars, p, kind, split=None):
    """Remainder plus per-generator quotients (aligned with the input)."""
    key = _key_func(kind, split)
    live = []
    live_index = []
    for i, terms in enumerate(gens_terms):
        d = dict(terms)
        if not d:
            continue
        lm = max(d, key=key)
        live.append((lm, pow(d[lm], p - 2, p), d))
        live_index.append(i)
    r, quots_live = _nf_tracked(dict(f_terms), live, key, p)
    quots = [[] for _ in gens_terms]
    for slot, i in enumerate(live_index):
        quots[i] = _to_terms(quots_live[slot], key)
    return _to_terms(r, key), quots


def buchberger_tracked(gens_terms, nvars, p, kind, split=None, budget=None,
                       stop_on_unit=False):
    """Buchberger with cofactor tracking over the original generators.

    Returns ``(basis, reps, pairs_processed, unit_rep)``.  ``reps[k]``
    expresses basis element k as cofactors over the inputs.  When 1 is
    discovered and ``stop_on_unit`` is set, the run aborts immediately
    with ``unit_rep`` (cofactors expressing 1) and no basis.
    """
    key = _key_func(kind, split)
    gens = [dict(t) for t in gens_terms]
    ngen = len(gens)
    zero_exps = (0,) * nvars

    basis = []
    lms = []
    reps = []
    queue = _PairQueue(key)
    pairs_processed = 0
    unit_rep = None

    def install(d, rep):
        nonlocal unit_rep
        lm = max(d, key=key)
        lc = d[lm]
        if lc != 1:
            inv = pow(lc, p - 2, p)
            d = _scale(d, inv, p)
            rep = [_scale(r, inv, p) for r in rep]
        if _is_one(d):
            unit_rep = rep
            return True
        basis.append(d)
        lms.append(lm)
        reps.append(rep)
        queue.update(lms, len(basis) - 1)
        return False

    unit_found = False
    for k, g in enumerate(gens):
        if not g:
            continue
        rep = [dict() for _ in range(ngen)]
        rep[k][zero_exps] = 1
        if install(dict(g), rep):
            unit_found = True
            break

    while not unit_found:
        item = queue.pop()
        if item is None:
            break
        if budget is not None and pairs_processed >= budget:
            raise BudgetExceeded(pairs_processed, len(basis))
        pairs_processed += 1
        i, j, l = item
        qi = tuple(a - b for a, b in zip(l, lms[i]))
        qj = tuple(a - b for a, b in zip(l, lms[j]))
        s = {}
        _axpy(s, 1, qi, basis[i], p)
        _axpy(s, p - 1, qj, basis[j], p)
        reducers = [(lms[k], 1, basis[k]) for k in range(len(basis))]
        r, quots = _nf_tracked(s, reducers, key, p)
        if not r:
            continue
        rep = [dict() for _ in range(ngen)]
        for k in range(ngen):
            _axpy(rep[k], 1, qi, reps[i][k], p)
            _axpy(rep[k], p - 1, qj, reps[j][k], p)
        for b_idx, q in enumerate(quots):
            for qexps, qc in q.items():
                for k in range(ngen):
                    if reps[b_idx][k]:
                        _axpy(rep[k], p - qc, qexps, reps[b_idx][k], p)
        if install(r, rep):
            unit_found = True

    if unit_found:
        unit = [_to_terms(r, key) for r in unit_rep]
        if stop_on_unit:
            return None, None, pairs_processed, unit
        one = {zero_exps: 1}
        return [_to_terms(one, key)], [unit], pairs_processed, None

    basis, reps = _reduce_basis(basis, lms, key, p, reps)
    basis_terms = [_to_terms(d, key) for d in basis]
    reps_terms = [[_to_terms(r, key) for r in rep] for rep in reps]
    return basis_terms, reps_terms, pairs_processed, None
