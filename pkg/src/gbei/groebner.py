"""Buchberger's algorithm and ideal arithmetic built on it.

Everything here is exact over GF(p) and bit-for-bit deterministic: the
S-pair queue is a heap keyed by (lcm degree, lcm order key, i, j), the
divisor search in normal_form always takes the first match in list order,
and bases are returned reduced, monic, and sorted by descending leading
term, which makes them unique for the ideal and order.
"""

from __future__ import annotations

import heapq

from .hilbert import MonomialIdeal
from .rings import (Poly, TermOrder, mono_coprime, mono_degree, mono_div,
                    mono_divides, mono_lcm, mono_mul)


def normal_form(f, basis, order):
    """Remainder of f under multivariate division by basis.

    Deterministic: the highest reducible term is always reduced next, by
    the first basis element (in list order) whose leading term divides it.
    """
    reducers = []
    p = f.ring.prime
    for g in basis:
        if g.ring != f.ring:
            raise ValueError("ring mismatch")
        if g:
            lm = g.leading_monomial(order)
            reducers.append((lm, pow(g.terms[lm], -1, p), g.terms))
    key = order.key
    work = dict(f.terms)
    remainder = {}
    while work:
        mono = max(work, key=key)
        coeff = work.pop(mono)
        for lm, inv, gterms in reducers:
            if mono_divides(lm, mono):
                shift = mono_div(mono, lm)
                scale = coeff * inv % p
                for gm, gc in gterms.items():
                    if gm == lm:
                        continue
                    target = mono_mul(gm, shift)
                    c = (work.get(target, 0) - scale * gc) % p
                    if c:
                        work[target] = c
                    elif target in work:
                        del work[target]
                break
        else:
            remainder[mono] = coeff
    out = Poly.__new__(Poly)
    out.ring, out.terms = f.ring, remainder
    return out


def spolynomial(f, g, order):
    """S-polynomial: both leading terms lifted to their lcm and cancelled."""
    lf, cf = f.leading_term(order)
    lg, cg = g.leading_term(order)
    lcm = mono_lcm(lf, lg)
    p = f.ring.prime
    return (f.mono_shift(mono_div(lcm, lf), pow(cf, -1, p))
            - g.mono_shift(mono_div(lcm, lg), pow(cg, -1, p)))


def buchberger(gens, order):
    """The reduced Groebner basis of the ideal generated by gens.

    S-pairs are processed in (lcm degree, lcm key, i, j) heap order; pairs
    with coprime leading terms are discarded outright, and the chain
    criterion drops a pair whose lcm is divisible by a third leading term
    once both companion pairs have been dealt with.
    """
    basis = [g.monic(order) for g in gens if g]
    if not basis:
        return []
    key = order.key
    lms = [g.leading_monomial(order) for g in basis]
    heap = []
    pending = set()

    def push_pairs(j):
        lj = lms[j]
        for i in range(j):
            lcm = mono_lcm(lms[i], lj)
            heapq.heappush(heap, (mono_degree(lcm), key(lcm), i, j))
            pending.add((i, j))

    for j in range(len(basis)):
        push_pairs(j)

    while heap:
        _, _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        li, lj = lms[i], lms[j]
        if mono_coprime(li, lj):
            continue
        lcm = mono_lcm(li, lj)
        if any(k != i and k != j and mono_divides(lms[k], lcm)
               and (min(i, k), max(i, k)) not in pending
               and (min(j, k), max(j, k)) not in pending
               for k in range(len(basis))):
            continue
        remainder = normal_form(spolynomial(basis[i], basis[j], order), basis, order)
        if remainder:
            basis.append(remainder.monic(order))
            lms.append(remainder.leading_monomial(order))
            push_pairs(len(basis) - 1)

    return _reduce_basis(basis, order)


def _reduce_basis(basis, order):
    """Minimalize, tail-reduce, and sort a Groebner basis into reduced form."""
    key = order.key
    by_lm = sorted(basis, key=lambda g: key(g.leading_monomial(order)))
    minimal = []
    kept_lms = []
    for g in by_lm:
        lm = g.leading_monomial(order)
        if not any(mono_divides(h, lm) for h in kept_lms):
            minimal.append(g)
            kept_lms.append(lm)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        reduced.append(normal_form(g, others, order).monic(order) if others else g)
    reduced.sort(key=lambda g: key(g.leading_monomial(order)), reverse=True)
    return reduced


def initial_ideal(gb, order, nvars=None):
    """Leading-term ideal of a reduced basis, as a MonomialIdeal."""
    if nvars is None:
        if not gb:
            raise ValueError("cannot infer variable count from an empty basis")
        nvars = gb[0].ring.nvars
    return MonomialIdeal(nvars, [g.leading_monomial(order) for g in gb])


class Ideal:
    """Finitely generated ideal with per-order caching of reduced bases."""

    def __init__(self, ring, gens):
        self.ring = ring
        self.gens = tuple(gens)
        for g in self.gens:
            if g.ring != ring:
                raise ValueError("ring mismatch")
        self._gb = {}

    def default_order(self):
        return TermOrder.lex_row_major(self.ring)

    def groebner_basis(self, order=None):
        order = order or self.default_order()
        if order.perm not in self._gb:
            self._gb[order.perm] = buchberger(list(self.gens), order)
        return self._gb[order.perm]

    def initial_ideal(self, order=None):
        order = order or self.default_order()
        return initial_ideal(self.groebner_basis(order), order, self.ring.nvars)

    def contains(self, f, order=None):
        order = order or self.default_order()
        return not normal_form(f, self.groebner_basis(order), order)

    def __repr__(self):
        return f"Ideal({self.ring.rows}x{self.ring.cols}, {len(self.gens)} gens)"


def ideals_equal(I, J, order=None):
    """Equality test via uniqueness of the reduced Groebner basis."""
    if I.ring != J.ring:
        raise ValueError("ring mismatch")
    order = order or I.default_order()
    return I.groebner_basis(order) == J.groebner_basis(order)


def intersect(I, J):
    """I ∩ J by elimination: adjoin t, form t·I + (1-t)·J, drop t.

    The auxiliary variable sits above the whole grid in lex-row-major, so
    that order is a block elimination order; the t-free part of the reduced
    basis is then the reduced basis of the intersection, which the returned
    ideal caches.
    """
    if I.ring != J.ring:
        raise ValueError("ring mismatch")
    ring = I.ring
    ext = ring.extended(1)
    t = ext.aux_variable(0)
    s = ext.one() - t

    def lift(f):
        out = Poly.__new__(Poly)
        out.ring = ext
        out.terms = {(0,) + m: c for m, c in f.terms.items()}
        return out

    gens = [t * lift(g) for g in I.gens if g]
    gens += [s * lift(g) for g in J.gens if g]
    gb = buchberger(gens, TermOrder.lex_row_major(ext))

    kept = []
    for g in gb:
        if all(m[0] == 0 for m in g.terms):
            out = Poly.__new__(Poly)
            out.ring = ring
            out.terms = {m[1:]: c for m, c in g.terms.items()}
            kept.append(out)

    result = Ideal(ring, kept)
    result._gb[TermOrder.lex_row_major(ring).perm] = kept
    return result
