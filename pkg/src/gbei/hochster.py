"""Graded Betti numbers of squarefree monomial quotients over GF(p).

The route is Hochster's formula: beta_{i,sigma}(S/I) is the rank of the
reduced homology H~_{|sigma|-i-1} of the Stanley-Reisner complex of I
restricted to sigma.  A restriction contributes nothing whenever it is a
cone, and it is a cone exactly unless sigma is a union of generator
supports, so only those unions are ever enumerated — that pruning is what
keeps 12-variable tables affordable.

Ranks of boundary matrices are computed by Gaussian elimination mod p on
int64 arrays; with p < 2^15.5 every intermediate product stays far below
2^63.
"""

from __future__ import annotations

import numpy as np

from .errors import CapExceededError
from .rings import DEFAULT_PRIME

HOCHSTER_CAP = 15


class SimplicialComplex:
    """Stanley-Reisner complex of a squarefree monomial ideal.

    Faces are exactly the subsets whose squarefree monomial avoids every
    generator, so membership is a handful of bitmask tests and the face
    list is never materialized globally.
    """

    __slots__ = ("nvars", "supports")

    def __init__(self, nvars, supports):
        self.nvars = nvars
        self.supports = tuple(sorted(set(supports)))
        for s in self.supports:
            if s == 0:
                raise ValueError("unit ideal has no Stanley-Reisner complex")

    @classmethod
    def of_ideal(cls, ideal):
        if not ideal.is_squarefree():
            raise ValueError("Stanley-Reisner complex requires a squarefree ideal")
        masks = []
        for g in ideal.gens:
            m = 0
            for v, e in enumerate(g):
                if e:
                    m |= 1 << v
            masks.append(m)
        return cls(ideal.nvars, masks)

    def is_face(self, mask):
        for s in self.supports:
            if s & ~mask == 0:
                return False
        return True

    def faces_by_size(self, sigma_mask):
        """Faces of the restriction to sigma, grouped by cardinality.

        Depth-first over increasing vertex index; a subset containing a
        generator support stays one forever, so the whole subtree prunes.
        """
        verts = [v for v in range(self.nvars) if sigma_mask >> v & 1]
        local = [s for s in self.supports if s & ~sigma_mask == 0]
        grouped = [[] for _ in range(len(verts) + 1)]
        grouped[0].append(0)

        def grow(mask, size, start):
            for idx in range(start, len(verts)):
                cand = mask | 1 << verts[idx]
                if any(s & ~cand == 0 for s in local):
                    continue
                grouped[size + 1].append(cand)
                grow(cand, size + 1, idx + 1)

        grow(0, 0, 0)
        while len(grouped) > 1 and not grouped[-1]:
            grouped.pop()
        return grouped


def _rank_mod_p(matrix, p):
    """Rank of an integer matrix over GF(p), row-reduction in numpy."""
    if matrix.size == 0:
        return 0
    a = np.array(matrix % p, dtype=np.int64)
    nrows, ncols = a.shape
    rank = 0
    for col in range(ncols):
        hits = np.nonzero(a[rank:, col])[0]
        if hits.size == 0:
            continue
        r = rank + int(hits[0])
        if r != rank:
            a[[rank, r]] = a[[r, rank]]
        a[rank] = a[rank] * pow(int(a[rank, col]), -1, p) % p
        rest = np.nonzero(a[rank + 1:, col])[0]
        if rest.size:
            rows = rest + rank + 1
            a[rows] = (a[rows] - np.outer(a[rows, col], a[rank])) % p
        rank += 1
        if rank == nrows:
            break
    return rank


def _boundary_rank(smaller, larger, p):
    """Rank of the boundary map from faces `larger` down to faces `smaller`."""
    if not larger or not smaller:
        return 0
    index = {mask: i for i, mask in enumerate(smaller)}
    mat = np.zeros((len(smaller), len(larger)), dtype=np.int64)
    for j, mask in enumerate(larger):
        sign = 1
        m = mask
        while m:
            low = m & -m
            mat[index[mask ^ low], j] = sign
            sign = -sign
            m ^= low
    return _rank_mod_p(mat, p)


def _homology_ranks(grouped, p):
    """Reduced homology ranks for k = -1 .. len(grouped)-2.

    grouped[c] lists the size-c faces (grouped[0] = [empty face]); the rank
    of H~_k is f_k minus the ranks of the boundary maps on either side.
    """
    boundary = [0]  # rank of the map out of size-0 faces (the zero map)
    for c in range(1, len(grouped)):
        boundary.append(_boundary_rank(grouped[c - 1], grouped[c], p))
    boundary.append(0)
    return [len(grouped[c]) - boundary[c] - boundary[c + 1]
            for c in range(len(grouped))]


def reduced_homology_ranks(complex_, sigma, p=DEFAULT_PRIME):
    """Ranks of H~_k(restriction to sigma; GF(p)) for k = -1 .. |sigma|-1."""
    mask = 0
    for v in sigma:
        mask |= 1 << v
    grouped = complex_.faces_by_size(mask)
    ranks = _homology_ranks(grouped, p)
    want = bin(mask).count("1") + 1
    return ranks + [0] * (want - len(ranks))


class BettiTable:
    """Nonzero graded Betti numbers beta_{i,sigma}(S/I) over one prime.

    sigma keys are frozensets of 0-based variable indices; serialized rows
    report them 1-based for consistency with the x[i,j] convention.
    """

    __slots__ = ("nvars", "entries")

    def __init__(self, nvars, entries):
        self.nvars = nvars
        self.entries = {k: v for k, v in entries.items() if v}

    def rank(self, i, sigma):
        return self.entries.get((i, frozenset(sigma)), 0)

    def projective_dimension(self):
        return max(i for i, _ in self.entries)

    def depth(self):
        return self.nvars - self.projective_dimension()

    def regularity(self):
        return max(len(sigma) - i for i, sigma in self.entries)

    def rows(self):
        out = []
        for (i, sigma), rank in self.entries.items():
            out.append({"i": i, "sigma": sorted(v + 1 for v in sigma), "rank": rank})
        out.sort(key=lambda row: (row["i"], row["sigma"]))
        return out

    def __repr__(self):
        return (f"<BettiTable pd={self.projective_dimension()} "
                f"depth={self.depth()} reg={self.regularity()}>")


def betti_table(ideal, p=DEFAULT_PRIME, cap=HOCHSTER_CAP):
    """Full Betti table of S/I for a squarefree monomial ideal I.

    Only sigma that are unions of generator supports can carry homology
    (anything else restricts to a cone), so the enumeration closes the
    support set under unions instead of walking all 2^n subsets.
    """
    if not ideal.is_squarefree():
        raise ValueError("betti_table requires a squarefree monomial ideal")
    if ideal.is_unit():
        raise ValueError("betti_table requires a proper ideal")
    if ideal.nvars > cap:
        raise CapExceededError(
            f"{ideal.nvars} variables exceeds the Hochster cap of {cap}")

    complex_ = SimplicialComplex.of_ideal(ideal)

    closed = {0}
    frontier = [0]
    while frontier:
        mask = frontier.pop()
        for s in complex_.supports:
            u = mask | s
            if u not in closed:
                closed.add(u)
                frontier.append(u)

    entries = {}
    for mask in sorted(closed):
        grouped = complex_.faces_by_size(mask)
        ranks = _homology_ranks(grouped, p)
        size = bin(mask).count("1")
        sigma = frozenset(v for v in range(ideal.nvars) if mask >> v & 1)
        for c, rank in enumerate(ranks):
            if rank:
                k = c - 1
                entries[(size - 1 - k, sigma)] = rank
    return BettiTable(ideal.nvars, entries)
