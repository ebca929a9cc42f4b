"""Runs the exact oracle against the closed-form predictions.

verify() recomputes every invariant it can from first principles — Groebner
basis, initial ideal, Hilbert series, Hochster Betti table, intersection of
the predicted components, brute-force cut sets, path validation — and lines
the results up against predict().  Nothing is shared between the two sides
beyond the spec itself, so a "match" row is a genuine independent check.

Caps are per stage: an instance too big for Buchberger still gets its cut
sets and path checked, and one too big for the Hochster table still gets
dimension, Hilbert series, and multiplicity from the initial ideal.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations

from .formulas import generalized_bei, predict, prime_component
from .graphs import (CUT_SET_CAP, PartiteSpec, complete_multipartite,
                     cut_sets, konig_path, path_target_length, validate_path)
from .groebner import TermOrder, ideals_equal, intersect
from .hilbert import hilbert_series, krull_dimension, multiplicity
from .hochster import HOCHSTER_CAP, betti_table
from .rings import DEFAULT_PRIME, Ring, mono_coprime

GROEBNER_CAP = 18

_ROW_ORDER = ("dim", "depth", "reg", "hilbert", "mult",
              "decomposition", "containment", "cutSets", "konig")


@dataclass
class InvariantReport:
    """Per-spec agreement report; serializes to the stable JSON schema."""

    spec: PartiteSpec
    order: str
    prime: int
    invariants: list
    squarefree: bool
    timing_ms: dict

    def row(self, name):
        for entry in self.invariants:
            if entry["name"] == name:
                return entry
        raise KeyError(name)

    @property
    def has_mismatch(self):
        return any(entry["status"] == "mismatch" for entry in self.invariants)

    def counts(self):
        out = {"match": 0, "mismatch": 0, "skipped": 0}
        for entry in self.invariants:
            status = entry["status"]
            out["skipped" if status.startswith("skipped") else status] += 1
        return out

    def to_json(self):
        return {
            "spec": {"m": self.spec.m, "parts": list(self.spec.parts)},
            "order": self.order,
            "prime": self.prime,
            "invariants": self.invariants,
            "squarefree": self.squarefree,
            "timingMs": {k: round(v, 3) for k, v in self.timing_ms.items()},
        }


def _row(name, predicted, computed):
    status = "match" if predicted == computed else "mismatch"
    return {"name": name, "predicted": predicted, "computed": computed,
            "status": status}


def _skip(name, predicted, reason):
    return {"name": name, "predicted": predicted, "computed": None,
            "status": f"skipped({reason})"}


def _series_json(series):
    return {"numerator": list(series.numerator), "pole": series.pole}


def verify(spec: PartiteSpec, *, prime: int = DEFAULT_PRIME,
           order: str = "lex-row-major", groebner_cap: int = GROEBNER_CAP,
           hochster_cap: int = HOCHSTER_CAP,
           cutset_cap: int = CUT_SET_CAP) -> InvariantReport:
    """Full oracle run against predict(spec); see the module docstring."""
    pred = predict(spec)
    G = complete_multipartite(spec)
    nvars = spec.m * spec.n
    rows = {}
    timing = {}
    order_used = order
    squarefree = False
    hilb_pred = _series_json(pred.hilbert)

    if nvars <= groebner_cap:
        t0 = time.perf_counter()
        J = generalized_bei(spec.m, G, prime)
        primary = TermOrder.by_name(order, J.ring)
        ini = J.initial_ideal(primary)
        timing["groebner"] = (time.perf_counter() - t0) * 1000

        t0 = time.perf_counter()
        series = hilbert_series(ini)
        timing["hilbert"] = (time.perf_counter() - t0) * 1000
        rows["dim"] = _row("dim", pred.dim, krull_dimension(series))
        rows["hilbert"] = _row("hilbert", hilb_pred, _series_json(series))
        rows["mult"] = _row("mult", pred.mult, multiplicity(series))

        homology_ini = ini if ini.is_squarefree() else None
        if homology_ini is None:
            fallback = ("lex-column-major" if order == "lex-row-major"
                        else "lex-row-major")
            alt = J.initial_ideal(TermOrder.by_name(fallback, J.ring))
            if alt.is_squarefree():
                homology_ini = alt
                order_used = fallback
        squarefree = homology_ini is not None

        if nvars > hochster_cap:
            rows["depth"] = _skip("depth", pred.depth, "hochster-cap")
            rows["reg"] = _skip("reg", pred.reg, "hochster-cap")
        elif homology_ini is None:
            rows["depth"] = _skip("depth", pred.depth, "squarefree-check-failed")
            rows["reg"] = _skip("reg", pred.reg, "squarefree-check-failed")
        else:
            t0 = time.perf_counter()
            table = betti_table(homology_ini, prime, cap=hochster_cap)
            timing["hochster"] = (time.perf_counter() - t0) * 1000
            rows["depth"] = _row("depth", pred.depth, table.depth())
            rows["reg"] = _row("reg", pred.reg, table.regularity())

        t0 = time.perf_counter()
        parts = [prime_component(spec.m, G, T, prime) for T in pred.cut_sets]
        meet = parts[0]
        for other in parts[1:]:
            meet = intersect(meet, other)
        rows["decomposition"] = _row("decomposition", True, ideals_equal(J, meet))
        contained = all(P.contains(g) for P in parts for g in J.gens)
        rows["containment"] = _row("containment", True, contained)
        timing["decomposition"] = (time.perf_counter() - t0) * 1000
    else:
        for name, value in (("dim", pred.dim), ("depth", pred.depth),
                            ("reg", pred.reg), ("hilbert", hilb_pred),
                            ("mult", pred.mult), ("decomposition", True),
                            ("containment", True)):
            rows[name] = _skip(name, value, "groebner-cap")

    cuts_pred = [list(T) for T in sorted(pred.cut_sets, key=lambda T: (len(T), T))]
    if spec.n <= cutset_cap:
        t0 = time.perf_counter()
        cuts_found = [sorted(T) for T, _ in cut_sets(G, cutset_cap)]
        timing["cutsets"] = (time.perf_counter() - t0) * 1000
        rows["cutSets"] = _row("cutSets", cuts_pred, cuts_found)
    else:
        rows["cutSets"] = _skip("cutSets", cuts_pred, "cutset-cap")

    t0 = time.perf_counter()
    check = konig_check(spec)
    timing["konig"] = (time.perf_counter() - t0) * 1000
    rows["konig"] = _row(
        "konig",
        {"length": path_target_length(spec), "valid": True, "coprime": True},
        {"length": len(check["path"]) - 1, "valid": check["path_valid"],
         "coprime": check["initial_terms_coprime"]})

    return InvariantReport(
        spec=spec, order=order_used, prime=prime,
        invariants=[rows[name] for name in _ROW_ORDER],
        squarefree=squarefree, timing_ms=timing)


def konig_check(spec: PartiteSpec):
    """Height, path, validity, and coprimality of the relabeled leading terms.

    This is the m = 2 story: the classical edge ideal J_G has height
    h = 2n - max{n+1, 2 n_r}, and a valid path v_1, ..., v_{h+1} relabeled
    in path order yields leading terms x[1,i] x[2,i+1] that are checked —
    not assumed — to be pairwise coprime.
    """
    h = path_target_length(spec)
    witness = konig_path(spec)
    ring = Ring(2, len(witness.vertices), DEFAULT_PRIME)
    terms = []
    for pos in range(1, h + 1):
        mono = [0] * ring.nvars
        mono[ring.var_index(1, pos)] += 1
        mono[ring.var_index(2, pos + 1)] += 1
        terms.append(tuple(mono))
    coprime = all(mono_coprime(a, b) for a, b in combinations(terms, 2))
    return {
        "height": h,
        "path": witness.vertices,
        "path_valid": validate_path(complete_multipartite(spec), witness),
        "initial_terms_coprime": coprime,
    }


def max_coprime_subset(monomials) -> int:
    """Size of the largest pairwise-coprime subset (exact backtracking).

    Supports become bitmasks; the search includes each candidate before
    excluding it and prunes any branch that cannot beat the best found.
    """
    supports = []
    for mono in monomials:
        mask = 0
        for v, e in enumerate(mono):
            if e:
                mask |= 1 << v
        supports.append(mask)
    if not supports:
        raise ValueError("need at least one monomial")
    best = 0
    total = len(supports)

    def walk(idx, used, count):
        nonlocal best
        if count > best:
            best = count
        if idx == total or count + (total - idx) <= best:
            return
        support = supports[idx]
        if used & support == 0:
            walk(idx + 1, used | support, count + 1)
        walk(idx + 1, used, count)

    walk(0, 0, 0)
    return best


def sweep(specs, **options):
    """verify() every spec, reports in input order."""
    return [verify(spec, **options) for spec in specs]


def summarize(reports):
    """Aggregate row-status counts across a sweep."""
    totals = {"match": 0, "mismatch": 0, "skipped": 0}
    for report in reports:
        for name, value in report.counts().items():
            totals[name] += value
    return totals


def enumerate_specs(max_m, max_n, min_m=2):
    """All specs with min_m <= m <= max_m and 2 <= n <= max_n, in sorted order."""
    out = []
    for m in range(min_m, max_m + 1):
        for n in range(2, max_n + 1):
            for parts in _ascending_partitions(n):
                if len(parts) >= 2:
                    out.append(PartiteSpec(m, parts))
    return out


def _ascending_partitions(n, least=1):
    if n == 0:
        yield ()
        return
    for first in range(least, n + 1):
        for rest in _ascending_partitions(n - first, first):
            yield (first,) + rest
