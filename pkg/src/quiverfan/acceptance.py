"""The nine acceptance checks, shared by the test suite and ``quiverfan verify-all``.

Each check returns a :class:`CriterionResult`; nothing here raises on a
failed property, so a caller can report every criterion.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Callable

from quiverfan import catalog
from quiverfan.clusters import (
    check_domains_vs_clusters,
    enumerate_compatible_sets,
    in_finite_stability_cone,
    is_compatible,
)
from quiverfan.cones import PolyCone, cone_contains
from quiverfan.domains import (
    dbeta_cone_decomposition,
    dbeta_contains_by_split,
    dbeta_inequalities,
    decompose_weight_vector,
    recombine,
)
from quiverfan.homext import generic_homext, real_schur_roots
from quiverfan.oracle import FIELDS, brute_generic_homext, stability_bridge
from quiverfan.quiver import dynkin_positive_roots, euler_form, support
from quiverfan.stability import check_embedding, ext_quiver, stability_status

ORACLE_TIME_LIMIT = 600.0

# pre-homogeneous dimension vectors for the stable-dimension checks
FROZEN_PREHOMOGENEOUS = {
    "A3": [
        (1, 0, 1), (1, 1, 0), (2, 0, 0), (0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 1, 1),
        (1, 2, 0), (2, 0, 1), (2, 1, 0), (0, 2, 2), (1, 1, 2), (1, 2, 1), (2, 0, 2),
        (2, 1, 1), (2, 2, 0), (1, 2, 2), (2, 1, 2), (2, 2, 1), (2, 2, 2),
    ],
    "triangle": [
        (1, 0, 0), (0, 0, 2), (0, 1, 1), (0, 2, 0), (1, 0, 1), (1, 1, 0), (2, 0, 0),
        (0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0), (0, 2, 2),
        (1, 1, 2), (2, 0, 2), (2, 1, 1), (2, 2, 0), (1, 2, 2), (2, 2, 1),
    ],
}

# first point of the triangle scan lying in a domain but in no cluster cone
FROZEN_TRIANGLE_WITNESS = (1, 1, 1)
FROZEN_TRIANGLE_WITNESS_EULER = 0

T434_BETA1 = (4, 3, 2, 1, 0, 3, 1, 2, 3)
T434_BETA2 = (0, 0, 0, 0, 1, 0, 0, 0, 0)
TRIANGLE_SEED = ((0, 1, 1), (1, 0, 0))


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] criterion {self.number}: {self.name}"

    def to_dict(self) -> dict:
        return {"number": self.number, "name": self.name, "passed": self.passed, "detail": self.detail}


def _grid(n: int, top: int):
    return list(itertools.product(range(top + 1), repeat=n))


def _oracle_quivers():
    return [("A2", catalog.linear_a(2)), ("A3", catalog.linear_a(3)), ("K2", catalog.kronecker(2))]


_oracle_cache: dict = {}


def _oracle_grid():
    """Every pair with entries at most 2 on A2, A3 and K2, recursion versus oracle."""
    if "rows" not in _oracle_cache:
        start = time.perf_counter()
        rows = []
        for name, Q in _oracle_quivers():
            vecs = _grid(Q.n, 2)
            for a, b in itertools.product(vecs, vecs):
                rows.append((name, Q, a, b, generic_homext(Q, a, b), brute_generic_homext(Q, a, b, FIELDS)))
        _oracle_cache["rows"] = rows
        _oracle_cache["seconds"] = time.perf_counter() - start
    return _oracle_cache["rows"], _oracle_cache["seconds"]


def criterion_1() -> CriterionResult:
    rows, seconds = _oracle_grid()
    mismatches = [
        {"quiver": name, "alpha": a, "beta": b, "recursion": tuple(g), "oracle": tuple(o.pair)}
        for name, _, a, b, g, o in rows if g != o.pair
    ]
    sampled = sum(o.sampled for *_, o in rows)
    passed = not mismatches and seconds < ORACLE_TIME_LIMIT
    return CriterionResult(1, "oracle equivalence", passed, {
        "pairs": len(rows), "mismatches": mismatches[:10], "seconds": round(seconds, 1),
        "pairs_with_sampled_fields": sampled, "fields": list(FIELDS),
    })


def criterion_2() -> CriterionResult:
    rows, _ = _oracle_grid()
    bad = []
    for name, Q, a, b, g, o in rows:
        e = euler_form(Q, a, b)
        if g.hom - g.ext != e or o.hom - o.ext != e:
            bad.append({"quiver": name, "alpha": a, "beta": b})
    return CriterionResult(2, "euler reconciliation", not bad, {"pairs": len(rows), "violations": bad[:10]})


def criterion_3() -> CriterionResult:
    detail, passed = {}, True
    for name, Q, bound, size, expected in [
        ("A2", catalog.linear_a(2), 2, 2, 5),
        ("A3", catalog.linear_a(3), 2, 3, 14),
    ]:
        result = enumerate_compatible_sets(Q, bound, size)
        ground_roots = sorted(g.root for g in result.ground if not g.is_negative)
        complete = ground_roots == dynkin_positive_roots(Q)
        count = len(result.clusters)
        detail[name] = {"clusters": count, "expected": expected, "ground_complete": complete}
        passed &= count == expected and complete and result.complete
    return CriterionResult(3, "cluster counts", passed, detail)


def _lattice(n: int, box: int):
    return itertools.product(range(-box, box + 1), repeat=n)


def criterion_4() -> CriterionResult:
    detail, passed = {}, True
    for name, Q, search in [
        ("A2", catalog.linear_a(2), 4),
        ("A3", catalog.linear_a(3), 4),
        ("K2", catalog.kronecker(2), 6),
    ]:
        discrepancies, caveats = [], set()
        roots = real_schur_roots(Q, 4)
        for beta in roots:
            system = dbeta_inequalities(Q, beta)
            decomposition = dbeta_cone_decomposition(Q, beta, search)
            caveats.update(decomposition.caveats)
            polys = [PolyCone(tuple(c.vectors(Q))) for c in decomposition.collections]
            for alpha in _lattice(Q.n, 4):
                lhs = system.contains(alpha)
                rhs = any(cone_contains(p, alpha)[0] for p in polys)
                if lhs != rhs:
                    discrepancies.append({"beta": beta, "alpha": alpha, "halfspaces": lhs})
        detail[name] = {"roots": len(roots), "discrepancies": discrepancies[:10], "caveats": sorted(caveats)}
        passed &= not discrepancies
    return CriterionResult(4, "domain cone decomposition on the lattice", passed, detail)


def criterion_5() -> CriterionResult:
    Q = catalog.linear_a(3)
    bad_split, bad_routes = [], []
    box = list(_lattice(3, 5))
    for alpha in box:
        split = decompose_weight_vector(Q, alpha)
        if (recombine(Q, split) != alpha or support(split.alpha_plus) & support(split.delta)
                or min(split.alpha_plus + split.delta) < 0):
            bad_split.append(alpha)
    betas = [b for b in _grid(3, 2) if any(b)]
    for beta in betas:
        system = dbeta_inequalities(Q, beta)
        for alpha in box:
            if system.contains(alpha) != dbeta_contains_by_split(Q, beta, alpha):
                bad_routes.append({"beta": beta, "alpha": alpha})
    return CriterionResult(5, "weight split and membership routes", not bad_split and not bad_routes, {
        "points": len(box), "betas": len(betas), "split_failures": bad_split[:10], "route_disagreements": bad_routes[:10],
    })


def criterion_6() -> CriterionResult:
    detail, passed = {}, True
    for name, Q, bound in [("A3", catalog.linear_a(3), 3), ("triangle", catalog.triangle(), 4)]:
        failures, caveats = [], set()
        for alpha in FROZEN_PREHOMOGENEOUS[name]:
            report = check_embedding(Q, alpha, bound, samples=100, seed=0)
            caveats.update(report.caveats)
            if not report.passed:
                failures.append({"alpha": alpha, "stable": report.stable})
        detail[name] = {"checked": len(FROZEN_PREHOMOGENEOUS[name]), "failures": failures, "caveats": sorted(caveats)}
        passed &= not failures
    return CriterionResult(6, "stable dimension vectors of pre-homogeneous weights", passed, detail)


def _kronecker_arrows(qe) -> int | None:
    """Arrow count if ``qe`` is a two-vertex quiver with parallel arrows only."""
    if qe.n != 2 or len(qe.arrows) != 1:
        return None
    return next(iter(qe.arrows.values()))


def criterion_7() -> CriterionResult:
    T = catalog.star_t434()
    tri = catalog.triangle()
    cases = {}
    for name, Q, roots, pairing, arrows in [
        ("T434", T, (T434_BETA1, T434_BETA2), -3, 3),
        ("triangle seed", tri, TRIANGLE_SEED, -2, 2),
    ]:
        got_pairing = euler_form(Q, roots[1], roots[0])
        qe = ext_quiver(Q, roots)
        got_arrows = _kronecker_arrows(qe)
        cases[name] = {"pairing": got_pairing, "arrows": got_arrows,
                       "ok": got_pairing == pairing and got_arrows == arrows}
    return CriterionResult(7, "pinned Ext-quivers", all(c["ok"] for c in cases.values()), cases)


def criterion_8() -> CriterionResult:
    detail, passed = {}, True
    for name, Q, root_bound, box in [
        ("A2", catalog.linear_a(2), 2, 4),
        ("A3", catalog.linear_a(3), 2, 4),
        ("K2", catalog.kronecker(2), 5, 4),
    ]:
        report = check_domains_vs_clusters(Q, root_bound, box)
        detail[name] = {"agree": report.agree, "points": report.points}
        passed &= report.agree
    report = check_domains_vs_clusters(catalog.triangle(), 3, 4)
    ok = (report.witness == FROZEN_TRIANGLE_WITNESS and report.witness_euler == FROZEN_TRIANGLE_WITNESS_EULER
          and report.witness_euler <= 0)
    detail["triangle"] = {"witness": report.witness, "euler": report.witness_euler,
                          "domains_only": len(report.domains_only), "caveats": report.caveats}
    return CriterionResult(8, "domains versus cluster cones", passed and ok, detail)


def criterion_9() -> CriterionResult:
    K2 = catalog.kronecker(2)
    delta_member = in_finite_stability_cone(K2, (1, 1)).member
    bad_members = []
    for Q in (catalog.linear_a(2), catalog.linear_a(3)):
        for alpha in _grid(Q.n, 3):
            r = in_finite_stability_cone(Q, alpha)
            valid = (r.member and r.witness is not None and is_compatible(Q, r.witness.members)
                     and cone_contains(r.witness.cone(Q), alpha)[0])
            if not valid:
                bad_members.append(alpha)
    bridge_failures, escalated, checked = [], 0, 0
    for _, Q in _oracle_quivers():
        for beta in _grid(Q.n, 2):
            if not any(beta):
                continue
            for sigma in _lattice(Q.n, 2):
                if sum(s * b for s, b in zip(sigma, beta)):
                    continue
                checked += 1
                res = stability_bridge(Q, sigma, beta, stability_status(Q, sigma, beta))
                escalated += len(res.fields) > 1
                if not res.agree:
                    bridge_failures.append({"sigma": sigma, "beta": beta, "observed": res.observed.value})
    passed = not delta_member and not bad_members and not bridge_failures
    return CriterionResult(9, "finite-stability cone membership", passed, {
        "k2_delta_member": delta_member, "membership_failures": bad_members[:10],
        "bridge_checked": checked, "bridge_escalated": escalated, "bridge_failures": bridge_failures[:10],
    })


CRITERIA: list[Callable[[], CriterionResult]] = [
    criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
    criterion_6, criterion_7, criterion_8, criterion_9,
]


def run_all() -> list[CriterionResult]:
    return [check() for check in CRITERIA]
