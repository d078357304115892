"""Command-line front end.

Vectors are comma-separated integers in declared vertex order; lists of
vectors are separated by semicolons.  A value starting with ``-`` must be
attached with ``=``, as in ``--alpha=-1,2``.

Exit codes: 0 success, 1 a checked property failed, 2 usage or resource error.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Sequence

from quiverfan import __version__, catalog
from quiverfan.errors import ConsistencyError, QuiverError
from quiverfan.quiver import Quiver, parse_quiver

SCHEMA_VERSION = 1


class UsageError(QuiverError):
    pass


def _vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer vector: {text!r}") from None


def _vectors(text: str) -> list[tuple[int, ...]]:
    return [_vector(part) for part in text.split(";") if part.strip()]


def _fields(text: str) -> tuple[int, ...]:
    fields = _vector(text)
    if not fields or any(p not in (2, 3, 5, 7) for p in fields):
        raise argparse.ArgumentTypeError("fields must be primes from 2,3,5,7")
    return fields


def load_quiver(source: str) -> Quiver:
    path = Path(source)
    if path.is_file():
        return parse_quiver(path.read_text())
    if source in catalog.NAMED:
        return catalog.NAMED[source]()
    raise UsageError(f"no quiver file or built-in quiver named {source!r}")


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required for this command")


def _almost_positive(Q: Quiver, text: str):
    from quiverfan.clusters import AlmostPositiveRoot

    if text.startswith("neg:"):
        return AlmostPositiveRoot.negative(Q.index(text[4:]))
    return AlmostPositiveRoot.real(Q.vector(_vector(text)))


# each handler returns (results, caveats, violation)


def cmd_euler(Q, args):
    from quiverfan.quiver import euler_form

    _need(args, "alpha", "beta")
    return {"euler": euler_form(Q, Q.vector(args.alpha), Q.vector(args.beta))}, [], False


def cmd_homext(Q, args):
    from quiverfan.homext import generic_homext

    _need(args, "alpha", "beta")
    pair = generic_homext(Q, args.alpha, args.beta)
    return {"hom": pair.hom, "ext": pair.ext}, [], False


def cmd_embeds(Q, args):
    from quiverfan.homext import embeds

    _need(args, "alpha", "beta")
    return {"embeds": embeds(Q, args.alpha, args.beta)}, [], False


def cmd_canon(Q, args):
    from quiverfan.homext import canonical_decomposition

    _need(args, "alpha")
    parts = canonical_decomposition(Q, args.alpha)
    return {"summands": [{"root": list(r), "multiplicity": m} for r, m in parts]}, [], False


def cmd_rootclass(Q, args):
    from quiverfan.homext import root_class

    _need(args, "alpha")
    return {"class": root_class(Q, args.alpha).value}, [], False


def cmd_stability(Q, args):
    from quiverfan.stability import stability_status

    _need(args, "sigma", "beta")
    return {"status": stability_status(Q, args.sigma, args.beta).value}, [], False


def _weight(Q, args):
    from quiverfan.quiver import weight_map

    if args.sigma is not None:
        return Q.vector(args.sigma)
    if args.alpha is not None:
        return weight_map(Q, Q.vector(args.alpha))
    raise UsageError("give --sigma or --alpha (for the weight <alpha, .>)")


def cmd_stable_dims(Q, args):
    from quiverfan.stability import stable_search

    sigma = _weight(Q, args)
    search = stable_search(Q, sigma, args.bound)
    return {"sigma": list(sigma), "stable": [list(r) for r in search.roots], "complete": search.complete}, search.caveats, False


def cmd_stable_decomp(Q, args):
    from quiverfan.stability import sigma_stable_decomposition

    _need(args, "beta")
    sigma = _weight(Q, args)
    parts = sigma_stable_decomposition(Q, sigma, args.beta)
    return {"sigma": list(sigma), "factors": [{"root": list(r), "multiplicity": m} for r, m in parts]}, [], False


def cmd_ext_quiver(Q, args):
    from quiverfan.stability import ext_quiver

    _need(args, "roots")
    qe = ext_quiver(Q, args.roots)
    return {"roots": [list(r) for r in args.roots], "ext_quiver": qe.to_dict()}, [], False


def cmd_isometry(Q, args):
    from quiverfan.stability import verify_embedding_isometry

    _need(args, "roots")
    report = verify_embedding_isometry(Q, args.roots, samples=args.samples, seed=args.seed)
    return report.to_dict(), [], not report.passed


def cmd_split_weight(Q, args):
    from quiverfan.domains import decompose_weight_vector

    _need(args, "alpha")
    split = decompose_weight_vector(Q, args.alpha)
    return {"alpha_plus": list(split.alpha_plus), "delta": list(split.delta)}, [], False


def cmd_dbeta(Q, args):
    from quiverfan import domains

    _need(args, "beta")
    if args.mode == "halfspaces":
        system = domains.dbeta_inequalities(Q, args.beta)
        return {
            "equalities": [list(f) for f in system.equalities],
            "inequalities": [{"functional": list(f), "subvector": list(s)}
                             for f, s in zip(system.inequalities, system.sources)],
        }, [], False
    if args.mode == "contains":
        _need(args, "alpha")
        by_halfspaces = domains.dbeta_contains(Q, args.beta, args.alpha)
        by_split = domains.dbeta_contains_by_split(Q, args.beta, args.alpha)
        results = {"contains": by_halfspaces, "contains_by_split": by_split}
        return results, [], by_halfspaces != by_split
    decomposition = domains.dbeta_cone_decomposition(Q, args.beta, args.bound, include_all=args.all)
    return {
        "sigma": list(decomposition.sigma),
        "stable": [list(r) for r in decomposition.stable],
        "cones": [c.to_dict(Q) | {"generators": [list(v) for v in c.vectors(Q)]} for c in decomposition.collections],
        "complete": decomposition.complete,
    }, decomposition.caveats, False


def cmd_compat(Q, args):
    from quiverfan.clusters import compatibility_degree

    _need(args, "x", "y")
    x, y = _almost_positive(Q, args.x), _almost_positive(Q, args.y)
    return {"x": x.label(Q), "y": y.label(Q), "degree": compatibility_degree(Q, x, y)}, [], False


def cmd_clusters(Q, args):
    from quiverfan.clusters import enumerate_compatible_sets

    size = args.size if args.size is not None else Q.n
    result = enumerate_compatible_sets(Q, args.bound, size)
    sets = result.sets if args.all else result.clusters
    return {
        "ground": [g.label(Q) for g in result.ground],
        "count": len(sets),
        "sets": [s.to_dict(Q) for s in sets],
        "complete": result.complete,
    }, result.caveats, False


def cmd_finstab(Q, args):
    from quiverfan.clusters import in_finite_stability_cone

    _need(args, "alpha")
    return in_finite_stability_cone(Q, args.alpha).to_dict(Q), [], False


def cmd_refine(Q, args):
    from quiverfan.clusters import refine_exceptional_cone
    from quiverfan.stability import ExceptionalCollection

    _need(args, "roots", "eta")
    negatives = frozenset(Q.index(v) for v in (args.negatives or "").split(",") if v)
    collection = ExceptionalCollection(tuple(Q.vector(r) for r in args.roots), negatives)
    result = refine_exceptional_cone(Q, collection, args.eta)
    return {"compatible_set": result.to_dict(Q)}, [], False


def cmd_thm13(Q, args):
    from quiverfan.clusters import check_domains_vs_clusters

    report = check_domains_vs_clusters(Q, args.bound, args.box)
    return report.to_dict(), report.caveats, False


def cmd_oracle(Q, args):
    from quiverfan import oracle

    fields = args.fields
    if args.mode == "homext":
        _need(args, "alpha", "beta")
        result = oracle.brute_generic_homext(Q, args.alpha, args.beta, fields, seed=args.seed)
        caveats = ["sampled-oracle"] if result.sampled else []
        return {
            "hom": result.hom, "ext": result.ext, "fields": list(result.fields),
            "per_field": {str(p): v for p, v in result.per_field.items()}, "pairs_checked": result.pairs_checked,
        }, caveats, False
    if args.mode == "stability":
        _need(args, "sigma", "beta")
        per_field, sampled = {}, False
        for p in fields:
            r = oracle.oracle_stability(Q, args.sigma, args.beta, p, seed=args.seed)
            per_field[str(p)] = r.status.value
            sampled = sampled or r.sampled
        return {"per_field": per_field}, ["sampled-oracle"] if sampled else [], False
    _need(args, "alpha", "beta")
    import numpy as np

    from quiverfan.oracle.reps import random_rep

    p = fields[0]
    rng = np.random.default_rng([args.seed, p])
    V = random_rep(Q, Q.vector(args.alpha), p, rng)
    W = random_rep(Q, Q.vector(args.beta), p, rng)
    return {
        "field": p,
        "V": [m.tolist() for m in V.maps],
        "W": [m.tolist() for m in W.maps],
        "det": oracle.schofield_det(Q, V, W),
        "hom": oracle.hom_dim(Q, V, W),
    }, [], False


def cmd_verify_all(args):
    from quiverfan.acceptance import run_all

    results = run_all()
    return {"criteria": [r.to_dict() for r in results]}, [], not all(r.passed for r in results), results


HANDLERS = {
    "euler": cmd_euler, "homext": cmd_homext, "embeds": cmd_embeds, "canon": cmd_canon,
    "rootclass": cmd_rootclass, "stability": cmd_stability, "stable-dims": cmd_stable_dims,
    "stable-decomp": cmd_stable_decomp, "ext-quiver": cmd_ext_quiver, "isometry": cmd_isometry,
    "split-weight": cmd_split_weight, "dbeta": cmd_dbeta, "compat": cmd_compat, "clusters": cmd_clusters,
    "finstab": cmd_finstab, "refine": cmd_refine, "thm13": cmd_thm13, "oracle": cmd_oracle,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--quiver", help="quiver file, or a built-in name such as A2, K2, triangle")
    common.add_argument("--alpha", type=_vector)
    common.add_argument("--beta", type=_vector)
    common.add_argument("--sigma", type=_vector)
    common.add_argument("--eta", type=_vector)
    common.add_argument("--roots", type=_vectors, help="vectors separated by ';'")
    common.add_argument("--negatives", help="comma-separated vertex names")
    common.add_argument("--x")
    common.add_argument("--y")
    common.add_argument("--bound", type=int, default=3)
    common.add_argument("--box", type=int, default=3)
    common.add_argument("--size", type=int)
    common.add_argument("--samples", type=int, default=100)
    common.add_argument("--fields", type=_fields, default=(2, 3, 5))
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--all", action="store_true", help="include non-maximal sets")
    common.add_argument("--json", action="store_true", help="print one JSON report")
    common.add_argument("--timing", action="store_true", help="add wall time to the report")

    parser = argparse.ArgumentParser(prog="quiverfan", description="Generic hom/ext, stability and cluster cones for quivers")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in HANDLERS:
        p = sub.add_parser(name, parents=[common])
        if name == "dbeta":
            p.add_argument("mode", choices=["halfspaces", "contains", "cones"])
        if name == "oracle":
            p.add_argument("mode", choices=["homext", "stability", "det"])
    sub.add_parser("verify-all", parents=[common])
    return parser


def _inputs(args) -> dict:
    out = {}
    for key in ("quiver", "mode", "alpha", "beta", "sigma", "eta", "roots", "negatives", "x", "y",
                "bound", "box", "size", "samples", "fields", "seed"):
        value = getattr(args, key, None)
        if value is None:
            continue
        if isinstance(value, tuple):
            value = list(value)
        elif isinstance(value, list):
            value = [list(v) for v in value]
        out[key] = value
    return out


def _print_human(report: dict) -> None:
    for key, value in report["results"].items():
        if isinstance(value, list) and value and isinstance(value[0], dict):
            print(f"{key}:")
            for item in value:
                print(f"  {json.dumps(item, sort_keys=True)}")
        else:
            print(f"{key}: {json.dumps(value, sort_keys=True) if isinstance(value, (dict, list)) else value}")
    if report["caveats"]:
        print("caveats: " + ", ".join(report["caveats"]))


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    report = {"schema_version": SCHEMA_VERSION, "command": args.command, "inputs": _inputs(args), "seed": args.seed}
    try:
        if args.command == "verify-all":
            results, caveats, violation, criteria = cmd_verify_all(args)
            if not args.json:
                for r in criteria:
                    print(r.line())
        else:
            if args.quiver is None:
                raise UsageError("--quiver is required")
            Q = load_quiver(args.quiver)
            report["quiver"] = Q.to_dict()
            results, caveats, violation = HANDLERS[args.command](Q, args)
    except ConsistencyError as exc:
        report.update(results=None, error=str(exc), error_context={k: repr(v) for k, v in exc.context.items()},
                      caveats=[], violation=True)
        _emit(report, args, start)
        return 1
    except QuiverError as exc:
        if not args.json:
            print(f"error: {exc}", file=sys.stderr)
        else:
            report.update(results=None, error=str(exc), caveats=[], violation=False)
            _emit(report, args, start)
        return 2
    report.update(results=results, caveats=sorted(set(caveats)), violation=violation)
    if args.command != "verify-all" or args.json:
        _emit(report, args, start)
    return 1 if violation else 0


def _emit(report: dict, args, start: float) -> None:
    if args.timing:
        report["seconds"] = round(time.perf_counter() - start, 3)
    if args.json:
        print(json.dumps(report, sort_keys=True, default=str))
    elif report.get("results") is not None:
        _print_human(report)
    else:
        print(f"error: {report.get('error')}", file=sys.stderr)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
