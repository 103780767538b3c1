"""Command line front end.

Exit codes: 0 success, 1 a verification failed, 2 bad usage or input.
"""
from __future__ import annotations

import argparse
import json
import random
import sys

from . import fixtures
from .binfinity import MLTableau, embed_tableau, embedding_problems, ml_excess_partitions
from .cartan import dominant_to_partition
from .crystal import crystal_isomorphic, generate_crystal, tableau_e
from .errors import DomainError
from .segments import (
    induced_char,
    interleavings,
    ml_tableau_segments,
    multiplicity_certificate,
    parse_segments,
    segments_to_json,
    split_min_parts,
    tableau_segments,
    verify_tableau_modules,
)
from .qshuffle import serre_check
from .tableaux import (
    Tableau,
    excess_partitions,
    far_eastern_reading,
    lowest_descent,
    middle_eastern_reading,
    normalize_partition,
    partitions,
)


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _shape(args) -> tuple[int, ...]:
    """Partition from --lambda (fundamental-weight coefficients) or --partition."""
    if args.partition is not None:
        shape = normalize_partition(_int_list(args.partition))
        if len(shape) > args.n + 1:
            raise UsageError(f"partition {shape} has more than {args.n + 1} rows")
        return shape
    if args.weight is None:
        raise UsageError("one of --lambda or --partition is required")
    coeffs = _int_list(args.weight)
    if len(coeffs) != args.n:
        raise UsageError(f"--lambda needs {args.n} coefficients, got {len(coeffs)}")
    return normalize_partition(dominant_to_partition(coeffs))


def _emit(obj, fmt: str, text: str | None = None) -> None:
    if fmt == "text" and text is not None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(json.dumps(obj, indent=1, sort_keys=True) + "\n")


def _write_report(args, report) -> None:
    if getattr(args, "report", None):
        with open(args.report, "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=1, sort_keys=True)
            fh.write("\n")


# -- commands ----------------------------------------------------------------------

def cmd_crystal_graph(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be positive")
    G = generate_crystal(_shape(args), args.n, args.reading)
    if args.format == "dot":
        sys.stdout.write(G.to_dot())
    elif args.format == "json":
        sys.stdout.write(G.dumps("json"))
    else:
        lines = [f"{k}: {T.key()}  wt={list(w.coeffs)}"
                 for k, (T, w) in enumerate(zip(G.vertices, G.weights))]
        lines += [f"{s} -{i}-> {t}" for s, i, t in G.edges]
        sys.stdout.write("\n".join(lines) + "\n")
    return 0


def _verify_phi_lambda(args) -> dict:
    if args.weight is not None or args.partition is not None:
        cases = [(_shape(args), args.n)]
    else:
        cases = [(lam, n) for n in range(1, args.max_n + 1)
                 for size in range(args.max_size + 1) for lam in partitions(size, n)]
    runs = []
    for lam, n in cases:
        rep = verify_tableau_modules(lam, n)
        runs.append({k: rep[k] for k in ("shape", "n", "tableaux", "passed", "ok", "failures")})
    return {"check": "phi-lambda", "ok": all(r["ok"] for r in runs), "runs": runs}


def _verify_serre(args) -> dict:
    lam = _shape(args)
    G = generate_crystal(lam, args.n)
    failures = []
    for T in G.vertices:
        res = serre_check(induced_char(tableau_segments(T, args.n), args.n))
        if not res:
            failures.append({"tableau": T.key(), "witness": res.witness})
    return {"check": "serre", "shape": list(lam), "n": args.n, "tableaux": len(G),
            "ok": not failures, "failures": failures}


def _verify_multiplicity(args) -> dict:
    failures = []
    checked = 0
    for size in range(args.max_mu + 1):
        for mu in partitions(size, max_part=args.n):
            top = mu[0] if mu else 1
            for k in range(1, args.n - top + 2):
                checked += 1
                if not multiplicity_certificate(mu, k, args.n):
                    failures.append({"mu": list(mu), "k": k})
    return {"check": "multiplicity", "n": args.n, "max_mu": args.max_mu,
            "checked": checked, "ok": not failures, "failures": failures}


def _verify_binfinity(args) -> dict:
    lam = _shape(args)
    G = generate_crystal(lam, args.n)
    problems = []
    for T in G.vertices:
        problems.extend(embedding_problems(T, lam, args.n))
        if ml_tableau_segments(embed_tableau(T, args.n)) != tableau_segments(T, args.n):
            problems.append(f"{T.key()}: segment lists differ after embedding")
    rng = random.Random(args.seed)
    inverse_failures = 0
    for _ in range(args.samples):
        X = MLTableau.highest(args.n)
        for _ in range(rng.randint(0, 10)):
            X = X.f(rng.randint(1, args.n))
        i = rng.randint(1, args.n)
        if X.f(i).e(i) != X:
            inverse_failures += 1
    if inverse_failures:
        problems.append(f"{inverse_failures} samples with e_i f_i != id")
    return {"check": "binfinity", "shape": list(lam), "n": args.n, "tableaux": len(G),
            "samples": args.samples, "ok": not problems, "failures": problems}


def _verify_example_1(args) -> dict:
    T, n = fixtures.EXAMPLE_TABLEAU, fixtures.EXAMPLE_RANK
    i_T, eps, T_plus = lowest_descent(T, n)
    S = T
    for _ in range(eps):
        S = tableau_e(S, i_T)
    split = split_min_parts(T, n)
    checks = {
        "middle_reading": middle_eastern_reading(T) == fixtures.EXAMPLE_MIDDLE_READING,
        "far_reading": far_eastern_reading(T) == fixtures.EXAMPLE_FAR_READING,
        "excess_partitions": excess_partitions(T, n) == fixtures.EXAMPLE_EXCESS,
        "descent": (i_T, eps) == (fixtures.EXAMPLE_DESCENT, fixtures.EXAMPLE_EPSILON),
        "raised_tableau": T_plus == fixtures.EXAMPLE_RAISED and S == T_plus,
        "mu_min": split.mu_min == fixtures.EXAMPLE_MU_MIN,
        "module_checks": verify_tableau_modules(fixtures.EXAMPLE_SHAPE, n, [T])["ok"],
    }
    return {"check": "example-1", "tableau": T.key(), "i_T": i_T, "epsilon": eps,
            "T_plus": T_plus.key(), "segments": segments_to_json(tableau_segments(T, n)),
            "checks": checks, "ok": all(checks.values())}


def _verify_example_ml(args) -> dict:
    X = fixtures.ML_TABLEAU
    checks = {
        "excess": X.to_json() == {"n": 3, "excess": [[2, 3, 4], [], [4]]},
        "excess_partitions": ml_excess_partitions(X) == ((3, 2, 1), (), (1,)),
        "embedding": embed_tableau(fixtures.EMBED_TABLEAU, fixtures.EMBED_RANK)
        == MLTableau.from_rows(fixtures.EMBED_IMAGE_ROWS, fixtures.EMBED_RANK),
    }
    return {"check": "example-ml", "tableau": X.to_json(),
            "weight": list(X.root_weight().coeffs), "checks": checks, "ok": all(checks.values())}


def _verify_readings(args) -> dict:
    lam = _shape(args)
    same = crystal_isomorphic(generate_crystal(lam, args.n, "middle"),
                              generate_crystal(lam, args.n, "far"))
    return {"check": "readings", "shape": list(lam), "n": args.n, "ok": same}


VERIFIERS = {
    "phi-lambda": _verify_phi_lambda,
    "serre": _verify_serre,
    "multiplicity": _verify_multiplicity,
    "binfinity": _verify_binfinity,
    "readings": _verify_readings,
    "example-1": _verify_example_1,
    "example-ml": _verify_example_ml,
}


def _summary(report: dict) -> str:
    lines = [f"{report['check']}: {'PASS' if report['ok'] else 'FAIL'}"]
    for key in ("i_T", "epsilon", "T_plus", "tableaux", "checked"):
        if key in report:
            lines.append(f"  {key} = {report[key]}")
    for run in report.get("runs", []):
        status = "ok" if run["ok"] else "FAIL"
        lines.append(f"  shape={run['shape']} n={run['n']}: {run['passed']}/{run['tableaux']} {status}")
    for name, ok in report.get("checks", {}).items():
        lines.append(f"  {name}: {'ok' if ok else 'FAIL'}")
    for failure in report.get("failures", [])[:20]:
        lines.append(f"  failure: {failure}")
    return "\n".join(lines)


def cmd_verify(args) -> int:
    if args.n is not None and args.n < 1:
        raise UsageError("--n must be positive")
    needs_rank = args.what in ("serre", "binfinity", "readings", "multiplicity")
    if needs_rank and args.n is None:
        raise UsageError(f"verify {args.what} needs --n")
    if args.what == "phi-lambda" and args.n is None and (args.weight or args.partition):
        raise UsageError("--lambda/--partition need --n")
    report = VERIFIERS[args.what](args)
    _write_report(args, report)
    _emit(report, args.format, _summary(report))
    return 0 if report["ok"] else 1


def cmd_char(args) -> int:
    if args.segments is not None:
        segs = parse_segments(args.segments)
        n = args.n or max([s.end for s in segs if s.length] + [1])
    else:
        try:
            with open(args.tableau, encoding="utf-8") as fh:
                T = Tableau.from_json(json.load(fh))
        except (OSError, json.JSONDecodeError, KeyError) as exc:
            raise UsageError(f"cannot read tableau: {exc}") from None
        n = args.n or max(1, max((max(r) for r in T.rows), default=2) - 1)
        segs = tableau_segments(T, n)
    count = interleavings(segs)
    if count > args.max_interleavings:
        raise UsageError(f"{count} interleavings exceed --max-interleavings "
                         f"{args.max_interleavings}")
    ch = induced_char(segs, n, graded=args.graded)
    out = ch.to_json()
    out["segments"] = segments_to_json(segs)
    _emit(out, args.format, ch.to_text())
    return 0


# -- parser ------------------------------------------------------------------------

def _add_shape(p, rank_required=True):
    p.add_argument("--n", type=int, required=rank_required, default=None, help="rank n of sl_{n+1}")
    p.add_argument("--lambda", dest="weight", default=None,
                   help="dominant weight as n comma-separated fundamental-weight coefficients")
    p.add_argument("--partition", default=None, help="highest weight as a partition, e.g. 2,1")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="klrtab",
                                     description="Type A crystals, tableaux and KLR characters.")
    sub = parser.add_subparsers(dest="command", required=True)

    crystal = sub.add_parser("crystal", help="crystal graphs of highest weight modules")
    csub = crystal.add_subparsers(dest="action", required=True)
    graph = csub.add_parser("graph", help="emit the crystal graph of B(lambda)")
    _add_shape(graph)
    graph.add_argument("--format", choices=("dot", "json", "text"), default="dot")
    graph.add_argument("--reading", choices=("middle", "far"), default="middle")
    graph.set_defaults(func=cmd_crystal_graph)

    verify = sub.add_parser("verify", help="run a verification and print its report")
    verify.add_argument("what", choices=sorted(VERIFIERS))
    _add_shape(verify, rank_required=False)
    verify.add_argument("--max-size", type=int, default=6, help="largest |lambda| in a sweep")
    verify.add_argument("--max-n", type=int, default=4, help="largest rank in a sweep")
    verify.add_argument("--max-mu", type=int, default=6, help="largest |mu| for multiplicity")
    verify.add_argument("--samples", type=int, default=1000)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--format", choices=("json", "text"), default="json")
    verify.add_argument("--report", default=None, help="also write the JSON report here")
    verify.set_defaults(func=cmd_verify)

    char = sub.add_parser("char", help="character of an induced segment module")
    src = char.add_mutually_exclusive_group(required=True)
    src.add_argument("--segments", help='segment list "a,l;a,l;..."')
    src.add_argument("--tableau", help="JSON file with shape and rows")
    char.add_argument("--n", type=int, default=None)
    char.add_argument("--graded", action="store_true")
    char.add_argument("--max-interleavings", type=int, default=1_000_000,
                      help="refuse to expand products with more shuffles than this")
    char.add_argument("--format", choices=("json", "text"), default="json")
    char.set_defaults(func=cmd_char)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
