"""Command-line front end: analyze, construct, verify-family, hunt, quotient.

Every subcommand emits a single JSON document on stdout (UTF-8, stable
key order, floats at 15 significant digits) so reports can be diffed and
round-tripped byte-identically.  Exit codes: 0 pass, 1 usage or parse
error, 2 failed check (an implementation bug), 3 conjecture finding.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from fractions import Fraction
from pathlib import Path

from .connectivity import edge_connectivity
from .families import FamilyReport, build_Gd, build_Hd, verify_Gd, verify_Hd
from .graphs import Graph, VertexPartition, parse_edge_list, partition, to_edge_list
from .packing import TreePackingResult, count_spanning_trees, sigma, verify_certificate
from .randgen import TheoremReport, theorem_check
from .spectra import adjacency_spectrum, check_interlacing, is_equitable, quotient_matrix

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CHECK_FAILED = 2
EXIT_FINDING = 3


def _sig15(x: float) -> float:
    return float(f"{x:.15g}")


def _emit(doc: dict, json_path: str | None) -> None:
    text = json.dumps(doc, indent=2) + "\n"
    sys.stdout.write(text)
    if json_path:
        Path(json_path).write_text(text, encoding="utf-8")


def _load_graph(path: str) -> Graph:
    return parse_edge_list(Path(path).read_text(encoding="utf-8"))


def _certificate_payload(result: TreePackingResult) -> dict:
    witness = None
    if result.witness_partition is not None:
        witness = [sorted(b) for b in result.witness_partition.blocks]
        witness.sort(key=lambda b: b[0])
    return {
        "sigma": result.sigma,
        "trees": [sorted([u, v] for u, v in t) for t in result.trees],
        "witness": witness,
    }


def _certificate_digest(result: TreePackingResult) -> str:
    blob = json.dumps(_certificate_payload(result), separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


# ---------------------------------------------------------------------------
# analyze


def _cmd_analyze(args) -> int:
    g = _load_graph(args.graph)
    degree = g.degree_if_regular()
    packing = sigma(g)
    cert = verify_certificate(g, packing)

    report: dict = {
        "input": args.graph,
        "n": g.n,
        "m": g.m,
        "degree": degree if degree is not None else "irregular",
    }
    if g.n >= 1:
        spectrum = adjacency_spectrum(g)
        report["lambda2"] = _sig15(spectrum.values[1]) if g.n >= 2 else None
        report["spectrum"] = [[_sig15(v), mult] for v, mult in spectrum.multiplicities()]
    else:
        report["lambda2"] = None
        report["spectrum"] = []

    report["sigma"] = packing.sigma
    report["certificate_digest"] = _certificate_digest(packing)
    report["certificate_valid"] = cert.ok
    report["kappa_prime"] = edge_connectivity(g).value if g.n >= 2 else None
    if g.n >= 1:
        count = count_spanning_trees(g)
        report["spanning_trees"] = count.exact
        report["spanning_tree_routes_agree"] = count.agree
    else:
        report["spanning_trees"] = None
        report["spanning_tree_routes_agree"] = None

    consistent = True
    if degree is None or g.n < 2:
        report["theorems"] = "not applicable: graph is not regular with n >= 2"
    else:
        verdicts = {}
        lam2 = report["lambda2"]
        for k in (2, 3):
            # both theorems hypothesize d >= 2k, so the verdict is vacuous
            # below that degree (e.g. the k = 3 statement says nothing
            # about 4-regular graphs)
            applicable = degree >= 2 * k
            premise = lam2 < degree - (2 * k - 1) / (degree + 1)
            conclusion = packing.sigma >= k
            ok = not (applicable and premise and not conclusion)
            consistent = consistent and ok
            verdicts[f"k{k}"] = {
                "applicable_degree_at_least_2k": applicable,
                "premise_lambda2_below_threshold": premise,
                "conclusion_sigma_at_least_k": conclusion,
                "consistent": ok,
            }
        report["theorems"] = verdicts

    _emit(report, args.json)
    if not cert.ok or not consistent:
        return EXIT_CHECK_FAILED
    return EXIT_OK


# ---------------------------------------------------------------------------
# construct


def _cmd_construct(args) -> int:
    builder = build_Gd if args.family == "Gd" else build_Hd
    g = builder(args.d)
    Path(args.output).write_text(to_edge_list(g), encoding="utf-8")
    _emit({"family": args.family, "d": args.d, "n": g.n, "m": g.m,
           "output": args.output}, None)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify-family


def _family_report_doc(rep: FamilyReport) -> dict:
    return {
        "family": rep.family,
        "d": rep.d,
        "n": rep.graph.n,
        "m": rep.graph.m,
        "sigma": rep.sigma,
        "kappa_prime": rep.kappa_prime,
        "lambda2": _sig15(rep.lambda2),
        "lambda2_interval": [str(rep.lambda2_interval[0]), str(rep.lambda2_interval[1])],
        "spectrum_expected": [[_sig15(v), mult] for v, mult in rep.spectrum_expected],
        "all_passed": rep.all_passed,
        "checks": [
            {"name": c.name, "passed": c.passed, "computed": c.computed,
             "claimed": c.claimed, "margin": c.margin}
            for c in rep.checks
        ],
    }


def _cmd_verify_family(args) -> int:
    if args.d_min > args.d_max:
        raise ValueError("--d-min must not exceed --d-max")
    verifier = verify_Gd if args.family == "Gd" else verify_Hd
    precision = Fraction(1, 10 ** 30) if args.exact_range else Fraction(1, 10 ** 12)
    reports = [verifier(d, precision=precision)
               for d in range(args.d_min, args.d_max + 1)]
    doc = {
        "family": args.family,
        "d_min": args.d_min,
        "d_max": args.d_max,
        "exact_range": bool(args.exact_range),
        "all_passed": all(r.all_passed for r in reports),
        "reports": [_family_report_doc(r) for r in reports],
    }
    _emit(doc, args.json)
    return EXIT_OK if doc["all_passed"] else EXIT_CHECK_FAILED


# ---------------------------------------------------------------------------
# hunt


def _hunt_doc(rep: TheoremReport, verdict: str) -> dict:
    return {
        "d": rep.d,
        "n": rep.n,
        "k": rep.k,
        "trials": rep.trials,
        "seed": rep.seed,
        "premise_and_conclusion": rep.premise_and_conclusion,
        "premise_only": rep.premise_only,
        "conclusion_only": rep.conclusion_only,
        "neither": rep.neither,
        "counterexamples": [
            {"d": c.d, "n": c.n, "k": c.k, "lambda2": _sig15(c.lambda2),
             "sigma": c.sigma, "seed": c.seed}
            for c in rep.counterexamples
        ],
        "verdict": verdict,
    }


def _cmd_hunt(args) -> int:
    rep = theorem_check(args.d, args.n, args.k, args.trials, args.seed)
    if rep.clean:
        verdict = "no finding" if rep.conjecture else "pass"
        code = EXIT_OK
    elif rep.conjecture:
        verdict, code = "finding", EXIT_FINDING
    else:
        verdict, code = "bug", EXIT_CHECK_FAILED
    out = Path(args.out)
    for c in rep.counterexamples:
        stem = f"counterexample-d{c.d}-n{c.n}-k{c.k}-seed{c.seed}"
        (out / f"{stem}.el").write_text(to_edge_list(c.graph), encoding="utf-8")
        sidecar = {"d": c.d, "n": c.n, "k": c.k, "lambda2": _sig15(c.lambda2),
                   "sigma": c.sigma, "seed": c.seed}
        (out / f"{stem}.json").write_text(
            json.dumps(sidecar, indent=2) + "\n", encoding="utf-8")
    _emit(_hunt_doc(rep, verdict), args.json)
    return code


# ---------------------------------------------------------------------------
# quotient


def _parse_partition_file(text: str, n: int) -> VertexPartition:
    blocks = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            blocks.append([int(tok) for tok in line.split()])
        except ValueError:
            raise ValueError(f"line {lineno}: expected vertex indices") from None
    return partition(n, blocks)


def _cmd_quotient(args) -> int:
    g = _load_graph(args.graph)
    p = _parse_partition_file(Path(args.partition).read_text(encoding="utf-8"), g.n)
    q = quotient_matrix(g, p)
    inner = q.eigenvalues_exact()
    outer = adjacency_spectrum(g)
    inter = check_interlacing(outer.values, inner)
    doc = {
        "input": args.graph,
        "t": q.t,
        "blocks": [sorted(b) for b in p.blocks],
        "matrix": [[str(entry) for entry in row] for row in q.entries],
        "equitable": is_equitable(g, p),
        "quotient_eigenvalues": [_sig15(v) for v in inner],
        "interlacing": {"ok": inter.ok, "worst_margin": _sig15(inter.worst_margin)},
    }
    _emit(doc, args.json)
    return EXIT_OK if inter.ok else EXIT_CHECK_FAILED


# ---------------------------------------------------------------------------
# parser


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="treepack",
        description="Spanning-tree packing, spectra, and edge connectivity "
                    "with constructive certificates.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for an edge-list graph file")
    p.add_argument("graph")
    p.add_argument("--json", help="also write the report to this file")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("construct", help="write a family graph as an edge list")
    p.add_argument("family", choices=["Gd", "Hd"])
    p.add_argument("--d", type=int, required=True)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify-family", help="re-check family claims over a d range")
    p.add_argument("family", choices=["Gd", "Hd"])
    p.add_argument("--d-min", type=int, required=True)
    p.add_argument("--d-max", type=int, required=True)
    p.add_argument("--exact-range", action="store_true",
                   help="tighten exact root isolation to 10^-30")
    p.add_argument("--json", help="also write the report to this file")
    p.set_defaults(func=_cmd_verify_family)

    p = sub.add_parser("hunt", help="random-regular implication sweep "
                                    "(k in {2,3}: theorem; k >= 4: conjecture)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=".", help="directory for counterexample files")
    p.add_argument("--json", help="also write the report to this file")
    p.set_defaults(func=_cmd_hunt)

    p = sub.add_parser("quotient", help="partition quotient matrix and interlacing")
    p.add_argument("graph")
    p.add_argument("partition")
    p.add_argument("--json", help="also write the report to this file")
    p.set_defaults(func=_cmd_quotient)

    return ap


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
