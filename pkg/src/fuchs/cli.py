"""Command-line front end.

Exit codes: 0 success / realizable / all checks passed; 1 not realizable
or a check failed; 2 malformed input; 3 size limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import classify, parsing, polyfield, unitgroup, verifier
from .errors import FuchsError, InvalidPresentationError, NoWitnessError, SizeLimitError
from .numtheory import factorize, is_fermat_prime, is_mersenne_prime, is_prime, solve_power_equation

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_SIZE = 3


def _emit_json(obj) -> None:
    print(json.dumps(obj, sort_keys=True, separators=(", ", ": ")))


def cmd_realizable(args) -> int:
    d = parsing.parse_group(args.group)
    if args.char is not None:
        verdict = classify.realizable_with_char(d, args.char)
    else:
        verdict = classify.decide(d)
    if args.json:
        _emit_json(classify.verdict_json(d, args.char, verdict))
    else:
        status = "realizable" if verdict.realizable else "not realizable"
        where = f" in characteristic {args.char}" if args.char is not None else ""
        line = f"{d.render()}: {status}{where} [{verdict.reason}]"
        if verdict.realizable:
            line += f"  witness: {verdict.witness_label()}"
            line += f"  characteristics: {sorted(verdict.characteristics)}"
        print(line)
    return EXIT_OK if verdict.realizable else EXIT_NEGATIVE


def cmd_witness(args) -> int:
    d = parsing.parse_group(args.group)
    if args.char is not None:
        w = classify.witness(d, args.char)
    else:
        verdict = classify.decide(d)
        if not verdict.realizable:
            raise NoWitnessError(
                f"{d.render()} is not realizable", reason=verdict.reason)
        w = verdict.witness
    if args.json:
        out = {"group": d.render(), "witness": w.render(), "kind": w.kind}
        if w.kind == "table-ring":
            out["presentation"] = w.ring.canonical_presentation()
            out["order"] = w.ring.order
            out["characteristic"] = w.ring.characteristic
        _emit_json(out)
    else:
        print(w.render())
        if w.kind == "table-ring":
            print(w.ring.canonical_presentation())
    return EXIT_OK


def cmd_units(args) -> int:
    ring = parsing.parse_ring(args.ring)
    structure = unitgroup.group_structure(ring)
    us = unitgroup.units(ring)
    if args.json:
        out = {
            "ring": ring.label,
            "order": ring.order,
            "characteristic": ring.characteristic,
            "unit_count": len(us),
            "structure": list(structure.invariant_factors),
            "rendered": structure.render(),
            "cyclic": unitgroup.is_cyclic(structure),
            "indecomposable": unitgroup.is_indecomposable(structure),
        }
        if args.list:
            out["units"] = [list(u.coeffs) for u in us]
        _emit_json(out)
    else:
        print(f"{ring.label}: |R| = {ring.order}, char {ring.characteristic}, "
              f"{len(us)} units, R* = {structure.render()}")
        if args.list:
            for u in us:
                print(" ", u.coeffs)
    return EXIT_OK


def _render_verify_figure(reports, path: Path) -> None:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    names = [r.check_name for r in reports]
    passed = [sum(1 for c in r.cases if c["passed"]) for r in reports]
    failed = [sum(1 for c in r.cases if not c["passed"]) for r in reports]
    fig, ax = plt.subplots(figsize=(8, 4))
    ax.bar(names, passed, color="#2a7", label="passed")
    ax.bar(names, failed, bottom=passed, color="#c33", label="failed")
    ax.set_ylabel("cases")
    ax.set_title("verification cases per suite")
    ax.legend()
    fig.autofmt_xdate(rotation=30)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def cmd_verify(args) -> int:
    suites = args.suite or sorted(verifier.ALL_SUITES)
    unknown = [s for s in suites if s not in verifier.ALL_SUITES]
    if unknown:
        raise InvalidPresentationError(
            f"unknown suite(s) {unknown}; choose from {sorted(verifier.ALL_SUITES)}")
    reports = []
    for name in suites:
        fn = verifier.ALL_SUITES[name]
        kwargs = {}
        if name in ("char4", "census"):
            kwargs = {"order_bound": args.order_bound, "workers": args.workers}
        elif name == "ordgroup":
            kwargs = {"seed": args.seed, "trials": args.trials}
        reports.append(fn(**kwargs))

    lines = []
    for r in reports:
        n_pass = sum(1 for c in r.cases if c["passed"])
        lines.append(
            f"{r.check_name}\t{'PASS' if r.passed else 'FAIL'}\t"
            f"{n_pass}/{len(r.cases)}\t{r.citation}"
        )
    if args.json:
        _emit_json([r.to_json() for r in reports])
    else:
        for line in lines:
            print(line)
    if args.report_dir:
        outdir = Path(args.report_dir)
        outdir.mkdir(parents=True, exist_ok=True)
        (outdir / "report.tsv").write_text("\n".join(lines) + "\n")
        (outdir / "report.json").write_text(
            json.dumps([r.to_json() for r in reports], sort_keys=True, indent=2) + "\n")
        _render_verify_figure(reports, outdir / "report.png")
        print(f"report written to {outdir}/", file=sys.stderr)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_NEGATIVE


def _render_census_figure(entries, path: Path) -> None:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    from collections import Counter

    counts = Counter(e.unit_structure.render() for e in entries)
    labels, values = zip(*sorted(counts.items(), key=lambda kv: (-kv[1], kv[0])))
    fig, ax = plt.subplots(figsize=(8, 4))
    ax.bar(labels, values, color="#47a")
    ax.set_ylabel("rings")
    ax.set_title("unit-group structures in the census")
    fig.autofmt_xdate(rotation=45)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def cmd_enumerate(args) -> int:
    try:
        orders = tuple(int(part) for part in args.orders.split(","))
    except ValueError:
        raise InvalidPresentationError(
            f"additive type must be a comma list of integers, got {args.orders!r}")
    entries = verifier.enumerate_rings(
        orders, dedupe=args.dedupe, workers=args.workers)
    if args.json:
        for e in entries:
            _emit_json(e.to_json())
    else:
        for e in entries:
            print(f"{e.ring.label}\t{e.unit_structure.render()}\t"
                  f"{e.ring.canonical_presentation()}")
        print(f"# {len(entries)} ring(s) on additive type {list(orders)}",
              file=sys.stderr)
    if args.report_dir:
        outdir = Path(args.report_dir)
        outdir.mkdir(parents=True, exist_ok=True)
        with open(outdir / "census.jsonl", "w") as fh:
            for e in entries:
                fh.write(json.dumps(e.to_json(), sort_keys=True,
                                    separators=(",", ":")) + "\n")
        if entries:
            _render_census_figure(entries, outdir / "census.png")
        print(f"census written to {outdir}/", file=sys.stderr)
    return EXIT_OK


def cmd_factor(args) -> int:
    if not is_prime(args.char):
        raise InvalidPresentationError(
            f"factoring works over prime fields; got characteristic {args.char}")
    scanner = parsing._Scanner(args.poly)
    coeffs = parsing._poly_relation(scanner, args.char)
    if not scanner.at_end():
        raise scanner.error("unexpected trailing input")
    f = polyfield.poly(args.char, coeffs)
    factors = polyfield.factor(f)
    if args.json:
        _emit_json({
            "poly": str(f),
            "char": args.char,
            "factors": [{"factor": str(g), "multiplicity": m} for g, m in factors],
        })
    else:
        rendered = " * ".join(
            f"({g})" + (f"^{m}" if m > 1 else "") for g, m in factors)
        print(f"{f} = {rendered}  over F{args.char}")
    return EXIT_OK


def cmd_numtheory(args) -> int:
    n = args.n
    out = {
        "n": n,
        "prime": is_prime(n),
        "mersenne_prime": is_mersenne_prime(n),
        "fermat_prime": is_fermat_prime(n),
        "factorization": {str(p): a for p, a in sorted(factorize(n).items())} if n > 1 else {},
    }
    if is_prime(n):
        out["power_equation_solutions"] = [
            {"m": s.m, "p": s.p, "r": s.r}
            for s in solve_power_equation(n, args.m_bound)
        ]
    if args.json:
        _emit_json(out)
    else:
        flags = [k for k in ("prime", "mersenne_prime", "fermat_prime") if out[k]]
        fac = " * ".join(f"{p}^{a}" if a > 1 else f"{p}"
                         for p, a in sorted(factorize(n).items())) if n > 1 else "1"
        print(f"{n} = {fac}" + (f"  ({', '.join(flags)})" if flags else ""))
        for s in out.get("power_equation_solutions", []):
            print(f"  {n}^{s['m']} - 1 = {s['p']}^{s['r']}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuchs",
        description="decide which abelian groups are unit groups of rings, "
        "construct witnesses, and re-verify the classification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("realizable", help="is GROUP the unit group of a ring?")
    p.add_argument("group", help='e.g. "C8", "C2^inf", "Z[1/2]"')
    p.add_argument("--char", type=int, default=None,
                   help="restrict to rings of this characteristic")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_realizable)

    p = sub.add_parser("witness", help="print a witness ring for GROUP")
    p.add_argument("group")
    p.add_argument("--char", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_witness)

    p = sub.add_parser("units", help="unit group of a ring presentation")
    p.add_argument("ring", help='e.g. "Z4[x]/(x^2-2,2x)", "F9 x F2"')
    p.add_argument("--list", action="store_true", help="print every unit")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_units)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("suite", nargs="*",
                   help=f"subset of {sorted(verifier.ALL_SUITES)} (default: all)")
    p.add_argument("--order-bound", type=int, default=16)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.add_argument("--report-dir", default=None,
                   help="write report.tsv, report.json and report.png here")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("enumerate", help="census of rings on an additive type")
    p.add_argument("orders", help='comma list, unity generator first: "4,2,2"')
    p.add_argument("--dedupe", action="store_true",
                   help="keep one ring per invariant signature")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true", help="JSON lines output")
    p.add_argument("--report-dir", default=None,
                   help="write census.jsonl and census.png here")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("factor", help="factor a polynomial over a prime field")
    p.add_argument("poly", help='e.g. "x^7-1"')
    p.add_argument("--char", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_factor)

    p = sub.add_parser("numtheory", help="primality flags and q^m - 1 = p^r solutions")
    p.add_argument("n", type=int)
    p.add_argument("--m-bound", type=int, default=30)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_numtheory)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except NoWitnessError as exc:
        print(f"error: {exc} [{exc.reason}]", file=sys.stderr)
        return EXIT_NEGATIVE
    except (SizeLimitError, polyfield.SizeLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except (InvalidPresentationError, ValueError, FuchsError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
