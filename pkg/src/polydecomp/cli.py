"""Command-line front end: ``gen``, ``check``, ``diameter`` and ``verify``.

Exit codes: 0 command completed (a decision may be negative), 2 input
error, 3 internal invariant violation, 4 node limit exceeded.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from polydecomp import complex as cx
from polydecomp import decomp, family, transport

EXIT_OK, EXIT_INPUT, EXIT_INVARIANT, EXIT_LIMIT = 0, 2, 3, 4


class InputError(Exception):
    pass


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def digest(c: cx.SimplicialComplex) -> str:
    return hashlib.sha256(cx.to_cplx(c).encode()).hexdigest()


def _load(path: str) -> cx.SimplicialComplex:
    try:
        return cx.read_cplx(path)
    except OSError as exc:
        raise InputError(str(exc)) from exc


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _echo(argv: list[str]) -> list[str]:
    """Command line without the report destination, so reports are reproducible."""
    out, skip = [], False
    for tok in argv:
        if skip:
            skip = False
        elif tok == "--json":
            skip = True
        elif not tok.startswith("--json="):
            out.append(tok)
    return out


def _report(args, results: dict, input_digest: str | None, started: float) -> dict:
    rep = {"command": _echo(args.argv), "input_digest": input_digest, "results": results}
    if args.timing:
        rep["wall_time"] = round(time.perf_counter() - started, 6)
    return rep


def _write_json(path: str | None, report: dict) -> None:
    if path:
        Path(path).write_text(json.dumps(report, indent=2, sort_keys=True) + "\n",
                              encoding="utf-8")


def cmd_gen(args) -> int:
    started = time.perf_counter()
    if args.source == "family":
        c = family.generate(args.parity, args.m)
        rows, cols = family.FamilySpec(args.parity, args.m).margins
        text = cx.to_cplx(c, header=f"{args.parity} family m={args.m}; "
                                    f"margins rows={list(rows)} cols={list(cols)}")
        results = {"kind": "complex", "n_vertices": c.n_vertices, "n_facets": len(c),
                   "dim": c.dim, "digest": digest(c)}
    else:
        p = transport.make_polytope(args.rows, args.cols)
        if args.polar:
            c = transport.polar_complex(p)
            text = cx.to_cplx(c, header=f"polar of P(rows={args.rows}, cols={args.cols})")
            results = {"kind": "complex", "n_vertices": c.n_vertices, "n_facets": len(c),
                       "dim": c.dim, "digest": digest(c)}
        elif args.vertices:
            verts = transport.enumerate_vertices(p)
            text = transport.format_vertices(verts)
            results = {"kind": "vertices", "n_vertices": len(verts), "dim": p.dim}
        else:
            text = p.to_json() + "\n"
            ok, _ = transport.is_nondegenerate(p)
            results = {"kind": "polytope", "dim": p.dim, "n_facets": len(p.facet_cells),
                       "nondegenerate": ok}
    _emit(text, args.out)
    _write_json(args.json, _report(args, results, None, started))
    return EXIT_OK


def cmd_check(args) -> int:
    started = time.perf_counter()
    c = _load(args.path)
    symmetry = family.column_symmetry_for(c) if args.symmetry else None
    d = decomp.decide(c, args.k, args.mode, limit_nodes=args.limit_nodes,
                       symmetry=symmetry, trace=args.trace, jobs=args.jobs)
    if d.result:
        ok = decomp.verify_certificate(c, d.certificate, args.k, args.mode)
        if not ok:
            raise AssertionError(f"certificate failed replay: {ok.reason}")
    label = "decomposable" if args.mode == "strong" else "weakly decomposable"
    print(f"{args.path}: {c.n_vertices} vertices, {len(c)} facets, dim {c.dim}")
    verdict = "TRUE" if d.result else "FALSE"
    print(f"{args.k}-{label}: {verdict}"
          + (f" ({d.reason})" if d.reason else "")
          + f"  [nodes={d.nodes_explored} memo_hits={d.memo_hits}]")
    if d.result:
        print("shedding order: " + " ".join(",".join(t) for t in decomp.shedding_order(d.certificate)))
    for face, why in d.trace:
        print(f"  shed {','.join(face)}: {why}")
    results = d.to_dict()
    if d.reason:
        results["reason"] = d.reason
    if args.trace:
        results["trace"] = [{"shed": list(f), "reason": r} for f, r in d.trace]
    _write_json(args.json, _report(args, results, digest(c), started))
    return EXIT_OK


def cmd_diameter(args) -> int:
    started = time.perf_counter()
    c = _load(args.path)
    pure, _ = cx.is_pure(c)
    if not pure:
        raise InputError("complex is impure")
    rep = cx.diameter(c)
    if not rep.connected:
        raise InputError("complex is disconnected")
    a, b = rep.eccentric_pair
    print(f"diameter {rep.diameter} (n={rep.num_vertices}, dim={rep.dim}) "
          f"between {' '.join(c.names(a))} and {' '.join(c.names(b))}")
    results = {"diameter": rep.diameter, "num_vertices": rep.num_vertices, "dim": rep.dim,
               "eccentric_pair": [list(c.names(a)), list(c.names(b))], "bounds": []}
    bounds = []
    if args.hirsch:
        bounds.append(decomp.check_hirsch(c))
    if args.bp_bound:
        k, mode = int(args.bp_bound[0]), args.bp_bound[1]
        bounds.append(decomp.check_billera_provan(c, k, mode))
    for b in bounds:
        note = " (vacuous: decision is negative)" if b.vacuous else ""
        print(f"{b.bound_name}: {b.lhs} <= {b.rhs}: "
              f"{'satisfied' if b.satisfied else 'VIOLATED'}{note}")
        results["bounds"].append(b.to_dict())
    _write_json(args.json, _report(args, results, digest(c), started))
    return EXIT_OK


def cmd_verify(args) -> int:
    started = time.perf_counter()
    c = _load(args.path)
    try:
        data = json.loads(Path(args.cert).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read certificate: {exc}") from exc
    if "results" in data:
        data = data["results"]
    if not data.get("result") or data.get("certificate") is None:
        raise InputError("file holds no positive certificate")
    d = decomp.decision_from_dict(data)
    ok = decomp.verify_certificate(c, d.certificate, d.k, d.mode)
    print(f"certificate ({d.mode}, k={d.k}): {'VALID' if ok else 'INVALID'}"
          + ("" if ok else f" - {ok.reason}"))
    _write_json(args.json, _report(args, {"valid": ok.ok, "reason": ok.reason},
                                   digest(c), started))
    return EXIT_OK if ok else EXIT_INPUT


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", metavar="PATH", help="write a JSON report to PATH")
    common.add_argument("--timing", action="store_true",
                        help="include wall time in the JSON report")

    parser = argparse.ArgumentParser(prog="polydecomp", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate complexes or polytopes")
    gsub = gen.add_subparsers(dest="source", required=True)
    fam = gsub.add_parser("family", parents=[common], help="closed-form non-wvd family")
    fam.add_argument("--parity", choices=["even", "odd"], required=True)
    fam.add_argument("--m", type=int, required=True)
    fam.add_argument("--out", metavar="PATH")
    tr = gsub.add_parser("transport", parents=[common], help="transportation polytope")
    tr.add_argument("--rows", type=_ints, required=True)
    tr.add_argument("--cols", type=_ints, required=True)
    what = tr.add_mutually_exclusive_group()
    what.add_argument("--polar", action="store_true", help="write the polar complex (.cplx)")
    what.add_argument("--vertices", action="store_true", help="write the vertex dump")
    tr.add_argument("--out", metavar="PATH")
    gen.set_defaults(func=cmd_gen)

    chk = sub.add_parser("check", parents=[common], help="decide (weak) k-decomposability")
    chk.add_argument("path")
    chk.add_argument("--k", type=int, default=0)
    chk.add_argument("--mode", choices=["strong", "weak"], default="weak")
    chk.add_argument("--trace", action="store_true",
                     help="report why each first-level candidate fails")
    chk.add_argument("--symmetry", action="store_true",
                     help="prune first-level candidates by the u/v column symmetry")
    chk.add_argument("--jobs", type=int, default=1)
    chk.add_argument("--limit-nodes", type=int, default=None, metavar="N")
    chk.set_defaults(func=cmd_check)

    dia = sub.add_parser("diameter", parents=[common], help="facet-ridge diameter and bounds")
    dia.add_argument("path")
    dia.add_argument("--hirsch", action="store_true")
    dia.add_argument("--bp-bound", nargs=2, metavar=("K", "MODE"))
    dia.set_defaults(func=cmd_diameter)

    ver = sub.add_parser("verify", parents=[common], help="replay a certificate")
    ver.add_argument("path")
    ver.add_argument("cert")
    ver.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    args.argv = argv
    try:
        return args.func(args)
    except decomp.SearchLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (InputError, cx.ComplexError, transport.PolytopeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
