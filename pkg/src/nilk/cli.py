"""Command-line surface.

Commands: theorem3, theorem4, higman, versch, frob, sse-verify, verify-all.
Exit codes: 0 pass, 1 verification failure, 2 input or I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import groupring_pipeline as grp
from . import laurent_pipeline as lp
from . import nilsse, report
from .matrices import Matrix, matrix_from_json, matrix_latex, matrix_to_json

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_IO = 2


def _write(path: Path, text: str) -> None:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
    except OSError as e:
        raise _IOFailure(str(e)) from e


class _IOFailure(Exception):
    pass


def _emit_matrix(m: Matrix, out: Path, name: str, emit: str) -> None:
    if emit == "latex":
        _write(out / f"{name}.tex", matrix_latex(m) + "\n")
    else:
        _write(out / f"{name}.json",
               json.dumps(matrix_to_json(m), indent=2) + "\n")


def _print_checks(checks, as_json: bool) -> None:
    if as_json:
        print(json.dumps([c.to_json() for c in checks], indent=2))
    else:
        for c in checks:
            print(c.line())


def cmd_theorem3(args) -> int:
    checks = report.laurent_checks()
    rep = lp.theorem31_matrix()
    n10 = lp.higman_companion(lp.decompose_M(rep))
    out = Path(args.out)
    _emit_matrix(rep.matrix, out, "theorem31_matrix", args.emit)
    _emit_matrix(n10, out, "N10", args.emit)
    _print_checks(checks, args.json)
    return EXIT_OK if report.summarize(checks, allow_known_discrepancies=True) \
        else EXIT_VERIFY


def cmd_theorem4(args) -> int:
    checks = report.groupring_checks()
    out = Path(args.out)
    _emit_matrix(grp.yz_matrix().matrix, out, "yz_matrix", args.emit)
    _emit_matrix(grp.theorem42_block(), out, "theorem42_matrix", args.emit)
    _print_checks(checks, args.json)
    return EXIT_OK if report.summarize(checks, allow_known_discrepancies=True) \
        else EXIT_VERIFY


def _load_matrix(path: str) -> Matrix:
    try:
        return matrix_from_json(json.loads(Path(path).read_text()))
    except (OSError, ValueError, KeyError, TypeError) as e:
        raise _IOFailure(f"cannot read matrix from {path}: {e}") from e


def cmd_higman(args) -> int:
    m = _load_matrix(args.input)
    rep = lp.K1Rep(m)
    try:
        rep.verify()
        blocks = lp.decompose_M(rep)
        n = lp.higman_companion(blocks)
    except (lp.PipelineError, lp.NotNilpotentError, ValueError) as e:
        print(f"verification failure: {e}", file=sys.stderr)
        return EXIT_VERIFY
    _emit_matrix(n, Path(args.out), "N10" if n.rows == 10 else f"N{n.rows}",
                 args.emit)
    print(f"companion size {n.rows}, nilpotency index "
          f"{n.nilpotency_index(n.rows)}")
    return EXIT_OK


def _nilpotent_map(args, fn, name: str) -> int:
    m = _load_matrix(args.input)
    out = fn(m, args.k)
    idx = out.nilpotency_index(out.rows)
    if idx is None:
        print(f"{name} output is not nilpotent within {out.rows} steps",
              file=sys.stderr)
        return EXIT_VERIFY
    _emit_matrix(out, Path(args.out), f"{name}{args.k}", args.emit)
    print(f"{out.rows}x{out.cols}, nilpotency index {idx}")
    return EXIT_OK


def cmd_versch(args) -> int:
    return _nilpotent_map(args, nilsse.verschiebung, "versch")


def cmd_frob(args) -> int:
    return _nilpotent_map(args, nilsse.frobenius, "frob")


def _witness_from_json(j: dict):
    from .rings import ring_from_json
    ring = ring_from_json(j["ring"])

    def mat(x):
        return matrix_from_json({"ring": j["ring"], **x})

    if "steps" in j:
        steps = j["steps"]
        mats = [mat(steps[0]["matrix"])]
        wits = []
        for st in steps[1:]:
            mats.append(mat(st["matrix"]))
            wits.append(nilsse.ESSEWitness(mat(st["U"]), mat(st["V"])))
        return nilsse.SSEChain(tuple(mats), tuple(wits))
    return (mat(j["A"]), mat(j["B"]),
            nilsse.SEWitness(mat(j["U"]), mat(j["V"]), int(j["lag"])))


def cmd_sse_verify(args) -> int:
    try:
        j = json.loads(Path(args.input).read_text())
        parsed = _witness_from_json(j)
    except (OSError, ValueError, KeyError, TypeError) as e:
        print(f"cannot parse witness file: {e}", file=sys.stderr)
        return EXIT_IO
    if isinstance(parsed, nilsse.SSEChain):
        res = nilsse.verify_sse_chain(parsed)
        if res.ok:
            print(f"SSE chain verified ({len(parsed.witnesses)} links)")
            return EXIT_OK
        print(f"chain fails at link {res.failed_link}", file=sys.stderr)
        return EXIT_VERIFY
    a, b, w = parsed
    res = nilsse.verify_se(a, b, w)
    if res.ok:
        print(f"shift equivalence verified (lag {w.lag})")
        return EXIT_OK
    print(f"identity failed: {res.failed}", file=sys.stderr)
    return EXIT_VERIFY


def cmd_verify_all(args) -> int:
    checks = report.run_all_checks()
    _print_checks(checks, args.json)
    ok = report.summarize(checks, allow_known_discrepancies=args.allow_known_typos)
    if not args.json:
        n_fail = sum(1 for c in checks if c.status == report.FAIL)
        n_disc = sum(1 for c in checks if c.status == report.DISCREPANCY)
        print(f"\n{len(checks)} checks: {len(checks) - n_fail - n_disc} pass, "
              f"{n_disc} known discrepancies, {n_fail} failures")
    return EXIT_OK if ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="nilk",
        description="Rebuild and verify the explicit NK1/Nil0 representatives "
                    "over Q[t^2,t^3,z,z^-1] and Z[Z/4].")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--emit", choices=["json", "latex"], default="json")
        sp.add_argument("--out", default=".", help="output directory")
        sp.add_argument("--json", action="store_true",
                        help="machine-readable report")

    sp = sub.add_parser("theorem3", help="Laurent-polynomial representative "
                        "and its 10x10 nilpotent companion")
    common(sp)
    sp.set_defaults(fn=cmd_theorem3)

    sp = sub.add_parser("theorem4", help="group-ring representative over Z[Z/4]")
    common(sp)
    sp.set_defaults(fn=cmd_theorem4)

    sp = sub.add_parser("higman", help="nilpotent companion of a K1 representative")
    sp.add_argument("input")
    common(sp)
    sp.set_defaults(fn=cmd_higman)

    sp = sub.add_parser("versch", help="Verschiebung companion of a nilpotent")
    sp.add_argument("input")
    sp.add_argument("-k", type=int, required=True)
    common(sp)
    sp.set_defaults(fn=cmd_versch)

    sp = sub.add_parser("frob", help="Frobenius power of a nilpotent")
    sp.add_argument("input")
    sp.add_argument("-k", type=int, required=True)
    common(sp)
    sp.set_defaults(fn=cmd_frob)

    sp = sub.add_parser("sse-verify", help="verify an SSE chain or SE witness file")
    sp.add_argument("input")
    sp.set_defaults(fn=cmd_sse_verify)

    sp = sub.add_parser("verify-all", help="run the full verification report")
    sp.add_argument("--allow-known-typos", action="store_true",
                    help="tolerate the recorded display discrepancies")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=cmd_verify_all)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except _IOFailure as e:
        print(f"i/o error: {e}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
