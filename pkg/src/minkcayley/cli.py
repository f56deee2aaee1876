"""Command-line front end: ``minkcayley {bound,construct,verify,minksum,identities}``.

Every subcommand writes JSON by default; ``--format text`` prints an
aligned table instead.  The exit status is 0 exactly when every check in
scope passed.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from pathlib import Path

from . import bounds, combid, construct, laws, minksum
from .cayley import CayleyInstance, SummandFamily

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, default=str)


def _emit(payload: dict, text: str, fmt: str, out: str | None = None):
    body = _dump(payload) if fmt == "json" else text
    if out:
        Path(out).write_text(body + "\n")
    else:
        print(body)


def _load_family(path: str) -> SummandFamily:
    try:
        data = json.loads(Path(path).read_text())
        return SummandFamily.from_dict(data.get("family", data), strict=data.get("strict", True))
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read family from {path}: {exc}") from exc


def cmd_bound(args) -> int:
    n = args.n
    if len(n) == 1 and args.r > 1:
        n = n * args.r
    try:
        table = bounds.bound_table(args.d, args.r, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    lines = [f"d={args.d} r={args.r} n={n}", f"{'k':>3}  {'spans_k':>12}  {'minkowski f_(k-r)':>18}"]
    for k, v in table.spans.items():
        j = k - args.r + 1
        mink = table.minkowski.get(j, "")
        lines.append(f"{k:>3}  {v:>12}  {mink if k >= args.r else '':>18}")
    _emit(table.to_dict(), "\n".join(lines), args.format)
    return EXIT_OK


def cmd_construct(args) -> int:
    try:
        params = construct.default_params(args.d, args.r, args.n)
        if args.epsilon is not None:
            params = replace(params, epsilon=args.epsilon)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    result = construct.search_tau_zeta(params, budget=args.budget)
    payload = result.to_dict()
    if result.success:
        payload["family"] = construct.generate_family(result.params).to_dict()
    text = (f"certified tau={result.tau} zeta={result.zeta} after {result.iterations} steps"
            if result.success else f"failed after {result.iterations} steps; witness {result.witness}")
    _emit(payload, text, args.format, args.out)
    if args.out:
        print(text, file=sys.stderr)
    return EXIT_OK if result.success else EXIT_FAIL


def cmd_verify(args) -> int:
    family = _load_family(args.family)
    selected = args.laws.split(",") if args.laws else None
    wants_bounds = selected is None or "bounds" in selected
    law_names = None if selected is None else [s for s in selected if s != "bounds"]
    try:
        inst = CayleyInstance(family, name=Path(args.family).stem)
        report = laws.verify_instance(inst, law_names)
    except KeyError as exc:
        raise UsageError(str(exc)) from exc
    payload = report.to_dict()
    ok = report.passed
    text = report.render()
    if wants_bounds and family.strict:
        checks = [bounds.bound_checks(inst, S) for S in inst.subsets]
        spans_report = bounds.ubtm_bound_report(inst)
        payload["bounds"] = {"phi_psi": checks, "spans": spans_report}
        ok = ok and spans_report["holds"] and all(c["holds"] for c in checks)
        text += f"\n  bounds  {'pass' if ok else 'fail'}"
    payload["passed"] = ok
    _emit(payload, text, args.format, args.out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_minksum(args) -> int:
    family = _load_family(args.family)
    try:
        f = minksum.sum_f_vector(family)
    except minksum.CandidateCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    payload = {"kind": "f", "delta": f.delta, "offset": -1, "entries": list(f.entries)}
    _emit(payload, str(f), args.format, args.out)
    return EXIT_OK


def identity_rows(max_m: int) -> list[dict]:
    rows = []
    for m in range(1, max_m + 1):
        rows.append({"identity": "WE1", "m": m, "ok": combid.verify_WE1(m)})
        rows.append({"identity": "WE2", "m": m, "ok": combid.verify_WE2(m)})
        if m <= 8:
            ok = all(combid.chain_count_A(m, k) == combid.chain_count_A_enum(m, k)
                     and combid.chain_count_B(m, k) == combid.chain_count_B_enum(m, k)
                     for k in range(m + 2))
            rows.append({"identity": "chain counts", "m": m, "ok": ok})
        if m <= 6:
            ok = all(combid.chain_count_D_sum(m, x, ell) == combid.chain_count_D_sum_enum(m, x, ell)
                     for x in range(m) for ell in range(1, 7))
            rows.append({"identity": "D-sum", "m": m, "ok": ok})
    return rows


def cmd_identities(args) -> int:
    if not 0 <= args.max_m <= 12:
        raise UsageError("--max-m must lie in 0..12")
    rows = identity_rows(args.max_m)
    ok = all(r["ok"] for r in rows)
    text = "\n".join(f"{r['identity']:<13} m={r['m']:<3} {'pass' if r['ok'] else 'FAIL'}" for r in rows)
    _emit({"passed": ok, "rows": rows}, text, args.format)
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="minkcayley", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--format", choices=["json", "text"], default="json")
        p.set_defaults(func=func)
        return p

    p = add("bound", cmd_bound, "tabulate the Minkowski-sum face-number bounds")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=_int_list, required=True, help="vertex counts, e.g. 6,6")

    p = add("construct", cmd_construct, "build and certify a family attaining the bounds")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=_int_list, required=True)
    p.add_argument("--epsilon", type=str, default=None)
    p.add_argument("--budget", type=int, default=40)
    p.add_argument("--out", default=None)

    p = add("verify", cmd_verify, "run the law checks on a family file")
    p.add_argument("family")
    p.add_argument("--laws", default=None, help=f"subset of {','.join(laws.LAWS)},bounds")
    p.add_argument("--out", default=None)

    p = add("minksum", cmd_minksum, "f-vector of the Minkowski sum of a family file")
    p.add_argument("family")
    p.add_argument("--out", default=None)

    p = add("identities", cmd_identities, "check the combinatorial identities up to max m")
    p.add_argument("--max-m", type=int, default=8)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
