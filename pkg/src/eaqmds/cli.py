"""Command-line front end.

Subcommands:
  table    reproduce a family's published parameter table and verify it
  family   inspect one instance: code, EA parameters, all checks
  verify   run the property sweep with configurable bounds
  oracle   compare rank(H H†) against |Z1| for one instance

Exit codes: 0 success, 1 verification failure, 2 usage or parameter
error, 3 size-guard refusal.  Data output is byte-stable across runs;
``--meta`` prepends tool provenance.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__
from .cosets import decompose
from .families import FamilySpec, build_defining_set, closed_form, ea_params, \
    spec_from_q, verify_family
from .published_params import PUBLISHED_ROWS
from .rank_oracle import DEFAULT_N_MAX, OracleSizeError, entanglement_rank
from .verification import run_verification_sweep

CSV_COLUMNS = ("case", "m", "q", "n", "alpha", "kq", "d", "c")


def _meta_block(command: str, options: dict) -> dict:
    return {
        "tool": "eaqmds",
        "version": __version__,
        "command": command,
        "options": {k: options[k] for k in sorted(options)},
    }


def _print_json(payload: dict, meta: dict | None):
    if meta is not None:
        payload = {**payload, "meta": meta}
    print(json.dumps(payload, indent=2))


def _print_csv(header, rows, meta: dict | None):
    buf = io.StringIO()
    if meta is not None:
        for k, v in meta.items():
            if k != "options":
                buf.write(f"# {k}={v}\n")
        for k, v in meta["options"].items():
            buf.write(f"# option.{k}={v}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    sys.stdout.write(buf.getvalue())


def _cmd_table(args) -> int:
    case = args.case
    published = PUBLISHED_ROWS[case]
    rows_out = []
    all_match = True
    for m, q, n, alpha, kq, d, c in published:
        spec = spec_from_q(case, m, q, alpha)
        ea = ea_params(spec)
        record = build_defining_set(spec)
        z1 = decompose(spec.n, spec.q, record.defining_set).z1
        computed = (m, q, spec.n, alpha, ea.kq, ea.d, ea.c)
        verified = computed == (m, q, n, alpha, kq, d, c) and len(z1) == ea.c
        all_match &= verified
        rows_out.append({
            "m": m, "q": q, "n": spec.n, "alpha": alpha,
            "ea": {"n": ea.n, "k": ea.kq, "d": ea.d, "c": ea.c},
            "label": ea.label(q),
            "verified": verified,
        })
    meta = _meta_block("table", {"case": case, "format": args.format}) \
        if args.meta else None
    if args.format == "json":
        _print_json({"case": case, "rows": rows_out, "all_match": all_match}, meta)
    else:
        _print_csv(CSV_COLUMNS,
                   [(case, r["m"], r["q"], r["n"], r["alpha"],
                     r["ea"]["k"], r["ea"]["d"], r["ea"]["c"]) for r in rows_out],
                   meta)
    return 0 if all_match else 1


def _family_payload(spec: FamilySpec) -> tuple[dict, bool]:
    cf = closed_form(spec)
    ea = ea_params(spec)
    report = verify_family(spec)
    payload = {
        "case": spec.case,
        "m": spec.m,
        "q": spec.q,
        "k": spec.k,
        "n": spec.n,
        "alpha": spec.alpha,
        "classical": {"n": spec.n, "k": cf.classical_dim, "d": cf.d},
        "ea": {
            "n": ea.n, "k": ea.kq, "d": ea.d, "c": ea.c,
            "ea_singleton_equality": ea.ea_singleton_equality,
            "d_within_half": ea.d_within_half,
        },
        "checks": {
            **report.checks,
            "z1_size": report.z1_size,
            "z2_size": report.z2_size,
        },
    }
    return payload, report.passed


def _cmd_family(args) -> int:
    try:
        spec = FamilySpec(args.case, args.m, args.k, args.alpha)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    payload, passed = _family_payload(spec)
    meta = _meta_block("family", {
        "case": args.case, "m": args.m, "k": args.k, "alpha": args.alpha,
        "format": args.format,
    }) if args.meta else None
    if args.format == "json":
        _print_json(payload, meta)
    else:
        ea = payload["ea"]
        _print_csv(CSV_COLUMNS,
                   [(spec.case, spec.m, spec.q, spec.n, spec.alpha,
                     ea["k"], ea["d"], ea["c"])],
                   meta)
    return 0 if passed else 1


def _cmd_verify(args) -> int:
    summary = run_verification_sweep(
        m_max=args.m_max, q_max=args.q_max,
        oracle_n_max=args.oracle_n_max, fault_inject=args.fault_inject)
    payload = summary.as_dict()
    meta = _meta_block("verify", {
        "m_max": args.m_max, "q_max": args.q_max,
        "oracle_n_max": args.oracle_n_max, "fault_inject": args.fault_inject,
    }) if args.meta else None
    if args.format == "json":
        _print_json(payload, meta)
    else:
        rows = [("spec_checks", name, counts["passed"], counts["failed"])
                for name, counts in payload["checks"].items()]
        rows.append(("coset_identity", "neg_q_coset_map",
                     payload["coset_identity"]["passed"],
                     payload["coset_identity"]["failed"]))
        oracle = payload["oracle"]
        if oracle["status"] == "skipped":
            rows.append(("oracle", "rank_vs_z1", "skipped", "skipped"))
        else:
            rows.append(("oracle", "rank_vs_z1",
                         oracle["passed"], oracle["failed"]))
        _print_csv(("section", "check", "passed", "failed"), rows, meta)
    return 0 if summary.ok else 1


def _cmd_oracle(args) -> int:
    try:
        spec = FamilySpec(args.case, args.m, args.k, args.alpha)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        report = entanglement_rank(spec, n_max=args.oracle_n_max)
    except OracleSizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    payload = {
        "case": spec.case,
        "m": spec.m,
        "q": spec.q,
        "k": spec.k,
        "n": spec.n,
        "alpha": spec.alpha,
        "rank_hh_dagger": report.rank_hh_dagger,
        "z1_size": report.z1_size,
        "closed_form_c": report.closed_form_c,
        "match": report.match,
        "matches_closed_form": report.matches_closed_form,
    }
    meta = _meta_block("oracle", {
        "case": args.case, "m": args.m, "k": args.k, "alpha": args.alpha,
        "oracle_n_max": args.oracle_n_max,
    }) if args.meta else None
    if args.format == "json":
        _print_json(payload, meta)
    else:
        _print_csv(("case", "m", "q", "n", "alpha",
                    "rank_hh_dagger", "z1_size", "closed_form_c", "match"),
                   [(spec.case, spec.m, spec.q, spec.n, spec.alpha,
                     report.rank_hh_dagger, report.z1_size,
                     report.closed_form_c, report.match)],
                   meta)
    return 0 if report.match and report.matches_closed_form else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eaqmds",
        description="Construct and verify the four EAQMDS code families "
                    "of length n = (q^2+1)/(m^2+1).")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--meta", action="store_true",
                       help="prepend tool provenance to the output")

    p_table = sub.add_parser("table", help="reproduce one published table")
    p_table.add_argument("--case", type=int, choices=(1, 2, 3, 4), required=True)
    add_common(p_table)
    p_table.set_defaults(func=_cmd_table)

    p_family = sub.add_parser("family", help="inspect one family instance")
    p_family.add_argument("--case", type=int, choices=(1, 2, 3, 4), required=True)
    p_family.add_argument("--m", type=int, required=True)
    p_family.add_argument("--k", type=int, required=True)
    p_family.add_argument("--alpha", type=int, required=True)
    add_common(p_family)
    p_family.set_defaults(func=_cmd_family)

    p_verify = sub.add_parser("verify", help="run the property sweep")
    p_verify.add_argument("--m-max", type=int, default=5)
    p_verify.add_argument("--q-max", type=int, default=250)
    p_verify.add_argument("--oracle-n-max", type=int, default=DEFAULT_N_MAX,
                          help="rank-oracle size guard; 0 skips the oracle")
    p_verify.add_argument("--fault-inject", action="store_true",
                          help="mutate one defining set to prove checks can fail")
    add_common(p_verify)
    p_verify.set_defaults(func=_cmd_verify)

    p_oracle = sub.add_parser("oracle", help="rank(H H†) versus |Z1|")
    p_oracle.add_argument("--case", type=int, choices=(1, 2, 3, 4), required=True)
    p_oracle.add_argument("--m", type=int, required=True)
    p_oracle.add_argument("--k", type=int, required=True)
    p_oracle.add_argument("--alpha", type=int, required=True)
    p_oracle.add_argument("--oracle-n-max", type=int, default=DEFAULT_N_MAX)
    add_common(p_oracle)
    p_oracle.set_defaults(func=_cmd_oracle)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
