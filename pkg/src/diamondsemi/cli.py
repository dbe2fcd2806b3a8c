"""Command-line front end.

Subcommands:
    tables    emit the addition and multiplication Cayley tables of the full
              semiring for a diamond, or of a named restricted family
    verify    run the structural-claim registry over one or more sizes
    classify  per-element catalog: idempotency, nilpotency, zero divisors,
              invertibility, image, power orbit

Formats: text (aligned, human readable), csv, json (versioned schemas
"diamondsemi.<command>/1").  Exit codes: 0 success (a "mismatch-noted"
claim status does not fail), 1 a claim reported "fail", 2 usage error.
The size cap for building the full semiring defaults to 7 and can be
overridden with the DIAMONDSEMI_MAX_N environment variable.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

import numpy as np

from . import algebra, families, verify
from .endo import build_semiring
from .lattice import Diamond

SCHEMA_VERSION = 1
DEFAULT_MAX_N = 7
FORMATS = ("text", "csv", "json")


class UsageError(ValueError):
    """Bad arguments detected after parsing (unknown subset, cap, ...)."""


def _max_n() -> int:
    raw = os.environ.get("DIAMONDSEMI_MAX_N", "")
    try:
        return int(raw) if raw else DEFAULT_MAX_N
    except ValueError:
        raise UsageError(f"DIAMONDSEMI_MAX_N must be an integer, got {raw!r}")


def _check_n(n: int) -> None:
    cap = _max_n()
    if not 3 <= n <= cap:
        raise UsageError(f"n must be between 3 and {cap} (cap), got {n}")


def _schema(command: str) -> str:
    return f"diamondsemi.{command}/{SCHEMA_VERSION}"


def _build_ring(n: int, subset_spec: str | None):
    """(semiring, subset_name) for the full semiring or a restricted family."""
    S = build_semiring(Diamond(n))
    if subset_spec is None:
        return S, None
    name, params = families.parse_family_spec(subset_spec)
    # single-atom shorthand: "SI:1" means the order-3 stable-idempotent ring
    if name == "SI" and params:
        name = "SIa"
    sub = families.make_subset(S, name, params)
    ok, wit = algebra.is_subsemiring(sub)
    if not ok:
        raise UsageError(f"family {subset_spec!r} is not closed: {wit}")
    return algebra.subsemiring_restrict(sub), subset_spec


# -- tables ---------------------------------------------------------------


def cmd_tables(n: int, subset_spec: str | None, fmt: str) -> tuple[str, int]:
    _check_n(n)
    ring, subset = _build_ring(n, subset_spec)
    payload = {
        "schema": _schema("tables"),
        "n": n,
        "subset": subset,
        "order": ring.order,
        "elements": list(ring.labels),
        "add": np.asarray(ring.add_table).tolist(),
        "mul": np.asarray(ring.mul_table).tolist(),
    }
    if fmt == "json":
        return json.dumps(payload, indent=2), 0
    if fmt == "csv":
        out = io.StringIO()
        w = csv.writer(out)
        w.writerow(["op", "row\\col", *ring.labels])
        for op, table in (("add", ring.add_table), ("mul", ring.mul_table)):
            for i, lab in enumerate(ring.labels):
                w.writerow([op, lab, *(ring.labels[int(c)] for c in table[i])])
        return out.getvalue(), 0
    lines = [f"semiring over the {n}-element diamond"
             + (f", family {subset}" if subset else "")
             + f" ({ring.order} elements)"]
    width = max(len(lab) for lab in ring.labels)
    for op, table in (("addition", ring.add_table), ("multiplication", ring.mul_table)):
        lines.append("")
        lines.append(f"{op} (row = left operand):")
        head = " " * width + " | " + " ".join(lab.rjust(width) for lab in ring.labels)
        lines.append(head)
        lines.append("-" * len(head))
        for i, lab in enumerate(ring.labels):
            row = " ".join(ring.labels[int(c)].rjust(width) for c in table[i])
            lines.append(f"{lab.rjust(width)} | {row}")
    return "\n".join(lines) + "\n", 0


# -- verify ---------------------------------------------------------------


def cmd_verify(n_values: list[int], claim_filter: str | None, fmt: str) -> tuple[str, int]:
    for n in n_values:
        _check_n(n)
    if claim_filter is not None and claim_filter not in verify.REGISTRY:
        raise UsageError(
            f"unknown claim {claim_filter!r}; known: {', '.join(verify.claim_ids())}"
        )
    reports = verify.run_all(n_values, claim_filter)
    if claim_filter is not None and not reports:
        raise UsageError(f"claim {claim_filter!r} does not apply at n={n_values}")
    code = 1 if any(r.status == verify.FAIL for r in reports) else 0
    if fmt == "json":
        payload = {
            "schema": _schema("verify"),
            "n_values": sorted(set(n_values)),
            "claim_filter": claim_filter,
            "reports": [r.to_dict() for r in reports],
        }
        return json.dumps(payload, indent=2, default=str), code
    if fmt == "csv":
        out = io.StringIO()
        w = csv.writer(out)
        w.writerow(["claim", "n", "status", "witness", "notes", "seconds"])
        for r in reports:
            w.writerow([
                r.claim_id, r.n, r.status,
                json.dumps(r.witness, default=str),
                json.dumps(r.notes),
                round(r.seconds, 4),
            ])
        return out.getvalue(), code
    lines = []
    for r in reports:
        line = f"{r.claim_id:<16} n={r.n}  {r.status:<15} {r.seconds:7.2f}s"
        if r.status != verify.PASS:
            line += f"  witness={json.dumps(r.witness, default=str)}"
        if r.notes:
            line += f"  notes={'; '.join(r.notes)}"
        lines.append(line)
    counts = {s: sum(r.status == s for r in reports) for s in (verify.PASS, verify.MISMATCH, verify.FAIL)}
    lines.append("")
    lines.append(
        f"{len(reports)} checks: {counts[verify.PASS]} pass, "
        f"{counts[verify.MISMATCH]} mismatch-noted, {counts[verify.FAIL]} fail"
    )
    return "\n".join(lines) + "\n", code


# -- classify -------------------------------------------------------------


def _power_orbit(mul, x: int) -> list[int]:
    """Powers x, x^2, ... up to and including the first repeated index."""
    orbit, seen, cur = [x], {x}, x
    while True:
        cur = int(mul[cur, x])
        orbit.append(cur)
        if cur in seen:
            return orbit
        seen.add(cur)


def cmd_classify(n: int, fmt: str) -> tuple[str, int]:
    _check_n(n)
    S = build_semiring(Diamond(n))
    records = algebra.classify(S)
    rows = []
    for r in records:
        rows.append({
            "index": r.index,
            "element": r.label,
            "add_idempotent": r.is_add_idempotent,
            "mul_idempotent": r.is_mul_idempotent,
            "nilpotent": r.is_nilpotent,
            "nilpotency_index": r.nilpotency_index,
            "zero_divisor": r.is_zero_divisor,
            "regular": r.is_regular,
            "invertible": r.is_invertible,
            "inverse": None if r.inverse is None else S.labels[r.inverse],
            "image": list(r.image) if r.image is not None else None,
            "fixes_top": r.fixes_top,
            "power_orbit": [S.labels[i] for i in _power_orbit(S.mul_table, r.index)],
        })
    if fmt == "json":
        payload = {"schema": _schema("classify"), "n": n, "order": S.order, "elements": rows}
        return json.dumps(payload, indent=2), 0
    if fmt == "csv":
        out = io.StringIO()
        w = csv.writer(out)
        cols = list(rows[0])
        w.writerow(cols)
        for row in rows:
            w.writerow([
                json.dumps(row[c]) if isinstance(row[c], list) else row[c]
                for c in cols
            ])
        return out.getvalue(), 0
    lines = [f"{S.order} endomorphisms of the {n}-element diamond"]
    for row in rows:
        flags = [k for k in (
            "add_idempotent", "mul_idempotent", "nilpotent",
            "zero_divisor", "regular", "invertible",
        ) if row[k]]
        orbit = " -> ".join(row["power_orbit"])
        lines.append(f"{row['element']:<{2 * n}} [{', '.join(flags)}]  powers: {orbit}")
    return "\n".join(lines) + "\n", 0


# -- entry point ----------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="diamondsemi",
        description="Endomorphism semirings of diamond join-semilattices.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=FORMATS, default="text")
        sp.add_argument("--out", default=None, help="write output to a file instead of stdout")

    t = sub.add_parser("tables", help="emit both Cayley tables")
    t.add_argument("--n", type=int, required=True, help="diamond size")
    t.add_argument("--subset", default=None,
                   help='family spec like "AA", "Eai:1", "Eset:1,2", "SI:1"')
    common(t)

    v = sub.add_parser("verify", help="run the structural-claim registry")
    v.add_argument("--n", type=int, nargs="+", default=[4, 5, 6], help="diamond sizes")
    v.add_argument("--claims", default=None, help='run a single claim id, e.g. "Prop 4.4"')
    common(v)

    c = sub.add_parser("classify", help="per-element catalog")
    c.add_argument("--n", type=int, required=True, help="diamond size")
    common(c)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "tables":
            text, code = cmd_tables(args.n, args.subset, args.format)
        elif args.command == "verify":
            text, code = cmd_verify(args.n, args.claims, args.format)
        else:
            text, code = cmd_classify(args.n, args.format)
    except (UsageError, families.UnknownFamilyError, families.BadFamilyParamsError,
            verify.UnknownClaimError, verify.ClaimRangeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
