"""Command-line interface: character tables, verification suites, and label
bijections.  Exit codes: 0 success, 1 identity violation, 2 usage error."""
from __future__ import annotations

import argparse
import json
import sys

from . import affine, strips, verify, yangian
from .partitions import Partition
from .strips import BorderStrip, Motif, RapiditySeq

USAGE_ERROR = 2


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# char

CHAR_KINDS = (
    "bosonic",
    "fermionic-root",
    "fermionic-spinon",
    "spinon-enum",
    "yangian",
    "sl2-yangian",
)


def _build_table(kind: str, n: int, k: int, qmax: int):
    if n < 2:
        raise UsageError(f"--n must be >= 2, got {n}")
    if not 0 <= k < n:
        raise UsageError(f"--k must satisfy 0 <= k < n, got k={k}, n={n}")
    if qmax < 0:
        raise UsageError(f"--qmax must be >= 0, got {qmax}")
    if kind in ("fermionic-root", "fermionic-spinon", "spinon-enum", "sl2-yangian"):
        if n != 2:
            raise UsageError(f"--kind {kind} requires --n 2")
    if kind == "bosonic":
        return affine.bosonic_character(n, k, qmax)
    if kind == "fermionic-root":
        return affine.sl2_fermionic_character(k, "root", qmax)
    if kind == "fermionic-spinon":
        return affine.sl2_fermionic_character(k, "spinon", qmax)
    if kind == "spinon-enum":
        return affine.sl2_spinon_enumeration(k, qmax)
    if kind == "yangian":
        return yangian.yangian_decomposition(n, k, qmax)
    if kind == "sl2-yangian":
        return yangian.sl2_yangian_decomposition(k, qmax)
    raise UsageError(f"unknown kind {kind!r}")


def _render_table(table, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(table.to_json_dict(), indent=2)
    if fmt == "csv":
        table.prune()
        header = [f"w{i}" for i in range(1, table.n)] + ["qdegree", "coeff"]
        lines = [",".join(header)]
        for w in sorted(table.rows):
            for d, c in enumerate(table.rows[w]):
                if c:
                    lines.append(",".join(str(x) for x in (*w, d, c)))
        return "\n".join(lines)
    if fmt == "pretty":
        table.prune()
        lines = [
            f"n={table.n} k={table.k} qmax={table.qmax} "
            f"delta={table.delta.numerator}/{table.delta.denominator}"
        ]
        for w in sorted(table.rows):
            terms = " + ".join(
                f"{c}*q^{d}" for d, c in enumerate(table.rows[w]) if c
            )
            lines.append(f"weight {w}: {terms or '0'}")
        return "\n".join(lines)
    raise UsageError(f"unknown format {fmt!r}")


# ---------------------------------------------------------------------------
# bijection

BIJECTION_OBJECTS = ("strip", "motif", "rapidity", "modes", "sl2-partition")


def _parse_payload(kind: str, payload: str, n: int):
    try:
        if kind == "strip":
            data = json.loads(payload)
            rows = data["rows"] if isinstance(data, dict) else data
            return BorderStrip.from_rows(rows, n)
        if kind == "motif":
            return Motif.parse(payload, n)
        if kind == "rapidity":
            data = json.loads(payload)
            return RapiditySeq(n, data["k"], data["prefix"], data["stab"])
        if kind == "modes":
            return [int(x) for x in json.loads(payload)]
        if kind == "sl2-partition":
            data = json.loads(payload)
            return Partition(data["lam"]), int(data["N"])
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot parse {kind} payload {payload!r}: {exc}") from exc
    raise UsageError(f"unknown object kind {kind!r}")


def _to_strip(kind: str, obj, n: int) -> BorderStrip:
    if kind == "strip":
        return obj
    if kind == "motif":
        return strips.motif_to_strip(obj, n)
    if kind == "rapidity":
        return strips.rapidity_to_strip(obj, n)
    if kind == "modes":
        return strips.modes_to_strip(obj, n)
    if kind == "sl2-partition":
        lam, n_spinons = obj
        return strips.sl2_partition_to_strip(lam, n_spinons)
    raise UsageError(f"unknown object kind {kind!r}")


def _render_object(kind: str, obj) -> object:
    if kind == "strip":
        return obj.to_dict()
    if kind == "motif":
        return obj.canonical().serialize()
    if kind == "rapidity":
        c = obj.canonical()
        return {"n": c.n, "k": c.k, "prefix": list(c.prefix), "stab": c.stab}
    raise UsageError(f"unknown target kind {kind!r}")


def _bijection(src: str, dst: str, payload: str, n: int) -> dict:
    if n < 2:
        raise UsageError(f"--n must be >= 2, got {n}")
    if src not in BIJECTION_OBJECTS:
        raise UsageError(f"--from must be one of {BIJECTION_OBJECTS}")
    if dst not in ("strip", "motif", "rapidity"):
        raise UsageError("--to must be one of ('strip', 'motif', 'rapidity')")
    obj = _parse_payload(src, payload, n)
    try:
        strip = _to_strip(src, obj, n)
        if dst == "strip":
            image = strip
        elif dst == "rapidity":
            image = strips.strip_to_rapidity(strip.reduce())
        else:
            image = strips.rapidity_to_motif(
                strips.strip_to_rapidity(strip.reduce())
            )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    out = {"from": src, "to": dst, "result": _render_object(dst, image)}
    reduced = strip.reduce()
    if reduced.size() > 0 or not strip.rows:
        e = strips.energy(reduced)
        out["energy"] = f"{e.numerator}/{e.denominator}"
    return out


# ---------------------------------------------------------------------------
# verify

def _render_report(report, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report.to_json_dict(), indent=2)
    if fmt == "pretty":
        lines = []
        for c in report.cases:
            status = "PASS" if c.passed else "FAIL"
            extra = "" if c.passed else f"  locus: {c.locus}"
            lines.append(f"{status} {c.id} ({c.seconds:.3f}s){extra}")
        lines.append(
            f"{report.suite}: {sum(c.passed for c in report.cases)}/"
            f"{len(report.cases)} passed"
        )
        return "\n".join(lines)
    raise UsageError(f"unknown format {fmt!r}")


# ---------------------------------------------------------------------------
# argument parsing

class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default already exits 2
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="spinonchars")
    sub = parser.add_subparsers(dest="command", required=True)

    p_char = sub.add_parser("char", help="print a character table")
    p_char.add_argument("--kind", choices=CHAR_KINDS, required=True)
    p_char.add_argument("--n", type=int, required=True)
    p_char.add_argument("--k", type=int, required=True)
    p_char.add_argument("--qmax", type=int, required=True)
    p_char.add_argument("--format", choices=("json", "csv", "pretty"),
                        default="pretty")

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--suite", required=True,
                          choices=sorted(verify.SUITES) + ["all"])
    p_verify.add_argument("--n", type=int, default=None,
                          help="restrict rank-parametrized suites to one rank")
    p_verify.add_argument("--qmax", type=int, default=None,
                          help="override the truncation order where applicable")
    p_verify.add_argument("--jobs", type=int, default=None)
    p_verify.add_argument("--profile", choices=("desk",), default="desk")
    p_verify.add_argument("--format", choices=("json", "pretty"),
                          default="pretty")

    p_bij = sub.add_parser("bijection", help="map one label to another")
    p_bij.add_argument("--from", dest="src", required=True,
                       choices=BIJECTION_OBJECTS)
    p_bij.add_argument("--to", dest="dst", required=True,
                       choices=("strip", "motif", "rapidity"))
    p_bij.add_argument("--n", type=int, required=True)
    p_bij.add_argument("--payload", required=True)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "char":
            table = _build_table(args.kind, args.n, args.k, args.qmax)
            print(_render_table(table, args.format))
            return 0
        if args.command == "verify":
            jobs = args.jobs if args.jobs is not None else verify.default_jobs()
            if jobs < 1:
                raise UsageError("--jobs must be >= 1")
            if args.n is not None and args.n < 2:
                raise UsageError(f"--n must be >= 2, got {args.n}")
            if args.qmax is not None and args.qmax < 0:
                raise UsageError(f"--qmax must be >= 0, got {args.qmax}")
            cases = verify.build_suite(args.suite, n=args.n, qmax=args.qmax)
            report = verify.run_cases(args.suite, cases, jobs)
            print(_render_report(report, args.format))
            return 0 if report.passed else 1
        if args.command == "bijection":
            out = _bijection(args.src, args.dst, args.payload, args.n)
            print(json.dumps(out, indent=2))
            return 0
    except UsageError as exc:
        print(f"spinonchars: error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    return USAGE_ERROR  # pragma: no cover


if __name__ == "__main__":
    sys.exit(main())
