"""Command-line front end.

Every subcommand writes one envelope to stdout, JSON by default::

    {"command": ..., "params": {...}, "format_version": "1", "data": {...}}

Integers are emitted as decimal strings because periods overflow 64 bits.
``--format csv`` prints the same numbers as CSV: a single line for plain
vectors, a header plus rows for tables.  Exit status is 0 on success, 1 when a
verification fails and 2 on bad arguments.
"""

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from typing import Optional

from . import verify as verify_mod
from .asymptotics import asym_rows
from .errors import QbinmodError
from .partitions import p_le_k_prefix, qbinom_coeffs
from .periods import factorize, minimal_period, pi_n, pi_prime_power, qperiod_table
from .quasifit import count_table, fit, genfun, minimal_quasiperiod_search

FORMAT_VERSION = "1"


@dataclass
class Result:
    data: dict
    rows: list  # CSV rows
    header: Optional[list] = None
    ok: bool = True
    params: dict = field(default_factory=dict)


class UsageError(Exception):
    pass


def _stringify(obj):
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return repr(obj)
    if isinstance(obj, dict):
        return {k: _stringify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_stringify(v) for v in obj]
    return obj


def _csv_cell(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def render(command: str, params: dict, res: Result, fmt: str) -> str:
    if fmt == "json":
        env = {
            "command": command,
            "params": _stringify(params),
            "format_version": FORMAT_VERSION,
            "data": _stringify(res.data),
        }
        return json.dumps(env, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if res.header:
        w.writerow(res.header)
    for row in res.rows:
        w.writerow([_csv_cell(v) for v in row])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# subcommands


def cmd_coeffs(a):
    vals = qbinom_coeffs(a.n, a.k, a.mod).tolist()
    return Result({"length": len(vals), "values": vals}, [vals])


def cmd_partitions(a):
    vals = p_le_k_prefix(a.k, a.mod, a.len).tolist()
    return Result({"values": vals}, [vals])


def cmd_period(a):
    P = pi_n(a.mod, a.k)
    comps = []
    for p, e in factorize(a.mod).items():
        info = pi_prime_power(p, e, a.k)
        comps.append({"p": p, "e": e, "b_p": info.b_p, "L_p": info.L_p, "pi": info.pi})
    data = {"period": P, "components": comps}
    header = ["k", "mod", "period"]
    row = [a.k, a.mod, P]
    ok = True
    if a.verify:
        observed = minimal_period(p_le_k_prefix(a.k, a.mod, 3 * P))
        ok = observed == P
        data.update({"observed": observed, "verified": ok})
        header += ["observed", "verified"]
        row += [observed, ok]
    return Result(data, [row], header, ok=ok)


def cmd_qperiod(a):
    table = qperiod_table(a.mod, a.k)
    trace = [
        {"k": s.k, "pi": s.pi, "ratio": s.ratio, "branch": s.branch, "qperiod": s.qpi}
        for s in table.entries
    ]
    rows = [[s.k, s.pi, s.ratio, s.branch, s.qpi] for s in table.entries]
    return Result({"qperiod": table.qpi(a.k), "trace": trace}, rows, ["k", "pi", "ratio", "branch", "qperiod"])


def cmd_count(a):
    if a.from_ < 0 or a.to < a.from_:
        raise UsageError("need 0 <= --from <= --to")
    if not 0 <= a.r < a.mod:
        raise UsageError("--r must lie in [0, mod)")
    lo = max(a.from_, a.k)
    table = count_table(a.k, a.mod, lo, max(a.to, lo))
    rows = [[n, table.f(n, a.r) if n >= a.k else 0] for n in range(a.from_, a.to + 1)]
    return Result({"rows": [{"n": n, "f": f} for n, f in rows]}, rows, ["n", "f"])


def cmd_fit(a):
    qf = fit(a.k, a.r, a.mod)
    rows = [[i, b, m] for i, (b, m) in enumerate(zip(qf.intercepts, qf.slopes))]
    data = {"Q": qf.Q, "rows": [{"i": i, "b": b, "m": m} for i, b, m in rows]}
    return Result(data, rows, ["i", "b", "m"])


def cmd_genfun(a):
    if a.terms < 1:
        raise UsageError("--terms must be >= 1")
    qf = fit(a.k, a.r, a.mod)
    gf = genfun(qf)
    expansion = gf.expand(a.terms)
    brute = [0] * a.terms
    if a.terms > a.k:
        table = count_table(a.k, a.mod, a.k, a.terms - 1)
        for n in range(a.k, a.terms):
            brute[n] = table.f(n, a.r)
    ok = expansion[a.k :] == brute[a.k :]
    data = {
        "Q": gf.Q,
        "numerator_b": list(gf.numerator_b),
        "numerator_m": list(gf.numerator_m),
        "numerator": gf.numerator(),
        "expansion": expansion,
        "checked_from": a.k,
        "matches": ok,
    }
    rows = [[n, expansion[n], brute[n]] for n in range(a.terms)]
    return Result(data, rows, ["n", "expansion", "f_count"], ok=ok)


def cmd_search(a):
    found = minimal_quasiperiod_search(a.k, a.r, a.mod, a.bound)
    table = qperiod_table(a.mod, a.k)
    data = {"minimal_quasiperiod": found, "pi": table.pi(a.k), "qperiod": table.qpi(a.k)}
    return Result(data, [[found, table.pi(a.k), table.qpi(a.k)]], ["minimal_quasiperiod", "pi", "qperiod"])


def cmd_verify(a):
    ranges = verify_mod.Ranges(k_max=a.k_max, mod_max=a.mod_max, n_max=a.n_max, l_max=a.l_max)
    progress = None if a.quiet else (lambda name: print(f"running suite {name}", file=sys.stderr))
    checks = verify_mod.run(a.suite, ranges, progress)
    summary = {s: sum(1 for c in checks if c.status == s) for s in ("pass", "fail", "skipped")}
    data = {
        "suite": a.suite,
        "checks": [{"suite": c.suite, "case": c.case, "status": c.status, "detail": c.detail} for c in checks],
        "summary": summary,
    }
    rows = [[c.suite, c.case, c.status, c.detail] for c in checks]
    return Result(data, rows, ["suite", "case", "status", "detail"], ok=summary["fail"] == 0)


def parse_grid(spec: str) -> list:
    """``"10,100,1e3:1e3"`` style grids: comma-separated ints or ``a:b[:step]`` inclusive ranges."""
    out = []
    for token in spec.split(","):
        token = token.strip()
        if not token:
            continue
        parts = [_parse_int(t) for t in token.split(":")]
        if len(parts) == 1:
            out.append(parts[0])
        elif len(parts) in (2, 3):
            step = parts[2] if len(parts) == 3 else 1
            if step < 1:
                raise UsageError(f"bad step in {token!r}")
            out.extend(range(parts[0], parts[1] + 1, step))
        else:
            raise UsageError(f"bad grid token {token!r}")
    if not out or min(out) < 1:
        raise UsageError("k-grid must list integers >= 1")
    return out


def _parse_int(t: str) -> int:
    try:
        return int(t)
    except ValueError:
        pass
    try:
        v = float(t)
    except ValueError:
        raise UsageError(f"not an integer: {t!r}") from None
    if v != int(v):
        raise UsageError(f"not an integer: {t!r}")
    return int(v)


def cmd_asymptotics(a):
    rows = []
    for k in parse_grid(a.k_grid):
        for r in asym_rows(a.p, k, a.e):
            rows.append([k, r.quantity, r.exact_value, r.estimate, r.log_rel_error])
    data = {
        "rows": [
            {"k": k, "quantity": q, "exact": x, "estimate": est, "log_rel_error": err}
            for k, q, x, est, err in rows
        ]
    }
    return Result(data, rows, ["k", "quantity", "exact", "estimate", "log_rel_error"])


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--quiet", action="store_true", help="no diagnostics on stderr")
    common.add_argument("--out", metavar="PATH", help="also write the output to PATH")

    parser = argparse.ArgumentParser(prog="qbinmod", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    p = add("coeffs", cmd_coeffs, "coefficients of [n choose k]_q mod N")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mod", type=int, required=True)

    p = add("partitions", cmd_partitions, "p_{<=k}(n) mod N for n < len")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mod", type=int, required=True)
    p.add_argument("--len", type=int, required=True)

    p = add("period", cmd_period, "minimal period pi_N(k)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mod", type=int, required=True)
    p.add_argument("--verify", action="store_true", help="confirm against a brute-force period search")

    p = add("qperiod", cmd_qperiod, "quasi-period pi'_N(k) with its recursion trace")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mod", type=int, required=True)

    p = add("count", cmd_count, "table of f_{k,R}(n)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--mod", type=int, required=True)
    p.add_argument("--from", dest="from_", type=int, required=True)
    p.add_argument("--to", type=int, required=True)

    p = add("fit", cmd_fit, "slopes and intercepts of f_{k,R} per residue class")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--mod", type=int, required=True)

    p = add("genfun", cmd_genfun, "generating-function numerators and expansion check")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--mod", type=int, required=True)
    p.add_argument("--terms", type=int, required=True)

    p = add("search", cmd_search, "empirical minimal quasi-period search")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--mod", type=int, required=True)
    p.add_argument("--bound", type=int, required=True)

    p = add(
        "verify",
        cmd_verify,
        "run identity checks (defaults: k <= 4, N <= 6, n <= 8 for lemma34, l <= 2)",
    )
    p.add_argument("--suite", choices=verify_mod.SUITES + ("all",), default="all")
    p.add_argument("--k-max", type=int, default=4)
    p.add_argument("--mod-max", type=int, default=6)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--l-max", type=int, default=2)

    p = add("asymptotics", cmd_asymptotics, "exact values against large-k estimates")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--e", type=int, default=1)
    p.add_argument("--k-grid", required=True, metavar="SPEC", help="e.g. 10,100,1000 or 10:100:10")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    params = {k: v for k, v in vars(args).items() if k not in ("func", "command", "format", "quiet", "out")}
    params = {("from" if k == "from_" else k): v for k, v in params.items()}
    try:
        res = args.func(args)
    except (QbinmodError, UsageError) as exc:
        print(f"qbinmod {args.command}: {exc}", file=sys.stderr)
        return 2
    text = render(args.command, params, res, args.format)
    sys.stdout.write(text)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    return 0 if res.ok else 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
