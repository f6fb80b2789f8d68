"""Command-line front end.

Exit codes: 0 ok, 1 verification failure, 2 usage or parse error,
3 domain precondition (e.g. input is not a parking function), 4 resource cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import counting, lattice, maps, verify
from .errors import NotParking, ParamOutOfRange, ParkstatError, ResourceCap
from .trees import RootedTree
from .words import Word, center, coimage, is_parking, is_rook, reduced_image, run, run_set, z

SCHEMA_VERSION = "1"
MAX_WORDS = 10**8
MAX_TREES = 10**7

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN, EXIT_CAP = 0, 1, 2, 3, 4


def _ints(text):
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _nrange(text):
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return list(range(int(lo), int(hi) + 1))
        return [int(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO..HI, got {text!r}") from None


def _fmt_set(xs):
    return "{" + ",".join(map(str, xs)) + "}"


def _brute_cap(n, force):
    """Library cap to pass down, after checking the CLI size limits."""
    if force:
        return False
    env = os.environ.get("PARKSTAT_CAP")
    if env is not None:
        if n > int(env):
            raise ResourceCap(f"n={n} exceeds PARKSTAT_CAP={env}; use --force")
        return False
    if n**n > MAX_WORDS or (n + 1) ** (n - 1) > MAX_TREES:
        raise ResourceCap(f"brute force at n={n} exceeds the default size limits; use --force")
    return False


# ---------------------------------------------------------------- commands


def cmd_stats(args):
    w = Word.parse(args.word)
    return {
        "word": str(w),
        "z": z(w),
        "Z": list(center(w)),
        "run": run(w),
        "Run": list(run_set(w)),
        "parking": is_parking(w),
        "rook": is_rook(w),
        "rim": list(reduced_image(w)),
        "coimage": str(coimage(w)),
    }


def _need(args, attr, kind):
    value = getattr(args, attr)
    if value is None:
        raise argparse.ArgumentTypeError(f"--kind {kind} needs --{attr}")
    return value


def cmd_map(args):
    kind = args.kind
    if kind == "burn":
        trace = maps.dfs_burn(Word.parse(_need(args, "word", kind)))
        return trace.to_json()
    if kind == "unburn":
        return {"word": str(maps.unburn(RootedTree.parse(_need(args, "tree", kind))))}
    if kind == "t-code":
        return {"code": ",".join(map(str, maps.t_code(_ints(_need(args, "perm", kind)))))}
    if kind == "t-decode":
        return {"perm": ",".join(map(str, maps.t_decode(_ints(_need(args, "code", kind)))))}
    w = Word.parse(_need(args, "word", kind))
    f = {"phi": maps.phi, "psi": maps.psi, "cyclic": maps.cyclic_to_rook}[kind]
    return {"word": str(f(w))}


STAT_TO_ENUM = {"leg": counting.lt, "center": counting.zp, "run-pf": counting.rp, "run-rw": counting.rr}


def cmd_count(args):
    n = args.n
    if n < 1:
        raise ParamOutOfRange(f"n must be positive, got {n}")
    if args.r is not None and not 1 <= args.r <= n:
        raise ParamOutOfRange(f"need 1 <= r <= n, got r={args.r}")
    if args.method == "closed":
        if args.r is not None:
            return {"n": n, "r": args.r, "value": str(counting.coeff_inclusion_exclusion(n, args.r))}
        e = counting.closed_form(n)
    else:
        cap = _brute_cap(n, args.force)
        e = STAT_TO_ENUM[args.stat](n, workers=args.threads, cap=cap)
    if args.r is not None:
        return {"n": n, "r": args.r, "value": str(e[args.r])}
    return {"n": n, "coeffs": [str(e[r]) for r in range(1, n + 1)]}


def cmd_lattice(args):
    c = lattice.Composition(args.parts)
    if args.op == "count":
        count = lattice.count_brute if args.method == "brute" else lattice.count_det
        return {"parts": str(c), "value": str(count(c))}
    if args.r is None or args.t is None:
        raise ParamOutOfRange("lattice sum needs --r and --t")
    count = lattice.count_brute if args.method == "brute" else lattice.count_det
    terms = lattice.cyclic_terms(c, args.r, args.t)
    values = [count(term) if term[0] > 0 else 0 for term in terms]
    return {
        "parts": str(c),
        "r": args.r,
        "t": args.t,
        "terms": [[",".join(map(str, term)), str(v)] for term, v in zip(terms, values)],
        "value": str(sum(values)),
    }


def cmd_verify(args):
    for n in args.n:
        if n < 1:
            raise ParamOutOfRange(f"n must be positive, got {n}")
        _brute_cap(n, args.force)
    return verify.run_suite(args.n, seed=args.seed, workers=args.threads, cap=False)


def cmd_export(args):
    t = RootedTree.parse(args.tree)
    return {"format": "dot", "document": t.to_dot()}


# ---------------------------------------------------------------- output


def _plain(command, result):
    if command == "verify":
        lines = []
        for rep in result.reports:
            lines.append(f"n={rep.n}")
            for name in counting.KINDS:
                lines.append(f"  {name.upper():<3} {rep.enumerators[name]}")
            for c in rep.checks:
                lines.append(f"  [{'PASS' if c.passed else 'FAIL'}] {c.name}")
        for c in result.extra:
            detail = f"  ({c.detail})" if c.detail else ""
            lines.append(f"[{'PASS' if c.passed else 'FAIL'}] {c.name}{detail}")
        lines.append("ALL PASS" if result.passed else "FAILURES")
        return "\n".join(lines)
    if command == "export":
        return result["document"].rstrip("\n")
    if command == "count" and "coeffs" in result:
        return ",".join(result["coeffs"])
    if command == "lattice" and "terms" in result:
        lines = [f"<{term}> = {v}" for term, v in result["terms"]]
        lines.append(f"sum = {result['value']}")
        return "\n".join(lines)
    if "value" in result and command in ("count", "lattice"):
        return result["value"]
    if command == "map" and len(result) == 1:
        return next(iter(result.values()))
    width = max(len(k) for k in result)
    out = []
    for key, value in result.items():
        if isinstance(value, list) and key in ("Z", "Run", "rim"):
            value = _fmt_set(value) if key != "rim" else "(" + ",".join(map(str, value)) + ")"
        elif isinstance(value, bool):
            value = str(value).lower()
        elif isinstance(value, list):
            value = " ".join(map(str, value))
        out.append(f"{key:<{width}}  {value}")
    return "\n".join(out)


def _jsonable(result):
    if hasattr(result, "to_dict"):
        return result.to_dict()
    return result


def build_parser():
    # subcommands accept --json too; SUPPRESS keeps them from resetting the top-level flag
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit a versioned JSON envelope")

    parser = argparse.ArgumentParser(
        prog="parkstat", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter
    )
    parser.add_argument("--json", action="store_true", help="emit a versioned JSON envelope")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", parents=[common], help="word statistics")
    p.add_argument("--word", required=True)

    p = sub.add_parser("map", parents=[common], help="apply a bijection")
    p.add_argument("--kind", required=True, choices=["burn", "unburn", "phi", "psi", "t-code", "t-decode", "cyclic"])
    p.add_argument("--word")
    p.add_argument("--tree", help="parent list p_1,...,p_n")
    p.add_argument("--perm")
    p.add_argument("--code")

    p = sub.add_parser("count", parents=[common], help="enumerator coefficients")
    p.add_argument("--stat", required=True, choices=list(STAT_TO_ENUM))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--method", choices=["brute", "closed"], default="brute")
    p.add_argument("--threads", type=int, default=1, help="worker processes for brute force")
    p.add_argument("--force", action="store_true", help="ignore enumeration size limits")

    p = sub.add_parser("lattice", parents=[common], help="restricted sequence counts")
    p.add_argument("op", choices=["count", "sum"])
    p.add_argument("--parts", type=_ints, required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--method", choices=["det", "brute"], default="det")

    p = sub.add_parser("verify", parents=[common], help="machine-check every theorem")
    p.add_argument("--n", type=_nrange, default=[1, 2, 3, 4, 5])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1, help="worker processes for brute force")
    p.add_argument("--force", action="store_true")

    p = sub.add_parser("export", parents=[common], help="export a tree")
    p.add_argument("--tree", required=True)
    p.add_argument("--format", choices=["dot"], default="dot")
    return parser


COMMANDS = {
    "stats": cmd_stats,
    "map": cmd_map,
    "count": cmd_count,
    "lattice": cmd_lattice,
    "verify": cmd_verify,
    "export": cmd_export,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        result = COMMANDS[args.command](args)
    except NotParking as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ResourceCap as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ParkstatError, argparse.ArgumentTypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    elapsed_ms = int((time.perf_counter() - start) * 1000)

    if args.json:
        envelope = {
            "schema_version": SCHEMA_VERSION,
            "command": args.command,
            "result": _jsonable(result),
            "elapsed_ms": elapsed_ms,
        }
        print(json.dumps(envelope, indent=2))
    else:
        print(_plain(args.command, result))

    if args.command == "verify" and not result.passed:
        return EXIT_FAIL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
