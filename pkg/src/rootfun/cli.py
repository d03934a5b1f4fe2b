"""Command line driver: ``rootfun solve`` and ``rootfun oracle``.

Exit codes: 0 success, 1 a ``--verify`` invariant failed, 2 the system is not
zero-dimensional, 3 the input could not be read or parsed, 4 an oracle check
disagreed.
"""

from __future__ import annotations

import argparse
import logging
import sys

from .fields import NotPrime
from .oracle import DEFAULT_SLACK, run_oracle_checks
from .poly import InvalidSystem
from .solver import NotZeroDimensional, solve
from .textio import Certificate, RootFixture, SystemFileError, format_result_text, parse_system

EXIT_OK, EXIT_VERIFY, EXIT_NZD, EXIT_PARSE, EXIT_ORACLE = 0, 1, 2, 3, 4


def _load(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
        return parse_system(text)
    except (OSError, UnicodeDecodeError, SystemFileError, NotPrime, InvalidSystem) as e:
        print(f"rootfun: {path}: {e}", file=sys.stderr)
        return None


def cmd_solve(args) -> int:
    loaded = _load(args.file)
    if loaded is None:
        return EXIT_PARSE
    _, system = loaded
    try:
        res = solve(system, fast_path=not args.no_fast_path, verify=args.verify)
    except NotZeroDimensional as e:
        print(f"rootfun: NotZeroDimensional: {e}", file=sys.stderr)
        return EXIT_NZD
    if args.out == "text":
        sys.stdout.write(format_result_text(res))
    else:
        sys.stdout.write(Certificate.from_result(res).to_json())
    if res.verification is not None and not all(res.verification.values()):
        failed = [k for k, v in res.verification.items() if not v]
        print("rootfun: verification failed: " + ", ".join(failed), file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_oracle(args) -> int:
    loaded = _load(args.fixture)
    if loaded is None:
        return EXIT_PARSE
    sf, system = loaded
    try:
        rows = run_oracle_checks(RootFixture(system, sf.roots), args.delta_max, args.slack)
    except NotZeroDimensional as e:
        print(f"rootfun: NotZeroDimensional: {e}", file=sys.stderr)
        return EXIT_NZD
    width = max(len(r[0]) for r in rows)
    for name, ok, detail in rows:
        line = f"{'PASS' if ok else 'FAIL'}  {name:<{width}}"
        if detail:
            line += f"  ({detail})"
        print(line.rstrip())
    return EXIT_OK if all(r[1] for r in rows) else EXIT_ORACLE


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rootfun", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="root functionals, ideal slice and unit functional of a system file")
    s.add_argument("file")
    s.add_argument("--out", choices=("json", "text"), default="json")
    s.add_argument("--verify", action="store_true", help="run the invariant suite and embed the report")
    s.add_argument("--no-fast-path", action="store_true",
                   help="take d-th powers and all d^2 products instead of stopping at the first repeated span")
    s.set_defaults(func=cmd_solve)

    o = sub.add_parser("oracle", help="cross-check a fixture file against brute-force oracles")
    o.add_argument("fixture")
    o.add_argument("--delta-max", type=int, default=2)
    o.add_argument("--slack", type=int, default=DEFAULT_SLACK)
    o.set_defaults(func=cmd_oracle)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
