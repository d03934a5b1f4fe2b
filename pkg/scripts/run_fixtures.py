"""Solve every fixture file in a directory and print a one-line summary per system."""

import argparse
import pathlib
import time

from rootfun import NotZeroDimensional, solve
from rootfun.textio import parse_system


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("directory", nargs="?", default=pathlib.Path(__file__).parent.parent / "tests" / "fixtures")
    ap.add_argument("--no-fast-path", action="store_true")
    args = ap.parse_args()
    for path in sorted(pathlib.Path(args.directory).glob("*.sys")):
        _, sys = parse_system(path.read_text())
        t = time.perf_counter()
        try:
            res = solve(sys, fast_path=not args.no_fast_path, verify=True)
        except NotZeroDimensional as e:
            print(f"{path.stem:<16} not zero-dimensional: {e}")
            continue
        ok = all(res.verification.values())
        print(f"{path.stem:<16} D={res.D:<3} roots={len(res.root_basis):<3} slice={len(res.ideal_slice):<3} "
              f"verify={'ok' if ok else 'FAIL'}  {time.perf_counter() - t:.3f}s")


if __name__ == "__main__":
    main()
