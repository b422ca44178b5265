"""Regenerate tests/golden/*.out from tests/golden/cases.json.

Review the diff by hand before committing: the golden files are the contract.
"""
import argparse
import io
import json
from pathlib import Path

from nyldon.cli import run

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--check", action="store_true", help="only report mismatches")
    args = ap.parse_args()
    cases = json.loads((GOLDEN / "cases.json").read_text())
    bad = 0
    for case in cases:
        out, err = io.StringIO(), io.StringIO()
        code = run(case["argv"], out, err, io.StringIO(case.get("stdin", "")))
        path = GOLDEN / f"{case['name']}.out"
        if code != case["exit"]:
            print(f"{case['name']}: exit {code}, expected {case['exit']}")
            bad += 1
        if args.check:
            if not path.exists() or path.read_text() != out.getvalue():
                print(f"{case['name']}: stdout differs")
                bad += 1
        else:
            path.write_text(out.getvalue())
    print(f"{len(cases)} cases, {bad} problems")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
