"""Run every claim at its default range and write the reports as JSON."""
import argparse
import json
import sys

from nyldon import theorems


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-o", "--output", default="verification_report.json")
    ap.add_argument("--corrected-table", action="store_true",
                    help="also run family-table with rows 9/10 prefixed by t1(k)")
    args = ap.parse_args(argv)

    reports = theorems.run_all()
    if args.corrected_table and reports[0].passed:
        extra = theorems.verify_family_table(table="corrected")
        extra.claim = "family-table[corrected]"
        reports.append(extra)
    for r in reports:
        print(r.summary())
    with open(args.output, "w") as fh:
        json.dump([r.to_dict() for r in reports], fh, indent=2)
    print(f"wrote {args.output}")
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
