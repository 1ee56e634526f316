"""Run the full verification suite at several orders and tabulate timings and statuses."""

from __future__ import annotations

import argparse
import json

from periodcheck.checks import SuiteOptions, run_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--orders", type=int, nargs="+", default=[16, 32, 64])
    ap.add_argument("--prime", type=int, default=2)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    rows = []
    for order in args.orders:
        rep = run_suite(None, SuiteOptions(order=order, prime=args.prime))
        rows.append({"order": order, "wall_time": round(rep.wall_time, 3), **rep.summary})
        if not args.json:
            s = rep.summary
            print(f"order {order:>4}: {s['pass']:>2} pass  {s['fail']} fail  {s['expected-fail']} expected-fail  {rep.wall_time:6.2f}s")
            for c in rep.checks:
                if c.status != "pass":
                    print(f"    {c.check_name} {c.params} -> {c.status}: {c.witness}")
    if args.json:
        print(json.dumps(rows, indent=2))


if __name__ == "__main__":
    main()
