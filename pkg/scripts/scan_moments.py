"""Divided moments across s, against zeta(s), with the cutoff scan below s = 1."""

from __future__ import annotations

import argparse

from periodcheck import polylog


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--s", type=float, nargs="+", default=[0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 2, 3, 4, 6, 8])
    args = ap.parse_args()

    print(f"{'s':>6}  {'moment':>20}  {'zeta(s)':>20}  {'|diff|':>9}  note")
    for s in args.s:
        m = polylog.divided_moment(s)
        z = polylog.zeta(s) if s != 1 else float("nan")
        if m.status == "divergent":
            d = m.diagnostic
            print(f"{s:>6}  {'divergent':>20}  {z:>20.15g}  {'':>9}  cutoff slope {d['slope']:.4f} (expect {d['expected_slope']:.4f}, {d['kind']})")
        else:
            print(f"{s:>6}  {m.value:>20.15g}  {z:>20.15g}  {abs(m.value - z):9.1e}  est. error {m.est_error:.1e}")


if __name__ == "__main__":
    main()
