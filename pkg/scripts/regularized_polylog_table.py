"""Tabulate the regularized polylog near s = 1 and its finite part against log|x/(e^x - 1)|."""

from __future__ import annotations

import math

from periodcheck import polylog


def main():
    print("(1 - s) * li~_s(0.5) as s -> 1")
    for k in (4, 8, 12, 16, 20):
        for s in (1 - 2.0**-k, 1 + 2.0**-k):
            print(f"  s = 1 {'-' if s < 1 else '+'} 2^-{k:<2}  {(1 - s) * polylog.li_s_regularized(s, 0.5): .12f}")
    print("\nfinite part minus log|x/(e^x - 1)|")
    for x in (0.1, 0.5, 1.0, 2.0, 4.0, 6.0):
        pole, finite = polylog.regularized_laurent_at_one(x)
        print(f"  x = {x:<4}  pole {pole: .9f}  offset {finite - math.log(abs(x / math.expm1(x))):.12f}")


if __name__ == "__main__":
    main()
