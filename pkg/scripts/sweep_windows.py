#!/usr/bin/env python3
"""Tabulate verdict tallies across the classified coefficient windows.

For each n in the requested range this sweeps every reduced p/q with
q <= bound inside [(2n-1)/2n^2, 2/(2n+1)) and checks the tallies against
the closed-form prediction in terms of phi(r).  The two low-n windows
[9/25, 4/11) and [13/49, 4/15) are swept as well.
"""

import argparse
from fractions import Fraction
from math import gcd

from fareytight.slopes import make_slope
from fareytight.tori import phi
from fareytight.atlas import Fillability, verdict_summary


def rationals_in(lo: Fraction, hi: Fraction, bound: int):
    for q in range(2, bound + 1):
        p_min = -((-lo.numerator * q) // lo.denominator)
        p_max = -((-hi.numerator * q) // hi.denominator) - 1
        for p in range(max(p_min, 1), p_max + 1):
            if gcd(p, q) == 1:
                yield make_slope(p, q)


def predicted(n: int, f: int) -> dict:
    if n <= 3:  # whole triangle Stein in the low-n windows
        return {Fillability.STEIN: n * (n + 1) // 2 * f}
    return {
        Fillability.STEIN: (2 * n - 1) * f,
        Fillability.STRONG_STEIN_CONDITIONAL: (n - 2) * f,
        Fillability.STRONG_NOT_EXACT: (n - 3) * (n - 2) // 2 * f,
    }


def sweep(label: str, lo: Fraction, hi: Fraction, bound: int, expect) -> int:
    bad = 0
    rows = 0
    for r in rationals_in(lo, hi, bound):
        summary = verdict_summary(r)
        want = expect(phi(r))
        mark = "" if summary == want else "  <- MISMATCH"
        if mark:
            bad += 1
        cells = ["%s=%d" % (status.json_key, cnt) for status, cnt in summary.items()]
        print("%-10s %-9s %s%s" % (label, r, " ".join(cells), mark))
        rows += 1
    print("%-10s %d slopes, %d mismatches" % (label, rows, bad))
    return bad


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--bound", type=int, default=120, help="max denominator")
    ap.add_argument("--n-min", type=int, default=2)
    ap.add_argument("--n-max", type=int, default=8)
    args = ap.parse_args()

    bad = 0
    for n in range(args.n_min, args.n_max + 1):
        lo = Fraction(2 * n - 1, 2 * n * n)
        hi = Fraction(2, 2 * n + 1)
        bad += sweep("n=%d" % n, lo, hi, args.bound, lambda f, n=n: predicted(n, f))
    bad += sweep(
        "n=2 low",
        Fraction(9, 25),
        Fraction(4, 11),
        args.bound,
        lambda f: {Fillability.STEIN: 2 * f + 2, Fillability.STRONG_NOT_EXACT: f - 2},
    )
    bad += sweep(
        "n=3 low",
        Fraction(13, 49),
        Fraction(4, 15),
        args.bound,
        lambda f: {Fillability.STEIN: 5 * f + 2, Fillability.STRONG_NOT_EXACT: f - 2},
    )
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
