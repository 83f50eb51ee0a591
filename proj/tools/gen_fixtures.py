#!/usr/bin/env python3
"""Regenerate the bundled b-file fixtures under tests/fixtures/.

The coefficients of exp(m e^{bx} + r e^{dx} + s) with m + r + s = 0 factor as

    exp(m (e^{bx} - 1)) * exp(r (e^{dx} - 1)),

and exp(y (e^{cx} - 1)) has e.g.f. coefficients c^n T_n(y), where T_n is the
Touchard polynomial sum_k S(n, k) y^k.  So

    a(n) = sum_k C(n, k) b^k T_k(m) d^(n-k) T_(n-k)(r).

This route shares nothing with the C++ convolution recurrence, which is the
point: the fixtures act as reference data for the coefficient engine.
"""

import argparse
import pathlib
from fractions import Fraction
from math import comb

FAMILIES = {
    "A143405": (Fraction(1), 2, 1, Fraction(-1), Fraction(0)),
    "A355291": (Fraction(1), 2, 1, Fraction(1), Fraction(-2)),
    "A002872": (Fraction(1, 2), 2, 1, Fraction(1), Fraction(-3, 2)),
    "A002874": (Fraction(1, 3), 3, 1, Fraction(1), Fraction(-4, 3)),
}


def stirling2_rows(n_max):
    rows = [[1]]
    for n in range(1, n_max + 1):
        prev = rows[-1]
        row = [0] * (n + 1)
        for k in range(1, n + 1):
            row[k] = (prev[k - 1] if k - 1 < len(prev) else 0) + k * (prev[k] if k < len(prev) else 0)
        rows.append(row)
    return rows


def touchard(rows, y):
    out = []
    for row in rows:
        acc = Fraction(0)
        p = Fraction(1)
        for k, s in enumerate(row):
            if k:
                p *= y
            acc += s * p
        out.append(acc)
    return out


def coefficients(params, n_max):
    m, b, d, r, s = params
    assert m + r + s == 0
    rows = stirling2_rows(n_max)
    tm = touchard(rows, m)
    tr = touchard(rows, r)
    out = []
    for n in range(n_max + 1):
        acc = Fraction(0)
        for k in range(n + 1):
            acc += comb(n, k) * b**k * tm[k] * d ** (n - k) * tr[n - k]
        assert acc.denominator == 1
        out.append(acc.numerator)
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--terms", type=int, default=500)
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "tests" / "fixtures"))
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for anum, params in FAMILIES.items():
        vals = coefficients(params, args.terms)
        path = out / f"b{anum[1:]}.txt"
        with path.open("w") as fh:
            fh.write(f"# {anum}: a(0..{args.terms}), generated by tools/gen_fixtures.py\n")
            for i, v in enumerate(vals):
                fh.write(f"{i} {v}\n")
        print(path)


if __name__ == "__main__":
    main()
