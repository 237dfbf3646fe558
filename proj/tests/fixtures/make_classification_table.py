#!/usr/bin/env python3
"""Writes the expected classification grid as CSV.

Transcribed directly from the case list: for l - r + 1 = n the positive
tuples are

    (1, l, l, d)        d >= l >= 1
    (2, 2, 1, d)        d >= 1
    (2, 3, 2, d)        d >= 2
    (2, 4, 3, d)        d >= 3
    (2, 5, 4, d)        d >= 5
    (n, n, 1, d)        n >= 3, d >= 1
    (n, n+1, 2, d)      n >= 3, d >= 2
    (n, n+2, 3, d)      n >= 3, d >= 3

every other tuple with l - r + 1 = n fails (the count l*n - C(l, n) < 0
rules out n = 2, l >= 6 and n >= 3, l >= n + 3; (2, 5, 4, 4) is the one
finite exception). l - r + 1 > n: every form decomposes. l - r + 1 < n:
negative for d large, unknown at any given d.

Usage: make_classification_table.py NMAX LSPAN DMAX > table.csv
"""
import sys
from math import comb

POSITIVE = {
    # (n, l) -> (label, minimal d)
    (2, 2): ("(2)(ii)", 1),
    (2, 3): ("(2)(iii)", 2),
    (2, 4): ("(2)(iv)", 3),
    (2, 5): ("(2)(v)", 5),
}


def classify(n, l, r, d):
    if r > l or r > d:
        return "Infeasible", "restriction", ""
    c = l - r + 1
    if c > n:
        return "AlwaysYes", "(3)", ""
    if c < n:
        return "GenericNoLargeD/Unknown", "(1)", ""
    bound = str(l * n - comb(l, n))
    if n == 1:
        return "GenericYes", "(2)(i)", bound
    if n == 2:
        if (n, l) in POSITIVE:
            label, dmin = POSITIVE[(n, l)]
            return ("GenericYes" if d >= dmin else "GenericNo"), label, bound
        return "GenericNo", "bound", bound
    extra = {0: "(2)(vi)", 1: "(2)(vii)", 2: "(2)(viii)"}.get(l - n)
    if extra is not None:
        return "GenericYes", extra, bound
    return "GenericNo", "bound", bound


def main():
    nmax, lspan, dmax = (int(a) for a in sys.argv[1:4])
    out = ["n,l,r,d,verdict,case,bound"]
    for n in range(1, nmax + 1):
        for l in range(1, n + lspan + 1):
            for r in range(1, l + 1):
                for d in range(1, dmax + 1):
                    v, case, bound = classify(n, l, r, d)
                    out.append(f"{n},{l},{r},{d},{v},{case},{bound}")
    sys.stdout.write("\n".join(out) + "\n")


if __name__ == "__main__":
    main()
