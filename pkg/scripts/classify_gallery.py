#!/usr/bin/env python3
"""Classify a gallery of generators and print the decision for each.

The gallery covers every branch of the decision tree: the zero and unit
generators, integers of modulus >= 2, the two square-root families, a
generator small at the selected embedding but large at a conjugate, the
boundary case 1+i with |ab| = 1 exactly, a cubic with one qualifying
complex root and one open real root, and the declared-transcendental
path.
"""

import sys
from fractions import Fraction

from quiddity.classify import classify
from quiddity.numfield import BoxC, field_make
from quiddity.polynomials import QPoly

GALLERY = [
    ("0", QPoly((0, 1)), None),
    ("1", QPoly((-1, 1)), None),
    ("-1", QPoly((1, 1)), None),
    ("2", QPoly((-2, 1)), None),
    ("-3", QPoly((3, 1)), None),
    ("sqrt2", QPoly((-2, 0, 1)), BoxC.make(1, 2, 0, 0)),
    ("sqrt3", QPoly((-3, 0, 1)), BoxC.make(Fraction(3, 2), 2, 0, 0)),
    ("1-sqrt2", QPoly((-1, -2, 1)), BoxC.make(-1, 0, 0, 0)),
    ("1+sqrt2", QPoly((-1, -2, 1)), BoxC.make(2, 3, 0, 0)),
    ("(1-sqrt11)/2", QPoly((Fraction(-5, 2), -1, 1)), BoxC.make(-2, -1, 0, 0)),
    ("1+i", QPoly((2, -2, 1)), BoxC.make(0, 1, Fraction(1, 2), 2)),
    ("1+i*sqrt3", QPoly((4, -2, 1)), BoxC.make(0, 2, 1, 2)),
    ("eighth root of unity", QPoly((1, 0, 0, 0, 1)), BoxC.make(0, 1, 0, 1)),
    ("1/sqrt2", QPoly((Fraction(-1, 2), 0, 1)), BoxC.make(0, 1, 0, 0)),
    ("golden ratio", QPoly((-1, -1, 1)), BoxC.make(Fraction(3, 2), 2, 0, 0)),
    ("cubic complex root", QPoly((-6, 1, 0, 1)), BoxC.make(-2, 0, 1, 2)),
    ("cubic real root", QPoly((-6, 1, 0, 1)), BoxC.make(1, 2, 0, 0)),
]


def main() -> int:
    width = max(len(label) for label, _, _ in GALLERY)
    for label, poly, hint in GALLERY:
        outcome = classify(field_make(poly, root_hint=hint))
        tag = outcome.family
        if outcome.justification and outcome.justification != "SpecialTable":
            tag += f" ({outcome.justification})"
        if outcome.sqrt_k:
            tag += f" [k={outcome.sqrt_k}]"
        print(f"  {label:<{width}}  {tag}")
    outcome = classify(None, transcendental=True)
    print(f"  {'<declared transcendental>':<{width}}  "
          f"{outcome.family} ({outcome.justification})")
    return 0


if __name__ == "__main__":
    sys.exit(main())
