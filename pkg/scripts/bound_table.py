#!/usr/bin/env python3
"""Print the disjoint-conic ceiling against 3a^2 on the diagonal 3..30.

The third column is the exact rational bound, the fourth its floor, and the
last the margin over 3a^2 (always positive in this range).
"""

from fractions import Fraction

from flagcalc.invariants import miyaoka_conic_bound, ruling_curve_bound


def main():
    print(f"{'a':>3} {'3a^2':>6} {'conic bound':>16} {'floor':>6} {'margin':>12} {'ruling floor':>13}")
    for a in range(3, 31):
        value, floor = miyaoka_conic_bound(a, a)
        _, rfloor = ruling_curve_bound(a, a)
        margin = value - 3 * a * a
        print(f"{a:>3} {3*a*a:>6} {str(value):>16} {floor:>6} {str(Fraction(margin)):>12} {rfloor:>13}")


if __name__ == "__main__":
    main()
