"""Exact phase comparison and Laurent rational functions.

Every ordering decision in this package reduces to integer cross
products, and every series coefficient is a ratio of integer Laurent
polynomials kept in canonical form.  This script walks through both
layers.
"""

from fractions import Fraction

from hallq import (
    GaussianRational,
    LaurentPoly,
    RationalFunction,
    phase_lt,
    rf_eq,
    rf_eval,
    rf_mul,
)


def g(re, im):
    return GaussianRational(Fraction(re), Fraction(im))


def main():
    print("== phases without floating point ==")
    z, w = g(2, 1), g(1, 2)
    print(f"z = {z}, w = {w}")
    print(f"arg z < arg w?  {phase_lt(z, w)}  (cross product {z.cross(w)})")
    # scaling never changes a phase
    same = not phase_lt(z, z.scale(3)) and not phase_lt(z.scale(3), z)
    print(f"arg(3z) == arg(z) ordering: {same}")

    print()
    print("== Laurent polynomials ==")
    t = LaurentPoly.t_power(1)
    q = LaurentPoly.q_power(1)  # q = t^2
    print(f"t * t = {t * t}")
    print(f"q - 1 = {q - LaurentPoly.one()}")
    print(f"(t + t^-1)^2 = {(t + LaurentPoly.t_power(-1)) ** 2}")

    print()
    print("== rational functions in canonical form ==")
    a = RationalFunction(LaurentPoly(1, [2]), LaurentPoly(0, [-2, 0, 2]))
    b = RationalFunction(LaurentPoly(1, [1]), LaurentPoly(0, [-1, 0, 1]))
    print(f"2t/(2t^2-2) prints as {a}")
    print(f"t/(t^2-1)  prints as {b}")
    print(f"equal? {rf_eq(a, b)}")
    print(f"product with its reciprocal: {rf_mul(b, b.inv())}")
    print(f"value at t = 2: {rf_eval(b, 2)}")


if __name__ == "__main__":
    main()
