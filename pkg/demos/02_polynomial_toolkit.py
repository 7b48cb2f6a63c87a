#!/usr/bin/env python3
"""The exact polynomial toolkit: Poly1/Poly2 algebra, substitution,
exact division by (x - y), and the forward difference operators.
"""

from fractions import Fraction

from bepoly import (
    ExactDivisionError,
    Poly1,
    Poly2,
    bernoulli_poly,
    delta,
    delta_star,
    euler_poly,
    solve_delta_star,
)


def main():
    x1 = Poly1.variable()
    print("Univariate algebra:")
    p = (x1 - Fraction(1, 2)) ** 2
    print(f"  (x - 1/2)^2        = {p}")
    print(f"  derivative         = {p.derivative()}")
    print(f"  shifted to x + 1   = {p.compose_affine(1, 1)}")
    print(f"  value at 3/4       = {p(Fraction(3, 4))}")

    X, Y = Poly2.variable("x"), Poly2.variable("y")
    print("\nBivariate algebra:")
    q = (X + Y) * (X - Y)
    print(f"  (x+y)(x-y)         = {q}")
    print(f"  d/dx               = {q.partial('x')}")
    print(f"  y := x + y         = {q.subst('y', X + Y)}")
    print(f"  diagonal y = x     = {q.diagonal()}")

    print("\nExact division by (x - y):")
    b4 = bernoulli_poly(4)
    diff = b4.as_poly2("x") - b4.as_poly2("y")
    quotient = diff.div_xminusy()
    print(f"  (B_4(x) - B_4(y)) / (x - y) = {quotient}")
    try:
        (X + Y).div_xminusy()
    except ExactDivisionError as exc:
        print(f"  x + y is not divisible: {exc}")

    print("\nForward difference and forward sum:")
    print("  delta(B_n) = n x^(n-1) and delta_star(E_n) = 2 x^n:")
    for n in range(1, 6):
        print(f"    n={n}:  {delta(bernoulli_poly(n))}   |   {delta_star(euler_poly(n))}")

    print("\ndelta_star is invertible on polynomials; solving recovers E_3:")
    target = Poly1.monomial(3, 2)  # 2 x^3
    print(f"  solve_delta_star(2 x^3) = {solve_delta_star(target)}")
    print(f"  euler_poly(3)           = {euler_poly(3)}")


if __name__ == "__main__":
    main()
