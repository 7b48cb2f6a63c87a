"""Forward-difference calculus on polynomials.

Two step-1 operators act along a chosen axis:

    delta(f)      = f(. + 1) - f        (forward difference)
    delta_star(f) = f(. + 1) + f        (forward sum)

Both satisfy exact product rules, delta annihilates exactly the
constants, and delta_star is invertible on polynomials (its matrix on
the monomial basis is upper triangular with 2s on the diagonal).
Bernoulli and Euler polynomials are eigenfunction-like for them:
delta(B_n) = n x^{n-1} and delta_star(E_n) = 2 x^n.

The module also provides the shift-convolution summation identities

    sum_{k=1}^{n} B_k(x+y)/k * x^{n-k}
        = sum_{l=1}^{n} C(n,l) B_l(y)/l * x^{n-l} + H_n x^n
    sum_{k=0}^{n} E_k(x+y) * x^{n-k}
        = sum_{l=0}^{n} C(n+1,l+1) E_l(y) * x^{n-l}

plus the deliberately wrong first variant with the binomial weight
dropped (a negative control for the verification harness), and Chu's
hockey-stick identity sum_{k=l}^{n} C(k-1,l-1) = C(n,l) that proves
the first summation.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .arith import Rat, binomial
from .polynomials import Poly1, Poly2
from .sequences import bernoulli_poly, euler_poly, harmonic

__all__ = [
    "DiffOperator",
    "delta",
    "delta_star",
    "solve_delta_star",
    "check_product_rules",
    "bernoulli_shift_sum",
    "bernoulli_shift_sum_unweighted",
    "euler_shift_sum",
    "chu_identity",
]


def _shift_one(p: Poly1 | Poly2, axis: str) -> Poly1 | Poly2:
    if isinstance(p, Poly1):
        return p.compose_affine(1, 1)
    return p.subst(axis, Poly2.variable(axis) + 1)


@dataclass(frozen=True)
class DiffOperator:
    """A forward difference (kind='delta') or sum (kind='delta_star')
    acting along one axis; the axis only matters for bivariate input."""

    kind: str
    axis: str = "x"

    def __post_init__(self):
        if self.kind not in ("delta", "delta_star"):
            raise ValueError(f"kind must be 'delta' or 'delta_star', got {self.kind!r}")
        if self.axis not in ("x", "y"):
            raise ValueError(f"axis must be 'x' or 'y', got {self.axis!r}")

    def __call__(self, p: Poly1 | Poly2) -> Poly1 | Poly2:
        shifted = _shift_one(p, self.axis)
        return shifted - p if self.kind == "delta" else shifted + p


def delta(p: Poly1 | Poly2, axis: str = "x") -> Poly1 | Poly2:
    """f(. + 1) - f along the given axis."""
    return DiffOperator("delta", axis)(p)


def delta_star(p: Poly1 | Poly2, axis: str = "x") -> Poly1 | Poly2:
    """f(. + 1) + f along the given axis."""
    return DiffOperator("delta_star", axis)(p)


def solve_delta_star(target: Poly1) -> Poly1:
    """The unique polynomial P with P(x+1) + P(x) equal to the target.

    Back-substitution from the top degree down; existence and
    uniqueness follow from the operator's triangular matrix having
    nonzero diagonal.
    """
    n = target.degree
    if n < 0:
        return Poly1()
    coeffs = [Rat(0)] * (n + 1)
    for i in range(n, -1, -1):
        t = target.coeff(i)
        for j in range(i + 1, n + 1):
            t -= comb(j, i) * coeffs[j]
        coeffs[i] = t / 2
    return Poly1(coeffs)


def check_product_rules(p: Poly1, q: Poly1) -> bool:
    """Exact check of the three product rules for delta and delta_star:

        delta(PQ)      = P delta(Q) + Q delta(P) + delta(P) delta(Q)
                       = delta_star(P) delta_star(Q) - P delta_star(Q)
                                                     - Q delta_star(P)
        delta_star(PQ) = delta(P) delta_star(Q) + P delta_star(Q)
                                                - Q delta(P)

    These hold for every pair; the function exists as a test oracle.
    """
    dp, dq = delta(p), delta(q)
    sp, sq = delta_star(p), delta_star(q)
    d_pq = delta(p * q)
    s_pq = delta_star(p * q)
    return (
        d_pq == p * dq + q * dp + dp * dq
        and d_pq == sp * sq - p * sq - q * sp
        and s_pq == dp * sq + p * sq - q * dp
    )


def bernoulli_shift_sum(n: int) -> tuple[Poly2, Poly2]:
    """Both sides of the Bernoulli shift-convolution identity.

    LHS = sum_{k=1}^{n} B_k(x+y)/k * x^{n-k},
    RHS = sum_{l=1}^{n} C(n,l) B_l(y)/l * x^{n-l} + H_n x^n.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    lhs = Poly2.zero()
    for k in range(1, n + 1):
        lhs += bernoulli_poly(k).compose_xy(1, 1) * Poly2.monomial(n - k, 0, Rat(1, k))
    rhs = Poly2.monomial(n, 0, harmonic(n))
    for l in range(1, n + 1):
        w = binomial(n, l) / l
        rhs += bernoulli_poly(l).as_poly2("y") * Poly2.monomial(n - l, 0, w)
    return lhs, rhs


def bernoulli_shift_sum_unweighted(n: int) -> tuple[Poly2, Poly2]:
    """The same sum with the C(n,l) weight dropped from the right side.

    This version is FALSE for n >= 2; it is kept as the negative
    control that demonstrates the zero-test has teeth.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    lhs, _ = bernoulli_shift_sum(n)
    rhs = Poly2.monomial(n, 0, harmonic(n))
    for l in range(1, n + 1):
        rhs += bernoulli_poly(l).as_poly2("y") * Poly2.monomial(n - l, 0, Rat(1, l))
    return lhs, rhs


def euler_shift_sum(n: int) -> tuple[Poly2, Poly2]:
    """Both sides of the Euler shift-convolution identity.

    LHS = sum_{k=0}^{n} E_k(x+y) * x^{n-k},
    RHS = sum_{l=0}^{n} C(n+1,l+1) E_l(y) * x^{n-l}.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    lhs = Poly2.zero()
    for k in range(0, n + 1):
        lhs += euler_poly(k).compose_xy(1, 1) * Poly2.monomial(n - k, 0)
    rhs = Poly2.zero()
    for l in range(0, n + 1):
        rhs += euler_poly(l).as_poly2("y") * Poly2.monomial(n - l, 0, binomial(n + 1, l + 1))
    return lhs, rhs


def chu_identity(n: int, l: int) -> bool:
    """Hockey-stick summation: sum_{k=l}^{n} C(k-1, l-1) = C(n, l)."""
    if not 1 <= l <= n:
        raise ValueError(f"need 1 <= l <= n, got l={l}, n={n}")
    total = sum(comb(k - 1, l - 1) for k in range(l, n + 1))
    return Rat(total) == binomial(n, l)
