"""The identity catalog: every checkable identity as an exact zero test.

Each entry builds LHS - RHS of one identity, after multiplying both
sides by the entry's pole-clearing factor (recorded in ``pole``), as a
Rat, Poly1, or Poly2.  The identity holds iff that residual is the
zero element; there is no tolerance anywhere.

Catalog ids are short fixed keys.  The scalar convolution identities:

    1.1      sum B_k B_{n-k}/(k(n-k)) - sum C(n,l) B_l B_{n-l}/(l(n-l))
                 = (2/n) H_n B_n                                (n >= 4)
    1.2      same shape with 1/k weights, = H_n B_n             (n >= 4)
    1.3      (n+2) sum B_k B_{n-k} - 2 sum C(n+2,l) B_l B_{n-l}
                 = n(n+1) B_n                                   (n >= 4)
    cor1.2   the midpoint (x = 1/2) chain of three equal
             expressions in Bbar_k = (2^{1-k}-1) B_k            (n >= 4)

The bivariate extensions 1.4, 1.4p, 1.5 (Bernoulli), 1.8, 1.9, 1.10
(Euler/Bernoulli mixes) live in Q[x, y]; their diagonal (y -> x)
specializations are 1.6, 1.7 and 1.11, 1.12, 1.13.  The shifted forms
2.3, 2.4, 2.5 replace y by x + y.  2.1 and 2.2 are the
shift-convolution summation identities, 2.1-as-printed is the
deliberately wrong variant without the binomial weight (a negative
control: it must FAIL for n >= 2), chu is the hockey-stick summation,
and 3.1 / 3.2 / ds are the gamma/beta-weighted generalizations at
integer parameters (ds being the even-index p = q specialization at
x = 0).
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Iterable, Optional, Union

from .arith import Rat, beta_int, binomial, gamma_ratio
from .operators import (
    bernoulli_shift_sum,
    bernoulli_shift_sum_unweighted,
    euler_shift_sum,
)
from .polynomials import Poly1, Poly2
from .sequences import (
    bbar,
    bernoulli_number,
    bernoulli_poly,
    euler_poly,
    harmonic,
    h_pq,
)

__all__ = [
    "Residual",
    "IdentitySpec",
    "VerifyReport",
    "UnknownIdentityError",
    "CATALOG",
    "catalog_ids",
    "build_residual",
    "verify",
    "verify_sweep",
]

Residual = Union[Rat, Poly1, Poly2]


class UnknownIdentityError(KeyError):
    """Raised for ids not present in the catalog."""

    def __init__(self, key: str):
        super().__init__(key)
        self.key = key

    def __str__(self) -> str:
        return f"unknown identity id {self.key!r}; catalog: {', '.join(CATALOG)}"


# Cached two-variable embeddings: _bern2(k, cx, cy) = B_k(cx*x + cy*y),
# likewise _eul2 for Euler polynomials.  The sweeps reuse these heavily.

@lru_cache(maxsize=None)
def _bern2(k: int, cx: int, cy: int) -> Poly2:
    return bernoulli_poly(k).compose_xy(cx, cy)


@lru_cache(maxsize=None)
def _eul2(k: int, cx: int, cy: int) -> Poly2:
    return euler_poly(k).compose_xy(cx, cy)


_X = Poly2.variable("x")
_Y = Poly2.variable("y")
_XMY = _X - _Y


# -- scalar convolution identities ------------------------------------------

def _r_1_1(n: int) -> Rat:
    lhs = Rat(0)
    for k in range(2, n - 1):
        lhs += bernoulli_number(k) * bernoulli_number(n - k) * Rat(1, k * (n - k))
    for l in range(2, n - 1):
        lhs -= binomial(n, l) * bernoulli_number(l) * bernoulli_number(n - l) * Rat(1, l * (n - l))
    rhs = Rat(2, n) * harmonic(n) * bernoulli_number(n)
    return lhs - rhs


def _r_1_2(n: int) -> Rat:
    lhs = Rat(0)
    for k in range(2, n - 1):
        lhs += bernoulli_number(k) / k * bernoulli_number(n - k)
    for l in range(2, n - 1):
        lhs -= binomial(n, l) * bernoulli_number(l) / l * bernoulli_number(n - l)
    return lhs - harmonic(n) * bernoulli_number(n)


def _r_1_3(n: int) -> Rat:
    lhs = Rat(0)
    for k in range(2, n - 1):
        lhs += (n + 2) * bernoulli_number(k) * bernoulli_number(n - k)
    for l in range(2, n - 1):
        lhs -= 2 * binomial(n + 2, l) * bernoulli_number(l) * bernoulli_number(n - l)
    return lhs - Rat(n * (n + 1)) * bernoulli_number(n)


def _r_cor_1_2(n: int) -> Rat:
    """Chain of three expressions; residual is the first nonzero gap."""
    e1 = Rat(0)
    e2 = Rat(0)
    for k in range(2, n - 1):
        e1 += bbar(k) / k * bbar(n - k)
        e2 += bbar(k) * bbar(n - k) * Rat(1, k * (n - k))
    e2 *= Rat(n, 2)
    e3 = harmonic(n - 1) * bbar(n)
    for k in range(2, n + 1):
        e3 += binomial(n, k) * bernoulli_number(k) / k * bbar(n - k)
    first = e1 - e2
    return first if first else e2 - e3


# -- bivariate Bernoulli identities ------------------------------------------

def _r_1_4(n: int) -> Poly2:
    # both sides multiplied by (x - y); the divided difference
    # (B_n(x) - B_n(y)) / (n (x - y)) then enters as a plain polynomial
    lhs = Poly2.zero()
    for k in range(1, n):
        lhs += _bern2(k, 1, 0) * _bern2(n - k, 0, 1) * Rat(1, k * (n - k))
    for l in range(1, n + 1):
        w = binomial(n - 1, l - 1) / (l * l)
        lhs -= (_bern2(l, 1, -1) * _bern2(n - l, 0, 1)
                + _bern2(l, -1, 1) * _bern2(n - l, 1, 0)) * w
    bx, by = _bern2(n, 1, 0), _bern2(n, 0, 1)
    rhs_h = (bx + by) * (harmonic(n - 1) / n)
    return _XMY * (lhs - rhs_h) - (bx - by) * Rat(1, n)


def _r_1_4p(n: int) -> Poly2:
    # the 1.4 chain multiplied through by n, with the 1/k-weighted double
    # sum written symmetrically in its two arguments
    s = Poly2.zero()
    for k in range(1, n):
        s += (_bern2(k, 1, 0) * _bern2(n - k, 0, 1)
              + _bern2(k, 0, 1) * _bern2(n - k, 1, 0)) * Rat(1, k)
    bx, by = _bern2(n, 1, 0), _bern2(n, 0, 1)
    lhs = _XMY * (s - (bx + by) * harmonic(n - 1)) - (bx - by)
    rhs = Poly2.zero()
    for l in range(1, n + 1):
        rhs += (_bern2(l, 1, -1) * _bern2(n - l, 0, 1)
                + _bern2(l, -1, 1) * _bern2(n - l, 1, 0)) * (binomial(n, l) / l)
    return lhs - _XMY * rhs


def _r_1_5(n: int) -> Poly2:
    core = Poly2.zero()
    for k in range(0, n + 1):
        core += _bern2(k, 1, 0) * _bern2(n - k, 0, 1)
    for l in range(0, n + 1):
        w = binomial(n + 1, l + 1) / (l + 2)
        core -= (_bern2(l, 1, -1) * _bern2(n - l, 0, 1)
                 + _bern2(l, -1, 1) * _bern2(n - l, 1, 0)) * w
    lhs = _XMY ** 3 * core * (n + 2)
    rhs = (_XMY * (_bern2(n + 1, 1, 0) + _bern2(n + 1, 0, 1)) * (n + 2)
           - (_bern2(n + 2, 1, 0) - _bern2(n + 2, 0, 1)) * 2)
    return lhs - rhs


# -- univariate (diagonal) Bernoulli identities -------------------------------

def _r_1_6(n: int) -> Poly1:
    lhs = Poly1.zero()
    for k in range(1, n):
        lhs += bernoulli_poly(k) * bernoulli_poly(n - k) * Rat(1, k * (n - k))
    for l in range(2, n + 1):
        w = 2 * binomial(n - 1, l - 1) * bernoulli_number(l) / (l * l)
        lhs -= bernoulli_poly(n - l) * w
    return lhs - bernoulli_poly(n) * (2 * harmonic(n - 1) / n)


def _r_1_7(n: int) -> Poly1:
    lhs = Poly1.zero()
    for k in range(0, n + 1):
        lhs += bernoulli_poly(k) * bernoulli_poly(n - k)
    for l in range(2, n + 1):
        w = 2 * binomial(n + 1, l + 1) * bernoulli_number(l) / (l + 2)
        lhs -= bernoulli_poly(n - l) * w
    return lhs - bernoulli_poly(n) * (n + 1)


# -- bivariate Euler/Bernoulli identities -------------------------------------

def _r_1_8(n: int) -> Poly2:
    s = Poly2.zero()
    for k in range(0, n + 1):
        s += _eul2(k, 1, 0) * _eul2(n - k, 0, 1)
    lhs = _XMY * s - (_bern2(n + 2, 1, 0) - _bern2(n + 2, 0, 1)) * Rat(4, n + 2)
    t = Poly2.zero()
    for l in range(0, n + 2):
        w = binomial(n + 1, l) / (l + 1)
        t += (_eul2(l, 1, -1) * _bern2(n + 1 - l, 0, 1)
              + _eul2(l, -1, 1) * _bern2(n + 1 - l, 1, 0)) * w
    return lhs + _XMY * t * 2


def _r_1_9(n: int) -> Poly2:
    s = Poly2.zero()
    for k in range(1, n + 1):
        s += _bern2(k, 1, 0) * _eul2(n - k, 0, 1) * Rat(1, k)
    lhs = (_XMY * (s - _eul2(n, 0, 1) * harmonic(n))
           - (_eul2(n, 1, 0) - _eul2(n, 0, 1)))
    t = Poly2.zero()
    for l in range(1, n + 1):
        t += (_bern2(l, 1, -1) * _eul2(n - l, 0, 1) * Rat(1, l)
              - _eul2(l - 1, -1, 1) * _eul2(n - l, 1, 0) * Rat(1, 2)) * binomial(n, l)
    return lhs - _XMY * t


def _r_1_10(n: int) -> Poly2:
    s = Poly2.zero()
    for k in range(0, n + 1):
        s += _bern2(k, 1, 0) * _eul2(n - k, 0, 1)
    lhs = _XMY ** 2 * s
    t = Poly2.zero()
    for l in range(1, n + 1):
        t += (_bern2(l, 1, -1) * _eul2(n - l, 0, 1)
              - _eul2(l - 1, -1, 1) * _eul2(n - l, 1, 0) * Rat(1, 2)) * binomial(n + 1, l + 1)
    rhs = (_XMY ** 2 * t
           + (_XMY * _eul2(n, 1, 0) + _XMY ** 2 * _eul2(n, 0, 1)) * (n + 1)
           - (_eul2(n + 1, 1, 0) - _eul2(n + 1, 0, 1)))
    return lhs - rhs


# -- univariate (diagonal) Euler identities -----------------------------------

def _r_1_11(n: int) -> Poly1:
    lhs = Poly1.zero()
    for k in range(0, n + 1):
        lhs += euler_poly(k) * euler_poly(n - k)
    lhs *= n + 2
    rhs = Poly1.zero()
    for l in range(2, n + 3):
        w = 8 * binomial(n + 2, l) * (2 ** l - 1) * bernoulli_number(l) / l
        rhs += bernoulli_poly(n + 2 - l) * w
    return lhs - rhs


def _r_1_12(n: int) -> Poly1:
    lhs = Poly1.zero()
    for k in range(1, n + 1):
        lhs += bernoulli_poly(k) * euler_poly(n - k) * Rat(1, k)
    for l in range(2, n + 1):
        w = binomial(n, l) * 2 ** l * bernoulli_number(l) / l
        lhs -= euler_poly(n - l) * w
    return lhs - euler_poly(n) * harmonic(n)


def _r_1_13(n: int) -> Poly1:
    lhs = Poly1.zero()
    for k in range(0, n + 1):
        lhs += bernoulli_poly(k) * euler_poly(n - k)
    for l in range(2, n + 1):
        w = binomial(n + 1, l + 1) * (2 ** l + l - 1) * bernoulli_number(l) / l
        lhs -= euler_poly(n - l) * w
    return lhs - euler_poly(n) * (n + 1)


# -- shift-convolution sums and shifted forms ---------------------------------

def _r_2_1(n: int) -> Poly2:
    lhs, rhs = bernoulli_shift_sum(n)
    return lhs - rhs


def _r_2_1_as_printed(n: int) -> Poly2:
    lhs, rhs = bernoulli_shift_sum_unweighted(n)
    return lhs - rhs


def _r_2_2(n: int) -> Poly2:
    lhs, rhs = euler_shift_sum(n)
    return lhs - rhs


def _r_2_3(n: int) -> Poly2:
    # y -> x + y form of 1.4, both sides multiplied by y
    s = Poly2.zero()
    for k in range(1, n):
        s += _bern2(k, 1, 1) * _bern2(n - k, 1, 0) * Rat(1, k * (n - k))
    lhs = _Y * s
    t = Poly2.zero()
    for l in range(1, n + 1):
        w = binomial(n - 1, l - 1) / (l * l)
        t += (_bern2(l, 0, 1) * _bern2(n - l, 1, 0)
              + _bern2(l, 0, -1) * _bern2(n - l, 1, 1)) * w
    t += (_bern2(n, 1, 1) + _bern2(n, 1, 0)) * (harmonic(n - 1) / n)
    rhs = _Y * t + (_bern2(n, 1, 1) - _bern2(n, 1, 0)) * Rat(1, n)
    return lhs - rhs


def _r_2_4(n: int) -> Poly2:
    # y -> x + y form of 1.8, both sides multiplied by y
    s = Poly2.zero()
    for k in range(0, n + 1):
        s += _eul2(k, 1, 1) * _eul2(n - k, 1, 0)
    lhs = _Y * s - (_bern2(n + 2, 1, 1) - _bern2(n + 2, 1, 0)) * Rat(4, n + 2)
    t = Poly2.zero()
    for l in range(0, n + 2):
        w = binomial(n + 1, l) / (l + 1)
        t += (_eul2(l, 0, 1) * _bern2(n + 1 - l, 1, 0)
              + _eul2(l, 0, -1) * _bern2(n + 1 - l, 1, 1)) * w
    return lhs + _Y * t * 2


def _r_2_5(n: int) -> Poly2:
    # (x, y) -> (x + y, x) form of 1.9, both sides multiplied by y
    s = Poly2.zero()
    for k in range(1, n + 1):
        s += _bern2(k, 1, 1) * _eul2(n - k, 1, 0) * Rat(1, k)
    lhs = (_Y * (s - _eul2(n, 1, 0) * harmonic(n))
           - (_eul2(n, 1, 1) - _eul2(n, 1, 0)))
    t = Poly2.zero()
    for l in range(1, n + 1):
        t += (_bern2(l, 0, 1) * _eul2(n - l, 1, 0) * Rat(1, l)
              - _eul2(l - 1, 0, -1) * _eul2(n - l, 1, 1) * Rat(1, 2)) * binomial(n, l)
    return lhs - _Y * t


def _r_chu(n: int, l: int) -> Rat:
    total = sum(comb(k - 1, l - 1) for k in range(l, n + 1))
    return Rat(total) - binomial(n, l)


# -- gamma/beta-weighted family -----------------------------------------------

def _r_3_1(n: int, p: int, q: int) -> Poly1:
    # Gamma(k+p)Gamma(n-k+q)/(k!(n-k)!) = rising(k,p) rising(n-k,q) / (k(n-k))
    lhs = Poly1.zero()
    for k in range(1, n):
        w = gamma_ratio(k, p) * gamma_ratio(n - k, q) * Rat(1, k * (n - k))
        lhs += bernoulli_poly(k) * bernoulli_poly(n - k) * w
    lhs /= gamma_ratio(n, p + q)
    rhs = Poly1.zero()
    for l in range(2, n + 1):
        w = (binomial(n - 1, l - 1) * bernoulli_number(l) / l
             * (beta_int(l + p, q + 1) + beta_int(l + q, p + 1)))
        rhs += bernoulli_poly(n - l) * w
    rhs += bernoulli_poly(n) * ((h_pq(n, p, q) + h_pq(n, q, p)) / n)
    return lhs - rhs


def _r_3_2(n: int, l: int, p: int, q: int) -> Rat:
    total = Rat(0)
    for k in range(l, n + 1):
        total += binomial(n - l, k - l) * beta_int(k + p, n - k + q)
    return total - beta_int(l + p, q)


def _r_ds(n: int, p: int) -> Rat:
    """Even-index convolution identity with rising-factorial weights
    (the p = q, x = 0 slice of 3.1 with the index doubled)."""
    def g(m: int) -> int:
        return factorial(m - 1)  # Gamma(m) for integer m >= 1

    lhs = Rat(0)
    for k in range(1, n):
        num = (bernoulli_number(2 * k) * bernoulli_number(2 * n - 2 * k)
               * g(2 * k + p) * g(2 * n - 2 * k + p))
        lhs += Rat(num, 8 * k * (n - k) * g(2 * k) * g(2 * n - 2 * k))
    lhs /= g(2 * n + 2 * p)
    rhs = Rat(0)
    for k in range(1, n + 1):
        rhs += (bernoulli_number(2 * k) * bernoulli_number(2 * n - 2 * k)
                * g(2 * k + p)
                / (factorial(2 * k) * factorial(2 * n - 2 * k) * g(2 * k + 2 * p + 1)))
    rhs *= g(p + 1)
    rhs += bernoulli_number(2 * n) / factorial(2 * n) * h_pq(2 * n, p, p)
    return lhs - rhs


# -- catalog ------------------------------------------------------------------

@dataclass(frozen=True)
class IdentitySpec:
    """One catalog entry.

    ``build`` maps the parameters (n first, then any of l, p, q in the
    order given by ``params``) to the residual LHS - RHS after both
    sides were multiplied by ``pole``.  The residual is identically
    zero for every in-domain parameter choice -- except for entries
    flagged ``negative``, which exist to prove the harness can fail.
    """

    key: str
    arity: str  # "scalar" | "univariate" | "bivariate"
    n_min: int
    build: Callable[..., Residual]
    summary: str
    pole: str = "none"
    params: tuple[str, ...] = ()
    p_default: tuple[int, int] = (0, 3)
    q_default: tuple[int, int] = (0, 3)
    negative: bool = False

    def in_domain(self, n: int, l: Optional[int] = None,
                  p: Optional[int] = None, q: Optional[int] = None) -> bool:
        if n < self.n_min:
            return False
        if "l" in self.params and (l is None or not 1 <= l <= n):
            return False
        if "p" in self.params and (p is None or p < 0):
            return False
        if "q" in self.params:
            q_min = 1 if self.key == "3.2" else 0
            if q is None or q < q_min:
                return False
        return True


def _entry(key, arity, n_min, build, summary, pole="none", params=(),
           p_default=(0, 3), q_default=(0, 3), negative=False) -> IdentitySpec:
    return IdentitySpec(key, arity, n_min, build, summary, pole, params,
                        p_default, q_default, negative)


CATALOG: dict[str, IdentitySpec] = {
    s.key: s
    for s in (
        _entry("1.1", "scalar", 4, _r_1_1,
               "ordinary vs binomial Bernoulli convolution: (2/n) H_n B_n"),
        _entry("1.2", "scalar", 4, _r_1_2,
               "1/k-weighted Bernoulli convolution: H_n B_n"),
        _entry("1.3", "scalar", 4, _r_1_3,
               "unweighted Bernoulli convolution: n(n+1) B_n"),
        _entry("1.4", "bivariate", 2, _r_1_4,
               "two-variable extension of 1.1", pole="(x-y)"),
        _entry("1.4p", "bivariate", 2, _r_1_4p,
               "equivalent form of 1.4 (times n, split weights)", pole="(x-y)"),
        _entry("1.5", "bivariate", 2, _r_1_5,
               "two-variable extension of 1.3", pole="(n+2)(x-y)^3"),
        _entry("1.6", "univariate", 2, _r_1_6,
               "diagonal y=x of 1.4"),
        _entry("1.7", "univariate", 2, _r_1_7,
               "diagonal y=x of 1.5"),
        _entry("cor1.2", "scalar", 4, _r_cor_1_2,
               "midpoint x=1/2 chain in Bbar_k; three equal expressions"),
        _entry("1.8", "bivariate", 1, _r_1_8,
               "Euler-Euler convolution vs Euler-Bernoulli sums", pole="(x-y)"),
        _entry("1.9", "bivariate", 1, _r_1_9,
               "Bernoulli-Euler convolution, 1/k weights", pole="(x-y)"),
        _entry("1.10", "bivariate", 1, _r_1_10,
               "Bernoulli-Euler convolution, unweighted", pole="(x-y)^2"),
        _entry("1.11", "univariate", 0, _r_1_11,
               "diagonal of 1.8: Euler convolution vs Bernoulli sum"),
        _entry("1.12", "univariate", 0, _r_1_12,
               "diagonal of 1.9: H_n E_n(x)"),
        _entry("1.13", "univariate", 0, _r_1_13,
               "diagonal of 1.10: (n+1) E_n(x)"),
        _entry("2.1", "bivariate", 1, _r_2_1,
               "Bernoulli shift-convolution sum (binomial weights)"),
        _entry("2.1-as-printed", "bivariate", 1, _r_2_1_as_printed,
               "NEGATIVE CONTROL: 2.1 without the binomial weight; "
               "fails for n >= 2", negative=True),
        _entry("2.2", "bivariate", 0, _r_2_2,
               "Euler shift-convolution sum"),
        _entry("2.3", "bivariate", 2, _r_2_3,
               "y -> x+y form of 1.4", pole="y"),
        _entry("2.4", "bivariate", 1, _r_2_4,
               "y -> x+y form of 1.8", pole="y"),
        _entry("2.5", "bivariate", 1, _r_2_5,
               "(x,y) -> (x+y,x) form of 1.9", pole="y"),
        _entry("chu", "scalar", 1, _r_chu,
               "hockey-stick sum: sum C(k-1,l-1) = C(n,l)", params=("l",)),
        _entry("3.1", "univariate", 2, _r_3_1,
               "gamma/beta-weighted extension of 1.6; integer p, q >= 0",
               params=("p", "q")),
        _entry("3.2", "scalar", 1, _r_3_2,
               "beta-weighted extension of chu; q >= 1",
               params=("l", "p", "q"), p_default=(0, 4), q_default=(1, 4)),
        _entry("ds", "scalar", 2, _r_ds,
               "even-index rising-factorial convolution (p = q, x = 0 slice of 3.1)",
               params=("p",), p_default=(0, 4)),
    )
}


def catalog_ids(include_negative: bool = True) -> list[str]:
    """Catalog keys in fixed order."""
    return [k for k, s in CATALOG.items() if include_negative or not s.negative]


@dataclass
class VerifyReport:
    """Outcome of checking one identity instance."""

    key: str
    n: int
    l: Optional[int] = None
    p: Optional[int] = None
    q: Optional[int] = None
    holds: Optional[bool] = None
    residual: Optional[Residual] = None
    elapsed: float = 0.0
    skipped: bool = False

    def residual_str(self) -> str:
        if self.skipped:
            return ""
        return "0" if self.holds else str(self.residual)

    def params_str(self) -> str:
        parts = [f"n={self.n}"]
        for name in ("l", "p", "q"):
            value = getattr(self, name)
            if value is not None:
                parts.append(f"{name}={value}")
        return " ".join(parts)


def _get_spec(key: str) -> IdentitySpec:
    try:
        return CATALOG[key]
    except KeyError:
        raise UnknownIdentityError(key) from None


def _build_args(spec: IdentitySpec, n: int, l, p, q) -> list[int]:
    supplied = {"l": l, "p": p, "q": q}
    args = [n]
    for name in spec.params:
        value = supplied[name]
        if value is None:
            raise ValueError(f"identity {spec.key!r} requires parameter {name!r}")
        args.append(value)
    for name, value in supplied.items():
        if value is not None and name not in spec.params:
            raise ValueError(f"identity {spec.key!r} takes no parameter {name!r}")
    return args


def build_residual(key: str, n: int, *, l: Optional[int] = None,
                   p: Optional[int] = None, q: Optional[int] = None) -> Residual:
    """LHS - RHS of one identity instance after denominator clearing."""
    spec = _get_spec(key)
    args = _build_args(spec, n, l, p, q)
    if not spec.in_domain(n, l, p, q):
        raise ValueError(f"parameters out of domain for {key!r}: n={n}, l={l}, p={p}, q={q}")
    return spec.build(*args)


def _is_zero(residual: Residual) -> bool:
    if isinstance(residual, (Poly1, Poly2)):
        return residual.is_zero
    return residual == 0


def verify(key: str, n: int, *, l: Optional[int] = None, p: Optional[int] = None,
           q: Optional[int] = None) -> VerifyReport:
    """Check one identity instance and report the outcome with timing."""
    spec = _get_spec(key)
    start = time.perf_counter()
    residual = build_residual(key, n, l=l, p=p, q=q)
    elapsed = time.perf_counter() - start
    holds = _is_zero(residual)
    kept = None if holds else residual
    return VerifyReport(key, n, l=l, p=p, q=q, holds=holds,
                        residual=kept, elapsed=elapsed)


def _param_values(spec: IdentitySpec, name: str,
                  requested: Optional[Iterable[int]]) -> list[Optional[int]]:
    if name not in spec.params:
        return [None]
    if requested is not None:
        return list(requested)
    lo, hi = spec.p_default if name == "p" else spec.q_default
    return list(range(lo, hi + 1))


def verify_sweep(keys: Iterable[str], n_range: Iterable[int],
                 p_range: Optional[Iterable[int]] = None,
                 q_range: Optional[Iterable[int]] = None) -> list[VerifyReport]:
    """Cartesian sweep in deterministic order (id, n, l, p, q).

    Out-of-domain combinations produce skip-marked reports instead of
    errors, so one sweep can cover identities with different domains.
    An l parameter, where an identity takes one, runs over 1..n.
    """
    keys = list(keys)
    for key in keys:
        _get_spec(key)
    n_values = list(n_range)
    p_req = list(p_range) if p_range is not None else None
    q_req = list(q_range) if q_range is not None else None
    reports: list[VerifyReport] = []
    for key in keys:
        spec = CATALOG[key]
        for n in n_values:
            if n < spec.n_min:
                reports.append(VerifyReport(key, n, skipped=True))
                continue
            ls: list[Optional[int]] = list(range(1, n + 1)) if "l" in spec.params else [None]
            ps = _param_values(spec, "p", p_req)
            qs = _param_values(spec, "q", q_req)
            for l in ls:
                for p in ps:
                    for q in qs:
                        if not spec.in_domain(n, l, p, q):
                            reports.append(VerifyReport(key, n, l=l, p=p, q=q, skipped=True))
                            continue
                        reports.append(verify(key, n, l=l, p=p, q=q))
    return reports
