"""Exact dense polynomial algebra over the rationals.

``Poly1`` stores a univariate polynomial as a tuple of Rat
coefficients, index i holding the coefficient of x^i.  ``Poly2`` stores
a bivariate polynomial as a rectangular tuple of tuples, entry [i][j]
holding the coefficient of x^i y^j.  Both are normalized on
construction: no trailing zero coefficients, no all-zero fringe rows or
columns, and the zero polynomial is the empty tuple.  Structural
equality is therefore exact polynomial equality, and "equals the zero
polynomial" is the one comparison every identity check reduces to.

Products clear each operand to an integer coefficient array (a single
denominator lcm per operand), convolve in plain big-integer
arithmetic, and rebuild one Fraction per output coefficient.  That is
exact and much faster than convolving Fraction values directly.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, lcm
from typing import Iterable, Sequence

from .arith import Rat

__all__ = ["Poly1", "Poly2", "ExactDivisionError"]

Scalar = (int, Fraction)


class ExactDivisionError(ArithmeticError):
    """Raised when an exact polynomial quotient does not exist."""


def _as_rat(value) -> Rat:
    return value if isinstance(value, Fraction) else Rat(value)


def _int_form(coeffs: Sequence[Rat]) -> tuple[list[int], int]:
    """Clear a coefficient sequence to integers: (n_i), d with c_i = n_i / d."""
    den = 1
    for c in coeffs:
        den = lcm(den, c.denominator)
    return [c.numerator * (den // c.denominator) for c in coeffs], den


def _format_terms(terms: list[tuple[Rat, str]]) -> str:
    """Render [(coeff, monomial), ...] like 'x^2 - x + 1/6'."""
    if not terms:
        return "0"
    parts: list[str] = []
    for coeff, mono in terms:
        mag = -coeff if coeff < 0 else coeff
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not parts:
            parts.append(f"-{body}" if coeff < 0 else body)
        else:
            parts.append(f"- {body}" if coeff < 0 else f"+ {body}")
    return " ".join(parts)


class Poly1:
    """Dense univariate polynomial with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rat | int] = ()):
        cs = [_as_rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):  # value semantics
        raise AttributeError("Poly1 is immutable")

    @classmethod
    def zero(cls) -> Poly1:
        return cls()

    @classmethod
    def variable(cls) -> Poly1:
        return cls((0, 1))

    @classmethod
    def monomial(cls, power: int, coeff: Rat | int = 1) -> Poly1:
        if power < 0:
            raise ValueError("power must be >= 0")
        return cls([0] * power + [coeff])

    @property
    def degree(self) -> int:
        """Degree of the polynomial; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, power: int) -> Rat:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Rat(0)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> Poly1:
        if isinstance(other, Scalar):
            other = Poly1((other,))
        if not isinstance(other, Poly1):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly1(out)

    __radd__ = __add__

    def __neg__(self) -> Poly1:
        return Poly1(-c for c in self.coeffs)

    def __sub__(self, other) -> Poly1:
        if isinstance(other, Scalar):
            other = Poly1((other,))
        if not isinstance(other, Poly1):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Poly1:
        return (-self) + other

    def __mul__(self, other) -> Poly1:
        if isinstance(other, Scalar):
            k = _as_rat(other)
            return Poly1(c * k for c in self.coeffs)
        if not isinstance(other, Poly1):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Poly1()
        a, da = _int_form(self.coeffs)
        b, db = _int_form(other.coeffs)
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] += ai * bj
        den = da * db
        return Poly1(Fraction(v, den) for v in out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> Poly1:
        if isinstance(other, Scalar):
            k = _as_rat(other)
            return Poly1(c / k for c in self.coeffs)
        return NotImplemented

    def __pow__(self, n: int) -> Poly1:
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Poly1((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            other = Poly1((other,))
        if not isinstance(other, Poly1):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("Poly1", self.coeffs))

    # -- evaluation and calculus -------------------------------------------

    def __call__(self, point: Rat | int) -> Rat:
        """Exact evaluation by Horner's rule."""
        v = _as_rat(point)
        acc = Rat(0)
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def derivative(self) -> Poly1:
        return Poly1(i * c for i, c in enumerate(self.coeffs) if i)

    def compose_affine(self, a: Rat | int, b: Rat | int) -> Poly1:
        """p(a*x + b), expanded exactly."""
        a, b = _as_rat(a), _as_rat(b)
        if a == 1 and b == 0:
            return self
        lin = Poly1((b, a))
        acc = Poly1()
        for c in reversed(self.coeffs):
            acc = acc * lin + c
        return acc

    def compose_xy(self, cx: Rat | int, cy: Rat | int) -> Poly2:
        """p(cx*x + cy*y) as a bivariate polynomial.

        Coefficient of x^a y^b is c_{a+b} * C(a+b, a) * cx^a * cy^b;
        with (cx, cy) = (1, 0) or (0, 1) this embeds p along one axis.
        """
        d = self.degree
        if d < 0:
            return Poly2.zero()
        cx, cy = _as_rat(cx), _as_rat(cy)
        px = [Rat(1)]
        py = [Rat(1)]
        for _ in range(d):
            px.append(px[-1] * cx)
            py.append(py[-1] * cy)
        rows = [[Rat(0)] * (d + 1) for _ in range(d + 1)]
        for a in range(d + 1):
            for b in range(d + 1 - a):
                c = self.coeffs[a + b]
                if c:
                    rows[a][b] = c * comb(a + b, a) * px[a] * py[b]
        return Poly2(rows)

    def as_poly2(self, axis: str) -> Poly2:
        """Embed as a bivariate polynomial in x only or in y only."""
        if axis == "x":
            return self.compose_xy(1, 0)
        if axis == "y":
            return self.compose_xy(0, 1)
        raise ValueError(f"axis must be 'x' or 'y', got {axis!r}")

    # -- rendering -----------------------------------------------------------

    def __str__(self) -> str:
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c:
                mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
                terms.append((c, mono))
        return _format_terms(terms)

    def __repr__(self) -> str:
        return f"Poly1({self})"


class Poly2:
    """Dense bivariate polynomial with exact rational coefficients."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[Rat | int]] = ()):
        grid = [[_as_rat(c) for c in row] for row in rows]
        dx = -1
        dy = -1
        for i, row in enumerate(grid):
            for j, c in enumerate(row):
                if c:
                    dx = max(dx, i)
                    dy = max(dy, j)
        if dx < 0:
            object.__setattr__(self, "rows", ())
            return
        rect = tuple(
            tuple(grid[i][j] if j < len(grid[i]) else Rat(0) for j in range(dy + 1))
            for i in range(dx + 1)
        )
        object.__setattr__(self, "rows", rect)

    def __setattr__(self, name, value):  # value semantics
        raise AttributeError("Poly2 is immutable")

    @classmethod
    def zero(cls) -> Poly2:
        return cls()

    @classmethod
    def constant(cls, c: Rat | int) -> Poly2:
        return cls(((c,),))

    @classmethod
    def monomial(cls, i: int, j: int, coeff: Rat | int = 1) -> Poly2:
        if i < 0 or j < 0:
            raise ValueError("exponents must be >= 0")
        rows = [[0] * (j + 1) for _ in range(i + 1)]
        rows[i][j] = coeff
        return cls(rows)

    @classmethod
    def variable(cls, axis: str) -> Poly2:
        if axis == "x":
            return cls.monomial(1, 0)
        if axis == "y":
            return cls.monomial(0, 1)
        raise ValueError(f"axis must be 'x' or 'y', got {axis!r}")

    @property
    def deg_x(self) -> int:
        return len(self.rows) - 1

    @property
    def deg_y(self) -> int:
        return len(self.rows[0]) - 1 if self.rows else -1

    @property
    def is_zero(self) -> bool:
        return not self.rows

    def coeff(self, i: int, j: int) -> Rat:
        if 0 <= i < len(self.rows) and 0 <= j < len(self.rows[i]):
            return self.rows[i][j]
        return Rat(0)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> Poly2:
        if isinstance(other, Scalar):
            other = Poly2.constant(other)
        if not isinstance(other, Poly2):
            return NotImplemented
        nx = max(len(self.rows), len(other.rows))
        ny = max(len(self.rows[0]) if self.rows else 0,
                 len(other.rows[0]) if other.rows else 0)
        out = [[Rat(0)] * ny for _ in range(nx)]
        for src in (self.rows, other.rows):
            for i, row in enumerate(src):
                orow = out[i]
                for j, c in enumerate(row):
                    if c:
                        orow[j] = orow[j] + c
        return Poly2(out)

    __radd__ = __add__

    def __neg__(self) -> Poly2:
        return Poly2([[-c for c in row] for row in self.rows])

    def __sub__(self, other) -> Poly2:
        if isinstance(other, Scalar):
            other = Poly2.constant(other)
        if not isinstance(other, Poly2):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Poly2:
        return (-self) + other

    def __mul__(self, other) -> Poly2:
        if isinstance(other, Scalar):
            k = _as_rat(other)
            return Poly2([[c * k for c in row] for row in self.rows])
        if not isinstance(other, Poly2):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Poly2()
        fa = [_int_form(row) for row in self.rows]
        fb = [_int_form(row) for row in other.rows]
        da = lcm(*(d for _, d in fa))
        db = lcm(*(d for _, d in fb))
        ra = [[v * (da // d) for v in row] for row, d in fa]
        rb = [[v * (db // d) for v in row] for row, d in fb]
        nx = len(ra) + len(rb) - 1
        ny = len(ra[0]) + len(rb[0]) - 1
        acc = [[0] * ny for _ in range(nx)]
        for i, arow in enumerate(ra):
            for a, va in enumerate(arow):
                if va:
                    for j, brow in enumerate(rb):
                        crow = acc[i + j]
                        for b, vb in enumerate(brow):
                            if vb:
                                crow[a + b] += va * vb
        den = da * db
        return Poly2([[Fraction(v, den) for v in row] for row in acc])

    __rmul__ = __mul__

    def __truediv__(self, other) -> Poly2:
        if isinstance(other, Scalar):
            k = _as_rat(other)
            return Poly2([[c / k for c in row] for row in self.rows])
        return NotImplemented

    def __pow__(self, n: int) -> Poly2:
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Poly2.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            other = Poly2.constant(other)
        if not isinstance(other, Poly2):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(("Poly2", self.rows))

    # -- evaluation, calculus, substitution ----------------------------------

    def __call__(self, u: Rat | int, v: Rat | int) -> Rat:
        u, v = _as_rat(u), _as_rat(v)
        acc = Rat(0)
        for row in reversed(self.rows):
            rv = Rat(0)
            for c in reversed(row):
                rv = rv * v + c
            acc = acc * u + rv
        return acc

    def partial(self, axis: str) -> Poly2:
        """Formal partial derivative along one axis."""
        if axis == "x":
            return Poly2([[i * c for c in row] for i, row in enumerate(self.rows) if i])
        if axis == "y":
            return Poly2([[j * c for j, c in enumerate(row) if j] for row in self.rows])
        raise ValueError(f"axis must be 'x' or 'y', got {axis!r}")

    def swap_xy(self) -> Poly2:
        """Exchange the two indeterminates (an involution)."""
        if self.is_zero:
            return self
        nx, ny = len(self.rows), len(self.rows[0])
        return Poly2([[self.rows[i][j] for i in range(nx)] for j in range(ny)])

    def _subst_x(self, value: Poly2) -> Poly2:
        acc = Poly2.zero()
        for row in reversed(self.rows):
            acc = acc * value + Poly2((row,))
        return acc

    def subst(self, axis: str, value: Poly2) -> Poly2:
        """Substitute a bivariate polynomial for one indeterminate."""
        if not isinstance(value, Poly2):
            raise TypeError("substitution value must be a Poly2")
        if axis == "x":
            return self._subst_x(value)
        if axis == "y":
            return self.swap_xy()._subst_x(value.swap_xy()).swap_xy()
        raise ValueError(f"axis must be 'x' or 'y', got {axis!r}")

    def diagonal(self) -> Poly1:
        """P(x, x) as a univariate polynomial."""
        if self.is_zero:
            return Poly1()
        out = [Rat(0)] * (len(self.rows) + len(self.rows[0]) - 1)
        for i, row in enumerate(self.rows):
            for j, c in enumerate(row):
                if c:
                    out[i + j] = out[i + j] + c
        return Poly1(out)

    def div_xminusy(self) -> Poly2:
        """Exact quotient P / (x - y).

        P must vanish on the diagonal (P(x, x) = 0); otherwise no
        polynomial quotient exists and ExactDivisionError is raised.
        Implemented as synthetic division in x with polynomial-in-y
        coefficients.
        """
        if self.is_zero:
            return Poly2()
        rows = [list(r) for r in self.rows]
        d = len(rows) - 1
        width = len(rows[0])

        def add_shifted(base: list[Rat], s: list[Rat]) -> list[Rat]:
            # base + y*s, as y-coefficient lists
            out = list(base) + [Rat(0)] * max(0, len(s) + 1 - len(base))
            for j, c in enumerate(s):
                out[j + 1] = out[j + 1] + c
            return out

        if d == 0:
            raise ExactDivisionError("not divisible by (x - y): P(x, x) != 0")
        quot: list[list[Rat]] = [[] for _ in range(d)]
        quot[d - 1] = rows[d]
        for i in range(d - 1, 0, -1):
            quot[i - 1] = add_shifted(rows[i], quot[i])
        remainder = add_shifted(rows[0], quot[0])
        if any(remainder):
            raise ExactDivisionError("not divisible by (x - y): P(x, x) != 0")
        return Poly2(quot)

    # -- rendering -----------------------------------------------------------

    def __str__(self) -> str:
        entries = []
        for i, row in enumerate(self.rows):
            for j, c in enumerate(row):
                if c:
                    entries.append((i + j, i, c))
        entries.sort(key=lambda t: (-t[0], -t[1]))
        terms = []
        for total, i, c in entries:
            j = total - i
            pieces = []
            if i:
                pieces.append("x" if i == 1 else f"x^{i}")
            if j:
                pieces.append("y" if j == 1 else f"y^{j}")
            terms.append((c, "*".join(pieces)))
        return _format_terms(terms)

    def __repr__(self) -> str:
        return f"Poly2({self})"
