"""Exact univariate polynomials and rational functions in H over the rationals.

Coefficients are `fractions.Fraction` throughout; there is no floating point
anywhere in the engine.  Polynomials are stored sparsely by degree and the
shift automorphism tau (H -> H+1) is a first-class operation.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .errors import DivisionByZero, ZeroPolynomial

Rat = Fraction


def _as_rat(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


class PolyH:
    """Sparse polynomial in H with rational coefficients.

    Immutable; zero coefficients are never stored.  The degree of the zero
    polynomial is None.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for d, v in (coeffs.items() if isinstance(coeffs, dict) else coeffs):
                v = _as_rat(v)
                if v:
                    c[int(d)] = c.get(int(d), Fraction(0)) + v
                    if not c[int(d)]:
                        del c[int(d)]
        self._c = c

    @classmethod
    def const(cls, v) -> "PolyH":
        return cls({0: _as_rat(v)})

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "PolyH":
        return cls({degree: _as_rat(coeff)})

    @property
    def coeffs(self):
        return dict(self._c)

    def coeff(self, d: int) -> Fraction:
        return self._c.get(d, Fraction(0))

    def degree(self):
        """Degree, or None for the zero polynomial."""
        return max(self._c) if self._c else None

    def is_zero(self) -> bool:
        return not self._c

    def leading_coeff(self) -> Fraction:
        if not self._c:
            return Fraction(0)
        return self._c[max(self._c)]

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PolyH.const(other)
        if not isinstance(other, PolyH):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PolyH.const(other)
        out = dict(self._c)
        for d, v in other._c.items():
            out[d] = out.get(d, Fraction(0)) + v
            if not out[d]:
                del out[d]
        r = PolyH.__new__(PolyH)
        r._c = out
        return r

    __radd__ = __add__

    def __neg__(self):
        r = PolyH.__new__(PolyH)
        r._c = {d: -v for d, v in self._c.items()}
        return r

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PolyH.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return PolyH.const(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PolyH.const(other)
        if not isinstance(other, PolyH):
            return NotImplemented
        out = {}
        for d1, v1 in self._c.items():
            for d2, v2 in other._c.items():
                d = d1 + d2
                out[d] = out.get(d, Fraction(0)) + v1 * v2
        r = PolyH.__new__(PolyH)
        r._c = {d: v for d, v in out.items() if v}
        return r

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = PolyH.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "PolyH":
        """Apply tau^k: result(H) = self(H + k)."""
        if k == 0 or not self._c:
            return self
        out = {}
        for d, v in self._c.items():
            # (H + k)^d expanded by the binomial theorem
            for m in range(d + 1):
                c = v * comb(d, m) * Fraction(k) ** (d - m)
                if c:
                    out[m] = out.get(m, Fraction(0)) + c
        r = PolyH.__new__(PolyH)
        r._c = {d: v for d, v in out.items() if v}
        return r

    def __call__(self, v) -> Fraction:
        """Exact Horner evaluation at a rational point."""
        v = _as_rat(v)
        if not self._c:
            return Fraction(0)
        top = max(self._c)
        acc = Fraction(0)
        for d in range(top, -1, -1):
            acc = acc * v + self._c.get(d, Fraction(0))
        return acc

    def monic(self) -> "PolyH":
        lc = self.leading_coeff()
        if not lc or lc == 1:
            return self
        return self * (1 / lc)

    def divmod(self, other: "PolyH"):
        """Euclidean division; other must be nonzero."""
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        q = PolyH()
        r = self
        dother = other.degree()
        lc = other.leading_coeff()
        while not r.is_zero() and r.degree() >= dother:
            d = r.degree() - dother
            c = r.leading_coeff() / lc
            t = PolyH.monomial(d, c)
            q = q + t
            r = r - t * other
        return q, r

    def gcd(self, other: "PolyH") -> "PolyH":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        return a.monic() if not a.is_zero() else a

    def to_text(self, var: str = "H") -> str:
        """Canonical printing in descending degree, e.g. `2*H^2 - 1/3`."""
        if not self._c:
            return "0"
        parts = []
        for d in sorted(self._c, reverse=True):
            v = self._c[d]
            if d == 0:
                body = str(abs(v))
            else:
                vh = var if d == 1 else f"{var}^{d}"
                body = vh if abs(v) == 1 else f"{abs(v)}*{vh}"
            if not parts:
                parts.append(body if v > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if v > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"PolyH({self.to_text()})"


H = PolyH.monomial(1)
ONE = PolyH.const(1)


def poly_shift(p: PolyH, k: int) -> PolyH:
    return p.shift(k)


def poly_eval(p: PolyH, v) -> Fraction:
    return p(v)


def nonneg_shifted_roots(p: PolyH):
    """The set {i in N : p(i+1) = 0}, found by exact rational-root enumeration.

    Raises ZeroPolynomial for p = 0 (every index would qualify).
    """
    if p.is_zero():
        raise ZeroPolynomial("kernel of right multiplication by 0 is everything")
    # Strip the power of H; H^v contributes only the root 0, never a root >= 1.
    c = p.coeffs
    low = min(c)
    shifted = {d - low: v for d, v in c.items()}
    # Clear denominators: positive integer roots divide the constant term.
    denom_lcm = 1
    for v in shifted.values():
        denom_lcm = denom_lcm * v.denominator // _gcd(denom_lcm, v.denominator)
    a0 = abs(int(shifted[0] * denom_lcm))
    roots = set()
    for m in _positive_divisors(a0):
        if p(m) == 0:
            roots.add(m - 1)
    return roots


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _positive_divisors(a0: int):
    out = []
    d = 1
    while d * d <= a0:
        if a0 % d == 0:
            out.append(d)
            if d != a0 // d:
                out.append(a0 // d)
        d += 1
    return sorted(out)


class RatFunc:
    """Rational function num/den over Q with den monic and gcd(num, den) = 1."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, (int, Fraction)):
            num = PolyH.const(num)
        if den is None:
            den = ONE
        elif isinstance(den, (int, Fraction)):
            den = PolyH.const(den)
        if den.is_zero():
            raise DivisionByZero("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = PolyH(), ONE
            return
        g = num.gcd(den)
        if g.degree() and g.degree() > 0:
            num = num.divmod(g)[0]
            den = den.divmod(g)[0]
        lc = den.leading_coeff()
        if lc != 1:
            inv = 1 / lc
            num = num * inv
            den = den * inv
        self.num, self.den = num, den

    @classmethod
    def const(cls, v) -> "RatFunc":
        return cls(PolyH.const(v))

    @classmethod
    def from_poly(cls, p: PolyH) -> "RatFunc":
        return cls(p)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, PolyH)):
            other = RatFunc(other if isinstance(other, PolyH) else PolyH.const(other))
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        if isinstance(other, (int, Fraction, PolyH)):
            other = RatFunc(other if isinstance(other, PolyH) else PolyH.const(other))
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other if isinstance(other, RatFunc) else RatFunc(PolyH.const(-other)))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, PolyH)):
            other = RatFunc(other if isinstance(other, PolyH) else PolyH.const(other))
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.num.is_zero():
            raise DivisionByZero("inverse of the zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, PolyH)):
            other = RatFunc(other if isinstance(other, PolyH) else PolyH.const(other))
        return self * other.inverse()

    def shift(self, k: int) -> "RatFunc":
        return RatFunc(self.num.shift(k), self.den.shift(k))

    def to_text(self, var: str = "H") -> str:
        if self.den == ONE:
            return self.num.to_text(var)
        n = self.num.to_text(var)
        d = self.den.to_text(var)
        if len(self.num.coeffs) > 1:
            n = f"({n})"
        if len(self.den.coeffs) > 1:
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self):
        return f"RatFunc({self.to_text()})"
