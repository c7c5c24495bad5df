"""Canonical-form arithmetic for polynomial integro-differential operators
in one variable.

Basis monomials are H^j d^i (i >= 1), H^j, int^i H^j (i >= 1) and the matrix
units e[s,t].  An element is a sparse rational combination of these and the
representation *is* the canonical form: two elements are equal iff their term
maps coincide.

Reduction conventions: polynomial coefficients sit to the LEFT of d-powers and
to the RIGHT of int-powers; the boundary cases e[i,-1] = e[-1,j] = 0 are forced
by e[0,0]*int = 0 and d*e[0,0] = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import ZeroPolynomial
from .polyh import PolyH, nonneg_shifted_roots


@dataclass(frozen=True)
class DiffMon:
    """H^j d^i with i >= 1."""

    j: int
    i: int


@dataclass(frozen=True)
class HMon:
    """H^j."""

    j: int


@dataclass(frozen=True)
class IntMon:
    """int^i H^j with i >= 1."""

    i: int
    j: int


@dataclass(frozen=True)
class MatUnit:
    """Matrix unit e[s,t]."""

    s: int
    t: int


I1Monomial = (DiffMon, HMon, IntMon, MatUnit)


def mono_degree(m) -> int:
    """Degree in the Z-grading: deg d = -1, deg int = +1, deg e[s,t] = s - t."""
    if isinstance(m, DiffMon):
        return -m.i
    if isinstance(m, HMon):
        return 0
    if isinstance(m, IntMon):
        return m.i
    return m.s - m.t


def mono_involution(m):
    if isinstance(m, DiffMon):
        return IntMon(m.i, m.j)
    if isinstance(m, IntMon):
        return DiffMon(m.j, m.i)
    if isinstance(m, MatUnit):
        return MatUnit(m.t, m.s)
    return m


def _word(m):
    """Word form (a, p, b) meaning int^a * p(H) * d^b, or None for e-units."""
    if isinstance(m, DiffMon):
        return 0, PolyH.monomial(m.j), m.i
    if isinstance(m, HMon):
        return 0, PolyH.monomial(m.j), 0
    if isinstance(m, IntMon):
        return m.i, PolyH.monomial(m.j), 0
    return None


def _emit_word(a: int, p: PolyH, b: int, out: dict, scale: Fraction):
    """Accumulate int^a p(H) d^b with a*b = 0 into a term dict."""
    for j, c in p.coeffs.items():
        c = c * scale
        if not c:
            continue
        if a > 0:
            mon = IntMon(a, j)
        elif b > 0:
            mon = DiffMon(j, b)
        else:
            mon = HMon(j)
        out[mon] = out.get(mon, Fraction(0)) + c
        if not out[mon]:
            del out[mon]


def _emit_unit(s: int, t: int, out: dict, scale: Fraction):
    if not scale:
        return
    mon = MatUnit(s, t)
    out[mon] = out.get(mon, Fraction(0)) + scale
    if not out[mon]:
        del out[mon]


def _midword(a: int, p: PolyH, b: int, out: dict, scale: Fraction):
    """Reduce the general word int^a p(H) d^b to canonical terms.

    Uses int^m d^m = 1 - e[0,0] - ... - e[m-1,m-1] with m = min(a, b); the
    surviving pure side carries the shifted polynomial.
    """
    if p.is_zero() or not scale:
        return
    m = min(a, b)
    if m == 0:
        _emit_word(a, p, b, out, scale)
        return
    # int^a p(H) d^b = p(H-a) int^a d^b
    if a > b:
        _emit_word(a - b, p.shift(-b), 0, out, scale)
    elif b > a:
        _emit_word(0, p.shift(-a), b - a, out, scale)
    else:
        _emit_word(0, p.shift(-a), 0, out, scale)
    for t in range(m):
        _emit_unit(t + a - m, t + b - m, out, -scale * p(t + 1 - m))


def _mono_mul_into(m1, m2, out: dict, scale: Fraction):
    """Accumulate scale * (m1 * m2) in canonical form into `out`."""
    w1, w2 = _word(m1), _word(m2)
    if w1 is not None and w2 is not None:
        a1, p1, b1 = w1
        a2, p2, b2 = w2
        if b1 >= a2:
            d = b1 - a2
            _midword(a1, p1 * p2.shift(d), d + b2, out, scale)
        else:
            u = a2 - b1
            _midword(a1 + u, p1.shift(u) * p2, b2, out, scale)
    elif w1 is not None:
        # word * e[s,t]
        a, p, b = w1
        s, t = m2.s, m2.t
        if s >= b:
            _emit_unit(s - b + a, t, out, scale * p(s - b + 1))
    elif w2 is not None:
        # e[s,t] * word
        s, t = m1.s, m1.t
        a, p, b = w2
        if t >= a:
            _emit_unit(s, t - a + b, out, scale * p(t - a + 1))
    else:
        if m1.t == m2.s:
            _emit_unit(m1.s, m2.t, out, scale)


def mono_mul(m1, m2) -> "I1Element":
    out = {}
    _mono_mul_into(m1, m2, out, Fraction(1))
    return I1Element(out)


def _mono_sort_key(m):
    """Eq. (4) print/order key: d-part (high order first), H-part, int-part,
    matrix part."""
    if isinstance(m, DiffMon):
        return (0, -m.i, m.j)
    if isinstance(m, HMon):
        return (1, m.j, 0)
    if isinstance(m, IntMon):
        return (2, m.i, m.j)
    return (3, m.s, m.t)


class I1Element:
    """Sparse canonical-form element; immutable by convention."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for m, v in terms.items():
                v = v if isinstance(v, Fraction) else Fraction(v)
                if v:
                    t[m] = v
        self.terms = t

    @classmethod
    def zero(cls) -> "I1Element":
        return cls()

    @classmethod
    def from_scalar(cls, v) -> "I1Element":
        return cls({HMon(0): Fraction(v)})

    @classmethod
    def from_mono(cls, m, coeff=1) -> "I1Element":
        return cls({m: Fraction(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = I1Element.from_scalar(other)
        if not isinstance(other, I1Element):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = I1Element.from_scalar(other)
        out = dict(self.terms)
        for m, v in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + v
            if not out[m]:
                del out[m]
        r = I1Element.__new__(I1Element)
        r.terms = out
        return r

    __radd__ = __add__

    def __neg__(self):
        r = I1Element.__new__(I1Element)
        r.terms = {m: -v for m, v in self.terms.items()}
        return r

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = I1Element.from_scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return I1Element.from_scalar(other) - self

    def scale(self, c) -> "I1Element":
        c = c if isinstance(c, Fraction) else Fraction(c)
        if not c:
            return I1Element()
        r = I1Element.__new__(I1Element)
        r.terms = {m: c * v for m, v in self.terms.items()}
        return r

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, I1Element):
            return NotImplemented
        out = {}
        for m1, v1 in self.terms.items():
            for m2, v2 in other.terms.items():
                _mono_mul_into(m1, m2, out, v1 * v2)
        r = I1Element.__new__(I1Element)
        r.terms = out
        return r

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative operator power")
        result = I1Element.from_scalar(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def involution(self) -> "I1Element":
        r = I1Element.__new__(I1Element)
        r.terms = {mono_involution(m): v for m, v in self.terms.items()}
        return r

    def grade_component(self, d: int) -> "I1Element":
        r = I1Element.__new__(I1Element)
        r.terms = {m: v for m, v in self.terms.items() if mono_degree(m) == d}
        return r

    def degrees(self):
        return sorted({mono_degree(m) for m in self.terms})

    def is_in_F(self) -> bool:
        return all(isinstance(m, MatUnit) for m in self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _mono_sort_key(kv[0]))

    def __repr__(self):
        from .opparser import format_operator
        from .tensor import from_i1

        return f"I1Element({format_operator(from_i1(self))})"


def generators():
    """(d, int, H, x) with x = int*H."""
    partial = I1Element.from_mono(DiffMon(0, 1))
    integ = I1Element.from_mono(IntMon(1, 0))
    h = I1Element.from_mono(HMon(1))
    x = I1Element.from_mono(IntMon(1, 1))
    return partial, integ, h, x


def idempotent_sum(n: int) -> I1Element:
    """e[0,0] + ... + e[n-1,n-1]."""
    return I1Element({MatUnit(k, k): Fraction(1) for k in range(n)})


def decompose_lemma21(a: I1Element, n: int):
    """Split a = u*d^n + c with u = a*int^n and c = a*(e[0,0]+...+e[n-1,n-1]).

    c lies in F with all column indices < n, and u*d^n annihilates the
    idempotent, so the sum is direct.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    integ_n = I1Element.from_mono(IntMon(n, 0))
    u = a * integ_n
    c = a * idempotent_sum(n)
    return u, c


def ker_right_mult_poly(alpha: PolyH):
    """Column indices i with e[j,i]*alpha(H) = 0, i.e. alpha(i+1) = 0."""
    if alpha.is_zero():
        raise ZeroPolynomial("right multiplication by the zero polynomial")
    return nonneg_shifted_roots(alpha)


def from_polyh(p: PolyH) -> I1Element:
    """The element p(H)."""
    return I1Element({HMon(j): c for j, c in p.coeffs.items()})


class PolyX:
    """Sparse polynomial in x with rational coefficients (monomial basis)."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for d, v in coeffs.items():
                v = v if isinstance(v, Fraction) else Fraction(v)
                if v:
                    c[int(d)] = v
        self._c = c

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "PolyX":
        return cls({degree: Fraction(coeff)})

    @property
    def coeffs(self):
        return dict(self._c)

    def coeff(self, d: int) -> Fraction:
        return self._c.get(d, Fraction(0))

    def is_zero(self) -> bool:
        return not self._c

    def __eq__(self, other):
        if not isinstance(other, PolyX):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other):
        out = dict(self._c)
        for d, v in other._c.items():
            out[d] = out.get(d, Fraction(0)) + v
            if not out[d]:
                del out[d]
        r = PolyX.__new__(PolyX)
        r._c = out
        return r

    def scale(self, c) -> "PolyX":
        c = Fraction(c)
        r = PolyX.__new__(PolyX)
        r._c = {} if not c else {d: c * v for d, v in self._c.items()}
        return r

    def __repr__(self):
        if not self._c:
            return "PolyX(0)"
        parts = [f"{v}*x^{d}" for d, v in sorted(self._c.items())]
        return "PolyX(" + " + ".join(parts) + ")"


def _mono_apply(m, s: int):
    """Action of a basis monomial on x^s: (coefficient, new degree) or None."""
    if isinstance(m, DiffMon):
        if s < m.i:
            return None
        c = Fraction(1)
        for k in range(m.i):
            c *= s - k
        ns = s - m.i
        return c * Fraction(ns + 1) ** m.j, ns
    if isinstance(m, HMon):
        return Fraction(s + 1) ** m.j, s
    if isinstance(m, IntMon):
        c = Fraction(s + 1) ** m.j
        for k in range(1, m.i + 1):
            c /= s + k
        return c, s + m.i
    if s != m.t:
        return None
    return Fraction(factorial(m.t), factorial(m.s)), m.s


def apply(a: I1Element, p: PolyX) -> PolyX:
    """Action of a on K[x]: d differentiates, int integrates, H = d x."""
    out = {}
    for m, v in a.terms.items():
        for s, c in p.coeffs.items():
            hit = _mono_apply(m, s)
            if hit is None:
                continue
            coeff, ns = hit
            coeff = coeff * v * c
            if coeff:
                out[ns] = out.get(ns, Fraction(0)) + coeff
                if not out[ns]:
                    del out[ns]
    r = PolyX.__new__(PolyX)
    r._c = out
    return r


def matrix_of(a: I1Element, n: int):
    """(n+1)x(n+1) matrix of the action on span{1, x, ..., x^n}.

    Column s holds the coefficients of a(x^s) truncated to degree <= n.
    """
    mat = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
    for s in range(n + 1):
        img = apply(a, PolyX.monomial(s))
        for d, v in img.coeffs.items():
            if d <= n:
                mat[d][s] = v
    return mat


def faithful_bound(a: I1Element) -> int:
    """Truncation size at which matrix_of is faithful on a's support.

    All K[H]-coefficients act polynomially in the basis degree, so agreement
    on this many sample points forces equality by interpolation.
    """
    s_max = t_max = j_max = i_max = 0
    for m in a.terms:
        if isinstance(m, DiffMon):
            j_max = max(j_max, m.j)
            i_max = max(i_max, m.i)
        elif isinstance(m, HMon):
            j_max = max(j_max, m.j)
        elif isinstance(m, IntMon):
            j_max = max(j_max, m.j)
            i_max = max(i_max, m.i)
        else:
            s_max = max(s_max, m.s)
            t_max = max(t_max, m.t)
    return s_max + t_max + j_max + i_max + 1


def project_B1(a: I1Element):
    """Quotient map onto the skew Laurent algebra: d -> d, int -> d^-1.

    Kills exactly the matrix-unit terms; the kernel is F.
    """
    from .laurent import B1Element

    coeffs = {}
    for m, v in a.terms.items():
        if isinstance(m, MatUnit):
            continue
        if isinstance(m, DiffMon):
            d, p = m.i, PolyH.monomial(m.j, v)
        elif isinstance(m, HMon):
            d, p = 0, PolyH.monomial(m.j, v)
        else:  # IntMon: d^-i H^j = (H-i)^j d^-i
            d, p = -m.i, PolyH.monomial(m.j, v).shift(-m.i)
        coeffs[d] = coeffs.get(d, PolyH()) + p
    return B1Element({d: p for d, p in coeffs.items() if not p.is_zero()})
