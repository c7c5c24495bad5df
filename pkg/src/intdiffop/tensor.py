"""Tensor arithmetic over n factors, including mixed quotient algebras.

An element is a sparse rational combination of n-tuples of factor monomials.
Each factor is either in full mode (basis monomials of the one-variable
algebra) or in quotient mode (Laurent monomials H^j D^d with D invertible,
no matrix units).  Quotients by sums of the height-one primes are realized
by flipping factors into quotient mode.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch, EmptyFactorList, ModeMismatch
from .i1 import (
    DiffMon,
    HMon,
    I1Element,
    IntMon,
    MatUnit,
    PolyX,
    _mono_apply,
    _mono_mul_into,
    mono_degree,
    mono_involution,
)
from .polyh import PolyH

MODE_FULL = "I"
MODE_QUOT = "B"


@dataclass(frozen=True)
class B1Mon:
    """H^j D^d in a quotient-mode factor; d is the Laurent power of D."""

    d: int
    j: int


def _b1_mul_into(m1: B1Mon, m2: B1Mon, out: dict, scale: Fraction):
    # H^j1 D^d1 * H^j2 D^d2 = H^j1 (H+d1)^j2 D^(d1+d2)
    p = PolyH.monomial(m1.j) * PolyH.monomial(m2.j).shift(m1.d)
    for j, c in p.coeffs.items():
        mon = B1Mon(m1.d + m2.d, j)
        out[mon] = out.get(mon, Fraction(0)) + scale * c
        if not out[mon]:
            del out[mon]


def _factor_mul(m1, m2, mode) -> dict:
    out = {}
    if mode == MODE_QUOT:
        _b1_mul_into(m1, m2, out, Fraction(1))
    else:
        _mono_mul_into(m1, m2, out, Fraction(1))
    return out


def _factor_involution(m, mode) -> dict:
    if mode == MODE_QUOT:
        # (H^j D^d)* = D^-d H^j = (H-d)^j D^-d
        p = PolyH.monomial(m.j).shift(-m.d)
        return {B1Mon(-m.d, j): c for j, c in p.coeffs.items()}
    return {mono_involution(m): Fraction(1)}


def _factor_degree(m, mode) -> int:
    if mode == MODE_QUOT:
        # D has grading degree -1 (the integration D^-1 has degree +1)
        return -m.d
    return mono_degree(m)


class InElement:
    """Element over n tensor factors with per-factor mode flags."""

    __slots__ = ("n", "modes", "terms")

    def __init__(self, n: int, terms=None, modes=None):
        if n < 1:
            raise ValueError("n must be >= 1")
        self.n = n
        self.modes = tuple(modes) if modes is not None else (MODE_FULL,) * n
        if len(self.modes) != n:
            raise DimensionMismatch("mode vector length != n")
        t = {}
        if terms:
            for tup, v in terms.items():
                v = v if isinstance(v, Fraction) else Fraction(v)
                if v:
                    t[tuple(tup)] = v
        self.terms = t

    @classmethod
    def zero(cls, n: int, modes=None) -> "InElement":
        return cls(n, None, modes)

    @classmethod
    def one(cls, n: int, modes=None) -> "InElement":
        modes = tuple(modes) if modes is not None else (MODE_FULL,) * n
        unit = tuple(B1Mon(0, 0) if m == MODE_QUOT else HMon(0) for m in modes)
        return cls(n, {unit: Fraction(1)}, modes)

    @classmethod
    def from_scalar(cls, n: int, v, modes=None) -> "InElement":
        return cls.one(n, modes).scale(v)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _check(self, other: "InElement"):
        if self.n != other.n:
            raise DimensionMismatch(f"{self.n} factors vs {other.n}")
        if self.modes != other.modes:
            raise ModeMismatch(f"{self.modes} vs {other.modes}")

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = InElement.from_scalar(self.n, other, self.modes)
        if not isinstance(other, InElement):
            return NotImplemented
        return (self.n, self.modes, self.terms) == (other.n, other.modes, other.terms)

    def __hash__(self):
        return hash((self.n, self.modes, frozenset(self.terms.items())))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = InElement.from_scalar(self.n, other, self.modes)
        self._check(other)
        out = dict(self.terms)
        for tup, v in other.terms.items():
            out[tup] = out.get(tup, Fraction(0)) + v
            if not out[tup]:
                del out[tup]
        return InElement(self.n, out, self.modes)

    __radd__ = __add__

    def __neg__(self):
        return InElement(self.n, {t: -v for t, v in self.terms.items()}, self.modes)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = InElement.from_scalar(self.n, other, self.modes)
        return self + (-other)

    def __rsub__(self, other):
        return InElement.from_scalar(self.n, other, self.modes) - self

    def scale(self, c) -> "InElement":
        c = c if isinstance(c, Fraction) else Fraction(c)
        if not c:
            return InElement(self.n, None, self.modes)
        return InElement(self.n, {t: c * v for t, v in self.terms.items()}, self.modes)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, InElement):
            return NotImplemented
        self._check(other)
        out = {}
        for t1, v1 in self.terms.items():
            for t2, v2 in other.terms.items():
                # factorwise products, then multilinear cross-expansion
                partial = [((), v1 * v2)]
                for k in range(self.n):
                    fk = _factor_mul(t1[k], t2[k], self.modes[k])
                    if not fk:
                        partial = []
                        break
                    partial = [
                        (pref + (m,), c * fc)
                        for pref, c in partial
                        for m, fc in fk.items()
                    ]
                for tup, c in partial:
                    out[tup] = out.get(tup, Fraction(0)) + c
                    if not out[tup]:
                        del out[tup]
        return InElement(self.n, out, self.modes)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative operator power")
        result = InElement.one(self.n, self.modes)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def involution(self) -> "InElement":
        out = {}
        for tup, v in self.terms.items():
            partial = [((), v)]
            for k in range(self.n):
                fk = _factor_involution(tup[k], self.modes[k])
                partial = [
                    (pref + (m,), c * fc)
                    for pref, c in partial
                    for m, fc in fk.items()
                ]
            for t, c in partial:
                out[t] = out.get(t, Fraction(0)) + c
                if not out[t]:
                    del out[t]
        return InElement(self.n, out, self.modes)

    def grade_component(self, d: int) -> "InElement":
        out = {
            tup: v
            for tup, v in self.terms.items()
            if sum(_factor_degree(m, mo) for m, mo in zip(tup, self.modes)) == d
        }
        return InElement(self.n, out, self.modes)

    def sorted_terms(self):
        from .i1 import _mono_sort_key

        def key(tup):
            return tuple(
                _mono_sort_key(m) if not isinstance(m, B1Mon) else (4, m.d, m.j)
                for m in tup
            )

        return sorted(self.terms.items(), key=lambda kv: key(kv[0]))

    def __repr__(self):
        from .opparser import format_operator

        if all(m == MODE_FULL for m in self.modes):
            return f"InElement({format_operator(self)})"
        return f"InElement(n={self.n}, modes={self.modes}, {len(self.terms)} terms)"


def tensor(factors) -> InElement:
    """Tensor product of full-mode one-variable elements."""
    factors = list(factors)
    if not factors:
        raise EmptyFactorList("tensor of zero factors")
    n = len(factors)
    terms = {(): Fraction(1)}
    for f in factors:
        if not isinstance(f, I1Element):
            raise ModeMismatch("tensor factors must be full-mode elements")
        new = {}
        for tup, v in terms.items():
            for m, c in f.terms.items():
                new[tup + (m,)] = v * c
        terms = new
        if not terms:
            break
    return InElement(n, terms)


def from_i1(a: I1Element) -> InElement:
    return tensor([a])


def to_i1(a: InElement) -> I1Element:
    if a.n != 1 or a.modes != (MODE_FULL,):
        raise ModeMismatch("only n = 1 full-mode elements embed back")
    return I1Element({tup[0]: v for tup, v in a.terms.items()})


def gen_partial(n: int, i: int) -> InElement:
    return _gen(n, i, DiffMon(0, 1))

def gen_integ(n: int, i: int) -> InElement:
    return _gen(n, i, IntMon(1, 0))

def gen_h(n: int, i: int) -> InElement:
    return _gen(n, i, HMon(1))

def gen_x(n: int, i: int) -> InElement:
    return _gen(n, i, IntMon(1, 1))

def gen_e(n: int, i: int, s: int, t: int) -> InElement:
    return _gen(n, i, MatUnit(s, t))


def _gen(n: int, i: int, mon) -> InElement:
    if not 1 <= i <= n:
        raise DimensionMismatch(f"factor index {i} outside 1..{n}")
    tup = tuple(mon if k == i - 1 else HMon(0) for k in range(n))
    return InElement(n, {tup: Fraction(1)})


class PolyXn:
    """Sparse polynomial in x_1..x_n, multidegree -> rational coefficient."""

    __slots__ = ("n", "_c")

    def __init__(self, n: int, coeffs=None):
        self.n = n
        c = {}
        if coeffs:
            for deg, v in coeffs.items():
                v = v if isinstance(v, Fraction) else Fraction(v)
                if v:
                    c[tuple(deg)] = v
        self._c = c

    @classmethod
    def one(cls, n: int) -> "PolyXn":
        return cls(n, {(0,) * n: Fraction(1)})

    @classmethod
    def monomial(cls, n: int, deg, coeff=1) -> "PolyXn":
        return cls(n, {tuple(deg): Fraction(coeff)})

    @property
    def coeffs(self):
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def __eq__(self, other):
        if not isinstance(other, PolyXn):
            return NotImplemented
        return self.n == other.n and self._c == other._c

    def __hash__(self):
        return hash((self.n, frozenset(self._c.items())))

    def __add__(self, other):
        if self.n != other.n:
            raise DimensionMismatch(f"{self.n} variables vs {other.n}")
        out = dict(self._c)
        for d, v in other._c.items():
            out[d] = out.get(d, Fraction(0)) + v
            if not out[d]:
                del out[d]
        return PolyXn(self.n, out)

    def __neg__(self):
        return PolyXn(self.n, {d: -v for d, v in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if self.n != other.n:
            raise DimensionMismatch(f"{self.n} variables vs {other.n}")
        out = {}
        for d1, v1 in self._c.items():
            for d2, v2 in other._c.items():
                d = tuple(a + b for a, b in zip(d1, d2))
                out[d] = out.get(d, Fraction(0)) + v1 * v2
                if not out[d]:
                    del out[d]
        return PolyXn(self.n, out)

    def scale(self, c) -> "PolyXn":
        c = Fraction(c)
        return PolyXn(self.n, {d: c * v for d, v in self._c.items()} if c else None)

    def to_poly_x(self) -> PolyX:
        if self.n != 1:
            raise DimensionMismatch("only n = 1 converts to a one-variable polynomial")
        return PolyX({d[0]: v for d, v in self._c.items()})

    def __repr__(self):
        return f"PolyXn(n={self.n}, {self._c})"


def apply_n(a: InElement, p: PolyXn) -> PolyXn:
    """Factorwise action on K[x_1..x_n]; factor i acts on variable x_i."""
    if any(m == MODE_QUOT for m in a.modes):
        raise ModeMismatch("quotient-mode factors do not act on polynomials")
    if a.n != p.n:
        raise DimensionMismatch(f"{a.n} factors vs {p.n} variables")
    out = {}
    for tup, v in a.terms.items():
        for deg, c in p.coeffs.items():
            coeff = v * c
            ndeg = []
            for m, s in zip(tup, deg):
                hit = _mono_apply(m, s)
                if hit is None:
                    coeff = Fraction(0)
                    break
                fc, ns = hit
                coeff *= fc
                if not coeff:
                    break
                ndeg.append(ns)
            if coeff:
                d = tuple(ndeg)
                out[d] = out.get(d, Fraction(0)) + coeff
                if not out[d]:
                    del out[d]
    return PolyXn(a.n, out)


def _i1_to_b1_monos(m) -> dict:
    """Image of a full-mode monomial in the quotient: d -> D, int -> D^-1."""
    if isinstance(m, MatUnit):
        return {}
    if isinstance(m, DiffMon):
        return {B1Mon(m.i, m.j): Fraction(1)}
    if isinstance(m, HMon):
        return {B1Mon(0, m.j): Fraction(1)}
    # int^i H^j = D^-i H^j = (H-i)^j D^-i
    p = PolyH.monomial(m.j).shift(-m.i)
    return {B1Mon(-m.i, j): c for j, c in p.coeffs.items()}


def project_modulo_prime(a: InElement, index_set) -> InElement:
    """Quotient by the sum of the height-one primes at the given factors.

    Matrix-unit terms in those factors die; surviving monomials switch to
    quotient mode.  Multiplicative: project(ab) = project(a) * project(b).
    """
    idx = {i - 1 for i in index_set}
    for i in idx:
        if not 0 <= i < a.n:
            raise DimensionMismatch(f"factor index {i + 1} outside 1..{a.n}")
    modes = tuple(
        MODE_QUOT if (k in idx or m == MODE_QUOT) else MODE_FULL
        for k, m in enumerate(a.modes)
    )
    out = {}
    for tup, v in a.terms.items():
        partial = [((), v)]
        for k in range(a.n):
            if k in idx and a.modes[k] == MODE_FULL:
                fk = _i1_to_b1_monos(tup[k])
            else:
                fk = {tup[k]: Fraction(1)}
            if not fk:
                partial = []
                break
            partial = [
                (pref + (m,), c * fc) for pref, c in partial for m, fc in fk.items()
            ]
        for t, c in partial:
            out[t] = out.get(t, Fraction(0)) + c
            if not out[t]:
                del out[t]
    return InElement(a.n, out, modes)


def ideal_membership(a: InElement, antichain) -> bool:
    """True iff every support tuple is compatible with some generator.

    A tuple is f-compatible when each factor with f(i) = 0 is a matrix unit.
    """
    if any(m == MODE_QUOT for m in a.modes):
        raise ModeMismatch("membership is defined for full-mode elements")
    if a.n != antichain.n:
        raise DimensionMismatch(f"{a.n} factors vs antichain over {antichain.n}")
    for tup in a.terms:
        ok = False
        for mask in antichain.masks:
            if all(
                (mask >> k) & 1 or isinstance(tup[k], MatUnit) for k in range(a.n)
            ):
                ok = True
                break
        if not ok:
            return False
    return True
