"""Period coordinates, the diffeomorphism action, and reality conditions.

Complex scalars are Gaussian rationals (pairs of exact rationals), so every
check in this module is exact.  A point of the period domain is a projective
4-tuple (p13, p23, p14, p24) on the quadric p13 p24 - p23 p14 = 0 with

    -p13 conj(p24) + p23 conj(p14) + p14 conj(p23) - p24 conj(p13) > 0;

this pairing is real as written (it is a sum of z + conj(z) pairs), and it
is positive exactly on the locus mapping to (H+ x H+) u (H- x H-) under
(x, y) = (p14/p24, p13/p14).

Two-forms are expanded over the five coordinate monomials dx1^dy1, dx1^dx2,
dy1^dx2, dx1^dy2, dy1^dy2 with polynomial coefficients in (x1, y1); the
family is closed under pullback along the lifting normal forms.  A small
exterior engine (wedge and d on one- and two-forms) backs the closure
checks on the omega basis.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .exactalg import Poly, rat
from .realstruct import Lifting, lifting_to_affine

_XY = ("x1", "y1")


# ---------------------------------------------------------------------------
# Gaussian rationals
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GaussRat:
    """re + im*i with exact rational parts."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def of(cls, value) -> "GaussRat":
        if isinstance(value, GaussRat):
            return value
        return cls(rat(value))

    def __add__(self, other):
        other = GaussRat.of(other)
        return GaussRat(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = GaussRat.of(other)
        return GaussRat(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GaussRat.of(other) - self

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __mul__(self, other):
        other = GaussRat.of(other)
        return GaussRat(self.re * other.re - self.im * other.im,
                        self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = GaussRat.of(other)
        n = other.norm2()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        conj = other.conjugate()
        prod = self * conj
        return GaussRat(prod.re / n, prod.im / n)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GaussRat(Fraction(other))
        if not isinstance(other, GaussRat):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def conjugate(self) -> "GaussRat":
        return GaussRat(self.re, -self.im)

    def norm2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __repr__(self):
        return f"GaussRat({self.re}, {self.im})"


I = GaussRat(0, 1)


# ---------------------------------------------------------------------------
# complex polynomials in (x1, y1)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CPoly:
    """Polynomial in (x1, y1) with Gaussian-rational coefficients."""

    re: Poly
    im: Poly

    @classmethod
    def const(cls, value) -> "CPoly":
        value = GaussRat.of(value)
        return cls(Poly.const(_XY, value.re), Poly.const(_XY, value.im))

    @classmethod
    def real(cls, poly: Poly) -> "CPoly":
        return cls(poly, Poly(_XY))

    def __add__(self, other: "CPoly") -> "CPoly":
        return CPoly(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "CPoly") -> "CPoly":
        return CPoly(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "CPoly":
        return CPoly(-self.re, -self.im)

    def __mul__(self, other: "CPoly") -> "CPoly":
        return CPoly(self.re * other.re - self.im * other.im,
                     self.re * other.im + self.im * other.re)

    def scale(self, z: GaussRat) -> "CPoly":
        return CPoly(self.re.scale(z.re) - self.im.scale(z.im),
                     self.re.scale(z.im) + self.im.scale(z.re))

    def conjugate(self) -> "CPoly":
        """Complex conjugation of coefficients (x1, y1 are real variables)."""
        return CPoly(self.re, -self.im)

    def subs(self, mapping: dict[str, Poly]) -> "CPoly":
        return CPoly(self.re.subs(mapping), self.im.subs(mapping))

    def is_zero(self) -> bool:
        return self.re.is_zero() and self.im.is_zero()

    def is_constant(self) -> bool:
        return self.re.is_constant() and self.im.is_constant()

    def constant_value(self) -> GaussRat:
        return GaussRat(self.re.constant_value(), self.im.constant_value())

    def derivative(self, name: str) -> "CPoly":
        return CPoly(self.re.derivative(name), self.im.derivative(name))


CP_ZERO = CPoly.const(0)


# ---------------------------------------------------------------------------
# period points and the diffeomorphism action
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PeriodPoint:
    p13: GaussRat
    p23: GaussRat
    p14: GaussRat
    p24: GaussRat

    @classmethod
    def make(cls, p13, p23, p14, p24) -> "PeriodPoint":
        p = cls(GaussRat.of(p13), GaussRat.of(p23), GaussRat.of(p14), GaussRat.of(p24))
        if not quadric(p).is_zero():
            raise ValueError("point is off the period quadric")
        if p.p14.is_zero() or p.p24.is_zero():
            raise ValueError("degenerate period point (p14 or p24 vanishes)")
        if positivity(p) <= 0:
            raise ValueError("period point violates the positivity condition")
        return p

    def scaled(self, factor) -> "PeriodPoint":
        z = GaussRat.of(factor)
        return PeriodPoint(self.p13 * z, self.p23 * z, self.p14 * z, self.p24 * z)


def quadric(p: PeriodPoint) -> GaussRat:
    return p.p13 * p.p24 - p.p23 * p.p14


def positivity(p: PeriodPoint) -> Fraction:
    """The real value of the pairing; positive on the period domain."""
    q = (-p.p13 * p.p24.conjugate() + p.p23 * p.p14.conjugate()
         + p.p14 * p.p23.conjugate() - p.p24 * p.p13.conjugate())
    assert q.im == 0
    return q.re


def to_halfplanes(p: PeriodPoint) -> tuple[GaussRat, GaussRat]:
    """(x, y) = (p14/p24, p13/p14); both imaginary parts share one sign."""
    if p.p24.is_zero() or p.p14.is_zero():
        raise ValueError("degenerate")
    return p.p14 / p.p24, p.p13 / p.p14


def point_from_xy(x, y) -> PeriodPoint:
    """The period point (xy, y, x, 1); requires sign(Im x) = sign(Im y) != 0."""
    x, y = GaussRat.of(x), GaussRat.of(y)
    return PeriodPoint.make(x * y, y, x, GaussRat(1))


@dataclass(frozen=True)
class ActionMatrix:
    """Integer data (M, k) of an orientation-preserving diffeomorphism."""

    a: int
    b: int
    c: int
    d: int
    k: int = 0

    def __post_init__(self):
        if self.a * self.d - self.b * self.c not in (1, -1):
            raise ValueError("matrix must have determinant +-1")

    @property
    def e(self) -> int:
        return self.a * self.d - self.b * self.c


#: sends (x, y) to (-x, -y) on half-plane coordinates
EXCHANGE_NEG = ActionMatrix(-1, 0, 0, 1, 0)
#: the case-B exchange: sends x to 1/x and y to -y
EXCHANGE_F = ActionMatrix(0, -1, -1, 0, 0)


def borcea_act(act: ActionMatrix, m: int, p: PeriodPoint) -> PeriodPoint:
    """Block action [[M, -(2k/m) M], [0, e M]] on (p13, p23, p14, p24)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    s = GaussRat(Fraction(2 * act.k, m))
    a, b, c, d, e = (GaussRat.of(v) for v in (act.a, act.b, act.c, act.d, act.e))
    p13 = a * p.p13 + b * p.p23 - s * (a * p.p14 + b * p.p24)
    p23 = c * p.p13 + d * p.p23 - s * (c * p.p14 + d * p.p24)
    p14 = e * (a * p.p14 + b * p.p24)
    p24 = e * (c * p.p14 + d * p.p24)
    return PeriodPoint.make(p13, p23, p14, p24)


# ---------------------------------------------------------------------------
# the exterior engine and two-forms
# ---------------------------------------------------------------------------

#: coordinate order (x1, y1, x2, y2); a one-form is 4 CPoly coefficients
OneForm = tuple

#: the five coordinate 2-form monomials spanning the forms we meet
TWO_FORM_KEYS = ((0, 1), (0, 2), (1, 2), (0, 3), (1, 3))
_KEY_NAMES = {(0, 1): "dx1^dy1", (0, 2): "dx1^dx2", (1, 2): "dy1^dx2",
              (0, 3): "dx1^dy2", (1, 3): "dy1^dy2"}


@dataclass(frozen=True)
class TwoForm:
    """Coefficients over TWO_FORM_KEYS, each a CPoly in (x1, y1)."""

    coeffs: tuple[CPoly, CPoly, CPoly, CPoly, CPoly]

    @classmethod
    def from_dict(cls, d: dict) -> "TwoForm":
        for key, value in d.items():
            if key not in TWO_FORM_KEYS and not value.is_zero():
                raise ValueError(f"unexpected 2-form component {key}")
        return cls(tuple(d.get(k, CP_ZERO) for k in TWO_FORM_KEYS))

    def coeff(self, key) -> CPoly:
        return self.coeffs[TWO_FORM_KEYS.index(key)]

    def __add__(self, other: "TwoForm") -> "TwoForm":
        return TwoForm(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, z: GaussRat) -> "TwoForm":
        return TwoForm(tuple(c.scale(z) for c in self.coeffs))

    def conjugate(self) -> "TwoForm":
        return TwoForm(tuple(c.conjugate() for c in self.coeffs))

    def __eq__(self, other):
        if not isinstance(other, TwoForm):
            return NotImplemented
        return all((a - b).is_zero() for a, b in zip(self.coeffs, other.coeffs))


def omega_basis() -> tuple[OneForm, OneForm, OneForm, OneForm]:
    """dx1; dy1; dx2 - x1 dx1 - y1 dy1; dy2 - x1 dy1 + y1 dx1."""
    x1 = CPoly.real(Poly.var(_XY, "x1"))
    y1 = CPoly.real(Poly.var(_XY, "y1"))
    one = CPoly.const(1)
    zero = CP_ZERO
    w1 = (one, zero, zero, zero)
    w2 = (zero, one, zero, zero)
    w3 = (-x1, -y1, one, zero)
    w4 = (y1, -x1, zero, one)
    return w1, w2, w3, w4


def wedge(f: OneForm, g: OneForm) -> dict:
    """f ^ g as a dict over index pairs (i < j)."""
    out: dict = {}
    for i in range(4):
        for j in range(i + 1, 4):
            coeff = f[i] * g[j] - f[j] * g[i]
            if not coeff.is_zero():
                out[(i, j)] = out.get((i, j), CP_ZERO) + coeff
    return out


def theta_form(i: int, j: int) -> TwoForm:
    """theta_ij = omega_i ^ omega_j for 1-based indices."""
    basis = omega_basis()
    return TwoForm.from_dict(wedge(basis[i - 1], basis[j - 1]))


def eta_form(p: PeriodPoint) -> TwoForm:
    """p13 theta13 + p23 theta23 + p14 theta14 + p24 theta24."""
    total = TwoForm.from_dict({})
    for (i, j), coeff in (((1, 3), p.p13), ((2, 3), p.p23),
                          ((1, 4), p.p14), ((2, 4), p.p24)):
        total = total + theta_form(i, j).scale(coeff)
    return total


def d_one_form(f: OneForm) -> dict:
    """Exterior derivative; coefficients only depend on (x1, y1)."""
    out: dict = {}
    for j in range(4):
        for var_idx, name in ((0, "x1"), (1, "y1")):
            der = f[j].derivative(name)
            if der.is_zero() or var_idx == j:
                continue
            i, jj = sorted((var_idx, j))
            sign = 1 if var_idx < j else -1
            piece = der if sign == 1 else -der
            out[(i, jj)] = out.get((i, jj), CP_ZERO) + piece
    return {k: v for k, v in out.items() if not v.is_zero()}


def d_two_form(f: TwoForm) -> dict:
    """Exterior derivative of a 2-form, as a dict over index triples."""
    out: dict = {}
    for key, coeff in zip(TWO_FORM_KEYS, f.coeffs):
        for var_idx, name in ((0, "x1"), (1, "y1")):
            der = coeff.derivative(name)
            if der.is_zero() or var_idx in key:
                continue
            order = [var_idx, key[0], key[1]]
            triple = tuple(sorted(order))
            perm_sign = _sort_sign(order)
            piece = der if perm_sign == 1 else -der
            out[triple] = out.get(triple, CP_ZERO) + piece
    return {k: v for k, v in out.items() if not v.is_zero()}


def _sort_sign(order: list[int]) -> int:
    sign = 1
    order = list(order)
    for i in range(len(order)):
        for j in range(len(order) - 1 - i):
            if order[j] > order[j + 1]:
                order[j], order[j + 1] = order[j + 1], order[j]
                sign = -sign
    return sign


def pullback(l: Lifting, form: TwoForm) -> TwoForm:
    """Exact pullback of a two-form along the lifting's affine map.

    Requires the lifting to satisfy its square constraint (case A: f1 = d1,
    case B: f1 = -f2), which is what keeps the result inside the five-term
    family.
    """
    if l.linear_case == "A" and l.f1 != l.d1:
        raise ValueError("case-A pullback requires f1 = d1")
    if l.linear_case == "B" and l.f1 != -l.f2:
        raise ValueError("case-B pullback requires f1 = -f2")
    aff = lifting_to_affine(l)
    rows = [[CPoly.const(aff.linear[i][j]) for j in range(4)] for i in range(4)]
    x1_image = (Poly.var(_XY, "x1").scale(aff.linear[0][0])
                + Poly.var(_XY, "y1").scale(aff.linear[0][1])
                + Poly.const(_XY, aff.translation[0]))
    y1_image = (Poly.var(_XY, "x1").scale(aff.linear[1][0])
                + Poly.var(_XY, "y1").scale(aff.linear[1][1])
                + Poly.const(_XY, aff.translation[1]))
    mapping = {"x1": x1_image, "y1": y1_image}
    out: dict = {}
    for key, coeff in zip(TWO_FORM_KEYS, form.coeffs):
        if coeff.is_zero():
            continue
        substituted = coeff.subs(mapping)
        i, j = key
        for a in range(4):
            for b in range(a + 1, 4):
                scalar = (aff.linear[i][a] * aff.linear[j][b]
                          - aff.linear[i][b] * aff.linear[j][a])
                if scalar == 0:
                    continue
                piece = substituted.scale(GaussRat(scalar))
                out[(a, b)] = out.get((a, b), CP_ZERO) + piece
    leftover = out.get((2, 3), CP_ZERO)
    if not leftover.is_zero():
        raise ValueError("pullback left the five-term two-form family")
    out.pop((2, 3), None)
    return TwoForm.from_dict(out)


def reality_conditions(l: Lifting, p: PeriodPoint) -> bool:
    """Whether pullback(eta) = lambda conj(eta) for some unimodular lambda.

    lambda is read off from the dx1^dy2 coefficient (p14 never vanishes) and
    then all five coefficient identities are checked exactly.
    """
    eta = eta_form(p)
    pulled = pullback(l, eta)
    eta_bar = eta.conjugate()
    reference = eta_bar.coeff((0, 3)).constant_value()
    assert not reference.is_zero()
    lam = pulled.coeff((0, 3)).constant_value() / reference
    if lam.norm2() != 1:
        return False
    return pulled == eta_bar.scale(lam)


def constraint_predicate(linear_case: str, f2_nonzero: bool, x: GaussRat, y: GaussRat) -> bool:
    """The closed-form locus conditions on half-plane coordinates."""
    if linear_case == "A":
        if x.re != 0 or y.re != 0:
            return False
        return (not f2_nonzero) or x * y == GaussRat(-1)
    if linear_case == "B":
        if x.norm2() != 1 or y.re != 0:
            return False
        return (not f2_nonzero) or x * (GaussRat(1) - y) == GaussRat(1) + y
    raise ValueError(f"unknown linear case {linear_case!r}")


def locus_samples(linear_case: str, f2_nonzero: bool) -> list[tuple[GaussRat, GaussRat]]:
    """Deterministic exact sample points on each constraint locus."""
    ys = [GaussRat(0, v) for v in (Fraction(1, 2), Fraction(1), Fraction(2),
                                   Fraction(-1, 2), Fraction(-1), Fraction(-2))]
    samples = []
    for y in ys:
        if linear_case == "A":
            x = GaussRat(-1) / y if f2_nonzero else y
        else:
            if f2_nonzero:
                x = (GaussRat(1) + y) / (GaussRat(1) - y)
            else:
                x = GaussRat(0, 1 if y.im > 0 else -1)
        samples.append((x, y))
    return samples


def exchange_check(linear_case: str, f2_nonzero: bool, m: int) -> bool:
    """The named automorphism preserves the locus and swaps its components."""
    auto = EXCHANGE_F if (linear_case == "B" and f2_nonzero) else EXCHANGE_NEG
    for x, y in locus_samples(linear_case, f2_nonzero):
        if not constraint_predicate(linear_case, f2_nonzero, x, y):
            return False
        image = borcea_act(auto, m, point_from_xy(x, y))
        x2, y2 = to_halfplanes(image)
        if not constraint_predicate(linear_case, f2_nonzero, x2, y2):
            return False
        if (x2.im > 0) == (x.im > 0):
            return False
    return True


def lifting_for_moduli(linear_case: str, f2_nonzero: bool) -> Lifting:
    """A lifting in normal position realizing the requested pullback case."""
    if linear_case == "A":
        return Lifting.make("A", f1=0, f2=1 if f2_nonzero else 0, d1=0)
    return Lifting.make("B", f1=Fraction(-1) if f2_nonzero else 0,
                        f2=1 if f2_nonzero else 0, d1=0)
