"""Exact scalar, polynomial, affine and integer-linear substrate.

Everything in this package is computed over the rationals; no floating
point appears anywhere.  The pieces provided here:

  Rat        -- arbitrary-precision rational, an alias for fractions.Fraction.
  Poly       -- sparse multivariate polynomial over Rat.  A polynomial caries
                a fixed ordered tuple of parameter names; a term maps an
                exponent tuple (one entry per parameter) to a coefficient.
                Zero coefficients are never stored.
  AffineMap4 -- a 4x4 matrix plus a translation 4-vector.  Entries may be
                Rat (instantiated maps) or Poly (symbolic maps); the two
                layers are bridged by instantiate().
  AffineSubspace -- canonical basepoint + echelon basis of a solution set,
                returned by fixed_locus().
  DiophSystem / dioph_solve -- exact integer linear systems, decided through
                Smith normal form; solutions come with a particular vector
                and a basis of the homogeneous lattice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Rat = Fraction

#: the one global parameter universe for surface/lifting data (design choice:
#: the torsion coefficient m is always a concrete integer, never a parameter).
PARAM_NAMES = ("delta1", "eps1", "delta3", "eps3", "delta4", "eps4",
               "f1", "f2", "d1", "gamma1")


def rat(value: Union[int, str, Fraction], den: int | None = None) -> Fraction:
    """Build an exact rational from an int, a Fraction or a 'num/den' string."""
    if den is not None:
        return Fraction(value, den)
    if isinstance(value, str):
        return Fraction(value)
    return Fraction(value)


def fmt_rat(q: Fraction) -> str:
    """Serialize a rational as 'num/den' (or a bare integer when den == 1)."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------
# sparse multivariate polynomials
# ---------------------------------------------------------------------------

Monomial = tuple  # tuple[int, ...], one exponent per parameter


class Poly:
    """Sparse polynomial over Rat in a fixed ordered parameter universe."""

    __slots__ = ("params", "terms")

    def __init__(self, params: Sequence[str], terms: Mapping[Monomial, Fraction] | None = None):
        self.params = tuple(params)
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff != 0:
                    if len(mono) != len(self.params):
                        raise ValueError(f"monomial {mono} does not fit universe {self.params}")
                    clean[tuple(mono)] = coeff
        self.terms = clean

    # -- constructors

    @classmethod
    def const(cls, params: Sequence[str], value: Union[int, Fraction]) -> "Poly":
        value = Fraction(value)
        if value == 0:
            return cls(params)
        return cls(params, {(0,) * len(tuple(params)): value})

    @classmethod
    def var(cls, params: Sequence[str], name: str) -> "Poly":
        params = tuple(params)
        exp = [0] * len(params)
        exp[params.index(name)] = 1
        return cls(params, {tuple(exp): Fraction(1)})

    # -- queries

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in mono) for mono in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()), Fraction(0))

    def total_degree(self) -> int:
        return max((sum(mono) for mono in self.terms), default=0)

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def linear_parts(self) -> tuple[Fraction, dict[str, Fraction]]:
        """Split an affine polynomial into (constant, {var: coefficient}).

        Raises ValueError on any monomial of total degree >= 2.
        """
        const = Fraction(0)
        lin: dict[str, Fraction] = {}
        for mono, coeff in self.terms.items():
            deg = sum(mono)
            if deg == 0:
                const = coeff
            elif deg == 1:
                idx = next(i for i, e in enumerate(mono) if e == 1)
                lin[self.params[idx]] = coeff
            else:
                raise ValueError("polynomial is not affine")
        return const, lin

    # -- arithmetic

    def _check(self, other: "Poly") -> None:
        if self.params != other.params:
            raise ValueError(f"parameter universes differ: {self.params} vs {other.params}")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            out[mono] = out.get(mono, Fraction(0)) + coeff
        return Poly(self.params, out)

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            out[mono] = out.get(mono, Fraction(0)) - coeff
        return Poly(self.params, out)

    def __neg__(self) -> "Poly":
        return Poly(self.params, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        out: dict[Monomial, Fraction] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                mono = tuple(x + y for x, y in zip(ma, mb))
                out[mono] = out.get(mono, Fraction(0)) + ca * cb
        return Poly(self.params, out)

    def scale(self, factor: Union[int, Fraction]) -> "Poly":
        factor = Fraction(factor)
        return Poly(self.params, {m: c * factor for m, c in self.terms.items()})

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative polynomial power")
        out = Poly.const(self.params, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.params == other.params and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.params, frozenset(self.terms.items())))

    def derivative(self, name: str) -> "Poly":
        """Exact partial derivative with respect to one parameter."""
        idx = self.params.index(name)
        out: dict[Monomial, Fraction] = {}
        for mono, coeff in self.terms.items():
            if mono[idx] == 0:
                continue
            lowered = tuple(e - 1 if i == idx else e for i, e in enumerate(mono))
            out[lowered] = out.get(lowered, Fraction(0)) + coeff * mono[idx]
        return Poly(self.params, out)

    def evaluate(self, assignment: Mapping[str, Union[int, Fraction]]) -> Fraction:
        """Evaluate at a full assignment of the universe, exactly."""
        values = [Fraction(assignment[name]) for name in self.params]
        total = Fraction(0)
        for mono, coeff in self.terms.items():
            term = coeff
            for v, e in zip(values, mono):
                if e:
                    term *= v ** e
            total += term
        return total

    def subs(self, mapping: Mapping[str, "Poly"]) -> "Poly":
        """Substitute every variable by a polynomial (all over one new universe)."""
        target = next(iter(mapping.values())).params
        out = Poly(target)
        for mono, coeff in self.terms.items():
            term = Poly.const(target, coeff)
            for name, e in zip(self.params, mono):
                if e:
                    term = term * (mapping[name] ** e)
            out = out + term
        return out

    def __repr__(self) -> str:
        if not self.terms:
            return "Poly(0)"
        bits = []
        for mono in sorted(self.terms, reverse=True):
            factors = [fmt_rat(self.terms[mono])]
            for name, e in zip(self.params, mono):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            bits.append("*".join(factors))
        return "Poly(" + " + ".join(bits) + ")"


def poly_arith(a: Poly, b: Poly, op: str) -> Poly:
    """Dispatch {add, sub, mul} on two polynomials over the same universe."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


# ---------------------------------------------------------------------------
# affine maps on R^4
# ---------------------------------------------------------------------------

Vec4 = tuple
Mat4 = tuple


def _vec(entries: Iterable) -> Vec4:
    v = tuple(entries)
    if len(v) != 4:
        raise ValueError("expected a 4-vector")
    return v


def _mat(rows: Iterable[Iterable]) -> Mat4:
    m = tuple(_vec(r) for r in rows)
    if len(m) != 4:
        raise ValueError("expected a 4x4 matrix")
    return m


@dataclass(frozen=True)
class AffineMap4:
    """x |-> linear @ x + translation, with Rat or Poly entries."""

    linear: Mat4
    translation: Vec4

    @classmethod
    def make(cls, rows: Iterable[Iterable], translation: Iterable) -> "AffineMap4":
        return cls(_mat(rows), _vec(translation))

    def apply(self, point: Vec4) -> Vec4:
        out = []
        for i in range(4):
            acc = self.linear[i][0] * point[0]
            for j in range(1, 4):
                acc = acc + self.linear[i][j] * point[j]
            out.append(acc + self.translation[i])
        return _vec(out)


def identity_map() -> AffineMap4:
    one, zero = Fraction(1), Fraction(0)
    return AffineMap4.make([[one if i == j else zero for j in range(4)] for i in range(4)],
                           [zero] * 4)


def translation_map(v: Iterable) -> AffineMap4:
    ident = identity_map()
    return AffineMap4(ident.linear, _vec(Fraction(x) for x in v))


def affine_compose(f: AffineMap4, g: AffineMap4) -> AffineMap4:
    """Return f after g: linear = f.linear g.linear, t = f.linear g.t + f.t."""
    fl, gl = f.linear, g.linear
    linear_rows = []
    translation = []
    for i in range(4):
        row = []
        for j in range(4):
            acc = fl[i][0] * gl[0][j]
            for k in range(1, 4):
                acc = acc + fl[i][k] * gl[k][j]
            row.append(acc)
        linear_rows.append(row)
        acc = fl[i][0] * g.translation[0]
        for k in range(1, 4):
            acc = acc + fl[i][k] * g.translation[k]
        translation.append(acc + f.translation[i])
    return AffineMap4(_mat(linear_rows), _vec(translation))


def _det4(m: Mat4):
    """Exact 4x4 determinant by cofactor expansion (entries Rat or Poly)."""

    def det3(rows, cols):
        (a, b, c), (d, e, f), (g, h, i) = [[m[r][cc] for cc in cols] for r in rows]
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)

    total = None
    sign = 1
    for col in range(4):
        rows = [1, 2, 3]
        cols = [c for c in range(4) if c != col]
        piece = m[0][col] * det3(rows, cols)
        if sign < 0:
            piece = -piece
        total = piece if total is None else total + piece
        sign = -sign
    return total


def _scalar_is_zero(x) -> bool:
    if isinstance(x, Poly):
        return x.is_zero()
    return x == 0


def _scalar_div(x, d):
    if isinstance(x, Poly):
        if not isinstance(d, Poly) or not d.is_constant():
            raise ValueError("singular linear part")
        return x.scale(Fraction(1) / d.constant_value())
    return x / d


def affine_inverse(f: AffineMap4) -> AffineMap4:
    """Exact inverse: linear^-1 and -linear^-1 t.  Raises on singular linear part."""
    m = f.linear
    det = _det4(m)
    if _scalar_is_zero(det):
        raise ValueError("singular linear part")
    if isinstance(det, Poly) and not det.is_constant():
        raise ValueError("singular linear part")

    def cofactor(i, j):
        rows = [r for r in range(4) if r != i]
        cols = [c for c in range(4) if c != j]
        (a, b, c), (d, e, g), (h, p, q) = [[m[r][cc] for cc in cols] for r in rows]
        minor = a * (e * q - g * p) - b * (d * q - g * h) + c * (d * p - e * h)
        return minor if (i + j) % 2 == 0 else -minor

    inv = _mat(tuple(_scalar_div(cofactor(j, i), det) for j in range(4)) for i in range(4))
    trans = _vec(
        -(sum((inv[i][k] * f.translation[k] for k in range(1, 4)),
              start=inv[i][0] * f.translation[0]))
        for i in range(4)
    )
    return AffineMap4(inv, trans)


def instantiate(f: AffineMap4, assignment: Mapping[str, Union[int, Fraction]]) -> AffineMap4:
    """Evaluate a symbolic (Poly-entry) map at concrete parameter values."""

    def ev(x):
        return x.evaluate(assignment) if isinstance(x, Poly) else Fraction(x)

    return AffineMap4(_mat(tuple(ev(x) for x in row) for row in f.linear),
                      _vec(ev(x) for x in f.translation))


def symbolic_map(params: Sequence[str], f: AffineMap4) -> AffineMap4:
    """Lift a Rat-entry map into the Poly layer over the given universe."""

    def up(x):
        return x if isinstance(x, Poly) else Poly.const(params, x)

    return AffineMap4(_mat(tuple(up(x) for x in row) for row in f.linear),
                      _vec(up(x) for x in f.translation))


def maps_equal(f: AffineMap4, g: AffineMap4) -> bool:
    def eq(x, y):
        if isinstance(x, Poly) or isinstance(y, Poly):
            return x == y
        return Fraction(x) == Fraction(y)

    return (all(eq(f.linear[i][j], g.linear[i][j]) for i in range(4) for j in range(4))
            and all(eq(f.translation[i], g.translation[i]) for i in range(4)))


# ---------------------------------------------------------------------------
# fixed loci of instantiated affine maps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AffineSubspace:
    """Canonical form: basepoint with zero entries at free coordinates, plus
    a reduced-echelon basis of the direction space.  Equality of canonical
    forms is equality of the underlying affine subspaces."""

    point: Vec4
    basis: tuple[Vec4, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, p: Vec4) -> bool:
        diff = [Fraction(p[i]) - Fraction(self.point[i]) for i in range(4)]
        for b in self.basis:
            pivot = next(i for i in range(4) if b[i] != 0)
            coeff = diff[pivot] / b[pivot]
            for i in range(4):
                diff[i] -= coeff * b[i]
        return all(x == 0 for x in diff)


def fixed_locus(f: AffineMap4) -> AffineSubspace | None:
    """Exact solution set of f(x) = x, i.e. (linear - I) x = -translation."""
    rows = [[Fraction(f.linear[i][j]) - (1 if i == j else 0) for j in range(4)]
            + [-Fraction(f.translation[i])] for i in range(4)]
    return solve_affine_system(rows)


def solve_affine_system(rows: list[list[Fraction]]) -> AffineSubspace | None:
    """Gauss-Jordan over Q on an augmented system [M | rhs] in 4 unknowns."""
    rows = [list(r) for r in rows]
    ncols = 4
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        scale = rows[r][c]
        rows[r] = [x / scale for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    for i in range(r, len(rows)):
        if rows[i][ncols] != 0:
            return None
    free = [c for c in range(ncols) if c not in pivots]
    point = [Fraction(0)] * ncols
    for row, c in zip(rows, pivots):
        point[c] = row[ncols]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for row, c in zip(rows, pivots):
            vec[c] = -row[fc]
        basis.append(tuple(vec))
    return AffineSubspace(tuple(point), tuple(basis))


# ---------------------------------------------------------------------------
# integer linear systems (Smith normal form)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DiophSystem:
    """matrix @ x = rhs over the integers, with named unknowns."""

    matrix: tuple[tuple[int, ...], ...]
    rhs: tuple[int, ...]
    names: tuple[str, ...]

    def __post_init__(self):
        if len(self.matrix) != len(self.rhs):
            raise ValueError("row count mismatch")
        for row in self.matrix:
            if len(row) != len(self.names):
                raise ValueError("column count mismatch")


@dataclass(frozen=True)
class DiophSolution:
    """One particular solution plus a basis of the homogeneous lattice."""

    particular: tuple[int, ...]
    lattice: tuple[tuple[int, ...], ...]


def smith_normal_form(a: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Return (d, u, v) with u @ a @ v = d diagonal and u, v unimodular."""
    m = len(a)
    n = len(a[0]) if m else 0
    d = [list(map(int, row)) for row in a]
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, k):
        d[dst] = [x + k * y for x, y in zip(d[dst], d[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, k):
        for row in d:
            row[dst] += k * row[src]
        for row in v:
            row[dst] += k * row[src]

    t = 0
    while t < min(m, n):
        # move a minimal nonzero entry of the remaining block to (t, t)
        entries = [(abs(d[i][j]), i, j) for i in range(t, m) for j in range(t, n) if d[i][j] != 0]
        if not entries:
            break
        _, pi, pj = min(entries)
        swap_rows(t, pi)
        swap_cols(t, pj)
        dirty = False
        for i in range(t + 1, m):
            if d[i][t] != 0:
                add_row(t, i, -(d[i][t] // d[t][t]))
                if d[i][t] != 0:
                    dirty = True
        for j in range(t + 1, n):
            if d[t][j] != 0:
                add_col(t, j, -(d[t][j] // d[t][t]))
                if d[t][j] != 0:
                    dirty = True
        if dirty:
            continue
        # enforce divisibility d[t][t] | d[i][j]
        fix = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                    if d[i][j] % d[t][t] != 0), None)
        if fix is not None:
            add_row(fix[0], t, 1)
            continue
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return d, u, v


def dioph_solve(sys: DiophSystem) -> DiophSolution | None:
    """Decide matrix @ x = rhs over Z.  None certifies unsolvability."""
    m = len(sys.matrix)
    n = len(sys.names)
    if m == 0:
        basis = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
        return DiophSolution((0,) * n, basis)
    if n == 0:
        return DiophSolution((), ()) if all(b == 0 for b in sys.rhs) else None
    d, u, v = smith_normal_form(sys.matrix)
    ub = [sum(u[i][k] * sys.rhs[k] for k in range(m)) for i in range(m)]
    y = [0] * n
    for i in range(min(m, n)):
        di = d[i][i]
        if di != 0:
            if ub[i] % di != 0:
                return None
            y[i] = ub[i] // di
        elif ub[i] != 0:
            return None
    for i in range(n, m):
        if ub[i] != 0:
            return None
    particular = tuple(sum(v[i][k] * y[k] for k in range(n)) for i in range(n))
    # free directions: columns j of v with zero diagonal entry (or beyond rank)
    free_cols = [j for j in range(n) if j >= min(m, n) or d[j][j] == 0]
    lattice = tuple(tuple(v[i][j] for i in range(n)) for j in free_cols)
    return DiophSolution(particular, lattice)


def lattice_member(target: Sequence[Fraction], gens: Sequence[Sequence[Fraction]]) -> tuple[int, ...] | None:
    """Solve sum k_i gens[i] = target with k integral, by clearing denominators."""
    dim = len(target)
    dens = [Fraction(x).denominator for x in target]
    for g in gens:
        dens.extend(Fraction(x).denominator for x in g)
    scale = 1
    for dd in dens:
        scale = scale * dd // _gcd(scale, dd)
    matrix = tuple(tuple(int(Fraction(g[i]) * scale) for g in gens) for i in range(dim))
    rhs = tuple(int(Fraction(target[i]) * scale) for i in range(dim))
    names = tuple(f"k{i}" for i in range(len(gens)))
    sol = dioph_solve(DiophSystem(matrix, rhs, names))
    return None if sol is None else sol.particular


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a) if a else abs(b)


def hnf_basis(vectors: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Row-style Hermite basis of the integer lattice spanned by the inputs."""
    rows = [list(map(int, v)) for v in vectors if any(v)]
    if not rows:
        return []
    n = len(rows[0])
    basis: list[list[int]] = []
    col = 0
    while col < n and rows:
        cand = [r for r in rows if r[col] != 0]
        if not cand:
            col += 1
            continue
        while True:
            cand.sort(key=lambda r: abs(r[col]))
            pivot = cand[0]
            done = True
            for r in cand[1:]:
                q = r[col] // pivot[col]
                for i in range(n):
                    r[i] -= q * pivot[i]
                if r[col] != 0:
                    done = False
            cand = [pivot] + [r for r in cand[1:] if r[col] != 0]
            if done or len(cand) == 1:
                break
        pivot = cand[0]
        if pivot[col] < 0:
            pivot = [-x for x in pivot]
        basis.append(pivot)
        rest = [r for r in rows if r is not cand[0] and not all(x == 0 for x in r)]
        new_rows = []
        for r in rest:
            if r[col] != 0:
                q = r[col] // pivot[col]
                r = [x - q * y for x, y in zip(r, pivot)]
            if any(r):
                new_rows.append(r)
        rows = new_rows
        col += 1
    # reduce entries above pivots for a canonical-ish presentation
    for i in reversed(range(len(basis))):
        pcol = next(c for c in range(n) if basis[i][c] != 0)
        for j in range(i):
            if basis[j][pcol] != 0:
                q = basis[j][pcol] // basis[i][pcol]
                basis[j] = [x - q * y for x, y in zip(basis[j], basis[i])]
    return [tuple(b) for b in basis]
