"""Topology of real parts: fixed planes, equivalence classes, stabilizers.

Every involutive lifting sigma g fixes a 2-plane in R^4, and the components
of the real part are the equivalence classes of those planes under the
action of the surface group.  The pipeline:

  * involutive_solutions() (from classify) describes all g with
    (sigma g)^2 = 1 as an integer lattice set in the exponents of g;
  * uniform shifts -- elements h whose twisted conjugation acts on that set
    as a pure translation -- collapse it to finitely many residue
    representatives;
  * components_equivalent() decides plane equivalence exactly.  The
    direction and level conditions cut the head of a witness down to a
    linear sublattice; the remaining membership conditions are linear in
    the central exponents, with at most one h_a h_b cross term, which is
    eliminated by a modular-periodicity argument.  A returned witness is
    re-verified by transporting the plane; a "none" answer is certified by
    integer unsolvability, never by a bounded search;
  * stabilizer() computes the subgroup preserving a plane (rank-2 free
    abelian in every case the catalog produces) and tags the quotient
    torus or Klein bottle via the orientation of the restricted action.

Planes are stored in a canonical form (reduced-echelon direction basis,
basepoint reduced modulo the direction span) so that equality of planes is
syntactic equality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .exactalg import (
    AffineMap4,
    AffineSubspace,
    DiophSystem,
    Poly,
    affine_compose,
    dioph_solve,
    fixed_locus,
    hnf_basis,
)
from .classify import (
    Extension,
    LatticeSet,
    conj_word,
    extension_of,
    involutive_solutions,
    reduce_extension,
    splits,
)
from .group import KodairaParams, NormalWord, word_inv, word_mul, word_to_affine
from .realstruct import RealStructure

_WITNESS_VARS = ("ha", "hb", "hl", "ht")
_E3 = (Fraction(0), Fraction(0), Fraction(1), Fraction(0))


# ---------------------------------------------------------------------------
# canonical planes
# ---------------------------------------------------------------------------

def make_subspace(point, dirs) -> AffineSubspace:
    """Canonicalize point + span(dirs): echelon basis, reduced basepoint."""
    rows = [list(map(Fraction, d)) for d in dirs]
    basis: list[list[Fraction]] = []
    for c in range(4):
        pivot = next((r for r in rows if r[c] != 0), None)
        if pivot is None:
            continue
        rows.remove(pivot)
        pivot = [x / pivot[c] for x in pivot]
        rows = [[x - r[c] * yp for x, yp in zip(r, pivot)] for r in rows]
        basis = [[x - b[c] * yp for x, yp in zip(b, pivot)] for b in basis]
        basis.append(pivot)
        rows = [r for r in rows if any(x != 0 for x in r)]
    p = list(map(Fraction, point))
    for b in basis:
        c = next(i for i in range(4) if b[i] != 0)
        coeff = p[c]
        p = [x - coeff * y for x, y in zip(p, b)]
    return AffineSubspace(tuple(p), tuple(tuple(b) for b in basis))


def transport_plane(plane: AffineSubspace, h: AffineMap4) -> AffineSubspace:
    """The image h(plane), canonicalized."""
    image_point = h.apply(plane.point)
    image_dirs = []
    for d in plane.basis:
        image_dirs.append(tuple(
            sum(h.linear[i][j] * d[j] for j in range(4)) for i in range(4)))
    return make_subspace(image_point, image_dirs)


def _plane_frame(plane: AffineSubspace) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """Split a fixed plane into (horizontal direction d, basepoint).

    All fixed planes of involutive liftings contain the vertical direction
    e3 = d/dx2 and exactly one more direction with nonzero x1 component.
    """
    if plane.dim != 2:
        raise ValueError("expected a 2-dimensional plane")
    dirs = list(plane.basis)
    if _E3 not in [tuple(map(Fraction, d)) for d in dirs]:
        raise ValueError("plane does not contain the vertical fibre direction")
    others = [d for d in dirs if tuple(map(Fraction, d)) != _E3]
    d = others[0]
    if d[0] == 0:
        raise ValueError("plane direction has no x1 component")
    return tuple(map(Fraction, d)), tuple(map(Fraction, plane.point))


# ---------------------------------------------------------------------------
# transport equations and exact witness solving
# ---------------------------------------------------------------------------

def _transport_equations(plane1: AffineSubspace, plane2: AffineSubspace,
                         params: KodairaParams) -> list[Poly] | None:
    """Equations on (ha, hb, hl, ht) for h(plane1) = plane2, or None when the
    direction spaces are already incompatible."""
    d, p = _plane_frame(plane1)
    d2, p2 = _plane_frame(plane2)
    # (dx, dy) must be proportional to (d2x, d2y): c is forced by x1
    c = d[0] / d2[0]
    if d[1] != c * d2[1]:
        return None
    u = _WITNESS_VARS
    var = lambda n: Poly.var(u, n)
    const = lambda v: Poly.const(u, v)
    ha, hb, hl, ht = (var(n) for n in u)
    eqs = []
    # direction: y2 component of A_h d must be c * d2_w
    eqs.append(ha.scale(d[1]) - hb.scale(d[0]) + const(d[3] - c * d2[3]))
    # basepoint: A_h p + t_h - p2 must lie in span(d2, e3)
    m_x1 = ha + const(p[0] - p2[0])
    m_y1 = hb + const(p[1] - p2[1])
    m_y2 = (ha.scale(p[1] + params.eps3) + hb.scale(params.eps4 - p[0])
            + hl.scale(params.eps1) + ht.scale(params.eps2)
            - ha * hb + const(p[3] - p2[3]))
    if d2[0] != 0:
        phi1 = m_x1.scale(d2[1]) - m_y1.scale(d2[0])
        phi2 = m_x1.scale(d2[3]) - m_y2.scale(d2[0])
    else:  # unreachable for this plane family; kept for shape completeness
        phi1 = m_x1
        phi2 = m_y1.scale(d2[3]) - m_y2.scale(d2[1])
    eqs.extend([phi1, phi2])
    return eqs


def _integerize(poly: Poly) -> dict:
    """Clear denominators; return {monomial: int coefficient}."""
    scale = 1
    for coeff in poly.terms.values():
        d = coeff.denominator
        g = _gcd(scale, d)
        scale = scale * d // g
    return {mono: int(coeff * scale) for mono, coeff in poly.terms.items()}


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


class _Parametrization:
    """Tracks ambient = offset + basis @ k while equations are rewritten."""

    def __init__(self, names: tuple[str, ...]):
        self.ambient = len(names)
        self.offset = [0] * self.ambient
        self.basis = [tuple(1 if i == j else 0 for i in range(self.ambient))
                      for j in range(self.ambient)]
        self.names = names

    def compose(self, particular, lattice):
        offset = list(self.offset)
        for i in range(self.ambient):
            offset[i] += sum(particular[j] * self.basis[j][i]
                             for j in range(len(particular)))
        basis = [tuple(sum(vec[j] * self.basis[j][i] for j in range(len(vec)))
                       for i in range(self.ambient))
                 for vec in lattice]
        self.offset, self.basis = offset, basis
        self.names = tuple(f"k{j}" for j in range(len(basis))) or ("k0",)

    def substitution(self, old_names) -> dict[str, Poly]:
        mapping = {}
        for idx, nm in enumerate(old_names):
            # offset/basis are ambient-indexed; old var idx maps through them
            raise RuntimeError("substitution must be built from solver data")
        return mapping


def solve_witness(polys: list[Poly]) -> dict[str, int] | None:
    """Find an integer point of the transport equations, or certify none.

    Linear equations are solved through Smith form; a surviving quadratic
    (at most the single ha*hb cross term, possibly after cancelling it
    between equations) is handled by reducing modulo the lattice generated
    by the purely-linear variables: integer polynomials are periodic modulo
    any modulus, so scanning one period decides solvability.
    """
    names = _WITNESS_VARS
    offset = [0, 0, 0, 0]
    basis = [tuple(1 if i == j else 0 for i in range(4)) for j in range(4)]
    eqs = list(polys)
    cur = names
    for _ in range(8):
        eqs = [e for e in eqs if not e.is_zero()]
        if any(e.is_constant() for e in eqs):
            return None
        linear = [e for e in eqs if e.total_degree() <= 1]
        higher = [e for e in eqs if e.total_degree() > 1]
        if linear:
            rows, rhs = [], []
            for e in linear:
                ints = _integerize(e)
                constant = 0
                row = [0] * len(cur)
                for mono, coeff in ints.items():
                    if sum(mono) == 0:
                        constant = coeff
                    else:
                        row[next(i for i, x in enumerate(mono) if x)] = coeff
                rows.append(tuple(row))
                rhs.append(-constant)
            sol = dioph_solve(DiophSystem(tuple(rows), tuple(rhs), cur))
            if sol is None:
                return None
            new_offset = list(offset)
            for i in range(4):
                new_offset[i] += sum(sol.particular[j] * basis[j][i]
                                     for j in range(len(cur)))
            new_basis = [tuple(sum(vec[j] * basis[j][i] for j in range(len(cur)))
                               for i in range(4)) for vec in sol.lattice]
            new_names = tuple(f"k{j}" for j in range(len(new_basis))) or ("k0",)
            mapping = {}
            for idx, nm in enumerate(cur):
                expr = Poly.const(new_names, sol.particular[idx])
                for j, vec in enumerate(sol.lattice):
                    if vec[idx]:
                        expr = expr + Poly.var(new_names, new_names[j]).scale(vec[idx])
                mapping[nm] = expr
            offset, basis, cur = new_offset, new_basis, new_names
            eqs = [e.subs(mapping) for e in higher]
            continue
        if not higher:
            return dict(zip(names, offset))
        # cancel a shared quadratic part between multiple equations
        if len(higher) > 1:
            quad = lambda e: {mo: co for mo, co in e.terms.items() if sum(mo) > 1}
            base = higher[0]
            qb = quad(base)
            reduced = [base]
            progressed = False
            for e in higher[1:]:
                qe = quad(e)
                if set(qe) == set(qb):
                    ratio = next(iter(qe.values())) / next(iter(qb.values()))
                    if all(qe[mo] == qb[mo] * ratio for mo in qb):
                        reduced.append(e - base.scale(ratio))
                        progressed = True
                        continue
                reduced.append(e)
            if progressed:
                eqs = reduced
                continue
        solved = _solve_congruence(higher, cur)
        if solved is None:
            return None
        point = [0] * 4
        for i in range(4):
            point[i] = offset[i] + sum(solved[j] * basis[j][i]
                                       for j in range(len(cur)))
        return dict(zip(names, point))
    raise ArithmeticError("witness system did not stabilize")


def _solve_congruence(higher: list[Poly], cur: tuple[str, ...]) -> tuple[int, ...] | None:
    """Decide a single residual polynomial equation with quadratic variables.

    Splits variables into those occurring in nonlinear monomials and those
    occurring only linearly; the latter generate a modulus g, and the
    quadratic part only matters modulo g, so one period decides.
    """
    if len(higher) != 1:
        raise ArithmeticError("cannot reduce multiple nonlinear residues")
    ints = _integerize(higher[0])
    nonlin_idx = set()
    for mono, _ in ints.items():
        if sum(mono) > 1:
            nonlin_idx.update(i for i, e in enumerate(mono) if e)
    lin_idx = [i for i in range(len(cur))
               if any(mono[i] for mono in ints) and i not in nonlin_idx]
    if not nonlin_idx:
        raise ArithmeticError("linear equation routed to congruence solver")
    if not lin_idx:
        return _solve_pure_polynomial(ints, cur, sorted(nonlin_idx))
    g = 0
    for mono, coeff in ints.items():
        if sum(mono) == 1 and next(i for i, e in enumerate(mono) if e) in lin_idx:
            g = _gcd(g, coeff)
    assert g > 0
    nonlin = sorted(nonlin_idx)
    if g ** len(nonlin) > 20000:
        raise ArithmeticError("congruence period too large")
    for values in itertools.product(range(g), repeat=len(nonlin)):
        assign = dict(zip(nonlin, values))
        residue = 0
        for mono, coeff in ints.items():
            if any(mono[i] for i in lin_idx):
                continue
            term = coeff
            for i, e in enumerate(mono):
                if e:
                    term *= assign.get(i, 0) ** e
            residue += term
        if residue % g != 0:
            continue
        # solve the exact linear equation for the linear variables
        row = []
        for i in lin_idx:
            coeff = sum(c for mono, c in ints.items()
                        if sum(mono) == 1 and mono[i] == 1)
            row.append(coeff)
        sol = dioph_solve(DiophSystem((tuple(row),), (-residue,),
                                      tuple(cur[i] for i in lin_idx)))
        if sol is None:
            continue
        out = [0] * len(cur)
        for i, v in assign.items():
            out[i] = v
        for i, v in zip(lin_idx, sol.particular):
            out[i] = v
        return tuple(out)
    return None


def _solve_pure_polynomial(ints: dict, cur: tuple[str, ...], nonlin: list[int]) -> tuple[int, ...] | None:
    """Integer roots of a quadratic in a single variable (tripwire beyond)."""
    if len(nonlin) != 1:
        raise ArithmeticError("multivariate nonlinear residue")
    i = nonlin[0]
    a = b = c = 0
    for mono, coeff in ints.items():
        if mono[i] == 2 and sum(mono) == 2:
            a = coeff
        elif mono[i] == 1 and sum(mono) == 1:
            b = coeff
        elif sum(mono) == 0:
            c = coeff
        else:
            raise ArithmeticError("mixed nonlinear residue")
    if a == 0:
        raise ArithmeticError("linear equation routed to root solver")
    disc = b * b - 4 * a * c
    if disc < 0:
        return None
    root = _isqrt(disc)
    if root * root != disc:
        return None
    for num in (-b + root, -b - root):
        if num % (2 * a) == 0:
            out = [0] * len(cur)
            out[i] = num // (2 * a)
            return tuple(out)
    return None


def _isqrt(n: int) -> int:
    x = int(n ** 0.5)
    while x * x > n:
        x -= 1
    while (x + 1) * (x + 1) <= n:
        x += 1
    return x


def components_equivalent(plane1: AffineSubspace, plane2: AffineSubspace,
                          rs: RealStructure) -> NormalWord | None:
    """A witness h in G with h(plane1) = plane2, or a certified None."""
    eqs = _transport_equations(plane1, plane2, rs.params)
    if eqs is None:
        return None
    witness = solve_witness(eqs)
    if witness is None:
        return None
    word = NormalWord(witness["hb"], witness["ha"], witness["hl"], witness["ht"])
    h = word_to_affine(word, rs.params)
    if transport_plane(plane1, h) != plane2:
        raise ArithmeticError("witness failed transport verification")
    return word


def brute_force_equivalent(plane1: AffineSubspace, plane2: AffineSubspace,
                           rs: RealStructure, bound: int = 8) -> NormalWord | None:
    """Independent bounded search over witness exponents (test oracle)."""
    p = rs.params
    rng = range(-bound, bound + 1)
    for ha, hb in itertools.product(rng, rng):
        head = word_to_affine(NormalWord(hb, ha, 0, 0), p)
        base = transport_plane(plane1, head)
        if base.basis != plane2.basis:
            continue
        for hl, ht in itertools.product(rng, rng):
            shift = (Fraction(0), Fraction(0), hl * p.delta1,
                     hl * p.eps1 + ht * p.eps2)
            moved = tuple(x + s for x, s in zip(base.point, shift))
            if plane2.contains(moved):
                return NormalWord(hb, ha, hl, ht)
    return None


# ---------------------------------------------------------------------------
# stabilizers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StabilizerReport:
    generators: tuple[NormalWord, ...]
    abelian: bool
    rank: int
    topology: str  # 'torus' | 'klein-bottle'


def stabilizer(plane: AffineSubspace, rs: RealStructure) -> StabilizerReport:
    """Generators of H = {h in G : h(plane) = plane} plus its shape.

    The head lattice is cut out by the direction and level conditions; the
    single remaining membership condition is linear in the central
    exponents, so solvable heads form a subgroup detected on one period of
    the induced congruence.
    """
    p = rs.params
    eqs = _transport_equations(plane, plane, p)
    assert eqs is not None
    e0, phi1, phi2 = eqs
    # e0 and phi1 involve only (ha, hb) and are homogeneous for plane1 = plane2
    head_rows = []
    for e in (e0, phi1):
        ints = _integerize(e)
        if any(sum(mono) == 0 and coeff for mono, coeff in ints.items()):
            raise ArithmeticError("stabilizer system is not homogeneous")
        row = [0, 0]
        for mono, coeff in ints.items():
            if sum(mono) == 1:
                idx = next(i for i, x in enumerate(mono) if x)
                if idx > 1:
                    raise ArithmeticError("head equation touches central exponents")
                row[idx] = coeff
        head_rows.append(tuple(row))
    head_sol = dioph_solve(DiophSystem(tuple(head_rows), (0, 0), ("ha", "hb")))
    assert head_sol is not None
    head_lattice = [v for v in head_sol.lattice if any(v)]

    # central kernel: ha = hb = 0 in phi2 -> single homogeneous linear equation
    ints2 = _integerize(phi2)
    c_l = sum(c for mono, c in ints2.items() if sum(mono) == 1 and mono[2] == 1)
    c_t = sum(c for mono, c in ints2.items() if sum(mono) == 1 and mono[3] == 1)
    kernel_sol = dioph_solve(DiophSystem(((c_l, c_t),), (0,), ("hl", "ht")))
    assert kernel_sol is not None
    kernel = [v for v in kernel_sol.lattice if any(v)]

    g = _gcd(c_l, c_t)
    assert g > 0  # eps2 != 0 keeps the central column nonzero

    def head_value(ha: int, hb: int) -> int:
        total = 0
        for mono, coeff in ints2.items():
            if mono[2] or mono[3]:
                continue
            total += coeff * (ha ** mono[0]) * (hb ** mono[1])
        return total

    def central_solution(ha: int, hb: int) -> tuple[int, int] | None:
        sol = dioph_solve(DiophSystem(((c_l, c_t),), (-head_value(ha, hb),),
                                      ("hl", "ht")))
        return None if sol is None else (sol.particular[0], sol.particular[1])

    # solvable heads form a subgroup; scan one period of the congruence
    image_vectors: list[tuple[int, int]] = []
    if head_lattice:
        if g ** len(head_lattice) > 20000:
            raise ArithmeticError("stabilizer period too large")
        for coords in itertools.product(range(g), repeat=len(head_lattice)):
            if not any(coords):
                continue
            ha = sum(k * v[0] for k, v in zip(coords, head_lattice))
            hb = sum(k * v[1] for k, v in zip(coords, head_lattice))
            if head_value(ha, hb) % g == 0:
                image_vectors.append((ha, hb))
        for v in head_lattice:
            image_vectors.append((g * v[0], g * v[1]))
    image_basis = hnf_basis(image_vectors)

    generators: list[NormalWord] = []
    for ha, hb in image_basis:
        central = central_solution(ha, hb)
        assert central is not None
        generators.append(NormalWord(hb, ha, central[0], central[1]))
    for hl, ht in kernel:
        generators.append(NormalWord(0, 0, hl, ht))

    m = p.m
    h_affs = [word_to_affine(w, p) for w in generators]
    for w, h in zip(generators, h_affs):
        if transport_plane(plane, h) != plane:
            raise ArithmeticError("stabilizer generator failed verification")
    abelian = all(
        word_mul(word_mul(x, y, m), word_mul(word_inv(x, m), word_inv(y, m), m), m).is_identity()
        for x in generators for y in generators)
    rank = len(hnf_basis([w.as_tuple() for w in generators]))

    # orientation of the action on the plane: coefficient of d in A_h d
    d, _ = _plane_frame(plane)
    orientation_ok = True
    for h in h_affs:
        imaged = tuple(sum(h.linear[i][j] * d[j] for j in range(4)) for i in range(4))
        coeff = Fraction(imaged[0]) / Fraction(d[0])
        if coeff < 0:
            orientation_ok = False
    topology = "torus" if (abelian and orientation_ok) else "klein-bottle"
    return StabilizerReport(tuple(generators), abelian, rank, topology)


# ---------------------------------------------------------------------------
# involutive liftings and the real part
# ---------------------------------------------------------------------------

def _twisted_image(ext: Extension, h: NormalWord, g: NormalWord) -> NormalWord:
    """Exponents of (sigma^-1 h sigma) g h^-1; h sigma g h^-1 = sigma (that)."""
    m = ext.params.m
    c_h = word_mul(word_mul(word_inv(ext.square, m), conj_word(ext, h), m),
                   ext.square, m)
    return word_mul(word_mul(c_h, g, m), word_inv(h, m), m)


def uniform_shift_lattice(ext: Extension, sols: LatticeSet) -> list[tuple[int, ...]]:
    """Coset translations realized by twisted conjugation with some h in G."""
    if sols.dim == 0:
        return []
    shifts: list[tuple[int, ...]] = []
    base_word = NormalWord(*sols.offset)
    span = range(-1, 2)
    for hb, ha, hl, ht in itertools.product(span, span, span, span):
        h = NormalWord(hb, ha, hl, ht)
        if h.is_identity():
            continue
        image0 = _twisted_image(ext, h, base_word)
        coords0 = sols.coords_of(image0.as_tuple())
        if coords0 is None:
            continue
        pure = True
        for vec in sols.basis:
            shifted = NormalWord(*sols.element(tuple(
                1 if v is vec else 0 for v in sols.basis)))
            image1 = _twisted_image(ext, h, shifted)
            delta = tuple(x - y for x, y in
                          zip(image1.as_tuple(), image0.as_tuple()))
            if delta != vec:
                pure = False
                break
        if not pure:
            continue
        shift = tuple(x - y for x, y in zip(image0.as_tuple(), sols.offset))
        coords = sols.coords_of(tuple(o + s for o, s in zip(sols.offset, shift)))
        if coords is not None and any(coords):
            shifts.append(coords)
    return hnf_basis(shifts)


def _residues(shift_basis: list[tuple[int, ...]], dim: int) -> list[tuple[int, ...]] | None:
    """Transversal of Z^dim / shifts when the shifts have full rank."""
    if len(shift_basis) < dim:
        return None
    pivots = []
    for i in range(dim):
        row = shift_basis[i]
        if row[i] == 0 or any(row[j] for j in range(i)):
            return None
        pivots.append(abs(row[i]))
    total = 1
    for x in pivots:
        total *= x
    if total > 64:
        raise ArithmeticError("residue fundamental domain unexpectedly large")
    return [tuple(k) for k in itertools.product(*[range(x) for x in pivots])]


def involutive_liftings(rs: RealStructure) -> list[tuple[NormalWord, AffineSubspace]]:
    """Residue representatives g of the involutive liftings sigma g and
    their fixed planes."""
    ext = extension_of(rs)
    sols = involutive_solutions(ext)
    if sols is None:
        return []
    shifts = uniform_shift_lattice(ext, sols)
    residues = _residues(shifts, sols.dim)
    if residues is None:
        # fall back to a window; real_part() asserts the collapse
        residues = list(itertools.product(range(-2, 3), repeat=sols.dim))
    sigma = rs.sigma()
    out: list[tuple[NormalWord, AffineSubspace]] = []
    seen: set = set()
    for coords in residues:
        g = NormalWord(*sols.element(tuple(coords)))
        composed = affine_compose(sigma, word_to_affine(g, rs.params))
        plane = fixed_locus(composed)
        if plane is None or plane.dim != 2:
            raise ArithmeticError("involutive lifting without a fixed 2-plane")
        plane = make_subspace(plane.point, plane.basis)
        if plane not in seen:
            seen.add(plane)
            out.append((g, plane))
    return out


@dataclass(frozen=True)
class RealPartReport:
    label: str
    m: int
    components: int
    topologies: tuple[str, ...]

    @property
    def empty(self) -> bool:
        return self.components == 0

    def display(self) -> str:
        if self.components == 0:
            return "empty"
        if self.components == 1:
            return "T"
        return f"{self.components}T"


def real_part(rs: RealStructure, check_window: bool = True) -> RealPartReport:
    """Count component classes of the real part and tag their topology."""
    ext = extension_of(rs)
    label, _ = reduce_extension(ext)
    m = rs.params.m
    if not splits(ext):
        return RealPartReport(label, m, 0, ())
    items = involutive_liftings(rs)
    assert items, "split extension must produce involutive liftings"
    classes: list[tuple[NormalWord, AffineSubspace]] = []
    for g, plane in items:
        if not any(components_equivalent(plane, rep, rs) is not None
                   for _, rep in classes):
            classes.append((g, plane))
    if check_window:
        _assert_window_collapse(rs, ext, classes)
    if len(classes) > 4:
        raise ArithmeticError("more than four component classes")
    topologies = []
    for _, plane in classes:
        report = stabilizer(plane, rs)
        if report.rank != 2:
            raise ArithmeticError(f"stabilizer rank {report.rank} != 2")
        topologies.append(report.topology)
    return RealPartReport(label, m, len(classes), tuple(topologies))


def _assert_window_collapse(rs: RealStructure, ext: Extension,
                            classes: list[tuple[NormalWord, AffineSubspace]]) -> None:
    """Every involutive lifting with small coset coordinates must fall into
    one of the residue classes (the finiteness claim, checked not assumed)."""
    sols = involutive_solutions(ext)
    assert sols is not None
    sigma = rs.sigma()
    for coords in itertools.product(range(-2, 3), repeat=sols.dim):
        g = NormalWord(*sols.element(tuple(coords)))
        composed = affine_compose(sigma, word_to_affine(g, rs.params))
        plane = fixed_locus(composed)
        assert plane is not None and plane.dim == 2
        plane = make_subspace(plane.point, plane.basis)
        if not any(components_equivalent(plane, rep, rs) is not None
                   for _, rep in classes):
            raise ArithmeticError(
                f"window lifting at coords {coords} escapes the residue classes")


# ---------------------------------------------------------------------------
# the table
# ---------------------------------------------------------------------------

#: component counts as published: label -> (count for even m, count for odd m),
#: None where the label does not occur at that parity.
PUBLISHED_TABLE: dict[str, tuple[int | None, int | None]] = {
    "1B'": (2, 1),
    "1B''": (0, 0),
    "2B": (1, 1),
    "1A1ai'": (4, 3),
    "1A1ai''": (0, 0),
    "1A1aii'": (2, 2),
    "1A1aii''": (2, 1),
    "1A1bi'": (3, 4),
    "1A1bi''": (0, 0),
    "1A1bii'": (1, 1),
    "1A1bii''": (1, 2),
    "2A1": (2, 2),
    "1A2ai'": (0, None),
    "1A2ai''": (0, None),
    "1A2aii'": (0, None),
    "1A2aii''": (0, None),
    "2A2i": (0, None),
    "2A2ii": (None, 0),
}


def published_count(label: str, m: int) -> int | None:
    even, odd = PUBLISHED_TABLE[label]
    return even if m % 2 == 0 else odd


def full_table(m: int, check_window: bool = False) -> list[RealPartReport]:
    """One computed row per catalog case occurring at m."""
    from .classify import enumerate_cases

    rows = []
    for label, rs in enumerate_cases(m):
        row = real_part(rs, check_window=check_window)
        assert row.label == label
        rows.append(row)
    return rows


def table_diff(m: int) -> list[tuple[str, int, int]]:
    """(label, computed, published) for every row disagreeing with the
    published reference counts."""
    diffs = []
    for row in full_table(m):
        ref = published_count(row.label, m)
        assert ref is not None
        if row.components != ref:
            diffs.append((row.label, row.components, ref))
    return diffs
