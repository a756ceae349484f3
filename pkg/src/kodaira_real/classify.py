"""Normal-form classification of real structures and the splitting decision.

The complete invariant of a real structure is its extension data: the
conjugation words sigma g_i sigma^-1 (i = 1..4), the word of sigma^2, and
the linear position of sigma over the base elliptic curve (A1, A2 or B).
reduce_extension() rewrites that data into one of the eighteen catalog
normal forms using only the legal moves (generator changes of g1, g3, g4,
central lifting changes, translation conjugation), emitting a replayable
log.

splits() decides whether some element sigma g has order two.  The square of
sigma g is computed once and for all with polynomial exponents in the four
unknowns (r, s, l, t) of g = g4^r g3^s g1^l g2^t; the resulting exponent
equations are solved exactly over the integers.  No bounded search enters
the decision (a bounded search is kept separately as an oracle for tests).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .exactalg import DiophSystem, Poly, dioph_solve
from .group import (
    IDENTITY_WORD,
    KodairaParams,
    NormalWord,
    word_inv,
    word_mul,
    word_pow,
)
from .realstruct import Lifting, RealStructure, conjugations, square_in_G

#: the closed catalog; the last five require the parity constraint on m
CASE_LABELS = (
    "1B'", "1B''", "2B",
    "1A1ai'", "1A1ai''", "1A1aii'", "1A1aii''",
    "1A1bi'", "1A1bi''", "1A1bii'", "1A1bii''",
    "2A1",
    "1A2ai'", "1A2ai''", "1A2aii'", "1A2aii''",
    "2A2i", "2A2ii",
)

_EVEN_ONLY = ("1A2ai'", "1A2ai''", "1A2aii'", "1A2aii''", "2A2i")
_ODD_ONLY = ("2A2ii",)


class InadmissibleExtensionError(ValueError):
    """Raised when extension data violates an occurrence constraint."""


def labels_for(m: int) -> tuple[str, ...]:
    """The catalog labels occurring at this torsion coefficient: 17 for even
    m, 13 for odd m."""
    if m % 2 == 0:
        return tuple(lab for lab in CASE_LABELS if lab not in _ODD_ONLY)
    return tuple(lab for lab in CASE_LABELS if lab not in _EVEN_ONLY)


# ---------------------------------------------------------------------------
# extensions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Extension:
    """Conjugation words, square word, and elliptic position of a lifting."""

    params: KodairaParams
    conj: tuple[NormalWord, NormalWord, NormalWord, NormalWord]
    square: NormalWord
    elliptic_case: str  # 'A1' | 'A2' | 'B'

    def __post_init__(self):
        if self.elliptic_case not in ("A1", "A2", "B"):
            raise ValueError(f"unknown elliptic case {self.elliptic_case!r}")
        if self.conj[1] != NormalWord(0, 0, 0, -1):
            raise ValueError("conjugate of g2 must be g2^-1")
        if (self.square.b, self.square.a) not in ((0, 0), (0, 1)):
            raise ValueError("square must lie in Z or g3 Z")

    @property
    def mu(self) -> int:
        return self.conj[0].t


def extension_of(rs: RealStructure) -> Extension:
    """Record the conjugation action, the square, and the elliptic tag."""
    words = conjugations(rs.lifting, rs.params)
    assert words is not None  # rs is admissible by construction
    square = square_in_G(rs.lifting, rs.params)
    if rs.lifting.linear_case == "B":
        tag = "B"
    else:
        tag = "A1" if rs.lifting.d1 == 0 else "A2"
    return Extension(rs.params, tuple(words), square, tag)


def conj_word(ext: Extension, g: NormalWord) -> NormalWord:
    """Image of g under the conjugation automorphism sigma . sigma^-1."""
    m = ext.params.m
    w1, w2, w3, w4 = ext.conj
    out = word_pow(w4, g.b, m)
    out = word_mul(out, word_pow(w3, g.a, m), m)
    out = word_mul(out, word_pow(w1, g.l, m), m)
    out = word_mul(out, word_pow(w2, g.t, m), m)
    return out


def _validate_involution(ext: Extension) -> None:
    """conj o conj must equal conjugation by the square word."""
    m = ext.params.m
    basis = (NormalWord(0, 0, 1, 0), NormalWord(0, 0, 0, 1),
             NormalWord(0, 1, 0, 0), NormalWord(1, 0, 0, 0))
    sq_inv = word_inv(ext.square, m)
    for g in basis:
        twice = conj_word(ext, conj_word(ext, g))
        target = word_mul(word_mul(ext.square, g, m), sq_inv, m)
        if twice != target:
            raise InadmissibleExtensionError(
                "conjugation data is not an involution modulo the square")
    if conj_word(ext, ext.square) != ext.square:
        raise InadmissibleExtensionError("square word is not conjugation-invariant")


# ---------------------------------------------------------------------------
# reduction to normal form
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Move:
    """One reduction step.

    kind 'g1': g1 -> g1 g2^t, data (t,)
    kind 'g3': g3 -> g3 g1^l g2^t, data (l, t)
    kind 'g4': g4 -> g4 g1^r g2^s, data (r, s)
    kind 'lifting': sigma -> sigma g1^k g2^s, data (k, s)
    kind 'tau': conjugation by a central translation (gamma2 normalization)
    """

    kind: str
    data: tuple[int, ...] = ()


ReductionLog = tuple[Move, ...]


class _Reducer:
    """Mutable word-level state for the normalization pipeline."""

    def __init__(self, ext: Extension):
        self.m = ext.params.m
        self.w = list(ext.conj)
        self.square = ext.square
        self.tag = ext.elliptic_case
        self.moves: list[Move] = []

    # -- move primitives (each rewrites all stored words exactly)

    def _reexpress(self, adjust):
        self.w = [adjust(x) for x in self.w]
        self.square = adjust(self.square)

    def move_g1(self, t: int):
        if t == 0:
            return
        m = self.m
        self.w[0] = word_mul(self.w[0], word_pow(self.w[1], t, m), m)
        self._reexpress(lambda x: NormalWord(x.b, x.a, x.l, x.t - x.l * t))
        self.moves.append(Move("g1", (t,)))

    def move_g3(self, l: int, t: int):
        if l == 0 and t == 0:
            return
        m = self.m
        self.w[2] = word_mul(word_mul(self.w[2], word_pow(self.w[0], l, m), m),
                             word_pow(self.w[1], t, m), m)
        self._reexpress(lambda x: NormalWord(x.b, x.a, x.l - l * x.a, x.t - t * x.a))
        self.moves.append(Move("g3", (l, t)))

    def move_g4(self, r: int, s: int):
        if r == 0 and s == 0:
            return
        m = self.m
        self.w[3] = word_mul(word_mul(self.w[3], word_pow(self.w[0], r, m), m),
                             word_pow(self.w[1], s, m), m)
        self._reexpress(lambda x: NormalWord(x.b, x.a, x.l - r * x.b, x.t - s * x.b))
        self.moves.append(Move("g4", (r, s)))

    def move_lifting(self, k: int, s: int):
        if k == 0 and s == 0:
            return
        m = self.m
        image = word_mul(word_pow(self.w[0], k, m), word_pow(self.w[1], s, m), m)
        g = NormalWord(0, 0, k, s)
        self.square = word_mul(word_mul(image, self.square, m), g, m)
        self.moves.append(Move("lifting", (k, s)))


def _need(cond: bool, why: str) -> None:
    if not cond:
        raise InadmissibleExtensionError(f"inadmissible extension: {why}")


def reduce_extension(ext: Extension) -> tuple[str, ReductionLog]:
    """Normalize extension data to its catalog label, with a replayable log.

    Parity moves always pick the value of smallest absolute value, breaking
    ties toward nonnegative, so the reduction is deterministic and
    idempotent on already-normalized data.
    """
    _validate_involution(ext)
    m = ext.params.m
    st = _Reducer(ext)

    # g1 normalization: mu modulo 2
    mu = st.w[0].t
    st.move_g1(mu // 2 if mu % 2 == 0 else (mu - 1) // 2)
    mu = st.w[0].t
    _need(st.w[0] == NormalWord(0, 0, 1, mu) and mu in (0, 1),
          "conjugate of g1 must be g1 g2^mu")
    case1 = mu == 0

    if st.tag == "B":
        w3 = st.w[2]
        _need((w3.b, w3.a) == (1, 0), "in case B, g3 must conjugate to the g4 side")
        st.move_g3(-w3.l, w3.t - mu * w3.l)
        _need(st.w[2] == NormalWord(1, 0, 0, 0), "g3 conjugation did not normalize")
        _need(st.w[3] == NormalWord(0, 1, 0, 0),
              "in case B, g4 must conjugate to g3 after normalization")
        sub = roman = ""
    else:
        w3 = st.w[2]
        _need((w3.b, w3.a) == (0, 1) and w3.l == 0,
              "in case A, g3 must conjugate to g3 g2^n")
        n = w3.t
        if case1:
            st.move_g3(0, n // 2 if n % 2 == 0 else (n - 1) // 2)
        elif n % 2 == 0:
            st.move_g3(0, n // 2)
        else:
            st.move_g3(1, (n + 1) // 2)
        n = st.w[2].t
        _need(st.w[2] == NormalWord(0, 1, 0, n) and n in (0, 1), "bad g3 normalization")
        sub = "a" if n == 0 else "b"
        _need(not (st.tag == "A2" and sub == "b"),
              "case A2 with twisted g3 conjugation cannot occur")

        w4 = st.w[3]
        _need((w4.b, w4.a) == (-1, 0), "in case A, g4 must conjugate to the g4^-1 side")
        u = w4.l
        st.move_g4(-u // 2 if u % 2 == 0 else (1 - u) // 2, 0)
        u, v = st.w[3].l, st.w[3].t
        _need(u in (0, 1), "bad g4 normalization")
        roman = "i" if u == 0 else "ii"
        if case1 and st.tag == "A1":
            _need(v == 0, "central twist of the g4 conjugate must vanish")
        elif case1 and st.tag == "A2":
            _need(m % 2 == 0 and v == -(m // 2),
                  "case 1A2 requires even m and twist -m/2")
        elif st.tag == "A1":
            _need(u == 0 and v == 0, "case 2A1 requires an even residual twist")
        else:  # 2A2
            if u == 0:
                _need(m % 2 == 0 and v == -(m // 2), "case 2A2i requires even m")
            else:
                _need(m % 2 == 1 and v == (1 - m) // 2, "case 2A2ii requires odd m")

    # square normalization
    sq = st.square
    if st.tag in ("A1", "B"):
        _need((sq.b, sq.a) == (0, 0), "square must be central in cases A1 and B")
        p, q = sq.l, sq.t
        _need(p * mu == 2 * q, "square is inconsistent with the center action")
        if case1:
            _need(q == 0, "central square must be a g1 power here")
            st.move_lifting(-p // 2 if p % 2 == 0 else (1 - p) // 2, 0)
        else:
            st.move_lifting(-q, 0)
        p, q = st.square.l, st.square.t
        _need(p in (0, 1) and q == 0 and (case1 or p == 0), "bad square normalization")
    else:
        _need((sq.b, sq.a) == (0, 1), "square must be g3-headed in case A2")
        p, q = sq.l, sq.t
        _need(p * mu == 2 * q, "square is inconsistent with the center action")
        if case1:
            _need(q == 0, "A2 square must be g3 g1^p here")
            st.move_lifting(-p // 2 if p % 2 == 0 else (1 - p) // 2, 0)
        else:
            st.move_lifting(-q, 0)
        p, q = st.square.l, st.square.t
        _need(p in (0, 1) and q == 0 and (case1 or p == 0), "bad square normalization")

    prime = "'" if p == 0 else "''"

    if st.tag == "B":
        label = "2B" if not case1 else f"1B{prime}"
    elif st.tag == "A1":
        label = "2A1" if not case1 else f"1A1{sub}{roman}{prime}"
    else:
        if case1:
            label = f"1A2a{roman}{prime}"
        else:
            label = "2A2i" if roman == "i" else "2A2ii"
    assert label in CASE_LABELS
    return label, tuple(st.moves)


def apply_moves(rs: RealStructure, moves: ReductionLog) -> RealStructure:
    """Replay a reduction log on a concrete real structure."""
    p = rs.params
    lift = rs.lifting
    fields = {"delta1": p.delta1, "eps1": p.eps1, "delta3": p.delta3,
              "eps3": p.eps3, "delta4": p.delta4, "eps4": p.eps4}
    for mv in moves:
        eps2 = Fraction(2, p.m)
        if mv.kind == "g1":
            (t,) = mv.data
            fields["eps1"] += t * eps2
        elif mv.kind == "g3":
            l, t = mv.data
            fields["delta3"] += l * fields["delta1"]
            fields["eps3"] += l * fields["eps1"] + t * eps2
        elif mv.kind == "g4":
            r, s = mv.data
            fields["delta4"] += r * fields["delta1"]
            fields["eps4"] += r * fields["eps1"] + s * eps2
        elif mv.kind == "lifting":
            k, s = mv.data
            lift = Lifting.make(lift.linear_case, lift.f1, lift.f2, lift.d1,
                                gamma1=lift.gamma1 + k * fields["delta1"],
                                gamma2=-(k * fields["eps1"] + s * eps2))
        elif mv.kind == "tau":
            pass  # gamma2 normalization happens inside Lifting.make
        else:
            raise ValueError(f"unknown move kind {mv.kind!r}")
    new_params = KodairaParams(p.m, fields["delta1"], fields["eps1"],
                               fields["delta3"], fields["eps3"],
                               fields["delta4"], fields["eps4"])
    return RealStructure(new_params, lift)


# ---------------------------------------------------------------------------
# the splitting decision: symbolic squaring plus exact integer solving
# ---------------------------------------------------------------------------

SYM_VARS = ("r", "s", "l", "t")  # exponents of g4, g3, g1, g2 in g


@dataclass(frozen=True)
class SymWord:
    """A normal word whose four exponents are polynomials in SYM_VARS."""

    b: Poly
    a: Poly
    l: Poly
    t: Poly


def _sym_mul(x: SymWord, y: SymWord, m: int) -> SymWord:
    return SymWord(x.b + y.b, x.a + y.a, x.l + y.l,
                   x.t + y.t + (x.a * y.b).scale(m))


def _sym_pow(w: NormalWord, n: Poly, m: int) -> SymWord:
    """(b, a, l, t)^n = (nb, na, nl, nt + m a b n(n-1)/2) for a concrete word."""
    binom = (n * n - n).scale(Fraction(1, 2))
    return SymWord(n.scale(w.b), n.scale(w.a), n.scale(w.l),
                   n.scale(w.t) + binom.scale(m * w.a * w.b))


def square_system(ext: Extension) -> list[Poly]:
    """Exponent polynomials of (sigma g)^2 for g = g4^r g3^s g1^l g2^t."""
    m = ext.params.m
    r, s, l, t = (Poly.var(SYM_VARS, v) for v in SYM_VARS)
    w1, w2, w3, w4 = ext.conj
    image = _sym_pow(w4, r, m)
    image = _sym_mul(image, _sym_pow(w3, s, m), m)
    image = _sym_mul(image, _sym_pow(w1, l, m), m)
    image = _sym_mul(image, _sym_pow(w2, t, m), m)
    square = _sym_mul(image, _sym_pow(ext.square, Poly.const(SYM_VARS, 1), m), m)
    g = SymWord(r, s, l, t)
    square = _sym_mul(square, g, m)
    return [square.b, square.a, square.l, square.t]


@dataclass(frozen=True)
class LatticeSet:
    """offset + integer combinations of basis, inside Z^len(names)."""

    names: tuple[str, ...]
    offset: tuple[int, ...]
    basis: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def element(self, coords: tuple[int, ...]) -> tuple[int, ...]:
        out = list(self.offset)
        for k, vec in zip(coords, self.basis):
            for i, x in enumerate(vec):
                out[i] += k * x
        return tuple(out)

    def coords_of(self, point: tuple[int, ...]) -> tuple[int, ...] | None:
        """Invert element(); None when the point is outside the set."""
        diff = [p - o for p, o in zip(point, self.offset)]
        matrix = tuple(tuple(vec[i] for vec in self.basis) for i in range(len(diff)))
        sol = dioph_solve(DiophSystem(matrix, tuple(diff),
                                      tuple(f"k{j}" for j in range(self.dim))))
        return None if sol is None else sol.particular


def _integer_rows(polys: list[Poly], names: tuple[str, ...]):
    """Linear polys -> integer (matrix, rhs) with denominators cleared."""
    matrix, rhs = [], []
    for poly in polys:
        const, lin = poly.linear_parts()
        dens = [const.denominator] + [c.denominator for c in lin.values()]
        scale = 1
        for d in dens:
            scale = scale * d // _gcd(scale, d)
        matrix.append(tuple(int(lin.get(nm, Fraction(0)) * scale) for nm in names))
        rhs.append(int(-const * scale))
    return tuple(matrix), tuple(rhs)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def solve_exponent_system(polys: list[Poly], names: tuple[str, ...]) -> LatticeSet | None:
    """Solve polynomial exponent equations = 0 over the integers.

    Alternates between exact linear solving (Smith form) and substitution of
    the resulting parametrization into the remaining equations.  For the
    systems produced by square_system the nonlinear terms always die after
    the first substitution; anything else trips an ArithmeticError rather
    than falling back to a search.
    """
    ambient = len(names)
    offset = [0] * ambient
    basis = [tuple(1 if i == j else 0 for i in range(ambient)) for j in range(ambient)]
    eqs = list(polys)
    cur_names = names
    for _ in range(ambient + 2):
        eqs = [e for e in eqs if not e.is_zero()]
        if any(e.is_constant() for e in eqs):
            return None  # nonzero constant equation
        linear = [e for e in eqs if e.total_degree() <= 1]
        higher = [e for e in eqs if e.total_degree() > 1]
        if not linear and higher:
            raise ArithmeticError("nonlinear residue in exponent system")
        if not linear:
            return LatticeSet(names, tuple(offset), tuple(basis))
        matrix, rhs = _integer_rows(linear, cur_names)
        sol = dioph_solve(DiophSystem(matrix, rhs, cur_names))
        if sol is None:
            return None
        # compose the new parametrization with the accumulated one
        new_offset = list(offset)
        for i in range(ambient):
            new_offset[i] += sum(sol.particular[j] * basis[j][i]
                                 for j in range(len(cur_names)))
        new_basis = [tuple(sum(vec[j] * basis[j][i] for j in range(len(cur_names)))
                           for i in range(ambient))
                     for vec in sol.lattice]
        offset, basis = new_offset, new_basis
        if not higher:
            return LatticeSet(names, tuple(offset), tuple(basis))
        new_names = tuple(f"k{j}" for j in range(len(sol.lattice))) or ("k0",)
        mapping = {}
        for idx, nm in enumerate(cur_names):
            expr = Poly.const(new_names, sol.particular[idx])
            for j, vec in enumerate(sol.lattice):
                if vec[idx]:
                    expr = expr + Poly.var(new_names, new_names[j]).scale(vec[idx])
            mapping[nm] = expr
        eqs = [e.subs(mapping) for e in higher]
        cur_names = new_names
    raise ArithmeticError("exponent system did not stabilize")


def involutive_solutions(ext: Extension) -> LatticeSet | None:
    """All g with (sigma g)^2 = 1, as an integer lattice set over SYM_VARS."""
    return solve_exponent_system(square_system(ext), SYM_VARS)


def splits(ext: Extension) -> bool:
    """True iff the orbifold extension splits, i.e. some sigma g squares to 1."""
    return involutive_solutions(ext) is not None


def brute_force_split(ext: Extension, bound: int = 6) -> NormalWord | None:
    """Search witness g with exponents bounded by `bound` (test oracle)."""
    m = ext.params.m
    sq = ext.square
    rng = range(-bound, bound + 1)
    for r, s, l, t in itertools.product(rng, rng, rng, rng):
        g = NormalWord(r, s, l, t)
        total = word_mul(word_mul(conj_word(ext, g), sq, m), g, m)
        if total.is_identity():
            return g
    return None


# ---------------------------------------------------------------------------
# catalog representatives
# ---------------------------------------------------------------------------

def representative(label: str, m: int) -> RealStructure:
    """Smallest clean rational data realizing a catalog normal form.

    Construction: delta1 = 1, delta3 = 1, eps3 = 0, eps4 = 0; eps1, delta4,
    f-data and gamma1 are solved from the listed constraints of the case.
    """
    if label not in CASE_LABELS:
        raise ValueError(f"unknown case label {label!r}")
    if label not in labels_for(m):
        raise ValueError(f"case {label} does not occur at m = {m}")
    one = Fraction(1)
    half = Fraction(1, 2)
    eps2 = Fraction(2, m)
    eps1 = -Fraction(1, m) if label.startswith("2") else Fraction(0)
    gamma_doubleprime = label.endswith("''")

    if label in ("1B'", "1B''", "2B"):
        # f1 = -f2 = delta4 - delta3 = -(eps4 + eps3); take f1 = 0
        params = KodairaParams(m, one, eps1, one, Fraction(0), one, Fraction(0))
        gamma1 = half if gamma_doubleprime else Fraction(0)
        lift = Lifting.make("B", f1=0, f2=0, d1=0, gamma1=gamma1)
        return RealStructure(params, lift)

    a2 = "A2" in label
    d1 = half if a2 else Fraction(0)
    # subcase (b) labels carry a lowercase b: f2 = 2 eps3 + eps2; else f2 = 2 eps3
    f2 = eps2 if "b" in label else Fraction(0)
    # delta4 from the (i)/(ii) constraint of the case
    if label in ("1A1ai'", "1A1ai''", "2A1", "1A2ai'", "1A2ai''", "2A2i"):
        delta4 = half  # eps3 + delta4 = 1/2
    elif label in ("1A1aii'", "1A1aii''", "1A2aii'", "1A2aii''", "2A2ii"):
        delta4 = one  # 2 eps3 + 2 delta4 - 1 = delta1
    elif label in ("1A1bi'", "1A1bi''"):
        delta4 = (1 - eps2) / 2  # 2 eps3 + 2 delta4 + eps2 = 1
    else:  # 1A1bii
        delta4 = 1 - eps2 / 2  # 2 eps3 + 2 delta4 + eps2 - 1 = delta1
    if a2:
        # squares g3 (') or g3 g1 (''): gamma1 from 1/4 + 2 gamma1 = delta3 (+ delta1)
        gamma1 = (Fraction(1) - Fraction(1, 4) + (one if gamma_doubleprime else 0)) / 2
    else:
        gamma1 = half if gamma_doubleprime else Fraction(0)
    params = KodairaParams(m, one, eps1, one, Fraction(0), delta4, Fraction(0))
    lift = Lifting.make("A", f1=d1, f2=f2, d1=d1, gamma1=gamma1)
    return RealStructure(params, lift)


def enumerate_cases(m: int) -> list[tuple[str, RealStructure]]:
    """One admissible representative per catalog label occurring at m."""
    return [(label, representative(label, m)) for label in labels_for(m)]


# ---------------------------------------------------------------------------
# distinctness of the prime/double-prime pairs
# ---------------------------------------------------------------------------

def center_reconciles_squares(e1: Extension, e2: Extension) -> bool:
    """Whether some central lifting change carries e1's square to e2's.

    For extensions with identical conjugation data this decides equivalence:
    replacing sigma by sigma g1^r g2^t multiplies the square by g1^{2r}
    g2^{mu r} on the left, so the two squares reconcile iff the exponent
    equations 2r = dl, mu r = dt have an integer solution.
    """
    if e1.conj != e2.conj or e1.elliptic_case != e2.elliptic_case:
        return False
    m = e1.params.m
    delta = word_mul(e2.square, word_inv(e1.square, m), m)
    if (delta.b, delta.a) != (0, 0):
        return False
    mu = e1.mu
    sol = dioph_solve(DiophSystem(((2,), (mu,)), (delta.l, delta.t), ("r",)))
    return sol is not None


def distinct_pairs_check(m: int) -> bool:
    """No prime/double-prime pair with equal conjugation data is equivalent."""
    pairs = [("1B'", "1B''"), ("1A1ai'", "1A1ai''"), ("1A1aii'", "1A1aii''"),
             ("1A1bi'", "1A1bi''"), ("1A1bii'", "1A1bii''")]
    if m % 2 == 0:
        pairs += [("1A2ai'", "1A2ai''"), ("1A2aii'", "1A2aii''")]
    for one, two in pairs:
        e1 = extension_of(representative(one, m))
        e2 = extension_of(representative(two, m))
        if e1.conj != e2.conj:
            raise AssertionError(f"pair {one}/{two} should share conjugation data")
        if center_reconciles_squares(e1, e2):
            return False
        if not center_reconciles_squares(e1, e1):
            return False  # self-comparison must stay equivalent
    return True
