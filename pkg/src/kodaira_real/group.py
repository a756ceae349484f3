"""The fundamental group of a primary Kodaira surface as affine maps on R^4.

The group G is generated by g1..g4 acting on coordinates (x1, y1, x2, y2).
With the lattice on the base normalized to alpha3 = 1, alpha4 = i, every
element is

    (x1, y1, x2, y2) |-> (x1 + a, y1 + b, a x1 + b y1 + x2 + delta,
                          -b x1 + a y1 + y2 + eps)

for integers a, b and reals delta, eps.  The only relation beyond centrality
of g1, g2 is g3 g4 = g4 g3 g2^m, so every word collects to the normal form
g4^b g3^a g1^l g2^t, recorded here as NormalWord(b, a, l, t).  The closed
group law on normal forms is

    (b, a, l, t) * (b', a', l', t') = (b+b', a+a', l+l', t+t' + m a b').

collect() deliberately does not use that law: it pushes single letters past
each other one swap at a time and is checked against the affine composition
oracle, while word_mul/word_pow use the closed law.  The two paths are
independent implementations of the same multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactalg import (
    PARAM_NAMES,
    AffineMap4,
    Poly,
    affine_compose,
    affine_inverse,
    identity_map,
    maps_equal,
    rat,
)

Rat = Fraction

GroupWord = tuple  # tuple[tuple[int, int], ...]: (generator index 1..4, exponent)


@dataclass(frozen=True)
class KodairaParams:
    """Translation data of the generators for one concrete surface.

    Derived constants: delta2 = 0 and eps2 = 2/m are forced by the relation
    [g3, g4] = g2^m once alpha3 = 1, alpha4 = i; in particular delta1 != 0.
    """

    m: int
    delta1: Fraction
    eps1: Fraction
    delta3: Fraction
    eps3: Fraction
    delta4: Fraction
    eps4: Fraction

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("torsion coefficient m must be >= 1")
        if self.delta1 == 0:
            raise ValueError("delta1 must be nonzero")
        for name in ("delta1", "eps1", "delta3", "eps3", "delta4", "eps4"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @property
    def delta2(self) -> Fraction:
        return Fraction(0)

    @property
    def eps2(self) -> Fraction:
        return Fraction(2, self.m)

    def assignment(self) -> dict[str, Fraction]:
        return {
            "delta1": self.delta1, "eps1": self.eps1,
            "delta3": self.delta3, "eps3": self.eps3,
            "delta4": self.delta4, "eps4": self.eps4,
            "f1": Fraction(0), "f2": Fraction(0), "d1": Fraction(0),
            "gamma1": Fraction(0),
        }


def params(m: int, delta1=1, eps1=0, delta3=0, eps3=0, delta4=0, eps4=0) -> KodairaParams:
    return KodairaParams(m, rat(delta1), rat(eps1), rat(delta3), rat(eps3),
                         rat(delta4), rat(eps4))


@dataclass(frozen=True)
class NormalWord:
    """g4^b g3^a g1^l g2^t (g1, g2 central, so the tail order is immaterial)."""

    b: int
    a: int
    l: int
    t: int

    def is_identity(self) -> bool:
        return self.b == 0 and self.a == 0 and self.l == 0 and self.t == 0

    def in_center(self) -> bool:
        return self.b == 0 and self.a == 0

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.b, self.a, self.l, self.t)


IDENTITY_WORD = NormalWord(0, 0, 0, 0)


def word_mul(x: NormalWord, y: NormalWord, m: int) -> NormalWord:
    return NormalWord(x.b + y.b, x.a + y.a, x.l + y.l, x.t + y.t + m * x.a * y.b)


def word_inv(x: NormalWord, m: int) -> NormalWord:
    return NormalWord(-x.b, -x.a, -x.l, -x.t + m * x.a * x.b)


def word_pow(x: NormalWord, n: int, m: int) -> NormalWord:
    if n < 0:
        return word_pow(word_inv(x, m), -n, m)
    return NormalWord(n * x.b, n * x.a, n * x.l,
                      n * x.t + m * x.a * x.b * (n * (n - 1) // 2))


def group_element(a, b, delta, eps, scalar=Fraction) -> AffineMap4:
    """The affine map of G with head (a, b) and translation tail (delta, eps)."""
    one, zero = scalar(1), scalar(0)
    if scalar is Fraction:
        a, b, delta, eps = Fraction(a), Fraction(b), Fraction(delta), Fraction(eps)
    return AffineMap4.make(
        [[one, zero, zero, zero],
         [zero, one, zero, zero],
         [a, b, one, zero],
         [-b, a, zero, one]],
        [a, b, delta, eps],
    )


def generators(p: KodairaParams) -> tuple[AffineMap4, AffineMap4, AffineMap4, AffineMap4]:
    """g1, g2 pure translations; g3, g4 carry heads (1,0) and (0,1)."""
    g1 = group_element(0, 0, p.delta1, p.eps1)
    g2 = group_element(0, 0, p.delta2, p.eps2)
    g3 = group_element(1, 0, p.delta3, p.eps3)
    g4 = group_element(0, 1, p.delta4, p.eps4)
    return g1, g2, g3, g4


def generators_symbolic(m: int) -> tuple[AffineMap4, AffineMap4, AffineMap4, AffineMap4]:
    """Generators with Poly translation tails; eps2 = 2/m stays concrete."""
    c = lambda v: Poly.const(PARAM_NAMES, v)
    var = lambda n: Poly.var(PARAM_NAMES, n)
    make = lambda a, b, delta, eps: group_element(c(a), c(b), delta, eps, scalar=lambda v: c(v))
    g1 = make(0, 0, var("delta1"), var("eps1"))
    g2 = make(0, 0, c(0), c(Fraction(2, m)))
    g3 = make(1, 0, var("delta3"), var("eps3"))
    g4 = make(0, 1, var("delta4"), var("eps4"))
    return g1, g2, g3, g4


def collect(word: GroupWord, m: int) -> NormalWord:
    """Collect a word to normal form, one adjacent swap at a time.

    Only the relations g3 g4 = g4 g3 g2^m and centrality of g1, g2 are used.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    l = t = 0
    letters: list[tuple[int, int]] = []  # single letters with exponent +-1
    for gen, exp in word:
        if gen == 1:
            l += exp
        elif gen == 2:
            t += exp
        elif gen in (3, 4):
            step = 1 if exp > 0 else -1
            letters.extend([(gen, step)] * abs(exp))
        else:
            raise ValueError(f"unknown generator index {gen}")
    # push every g3 letter to the right of every g4 letter, rightmost first
    moved = True
    while moved:
        moved = False
        for i in reversed(range(len(letters) - 1)):
            (gi, si), (gj, sj) = letters[i], letters[i + 1]
            if gi == 3 and gj == 4:
                letters[i], letters[i + 1] = letters[i + 1], letters[i]
                t += m * si * sj
                moved = True
    b = sum(s for g, s in letters if g == 4)
    a = sum(s for g, s in letters if g == 3)
    return NormalWord(b, a, l, t)


def word_to_affine(w: NormalWord, p: KodairaParams) -> AffineMap4:
    """g4^b o g3^a o g1^l o g2^t by repeated affine composition."""
    g1, g2, g3, g4 = generators(p)
    out = _affine_pow(g4, w.b)
    out = affine_compose(out, _affine_pow(g3, w.a))
    out = affine_compose(out, _affine_pow(g1, w.l))
    out = affine_compose(out, _affine_pow(g2, w.t))
    return out


def _affine_pow(g: AffineMap4, n: int) -> AffineMap4:
    if n < 0:
        return _affine_pow(affine_inverse(g), -n)
    out = identity_map()
    base = g
    while n:
        if n & 1:
            out = affine_compose(out, base)
        base = affine_compose(base, base)
        n >>= 1
    return out


def affine_to_word(f: AffineMap4, p: KodairaParams) -> NormalWord:
    """Recognize a concrete affine map as an element of G, or raise.

    The head (a, b) is read from the linear block; the central tail is
    solved exactly from (delta1, eps1) and (0, eps2).  Raises ValueError
    ("not in G") if the shape is wrong or an exponent is not an integer.
    """
    lin = f.linear
    a, b = Fraction(lin[2][0]), Fraction(lin[2][1])
    if a.denominator != 1 or b.denominator != 1:
        raise ValueError("not in G: non-integer head")
    a, b = int(a), int(b)
    expected = group_element(a, b, 0, 0)
    if any(Fraction(lin[i][j]) != Fraction(expected.linear[i][j])
           for i in range(4) for j in range(4)):
        raise ValueError("not in G: linear block is not of G-shape")
    if Fraction(f.translation[0]) != a or Fraction(f.translation[1]) != b:
        raise ValueError("not in G: translation head mismatch")
    head = word_to_affine(NormalWord(b, a, 0, 0), p)
    residue = affine_compose(affine_inverse(head), f)
    delta = Fraction(residue.translation[2])
    eps = Fraction(residue.translation[3])
    # delta = l delta1, eps = l eps1 + t eps2
    l = delta / p.delta1
    if l.denominator != 1:
        raise ValueError("not in G: non-integer g1 exponent")
    t = (eps - l * p.eps1) / p.eps2
    if t.denominator != 1:
        raise ValueError("not in G: non-integer g2 exponent")
    w = NormalWord(b, a, int(l), int(t))
    if not maps_equal(word_to_affine(w, p), f):
        raise ValueError("not in G: residue is not central")
    return w


def verify_relations(p: KodairaParams) -> bool:
    """Check [g3, g4] = g2^m and centrality of g1, g2 as exact affine maps."""
    g1, g2, g3, g4 = generators(p)
    return _relations_hold(g1, g2, g3, g4, m=p.m)


def verify_relations_symbolic(m: int) -> bool:
    """Same check with Poly translation entries: identities in delta/eps."""
    g1, g2, g3, g4 = generators_symbolic(m)
    return _relations_hold(g1, g2, g3, g4, m=m)


def _relations_hold(g1, g2, g3, g4, m: int) -> bool:
    comm = affine_compose(affine_compose(g3, g4),
                          affine_compose(affine_inverse(g3), affine_inverse(g4)))
    if not maps_equal(comm, _affine_pow_generic(g2, m)):
        return False
    for z in (g1, g2):
        for g in (g1, g2, g3, g4):
            if not maps_equal(affine_compose(z, g), affine_compose(g, z)):
                return False
    return True


def _affine_pow_generic(g: AffineMap4, n: int) -> AffineMap4:
    out = g
    for _ in range(n - 1):
        out = affine_compose(out, g)
    return out


def random_word(rng, max_len: int = 12, max_exp: int = 3) -> GroupWord:
    """A random group word for oracle tests (seeded rng supplied by caller)."""
    n = rng.randint(1, max_len)
    return tuple((rng.randint(1, 4), rng.choice([e for e in range(-max_exp, max_exp + 1) if e]))
                 for _ in range(n))
