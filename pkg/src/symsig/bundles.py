"""Formal calculus of vector bundles on an elliptic curve.

Indecomposables are kept in the normal form (rank, degree, twist): the
distinguished indecomposable of that rank and degree tensored by a
degree-0 line bundle.  The twist has a torsion part in (Q/Z)^2 plus opaque
symbols with integer exponents for degree-0 line bundles of unknown order
(the twist of the plane syzygy bundle, and the degree-0 discrepancy between
the cone polarization and powers of the base point bundle).  Twists of an
indecomposable are stored modulo their stabilizer subgroup, so structural
equality is isomorphism.

The concrete side (free-rank search on the cone of a plane cubic) is exact
linear algebra on graded pieces modulo the curve equation.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction


class EmptySum(ValueError):
    """Rank/degree/slope of an empty formal sum."""


class UnsupportedTensor(ValueError):
    """Product needs a rule outside the known multiplication table."""


class UndeterminedDecomposition(ValueError):
    """Symmetric powers of this input have no known decomposition."""


class SingularCurve(ValueError):
    """The cubic has a singular point."""


SYZ_TWIST_SYMBOL = "L"  # the unknown degree-0 twist of the plane syzygy bundle
POLARIZATION_SYMBOL = "D"  # O(1) modulo the cube of the base point bundle


@dataclass(frozen=True)
class TorsionLabel:
    """Element of the torsion of Pic^0 as (Q/Z)^2, plus opaque symbols."""

    torsion: tuple[Fraction, Fraction] = (Fraction(0), Fraction(0))
    symbols: tuple[tuple[str, int], ...] = ()

    @classmethod
    def make(cls, torsion=(0, 0), symbols: dict[str, int] | None = None) -> "TorsionLabel":
        t = tuple(Fraction(x) % 1 for x in torsion)
        syms = tuple(sorted((s, e) for s, e in (symbols or {}).items() if e != 0))
        return cls(t, syms)

    def __add__(self, other: "TorsionLabel") -> "TorsionLabel":
        merged = dict(self.symbols)
        for s, e in other.symbols:
            merged[s] = merged.get(s, 0) + e
        return TorsionLabel.make(
            (self.torsion[0] + other.torsion[0], self.torsion[1] + other.torsion[1]),
            merged,
        )

    def __neg__(self) -> "TorsionLabel":
        return TorsionLabel.make(
            (-self.torsion[0], -self.torsion[1]), {s: -e for s, e in self.symbols}
        )

    def is_trivial(self) -> bool:
        return self.torsion == (0, 0) and not self.symbols

    def power(self, k: int) -> "TorsionLabel":
        return TorsionLabel.make(
            (self.torsion[0] * k, self.torsion[1] * k),
            {s: e * k for s, e in self.symbols},
        )


TWO_TORSION = tuple(
    TorsionLabel.make(t)
    for t in [(0, 0), (Fraction(1, 2), 0), (0, Fraction(1, 2)), (Fraction(1, 2), Fraction(1, 2))]
)


@dataclass(frozen=True)
class IndecomposableBundle:
    """E(rank, degree) twisted by a degree-0 line bundle.

    Twists are compared modulo the stabilizer: torsion elements killed by
    rank/gcd(rank, degree) act trivially, so the constructor stores the
    canonical coset representative.  Opaque symbols are kept verbatim (no
    torsion relations are assumed for them).
    """

    rank: int
    degree: int
    twist: TorsionLabel

    @classmethod
    def make(cls, rank: int, degree: int, twist: TorsionLabel | None = None) -> "IndecomposableBundle":
        if rank < 1:
            raise ValueError("rank must be positive")
        twist = twist or TorsionLabel.make()
        m = rank // math.gcd(rank, degree)
        canonical = tuple(Fraction((t * m) % 1) / m for t in twist.torsion)
        return cls(rank, degree, TorsionLabel(canonical, twist.symbols))

    @property
    def slope(self) -> Fraction:
        return Fraction(self.degree, self.rank)

    def dual(self) -> "IndecomposableBundle":
        return IndecomposableBundle.make(self.rank, -self.degree, -self.twist)

    def sort_key(self):
        return (self.rank, self.degree, self.twist.torsion, self.twist.symbols)

    def describe(self) -> dict:
        return {
            "rank": self.rank,
            "degree": self.degree,
            "torsion": [str(t) for t in self.twist.torsion],
            "symbols": {s: e for s, e in self.twist.symbols},
        }


def atiyah_bundle(rank: int) -> IndecomposableBundle:
    """The unique degree-0 indecomposable of this rank with a section."""
    return IndecomposableBundle.make(rank, 0)


def line_bundle(degree: int, twist: TorsionLabel | None = None) -> IndecomposableBundle:
    return IndecomposableBundle.make(1, degree, twist)


@dataclass(frozen=True)
class BundleSum:
    """Finite multiset of indecomposable bundles."""

    items: tuple[tuple[IndecomposableBundle, int], ...]

    @classmethod
    def from_pairs(cls, pairs) -> "BundleSum":
        acc: dict[IndecomposableBundle, int] = {}
        for bundle, mult in pairs:
            if mult < 0:
                raise ValueError("multiplicities must be nonnegative")
            if mult:
                acc[bundle] = acc.get(bundle, 0) + mult
        return cls(tuple(sorted(acc.items(), key=lambda kv: kv[0].sort_key())))

    @classmethod
    def of(cls, *bundles: IndecomposableBundle) -> "BundleSum":
        return cls.from_pairs((b, 1) for b in bundles)

    def __add__(self, other: "BundleSum") -> "BundleSum":
        return BundleSum.from_pairs(self.items + other.items)

    def is_empty(self) -> bool:
        return not self.items

    @property
    def rank(self) -> int:
        return sum(b.rank * m for b, m in self.items)

    @property
    def degree(self) -> int:
        return sum(b.degree * m for b, m in self.items)

    def describe(self) -> list[dict]:
        return [dict(b.describe(), multiplicity=m) for b, m in self.items]


def rank_degree_slope(s: BundleSum) -> tuple[int, int, Fraction]:
    if s.is_empty():
        raise EmptySum("the zero sum has no slope")
    return s.rank, s.degree, Fraction(s.degree, s.rank)


# -- tensor products -------------------------------------------------------------


def _clebsch_gordan_ranks(r: int, s: int) -> list[int]:
    """Ranks in F_r (x) F_s: r-s+1, r-s+3, ..., r+s-1 (r >= s)."""
    if r < s:
        r, s = s, r
    return list(range(r - s + 1, r + s, 2))


def _prime_power(n: int) -> tuple[int, int] | None:
    """(p, a) with n = p^a, or None."""
    if n < 2:
        return None
    for p in range(2, n + 1):
        if p * p > n:
            return (n, 1)
        if n % p == 0:
            a = 0
            while n % p == 0:
                n //= p
                a += 1
            return (p, a) if n == 1 else None
    return None


def _coprime_cores(r1: int, d1: int, r2: int, d2: int) -> list[tuple[int, int, TorsionLabel, int]]:
    """Decompose E(r1,d1) (x) E(r2,d2) with both (r,d) coprime.

    Returns (rank, degree, extra twist, multiplicity) summands, each again
    with coprime rank and degree.
    """
    if math.gcd(r1, r2) == 1:
        return [(r1 * r2, r1 * d2 + r2 * d1, TorsionLabel.make(), 1)]
    pp1, pp2 = _prime_power(r1), _prime_power(r2)
    if pp1 is None or pp2 is None or pp1[0] != pp2[0]:
        raise UnsupportedTensor(
            f"no product rule for ranks {r1} and {r2} with a common factor"
        )
    p = pp1[0]
    a1, a2 = pp1[1], pp2[1]
    if a1 != a2:
        if a1 < a2:
            r1, d1, r2, d2, a1, a2 = r2, d2, r1, d1, a2, a1
        # p^a2 copies of E(p^a1, d1 + p^(a1-a2) d2); degree forced by
        # rank/degree conservation
        return [(r1, d1 + p ** (a1 - a2) * d2, TorsionLabel.make(), p ** a2)]
    pa = p ** a1
    g = math.gcd(pa, d1 + d2)  # = p^(a-b)
    pb = pa // g
    d3 = (d1 + d2) // g
    out = []
    for s in range(g):
        for t in range(g):
            extra = TorsionLabel.make((Fraction(s, pa), Fraction(t, pa)))
            out.append((pb, d3, extra, pb))
    return out


def _tensor_indecomposables(x: IndecomposableBundle, y: IndecomposableBundle) -> BundleSum:
    twist = x.twist + y.twist
    hx = math.gcd(x.rank, x.degree)
    hy = math.gcd(y.rank, y.degree)
    cores = _coprime_cores(x.rank // hx, x.degree // hx, y.rank // hy, y.degree // hy)
    pairs = []
    for f_rank in _clebsch_gordan_ranks(hx, hy):
        for rank, degree, extra, mult in cores:
            pairs.append(
                (
                    IndecomposableBundle.make(f_rank * rank, f_rank * degree, twist + extra),
                    mult,
                )
            )
    return BundleSum.from_pairs(pairs)


def tensor(a: BundleSum, b: BundleSum) -> BundleSum:
    """Tensor product, fully decomposed; rank and degree are conserved."""
    pairs = []
    for x, mx in a.items:
        for y, my in b.items:
            product = _tensor_indecomposables(x, y)
            pairs.extend((bundle, mult * mx * my) for bundle, mult in product.items)
    result = BundleSum.from_pairs(pairs)
    if not a.is_empty() and not b.is_empty():
        assert result.rank == a.rank * b.rank
        assert result.degree == a.rank * b.degree + b.rank * a.degree
    return result


def dual(s: BundleSum) -> BundleSum:
    return BundleSum.from_pairs((b.dual(), m) for b, m in s.items)


# -- symmetric powers --------------------------------------------------------------


def _sym_of_atom(b: IndecomposableBundle, q: int) -> BundleSum:
    """Sym^q of a single allowed indecomposable."""
    if q == 0:
        return BundleSum.of(line_bundle(0))
    if b.rank == 1:
        return BundleSum.of(
            IndecomposableBundle.make(1, b.degree * q, b.twist.power(q))
        )
    if b.rank == 2 and b.degree % 2 == 0:
        # F_2 twisted by a line bundle of degree d/2: Sym^q = F_(q+1) (x) L^q
        line_twist = b.twist.power(q)
        return BundleSum.of(
            IndecomposableBundle.make(q + 1, (b.degree // 2) * q * (q + 1), line_twist)
        )
    raise UndeterminedDecomposition(
        f"no known decomposition of Sym^{q} of rank {b.rank}, degree {b.degree}"
    )


def sym_power(s: BundleSum, q: int) -> BundleSum:
    """Symmetric power of a sum of line bundles and F_2-type summands."""
    if q < 0:
        raise ValueError("q must be nonnegative")
    atoms: list[IndecomposableBundle] = []
    for b, m in s.items:
        atoms.extend([b] * m)
    if not atoms:
        raise EmptySum("symmetric power of the zero sum")
    total = []
    for comp in _weak_compositions(q, len(atoms)):
        part = None
        for b, a in zip(atoms, comp):
            factor = _sym_of_atom(b, a)
            part = factor if part is None else tensor(part, factor)
        total.extend(part.items)
    return BundleSum.from_pairs(total)


def _weak_compositions(total: int, slots: int):
    if slots == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _weak_compositions(total - first, slots - 1):
            yield (first,) + rest


# -- the plane syzygy bundle -------------------------------------------------------


def syzygy_bundle() -> IndecomposableBundle:
    """The rank-2 degree=-9 syzygy bundle of the coordinates, normal form."""
    return IndecomposableBundle.make(
        2, -9, TorsionLabel.make(symbols={SYZ_TWIST_SYMBOL: 1})
    )


def tensor_power_syz(q: int) -> BundleSum:
    """T^q of the syzygy bundle, in closed form.

    Even q: the four 2-torsion twists of the degree -9q/2 line bundle, each
    with multiplicity 2^(q-2).  Odd q: the rank-2 indecomposable of degree
    -9q (the degree follows from the coprime product rule; the fourfold
    2-torsion twist collapses by the stabilizer), multiplicity 2^(q-1).
    """
    if q < 1:
        raise ValueError("q must be >= 1")
    if q == 1:
        return BundleSum.of(syzygy_bundle())
    ell_q = TorsionLabel.make(symbols={SYZ_TWIST_SYMBOL: q})
    if q % 2 == 0:
        mult = 2 ** (q - 2)
        return BundleSum.from_pairs(
            (IndecomposableBundle.make(1, -9 * q // 2, tau + ell_q), mult)
            for tau in TWO_TORSION
        )
    return BundleSum.from_pairs(
        [(IndecomposableBundle.make(2, -9 * q, ell_q), 2 ** (q - 1))]
    )


def repeated_tensor_syz(q: int) -> BundleSum:
    """T^q by literally folding the tensor product (the associativity oracle)."""
    acc = BundleSum.of(syzygy_bundle())
    for _ in range(q - 1):
        acc = tensor(acc, BundleSum.of(syzygy_bundle()))
    return acc


# -- exact free-rank bounds on the cone of a plane cubic ----------------------------


Monomial = tuple[int, int, int]


def weierstrass_cubic(a=1, b=0) -> dict[Monomial, Fraction]:
    """f = y^2 z - x^3 - a x z^2 - b z^3."""
    f = {(0, 2, 1): Fraction(1), (3, 0, 0): Fraction(-1)}
    if a:
        f[(1, 0, 2)] = Fraction(-a)
    if b:
        f[(0, 0, 3)] = Fraction(-b)
    return f


def _monomials(degree: int) -> list[Monomial]:
    return [
        (i, j, degree - i - j)
        for i in range(degree, -1, -1)
        for j in range(degree - i, -1, -1)
    ]


def is_nonsingular_cubic(f: dict[Monomial, Fraction]) -> bool:
    """Exact elimination: the three partials have only the trivial zero.

    The partials are homogeneous, so their zero set is a cone; it reduces
    to the origin exactly when the quotient by the gradient ideal is finite
    dimensional, read off a Groebner basis.
    """
    import sympy

    x, y, z = sympy.symbols("x y z")
    poly = sum(
        sympy.Rational(c) * x ** e[0] * y ** e[1] * z ** e[2] for e, c in f.items()
    )
    partials = [sympy.diff(poly, v) for v in (x, y, z)]
    if any(p == 0 for p in partials):
        return False
    basis = sympy.groebner(partials, x, y, z, order="grevlex")

    def grevlex_key(m):
        return (sum(m), tuple(-e for e in reversed(m)))

    exps = [
        max(sympy.Poly(g, x, y, z).monoms(), key=grevlex_key) for g in basis.exprs
    ]
    for var in range(3):
        if not any(all(e[k] == 0 for k in range(3) if k != var) for e in exps):
            return False
    return True


def _reduce_monomial(mono: Monomial, f: dict[Monomial, Fraction], lead: Monomial) -> dict[Monomial, Fraction]:
    """Rewrite a monomial modulo f by eliminating the leading monomial."""
    result: dict[Monomial, Fraction] = {}
    stack = [(mono, Fraction(1))]
    lc = f[lead]
    while stack:
        m, coeff = stack.pop()
        if all(m[k] >= lead[k] for k in range(3)):
            shift = tuple(m[k] - lead[k] for k in range(3))
            for fm, fc in f.items():
                if fm != lead:
                    stack.append(
                        (tuple(fm[k] + shift[k] for k in range(3)), -coeff * fc / lc)
                    )
        else:
            result[m] = result.get(m, Fraction(0)) + coeff
    return {m: c for m, c in result.items() if c}


def _nullity(rows: list[list[Fraction]], n_cols: int) -> int:
    rank = 0
    rows = [row for row in rows if any(row)]
    for col in range(n_cols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [v * inv for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [v - factor * w for v, w in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return n_cols - rank


def frk_report(q: int, f: dict[Monomial, Fraction] | None = None) -> tuple[int, int, dict]:
    """Certified free-rank bounds for Sym^q of the plane syzygy bundle.

    Odd q: zero by slope integrality.  Even q: the upper bound is the
    number of independent degree-q/2 section vectors in the kernel of the
    symmetric-power connecting map, computed exactly modulo the cubic.
    The formal model never claims a positive free rank on its own.
    """
    if q < 0:
        raise ValueError("q must be nonnegative")
    f = f if f is not None else weierstrass_cubic()
    if not is_nonsingular_cubic(f):
        raise SingularCurve("the cubic has a singular point")
    if q == 0:
        return (1, 1, {"reason": "Sym^0 is the structure sheaf"})
    if q % 2 == 1:
        return (
            0,
            0,
            {"reason": f"slope -9*{q}/2 is not an integer, so no line subbundle exists"},
        )
    half = q // 2
    cols = _monomials(q)  # basis of Sym^q of the three twisted coordinates
    rows = _monomials(q - 1)
    row_index = {m: i for i, m in enumerate(rows)}
    lead = max(f, key=lambda m: (sum(m), m))
    # components of h live in the degree-(q/2) graded piece of the curve ring
    h_basis = [m for m in _monomials(half) if not all(m[k] >= lead[k] for k in range(3))]
    unknowns = {(ci, hm): k for k, (ci, hm) in enumerate(itertools.product(range(len(cols)), h_basis))}

    target_deg = half + 1
    reduced_basis = [m for m in _monomials(target_deg) if not all(m[k] >= lead[k] for k in range(3))]
    reduced_index = {m: i for i, m in enumerate(reduced_basis)}
    reduction_cache: dict[Monomial, dict[Monomial, Fraction]] = {}

    def reduced(mono: Monomial) -> dict[Monomial, Fraction]:
        if mono not in reduction_cache:
            reduction_cache[mono] = _reduce_monomial(mono, f, lead)
        return reduction_cache[mono]

    # one equation block per row monomial: a vector over the reduced basis
    equations = [
        [Fraction(0)] * len(unknowns)
        for _ in range(len(rows) * len(reduced_basis))
    ]
    for ci, col in enumerate(cols):
        for var in range(3):
            if col[var] == 0:
                continue
            row_mono = tuple(col[k] - (1 if k == var else 0) for k in range(3))
            ri = row_index[row_mono]
            entry = Fraction(col[var])  # coefficient of the variable itself
            for hm in h_basis:
                shifted = tuple(hm[k] + (1 if k == var else 0) for k in range(3))
                for m, c in reduced(shifted).items():
                    equations[ri * len(reduced_basis) + reduced_index[m]][
                        unknowns[(ci, hm)]
                    ] += entry * c
    upper = _nullity(equations, len(unknowns))
    cert = {
        "reason": "kernel sections of the symmetric connecting map, exact",
        "unknowns": len(unknowns),
        "equations": len(rows) * len(reduced_basis),
        "upper_bound": upper,
    }
    return (0, upper, cert)


# -- the differential side -----------------------------------------------------------


def differential_sym_sequence(qmax: int) -> list[BundleSum]:
    """Sym^q of the cotangent sheaf of the cone: one indecomposable per q.

    Sym^q is the rank q+1 Atiyah bundle twisted by the q-th power of the
    polarization, hence indecomposable with free rank 0 for q >= 1.
    """
    if qmax < 0:
        raise ValueError("qmax must be nonnegative")
    out = [BundleSum.of(line_bundle(0))]
    for q in range(1, qmax + 1):
        twist = TorsionLabel.make(symbols={POLARIZATION_SYMBOL: q})
        out.append(
            BundleSum.of(IndecomposableBundle.make(q + 1, 3 * q * (q + 1), twist))
        )
    return out


def differential_ratio_series(qmax: int) -> list[Fraction]:
    """Cumulative free-rank ratio of the differential series: 1/sum(q+1)."""
    out = []
    den = 0
    for q in range(qmax + 1):
        den += q + 1
        out.append(Fraction(1, den))
    return out


def frk_upper_bound_series(qmax: int) -> list[Fraction]:
    """Prefix ratios of the even/odd free-rank bound: a_q = q+1 (q even), 0 (odd)."""
    out = []
    num = 0
    den = 0
    for q in range(qmax + 1):
        num += (q + 1) if q % 2 == 0 else 0
        den += q + 1
        out.append(Fraction(num, den))
    return out
