"""Kernel lattices and simplex slice counting for diagonal cyclic actions.

This is the independent counting oracle for the multiplicity machinery: the
monomials of degree q on which a weight-t character acts are the lattice
points of a congruence class on the slice x1 + x2 = q, so their number can
be found with no character theory at all.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from symsig import _kernel
from symsig.groups import BadSpec


class NoSolution(ValueError):
    """Target residue is outside the image of the weight form."""


class NotFaithful(ValueError):
    """The weights do not generate Z/n."""


class UnsupportedRank(ValueError):
    """Only two diagonal weights are exercised."""


@dataclass(frozen=True)
class WeightRep:
    """Diagonal action exponents of the generator of a cyclic group."""

    n: int
    weights: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1 or not self.weights:
            raise BadSpec("modulus and at least one weight are required")


@dataclass(frozen=True)
class KernelLattice:
    """Full-rank sublattice basis (columns), an offset, and the index."""

    basis: tuple[tuple[int, ...], ...]
    offset: tuple[int, ...]
    index: int


def is_faithful(rep: WeightRep) -> bool:
    """True iff the weights generate all of Z/n."""
    return math.gcd(rep.n, *rep.weights) == 1


def hermite_basis(columns: list[list[int]]) -> list[list[int]]:
    """Column-style Hermite reduction of a spanning set to a triangular basis.

    Returns the nonzero columns, lower-triangular with positive diagonal.
    """
    rows = len(columns[0])
    cols = [list(c) for c in columns]
    col_at = 0
    for r in range(rows):
        # euclidean elimination across the remaining columns in row r
        while True:
            nonzero = [j for j in range(col_at, len(cols)) if cols[j][r] != 0]
            if not nonzero:
                break
            j_min = min(nonzero, key=lambda j: abs(cols[j][r]))
            cols[col_at], cols[j_min] = cols[j_min], cols[col_at]
            if len(nonzero) == 1:
                break
            for j in range(col_at + 1, len(cols)):
                if cols[j][r] != 0:
                    f = cols[j][r] // cols[col_at][r]
                    cols[j] = [x - f * y for x, y in zip(cols[j], cols[col_at])]
        if col_at < len(cols) and cols[col_at][r] != 0:
            if cols[col_at][r] < 0:
                cols[col_at] = [-x for x in cols[col_at]]
            # reduce earlier columns above the pivot
            for j in range(col_at):
                f = cols[j][r] // cols[col_at][r]
                if f:
                    cols[j] = [x - f * y for x, y in zip(cols[j], cols[col_at])]
            col_at += 1
    return [c for c in cols[:col_at]]


def smith_invariants(matrix: list[list[int]]) -> list[int]:
    """Elementary divisors via sympy's exact Smith normal form."""
    from sympy import ZZ, Matrix
    from sympy.matrices.normalforms import smith_normal_form

    snf = smith_normal_form(Matrix(matrix), domain=ZZ)
    return [int(snf[i, i]) for i in range(min(snf.shape))]


def kernel_lattice(rep: WeightRep, t: int) -> KernelLattice:
    """Lattice of exponent vectors with weight 0 mod n, shifted to weight t.

    The basis comes from Hermite reduction; the index is the determinant,
    cross-checked against the Smith normal form.
    """
    if len(rep.weights) != 2:
        raise UnsupportedRank("only two weights are supported")
    n = rep.n
    w1, w2 = (w % n for w in rep.weights)
    g12 = math.gcd(w1, w2)
    if g12 == 0:
        spanning = [[1, 0], [0, 1]]
    else:
        # the exact null direction of the weight form, plus the shortest
        # combination whose weight is a multiple of n
        _, u, v = _extended_gcd(w1, w2)
        k = n // math.gcd(g12, n)
        spanning = [[n, 0], [0, n], [w2 // g12, -w1 // g12], [u * k, v * k]]
    basis = hermite_basis(spanning)
    assert len(basis) == 2, "weight-kernel lattice must have full rank"
    det = abs(basis[0][0] * basis[1][1] - basis[0][1] * basis[1][0])
    snf = smith_invariants([[basis[0][0], basis[1][0]], [basis[0][1], basis[1][1]]])
    assert det == abs(snf[0] * snf[1]), "Hermite and Smith indexes disagree"

    g_all = math.gcd(n, w1, w2)
    if t % g_all != 0:
        raise NoSolution(f"residue {t} is not in the image of the weights mod {n}")
    offset = _solve_congruence(n, w1, w2, t % n)
    return KernelLattice(
        basis=tuple(tuple(c) for c in basis), offset=offset, index=det
    )


def _extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        qt = old_r // r
        old_r, r = r, old_r - qt * r
        old_s, s = s, old_s - qt * s
        old_t, t = t, old_t - qt * t
    return old_r, old_s, old_t


def _solve_congruence(n: int, w1: int, w2: int, t: int) -> tuple[int, int]:
    """Some (x1, x2) with w1 x1 + w2 x2 = t mod n (existence pre-checked)."""
    for x1 in range(n):
        for x2 in range(n):
            if (w1 * x1 + w2 * x2) % n == t % n:
                return (x1, x2)
    raise NoSolution(f"no exponent vector of weight {t} mod {n}")


def count_simplex_points(rep: WeightRep, t: int, q: int) -> int:
    """#{x in N^2 : x1 + x2 = q, w1 x1 + w2 x2 = t mod n} by enumeration."""
    if len(rep.weights) != 2:
        raise UnsupportedRank("only two weights are supported")
    if q < 0:
        raise ValueError("q must be nonnegative")
    return _kernel.weight_slice_count(rep.n, rep.weights[0], rep.weights[1], t % rep.n, q)


def slice_count_series(rep: WeightRep, qmax: int) -> list[list[int]]:
    """Histogram rows for q = 0..qmax: counts per residue class."""
    if len(rep.weights) != 2:
        raise UnsupportedRank("only two weights are supported")
    return _kernel.weight_slice_counts(rep.n, rep.weights[0], rep.weights[1], qmax)


def ratio_to_limit(rep: WeightRep, t: int, qmax: int) -> Fraction:
    """Exact partial-sum ratio (sum of counts) / (sum of slice sizes)."""
    if not is_faithful(rep):
        raise NotFaithful(f"weights {rep.weights} do not generate Z/{rep.n}")
    rows = slice_count_series(rep, qmax)
    t = t % rep.n
    num = sum(row[t] for row in rows)
    den = (qmax + 1) * (qmax + 2) // 2
    return Fraction(num, den)


def minimal_invariant_monomials(n: int, a: int) -> list[tuple[int, int]]:
    """Minimal generating monomials u^i v^j of the invariant ring of 1/n(1,a).

    These are the irreducible elements of the semigroup of exponent pairs
    with i + a*j = 0 mod n; generators all lie in the box [0, n]^2.
    """
    if n < 1 or math.gcd(a, n) != 1:
        raise BadSpec(f"1/{n}(1,{a}) requires a coprime to n")
    members = [
        (i, j)
        for i in range(n + 1)
        for j in range(n + 1)
        if (i + a * j) % n == 0 and (i, j) != (0, 0)
    ]
    member_set = set(members)
    minimal = []
    for i, j in members:
        reducible = any(
            (s, t) != (i, j) and (i - s, j - t) in member_set
            for (s, t) in members
            if s <= i and t <= j
        )
        if not reducible:
            minimal.append((i, j))
    return sorted(minimal, key=lambda m: (-m[0], m[1]))
