"""Characters of symmetric powers Sym^q(V) and multiplicity series.

Three independent single-q methods are provided: the SL(2) trace recurrence,
the eigenvalue/weight form for diagonal representations, and the explicit
action on the monomial basis (the method-independent oracle, any
determinant).  A fourth route expands the Molien/Springer generating
function.  The bulk series over q runs on the integer kernel backend.
"""

from __future__ import annotations

import math
from fractions import Fraction

from symsig import _kernel
from symsig.characters import (
    Character,
    decompose,
    fundamental_character,
    irreducible_table,
)
from symsig.cyclotomic import CycloNum, euler_phi
from symsig.groups import Matrix, MatrixGroup, mat_det, mat_trace


class NotSL2(ValueError):
    """Recurrence method needs determinant 1 throughout the group."""


class NotDiagonal(ValueError):
    """Eigenvalue method needs a diagonal built-in representation."""


class NonIntegerCoefficient(ValueError):
    """A series coefficient that should be a nonnegative integer is not."""


class OrderTooSmall(ValueError):
    """Bounded-tail check needs a root of unity of order > 2."""


# -- single-q characters -----------------------------------------------------


def sym_char_recurrence(trace: Character, q: int) -> Character:
    """chi_q = trace * chi_(q-1) - chi_(q-2) with chi_0 = 1, chi_1 = trace.

    Valid for two-dimensional representations with determinant one, where
    det(I - t*rho(g)) = 1 - trace(g) t + t^2.
    """
    group = trace.group
    if not group.determinant_flag:
        raise NotSL2("the group has elements of determinant != 1")
    if q < 0:
        raise ValueError("q must be nonnegative")
    one = CycloNum.one(group.conductor)
    prev = tuple([one] * group.n_classes)
    if q == 0:
        return Character(group, prev)
    cur = trace.values
    for _ in range(q - 1):
        prev, cur = cur, tuple(t * c - p for t, c, p in zip(trace.values, cur, prev))
    return Character(group, cur)


def sym_char_eigen(group: MatrixGroup, q: int) -> Character:
    """Sum of eigenvalue monomials lambda^t mu^(q-t) for diagonal groups."""
    weights = group.diagonal_weights
    if weights is None or len(weights) != 2:
        raise NotDiagonal("group does not carry a two-dimensional diagonal action")
    n = group.conductor
    w1, w2 = weights
    values = []
    for k in range(group.order):
        counts = [0] * n
        for t in range(q + 1):
            counts[(k * (w1 * t + w2 * (q - t))) % n] += 1
        acc = CycloNum.zero(n)
        for r, c in enumerate(counts):
            if c:
                acc = acc + CycloNum.root_of_unity(n, r) * c
        values.append(acc)
    # abelian: element k is the representative of class k
    return Character(group, tuple(values))


def _linear_form_powers(a: CycloNum, b: CycloNum, q: int) -> list[list[CycloNum]]:
    """Coefficient lists of (a*u + b*v)^t for t = 0..q."""
    one = CycloNum.one(a.conductor)
    rows = [[one]]
    for t in range(1, q + 1):
        prev = rows[-1]
        row = []
        for j in range(t + 1):
            term = CycloNum.zero(a.conductor)
            if j > 0:
                term = term + a * prev[j - 1]
            if j < t:
                term = term + b * prev[j]
            row.append(term)
        rows.append(row)
    return rows


def sym_power_matrix(mat: Matrix, q: int) -> Matrix:
    """Action of a 2x2 matrix on the degree-q monomial basis u^t v^(q-t)."""
    (m11, m12), (m21, m22) = mat
    pow_u = _linear_form_powers(m11, m12, q)
    pow_v = _linear_form_powers(m21, m22, q)
    zero = CycloNum.zero(m11.conductor)
    cols = []
    for t in range(q + 1):
        coeffs = [zero] * (q + 1)
        for j, cu in enumerate(pow_u[t]):
            for k, cv in enumerate(pow_v[q - t]):
                coeffs[j + k] = coeffs[j + k] + cu * cv
        cols.append(coeffs)
    return tuple(tuple(cols[t][s] for t in range(q + 1)) for s in range(q + 1))


def _sym_diagonal_entry(pow_u, pow_v, q: int, t: int, zero: CycloNum) -> CycloNum:
    acc = zero
    row_u, row_v = pow_u[t], pow_v[q - t]
    for j in range(max(0, t - (q - t)), t + 1):
        acc = acc + row_u[j] * row_v[t - j]
    return acc


def sym_char_monomial(group: MatrixGroup, q: int, rep: list[Matrix] | None = None) -> Character:
    """Trace of the monomial-basis action; works for any determinant."""
    mats = rep if rep is not None else group.class_representatives()
    zero = CycloNum.zero(group.conductor)
    values = []
    for mat in mats:
        pow_u = _linear_form_powers(mat[0][0], mat[0][1], q)
        pow_v = _linear_form_powers(mat[1][0], mat[1][1], q)
        acc = zero
        for t in range(q + 1):
            acc = acc + _sym_diagonal_entry(pow_u, pow_v, q, t, zero)
        values.append(acc)
    return Character(group, tuple(values))


# -- Molien / Springer series ---------------------------------------------------


def molien_multiplicity_series(group: MatrixGroup, irr_index: int, qmax: int) -> list[int]:
    """Coefficients of the multiplicity generating function up to qmax.

    Each class contributes 1/det(I - t*rho(g)), expanded by the linear
    recurrence c_q = trace(g) c_(q-1) - det(g) c_(q-2).
    """
    if qmax < 0:
        raise ValueError("qmax must be nonnegative")
    table = irreducible_table(group)
    chi = table.irreducibles[irr_index]
    one = CycloNum.one(group.conductor)
    reps = group.class_representatives()
    traces = [mat_trace(m) for m in reps]
    dets = [mat_det(m) for m in reps]
    sizes = group.class_sizes()
    weights = [chi.values[c].conjugate() * sizes[c] for c in range(group.n_classes)]
    prev = [CycloNum.zero(group.conductor)] * group.n_classes
    cur = [one] * group.n_classes
    out = []
    for q in range(qmax + 1):
        if q > 0:
            prev, cur = cur, [
                t * c - d * p for t, c, d, p in zip(traces, cur, dets, prev)
            ]
        total = CycloNum.zero(group.conductor)
        for w, c in zip(weights, cur):
            total = total + w * c
        value = total / group.order
        if not value.is_rational():
            raise NonIntegerCoefficient(f"coefficient at q={q} is irrational")
        f = value.as_fraction()
        if f.denominator != 1 or f < 0:
            raise NonIntegerCoefficient(f"coefficient at q={q} is {f}")
        out.append(int(f))
    return out


# -- multiplicities -----------------------------------------------------------------


def multiplicities(group: MatrixGroup, q: int, method: str = "auto") -> list[int]:
    """Decomposition of Sym^q of the fundamental representation."""
    table = irreducible_table(group)
    if method == "auto":
        method = "recurrence" if group.determinant_flag else (
            "eigen" if group.diagonal_weights else "monomial"
        )
    if method == "recurrence":
        chi = sym_char_recurrence(fundamental_character(group), q)
    elif method == "eigen":
        chi = sym_char_eigen(group, q)
    elif method == "monomial":
        chi = sym_char_monomial(group, q)
    elif method == "springer":
        return [molien_multiplicity_series(group, i, q)[q] for i in range(group.n_classes)]
    else:
        raise ValueError(f"unknown method {method!r}")
    return decompose(chi, table)


def diagonal_weight_count(n: int, weights: tuple[int, int], t: int, q: int) -> int:
    """#{0 <= s <= q : w1*s + w2*(q-s) = t mod n}, in closed form."""
    w1, w2 = weights
    delta = (w1 - w2) % n
    target = (t - w2 * q) % n
    g = math.gcd(delta, n)
    if target % g:
        return 0
    step = n // g
    s0 = (target // g * pow(delta // g, -1, step)) % step if step > 1 else 0
    return (q - s0) // step + 1 if s0 <= q else 0


def _integer_mult_matrix(value: CycloNum) -> list[list[int]]:
    """Matrix of multiplication by an algebraic integer on the power basis."""
    n = value.conductor
    d = euler_phi(n)
    cols = []
    for j in range(d):
        prod = value * CycloNum.root_of_unity(n, j)
        coeffs = prod.coeffs
        if any(c.denominator != 1 for c in coeffs):
            raise ValueError("value is not an algebraic integer on this basis")
        cols.append([int(c) for c in coeffs])
    return [[cols[j][i] for j in range(d)] for i in range(d)]


def sl2_series_data(group: MatrixGroup) -> tuple[list, list]:
    """Integer kernel inputs: trace matrices and projection matrices."""
    if not group.determinant_flag:
        raise NotSL2("series kernel needs determinant 1")
    table = irreducible_table(group)
    fund = fundamental_character(group)
    trace_mats = [_integer_mult_matrix(v) for v in fund.values]
    sizes = group.class_sizes()
    proj_mats = [
        [
            _integer_mult_matrix(chi.values[c].conjugate() * sizes[c])
            for c in range(group.n_classes)
        ]
        for chi in table.irreducibles
    ]
    return trace_mats, proj_mats


def multiplicity_series(group: MatrixGroup, qmax: int) -> list[list[int]]:
    """Rows q = 0..qmax of multiplicities of Sym^q of the fundamental rep.

    Dispatch: faithful diagonal groups use the closed-form weight count;
    other determinant-one groups run the integer recurrence kernel;
    anything else falls back to the per-q monomial oracle.
    """
    weights = group.diagonal_weights
    if weights is not None and len(weights) == 2 and math.gcd(group.conductor, *weights) == 1:
        n = group.conductor
        return [
            [diagonal_weight_count(n, weights, t, q) for t in range(n)]
            for q in range(qmax + 1)
        ]
    if group.determinant_flag:
        trace_mats, proj_mats = sl2_series_data(group)
        try:
            return _kernel.sl2_multiplicity_series(trace_mats, proj_mats, group.order, qmax)
        except ValueError as exc:
            raise NonIntegerCoefficient(str(exc)) from exc
    table = irreducible_table(group)
    return [decompose(sym_char_monomial(group, q), table) for q in range(qmax + 1)]


# -- bounded tails -------------------------------------------------------------------


def bounded_tail_check(m: int, qmax: int) -> float:
    """Max |f(q)| for f(q) = sum of xi^(2t-q), xi of order m > 2, q <= qmax.

    Also asserts the exact period-m repetition f(q + m) = f(q) in the
    cyclotomic values.
    """
    if m <= 2:
        raise OrderTooSmall("the root of unity must have order > 2")
    xi = CycloNum.root_of_unity(m)
    values = []
    square_sum = CycloNum.zero(m)
    for q in range(qmax + 1):
        square_sum = square_sum + CycloNum.root_of_unity(m, (2 * q) % m)
        values.append(xi ** (-q) * square_sum)
    for q in range(qmax + 1 - m):
        if values[q + m] != values[q]:
            raise AssertionError(f"period-{m} repetition fails at q={q}")
    return max(abs(v.approx()) for v in values)
