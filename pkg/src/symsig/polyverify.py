"""Exact verification of invariant generators, syzygies, and equivariance.

For each supported singularity the module carries the generators of the
maximal ideal of the invariant ring, the two generating syzygy vectors, and
the claimed action matrices on the syzygy pair, exactly as printed in the
sources they were transcribed from (constant factors included; the checks
are scale-covariant).  Verification is exact polynomial arithmetic over the
cyclotomic coefficient field; the final certificate identifies the syzygy
representation with the fundamental one by character equality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from symsig.cyclotomic import CycloNum
from symsig.characters import fundamental_character, trace_character
from symsig.groups import (
    BadSpec,
    BinaryDihedral,
    BinaryIcosahedral,
    BinaryOctahedral,
    BinaryTetrahedral,
    Cyclic,
    GroupSpec,
    Matrix,
    binary_dihedral_generators,
    binary_icosahedral_generators,
    binary_octahedral_generators,
    binary_tetrahedral_generators,
    make_group,
    mat_mul,
)


class VerificationFailed(AssertionError):
    """An exact polynomial identity from the fixture data does not hold."""


class NotFundamental(ValueError):
    """The syzygy representation is not character-equal to the fundamental one."""


def _coerce(coeff, conductor: int) -> CycloNum:
    if isinstance(coeff, CycloNum):
        return coeff.embed(conductor) if coeff.conductor != conductor else coeff
    return CycloNum.from_rational(Fraction(coeff), conductor)


@dataclass(frozen=True)
class MultiPoly:
    """Sparse multivariate polynomial with cyclotomic coefficients.

    Terms are kept sorted in graded lexicographic order with no zero
    coefficients, so equality and hashing are structural.
    """

    variables: tuple[str, ...]
    conductor: int
    terms: tuple[tuple[tuple[int, ...], CycloNum], ...]

    @classmethod
    def from_dict(cls, variables, conductor: int, data: dict) -> "MultiPoly":
        acc: dict[tuple[int, ...], CycloNum] = {}
        for exps, coeff in data.items():
            value = _coerce(coeff, conductor)
            if exps in acc:
                value = acc[exps] + value
            acc[exps] = value
        terms = tuple(
            (exps, c)
            for exps, c in sorted(acc.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)
            if not c.is_zero()
        )
        return cls(tuple(variables), conductor, terms)

    @classmethod
    def zero(cls, variables, conductor: int) -> "MultiPoly":
        return cls(tuple(variables), conductor, ())

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e, _ in self.terms), default=-1)

    def _data(self) -> dict:
        return dict(self.terms)

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        data = self._data()
        for exps, c in other.terms:
            data[exps] = data.get(exps, CycloNum.zero(self.conductor)) + c
        return MultiPoly.from_dict(self.variables, self.conductor, data)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.variables, self.conductor, tuple((e, -c) for e, c in self.terms))

    def __mul__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            scalar = _coerce(other, self.conductor)
            return MultiPoly.from_dict(
                self.variables, self.conductor, {e: c * scalar for e, c in self.terms}
            )
        data: dict[tuple[int, ...], CycloNum] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                key = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                data[key] = data[key] + prod if key in data else prod
        return MultiPoly.from_dict(self.variables, self.conductor, data)

    __rmul__ = __mul__

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.terms:
            mono = "*".join(
                f"{v}^{e}" if e > 1 else v for v, e in zip(self.variables, exps) if e
            )
            coeff = str(c.as_fraction()) if c.is_rational() else f"({c})"
            parts.append(f"{coeff}*{mono}" if mono else coeff)
        return " + ".join(parts)


def substitute_linear(p: MultiPoly, mat: Matrix) -> MultiPoly:
    """Apply the linear change of variables (u, v) -> M (u, v)^T."""
    if len(p.variables) != 2:
        raise ValueError("linear substitution is defined for two variables")
    conductor = p.conductor
    a, b = (_coerce(mat[0][0], conductor), _coerce(mat[0][1], conductor))
    c, d = (_coerce(mat[1][0], conductor), _coerce(mat[1][1], conductor))
    max_u = max((e[0] for e, _ in p.terms), default=0)
    max_v = max((e[1] for e, _ in p.terms), default=0)
    pow_u = _binary_powers(a, b, max_u, conductor)
    pow_v = _binary_powers(c, d, max_v, conductor)
    data: dict[tuple[int, int], CycloNum] = {}
    for (i, j), coeff in p.terms:
        # (a u + b v)^i * (c u + d v)^j, coefficients indexed by u-degree
        for s, cu in enumerate(pow_u[i]):
            for t, cv in enumerate(pow_v[j]):
                key = (s + t, i + j - s - t)
                prod = coeff * cu * cv
                data[key] = data[key] + prod if key in data else prod
    return MultiPoly.from_dict(p.variables, conductor, data)


def _binary_powers(a: CycloNum, b: CycloNum, n: int, conductor: int) -> list[list[CycloNum]]:
    rows = [[CycloNum.one(conductor)]]
    for k in range(1, n + 1):
        prev = rows[-1]
        row = []
        for j in range(k + 1):
            term = CycloNum.zero(conductor)
            if j > 0:
                term = term + a * prev[j - 1]
            if j < k:
                term = term + b * prev[j]
            row.append(term)
        rows.append(row)
    return rows


@dataclass(frozen=True)
class SyzygyDatum:
    """One singularity's verification fixture."""

    name: str
    spec: GroupSpec
    generators: tuple[Matrix, ...]
    invariants: tuple[MultiPoly, ...]
    syzygies: tuple[tuple[MultiPoly, ...], ...]
    action_matrices: tuple[Matrix, ...]
    intertwiner: Matrix | None = None


def _uv(conductor: int, data: dict) -> MultiPoly:
    return MultiPoly.from_dict(("u", "v"), conductor, data)


def fixture(spec: GroupSpec) -> SyzygyDatum:
    """Invariants, syzygy vectors, and action matrices for a singularity."""
    if isinstance(spec, Cyclic):
        n = spec.n
        if n < 2:
            raise BadSpec("the cyclic fixture needs order >= 2")
        xi = CycloNum.root_of_unity(n)
        zero = CycloNum.zero(n)
        gen = ((xi, zero), (zero, xi ** (n - 1)))
        return SyzygyDatum(
            name=f"A_{n - 1}",
            spec=spec,
            generators=(gen,),
            invariants=(
                _uv(n, {(n, 0): 1}),
                _uv(n, {(0, n): 1}),
                _uv(n, {(1, 1): 1}),
            ),
            syzygies=(
                (_uv(n, {}), _uv(n, {(1, 0): -1}), _uv(n, {(0, n - 1): 1})),
                (_uv(n, {(0, 1): -1}), _uv(n, {}), _uv(n, {(n - 1, 0): 1})),
            ),
            action_matrices=(gen,),
        )
    if isinstance(spec, BinaryDihedral):
        n = spec.n
        conductor = math.lcm(2 * n, 4)
        gens = tuple(binary_dihedral_generators(n))
        i_val = CycloNum.root_of_unity(conductor, conductor // 4)
        zero = CycloNum.zero(conductor)
        if n % 2 == 0:
            invariants = (
                _uv(conductor, {(2 * n, 0): 1, (0, 2 * n): 1}),
                _uv(conductor, {(2, 2): 1}),
                _uv(conductor, {(2 * n + 1, 1): 1, (1, 2 * n + 1): -1}),
            )
            syzygies = (
                (_uv(conductor, {(2, 1): -1}), _uv(conductor, {(0, 2 * n - 1): 2}), _uv(conductor, {(1, 0): 1})),
                (_uv(conductor, {(1, 2): -1}), _uv(conductor, {(2 * n - 1, 0): 2}), _uv(conductor, {(0, 1): -1})),
            )
            n_b = ((zero, i_val ** 3), (i_val ** 3, zero))
            intertwiner = ((CycloNum.one(conductor), zero), (zero, -CycloNum.one(conductor)))
        else:
            invariants = (
                _uv(conductor, {(2 * n, 0): 1, (0, 2 * n): -1}),
                _uv(conductor, {(2, 2): 1}),
                _uv(conductor, {(2 * n + 1, 1): 1, (1, 2 * n + 1): 1}),
            )
            syzygies = (
                (_uv(conductor, {(2, 1): 1}), _uv(conductor, {(0, 2 * n - 1): 2}), _uv(conductor, {(1, 0): -1})),
                (_uv(conductor, {(1, 2): -1}), _uv(conductor, {(2 * n - 1, 0): 2}), _uv(conductor, {(0, 1): -1})),
            )
            n_b = gens[1]
            intertwiner = None
        return SyzygyDatum(
            name=f"D_{n + 2}",
            spec=spec,
            generators=gens,
            invariants=invariants,
            syzygies=syzygies,
            action_matrices=(gens[0], n_b),
            intertwiner=intertwiner,
        )
    if isinstance(spec, BinaryTetrahedral):
        conductor = 24
        gens = tuple(binary_tetrahedral_generators())
        invariants = (
            _uv(conductor, {(5, 1): 1, (1, 5): -1}),
            _uv(conductor, {(8, 0): 1, (4, 4): 14, (0, 8): 1}),
            _uv(conductor, {(12, 0): 1, (8, 4): -33, (4, 8): -33, (0, 12): 1}),
        )
        syzygies = (
            (
                _uv(conductor, {(4, 3): 210, (0, 7): 30}),
                _uv(conductor, {(5, 0): -5, (1, 4): 25}),
                _uv(conductor, {(1, 0): 5}),
            ),
            (
                _uv(conductor, {(7, 0): -30, (3, 4): -210}),
                _uv(conductor, {(4, 1): 25, (0, 5): -5}),
                _uv(conductor, {(0, 1): 5}),
            ),
        )
        return SyzygyDatum("E_6", spec, gens, invariants, syzygies, gens)
    if isinstance(spec, BinaryOctahedral):
        conductor = 24
        gens = tuple(binary_octahedral_generators())
        node = _uv(conductor, {(5, 1): 1, (1, 5): -1})
        quad = _uv(conductor, {(12, 0): 1, (8, 4): -33, (4, 8): -33, (0, 12): 1})
        invariants = (
            _uv(conductor, {(8, 0): 1, (4, 4): 14, (0, 8): 1}),
            node * node,
            node * quad,
        )
        syzygies = (
            (
                _uv(conductor, {(10, 1): 7, (6, 5): -42, (2, 9): 35}),
                _uv(conductor, {(4, 3): -294, (0, 7): -42}),
                _uv(conductor, {(1, 0): -7}),
            ),
            (
                _uv(conductor, {(9, 2): -35, (5, 6): 42, (1, 10): -7}),
                _uv(conductor, {(7, 0): 42, (3, 4): 294}),
                _uv(conductor, {(0, 1): -7}),
            ),
        )
        return SyzygyDatum("E_7", spec, gens, invariants, syzygies, gens)
    if isinstance(spec, BinaryIcosahedral):
        conductor = 20
        gens = tuple(binary_icosahedral_generators())
        invariants = (
            _uv(conductor, {(11, 1): 1, (6, 6): 11, (1, 11): -1}),
            _uv(conductor, {(20, 0): 1, (15, 5): -228, (10, 10): 494, (5, 15): 228, (0, 20): 1}),
            _uv(
                conductor,
                {(30, 0): 1, (25, 5): 522, (20, 10): -10005, (10, 20): -10005, (5, 25): -522, (0, 30): 1},
            ),
        )
        syzygies = (
            (
                _uv(conductor, {(15, 4): -684684, (10, 9): 2966964, (5, 14): 2054052, (0, 19): 12012}),
                _uv(conductor, {(11, 0): -1001, (6, 5): -66066, (1, 10): 11011}),
                _uv(conductor, {(1, 0): 1001}),
            ),
            (
                _uv(conductor, {(19, 0): -12012, (14, 5): 2054052, (9, 10): -2966964, (4, 15): -684684}),
                _uv(conductor, {(10, 1): 11011, (5, 6): 66066, (0, 11): -1001}),
                _uv(conductor, {(0, 1): 1001}),
            ),
        )
        return SyzygyDatum("E_8", spec, gens, invariants, syzygies, gens)
    raise BadSpec(f"no fixture for {spec!r}")


ALL_FIXTURE_SPECS: tuple[GroupSpec, ...] = tuple(
    [Cyclic(n) for n in range(2, 9)]
    + [BinaryDihedral(n) for n in range(2, 7)]
    + [BinaryTetrahedral(), BinaryOctahedral(), BinaryIcosahedral()]
)


def verify_invariance(datum: SyzygyDatum) -> list[dict]:
    """g . p = p for every generator and every invariant generator."""
    checks = []
    for gi, g in enumerate(datum.generators):
        for pi, p in enumerate(datum.invariants):
            ok = substitute_linear(p, g) == p
            checks.append({"check": f"invariance g{gi} p{pi + 1}", "ok": ok})
            if not ok:
                raise VerificationFailed(
                    f"{datum.name}: generator {gi} does not fix invariant p{pi + 1}"
                )
    return checks


def verify_syzygy(datum: SyzygyDatum) -> list[dict]:
    """sum_i s_j[i] * p_i = 0 for both syzygy vectors."""
    checks = []
    for j, vec in enumerate(datum.syzygies):
        total = MultiPoly.zero(vec[0].variables, vec[0].conductor)
        for entry, p in zip(vec, datum.invariants):
            total = total + entry * p
        ok = total.is_zero()
        checks.append({"check": f"syzygy s{j + 1}", "ok": ok})
        if not ok:
            raise VerificationFailed(f"{datum.name}: s{j + 1} is not a syzygy: {total}")
    return checks


def verify_equivariance(datum: SyzygyDatum) -> list[dict]:
    """g . s_j = sum_k N_g[j][k] s_k, then certify N is the fundamental rep.

    The certificate is character equality (traces of the extended images
    agree with the fundamental character on every conjugacy class), which
    determines the representation up to isomorphism.
    """
    checks = []
    n_syz = len(datum.syzygies)
    for gi, (g, n_mat) in enumerate(zip(datum.generators, datum.action_matrices)):
        for j in range(n_syz):
            transformed = tuple(substitute_linear(entry, g) for entry in datum.syzygies[j])
            expected = None
            for k in range(n_syz):
                scaled = tuple(entry * n_mat[j][k] for entry in datum.syzygies[k])
                expected = scaled if expected is None else tuple(
                    a + b for a, b in zip(expected, scaled)
                )
            ok = transformed == expected
            checks.append({"check": f"equivariance g{gi} s{j + 1}", "ok": ok})
            if not ok:
                raise VerificationFailed(
                    f"{datum.name}: generator {gi} does not act by N on s{j + 1}"
                )
    group = make_group(datum.spec)
    syz_char = trace_character(group, list(datum.action_matrices))
    fund_char = fundamental_character(group)
    if syz_char.values != fund_char.values:
        raise NotFundamental(
            f"{datum.name}: syzygy representation is not character-equal to the fundamental one"
        )
    checks.append({"check": "character equality with fundamental", "ok": True})
    if datum.intertwiner is not None:
        p = datum.intertwiner
        for gi, (g, n_mat) in enumerate(zip(datum.generators, datum.action_matrices)):
            if mat_mul(p, n_mat) != mat_mul(g, p):
                raise VerificationFailed(
                    f"{datum.name}: the stated intertwiner fails at generator {gi}"
                )
        checks.append({"check": "explicit intertwiner", "ok": True})
    return checks


def verify_all(datum: SyzygyDatum) -> list[dict]:
    return verify_invariance(datum) + verify_syzygy(datum) + verify_equivariance(datum)
