"""Exact arithmetic in cyclotomic fields Q(zeta_N).

A value is stored as the canonical residue of a polynomial in zeta_N modulo
the N-th cyclotomic polynomial: a coefficient vector of length phi(N) over Q.
Internally the vector is kept as integer numerators over one positive common
denominator, which makes products plain integer convolutions; the public
``coeffs`` view is a tuple of Fractions in lowest terms.

Values are immutable and all operations are pure.
"""

from __future__ import annotations

import cmath
import functools
import math
import re
from fractions import Fraction


class DivisionByZero(ZeroDivisionError):
    """Division by the zero element."""


class NotADivisor(ValueError):
    """Conductor change that is not an embedding (target not a multiple)."""


class NotInSubfield(ValueError):
    """Value does not lie in the requested smaller cyclotomic field."""


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("phi is defined for positive integers")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


# -- integer polynomial helpers (dense, index = exponent) --------------------


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_divmod_exact(a: list[int], b: list[int]) -> list[int]:
    """Quotient of a by b, assuming b is monic and divides a exactly."""
    a = list(a)
    db, da = len(b) - 1, len(a) - 1
    quot = [0] * (da - db + 1)
    for i in range(da - db, -1, -1):
        c = a[i + db]
        if c:
            quot[i] = c
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    assert all(c == 0 for c in a), "non-exact polynomial division"
    return quot


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, constant term first.

    Computed by dividing x^n - 1 by the product of the polynomials of the
    proper divisors of n.
    """
    if n < 1:
        raise ValueError("conductor must be a positive integer")
    if n == 1:
        return (-1, 1)
    x_n_minus_1 = [0] * (n + 1)
    x_n_minus_1[0], x_n_minus_1[n] = -1, 1
    denom = [1]
    for d in divisors(n)[:-1]:
        denom = _poly_mul(denom, list(cyclotomic_polynomial(d)))
    return tuple(_poly_divmod_exact(x_n_minus_1, denom))


@functools.lru_cache(maxsize=None)
def _power_residues(n: int) -> tuple[tuple[int, ...], ...]:
    """Coordinate vectors of zeta^k mod Phi_n for k = 0 .. n-1."""
    phi = euler_phi(n)
    poly = cyclotomic_polynomial(n)
    rows = [tuple(1 if i == k else 0 for i in range(phi)) for k in range(phi)]
    for _ in range(phi, n):
        prev = rows[-1]
        shifted = [0] + list(prev[: phi - 1])
        lead = prev[phi - 1]
        if lead:
            # x^phi = -(lower part of Phi), since Phi is monic
            for i in range(phi):
                shifted[i] -= lead * poly[i]
        rows.append(tuple(shifted))
    return tuple(rows)


def _reduce_dense(n: int, dense: list[int]) -> tuple[int, ...]:
    """Reduce an integer polynomial in zeta (any degree) to canonical form."""
    phi = euler_phi(n)
    folded = [0] * n
    for k, c in enumerate(dense):
        if c:
            folded[k % n] += c
    out = list(folded[:phi])
    rows = _power_residues(n)
    for k in range(phi, n):
        c = folded[k]
        if c:
            row = rows[k]
            for i in range(phi):
                out[i] += c * row[i]
    return tuple(out)


class CycloNum:
    """An element of Q(zeta_N), canonical modulo the cyclotomic polynomial.

    The conductor is kept as given; it is not minimized during arithmetic
    (see :func:`minimize_conductor` for the explicit normalization step).
    Mixed-conductor arithmetic lifts both operands to the lcm.  Instances
    used as dict/set keys should share a conductor.
    """

    __slots__ = ("conductor", "_num", "_den")

    def __init__(self, conductor: int, num: tuple[int, ...], den: int = 1):
        if conductor < 1:
            raise ValueError("conductor must be a positive integer")
        if den == 0:
            raise DivisionByZero("zero denominator")
        if den < 0:
            num = tuple(-c for c in num)
            den = -den
        g = den
        for c in num:
            g = math.gcd(g, c)
            if g == 1:
                break
        if g > 1:
            num = tuple(c // g for c in num)
            den //= g
        if not any(num):
            den = 1
        self.conductor = conductor
        self._num = num
        self._den = den

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, conductor: int = 1) -> "CycloNum":
        return cls(conductor, (0,) * euler_phi(conductor))

    @classmethod
    def one(cls, conductor: int = 1) -> "CycloNum":
        return cls.from_rational(1, conductor)

    @classmethod
    def from_rational(cls, value, conductor: int = 1) -> "CycloNum":
        f = Fraction(value)
        num = [0] * euler_phi(conductor)
        num[0] = f.numerator
        return cls(conductor, tuple(num), f.denominator)

    @classmethod
    def root_of_unity(cls, conductor: int, power: int = 1) -> "CycloNum":
        """zeta_conductor ** power."""
        dense = [0] * conductor
        dense[power % conductor] = 1
        return cls(conductor, _reduce_dense(conductor, dense))

    @classmethod
    def from_coeffs(cls, conductor: int, coeffs) -> "CycloNum":
        fracs = [Fraction(c) for c in coeffs]
        if len(fracs) != euler_phi(conductor):
            raise ValueError("coefficient vector has wrong length")
        den = math.lcm(*(f.denominator for f in fracs)) if fracs else 1
        num = tuple(f.numerator * (den // f.denominator) for f in fracs)
        return cls(conductor, num, den)

    # -- views ----------------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self._num[0], self._den)

    def as_int(self) -> int:
        f = self.as_fraction()
        if f.denominator != 1:
            raise ValueError(f"{self!r} is not a rational integer")
        return f.numerator

    # -- conductor management --------------------------------------------------

    def embed(self, conductor: int) -> "CycloNum":
        """The same element written in Q(zeta_M), via zeta_N -> zeta_M^(M/N)."""
        n, m = self.conductor, conductor
        if m == n:
            return self
        if m % n != 0:
            raise NotADivisor(f"conductor {n} does not divide {m}")
        step = m // n
        dense = [0] * m
        for k, c in enumerate(self._num):
            dense[k * step] = c
        return CycloNum(m, _reduce_dense(m, dense), self._den)

    def restrict(self, conductor: int) -> "CycloNum":
        """Rewrite in the subfield Q(zeta_n); raises NotInSubfield if impossible."""
        n = conductor
        if self.conductor == n:
            return self
        if self.conductor % n != 0:
            raise NotADivisor(f"conductor {n} does not divide {self.conductor}")
        basis = [CycloNum.root_of_unity(n, k).embed(self.conductor) for k in range(euler_phi(n))]
        sol = _solve_in_basis([b.coeffs for b in basis], self.coeffs)
        if sol is None:
            raise NotInSubfield(f"value is not in Q(zeta_{n})")
        return CycloNum.from_coeffs(n, sol)

    # -- ring operations ---------------------------------------------------------

    def _common(self, other) -> tuple["CycloNum", "CycloNum"]:
        if not isinstance(other, CycloNum):
            other = CycloNum.from_rational(other, self.conductor)
        if other.conductor == self.conductor:
            return self, other
        m = math.lcm(self.conductor, other.conductor)
        return self.embed(m), other.embed(m)

    def __add__(self, other) -> "CycloNum":
        if not isinstance(other, (CycloNum, int, Fraction)):
            return NotImplemented
        a, b = self._common(other)
        den = math.lcm(a._den, b._den)
        fa, fb = den // a._den, den // b._den
        num = tuple(x * fa + y * fb for x, y in zip(a._num, b._num))
        return CycloNum(a.conductor, num, den)

    def __sub__(self, other):
        if not isinstance(other, (CycloNum, int, Fraction)):
            return NotImplemented
        return self + (-other if isinstance(other, CycloNum) else CycloNum.from_rational(-Fraction(other), self.conductor))

    def __neg__(self) -> "CycloNum":
        return CycloNum(self.conductor, tuple(-c for c in self._num), self._den)

    def __mul__(self, other) -> "CycloNum":
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return CycloNum(self.conductor, tuple(c * f.numerator for c in self._num), self._den * f.denominator)
        if not isinstance(other, CycloNum):
            return NotImplemented
        a, b = self._common(other)
        conv = [0] * (2 * len(a._num) - 1) if a._num else [0]
        for i, x in enumerate(a._num):
            if x:
                for j, y in enumerate(b._num):
                    conv[i + j] += x * y
        return CycloNum(a.conductor, _reduce_dense(a.conductor, conv), a._den * b._den)

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other):
        return (-self) + other

    def inverse(self) -> "CycloNum":
        """Multiplicative inverse via the extended Euclidean algorithm mod Phi_N."""
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        if self.is_rational():
            return CycloNum.from_rational(1 / self.as_fraction(), self.conductor)
        phi_poly = [Fraction(c) for c in cyclotomic_polynomial(self.conductor)]
        inv = _poly_inverse_mod(list(self.coeffs), phi_poly)
        padded = inv + [Fraction(0)] * (euler_phi(self.conductor) - len(inv))
        return CycloNum.from_coeffs(self.conductor, padded)

    def __truediv__(self, other) -> "CycloNum":
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            if f == 0:
                raise DivisionByZero("division by zero")
            return self * (1 / f)
        if not isinstance(other, CycloNum):
            return NotImplemented
        a, b = self._common(other)
        return a * b.inverse()

    def __rtruediv__(self, other):
        return CycloNum.from_rational(other, self.conductor) / self

    def __pow__(self, exponent: int) -> "CycloNum":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CycloNum.one(self.conductor)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self) -> "CycloNum":
        """Complex conjugation: the field map zeta -> zeta^(N-1)."""
        return self.galois(self.conductor - 1) if self.conductor > 1 else self

    def galois(self, e: int) -> "CycloNum":
        """The automorphism zeta -> zeta^e (e coprime to the conductor)."""
        n = self.conductor
        if math.gcd(e % n if n > 1 else 1, n) != 1:
            raise ValueError(f"exponent {e} is not coprime to {n}")
        dense = [0] * n
        for k, c in enumerate(self._num):
            dense[(k * e) % n] += c
        return CycloNum(n, _reduce_dense(n, dense), self._den)

    # -- comparisons and display ---------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CycloNum.from_rational(other, self.conductor)
        if not isinstance(other, CycloNum):
            return NotImplemented
        a, b = self._common(other)
        return a._num == b._num and a._den == b._den

    def __hash__(self):
        return hash((self.conductor, self._num, self._den))

    def approx(self) -> complex:
        """Floating evaluation at zeta_N = exp(2*pi*i/N); display/sanity only."""
        z = cmath.exp(2j * cmath.pi / self.conductor)
        acc = 0j
        for k in reversed(range(len(self._num))):
            acc = acc * z + self._num[k]
        return acc / self._den

    def __repr__(self):
        return f"CycloNum({self.conductor}, {format_value(self)!r})"


def _poly_inverse_mod(a: list[Fraction], modulus: list[Fraction]) -> list[Fraction]:
    """Inverse of a modulo a monic irreducible polynomial, over Q."""

    def trim(p):
        while p and p[-1] == 0:
            p.pop()
        return p

    def divmod_q(num, den):
        num = list(num)
        quot = [Fraction(0)] * max(1, len(num) - len(den) + 1)
        trim(num)
        while len(num) >= len(den):
            shift = len(num) - len(den)
            c = num[-1] / den[-1]
            quot[shift] = c
            for i, d in enumerate(den):
                num[shift + i] -= c * d
            trim(num)
        return quot, num

    def sub_scaled(p, q, quot):
        # p - quot * q
        prod = [Fraction(0)] * (len(quot) + len(q) - 1 if q else 1)
        for i, qi in enumerate(quot):
            if qi:
                for j, cj in enumerate(q):
                    prod[i + j] += qi * cj
        width = max(len(p), len(prod))
        p = p + [Fraction(0)] * (width - len(p))
        prod = prod + [Fraction(0)] * (width - len(prod))
        return trim([x - y for x, y in zip(p, prod)])

    r0, r1 = list(modulus), trim(list(a))
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while len(r1) > 1:
        quot, rem = divmod_q(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, sub_scaled(s0, s1, quot)
    # r1 is a nonzero constant: gcd(a, Phi) = 1 since Phi is irreducible
    c = r1[0]
    _, rem = divmod_q([x / c for x in s1], modulus)
    return rem


def _solve_in_basis(basis_rows, target):
    """Rational coordinates of target in the span of basis_rows, or None."""
    m = len(basis_rows)
    if m == 0:
        return [] if not any(target) else None
    n = len(target)
    # columns: basis coefficients; solve A x = target by elimination
    rows = [[Fraction(basis_rows[j][i]) for j in range(m)] + [Fraction(target[i])] for i in range(n)]
    pivots = []
    r = 0
    for c in range(m):
        pivot = next((i for i in range(r, n) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    sol = [Fraction(0)] * m
    for i, c in enumerate(pivots):
        sol[c] = rows[i][m]
    for i in range(r, n):
        if rows[i][m] != 0:
            return None
    # verify (also covers columns without pivots)
    for i in range(n):
        if sum(sol[j] * basis_rows[j][i] for j in range(m)) != target[i]:
            return None
    return sol


def minimize_conductor(a: CycloNum) -> CycloNum:
    """Rewrite over the smallest conductor that contains the value."""
    best = a
    for d in divisors(a.conductor):
        try:
            return a.restrict(d)
        except NotInSubfield:
            continue
    return best


# -- text serialization (golden-file format) -------------------------------------


def format_value(a: CycloNum) -> str:
    """Fixed-width text form ``a0 + a1*z + a2*z^2 + ...`` with z = zeta_N."""
    parts = []
    for k, c in enumerate(a.coeffs):
        s = str(c)
        if k == 0:
            parts.append(s)
        elif k == 1:
            parts.append(f"{s}*z")
        else:
            parts.append(f"{s}*z^{k}")
    return " + ".join(parts)


_TERM_RE = re.compile(r"^\s*(-?\d+(?:/\d+)?)\s*(?:\*\s*z(?:\^(\d+))?)?\s*$")


def parse_value(text: str, conductor: int) -> CycloNum:
    """Inverse of :func:`format_value`."""
    coeffs = [Fraction(0)] * euler_phi(conductor)
    for term in text.split(" + "):
        m = _TERM_RE.match(term)
        if m is None:
            raise ValueError(f"bad term {term!r}")
        c = Fraction(m.group(1))
        if "z" not in term:
            k = 0
        else:
            k = int(m.group(2)) if m.group(2) else 1
        coeffs[k] += c
    return CycloNum.from_coeffs(conductor, coeffs)
