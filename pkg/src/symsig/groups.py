"""Finite matrix groups over cyclotomic fields.

Builds the concrete subgroups of GL(2) used throughout: the cyclic groups
(both the det-1 embedding and the diagonal 1/n(1,a) form), the binary
dihedral groups, and the three exceptional binary polyhedral groups, from
their generator matrices.  Group structure (multiplication table, inverses,
conjugacy classes) is computed once at construction; everything downstream
reads the immutable tables.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from symsig.cyclotomic import CycloNum


class SizeExceeded(RuntimeError):
    """Closure grew past max_size: wrong generators or conductor."""


class NotInvertible(ValueError):
    """A generator matrix is singular."""


class BadSpec(ValueError):
    """Malformed group specification."""


Matrix = tuple[tuple[CycloNum, ...], ...]


# -- matrix helpers ------------------------------------------------------------


def mat_identity(conductor: int, size: int) -> Matrix:
    one = CycloNum.one(conductor)
    zero = CycloNum.zero(conductor)
    return tuple(
        tuple(one if i == j else zero for j in range(size)) for i in range(size)
    )


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    size = len(a)
    return tuple(
        tuple(
            sum((a[i][k] * b[k][j] for k in range(1, size)), a[i][0] * b[0][j])
            for j in range(size)
        )
        for i in range(size)
    )


def mat_det(a: Matrix) -> CycloNum:
    size = len(a)
    if size == 1:
        return a[0][0]
    if size == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    total = CycloNum.zero(a[0][0].conductor)
    for j in range(size):
        minor = tuple(row[:j] + row[j + 1 :] for row in a[1:])
        term = a[0][j] * mat_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def mat_trace(a: Matrix) -> CycloNum:
    return sum((a[i][i] for i in range(1, len(a))), a[0][0])


def mat_scale(a: Matrix, c: CycloNum) -> Matrix:
    return tuple(tuple(c * x for x in row) for row in a)


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_rank(a: Matrix) -> int:
    """Rank by Gaussian elimination over the cyclotomic field."""
    rows = [list(row) for row in a]
    rank = 0
    n_cols = len(a[0])
    for col in range(n_cols):
        pivot = next((r for r in range(rank, len(rows)) if not rows[r][col].is_zero()), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = rows[rank][col].inverse()
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and not rows[r][col].is_zero():
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def _mat_key(a: Matrix):
    return tuple(entry for row in a for entry in row)


# -- group specifications ---------------------------------------------------------


@dataclass(frozen=True)
class Cyclic:
    """C_n inside SL(2): the group of diag(xi, xi^-1)."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise BadSpec("cyclic order must be >= 1")


@dataclass(frozen=True)
class CyclicOneNA:
    """The diagonal cyclic group 1/n(1, a), generated by diag(xi, xi^a)."""

    n: int
    a: int

    def __post_init__(self):
        if self.n < 1 or math.gcd(self.a, self.n) != 1:
            raise BadSpec(f"1/{self.n}(1,{self.a}) requires a coprime to n")


@dataclass(frozen=True)
class BinaryDihedral:
    """BD_n of order 4n, n >= 2."""

    n: int

    def __post_init__(self):
        if self.n < 2:
            raise BadSpec("binary dihedral index must be >= 2")


@dataclass(frozen=True)
class BinaryTetrahedral:
    pass


@dataclass(frozen=True)
class BinaryOctahedral:
    pass


@dataclass(frozen=True)
class BinaryIcosahedral:
    pass


@dataclass(frozen=True)
class DiagonalAbelian:
    """Image of the diagonal action with the given generator exponents mod n."""

    n: int
    weights: tuple[int, ...]


GroupSpec = (
    Cyclic
    | CyclicOneNA
    | BinaryDihedral
    | BinaryTetrahedral
    | BinaryOctahedral
    | BinaryIcosahedral
    | DiagonalAbelian
)


@dataclass(frozen=True)
class GroupElement:
    matrix: Matrix
    order: int


@dataclass
class MatrixGroup:
    conductor: int
    elements: list[GroupElement]
    mul_table: list[list[int]]
    inv_table: list[int]
    classes: list[tuple[int, tuple[int, ...]]]
    determinant_flag: bool
    generator_indices: list[int]
    bfs_parent: list[tuple[int, int]]  # element index -> (parent index, generator slot)
    spec: GroupSpec | None = None
    diagonal_weights: tuple[int, ...] | None = None
    class_of: list[int] = field(default_factory=list)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def n_classes(self) -> int:
        return len(self.classes)

    def class_sizes(self) -> list[int]:
        return [len(members) for _, members in self.classes]

    def class_representatives(self) -> list[Matrix]:
        return [self.elements[rep].matrix for rep, _ in self.classes]

    def generators(self) -> list[Matrix]:
        return [self.elements[i].matrix for i in self.generator_indices]

    def index_of(self, matrix: Matrix) -> int:
        key = _mat_key(matrix)
        for i, el in enumerate(self.elements):
            if _mat_key(el.matrix) == key:
                return i
        raise KeyError("matrix is not a group element")

    def word(self, index: int) -> list[int]:
        """Generator slots whose product (left to right) is the element."""
        out: list[int] = []
        while index != 0:
            parent, slot = self.bfs_parent[index]
            out.append(slot)
            index = parent
        return out[::-1]

    def conjugate_index(self, g: int, x: int) -> int:
        """Index of g^-1 x g."""
        return self.mul_table[self.mul_table[self.inv_table[g]][x]][g]

    def dump(self) -> dict:
        """Structure summary used by golden tests."""
        return {
            "order": self.order,
            "class_sizes": self.class_sizes(),
            "class_element_orders": [
                self.elements[rep].order for rep, _ in self.classes
            ],
            "determinant_one": self.determinant_flag,
        }


def generate_group(
    generators: list[Matrix],
    max_size: int = 1024,
    spec: GroupSpec | None = None,
    diagonal_weights: tuple[int, ...] | None = None,
) -> MatrixGroup:
    """Closure of the generators under multiplication (breadth-first).

    Element 0 is the identity; the rest appear in discovery order, which is
    deterministic given the generator ordering.
    """
    if not generators:
        raise BadSpec("at least one generator is required")
    size = len(generators[0])
    conductor = 1
    for g in generators:
        if len(g) != size or any(len(row) != size for row in g):
            raise BadSpec("generators must be square matrices of equal size")
        for row in g:
            for entry in row:
                conductor = math.lcm(conductor, entry.conductor)
    gens = [
        tuple(tuple(entry.embed(conductor) for entry in row) for row in g)
        for g in generators
    ]
    for g in gens:
        if mat_det(g).is_zero():
            raise NotInvertible("singular generator matrix")

    identity = mat_identity(conductor, size)
    elements: list[Matrix] = [identity]
    index: dict = {_mat_key(identity): 0}
    bfs_parent: list[tuple[int, int]] = [(0, -1)]
    head = 0
    while head < len(elements):
        current = elements[head]
        for slot, g in enumerate(gens):
            product = mat_mul(current, g)
            key = _mat_key(product)
            if key not in index:
                if len(elements) >= max_size:
                    raise SizeExceeded(
                        f"closure exceeded max_size={max_size}; check generators and conductor"
                    )
                index[key] = len(elements)
                elements.append(product)
                bfs_parent.append((head, slot))
        head += 1

    n = len(elements)
    mul_table = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            mul_table[i][j] = index[_mat_key(mat_mul(elements[i], elements[j]))]
    inv_table = [0] * n
    for i in range(n):
        inv_table[i] = mul_table[i].index(0)

    orders = [0] * n
    for i in range(n):
        power, count = i, 1
        while power != 0:
            power = mul_table[power][i]
            count += 1
        orders[i] = count if i != 0 else 1

    generator_indices = [index[_mat_key(g)] for g in gens]
    class_of = [-1] * n
    classes: list[tuple[int, tuple[int, ...]]] = []
    for seed in range(n):
        if class_of[seed] != -1:
            continue
        orbit = {seed}
        frontier = [seed]
        while frontier:
            x = frontier.pop()
            for g in generator_indices:
                y = mul_table[mul_table[inv_table[g]][x]][g]
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        members = tuple(sorted(orbit))
        for m in members:
            class_of[m] = len(classes)
        classes.append((members[0], members))

    one = CycloNum.one(conductor)
    det_flag = all(mat_det(el) == one for el in elements)

    return MatrixGroup(
        conductor=conductor,
        elements=[GroupElement(m, o) for m, o in zip(elements, orders)],
        mul_table=mul_table,
        inv_table=inv_table,
        classes=classes,
        determinant_flag=det_flag,
        generator_indices=generator_indices,
        bfs_parent=bfs_parent,
        spec=spec,
        diagonal_weights=diagonal_weights,
        class_of=class_of,
    )


# -- built-in generator matrices ---------------------------------------------------


def _zeta(n: int, k: int = 1) -> CycloNum:
    return CycloNum.root_of_unity(n, k)


def inv_sqrt2(conductor: int = 8) -> CycloNum:
    """1/sqrt(2) realized exactly as (zeta_8 + zeta_8^7)/2."""
    if conductor % 8 != 0:
        raise BadSpec("1/sqrt(2) needs a conductor divisible by 8")
    z = _zeta(conductor, conductor // 8)
    return (z + z ** 7) / 2


def sqrt5(conductor: int = 5) -> CycloNum:
    """sqrt(5) = zeta_5 - zeta_5^2 - zeta_5^3 + zeta_5^4."""
    if conductor % 5 != 0:
        raise BadSpec("sqrt(5) needs a conductor divisible by 5")
    z = _zeta(conductor, conductor // 5)
    return z - z ** 2 - z ** 3 + z ** 4


def _diag(a: CycloNum, b: CycloNum) -> Matrix:
    zero = CycloNum.zero(a.conductor)
    return ((a, zero), (zero, b))


def _antidiag(a: CycloNum, b: CycloNum) -> Matrix:
    zero = CycloNum.zero(a.conductor)
    return ((zero, a), (b, zero))


def binary_dihedral_generators(n: int) -> list[Matrix]:
    conductor = math.lcm(2 * n, 4)
    xi = _zeta(conductor, conductor // (2 * n))
    i = _zeta(conductor, conductor // 4)
    return [_diag(xi, xi ** (2 * n - 1)), _antidiag(i, i)]


def binary_tetrahedral_generators() -> list[Matrix]:
    conductor = 24
    i = _zeta(conductor, 6)
    xi8 = _zeta(conductor, 3)
    c = inv_sqrt2(conductor)
    a2 = _diag(i, -i)
    b = _antidiag(i, i)
    cm = ((c * xi8, c * xi8 ** 3), (c * xi8, c * xi8 ** 7))
    return [a2, b, cm]


def binary_octahedral_generators() -> list[Matrix]:
    conductor = 24
    i = _zeta(conductor, 6)
    xi8 = _zeta(conductor, 3)
    c = inv_sqrt2(conductor)
    d = _diag(xi8 ** 3, xi8 ** 5)
    b = _antidiag(i, i)
    cm = ((c * xi8, c * xi8 ** 3), (c * xi8, c * xi8 ** 7))
    return [d, b, cm]


def binary_icosahedral_generators() -> list[Matrix]:
    conductor = 20
    z5 = _zeta(conductor, 4)
    s = sqrt5(conductor).inverse()
    one = CycloNum.one(conductor)
    f = (
        (s * (z5 ** 4 - z5), s * (z5 ** 2 - z5 ** 3)),
        (s * (z5 ** 2 - z5 ** 3), s * (z5 - z5 ** 4)),
    )
    e = (
        (s * (z5 ** 2 - z5 ** 4), s * (z5 ** 4 - one)),
        (s * (one - z5), s * (z5 ** 3 - z5)),
    )
    return [f, e]


def make_group(spec: GroupSpec, max_size: int = 1024) -> MatrixGroup:
    """Build one of the supported groups from its generator matrices."""
    if isinstance(spec, Cyclic):
        n = spec.n
        gen = _diag(_zeta(n), _zeta(n, n - 1 if n > 1 else 0))
        return generate_group([gen], max(max_size, n + 1), spec, (1, n - 1))
    if isinstance(spec, CyclicOneNA):
        n, a = spec.n, spec.a
        gen = _diag(_zeta(n), _zeta(n, a))
        return generate_group([gen], max(max_size, n + 1), spec, (1, a % n))
    if isinstance(spec, DiagonalAbelian):
        n = spec.n
        if n < 1 or not spec.weights:
            raise BadSpec("diagonal spec needs a modulus and weights")
        weights = tuple(w % n for w in spec.weights)
        zero = CycloNum.zero(n)
        size = len(weights)
        gen = tuple(
            tuple(_zeta(n, weights[i]) if i == j else zero for j in range(size))
            for i in range(size)
        )
        return generate_group([gen], max(max_size, n + 1), spec, weights)
    if isinstance(spec, BinaryDihedral):
        return generate_group(binary_dihedral_generators(spec.n), max_size, spec)
    if isinstance(spec, BinaryTetrahedral):
        return generate_group(binary_tetrahedral_generators(), max_size, spec)
    if isinstance(spec, BinaryOctahedral):
        return generate_group(binary_octahedral_generators(), max_size, spec)
    if isinstance(spec, BinaryIcosahedral):
        return generate_group(binary_icosahedral_generators(), max_size, spec)
    raise BadSpec(f"unsupported group spec {spec!r}")


def is_small(group: MatrixGroup) -> bool:
    """True iff no non-identity element is a pseudo-reflection.

    A pseudo-reflection fixes a hyperplane: rank(I - g) = 1.
    """
    size = len(group.elements[0].matrix)
    identity = mat_identity(group.conductor, size)
    for el in group.elements[1:]:
        if mat_rank(mat_sub(identity, el.matrix)) == 1:
            return False
    return True
