"""Class functions and irreducible character tables.

Tables for the cyclic and binary dihedral groups are computed (the dihedral
one-dimensional representations are solved from the defining relations,
which settles the parity subtlety in the usual printed lists: for even n
the b-generator must map to +-1, for odd n to +-i).  The tables of the
three exceptional binary polyhedral groups are stored data; every stored
table is checked for orthonormality before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass

from symsig.cyclotomic import CycloNum
from symsig.groups import (
    BinaryDihedral,
    BinaryIcosahedral,
    BinaryOctahedral,
    BinaryTetrahedral,
    Cyclic,
    CyclicOneNA,
    DiagonalAbelian,
    Matrix,
    MatrixGroup,
    mat_identity,
    mat_mul,
    mat_trace,
)


class GroupMismatch(ValueError):
    """Operands live on different groups."""


class NotARepresentation(ValueError):
    """Generator images do not respect the multiplication table."""


class Unsupported(ValueError):
    """No table construction for this group."""


class NonIntegerMultiplicity(ValueError):
    """An inner product that should be a nonnegative integer is not."""


@dataclass(frozen=True)
class Character:
    """A class function with cyclotomic values, indexed by conjugacy class."""

    group: MatrixGroup
    values: tuple[CycloNum, ...]

    def __post_init__(self):
        if len(self.values) != self.group.n_classes:
            raise ValueError("one value per conjugacy class is required")

    def __call__(self, class_index: int) -> CycloNum:
        return self.values[class_index]

    @property
    def dim(self) -> int:
        return self.values[0].as_int()

    def _check_group(self, other: "Character"):
        if other.group is not self.group:
            raise GroupMismatch("characters live on different groups")

    def __add__(self, other: "Character") -> "Character":
        self._check_group(other)
        return Character(self.group, tuple(a + b for a, b in zip(self.values, other.values)))

    def __mul__(self, other: "Character") -> "Character":
        self._check_group(other)
        return Character(self.group, tuple(a * b for a, b in zip(self.values, other.values)))

    def value_at_element(self, index: int) -> CycloNum:
        return self.values[self.group.class_of[index]]


def pointwise(chi: Character, psi: Character, op: str) -> Character:
    """Class-wise sum or product (characters of direct sum / tensor product)."""
    if op == "sum":
        return chi + psi
    if op == "product":
        return chi * psi
    raise ValueError(f"op must be 'sum' or 'product', not {op!r}")


def inner_product(chi: Character, psi: Character) -> CycloNum:
    """Hermitian inner product (1/|G|) sum over g of conj(chi(g)) psi(g)."""
    chi._check_group(psi)
    group = chi.group
    total = CycloNum.zero(group.conductor)
    for c, (_, members) in enumerate(group.classes):
        total = total + chi.values[c].conjugate() * psi.values[c] * len(members)
    return total / group.order


def extend_rep(group: MatrixGroup, gen_images: list[Matrix]) -> list[Matrix]:
    """Images of every element from generator images, following the closure.

    Every closure edge x*g is checked against matrix multiplication, which
    pins the whole multiplication table; a mismatch raises
    NotARepresentation.
    """
    if len(gen_images) != len(group.generator_indices):
        raise NotARepresentation("one image per generator is required")
    dim = len(gen_images[0])
    conductor = gen_images[0][0][0].conductor
    images: list[Matrix | None] = [None] * group.order
    images[0] = mat_identity(conductor, dim)
    for index in range(1, group.order):
        parent, slot = group.bfs_parent[index]
        images[index] = mat_mul(images[parent], gen_images[slot])
    for x in range(group.order):
        for slot, g in enumerate(group.generator_indices):
            target = group.mul_table[x][g]
            if mat_mul(images[x], gen_images[slot]) != images[target]:
                raise NotARepresentation(
                    f"images break multiplicativity at element {x}, generator {slot}"
                )
    return images


def trace_character(group: MatrixGroup, rep: list[Matrix]) -> Character:
    """Character of a representation given by generator or element images."""
    if len(rep) == len(group.generator_indices) and len(rep) != group.order:
        images = extend_rep(group, rep)
    elif len(rep) == group.order:
        images = list(rep)
        gen_images = [images[i] for i in group.generator_indices]
        for x in range(group.order):
            for slot, g in enumerate(group.generator_indices):
                if mat_mul(images[x], gen_images[slot]) != images[group.mul_table[x][g]]:
                    raise NotARepresentation(
                        f"images break multiplicativity at element {x}, generator {slot}"
                    )
    else:
        raise NotARepresentation("rep must list images of generators or of all elements")
    values = tuple(mat_trace(images[rep_idx]) for rep_idx, _ in group.classes)
    return Character(group, values)


def trivial_character(group: MatrixGroup) -> Character:
    one = CycloNum.one(group.conductor)
    return Character(group, (one,) * group.n_classes)


def regular_character(group: MatrixGroup) -> Character:
    values = [CycloNum.zero(group.conductor)] * group.n_classes
    values[0] = CycloNum.from_rational(group.order, group.conductor)
    return Character(group, tuple(values))


@dataclass(frozen=True)
class CharacterTable:
    group: MatrixGroup
    irreducibles: tuple[Character, ...]
    labels: tuple[str, ...]

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(chi.dim for chi in self.irreducibles)

    def index_of(self, label: str) -> int:
        return self.labels.index(label)


def verify_orthonormality(table: CharacterTable) -> None:
    """<chi_i, chi_j> = delta_ij exactly, and sum of dims^2 = |G|."""
    irr = table.irreducibles
    for i in range(len(irr)):
        for j in range(i, len(irr)):
            expected = 1 if i == j else 0
            if inner_product(irr[i], irr[j]) != expected:
                raise NonIntegerMultiplicity(
                    f"rows {i} and {j} are not orthonormal"
                )
    if sum(d * d for d in table.dims) != table.group.order:
        raise NonIntegerMultiplicity("dimension check failed")
    if len(irr) != table.group.n_classes:
        raise NonIntegerMultiplicity("row count differs from class count")


def decompose(chi: Character, table: CharacterTable) -> list[int]:
    """Multiplicities of the irreducibles in chi; exact integrality enforced."""
    if table.group is not chi.group:
        raise GroupMismatch("character and table live on different groups")
    mults = []
    for i, irr in enumerate(table.irreducibles):
        value = inner_product(chi, irr)
        if not value.is_rational():
            raise NonIntegerMultiplicity(f"<chi, irr[{i}]> is irrational: {value!r}")
        f = value.as_fraction()
        if f.denominator != 1 or f < 0:
            raise NonIntegerMultiplicity(f"<chi, irr[{i}]> = {f} is not in N")
        mults.append(int(f))
    if sum(m * d for m, d in zip(mults, table.dims)) != chi.dim:
        raise NonIntegerMultiplicity("multiplicities do not add up to the dimension")
    return mults


# -- table constructions -------------------------------------------------------


def _abelian_table(group: MatrixGroup) -> CharacterTable:
    # elements are generator powers in closure order, so class k is g^k
    m = group.order
    n = group.conductor if m > 1 else 1
    step = n // m if m > 1 else 1
    rows = []
    for j in range(m):
        values = tuple(
            CycloNum.root_of_unity(n, step * j * k) if n > 1 else CycloNum.one(1)
            for k in range(m)
        )
        rows.append(Character(group, values))
    labels = tuple(f"V_{j}" for j in range(m))
    return CharacterTable(group, tuple(rows), labels)


def _binary_dihedral_table(group: MatrixGroup) -> CharacterTable:
    n = group.spec.n
    conductor = group.conductor
    xi = CycloNum.root_of_unity(conductor, conductor // (2 * n))
    i = CycloNum.root_of_unity(conductor, conductor // 4)
    one = CycloNum.one(conductor)

    def one_dim(alpha: CycloNum, beta: CycloNum) -> Character | None:
        try:
            return trace_character(group, [((alpha,),), ((beta,),)])
        except NotARepresentation:
            return None

    candidates = []
    for alpha in (one, -one):
        for beta in (one, -one, i, -i):
            chi = one_dim(alpha, beta)
            if chi is not None and (alpha, beta) not in [c[:2] for c in candidates]:
                candidates.append((alpha, beta, chi))
    assert len(candidates) == 4, "the relations admit exactly four linear characters"
    # order: trivial, (1,-1), then the two with alpha = -1
    candidates.sort(key=lambda t: (t[0] != one, t[1] != one, t[1] != -one))
    linear = [c[2] for c in candidates]

    zero = CycloNum.zero(conductor)
    two_dims = []
    for j in range(1, n):
        a_img = ((xi ** j, zero), (zero, xi ** (2 * n - j)))
        b_img = ((zero, i ** j), (i ** j, zero))
        two_dims.append(trace_character(group, [a_img, b_img]))

    irr = [linear[0]] + two_dims + linear[1:]
    labels = ["V_0"] + [f"V_{j}" for j in range(1, n)] + ["W_1", "W_2", "W_3"]
    table = CharacterTable(group, tuple(irr), tuple(labels))
    verify_orthonormality(table)
    return table


def _value_builders(conductor: int):
    one = CycloNum.one(conductor)
    values = {"1": one, "-1": -one, "0": CycloNum.zero(conductor), "2": one * 2,
              "-2": -(one * 2), "3": one * 3, "4": one * 4, "-4": -(one * 4),
              "5": one * 5, "6": one * 6, "-6": -(one * 6)}
    if conductor % 3 == 0:
        z3 = CycloNum.root_of_unity(conductor, conductor // 3)
        values.update({"z3": z3, "z3^2": z3 ** 2, "-z3": -z3, "-z3^2": -(z3 ** 2)})
    if conductor % 8 == 0:
        z8 = CycloNum.root_of_unity(conductor, conductor // 8)
        sqrt2 = z8 + z8 ** 7
        values.update({"r2": sqrt2, "-r2": -sqrt2})
    if conductor % 5 == 0:
        z5 = CycloNum.root_of_unity(conductor, conductor // 5)
        sqrt5 = z5 - z5 ** 2 - z5 ** 3 + z5 ** 4
        phi_plus = (one + sqrt5) / 2
        phi_minus = (one - sqrt5) / 2
        values.update({"p+": phi_plus, "p-": phi_minus, "-p+": -phi_plus, "-p-": -phi_minus})
    return values


# class column words (generator slots) and rows of the three stored tables
_BT_COLUMNS = [[], [1, 1], [1], [2], [2, 2], [2, 2, 2, 2], [2, 2, 2, 2, 2]]
_BT_ROWS = {
    "V_0": ["1", "1", "1", "1", "1", "1", "1"],
    "V_1": ["2", "-2", "0", "1", "-1", "-1", "1"],
    "V_2": ["3", "3", "-1", "0", "0", "0", "0"],
    "V_3": ["2", "-2", "0", "z3", "-z3", "-z3^2", "z3^2"],
    "V_3v": ["2", "-2", "0", "z3^2", "-z3^2", "-z3", "z3"],
    "V_4": ["1", "1", "1", "z3", "z3", "z3^2", "z3^2"],
    "V_4v": ["1", "1", "1", "z3^2", "z3^2", "z3", "z3"],
}

_BO_COLUMNS = [[], [1, 1], [1], [2], [2, 2], [0], [1, 0], [0, 0, 0]]
_BO_ROWS = {
    "V_0": ["1", "1", "1", "1", "1", "1", "1", "1"],
    "V_1": ["2", "-2", "0", "1", "-1", "-r2", "0", "r2"],
    "V_2": ["3", "3", "-1", "0", "0", "1", "-1", "1"],
    "V_3": ["4", "-4", "0", "-1", "1", "0", "0", "0"],
    "V_4": ["3", "3", "-1", "0", "0", "-1", "1", "-1"],
    "V_5": ["2", "-2", "0", "1", "-1", "r2", "0", "-r2"],
    "V_6": ["1", "1", "1", "1", "1", "-1", "-1", "-1"],
    "V_7": ["2", "2", "2", "-1", "-1", "0", "0", "0"],
}

# the order-6 column is the class of -E: the generator E itself has order 3
# (trace -1); orthonormality pins the assignment
_BI_COLUMNS = [[], [0, 0], [0], [0, 0, 1], [1, 1], [0, 1], [0, 1, 0, 1], [0, 1, 0, 1, 0, 1], [0, 1, 0, 1, 0, 1, 0, 1]]
_BI_ROWS = {
    "V_0": ["1", "1", "1", "1", "1", "1", "1", "1", "1"],
    "V_1": ["2", "-2", "0", "1", "-1", "p+", "-p-", "p-", "-p+"],
    "V_2": ["3", "3", "-1", "0", "0", "p+", "p-", "p-", "p+"],
    "V_3": ["4", "-4", "0", "-1", "1", "1", "-1", "1", "-1"],
    "V_4": ["5", "5", "1", "-1", "-1", "0", "0", "0", "0"],
    "V_5": ["6", "-6", "0", "0", "0", "-1", "1", "-1", "1"],
    "V_6": ["4", "4", "0", "1", "1", "-1", "-1", "-1", "-1"],
    "V_7": ["2", "-2", "0", "1", "-1", "p-", "-p+", "p+", "-p-"],
    "V_8": ["3", "3", "-1", "0", "0", "p-", "p+", "p+", "p-"],
}


def _stored_table(group: MatrixGroup, columns, rows) -> CharacterTable:
    builders = _value_builders(group.conductor)
    # locate the class of each column word
    column_class = []
    for word in columns:
        index = 0
        for slot in word:
            index = group.mul_table[index][group.generator_indices[slot]]
        column_class.append(group.class_of[index])
    if sorted(column_class) != list(range(group.n_classes)):
        raise Unsupported("column words do not hit every conjugacy class exactly once")
    irreducibles = []
    for label, cells in rows.items():
        values = [None] * group.n_classes
        for col, cell in enumerate(cells):
            values[column_class[col]] = builders[cell]
        irreducibles.append(Character(group, tuple(values)))
    table = CharacterTable(group, tuple(irreducibles), tuple(rows.keys()))
    verify_orthonormality(table)
    return table


def irreducible_table(group: MatrixGroup) -> CharacterTable:
    """The irreducible character table of a supported built-in group."""
    cached = getattr(group, "_table_cache", None)
    if cached is not None:
        return cached
    spec = group.spec
    if isinstance(spec, (Cyclic, CyclicOneNA, DiagonalAbelian)):
        table = _abelian_table(group)
        verify_orthonormality(table)
    elif isinstance(spec, BinaryDihedral):
        table = _binary_dihedral_table(group)
    elif isinstance(spec, BinaryTetrahedral):
        table = _stored_table(group, _BT_COLUMNS, _BT_ROWS)
    elif isinstance(spec, BinaryOctahedral):
        table = _stored_table(group, _BO_COLUMNS, _BO_ROWS)
    elif isinstance(spec, BinaryIcosahedral):
        table = _stored_table(group, _BI_COLUMNS, _BI_ROWS)
    else:
        raise Unsupported(f"no irreducible table for {spec!r}")
    group._table_cache = table
    return table


def fundamental_character(group: MatrixGroup) -> Character:
    """Trace character of the defining (generator) matrices."""
    return trace_character(group, group.generators())
