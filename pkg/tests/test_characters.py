import random

import pytest

from symsig.characters import (
    Character,
    GroupMismatch,
    NonIntegerMultiplicity,
    NotARepresentation,
    decompose,
    fundamental_character,
    inner_product,
    irreducible_table,
    pointwise,
    regular_character,
    trace_character,
    trivial_character,
    verify_orthonormality,
)
from symsig.cyclotomic import CycloNum
from symsig.groups import (
    BinaryDihedral,
    BinaryIcosahedral,
    BinaryOctahedral,
    BinaryTetrahedral,
    Cyclic,
    make_group,
)


def class_of_word(group, word):
    index = 0
    for slot in word:
        index = group.mul_table[index][group.generator_indices[slot]]
    return group.class_of[index]


@pytest.fixture(scope="module")
def bd2():
    return make_group(BinaryDihedral(2))


@pytest.fixture(scope="module")
def bt():
    return make_group(BinaryTetrahedral())


class TestTraceCharacter:
    def test_bd2_fundamental_values(self, bd2):
        chi = fundamental_character(bd2)
        columns = {"e": [], "a2": [0, 0], "a": [0], "b": [1], "ab": [0, 1]}
        values = {name: chi.values[class_of_word(bd2, w)] for name, w in columns.items()}
        assert values["e"] == 2 and values["a2"] == -2
        assert values["a"] == 0 and values["b"] == 0 and values["ab"] == 0

    def test_trivial_is_all_ones(self, bt):
        chi = trace_character(bt, [((CycloNum.one(24),),)] * 3)
        assert all(v == 1 for v in chi.values)

    def test_bt_fundamental_at_class_of_c(self, bt):
        chi = fundamental_character(bt)
        assert chi.values[class_of_word(bt, [2])] == 1

    def test_rejects_non_representation(self, bd2):
        minus = -CycloNum.one(4)
        i = CycloNum.root_of_unity(4)
        # a -> -1, b -> i violates b^2 = a^2 (valid only for odd dihedral index)
        with pytest.raises(NotARepresentation):
            trace_character(bd2, [((minus,),), ((i,),)])

    def test_accepts_element_images(self, bd2):
        images = [el.matrix for el in bd2.elements]
        chi = trace_character(bd2, images)
        assert chi.values == fundamental_character(bd2).values


class TestInnerProduct:
    def test_irreducible_norm_one(self, bd2):
        chi = irreducible_table(bd2).irreducibles[1]
        assert inner_product(chi, chi) == 1

    def test_distinct_orthogonal(self, bd2):
        table = irreducible_table(bd2)
        assert inner_product(table.irreducibles[1], table.irreducibles[0]) == 0

    @pytest.mark.parametrize(
        "spec", [Cyclic(5), BinaryDihedral(3), BinaryTetrahedral(), BinaryOctahedral()]
    )
    def test_regular_contains_each_dim_times(self, spec):
        group = make_group(spec)
        table = irreducible_table(group)
        reg = regular_character(group)
        for chi in table.irreducibles:
            assert inner_product(reg, chi) == chi.dim

    def test_group_mismatch(self, bd2, bt):
        with pytest.raises(GroupMismatch):
            inner_product(trivial_character(bd2), trivial_character(bt))


class TestTables:
    def test_c3_table_cells(self):
        group = make_group(Cyclic(3))
        table = irreducible_table(group)
        w = CycloNum.root_of_unity(3)
        rows = [chi.values for chi in table.irreducibles]
        assert rows[0] == (1, 1, 1)
        assert rows[1] == (1, w, w ** 2)
        assert rows[2] == (1, w ** 2, w)

    def test_bd2_printed_table(self, bd2):
        table = irreducible_table(bd2)
        columns = [("e", []), ("a2", [0, 0]), ("a", [0]), ("b", [1]), ("ab", [0, 1])]
        expected = {
            "V_0": [1, 1, 1, 1, 1],
            "V_1": [2, -2, 0, 0, 0],
            "W_1": [1, 1, 1, -1, -1],
            "W_2": [1, 1, -1, 1, -1],
            "W_3": [1, 1, -1, -1, 1],
        }
        for label, cells in expected.items():
            chi = table.irreducibles[table.index_of(label)]
            got = [chi.values[class_of_word(bd2, w)] for _, w in columns]
            assert got == cells, label

    def test_bo_dims(self):
        table = irreducible_table(make_group(BinaryOctahedral()))
        assert table.dims == (1, 2, 3, 4, 3, 2, 1, 2)

    @pytest.mark.parametrize(
        "spec",
        [Cyclic(n) for n in range(1, 13)]
        + [BinaryDihedral(n) for n in (2, 3, 4, 6)]
        + [BinaryTetrahedral(), BinaryOctahedral(), BinaryIcosahedral()],
    )
    def test_orthonormality_all_builtins(self, spec):
        table = irreducible_table(make_group(spec))
        verify_orthonormality(table)

    @pytest.mark.parametrize(
        "spec",
        [BinaryDihedral(2), BinaryDihedral(5), BinaryTetrahedral(), BinaryOctahedral(), BinaryIcosahedral()],
    )
    def test_fundamental_row_matches_traces(self, spec):
        group = make_group(spec)
        table = irreducible_table(group)
        assert table.irreducibles[1].values == fundamental_character(group).values

    def test_inverse_values_are_conjugate(self, bt):
        table = irreducible_table(bt)
        for chi in table.irreducibles:
            for rep, _ in bt.classes:
                inv_class = bt.class_of[bt.inv_table[rep]]
                assert chi.values[inv_class] == chi.values[bt.class_of[rep]].conjugate()


class TestDecompose:
    def test_regular_of_bt(self, bt):
        table = irreducible_table(bt)
        assert decompose(regular_character(bt), table) == [1, 2, 3, 2, 2, 1, 1]

    def test_trivial(self, bd2):
        table = irreducible_table(bd2)
        assert decompose(trivial_character(bd2), table) == [1, 0, 0, 0, 0]

    def test_square_of_fundamental_bd2(self, bd2):
        table = irreducible_table(bd2)
        chi = pointwise(table.irreducibles[1], table.irreducibles[1], "product")
        assert decompose(chi, table) == [1, 0, 1, 1, 1]

    def test_round_trip_random_combinations(self, bt):
        table = irreducible_table(bt)
        rng = random.Random(7)
        for _ in range(10):
            mults = [rng.randrange(4) for _ in table.irreducibles]
            chi = None
            for m, irr in zip(mults, table.irreducibles):
                for _ in range(m):
                    chi = irr if chi is None else chi + irr
            if chi is None:
                continue
            assert decompose(chi, table) == mults

    def test_non_integer_multiplicity(self, bd2):
        table = irreducible_table(bd2)
        bogus = Character(bd2, tuple([CycloNum.one(4)] * 4 + [CycloNum.zero(4)]))
        with pytest.raises(NonIntegerMultiplicity):
            decompose(bogus, table)


class TestPointwise:
    def test_sum_at_identity(self, bt):
        table = irreducible_table(bt)
        chi = pointwise(table.irreducibles[1], table.irreducibles[0], "sum")
        assert chi.dim == 3

    def test_bo_tensor_identity(self):
        table = irreducible_table(make_group(BinaryOctahedral()))
        prod = pointwise(
            table.irreducibles[table.index_of("V_1")],
            table.irreducibles[table.index_of("V_6")],
            "product",
        )
        assert prod.values == table.irreducibles[table.index_of("V_5")].values

    def test_bt_tensor_identity(self, bt):
        table = irreducible_table(bt)
        prod = pointwise(
            table.irreducibles[table.index_of("V_1")],
            table.irreducibles[table.index_of("V_4")],
            "product",
        )
        assert prod.values == table.irreducibles[table.index_of("V_3")].values


def test_bo_nonfaithful_two_dim_row_matches_its_matrices():
    # V_7 is generated by D -> antidiag(1,1), B -> I, C -> diag(z3, z3^-1)
    group = make_group(BinaryOctahedral())
    one = CycloNum.one(24)
    zero = CycloNum.zero(24)
    z3 = CycloNum.root_of_unity(24, 8)
    d_img = ((zero, one), (one, zero))
    b_img = ((one, zero), (zero, one))
    c_img = ((z3, zero), (zero, z3 ** 2))
    chi = trace_character(group, [d_img, b_img, c_img])
    table = irreducible_table(group)
    assert chi.values == table.irreducibles[table.index_of("V_7")].values
