import pytest

from symsig._kernel import load_backend
from symsig.groups import BinaryDihedral, BinaryTetrahedral, Cyclic, make_group
from symsig.sympow import sl2_series_data

compiled = load_backend("compiled")
python = load_backend("python")

BACKENDS = [pytest.param(compiled, id="compiled"), pytest.param(python, id="python")]


@pytest.mark.parametrize("spec", [Cyclic(3), BinaryDihedral(2), BinaryTetrahedral()])
def test_backends_bit_identical_series(spec):
    group = make_group(spec)
    trace_mats, proj_mats = sl2_series_data(group)
    a = compiled.sl2_multiplicity_series(trace_mats, proj_mats, group.order, 120)
    b = python.sl2_multiplicity_series(trace_mats, proj_mats, group.order, 120)
    assert a == b


def test_backends_bit_identical_histograms():
    for n, w1, w2 in [(2, 1, 1), (5, 1, 2), (12, 1, 7), (8, 3, 5)]:
        assert compiled.weight_slice_counts(n, w1, w2, 200) == python.weight_slice_counts(
            n, w1, w2, 200
        )


@pytest.mark.parametrize("backend", BACKENDS)
def test_histogram_row_sums(backend):
    rows = backend.weight_slice_counts(7, 1, 3, 60)
    for q, row in enumerate(rows):
        assert sum(row) == q + 1


@pytest.mark.parametrize("backend", BACKENDS)
def test_single_count_matches_series(backend):
    rows = backend.weight_slice_counts(9, 2, 5, 40)
    for q in (0, 7, 40):
        for t in range(9):
            assert backend.weight_slice_count(9, 2, 5, t, q) == rows[q][t]


@pytest.mark.parametrize("backend", BACKENDS)
def test_series_rejects_non_integral_projections(backend):
    # projection by a non-character vector cannot land in order * Z * e0
    trace_mats = [[[2]]]
    proj_mats = [[[[1]]]]
    with pytest.raises(ValueError):
        backend.sl2_multiplicity_series(trace_mats, proj_mats, 3, 5)


def test_compiled_guards_against_large_inputs():
    with pytest.raises(OverflowError):
        compiled.sl2_multiplicity_series([[[1 << 20]]], [[[[1]]]], 1, 1)


def test_python_backend_handles_big_values():
    # identity-only "group": s_q = q+1 grows without overflow concerns
    rows = python.sl2_multiplicity_series([[[2]]], [[[[1]]]], 1, 3000)
    assert rows[2999] == [3000]
