import math

import pytest

from cantor3 import (
    RefusalError,
    N_eigenvector,
    Y_graph,
    adjacency,
    build_multi,
    build_single,
    check_L_bounds,
    check_th413_equality,
    count_paths,
    expect_L,
    expect_N,
    hausdorff_dim,
    is_subset,
)
from cantor3.families import PHI, L_poly
from cantor3.spectral import log3
from cantor3.ternary import FamilyId, family_value


def test_L_poly_shapes():
    assert L_poly(1) == (-2, 1)
    assert L_poly(2) == (-1, -1, 1)
    assert L_poly(4) == (-1, 0, 0, -1, 1)
    with pytest.raises(ValueError):
        L_poly(0)


def test_expect_L_values():
    assert expect_L(2).expected_dim == pytest.approx(log3(PHI), abs=1e-12)
    assert expect_L(6).expected_dim == pytest.approx(0.228392, abs=1e-5)
    e = expect_L(4)
    assert e.expected_vertices == 4
    assert e.expected_scc_count == 1
    assert e.defining_poly == L_poly(4)


def test_expect_L_matches_built_graphs():
    for k in range(1, 10):
        g = build_single(family_value(FamilyId("L", k)))
        r = hausdorff_dim(g)
        e = expect_L(k)
        assert g.n == e.expected_vertices
        assert abs(r.dim - e.expected_dim) <= 1e-8


def test_expect_N():
    e = expect_N(5)
    assert e.expected_vertices == 32
    assert e.expected_dim == pytest.approx(log3(PHI), abs=1e-15)
    with pytest.raises(RefusalError):
        expect_N(21)
    with pytest.raises(ValueError):
        expect_N(0)


def test_N_eigenvector_exact_small_cases():
    assert N_eigenvector(1) == [PHI, 1.0]
    assert N_eigenvector(2) == [PHI * PHI, PHI, PHI, 1.0]
    assert len(N_eigenvector(6)) == 64
    with pytest.raises(RefusalError):
        N_eigenvector(25)


def test_N_eigenvector_is_perron_vector():
    for k in (1, 2, 3, 5):
        g = build_single(family_value(FamilyId("N", k)))
        a = adjacency(g)
        v = N_eigenvector(k)
        w = [0.0] * a.n
        for (i, j), c in a.entries.items():
            w[i] += c * v[j]
        assert max(abs(w[i] - PHI * v[i]) for i in range(a.n)) <= 1e-9


def test_check_L_bounds():
    assert check_L_bounds(6)
    assert check_L_bounds(100)
    with pytest.raises(ValueError):
        check_L_bounds(5)


def test_Y_graph_shape():
    y = Y_graph()
    assert y.n == 2
    assert adjacency(y).to_dense() == [[0, 2], [1, 0]]
    assert y.start == 0
    r = hausdorff_dim(y)
    assert r.dim == pytest.approx(0.5 * log3(2.0), abs=1e-9)
    assert r.beta == pytest.approx(math.sqrt(2.0), abs=1e-9)


def test_Y_graph_path_counts():
    y = Y_graph()
    assert [count_paths(y, n) for n in range(1, 7)] == [2, 2, 4, 4, 8, 8]


def test_Y_contained_in_odd_N():
    y = Y_graph()
    for k in (0, 1, 2):
        host = build_single(family_value(FamilyId("N", 2 * k + 1)))
        assert is_subset(y, host).holds


def test_th413_equality_small_n():
    assert check_th413_equality(1).holds
    assert check_th413_equality(2).holds
    with pytest.raises(ValueError):
        check_th413_equality(0)
    with pytest.raises(ValueError):
        check_th413_equality(6)


def test_N_chain_dims_bounded_below():
    # finite evidence for the liminf bound: consecutive N pairs stay above 0.315
    for k in range(6, 11):
        ms = [family_value(FamilyId("N", k)), family_value(FamilyId("N", k + 1))]
        assert hausdorff_dim(build_multi(ms)).dim >= 0.315


def test_N_chain_dim_at_least_matching_L():
    # chains of N values never dip below the L value one index up
    for ks in ((1, 3), (2, 4), (1, 2, 5), (3, 6), (2, 3, 6)):
        ms = [family_value(FamilyId("N", k)) for k in ks]
        d_chain = hausdorff_dim(build_multi(ms)).dim
        d_L = hausdorff_dim(build_single(family_value(FamilyId("L", ks[-1] + 1)))).dim
        assert d_chain >= d_L - 1e-6, ks
