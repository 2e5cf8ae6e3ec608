"""Smoke tests for the chromakit python module."""

import pytest

import chromakit as ck


def test_closed_forms():
    assert ck.cycle_closed_form(1).is_zero()
    assert ck.cycle_closed_form(2).coefficients() == [0, -1, 1]
    assert ck.cycle_closed_form(3).coefficients() == [0, 2, -3, 1]
    assert ck.path_closed_form(1).coefficients() == [0, 1]
    assert ck.complete_closed_form(0).coefficients() == [1]
    with pytest.raises(ValueError):
        ck.cycle_closed_form(0)


def test_all_methods_agree_on_small_cycles():
    for n in range(1, 7):
        closed = ck.cycle_closed_form(n)
        dc, _stats = ck.chromatic_polynomial_dc(ck.cycle_graph(n))
        ie = ck.cycle_inclusion_exclusion(n)
        subsets = ck.chromatic_by_subsets(ck.cycle_graph(n))
        assert dc == closed
        assert ie == closed
        assert subsets == closed
        for lam in range(0, 5):
            expected = closed.evaluate(lam)
            assert ck.count_via_bijection(n, lam).total == expected
            assert ck.count_proper_colorings(ck.cycle_graph(n), lam) == expected
            if lam >= 1:
                assert ck.chromatic_count_via_walks(n, lam) == expected


def test_pendant_triangle_polynomials():
    g = ck.Multigraph(4, [(0, 1), (1, 2), (2, 3), (3, 1)])
    p, stats = ck.chromatic_polynomial_dc(g)
    lam = ck.Polynomial([0, 1])
    one = ck.Polynomial([1])
    two = ck.Polynomial([2])
    assert p == lam * (lam - one) * (lam - one) * (lam - two)
    assert stats.nodes >= 1

    p_del, _ = ck.chromatic_polynomial_dc(g.delete_edge(0))
    p_con, _ = ck.chromatic_polynomial_dc(g.contract_edge(0))
    assert p == p_del - p_con


def test_codec_worked_example():
    omega = [1, 2, 1, 3, 2, 3, 1, 4, 2]
    sigma = [1, 1, 1, 2, 2, 2, 1, 3, 1]
    assert ck.cyclic_descents(omega) == [2, 4, 6, 8, 9]
    assert ck.encode_phi(omega, 4) == sigma
    sigma_bar, decoded = ck.decode_psi_trace(sigma, 4)
    assert sigma_bar == [1, 1, 1, 2, 2, 3, 1, 4, 1]
    assert decoded == omega

    with pytest.raises(ValueError):
        ck.decode_psi([2, 2, 2], 3)
    with pytest.raises(ValueError):
        ck.encode_phi([1, 1], 3)


def test_big_integers_cross_the_boundary_exactly():
    n, lam = 64, 10**6
    expected = (lam - 1) ** n + (lam - 1)
    assert ck.cycle_closed_form(n).evaluate(lam) == expected
    assert ck.count_via_bijection(n, lam).total == expected
    assert ck.chromatic_count_via_walks(n, lam) == expected
    coeffs = ck.cycle_closed_form(64).coefficients()
    assert coeffs[32] == 1832624140942590534  # C(64,32), too big for 32-bit


def test_budget_errors():
    with pytest.raises(ck.BudgetExceededError):
        ck.count_proper_colorings(ck.complete_graph(20), 10)
    with pytest.raises(ck.BudgetExceededError):
        ck.chromatic_by_subsets(ck.complete_graph(7))


def test_edge_list_round_trip(tmp_path):
    g = ck.Multigraph(3, [(0, 1), (0, 1), (2, 2)])
    text = ck.to_edge_list(g)
    assert text == "3 3\n0 1\n0 1\n2 2\n"
    assert ck.from_edge_list(text) == g

    path = tmp_path / "graph.edges"
    ck.write_edge_list_file(g, str(path))
    assert ck.read_edge_list_file(str(path)) == g


def test_walk_matrix_route():
    a = ck.adjacency_matrix(ck.cycle_graph(2))
    assert a.rows() == [[0, 2], [2, 0]]
    assert ck.matrix_power(a, 2)[0, 0] == 4
    assert ck.count_walks_brute(ck.cycle_graph(2), 0, 0, 2) == 4
    assert ck.count_closed_walks(ck.complete_graph(4), 5) == 240


def test_enumeration_and_exceptional_sets():
    assert ck.enumerate_proper_cycle_colorings(2, 2) == [[1, 2], [2, 1]]
    assert ck.enumerate_proper_cycle_colorings(3, 2) == []
    assert ck.exceptional_colorings(4, 3) == [
        [2, 1, 2, 1],
        [1, 2, 1, 2],
        [3, 2, 3, 2],
        [2, 3, 2, 3],
    ]
    assert ck.exceptional_colorings(5, 4) == []


def test_verify_report():
    report = ck.verify_cycle_methods(6, 4)
    assert report.agreed
    assert report.failures == []
    assert "verdict: AGREE" in report.render()
