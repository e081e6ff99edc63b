import random

import pytest

from girardlab import (
    ColoredDigraph,
    Poly,
    color_split_sum,
    cross_check_against_loops,
    elementary_coefficients,
    elementary_color_sum,
    factorial,
    make_digraph,
    random_digraph,
    self_loop_digraph,
    total_subdigraph_sum,
    uniform_alpha_assignment,
    verify_classical_newton_girard,
    verify_colored_newton_girard,
    verify_walk_cycle_identity,
)


def one_loop_graph() -> ColoredDigraph:
    """Single vertex, one self-loop in two colors weighing 2 and 3."""
    return make_digraph(1, 2, {(1, 1): [2, 3]})


# ---------------------------------------------------------------------------
# the walk/cycle identity on digraphs
# ---------------------------------------------------------------------------


def test_split_sum_vanishes_when_r_exceeds_n():
    g = one_loop_graph()
    assert color_split_sum(g, 2) == Poly.zero()
    rng = random.Random(431)
    for _ in range(10):
        n = rng.randint(1, 3)
        k = rng.randint(n + 1, 4)
        g = random_digraph(n, k, 0.8, 3, seed=rng.randrange(10**6))
        for r in range(n + 1, k + 1):
            assert color_split_sum(g, r) == Poly.zero(), (n, k, r)


def test_report_case_r_greater_than_n():
    report = verify_walk_cycle_identity(one_loop_graph(), 2)
    assert report.case == "r>n"
    assert report.passed
    assert report.residual == Poly.zero()
    assert report.literal_residual == report.residual
    assert report.aggregated_correction == Poly.zero()
    # conventions: the empty-walk term (S = {1,2}, T = {}) participates
    assert (frozenset({1, 2}), frozenset()) in report.breakdown


def test_report_case_r_at_most_n_hand_example():
    # n = 1, k = 2, r = 1: walk terms contribute 2 + 3, the aggregated
    # closing term -(2 + 3); the single-set form ell(1, {1, 2}) is zero,
    # so the literal residual stays at 5.
    report = verify_walk_cycle_identity(one_loop_graph(), 1)
    assert report.case == "r<=n"
    assert report.passed
    assert report.aggregated_correction == Poly.const(-5)
    assert report.literal_correction == Poly.zero()
    assert report.residual == Poly.zero()
    assert report.literal_residual == Poly.const(5)
    assert not report.literal_residual.is_zero


def test_aggregated_and_literal_agree_when_k_equals_r():
    rng = random.Random(77)
    for _ in range(8):
        n = rng.randint(2, 4)
        k = rng.randint(1, min(n, 3))
        g = random_digraph(n, k, 0.8, 3, seed=rng.randrange(10**6))
        report = verify_walk_cycle_identity(g, k)  # r == k
        assert report.aggregated_correction == report.literal_correction
        assert report.residual == report.literal_residual
        assert report.passed, (n, k)


def test_identity_holds_on_random_graphs():
    rng = random.Random(2024)
    for _ in range(15):
        n = rng.randint(1, 4)
        k = rng.randint(1, 3)
        g = random_digraph(n, k, rng.choice([0.5, 1.0]), 3, seed=rng.randrange(10**6))
        for r in range(1, k + 1):
            report = verify_walk_cycle_identity(g, r)
            assert report.passed, (n, k, r)
            assert report.case == ("r>n" if r > n else "r<=n")


def test_vacuous_note_when_r_exceeds_color_count():
    report = verify_walk_cycle_identity(one_loop_graph(), 3)
    assert any("vacuous" in note for note in report.notes)
    assert report.passed  # every bucket is empty


def test_walk_cycle_identity_rejects_bad_r():
    with pytest.raises(ValueError):
        verify_walk_cycle_identity(one_loop_graph(), 0)
    with pytest.raises(ValueError):
        color_split_sum(one_loop_graph(), 0)
    with pytest.raises(ValueError):
        total_subdigraph_sum(one_loop_graph(), -1)


# ---------------------------------------------------------------------------
# the multi-alphabet identity
# ---------------------------------------------------------------------------


def test_elementary_color_sum_values():
    assert elementary_color_sum(3, {1, 2}, 0) == Poly.one()
    assert str(elementary_color_sum(2, {1}, 1)) == "a[1]^(1) + a[2]^(1)"
    assert (
        str(elementary_color_sum(2, {1, 2}, 2))
        == "a[1]^(1)*a[2]^(2) + a[1]^(2)*a[2]^(1)"
    )
    assert elementary_color_sum(2, {1, 2, 3}, 3) == Poly.zero()  # needs 3 vertices
    assert elementary_color_sum(1, {1}, 2) == Poly.zero()  # needs 2 colors
    with pytest.raises(ValueError):
        elementary_color_sum(2, {1}, -1)


def test_colored_newton_girard_residual_vanishes():
    for r in range(1, 4):
        for n in range(1, 4):
            report = verify_colored_newton_girard(r, n)
            assert report.passed, (r, n)
            assert report.case == ("r>n" if r > n else "r<=n")
            assert report.residual == report.literal_residual


def test_closing_term_needs_the_parity_sign():
    # dropping the (-1)^r on the closing term already fails at r = n = 1:
    # the base is a[1]^(1) and an unsigned +r * E would double it, not
    # cancel it.
    report = verify_colored_newton_girard(1, 1)
    base = report.residual - report.aggregated_correction
    assert str(base) == "a[1]^(1)"
    unsigned = base + Poly.const(1) * elementary_color_sum(1, [1], 1)
    assert unsigned == Poly.const(2) * elementary_color_sum(1, [1], 1)
    assert not unsigned.is_zero


def test_both_routes_agree_on_the_loop_graph():
    for r in range(1, 4):
        for n in range(1, 4):
            assert cross_check_against_loops(r, n), (r, n)


def test_loop_graph_breakdown_is_the_symbolic_breakdown():
    symbolic = verify_colored_newton_girard(2, 2)
    graphical = verify_walk_cycle_identity(self_loop_digraph(2, 2), 2)
    assert dict(symbolic.breakdown) == dict(graphical.breakdown)


# ---------------------------------------------------------------------------
# classical specialization
# ---------------------------------------------------------------------------


def test_elementary_coefficients_cubic():
    # (x - 1)(x - 2)(x - 3) = x^3 - 6x^2 + 11x - 6
    assert elementary_coefficients([1, 2, 3]) == [1, -6, 11, -6]
    assert elementary_coefficients([5]) == [1, -5]


def test_classical_newton_girard_random_roots():
    rng = random.Random(614)
    for _ in range(60):
        n = rng.randint(1, 5)
        roots = [rng.randint(-5, 5) for _ in range(n)]
        for r in range(1, 8):
            assert verify_classical_newton_girard(roots, r), (roots, r)


def test_classical_newton_girard_rejects_bad_arguments():
    with pytest.raises(ValueError):
        verify_classical_newton_girard([1, 2], 0)
    with pytest.raises(ValueError):
        verify_classical_newton_girard([], 3)


def test_uniform_collapse_reproduces_classical_terms():
    # under a[j]^(i) := root_j the size-k slice of the breakdown becomes
    # r! * e_k * p_{r-k}, so the colored identity is the classical one
    # scaled by r!.
    cases = [(1, 1), (2, 2), (2, 3), (3, 2), (3, 3)]
    roots_pool = [2, -1, 3, 1]
    for r, n in cases:
        roots = roots_pool[:n]
        report = verify_colored_newton_girard(r, n)
        assign = uniform_alpha_assignment(r, n, roots)
        e = elementary_coefficients(roots)
        p = [n] + [sum(root**t for root in roots) for t in range(1, r + 1)]
        k_top = r if r > n else r - 1
        for k in range(0, k_top + 1):
            group = sum(
                value.evaluate(assign)
                for (s, _), value in report.breakdown.items()
                if len(s) == k
            )
            e_k = e[k] if k < len(e) else 0
            assert group == factorial(r) * e_k * p[r - k], (r, n, k)
        if r <= n:
            closing = report.aggregated_correction.evaluate(assign)
            assert closing == factorial(r) * r * e[r], (r, n)


def test_uniform_alpha_assignment_shape():
    assign = uniform_alpha_assignment(2, 3, [4, 5, 6])
    assert len(assign) == 6
    with pytest.raises(ValueError):
        uniform_alpha_assignment(2, 3, [4, 5])
