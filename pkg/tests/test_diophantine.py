import json
from fractions import Fraction
from math import isqrt

import pytest
from hypothesis import given, strategies as st

from fwpp.diophantine import (
    NonIntegral,
    build_mutation_tree,
    derive_equation,
    descend_to_minimal,
    height,
    mutate_solution,
    square_free_decompose,
    tree_to_dot,
    tree_to_json,
    verify_solution,
)
from fwpp.fwps import NotDivisible, mutate_weights


def markov_solutions(bound):
    """Independent brute-force oracle for 3xyz = x^2 + y^2 + z^2 with all
    entries <= bound: for x <= y <= z one has xy <= z, so scanning pairs
    with xy <= bound and solving the quadratic in z finds everything."""
    sols = set()
    x = 1
    while x * x <= bound:
        for y in range(x, bound // x + 1):
            disc = 9 * x * x * y * y - 4 * (x * x + y * y)
            if disc < 0:
                continue
            s = isqrt(disc)
            if s * s != disc:
                continue
            for num in (3 * x * y - s, 3 * x * y + s):
                if num % 2 == 0 and y <= num // 2 <= bound:
                    sols.add((x, y, num // 2))
        x += 1
    return sols


class TestSquareFree:
    def test_12(self):
        d = square_free_decompose(12)
        assert (d.c, d.a) == (3, 2)

    def test_1(self):
        d = square_free_decompose(1)
        assert (d.c, d.a) == (1, 1)

    def test_169(self):
        d = square_free_decompose(169)
        assert (d.c, d.a) == (1, 13)

    @given(st.integers(1, 10**6))
    def test_reconstruction_and_square_freeness(self, n):
        d = square_free_decompose(n)
        assert d.c * d.a**2 == n
        k = 2
        while k * k <= d.c:
            assert d.c % (k * k) != 0
            k += 1


class TestDeriveEquation:
    def test_markov(self):
        eq, sol, deriv = derive_equation((1, 1, 1))
        assert (eq.m, eq.k, eq.c, eq.r) == (3, 1, (1, 1, 1), 1)
        assert sol == (1, 1, 1)
        assert (deriv.d, deriv.S, deriv.T) == (1, 1, 1)

    def test_12_5_7(self):
        eq, sol, _ = derive_equation((12, 5, 7))
        assert (eq.m, eq.k, eq.c, eq.r) == (12, 1, (3, 5, 7), 105)
        assert sol == (2, 1, 1)
        assert str(eq) == "12*x0*x1*x2 = 3*x0^2 + 5*x1^2 + 7*x2^2"

    def test_114_same_markov_equation(self):
        eq, sol, _ = derive_equation((1, 1, 4))
        assert (eq.m, eq.k, eq.c) == (3, 1, (1, 1, 1))
        assert sol == (1, 1, 2)

    def test_degree_identity(self, corpus):
        from fwpp.fwps import weights_of
        for P in corpus[:60]:
            w = weights_of(P).weights
            eq, sol, deriv = derive_equation(w)
            if deriv.d == 1 and deriv.S == 1 and deriv.T == 1:
                assert Fraction(eq.m**2, eq.r * eq.k**2) == \
                    Fraction(sum(w) ** 2, w[0] * w[1] * w[2])
            assert verify_solution(eq, sol) or deriv.S != 1 or deriv.T != 1

    def test_equation_invariant_under_weight_mutation(self):
        for w in [(1, 1, 1), (1, 1, 4), (5, 7, 12), (1, 4, 25), (2, 3, 5)]:
            eq, _, _ = derive_equation(tuple(sorted(w)))
            for pivot in range(3):
                try:
                    target = mutate_weights(w, pivot)
                except NotDivisible:
                    continue
                eq2, _, _ = derive_equation(target)
                assert (eq2.m, eq2.k, eq2.r) == (eq.m, eq.k, eq.r)
                assert sorted(eq2.c) == sorted(eq.c)


class TestSolutions:
    def test_verify(self):
        eq, _, _ = derive_equation((1, 1, 1))
        assert verify_solution(eq, (1, 1, 1))
        assert not verify_solution(eq, (1, 1, 3))
        eq4, _, _ = derive_equation((12, 5, 7))
        assert verify_solution(eq4, (3, 1, 4))

    def test_mutate_markov(self):
        eq, _, _ = derive_equation((1, 1, 1))
        assert mutate_solution(eq, (1, 1, 1), 0) == (2, 1, 1)
        assert mutate_solution(eq, (1, 1, 2), 2) == (1, 1, 1)

    def test_non_integral(self):
        eq, _, _ = derive_equation((12, 5, 7))
        with pytest.raises(NonIntegral):
            mutate_solution(eq, (2, 1, 1), 1)


class TestHeightAndDescent:
    def test_heights(self):
        assert height((1, 1, 1)) == 3
        assert height((1, 1, 4)) == 6
        assert height((12, 5, 7)) == 24

    def test_descent_to_markov_root(self):
        assert descend_to_minimal((1, 4, 25)) == [
            (1, 4, 25), (1, 1, 4), (1, 1, 1)]

    def test_already_minimal(self):
        assert descend_to_minimal((1, 1, 1)) == [(1, 1, 1)]

    def test_12_5_7_minimal(self):
        assert descend_to_minimal((12, 5, 7)) == [(5, 7, 12)]

    def test_at_most_one_decreasing_pivot(self):
        for w in [(4, 25, 841), (1, 4, 25), (1, 1, 4), (5, 7, 12),
                  (1, 25, 169), (2, 29**2, 169**2)]:
            h = height(w)
            targets = set()
            for pivot in range(3):
                try:
                    t = mutate_weights(w, pivot)
                except NotDivisible:
                    continue
                if height(t) < h:
                    targets.add(t)
            assert len(targets) <= 1


class TestMutationTree:
    def test_markov_depth_two(self):
        tree = build_mutation_tree((1, 1, 1), max_depth=2)
        assert [n.weights for n in tree.nodes] == [
            (1, 1, 1), (1, 1, 4), (1, 4, 25)]
        assert tree.nodes[2].parent == 1

    def test_3511_single_node(self):
        tree = build_mutation_tree((3, 5, 11), max_depth=10)
        assert len(tree.nodes) == 1
        assert not tree.nodes[0].truncated

    def test_roots_at_minimal(self):
        tree = build_mutation_tree((4, 25, 841), max_depth=1)
        assert tree.root.weights == (1, 1, 1)

    def test_parent_is_unique_decreasing_neighbor(self):
        tree = build_mutation_tree((1, 1, 1), max_depth=4)
        for i, n in enumerate(tree.nodes[1:], start=1):
            decreasing = set()
            for pivot in range(3):
                try:
                    t = mutate_weights(n.weights, pivot)
                except NotDivisible:
                    continue
                if height(t) < n.height:
                    decreasing.add(t)
            assert decreasing == {tree.nodes[n.parent].weights}

    def test_height_capped_tree_is_complete(self):
        # every Markov solution of height <= H appears: exact oracle match
        H = 3000
        tree = build_mutation_tree((1, 1, 1), max_height=H)
        tree_sols = set()
        for n in tree.nodes:
            sol = tuple(isqrt(x) for x in n.weights)
            assert tuple(x * x for x in sol) == n.weights
            tree_sols.add(sol)
        oracle = {s for s in markov_solutions(isqrt(H))
                  if sum(x * x for x in s) <= H}
        assert tree_sols == oracle

    def test_solutions_solve_markov_equation(self):
        eq, _, _ = derive_equation((1, 1, 1))
        tree = build_mutation_tree((1, 1, 1), max_depth=5)
        for n in tree.nodes:
            sol = tuple(isqrt(x) for x in n.weights)
            assert verify_solution(eq, sol)

    def test_dot_and_json_output(self):
        tree = build_mutation_tree((1, 1, 1), max_depth=2)
        dot = tree_to_dot(tree)
        assert dot.startswith("digraph") and "1,1,4 (h=6)" in dot
        doc = json.loads(tree_to_json(tree))
        assert doc["nodes"][0]["weights"] == ["1", "1", "1"]
        assert doc["nodes"][1]["parent"] == 0
