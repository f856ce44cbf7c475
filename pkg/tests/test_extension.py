import random
from fractions import Fraction

import pytest

from modext.algebra import is_module_hom
from modext.extension import (
    ideal_check,
    norm_l1,
    quotient_algebra,
    quotient_bimodule,
    submultiplicativity_constant,
    trivial_extension,
)
from modext.linalg import Matrix, Subspace, unit_vec, zero_vec
from modext.reports import HypothesisError
from modext.samples import (
    dual_numbers,
    field_q,
    matrix_units,
    upper_triangular_2,
    zero_action_module,
    zero_product,
)


def rand_vec(rng, n):
    return [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(n)]


class TestTrivialExtension:
    def test_t_q_q_is_dual_numbers(self):
        q = field_q()
        t = trivial_extension(q, q.self_bimodule())
        assert t.total.dim == 2
        # (0,1)^2 = 0 and (1,0) is the unit
        assert t.total.mul_vec([0, 1], [0, 1]) == zero_vec(2)
        assert t.total.unit() == [1, 0]

    def test_product_formula_on_random_elements(self, corpus_extensions):
        rng = random.Random(7)
        for name, a, u, t in corpus_extensions:
            for _ in range(5):
                x1, u1 = rand_vec(rng, a.dim), rand_vec(rng, u.dim)
                x2, u2 = rand_vec(rng, a.dim), rand_vec(rng, u.dim)
                prod = t.total.mul_vec(t.pair(x1, u1), t.pair(x2, u2))
                expect_a = a.mul_vec(x1, x2)
                expect_u = [
                    p + q
                    for p, q in zip(u.left_act(x1, u2), u.right_act(u1, x2))
                ]
                assert prod == t.pair(expect_a, expect_u), name

    def test_module_copy_is_square_zero(self, corpus_extensions):
        for name, a, u, t in corpus_extensions:
            for i in range(u.dim):
                for j in range(u.dim):
                    prod = t.total.mul_vec(
                        t.pair(zero_vec(a.dim), unit_vec(u.dim, i)),
                        t.pair(zero_vec(a.dim), unit_vec(u.dim, j)),
                    )
                    assert prod == zero_vec(t.total.dim), name

    def test_zero_actions_give_annihilator_ideal(self):
        a = dual_numbers()
        t = trivial_extension(a, zero_action_module(a, 2))
        for j in range(2):
            uj = t.pair(zero_vec(2), unit_vec(2, j))
            for i in range(4):
                assert t.total.mul_vec(uj, unit_vec(4, i)) == zero_vec(4)
                assert t.total.mul_vec(unit_vec(4, i), uj) == zero_vec(4)

    def test_projection_and_embedding_are_algebra_homs(self, corpus_extensions):
        for name, a, u, t in corpus_extensions:
            for i in range(a.dim):
                for j in range(a.dim):
                    ei, ej = unit_vec(a.dim, i), unit_vec(a.dim, j)
                    lhs = t.embed_A(a.mul_vec(ei, ej))
                    rhs = t.total.mul_vec(t.embed_A(ei), t.embed_A(ej))
                    assert lhs == rhs, name
            for i in range(t.total.dim):
                for j in range(t.total.dim):
                    xi, xj = unit_vec(t.total.dim, i), unit_vec(t.total.dim, j)
                    lhs = t.project_A(t.total.mul_vec(xi, xj))
                    rhs = a.mul_vec(t.project_A(xi), t.project_A(xj))
                    assert lhs == rhs, name

    def test_project_embed_roundtrip(self, corpus_extensions):
        for name, a, u, t in corpus_extensions:
            assert (t.project_A.matrix * t.embed_A.matrix) == Matrix.identity(a.dim)
            assert (t.project_U.matrix * t.embed_U.matrix) == Matrix.identity(u.dim)


class TestNorm:
    def test_norm_splits_over_the_two_legs(self, corpus_extensions):
        rng = random.Random(3)
        for name, a, u, t in corpus_extensions:
            x, y = rand_vec(rng, a.dim), rand_vec(rng, u.dim)
            assert norm_l1(t.pair(x, y)) == norm_l1(x) + norm_l1(y)

    def test_constants_for_known_algebras(self):
        assert submultiplicativity_constant(zero_product(3)) == 0
        assert submultiplicativity_constant(dual_numbers()) == 1
        assert submultiplicativity_constant(matrix_units(2)) == 1

    def test_bound_holds_and_is_attained(self):
        rng = random.Random(11)
        for a in (dual_numbers(), matrix_units(2), upper_triangular_2()):
            c = submultiplicativity_constant(a)
            for _ in range(200):
                x, y = rand_vec(rng, a.dim), rand_vec(rng, a.dim)
                assert norm_l1(a.mul_vec(x, y)) <= c * norm_l1(x) * norm_l1(y)
            attained = any(
                norm_l1(a.mul_basis(i, j)) == c
                for i in range(a.dim)
                for j in range(a.dim)
            )
            assert attained


class TestIdealCheck:
    def test_trivial_ideals(self):
        a = matrix_units(2)
        assert ideal_check(a, Subspace.zero(4)).passed
        assert ideal_check(a, Subspace.full(4)).passed

    def test_e12_is_an_ideal_of_the_triangle(self):
        a = upper_triangular_2()
        assert ideal_check(a, Subspace.from_vectors(3, [unit_vec(3, 1)])).passed

    def test_e11_span_is_not_an_ideal_of_m2(self):
        a = matrix_units(2)
        rep = ideal_check(a, Subspace.from_vectors(4, [unit_vec(4, 0)]))
        assert not rep.passed
        # witness: E21 E11 = E21 escapes span{E11}
        fail = rep.failures()[0]
        assert fail.witness is not None


class TestQuotient:
    def test_zero_ideal_gives_a_copy_of_a(self):
        a = upper_triangular_2()
        q, proj = quotient_bimodule(a, Subspace.zero(3))
        assert q.dim == 3
        assert proj.matrix == Matrix.identity(3)
        assert q.left == a.mul_tensor

    def test_full_ideal_gives_zero_module(self):
        a = dual_numbers()
        q, proj = quotient_bimodule(a, Subspace.full(2))
        assert q.dim == 0

    def test_triangle_mod_e12(self):
        a = upper_triangular_2()
        ideal = Subspace.from_vectors(3, [unit_vec(3, 1)])
        q, proj = quotient_bimodule(a, ideal)
        assert q.dim == 2
        # the quotient actions go through the diagonal: e11 acts on the
        # first coset coordinate only, e22 on the second
        e11, e22 = unit_vec(3, 0), unit_vec(3, 2)
        assert q.left_act(e11, [1, 0]) == [1, 0]
        assert q.left_act(e11, [0, 1]) == [0, 0]
        assert q.left_act(e22, [0, 1]) == [0, 1]
        # independent coset arithmetic: project(x) . project(y) = project(xy)
        for i in range(3):
            for c, coset in ((0, e11), (1, e22)):
                prod = a.mul_vec(unit_vec(3, i), coset)
                assert q.left_act(unit_vec(3, i), unit_vec(2, c)) == proj(prod)

    def test_projection_is_a_surjective_module_hom(self):
        a = upper_triangular_2()
        ideal = Subspace.from_vectors(3, [unit_vec(3, 1)])
        q, proj = quotient_bimodule(a, ideal)
        assert is_module_hom(proj, "both").passed
        from modext.linalg import rank

        assert rank(proj.matrix) == a.dim - ideal.dim

    def test_non_ideal_rejected(self):
        a = matrix_units(2)
        with pytest.raises(HypothesisError):
            quotient_bimodule(a, Subspace.from_vectors(4, [unit_vec(4, 0)]))

    def test_quotient_algebra_of_dual_numbers(self):
        a = dual_numbers()
        ideal = Subspace.from_vectors(2, [unit_vec(2, 1)])  # span{eps}
        q, proj = quotient_algebra(a, ideal)
        assert q.dim == 1
        assert q.mul_tensor == [[[1]]]
