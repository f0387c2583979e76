"""Form module: grading, module structure and the twisted product."""

from __future__ import annotations

import random

import pytest

from qforms.calculus import CalculusConfig, twist
from qforms.checks import random_form, random_homogeneous_form, random_poly
from qforms.cyclotomic import ONE, Q, CycQ, q_power
from qforms.forms import Form, FormMonomial, swap_scalar
from qforms.polynomial import ModeMismatchError, Poly

CFG_Q = CalculusConfig(Q)
CFG_1 = CalculusConfig(ONE)
CFG_ANY = CalculusConfig(Q, anyonic=True)


class TestMonomials:
    def test_grade_adds_powers(self):
        assert FormMonomial(0, 0).grade == 0
        assert FormMonomial(1, 0).grade == 1
        assert FormMonomial(1, 1).grade == 3
        assert FormMonomial(2, 3).grade == 8

    def test_dx_power_is_capped(self):
        with pytest.raises(ValueError):
            FormMonomial(3, 0)
        with pytest.raises(ValueError):
            FormMonomial(-1, 0)
        with pytest.raises(ValueError):
            FormMonomial(0, -1)


class TestModuleStructure:
    def test_addition_merges_coefficients(self):
        dx = Form.basis(1, 0)
        assert dx + dx == dx.left_mul(2)
        assert (dx - dx).is_zero()

    def test_zero_coefficients_canonicalize_away(self):
        assert Form({(1, 0): Poly.zero()}) == Form.zero()
        assert not Form({(1, 0): Poly.zero()})

    def test_left_action_is_coefficientwise(self):
        u = Form({(1, 0): Poly.x()})
        f = Poly({0: 1, 1: 1})
        assert u.left_mul(f) == Form({(1, 0): f * Poly.x()})
        assert f * u == u.left_mul(f)
        assert Q * u == u.left_mul(Q)

    def test_mode_mismatch_detected(self):
        with pytest.raises(ModeMismatchError):
            Form.basis(1, 0) + Form.basis(1, 0, truncated=True)
        with pytest.raises(ModeMismatchError):
            Form({(0, 0): Poly.x(truncated=True)})
        with pytest.raises(ModeMismatchError):
            Form.basis(1, 0).mul(Form.basis(0, 1), CFG_ANY)

    def test_grades_and_homogeneity(self):
        u = Form({(0, 0): Poly.x(), (1, 0): Poly.one()})
        assert u.grades() == [0, 1]
        assert not u.is_homogeneous()
        assert u.grade() is None
        assert Form.basis(2, 1).grade() == 4
        assert Form.zero().is_homogeneous()
        assert Form.zero().grade() is None

    def test_decompose_splits_by_grade(self):
        u = Form({(0, 0): Poly.x(), (1, 0): Poly.one()})
        parts = u.decompose()
        assert list(parts) == [0, 1]
        assert parts[0] == Form.from_poly(Poly.x())
        assert parts[1] == Form.basis(1, 0)

    def test_decompose_groups_equal_grades(self):
        u = Form({(0, 1): Poly.one(), (2, 0): Poly.one()})
        parts = u.decompose()
        assert list(parts) == [2]
        assert parts[2] == u


class TestProductExamples:
    def test_dx_past_x_twists(self):
        dx, xf = Form.basis(1, 0), Form.from_poly(Poly.x())
        assert dx.mul(xf, CFG_Q) == Form({(1, 0): Poly.monomial(1, Q)})
        assert dx.mul(xf, CFG_1) == Form({(1, 0): Poly.x()})

    def test_d2x_past_x_picks_up_the_bracket(self):
        d2x, xf = Form.basis(0, 1), Form.from_poly(Poly.x())
        # alpha=1: bracket(x) == 1 - q
        expected = Form({(0, 1): Poly.x(), (2, 0): Poly.constant(CycQ(1, -1))})
        assert d2x.mul(xf, CFG_1) == expected
        # alpha=q: the bracket term is absent
        assert d2x.mul(xf, CFG_Q) == Form({(0, 1): Poly.monomial(1, Q)})

    def test_d2x_twice_past_x(self):
        # (d2x)^2 * x at alpha=1, by hand:
        #   d2x*x == x*d2x + (1-q)*dx^2, then pushing through the second d2x
        #   and swapping dx^2 left costs q^4 == q, giving
        #   x*d2x^2 + (1-q)(1+q)*dx^2*d2x with (1-q)(1+q) == 2+q
        lhs = Form.basis(0, 2).mul(Form.from_poly(Poly.x()), CFG_1)
        expected = Form({(0, 2): Poly.x(), (2, 1): Poly.constant(CycQ(2, 1))})
        assert lhs == expected

    def test_d2x_past_dx_swaps_with_q_squared(self):
        lhs = Form.basis(0, 1).mul(Form.basis(1, 0), CFG_Q)
        assert lhs == Form.basis(1, 1).left_mul(Q * Q)

    def test_dx_cubed_vanishes(self):
        dx = Form.basis(1, 0)
        assert Form.basis(2, 0).mul(dx, CFG_Q).is_zero()
        assert dx.mul(dx, CFG_Q).mul(dx, CFG_Q).is_zero()

    def test_unit_is_two_sided(self):
        rng = random.Random(7)
        one = Form.one()
        for _ in range(20):
            u = random_form(rng, CFG_Q)
            assert u.mul(one, CFG_Q) == u
            assert one.mul(u, CFG_Q) == u

    def test_anyonic_commutation_relations(self):
        x = Form.from_poly(Poly.x(truncated=True))
        dx = Form.basis(1, 0, truncated=True)
        d2x = Form.basis(0, 1, truncated=True)
        assert x.mul(x, CFG_ANY).mul(x, CFG_ANY).is_zero()
        assert dx.mul(x, CFG_ANY) == x.mul(dx, CFG_ANY).left_mul(Q)
        assert d2x.mul(x, CFG_ANY) == x.mul(d2x, CFG_ANY).left_mul(Q)
        assert d2x.mul(dx, CFG_ANY) == dx.mul(d2x, CFG_ANY).left_mul(Q * Q)


class TestProductLaws:
    @pytest.mark.parametrize(
        "cfg", [CFG_Q, CFG_1, CalculusConfig(CycQ(2)), CFG_ANY],
        ids=["q", "1", "2", "anyonic"],
    )
    def test_associativity_sampled(self, cfg):
        rng = random.Random(11)
        for _ in range(25):
            u = random_form(rng, cfg, max_degree=4)
            v = random_form(rng, cfg, max_degree=4)
            w = random_form(rng, cfg, max_degree=4)
            assert u.mul(v, cfg).mul(w, cfg) == u.mul(v.mul(w, cfg), cfg)

    def test_left_linearity_over_the_coordinate_algebra(self):
        rng = random.Random(13)
        for _ in range(25):
            f = random_poly(rng)
            u = random_form(rng, CFG_1)
            v = random_form(rng, CFG_1)
            assert u.left_mul(f).mul(v, CFG_1) == u.mul(v, CFG_1).left_mul(f)

    def test_grading_is_additive(self):
        rng = random.Random(17)
        for _ in range(40):
            u = random_homogeneous_form(rng, CFG_Q, max_degree=3)
            v = random_homogeneous_form(rng, CFG_Q, max_degree=3)
            product = u.mul(v, CFG_Q)
            if u.is_zero() or v.is_zero():
                continue
            if not product.is_zero():
                assert product.grade() == u.grade() + v.grade()

    def test_distributes_over_addition(self):
        rng = random.Random(19)
        for _ in range(25):
            u, v, w = (random_form(rng, CFG_1) for _ in range(3))
            assert (u + v).mul(w, CFG_1) == u.mul(w, CFG_1) + v.mul(w, CFG_1)


class TestSwapOracle:
    def test_frozen_values(self):
        # q^(2rj) cycles with period three in r*j
        assert swap_scalar(1, 1) == Q * Q
        assert swap_scalar(2, 1) == Q
        assert swap_scalar(2, 2) == Q * Q
        assert swap_scalar(3, 2) == ONE
        assert swap_scalar(4, 2) == Q
        assert swap_scalar(0, 2) == ONE
        assert swap_scalar(4, 0) == ONE

    def test_rejects_out_of_range_powers(self):
        with pytest.raises(ValueError):
            swap_scalar(-1, 0)
        with pytest.raises(ValueError):
            swap_scalar(1, 3)

    def test_matches_the_rewriter(self):
        for r in range(5):
            for j in range(3):
                lhs = Form.basis(0, r).mul(Form.basis(j, 0), CFG_Q)
                assert lhs == Form.basis(j, r).left_mul(swap_scalar(r, j))


class TestHomogeneityWitness:
    def test_alpha_away_from_q_breaks_the_simple_rule(self):
        xf = Form.from_poly(Poly.x())
        for cfg in (CFG_1, CalculusConfig(CycQ(2))):
            product = Form.basis(0, 1).mul(xf, cfg)
            simple = Form({(0, 1): twist(Poly.x(), cfg)})
            assert product != simple

    def test_alpha_q_keeps_the_simple_rule(self):
        for m in range(1, 7):
            f = Poly.monomial(m)
            product = Form.basis(0, 1).mul(Form.from_poly(f), CFG_Q)
            assert product == Form({(0, 1): twist(f, CFG_Q)})


class TestSerialization:
    def test_canonical_shape(self):
        u = Form({(1, 0): Poly.monomial(1, Q), (0, 1): Poly.one()})
        data = u.to_dict()
        assert data["mode"] == "generic"
        assert data["terms"] == [
            {"dx": 1, "d2x": 0, "coeff": [[1, [0, 1, 1, 1]]]},
            {"dx": 0, "d2x": 1, "coeff": [[0, [1, 1, 0, 1]]]},
        ]

    def test_round_trip_both_modes(self):
        rng = random.Random(23)
        for cfg in (CFG_Q, CFG_ANY):
            for _ in range(25):
                u = random_form(rng, cfg)
                assert Form.from_dict(u.to_dict()) == u

    def test_mode_round_trips(self):
        u = Form.basis(1, 1, truncated=True)
        assert u.to_dict()["mode"] == "anyonic"
        assert Form.from_dict(u.to_dict()).truncated

    def test_bad_mode_rejected(self):
        with pytest.raises(ValueError):
            Form.from_dict({"mode": "other", "terms": []})
