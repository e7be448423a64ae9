from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from monmap.algebra import (GAMMA, ONE, SQRT2, ZERO, GammaPoly,
                            MissingVariable, MultiPoly, Sqrt2, gamma_of)

F = Fraction


class TestGammaPoly:
    def test_mon_klein_shape(self):
        p = GammaPoly((F(1, 6), 0, F(2, 3)))
        assert p.degree == 2
        assert p.leading_coefficient == F(2, 3)
        assert p.coefficient(0) == F(1, 6)
        assert p.coefficient(1) == 0
        assert p.coefficient(7) == 0

    def test_zero_is_neutral(self):
        p = GammaPoly((F(1, 2), 3))
        assert ZERO + p == p
        assert p + ZERO == p
        assert ZERO * p == ZERO
        assert ZERO.degree == float("-inf")
        assert ZERO.leading_coefficient == 0

    def test_trailing_zeros_trimmed(self):
        assert GammaPoly((1, 0, 0)) == GammaPoly((1,))
        assert GammaPoly((0, 0)) == ZERO

    def test_arithmetic(self):
        p = (ONE + GAMMA) * (ONE + GAMMA)
        assert p == GammaPoly((1, 2, 1))
        assert p - GammaPoly((1, 2, 1)) == ZERO
        assert p.scale(F(1, 2)) == GammaPoly((F(1, 2), 1, F(1, 2)))
        assert 2 * GAMMA == GammaPoly((0, 2))

    def test_evaluate(self):
        p = GammaPoly((F(1, 6), 0, F(2, 3)))
        assert p.evaluate(F(-3, 2)) == F(1, 6) + F(2, 3) * F(9, 4)
        v = p.evaluate(Sqrt2(0, 1))
        assert v == Sqrt2(F(1, 6) + F(4, 3), 0)

    def test_homogeneous_part(self):
        p = GammaPoly((F(1, 6), 0, F(2, 3)))
        assert p.homogeneous_part(2) == GammaPoly((0, 0, F(2, 3)))
        assert p.homogeneous_part(1) == ZERO
        assert p.homogeneous_part(0) + p.homogeneous_part(2) == p

    def test_json_round_trip(self):
        p = GammaPoly((F(1, 6), 0, F(-2, 3)))
        assert GammaPoly.from_json_obj(p.to_json_obj()) == p

    @given(st.lists(st.fractions(), max_size=5),
           st.lists(st.fractions(), max_size=5), st.fractions())
    def test_evaluate_is_ring_morphism(self, a, b, x):
        p, q = GammaPoly(a), GammaPoly(b)
        assert (p + q).evaluate(x) == p.evaluate(x) + q.evaluate(x)
        assert (p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x)


class TestMultiPoly:
    def test_sum_pq_evaluation(self):
        poly = (MultiPoly.variable("p1") * MultiPoly.variable("q1")
                + MultiPoly.variable("p2") * MultiPoly.variable("q2"))
        value = poly.evaluate({"p1": 2, "q1": 3, "p2": 1, "q2": 1})
        assert value == 7

    def test_missing_variable(self):
        poly = MultiPoly.variable("p1")
        with pytest.raises(MissingVariable):
            poly.evaluate({"q1": 1})

    def test_degree_and_homogeneous(self):
        g = MultiPoly.variable("g")
        p = MultiPoly.variable("p1")
        poly = p * p * g + p + MultiPoly.const(5)
        assert poly.degree == 3
        assert poly.homogeneous_part(3) == p * p * g
        total = MultiPoly()
        for d in range(4):
            total = total + poly.homogeneous_part(d)
        assert total == poly

    def test_ring_identities(self):
        x = MultiPoly.variable("x")
        y = MultiPoly.variable("y")
        assert (x + y) * (x - y) == x * x - y * y
        assert x * MultiPoly.const(0) == MultiPoly()

    def test_json_round_trip(self):
        x = MultiPoly.variable("x")
        poly = x * x - MultiPoly.const(F(1, 3))
        assert MultiPoly.from_json_obj(poly.to_json_obj()) == poly


class TestSqrt2:
    def test_basic_arithmetic(self):
        a = Sqrt2(1, 1)
        assert a * a == Sqrt2(3, 2)
        assert a - a == Sqrt2(0, 0)
        assert SQRT2 * SQRT2 == 2
        assert (a / a) == 1

    def test_inverse_and_pow(self):
        inv_sqrt2 = 1 / SQRT2
        assert inv_sqrt2 == Sqrt2(0, F(1, 2))
        assert SQRT2 ** -2 == Sqrt2(F(1, 2), 0)
        assert SQRT2 ** 3 == Sqrt2(0, 2)
        with pytest.raises(ZeroDivisionError):
            Sqrt2(0, 0).inverse()

    def test_irrational_guard(self):
        with pytest.raises(ValueError):
            SQRT2.to_fraction()
        assert Sqrt2(F(5, 3), 0).to_fraction() == F(5, 3)

    @given(st.fractions(), st.fractions(), st.fractions(), st.fractions())
    def test_field_axioms(self, a, b, c, d):
        x, y = Sqrt2(a, b), Sqrt2(c, d)
        assert x * y == y * x
        assert x + y == y + x
        if y:
            assert (x / y) * y == x


class TestGammaOf:
    def test_values(self):
        assert gamma_of(F(1)) == 0
        assert gamma_of(F(2)) == F(-3, 2)
        assert gamma_of(F(1, 2)) == F(3, 2)

    def test_antisymmetry(self):
        for a in (F(2), F(3), F(5, 7)):
            assert gamma_of(1 / a) == -gamma_of(a)

    def test_zero_rejected(self):
        with pytest.raises(ZeroDivisionError):
            gamma_of(F(0))

    def test_sqrt2_points(self):
        assert gamma_of(SQRT2) == Sqrt2(0, F(-1, 2))
        assert gamma_of(Sqrt2(0, F(1, 2))) == Sqrt2(0, F(1, 2))
