import random
from fractions import Fraction

import pytest

from ramify.algebra import (
    Cyclotomic,
    FiniteField,
    LaurentSeries,
    cyclotomic_polynomial,
    default_modulus,
    euler_phi,
)
from ramify.errors import DivisionByZeroToPrecision, InputError, InsufficientPrecision


class TestFiniteField:
    def test_prime_field_ops(self):
        F = FiniteField(7)
        a, b = F.element(3), F.element(5)
        assert a + b == F.element(1)
        assert a * b == F.element(1)
        assert (a / b) * b == a
        assert a ** 6 == F.one()

    def test_default_modulus_is_irreducible_and_deterministic(self):
        assert default_modulus(2, 2) == (1, 1, 1)
        assert default_modulus(2, 3) == (1, 1, 0, 1)
        assert default_modulus(3, 2) == (1, 0, 1)

    def test_extension_field_basics(self):
        F = FiniteField(2, 2)
        assert len(set(F.to_integer(a) for a in F)) == 4
        g = F.generator()
        assert g * g == g + F.one()  # x^2 = x + 1 mod the default modulus
        assert g.multiplicative_order() == 3

    def test_frobenius_has_order_n(self):
        F = FiniteField(3, 2)
        g = F.generator()
        assert g.frobenius() != g
        assert g.frobenius().frobenius() == g

    def test_field_axioms_randomized(self):
        rng = random.Random(7)
        for p, n in [(2, 1), (5, 1), (2, 4), (3, 3), (251, 2)]:
            F = FiniteField(p, n)
            for _ in range(25):
                a, b, c = (F.random_element(rng) for _ in range(3))
                assert (a + b) + c == a + (b + c)
                assert (a * b) * c == a * (b * c)
                assert a * (b + c) == a * b + a * c
                assert a + F.zero() == a and a * F.one() == a
                if not a.is_zero():
                    assert a * a.inverse() == F.one()

    def test_root_of_unity(self):
        F = FiniteField(7)
        z = F.root_of_unity(3)
        assert z.multiplicative_order() == 3
        with pytest.raises(InputError):
            F.root_of_unity(5)

    def test_subfield_elements(self):
        F = FiniteField(2, 2)
        assert len(F.subfield_elements(1)) == 2
        assert len(F.subfield_elements(2)) == 4

    def test_order_bound(self):
        with pytest.raises(InputError):
            FiniteField(2, 17)


class TestLaurentSeries:
    def setup_method(self):
        self.F = FiniteField(3)

    def test_add_cancellation(self):
        # (t^-1 + 1) + (-t^-1) = 1
        a = LaurentSeries(self.F, -1, [1, 1])
        b = LaurentSeries(self.F, -1, [-1])
        assert (a + b) == LaurentSeries.one(self.F)

    def test_geometric_series_inverse(self):
        # 1/(1 - t) = 1 + t + t^2 + ... over F_3
        one_minus_t = LaurentSeries(self.F, 0, [1, -1])
        inv = one_minus_t.inverse(precision=8)
        for k in range(8):
            assert inv.coefficient(k) == self.F.one()
        assert inv.precision == 8

    def test_monomial_valuations(self):
        a = LaurentSeries.t_power(self.F, 2)
        b = LaurentSeries.t_power(self.F, -5)
        assert (a * b).order() == -3

    def test_valuation_additive_randomized(self):
        rng = random.Random(11)
        F = FiniteField(5)
        for _ in range(60):
            va, vb = rng.randrange(-6, 6), rng.randrange(-6, 6)
            a = LaurentSeries(F, va, [rng.randrange(1, 5)] + [rng.randrange(5) for _ in range(4)])
            b = LaurentSeries(F, vb, [rng.randrange(1, 5)] + [rng.randrange(5) for _ in range(4)])
            assert (a * b).order() == a.order() + b.order()

    def test_division_by_zero_to_precision(self):
        z = LaurentSeries.zero(self.F, precision=10)
        with pytest.raises(DivisionByZeroToPrecision):
            LaurentSeries.one(self.F) / z

    def test_substitute_identity(self):
        rng = random.Random(3)
        t = LaurentSeries.t_power(self.F, 1)
        for _ in range(20):
            f = LaurentSeries(self.F, rng.randrange(-4, 4),
                              [rng.randrange(1, 3)] + [rng.randrange(3) for _ in range(5)])
            assert f.substitute(t).same_to_precision(f)

    def test_substitute_simple_composition(self):
        # f = t, g = t + t^2
        f = LaurentSeries.t_power(self.F, 1)
        g = LaurentSeries(self.F, 1, [1, 1])
        assert f.substitute(g) == g

    def test_substitute_inverse_of_shifted_uniformizer(self):
        # t^-1 composed with t(1+t) over F_2 is t^-1 * (1 + t + t^2 + ...)
        F2 = FiniteField(2)
        f = LaurentSeries.t_power(F2, -1)
        g = LaurentSeries(F2, 1, [1, 1])
        h = f.substitute(g)
        assert h.order() == -1
        for k in range(-1, 6):
            assert h.coefficient(k) == F2.one()

    def test_substitute_scaled_square(self):
        # f = t^2, g = z*t with z a cube root of unity in F_7: f(g) = z^2 t^2
        F7 = FiniteField(7)
        z = F7.root_of_unity(3)
        f = LaurentSeries.t_power(F7, 2)
        g = LaurentSeries(F7, 1, [z])
        expect = LaurentSeries(F7, 2, [z * z])
        assert f.substitute(g) == expect

    def test_substitute_requires_positive_valuation(self):
        f = LaurentSeries.t_power(self.F, 2)
        with pytest.raises(InputError):
            f.substitute(LaurentSeries.one(self.F))

    def test_insufficient_precision_surfaces(self):
        nearly_zero = LaurentSeries.zero(self.F, precision=0)
        with pytest.raises(DivisionByZeroToPrecision):
            nearly_zero.inverse()
        stub = LaurentSeries(self.F, 0, [1], precision=1).inverse()
        assert stub.precision == 1
        with pytest.raises(InsufficientPrecision):
            stub.coefficient(5)

    def test_precision_propagation(self):
        a = LaurentSeries(self.F, 0, [1, 1], precision=4)
        b = LaurentSeries(self.F, 2, [1])
        assert (a * b).precision == 6
        assert (a + LaurentSeries.one(self.F)).precision == 4


class TestCyclotomic:
    def test_cyclotomic_polynomials(self):
        assert cyclotomic_polynomial(1) == (-1, 1)
        assert cyclotomic_polynomial(4) == (1, 0, 1)
        assert cyclotomic_polynomial(6) == (1, -1, 1)
        assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
        assert euler_phi(12) == 4

    def test_zeta3_relation(self):
        z = Cyclotomic.zeta(3)
        assert z + z * z == Cyclotomic.rational(-1)

    def test_zeta4_square(self):
        z = Cyclotomic.zeta(4)
        assert z * z == Cyclotomic.rational(-1)

    def test_conjugate_inverts(self):
        z = Cyclotomic.zeta(5)
        assert z.conjugate() == z ** 4
        assert z * z.conjugate() == Cyclotomic.one()

    def test_embedding_coherence(self):
        rng = random.Random(5)
        chains = [(2, 4, 8), (3, 6, 12), (2, 6, 12), (5, 10, 30), (1, 3, 9)]
        for d, e, m in chains:
            for _ in range(5):
                coords = [Fraction(rng.randrange(-3, 4)) for _ in range(euler_phi(d))]
                a = Cyclotomic(d, coords)
                assert a.embed(e).embed(m) == a.embed(m)

    def test_mixed_conductor_arithmetic(self):
        a = Cyclotomic.zeta(3)
        b = Cyclotomic.zeta(4)
        prod = a * b
        assert prod == Cyclotomic.zeta(12, 7)  # zeta_12^4 * zeta_12^3

    def test_inverse(self):
        rng = random.Random(9)
        for m in (3, 4, 5, 8, 12):
            for _ in range(5):
                coords = [Fraction(rng.randrange(-3, 4)) for _ in range(euler_phi(m))]
                a = Cyclotomic(m, coords)
                if a.is_zero():
                    continue
                assert a * a.inverse() == Cyclotomic.one()

    def test_rational_detection(self):
        z = Cyclotomic.zeta(6)
        assert not z.is_rational()
        assert (z + z.conjugate()).is_rational()
        assert (z + z.conjugate()).rational_value() == 1

    def test_galois_power(self):
        z = Cyclotomic.zeta(5)
        assert z.galois_power(2) == z ** 2
        with pytest.raises(InputError):
            z.galois_power(5)
