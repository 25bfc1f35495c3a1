from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from petinduce import exactfield as ef
from petinduce.errors import ParseError
from petinduce.exactfield import FieldElem, ONE, PHI, PHI_INV, ZERO, parse, format_elem

fractions = st.fractions(min_value=-10**6, max_value=10**6, max_denominator=10**6)
elems = st.builds(FieldElem, fractions, fractions)
nonzero = elems.filter(bool)

ALPHA = FieldElem(Fraction(186, 55), Fraction(3, 55))


class TestArithmetic:
    def test_add_identity(self):
        assert PHI + ZERO == PHI

    def test_add_units(self):
        assert FieldElem(1, 0) + FieldElem(-1, 1) == PHI

    def test_add_alpha_minus_three(self):
        # frozen from a sympy evaluation in the basis (1, phi)
        assert ef.add(ALPHA, FieldElem(-3)) == FieldElem(Fraction(21, 55), Fraction(3, 55))

    def test_phi_squared(self):
        assert PHI * PHI == 1 + PHI

    def test_phi_times_phi_minus_one(self):
        assert PHI * (PHI - 1) == ONE

    def test_minus_phi_times_minus_phi_inv(self):
        assert ef.mul(-PHI, -PHI_INV) == ONE

    def test_inverse_examples(self):
        # frozen from sympy: 1/(1 + 2 phi) = -3 + 2 phi, 1/(3/4 - phi/5) = 220/149 + 80/149 phi
        assert ef.inverse(FieldElem(1, 2)) == FieldElem(-3, 2)
        assert ONE / FieldElem(Fraction(3, 4), Fraction(-1, 5)) == FieldElem(Fraction(220, 149), Fraction(80, 149))

    def test_inverse_of_zero(self):
        with pytest.raises(ZeroDivisionError):
            ef.inverse(ZERO)

    def test_phi_powers(self):
        assert ef.phi_power(-2) == FieldElem(2, -1)
        assert ef.phi_power(-3) == FieldElem(-3, 2)
        assert ef.phi_power(-4) == FieldElem(5, -3)
        assert ef.phi_power(3) == FieldElem(1, 2)

    def test_mixed_operands(self):
        assert 1 + PHI == FieldElem(1, 1)
        assert Fraction(1, 2) * PHI == FieldElem(0, Fraction(1, 2))
        assert 2 - PHI == FieldElem(2, -1)
        assert 1 / PHI == PHI_INV

    def test_hash_agrees_with_rationals(self):
        assert hash(FieldElem(3)) == hash(3)
        assert hash(FieldElem(Fraction(1, 2))) == hash(Fraction(1, 2))
        assert len({FieldElem(1, 1), 1 + PHI, PHI * PHI}) == 1


class TestOrder:
    def test_sign_examples(self):
        assert ef.sign(ZERO) == 0
        assert ef.sign(2 - PHI) == 1
        assert ef.sign(1 - PHI) == -1

    def test_floor_examples(self):
        assert ef.floor(PHI) == 1
        assert ef.floor(ALPHA) == 3
        assert ef.floor(-PHI) == -2
        assert ef.floor(FieldElem(-3)) == -3

    def test_alpha_in_sqrt5_basis(self):
        # 3/110 sqrt5 + 75/22 with sqrt5 = 2 phi - 1
        assert ALPHA == Fraction(3, 110) * (2 * PHI - 1) + Fraction(75, 22)

    def test_comparisons(self):
        assert PHI_INV < ONE < PHI < 2
        assert max([PHI, ONE, 2 - PHI]) == PHI
        assert sorted([PHI, ZERO, -PHI, PHI_INV]) == [-PHI, ZERO, PHI_INV, PHI]

    @given(elems)
    def test_sign_matches_high_precision(self, x):
        # 100-bit interval evaluation of a + b (1 + sqrt 5)/2; decisive unless it straddles 0
        iv = mpmath.iv
        iv.prec = 100
        a, b = x.a, x.b
        val = (iv.mpf(a.numerator) / a.denominator
               + iv.mpf(b.numerator) / b.denominator * (1 + iv.sqrt(5)) / 2)
        if val.a > 0:
            assert x.sign() == 1
        elif val.b < 0:
            assert x.sign() == -1
        elif x:
            # an interval containing 0 is only possible for a nonzero x if |x| is tiny
            assert abs(float(x)) < 2.0 ** -80

    @given(elems, elems, elems)
    def test_total_order(self, x, y, z):
        assert sum([x < y, x == y, x > y]) == 1
        if x <= y and y <= z:
            assert x <= z

    @given(elems)
    def test_floor_brackets(self, x):
        n = x.floor()
        assert (x - n).sign() >= 0
        assert (x - (n + 1)).sign() < 0


class TestFieldLaws:
    @given(nonzero)
    def test_inverse(self, x):
        assert x * ef.inverse(x) == ONE

    @given(elems, elems, elems)
    @settings(max_examples=50)
    def test_distributive(self, x, y, z):
        assert x * (y + z) == x * y + x * z

    @given(elems)
    def test_norm_is_product_with_conjugate(self, x):
        assert x * x.conjugate() == FieldElem(x.norm())


class TestParseFormat:
    @pytest.mark.parametrize("text, value", [
        ("0", ZERO), ("phi", PHI), ("-phi", -PHI), ("1-phi", 1 - PHI),
        ("-1+phi", PHI_INV), ("186/55+3/55*phi", ALPHA), ("3/2", FieldElem(Fraction(3, 2))),
        ("2*phi", 2 * PHI), (" 1 + phi ", 1 + PHI), ("-3/4*phi", FieldElem(0, Fraction(-3, 4))),
    ])
    def test_parse(self, text, value):
        assert parse(text) == value

    @pytest.mark.parametrize("value, text", [
        (ZERO, "0"), (PHI, "phi"), (-PHI, "-phi"), (1 - PHI, "1-phi"), (PHI_INV, "-1+phi"),
        (ALPHA, "186/55+3/55*phi"),
    ])
    def test_format(self, value, text):
        assert format_elem(value) == text

    def test_bad_denominator_is_located(self):
        with pytest.raises(ParseError) as info:
            parse("1//2")
        assert info.value.position == 2
        assert "^" in str(info.value)

    @pytest.mark.parametrize("text", ["", "phi phi", "1/0", "x", "1+", "2**phi"])
    def test_rejects(self, text):
        with pytest.raises(ParseError):
            parse(text)

    @given(elems)
    def test_round_trip(self, x):
        assert parse(format_elem(x)) == x
