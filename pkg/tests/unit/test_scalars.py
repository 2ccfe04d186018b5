"""Tests for exact scalars and coefficient expressions."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy import Rational
from sympy.polys.domains import QQ, QQ_I

from lie_gcs.core.expressions import evaluate, evaluate_predicate
from lie_gcs.core.scalars import (
    bit_length,
    conj,
    decode_gauss,
    decode_rational,
    decode_scalar,
    encode_gauss,
    encode_rational,
    encode_scalar,
    gauss,
    lift,
    qq,
)
from lie_gcs.exceptions import DomainError


class TestRationals:
    """Test conversion into QQ."""

    @pytest.mark.parametrize("value", [3, "3", Fraction(3, 1), Rational(3), QQ(3)])
    def test_qq_accepts_exact_inputs(self, value):
        """Test every accepted input kind."""
        assert qq(value) == QQ(3)

    def test_qq_reduces(self):
        """Test that fractions come out reduced."""
        assert qq("-4/6") == QQ(-2, 3)

    @pytest.mark.parametrize("value", ["0.5", "x", "sqrt(2)", True])
    def test_qq_rejects_inexact(self, value):
        """Test that floats, symbols, irrationals and booleans are rejected."""
        with pytest.raises(DomainError):
            qq(value)

    def test_qq_rejects_complex(self):
        """Test that a Gaussian rational with imaginary part is not a rational."""
        with pytest.raises(DomainError):
            qq(gauss(1, 1))

    def test_encode_rational(self):
        """Test the p/q encoding with the sign on the numerator."""
        assert encode_rational(QQ(5)) == "5"
        assert encode_rational(QQ(-3, 4)) == "-3/4"
        assert decode_rational("-3/4") == QQ(-3, 4)
        assert decode_rational(7) == QQ(7)

    @given(st.fractions())
    def test_rational_encoding_is_exact(self, value):
        """Test that decoding inverts encoding on arbitrary fractions."""
        a = qq(value)
        assert decode_rational(encode_rational(a)) == a


class TestGaussian:
    """Test Gaussian rationals."""

    def test_gauss_and_conj(self):
        """Test construction and conjugation."""
        z = gauss("1/2", -3)
        assert conj(z) == gauss("1/2", 3)
        assert conj(QQ(2)) == QQ(2)

    def test_lift(self):
        """Test embedding rationals into QQ_I."""
        assert lift(QQ(2)) == QQ_I(2, 0)
        assert lift(gauss(0, 1)) == gauss(0, 1)

    def test_encode_gauss(self):
        """Test the re/im encoding."""
        assert encode_gauss(gauss(1, "-2/3")) == {"re": "1", "im": "-2/3"}
        assert decode_gauss({"re": "1", "im": "-2/3"}) == gauss(1, "-2/3")
        assert decode_gauss("5") == gauss(5, 0)

    def test_encode_scalar_dispatch(self):
        """Test that rationals stay strings and Gaussian values become objects."""
        assert encode_scalar(QQ(1, 2)) == "1/2"
        assert encode_scalar(gauss(0, 1)) == {"re": "0", "im": "1"}
        assert decode_scalar({"re": "0", "im": "1"}) == gauss(0, 1)
        assert decode_scalar("1/2") == QQ(1, 2)

    def test_bit_length(self):
        """Test the size measure used for growth warnings."""
        assert bit_length(QQ(255, 2)) == 8
        assert bit_length(gauss(1, 1024)) == 11


class TestExpressions:
    """Test evaluation of coefficient expressions."""

    def test_evaluate_rational(self):
        """Test evaluation with bound parameters."""
        assert evaluate("(1 + lam**2)/a", {"lam": QQ(2), "a": QQ(5)}) == QQ(1)

    def test_evaluate_gaussian(self):
        """Test that I gives Gaussian results."""
        assert evaluate("1 + I*lam", {"lam": QQ(3)}) == gauss(1, 3)

    def test_evaluate_unbound(self):
        """Test that unbound names are rejected."""
        with pytest.raises(DomainError):
            evaluate("alpha + 1", {})

    def test_evaluate_irrational(self):
        """Test that irrational results are rejected."""
        with pytest.raises(DomainError):
            evaluate("sqrt(a)", {"a": QQ(2)})

    def test_predicate(self):
        """Test domain predicates."""
        assert evaluate_predicate("Ne(alpha, -2*beta)", {"alpha": QQ(1), "beta": QQ(1)})
        assert not evaluate_predicate("beta >= 0", {"beta": QQ(-1)})

    def test_predicate_literals(self):
        """Test the constant predicates used by unconditional catalogue rows."""
        assert evaluate_predicate("True", {})
        assert not evaluate_predicate("False", {})
        assert evaluate_predicate("And(True, alpha > 0)", {"alpha": QQ(1)})
