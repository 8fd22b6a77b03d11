"""Unit tests for exact fields and the scalar text encoding."""

import pytest
import sympy

from whakit.errors import FieldError, FormatError
from whakit.fields import Field, FieldKind, QQ_FIELD


class TestFieldConstruction:
    """Parameters are validated eagerly."""

    @pytest.mark.parametrize("p", [2, 3, 5, 101])
    def test_prime_fields(self, p):
        fld = Field.prime(p)
        assert fld.characteristic == p
        assert str(fld) == f"F_{p}"

    @pytest.mark.parametrize("p", [0, 1, 4, 9, -3])
    def test_rejects_non_primes(self, p):
        with pytest.raises(FieldError):
            Field.prime(p)

    @pytest.mark.parametrize("d", [2, 3, -1, -3, 5])
    def test_quadratic_fields(self, d):
        assert Field.quadratic(d).characteristic == 0

    @pytest.mark.parametrize("d", [0, 1, 4, 8, -4])
    def test_rejects_non_squarefree(self, d):
        with pytest.raises(FieldError):
            Field.quadratic(d)

    def test_field_errors_are_input_errors(self):
        with pytest.raises(FieldError) as info:
            Field.prime(6)
        assert info.value.exit_code == 2


class TestRationals:
    """Q uses "p/q" tokens."""

    @pytest.mark.parametrize("token,expected", [
        ("3", sympy.Rational(3)),
        ("-1/3", sympy.Rational(-1, 3)),
        ("4/6", sympy.Rational(2, 3)),
        (" 7 / 2 ", sympy.Rational(7, 2)),
    ])
    def test_parse(self, token, expected):
        assert QQ_FIELD.to_sympy(QQ_FIELD.parse(token)) == expected

    @pytest.mark.parametrize("token", ["1/0", "x", "1.5", "", "1//2"])
    def test_parse_rejects(self, token):
        with pytest.raises(FormatError):
            QQ_FIELD.parse(token)

    def test_parse_rejects_numbers(self):
        with pytest.raises(FormatError):
            QQ_FIELD.parse(3)

    def test_encode_is_canonical(self):
        assert QQ_FIELD.encode(QQ_FIELD.parse("4/6")) == "2/3"
        assert QQ_FIELD.encode(QQ_FIELD.parse("-8/4")) == "-2"

    def test_convert_accepts_ints_and_sympy(self):
        assert QQ_FIELD.convert(5) == QQ_FIELD.parse("5")
        assert QQ_FIELD.convert(sympy.Rational(1, 3)) == QQ_FIELD.parse("1/3")

    def test_convert_rejects_booleans(self):
        with pytest.raises(FieldError):
            QQ_FIELD.convert(True)


class TestPrimeField:
    """F_p scalars are decimals in [0, p)."""

    def test_parse_and_encode(self):
        F5 = Field.prime(5)
        assert F5.encode(F5.parse("3") + F5.parse("4")) == "2"

    @pytest.mark.parametrize("token", ["5", "-1", "1/2"])
    def test_parse_rejects(self, token):
        with pytest.raises(FormatError):
            Field.prime(5).parse(token)

    def test_from_rational(self):
        F5 = Field.prime(5)
        assert F5.encode(F5.from_rational(1, 2)) == "3"

    def test_from_rational_zero_denominator(self):
        with pytest.raises(FieldError):
            Field.prime(2).from_rational(1, 2)

    def test_convert_rational(self):
        F3 = Field.prime(3)
        assert F3.encode(F3.convert(sympy.Rational(1, 2))) == "2"


class TestQuadraticField:
    """Q(sqrt d) scalars are {"a": .., "b": ..} objects."""

    def test_sqrt_squares_to_d(self):
        fld = Field.quadratic(2)
        r = fld.parse({"a": "0", "b": "1"})
        assert fld.encode(r * r) == {"a": "2", "b": "0"}

    def test_components(self):
        fld = Field.quadratic(3)
        a, b = fld.components(fld.parse({"a": "1/2", "b": "-3"}))
        assert (a, b) == (sympy.Rational(1, 2), sympy.Rational(-3))

    def test_missing_part_defaults_to_zero(self):
        fld = Field.quadratic(2)
        assert fld.encode(fld.parse({"a": "5"})) == {"a": "5", "b": "0"}

    @pytest.mark.parametrize("token", ["1", {"a": "1", "c": "2"}, {"a": "x"}])
    def test_parse_rejects(self, token):
        with pytest.raises(FormatError):
            Field.quadratic(2).parse(token)

    def test_convert_sympy_expression(self):
        fld = Field.quadratic(2)
        assert fld.encode(fld.convert(1 + 2 * sympy.sqrt(2))) == {"a": "1", "b": "2"}


class TestFieldDescription:
    """to_dict / from_dict for the file header."""

    @pytest.mark.parametrize("fld", [Field.rationals(), Field.prime(7), Field.quadratic(-1)])
    def test_description(self, fld):
        assert Field.from_dict(fld.to_dict()) == fld

    @pytest.mark.parametrize("data", [{}, {"kind": "R"}, "Q", {"kind": "F_p", "p": 4}])
    def test_rejects_bad_descriptions(self, data):
        with pytest.raises((FormatError, FieldError)):
            Field.from_dict(data)

    def test_kinds(self):
        assert Field.from_dict({"kind": "Q(sqrt d)", "d": 5}).kind is FieldKind.QUADRATIC
