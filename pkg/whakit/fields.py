"""
Exact scalar fields.

Three kinds of field are supported: the rationals Q, prime fields F_p and
quadratic extensions Q(sqrt d). Each is backed by a sympy polys domain so that
``DomainMatrix`` arithmetic stays exact and fast (gmpy2 rationals when
available). The scalar text encoding is shared with the file format:

    Q          "p/q" or "p"
    F_p        decimal in [0, p)
    Q(sqrt d)  {"a": "p/q", "b": "p/q"} meaning a + b*sqrt(d)
"""

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional, Union

import sympy
from sympy.polys.domains import FF, QQ

from .errors import FieldError, FormatError


_RATIONAL_TOKEN = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?$")
_INTEGER_TOKEN = re.compile(r"^\s*\d+\s*$")

ScalarToken = Union[str, Dict[str, str]]


class FieldKind(Enum):
    """The supported families of exact fields."""
    RATIONAL = "Q"
    PRIME = "F_p"
    QUADRATIC = "Q(sqrt d)"


@dataclass(frozen=True)
class Field:
    """
    An exact field together with its scalar encoding.

    Use the constructors :meth:`rationals`, :meth:`prime` and
    :meth:`quadratic`; they validate parameters eagerly.
    """
    kind: FieldKind
    p: Optional[int] = None
    d: Optional[int] = None
    domain: Any = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if self.kind is FieldKind.RATIONAL:
            domain = QQ
        elif self.kind is FieldKind.PRIME:
            if not isinstance(self.p, int) or self.p < 2 or not sympy.isprime(self.p):
                raise FieldError(f"p must be a prime number, got {self.p!r}")
            domain = FF(self.p)
        else:
            d = self.d
            if not isinstance(d, int) or d in (0, 1):
                raise FieldError(f"d must be a squarefree integer other than 0 and 1, got {d!r}")
            if abs(d) > 1 and any(e > 1 for e in sympy.factorint(abs(d)).values()):
                raise FieldError(f"d must be squarefree, got {d}")
            domain = QQ.algebraic_field(sympy.sqrt(d))
        object.__setattr__(self, "domain", domain)

    @classmethod
    def rationals(cls) -> "Field":
        return cls(FieldKind.RATIONAL)

    @classmethod
    def prime(cls, p: int) -> "Field":
        return cls(FieldKind.PRIME, p=p)

    @classmethod
    def quadratic(cls, d: int) -> "Field":
        return cls(FieldKind.QUADRATIC, d=d)

    def __str__(self) -> str:
        if self.kind is FieldKind.RATIONAL:
            return "Q"
        if self.kind is FieldKind.PRIME:
            return f"F_{self.p}"
        return f"Q(sqrt({self.d}))"

    @property
    def characteristic(self) -> int:
        return self.p if self.kind is FieldKind.PRIME else 0

    @property
    def zero(self):
        return self.domain.zero

    @property
    def one(self):
        return self.domain.one

    # ------------------------------------------------------------------
    # conversion
    # ------------------------------------------------------------------

    def from_rational(self, numerator: int, denominator: int = 1):
        """
        Convert numerator/denominator into the field.

        Raises:
            FieldError: if the denominator vanishes in the field
        """
        num = self.domain.convert(int(numerator))
        den = self.domain.convert(int(denominator))
        if not den:
            raise FieldError(f"{numerator}/{denominator} is not representable in {self}")
        return num / den

    def convert(self, value: Any):
        """
        Convert a Python or sympy value into a field element.

        Accepts ints, sympy numbers and expressions in sqrt(d), existing
        domain elements, and scalar tokens of the text encoding.
        """
        if isinstance(value, bool):
            raise FieldError("booleans are not field elements")
        if isinstance(value, (str, dict)):
            return self.parse(value)
        if isinstance(value, int):
            return self.domain.convert(value)
        if self.domain.of_type(value):
            return value
        if isinstance(value, sympy.Basic):
            expr = sympy.nsimplify(value) if value.is_Float else value
            if self.kind is FieldKind.PRIME:
                rational = sympy.Rational(expr)
                return self.from_rational(rational.p, rational.q)
            try:
                return self.domain.from_sympy(expr)
            except Exception as exc:
                raise FieldError(f"{value} is not an element of {self}") from exc
        try:
            return self.domain.convert(value)
        except Exception as exc:
            raise FieldError(f"cannot convert {value!r} into {self}") from exc

    def parse(self, token: ScalarToken):
        """
        Parse one scalar of the text encoding.

        Raises:
            FormatError: if the token does not match the field's encoding
        """
        if self.kind is FieldKind.QUADRATIC:
            if not isinstance(token, dict) or set(token) - {"a", "b"}:
                raise FormatError(f"expected {{\"a\": .., \"b\": ..}} scalar for {self}, got {token!r}")
            a = self._parse_rational(token.get("a", "0"))
            b = self._parse_rational(token.get("b", "0"))
            return self.domain.from_sympy(a + b * sympy.sqrt(self.d))
        if not isinstance(token, str):
            raise FormatError(f"expected a string scalar for {self}, got {token!r}")
        if self.kind is FieldKind.PRIME:
            if not _INTEGER_TOKEN.match(token):
                raise FormatError(f"F_{self.p} scalars are decimals in [0, {self.p}), got {token!r}")
            value = int(token)
            if value >= self.p:
                raise FormatError(f"F_{self.p} scalar {value} is out of range")
            return self.domain.convert(value)
        rational = self._parse_rational(token)
        return self.domain.convert(rational.p) / self.domain.convert(rational.q)

    @staticmethod
    def _parse_rational(token: str) -> sympy.Rational:
        if not isinstance(token, str):
            raise FormatError(f"expected a rational string, got {token!r}")
        match = _RATIONAL_TOKEN.match(token)
        if not match:
            raise FormatError(f"malformed rational scalar {token!r}")
        numerator = int(match.group(1))
        denominator = int(match.group(2)) if match.group(2) else 1
        if denominator == 0:
            raise FormatError(f"zero denominator in {token!r}")
        return sympy.Rational(numerator, denominator)

    def encode(self, value) -> ScalarToken:
        """Encode a field element in canonical text form."""
        if self.kind is FieldKind.PRIME:
            return str(self.domain.to_int(value) % self.p)
        if self.kind is FieldKind.RATIONAL:
            return _rational_text(value.numerator, value.denominator)
        a, b = self.components(value)
        return {"a": _rational_text(a.p, a.q), "b": _rational_text(b.p, b.q)}

    def components(self, value):
        """Return (a, b) as sympy Rationals with value = a + b*sqrt(d)."""
        if self.kind is not FieldKind.QUADRATIC:
            rational = sympy.Rational(str(self.encode(value)))
            return rational, sympy.Rational(0)
        coefficients = [sympy.Rational(int(c.numerator), int(c.denominator)) for c in value.to_list()]
        if not coefficients:
            return sympy.Rational(0), sympy.Rational(0)
        if len(coefficients) == 1:
            return coefficients[0], sympy.Rational(0)
        return coefficients[1], coefficients[0]

    def to_sympy(self, value) -> sympy.Expr:
        if self.kind is FieldKind.PRIME:
            return sympy.Integer(self.domain.to_int(value) % self.p)
        return self.domain.to_sympy(value)

    def to_dict(self) -> Dict[str, Any]:
        if self.kind is FieldKind.RATIONAL:
            return {"kind": "Q"}
        if self.kind is FieldKind.PRIME:
            return {"kind": "F_p", "p": self.p}
        return {"kind": "Q(sqrt d)", "d": self.d}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Field":
        if not isinstance(data, dict) or "kind" not in data:
            raise FormatError(f"field description must be an object with a 'kind', got {data!r}")
        kind = data["kind"]
        if kind == "Q":
            return cls.rationals()
        if kind == "F_p":
            return cls.prime(data.get("p"))
        if kind == "Q(sqrt d)":
            return cls.quadratic(data.get("d"))
        raise FormatError(f"unknown field kind {kind!r}")


def _rational_text(numerator, denominator) -> str:
    numerator, denominator = int(numerator), int(denominator)
    if denominator == 1:
        return str(numerator)
    return f"{numerator}/{denominator}"


QQ_FIELD = Field.rationals()
