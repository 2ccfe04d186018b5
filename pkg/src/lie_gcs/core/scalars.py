"""Exact scalars over ℚ and ℚ(i).

Rationals are elements of sympy's ``QQ`` domain and Gaussian rationals are
elements of ``QQ_I``. Both are arbitrary precision and always reduced.
"""

from fractions import Fraction
from typing import TYPE_CHECKING, Any, Dict, Union

from sympy import Expr, Rational, sympify
from sympy.core.sympify import SympifyError
from sympy.polys.domains import QQ, QQ_I

from ..exceptions import DomainError

RationalLike = Union[int, str, Fraction, Rational, Any]

if TYPE_CHECKING:
    from sympy.external.pythonmpq import PythonMPQ as QQElement
else:
    QQElement = QQ.dtype


def qq(value: RationalLike) -> Any:
    """Convert ``value`` into an element of ``QQ``.

    Accepts ints, ``Fraction``, sympy rationals, existing ``QQ`` elements and
    strings such as ``"3"``, ``"-2/3"``.

    Raises:
        DomainError: If the value is not an exact rational.
    """
    if isinstance(value, bool):
        raise DomainError(f"Not a rational: {value!r}")
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, QQ.dtype):
        return value
    if isinstance(value, QQ_I.dtype):
        if value.y:
            raise DomainError(f"Expected a real rational, got {value}")
        return value.x
    try:
        expr = sympify(value) if not isinstance(value, Expr) else value
    except (SympifyError, TypeError) as e:
        raise DomainError(f"Cannot parse rational {value!r}: {e}")
    if not expr.is_Rational:
        raise DomainError(f"Not an exact rational: {value!r}")
    return QQ.from_sympy(expr)


def gauss(re: RationalLike = 0, im: RationalLike = 0) -> Any:
    """Build the Gaussian rational ``re + i·im``."""
    return QQ_I(qq(re), qq(im))


def lift(value: Any) -> Any:
    """Embed a rational (or pass through a Gaussian rational) into ``QQ_I``."""
    if isinstance(value, QQ_I.dtype):
        return value
    return QQ_I(qq(value), QQ.zero)


def conj(z: Any) -> Any:
    """Complex conjugate; the identity on rationals."""
    if isinstance(z, QQ_I.dtype):
        return QQ_I(z.x, -z.y)
    return z


def re_part(z: Any) -> Any:
    return z.x if isinstance(z, QQ_I.dtype) else z


def im_part(z: Any) -> Any:
    return z.y if isinstance(z, QQ_I.dtype) else QQ.zero


def from_sympy(expr: Any) -> Any:
    """Convert a sympy number to ``QQ`` when real, ``QQ_I`` otherwise.

    Raises:
        DomainError: If either part is not rational.
    """
    expr = sympify(expr)
    real, imag = expr.as_real_imag()
    if not (real.is_Rational and imag.is_Rational):
        raise DomainError(f"Expression does not evaluate to a Gaussian rational: {expr}")
    if imag == 0:
        return QQ.from_sympy(real)
    return QQ_I(QQ.from_sympy(real), QQ.from_sympy(imag))


def to_sympy(z: Any) -> Any:
    if isinstance(z, QQ_I.dtype):
        return QQ_I.to_sympy(z)
    return QQ.to_sympy(qq(z))


def bit_length(z: Any) -> int:
    """Largest numerator/denominator bit length of a scalar."""
    parts = (z.x, z.y) if isinstance(z, QQ_I.dtype) else (z,)
    return max(
        max(int(p.numerator).bit_length(), int(p.denominator).bit_length())
        for p in parts
    )


def encode_rational(a: Any) -> str:
    """Serialize a rational as ``"p"`` or ``"p/q"`` with the sign on ``p``."""
    a = qq(a)
    num, den = int(a.numerator), int(a.denominator)
    return str(num) if den == 1 else f"{num}/{den}"


def decode_rational(text: Union[str, int]) -> Any:
    return qq(text if isinstance(text, int) else str(text))


def encode_gauss(z: Any) -> Dict[str, str]:
    z = lift(z)
    return {"re": encode_rational(z.x), "im": encode_rational(z.y)}


def decode_gauss(obj: Any) -> Any:
    """Decode ``{"re": ..., "im": ...}``; a bare rational string is accepted too."""
    if isinstance(obj, dict):
        return gauss(decode_rational(obj.get("re", "0")), decode_rational(obj.get("im", "0")))
    return lift(decode_rational(obj))


def encode_scalar(z: Any) -> Union[str, Dict[str, str]]:
    if isinstance(z, QQ_I.dtype):
        return encode_gauss(z)
    return encode_rational(z)


def decode_scalar(obj: Any) -> Any:
    if isinstance(obj, dict):
        return decode_gauss(obj)
    return decode_rational(obj)
