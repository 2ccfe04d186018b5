"""Evaluation of the coefficient expressions stored in catalogue and fixture data.

Expressions are sympy syntax over declared parameter names, evaluated only
after every parameter is bound to an exact rational, so results are always
exact scalars or booleans.
"""

import re
from typing import Any, Dict, Mapping, Optional, Sequence, Tuple

from sympy import And, Abs, Eq, I, Ne, Not, Or, Rational, Symbol, expand, false, sqrt, true
from sympy.core.sympify import SympifyError
from sympy.parsing.sympy_parser import parse_expr

from ..exceptions import DomainError
from .scalars import from_sympy, to_sympy

_IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")
_BUILTINS: Dict[str, Any] = {
    "I": I,
    "sqrt": sqrt,
    "Abs": Abs,
    "Rational": Rational,
    "Ne": Ne,
    "Eq": Eq,
    "And": And,
    "Or": Or,
    "Not": Not,
    "True": true,
    "False": false,
}


def _local_dict(text: str, bindings: Mapping[str, Any],
                symbols: Sequence[str] = ()) -> Dict[str, Any]:
    local: Dict[str, Any] = dict(_BUILTINS)
    for name in symbols:
        local[name] = Symbol(name)
    for name, value in bindings.items():
        local[name] = to_sympy(value)
    for name in _IDENTIFIER.findall(text):
        if name not in local:
            raise DomainError(f"Unbound name '{name}' in expression '{text}'")
    return local


def _parse(text: str, local: Dict[str, Any]) -> Any:
    try:
        return parse_expr(str(text), local_dict=local)
    except (SympifyError, SyntaxError, TypeError, NameError, ZeroDivisionError) as e:
        raise DomainError(f"Cannot evaluate '{text}': {e}")


def evaluate(text: Any, bindings: Mapping[str, Any]) -> Any:
    """Evaluate a scalar expression to a ``QQ`` or ``QQ_I`` element.

    Raises:
        DomainError: On unbound names, division by zero or irrational values.
    """
    if isinstance(text, int):
        text = str(text)
    value = _parse(text, _local_dict(text, bindings))
    if value.has(Symbol):
        raise DomainError(f"Expression '{text}' did not reduce to a number")
    return from_sympy(value)


def evaluate_predicate(text: str, bindings: Mapping[str, Any]) -> bool:
    """Evaluate a domain predicate such as ``"alpha > 0"`` or ``"Ne(alpha, -2*beta)"``."""
    value = _parse(text, _local_dict(text, bindings))
    try:
        return bool(value)
    except TypeError as e:
        raise DomainError(f"Predicate '{text}' is undecidable at {dict(bindings)}: {e}")


def linear_terms(text: str, basis: Sequence[str],
                 bindings: Mapping[str, Any]) -> Dict[str, Any]:
    """Split a linear combination of ``basis`` symbols into exact coefficients.

    A constant part, if any, is returned under the key ``""``.

    Raises:
        DomainError: If the expression is not linear in the basis symbols.
    """
    local = _local_dict(text, bindings, basis)
    value = expand(_parse(text, local))
    coefficients: Dict[str, Any] = {}
    remainder = value
    for name in basis:
        sym = local[name]
        coeff = value.coeff(sym)
        if coeff != 0:
            if coeff.has(Symbol):
                raise DomainError(f"'{text}' is not linear in {name}")
            coefficients[name] = from_sympy(coeff)
            remainder = expand(remainder - coeff * sym)
    if remainder.has(Symbol):
        raise DomainError(f"'{text}' has terms outside the basis {list(basis)}")
    if remainder != 0:
        coefficients[""] = from_sympy(remainder)
    return coefficients


def indexed_terms(text: str, prefix: str, width: int, n: int,
                  bindings: Mapping[str, Any]) -> Dict[Tuple[int, ...], Any]:
    """Parse combinations of symbols like ``E23`` or ``f134`` into index tuples.

    Args:
        text: Expression, e.g. ``"lam*(E11+E44) + E23 - E32"``
        prefix: Symbol prefix (``"E"``, ``"f"``, ``"e"``)
        width: Number of digits per symbol, or ``0`` for any strictly
            increasing multi-index
        n: Dimension bounding every index
        bindings: Parameter values

    Returns:
        Mapping from 1-based index tuples to coefficients; the empty tuple
        holds a constant part.
    """
    pattern = re.compile(rf"\b{re.escape(prefix)}(\d+)\b")
    names = sorted(set(f"{prefix}{digits}" for digits in pattern.findall(str(text))))
    result: Dict[Tuple[int, ...], Any] = {}
    for name, coeff in linear_terms(str(text), names, bindings).items():
        if name == "":
            result[()] = coeff
            continue
        idx = tuple(int(ch) for ch in name[len(prefix):])
        if width and len(idx) != width:
            raise DomainError(f"Symbol {name} should carry {width} indices")
        if any(not 1 <= i <= n for i in idx):
            raise DomainError(f"Symbol {name} has an index outside 1..{n}")
        result[idx] = coeff
    return result


def optional_evaluate(text: Optional[str], bindings: Mapping[str, Any]) -> Optional[Any]:
    return None if text is None else evaluate(text, bindings)
