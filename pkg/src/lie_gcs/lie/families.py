"""The canonical type-1 parameterization and its normal families.

A type-1 structure can always be brought to ``J = λ(E11+E22) + E34 − E43``,
``R = a·e12^#``, ``σ = a⁻¹(1+λ²)·e^{12}_#``; the bracket is then described by
sixteen parameters subject to a quadratic system equivalent to Jacobi.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Mapping, Optional, Tuple

from pydantic import BaseModel, ConfigDict, field_validator
from sympy.polys.domains import QQ

from ..core.matrix import Matrix, E
from ..core.scalars import QQElement, decode_rational, encode_rational, qq
from ..exceptions import DomainError
from ..gcs.triple import Triple, canonical_type1
from .algebra import LieAlgebra

logger = logging.getLogger(__name__)

BRACKET_PARAMS = ("a1", "a2", "b1", "b2", "b3", "b4", "x1", "x2", "y1", "y2",
                  "p1", "p2", "q1", "q2", "r1", "r2")


class Prop21Params(BaseModel):
    """Bracket parameters of the canonical type-1 form plus ``λ`` and ``a``."""
    model_config = ConfigDict(frozen=True, validate_default=True, arbitrary_types_allowed=True)

    a1: QQElement = QQ.zero
    a2: QQElement = QQ.zero
    b1: QQElement = QQ.zero
    b2: QQElement = QQ.zero
    b3: QQElement = QQ.zero
    b4: QQElement = QQ.zero
    x1: QQElement = QQ.zero
    x2: QQElement = QQ.zero
    y1: QQElement = QQ.zero
    y2: QQElement = QQ.zero
    p1: QQElement = QQ.zero
    p2: QQElement = QQ.zero
    q1: QQElement = QQ.zero
    q2: QQElement = QQ.zero
    r1: QQElement = QQ.zero
    r2: QQElement = QQ.zero
    lam: QQElement = QQ.zero
    a: QQElement = QQ.one

    @field_validator("*", mode="before")
    @classmethod
    def parse_rational(cls, v):
        """Every parameter is an exact rational."""
        try:
            return decode_rational(v) if isinstance(v, (str, int)) else qq(v)
        except DomainError as e:
            raise ValueError(str(e))

    def values(self) -> Dict[str, QQElement]:
        return {name: getattr(self, name) for name in BRACKET_PARAMS}

    def encoded(self) -> Dict[str, str]:
        data = {name: encode_rational(getattr(self, name)) for name in BRACKET_PARAMS}
        data["lam"] = encode_rational(self.lam)
        data["a"] = encode_rational(self.a)
        return data


def prop21_brackets(p: Prop21Params) -> Dict[Tuple[int, int], List[Any]]:
    """The six brackets of the canonical form, 1-based."""
    return {
        (1, 2): [p.a1, p.a2, 0, 0],
        (3, 4): [p.b1, p.b2, p.b3, p.b4],
        (1, 3): [-p.p1, -p.r1, p.x1, -p.y1],
        (1, 4): [-p.p2, -p.r2, p.y1, p.x1],
        (2, 3): [-p.q1, p.p1, p.x2, -p.y2],
        (2, 4): [-p.q2, p.p2, p.y2, p.x2],
    }


def prop21_build(p: Prop21Params) -> Tuple[LieAlgebra, Triple]:
    """Algebra and canonical triple for the given parameters.

    Jacobi is not enforced; use ``system_S_check`` or ``jacobi_check``.

    Raises:
        DomainError: If ``a`` is zero.
    """
    if not p.a:
        raise DomainError("The scale a of R = a·e12^# must be nonzero")
    algebra = LieAlgebra.from_brackets(4, prop21_brackets(p), name="prop21", unchecked=True)
    return algebra, canonical_type1(p.lam, p.a)


# Each entry is (label, polynomial). Together they are the distinct Jacobiator
# components of the canonical bracket.
_SYSTEM_S: Tuple[Tuple[str, Callable[[Prop21Params], Any]], ...] = (
    ("a1x1+a2x2", lambda p: p.a1 * p.x1 + p.a2 * p.x2),
    ("a1y1+a2y2", lambda p: p.a1 * p.y1 + p.a2 * p.y2),
    ("e123.1", lambda p: p.a1 * p.p1 + p.a2 * p.q1 - p.p1 * p.x2 + p.p2 * p.y2
        + p.q1 * p.x1 - p.q2 * p.y1),
    ("e123.2", lambda p: p.a1 * p.r1 - p.a2 * p.p1 - p.p1 * p.x1 + p.p2 * p.y1
        - p.r1 * p.x2 + p.r2 * p.y2),
    ("e124.1", lambda p: p.a1 * p.p2 + p.a2 * p.q2 - p.p1 * p.y2 - p.p2 * p.x2
        + p.q1 * p.y1 + p.q2 * p.x1),
    ("e124.2", lambda p: p.a1 * p.r2 - p.a2 * p.p2 - p.p1 * p.y1 - p.p2 * p.x1
        - p.r1 * p.y2 - p.r2 * p.x2),
    ("e134.1", lambda p: p.a1 * p.b2 - 2 * p.b1 * p.x1 - p.b3 * p.p1 - p.b4 * p.p2
        + p.q1 * p.r2 - p.q2 * p.r1),
    ("e234.4", lambda p: -p.b3 * p.y2 - p.b4 * p.x2 - p.p1 * p.x2 - p.p2 * p.y2
        + p.q1 * p.x1 + p.q2 * p.y1),
    ("e134.2", lambda p: p.a2 * p.b2 - 2 * p.b2 * p.x1 - p.b3 * p.r1 - p.b4 * p.r2
        - 2 * p.p1 * p.r2 + 2 * p.p2 * p.r1),
    ("e134.3", lambda p: -p.b3 * p.x1 + p.b4 * p.y1 + p.p1 * p.y1 - p.p2 * p.x1
        + p.r1 * p.y2 - p.r2 * p.x2),
    ("e134.4", lambda p: -p.b3 * p.y1 - p.b4 * p.x1 + p.p1 * p.x1 + p.p2 * p.y1
        + p.r1 * p.x2 + p.r2 * p.y2),
    ("e234.1", lambda p: -p.a1 * p.b1 - 2 * p.b1 * p.x2 - p.b3 * p.q1 - p.b4 * p.q2
        + 2 * p.p1 * p.q2 - 2 * p.p2 * p.q1),
    ("e234.2", lambda p: -p.a2 * p.b1 - 2 * p.b2 * p.x2 + p.b3 * p.p1 + p.b4 * p.p2
        - p.q1 * p.r2 + p.q2 * p.r1),
    ("e234.3", lambda p: -p.b3 * p.x2 + p.b4 * p.y2 - p.p1 * p.y2 + p.p2 * p.x2
        + p.q1 * p.y1 - p.q2 * p.x1),
)


@dataclass
class SystemReport:
    """Values of the quadratic system; ``passed`` iff every value is zero."""
    passed: bool
    values: Dict[str, Any] = field(default_factory=dict)

    @property
    def failing(self) -> List[str]:
        return [label for label, value in self.values.items() if value]


def system_S_check(p: Prop21Params) -> SystemReport:
    """Evaluate the quadratic system equivalent to Jacobi for the canonical bracket."""
    values = {label: equation(p) for label, equation in _SYSTEM_S}
    report = SystemReport(passed=not any(values.values()), values=values)
    if not report.passed:
        logger.debug(f"System fails on {report.failing}")
    return report


def unimodular_criterion_eq5(p: Prop21Params) -> bool:
    """``a2 + 2x1 = a1 − 2x2 = b4 = b3 = 0``."""
    return not any((p.a2 + 2 * p.x1, p.a1 - 2 * p.x2, p.b4, p.b3))


def eq6_matrix(p: Prop21Params) -> Matrix:
    """Closed form of the Killing form restricted to ``span(e1, e2)``."""
    off = -p.a1 * p.a2 + 2 * p.x1 * p.x2 - 2 * p.y1 * p.y2
    return Matrix.from_rows([
        [p.a2 ** 2 + 2 * p.x1 ** 2 - 2 * p.y1 ** 2, off],
        [off, p.a1 ** 2 + 2 * p.x2 ** 2 - 2 * p.y2 ** 2],
    ])


def _bind(values: Mapping[str, Any], names: Tuple[str, ...]) -> Dict[str, Any]:
    missing = [n for n in names if n not in values]
    extra = [n for n in values if n not in names]
    if missing or extra:
        raise DomainError(f"Family takes {list(names)}; missing {missing}, unexpected {extra}")
    return {n: qq(values[n]) for n in names}


@dataclass(frozen=True)
class NormalFamily:
    """A named normal form with its free parameters."""
    name: str
    params: Tuple[str, ...]
    build: Callable[[Dict[str, Any]], Dict[str, Any]]
    unimodular: bool
    constraint: Optional[Callable[[Dict[str, Any]], bool]] = None
    constraint_text: str = ""

    def __call__(self, lam: Any = 0, scale: Any = 1, **values: Any) -> Prop21Params:
        """Parameters at ``values`` with ``J``-eigenvalue ``lam`` and ``R = scale·e12^#``."""
        bound = _bind(values, self.params)
        if self.constraint is not None and not self.constraint(bound):
            raise DomainError(f"{self.name} requires {self.constraint_text}, got {bound}")
        return Prop21Params(lam=lam, a=scale, **self.build(bound))


HALF = qq("1/2")

NORMAL_FAMILIES: Dict[str, NormalFamily] = {
    family.name: family for family in (
        NormalFamily("U1", ("q1", "q2", "y"),
                     lambda v: dict(a1=1, x2=HALF, y2=v["y"], q1=v["q1"], q2=v["q2"]),
                     unimodular=True),
        NormalFamily("U2", ("b1", "b2", "y", "q1", "q2"),
                     lambda v: dict(b1=v["b1"], b2=v["b2"], y2=v["y"], q1=v["q1"],
                                    q2=v["q2"]),
                     unimodular=True),
        NormalFamily("U3", ("b1", "b2", "p", "q", "r"),
                     lambda v: dict(b1=v["b1"], b2=v["b2"], p2=v["p"], r2=v["r"], q2=v["q"]),
                     unimodular=True,
                     constraint=lambda v: abs(v["p"] ** 2 + v["q"] * v["r"]) in (0, 1),
                     constraint_text="|p² + qr| ∈ {0, 1}"),
        NormalFamily("B1", ("q1", "q2"),
                     lambda v: dict(a1=1, p2=1, x2=1, q1=-v["q1"], q2=-v["q2"], b1=v["q1"],
                                    b3=1),
                     unimodular=False),
        NormalFamily("B2", ("q1", "q2"),
                     lambda v: dict(a1=1, q1=-v["q1"], q2=-v["q2"], b1=v["q1"], b3=1),
                     unimodular=False),
        NormalFamily("B3", ("q1", "q2", "x", "y"),
                     lambda v: dict(a1=1, q1=v["q1"], q2=v["q2"], x2=v["x"], y2=v["y"]),
                     unimodular=False,
                     constraint=lambda v: v["x"] != HALF, constraint_text="x ≠ 1/2"),
        NormalFamily("B4", ("q1", "q2", "y"),
                     lambda v: dict(a1=1, q1=v["q1"], q2=v["q2"], x2=-HALF, y2=v["y"], b1=1),
                     unimodular=False),
        NormalFamily("A1", ("y1", "y2"),
                     lambda v: dict(x1=1, y1=v["y1"], y2=v["y2"]),
                     unimodular=False),
        NormalFamily("A2", ("x", "c", "a", "b"),
                     lambda v: dict(x1=v["x"], y1=v["c"] * v["x"], r1=v["a"], r2=v["b"]),
                     unimodular=False,
                     constraint=lambda v: bool(v["x"]) and bool(v["a"] or v["b"]),
                     constraint_text="x ≠ 0 and (a, b) ≠ (0, 0)"),
        NormalFamily("A3", ("b1", "b2", "b3", "p", "q", "r"),
                     lambda v: dict(b1=v["b1"], b2=v["b2"], b3=v["b3"], p2=-v["p"],
                                    r2=-v["r"], q2=-v["q"]),
                     unimodular=False,
                     constraint=lambda v: bool(v["b3"]), constraint_text="b3 ≠ 0"),
        NormalFamily("A4", ("b1", "b2", "q1", "q2"),
                     lambda v: dict(b1=v["b1"], b2=v["b2"], b3=-2, p2=1, q1=v["q1"],
                                    q2=v["q2"]),
                     unimodular=False,
                     constraint=lambda v: bool(v["q1"]), constraint_text="q1 ≠ 0"),
        NormalFamily("A5", ("p",),
                     lambda v: dict(b1=-v["p"] ** 2, b2=v["p"] ** 2, b3=2 * v["p"], x1=1,
                                    y1=1, p1=v["p"], r2=-v["p"], x2=1, y2=-1, q2=-v["p"]),
                     unimodular=False,
                     constraint=lambda v: bool(v["p"]), constraint_text="p ≠ 0"),
    )
}


def normal_family(name: str) -> NormalFamily:
    if name not in NORMAL_FAMILIES:
        raise DomainError(f"Unknown normal family '{name}'")
    return NORMAL_FAMILIES[name]


def a31_automorphism(u: Any, v: Any, x: Any, y: Any, p: Any = 0, r: Any = 0, s: Any = 0,
                     z: Any = 0, t: Any = 0, w: Any = 1) -> Matrix:
    """Automorphism of A3,1 ⊕ A1 in its general block form.

    Raises:
        DomainError: If ``uv − xy`` or ``w`` vanishes.
    """
    u, v, x, y, w = (qq(c) for c in (u, v, x, y, w))
    det = u * v - x * y
    if not det or not w:
        raise DomainError("A3,1 ⊕ A1 automorphisms need uv − xy ≠ 0 and w ≠ 0")
    return Matrix.from_rows([
        [det, p, r, s],
        [0, u, x, 0],
        [0, y, v, 0],
        [0, z, t, w],
    ])


def a31_cocycle(a12: Any = 0, a13: Any = 0, a23: Any = 0, a24: Any = 0,
                a34: Any = 0) -> Matrix:
    """General 2-cocycle of A3,1 ⊕ A1 as the displayed matrix; the (1, 4) entry vanishes."""
    return Matrix.from_rows([
        [0, a12, a13, 0],
        [-qq(a12), 0, a23, a24],
        [-qq(a13), -qq(a23), 0, a34],
        [0, -qq(a24), -qq(a34), 0],
    ])


def lambda_family_J(lam: Any) -> Matrix:
    """J-block ``λ(E11+E44) + E23 − E32`` of the λ-family on A3,1 ⊕ A1."""
    lam = qq(lam)
    return (E(1, 1) + E(4, 4)).scale(lam) + E(2, 3) - E(3, 2)
