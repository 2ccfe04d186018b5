"""Named generalized Kähler pairs, their bihermitian data and the type-0 scan."""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Mapping, Optional, Tuple

from ..core.expressions import evaluate
from ..core.matrix import Matrix
from ..core.scalars import qq
from ..exceptions import DomainError
from ..exterior.forms import CForm, ce_d
from ..gcs.courant import nijenhuis_J
from ..gcs.poisson import holomorphic_poisson_check
from ..gcs.transforms import b_transform, homothety
from ..gcs.triple import Triple, build_K, endomorphism_from_text, negate, sign_flip
from ..lie.algebra import LieAlgebra, cocycle_basis
from ..lie.catalogue import CatalogueKey, catalogue_build
from .pairs import KahlerPair, commutes, is_positive
from .riemann import InvariantMetric, is_hermitian, levi_civita, riemann, ricci_operator

logger = logging.getLogger(__name__)

KAHLER_ALGEBRAS = ("A3_6xA1", "A2x2A1", "2A2", "A4_6")


def _positive(params: Mapping[str, Any], name: str, default: Any = 1) -> Any:
    value = qq(params.get(name, default))
    if value <= 0:
        raise DomainError(f"Parameter {name} must be positive, got {value}")
    return value


def _bindings(name: str, params: Optional[Mapping[str, Any]]) -> Dict[str, Any]:
    if name not in KAHLER_ALGEBRAS:
        raise DomainError(f"No generalized Kähler pair is recorded for '{name}'")
    params = dict(params or {})
    bound = {"rho": _positive(params, "rho")}
    if name == "2A2":
        bound["r"] = _positive(params, "r")
    if name == "A4_6":
        bound["alpha"] = qq(params.get("alpha", 1))
        if not bound["alpha"]:
            raise DomainError("A4_6 needs alpha ≠ 0")
    return bound


def algebra_key(name: str, params: Optional[Mapping[str, Any]] = None) -> CatalogueKey:
    bound = _bindings(name, params)
    if name == "A4_6":
        return CatalogueKey(name=name, params={"alpha": bound["alpha"], "beta": 0})
    return CatalogueKey(name=name)


# (J₁, R₁, σ₁), (J₂, R₂, σ₂) as text in the parameters rho, r.
_PAIRS: Dict[str, Tuple[Tuple[str, str, str], Tuple[str, str, str]]] = {
    "A3_6xA1": (("E12 - E21", "-f34", "-f34"),
                ("rho*E43 - 1/rho*E34", "f12", "f12")),
    "A2x2A1": (("E34 - E43", "-f12", "-f12"),
               ("rho*E21 - 1/rho*E12", "f34", "f34")),
    "2A2": (("E34 - E43", "-f12", "-f12"),
            ("rho*E21 - 1/rho*E12", "r*f34", "1/r*f34")),
    "A4_6": (("E23 - E32", "-f14", "-f14"),
             ("rho*E41 - 1/rho*E14", "f23", "f23")),
}


def theorem41_fixture(name: str, params: Optional[Mapping[str, Any]] = None) -> KahlerPair:
    """The generalized Kähler pair listed for ``name``.

    Args:
        name: One of ``A3_6xA1``, ``A2x2A1``, ``2A2``, ``A4_6``
        params: ``rho > 0``, ``r > 0`` for ``2A2`` and ``alpha ≠ 0`` for ``A4_6``

    Raises:
        DomainError: On unknown names or out-of-domain parameters.
    """
    bound = _bindings(name, params)
    L = catalogue_build(algebra_key(name, bound))
    first, second = (Triple.from_text(*texts, bindings=bound) for texts in _PAIRS[name])
    return KahlerPair(L, first, second)


# Listed metric diagonal and I₊; I₋ = −I₊ throughout.
_BIHERMITIAN: Dict[str, Tuple[Tuple[str, ...], str]] = {
    "A3_6xA1": (("2", "2", "2*rho", "2/rho"), "E12 - E21 + 1/rho*E34 - rho*E43"),
    "A2x2A1": (("2*rho", "2/rho", "2", "2"), "1/rho*E12 - rho*E21 + E34 - E43"),
    "2A2": (("2*rho", "2/rho", "2/r", "2/r"), "1/rho*E12 - rho*E21 + E34 - E43"),
    "A4_6": (("2*rho", "1", "1", "2/rho"), "1/rho*E14 - rho*E41 + E23 - E32"),
}


def expected_ricci(name: str, params: Optional[Mapping[str, Any]] = None) -> Matrix:
    """The displayed Ricci operator of the listed metric."""
    bound = _bindings(name, params)
    if name == "A3_6xA1":
        text = "0"
    elif name == "A2x2A1":
        text = "-1/(2*rho)*(E11 + E22)"
    elif name == "2A2":
        text = "-1/(2*rho)*(E11 + E22) - r/2*(E33 + E44)"
    else:
        text = "-rho*alpha**2/2*(E11 + E44)"
    return endomorphism_from_text(text, bindings=bound)


@dataclass
class BihermitianData:
    g: InvariantMetric
    I_plus: Matrix
    I_minus: Matrix


def bihermitian_data(name: str, params: Optional[Mapping[str, Any]] = None) -> BihermitianData:
    bound = _bindings(name, params)
    diagonal, I_text = _BIHERMITIAN[name]
    g = InvariantMetric.diagonal([evaluate(entry, bound) for entry in diagonal])
    I_plus = endomorphism_from_text(I_text, bindings=bound)
    return BihermitianData(g=g, I_plus=I_plus, I_minus=-I_plus)


def pair_metric(p: KahlerPair) -> Optional[Matrix]:
    """``g`` with ``K₁K₂ = [[0, g⁻¹], [g, 0]]``, or ``None`` when a B-field part is present."""
    n = p.n
    product = p.K1 @ p.K2
    top_left = product.submatrix(range(n), range(n))
    if not top_left.is_zero():
        return None
    return product.submatrix(range(n, 2 * n), range(n))


def pair_I_plus(p: KahlerPair, g: Matrix) -> Matrix:
    """``K₁`` restricted to the graph of ``g``, projected to 𝔤: ``J₁ + R₁g``."""
    return p.first.J + p.first.R @ g


@dataclass
class BihermitianReport:
    """Checks on the listed bihermitian data of one pair."""
    hermitian: Dict[str, bool] = field(default_factory=dict)
    complex: Dict[str, bool] = field(default_factory=dict)
    integrable: Dict[str, bool] = field(default_factory=dict)
    kahler_form_closed: bool = False
    ricci: Optional[Matrix] = None
    expected_ricci: Optional[Matrix] = None
    flat: bool = False
    einstein: Optional[Any] = None
    metric_matches_pair: Optional[bool] = None
    I_plus_matches_pair: Optional[bool] = None

    @property
    def ricci_matches(self) -> bool:
        return (self.ricci is not None and self.expected_ricci is not None
                and (self.ricci - self.expected_ricci).is_zero())

    @property
    def passed(self) -> bool:
        return (all(self.hermitian.values()) and all(self.complex.values())
                and all(self.integrable.values()) and self.kahler_form_closed
                and self.ricci_matches)


def bihermitian_check(name: str, params: Optional[Mapping[str, Any]] = None) -> BihermitianReport:
    """Verify the listed ``(g, I₊, I₋)`` for one of the recorded pairs.

    Hermitian and integrable ``I±``, closed Kähler form ``g(I₊·, ·)``, and the
    Ricci operator equal to the displayed one. The listed data are also
    compared with what the pair itself induces: ``2g`` against ``K₁K₂`` and
    ``I₊`` against ``J₁ + R₁g``.
    """
    bound = _bindings(name, params)
    p = theorem41_fixture(name, bound)
    data = bihermitian_data(name, bound)
    L = p.L
    report = BihermitianReport()
    for label, I in (("I_plus", data.I_plus), ("I_minus", data.I_minus)):
        report.hermitian[label] = is_hermitian(data.g, I)
        report.complex[label] = (I @ I + Matrix.identity(4)).is_zero()
        report.integrable[label] = nijenhuis_J(L, I).passed
    report.kahler_form_closed = ce_d(L, CForm.from_skew(data.g.g @ data.I_plus)).is_zero()
    curvature = riemann(L, data.g, levi_civita(L, data.g))
    report.flat = curvature.is_flat()
    report.ricci = ricci_operator(L, data.g)
    report.expected_ricci = expected_ricci(name, bound)
    c = report.ricci[0, 0]
    if (report.ricci - Matrix.identity(4).scale(c)).is_zero():
        report.einstein = c
    induced = pair_metric(p)
    if induced is not None:
        report.metric_matches_pair = (induced.scale(2) - data.g.g).is_zero()
        report.I_plus_matches_pair = (pair_I_plus(p, induced) - data.I_plus).is_zero()
        if not report.metric_matches_pair:
            logger.warning(f"{name}: listed metric {data.g.g.to_list()} differs from the "
                           f"pair-induced {induced.scale(2).to_list()}")
    if not report.ricci_matches:
        logger.error(f"{name}: Ricci operator {report.ricci.to_list()}, "
                     f"displayed {report.expected_ricci.to_list()}")
    return report


# Holomorphic Poisson structures (J, R) on the algebras admitting type-0 structures.
_POISSON: Tuple[Tuple[str, Dict[str, str], str, str], ...] = (
    ("A3_1xA1", {}, "E41 - E14 + E32 - E23", "f12 + f34"),
    ("A4_5", {"alpha": "-1", "beta": "1"}, "E31 - E13 + E42 - E24", "f23 - f14"),
    ("A4_9", {"beta": "-1/2"}, "E21 - E12 + 2*E43 - 1/2*E34",
     "c*(f24 - 1/2*f13) + s*(f14 + 1/2*f23)"),
    ("A4_12", {}, "E12 - E21 + E43 - E34", "f23 - f14"),
)

# cos θ, sin θ at a rational point of the circle
ROTATION = (qq("3/5"), qq("4/5"))


def theorem32_structures(
        rotation: Tuple[Any, Any] = ROTATION) -> List[Tuple[CatalogueKey, LieAlgebra, Triple]]:
    """The holomorphic Poisson structures as type-0 triples ``(J, R, 0)``.

    Raises:
        DomainError: If ``rotation`` is not a point of the unit circle.
    """
    c, s = qq(rotation[0]), qq(rotation[1])
    if c * c + s * s != 1:
        raise DomainError(f"({c}, {s}) is not on the unit circle")
    structures = []
    for name, params, J, R in _POISSON:
        key = CatalogueKey(name=name, params=params)
        L = catalogue_build(key)
        structures.append((key, L, Triple.from_text(J, R, "0", bindings={"c": c, "s": s})))
    return structures


@dataclass
class ScanReport:
    """Outcome of pairing type-0 structures; a finite check, not a proof."""
    algebras: List[str] = field(default_factory=list)
    candidates: int = 0
    pairs_tested: int = 0
    commuting: int = 0
    positive: List[Tuple[str, int, int]] = field(default_factory=list)
    poisson_failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.positive and not self.poisson_failures


def _candidates(L: LieAlgebra, t: Triple, coefficients: Tuple[int, ...]) -> List[Triple]:
    variants: List[Callable[[Triple], Triple]] = [
        lambda x: x, sign_flip, negate,
        lambda x: homothety(x, 2), lambda x: homothety(x, qq("1/2")),
    ]
    found = [make(t) for make in variants]
    K = build_K(t)
    for B in cocycle_basis(L):
        for c in coefficients:
            found.append(b_transform(K, B.scale(c), L).to_triple())
    return found


def theorem42_scan(coefficients: Tuple[int, ...] = (1, -1, 2)) -> ScanReport:
    """Pair every type-0 candidate with every other on the same algebra and look for positive ``G``.

    Candidates are the holomorphic Poisson structures, their sign flips,
    negatives, homotheties and B-transforms along a cocycle basis.
    """
    report = ScanReport()
    for key, L, t in theorem32_structures():
        report.algebras.append(str(key))
        poisson = holomorphic_poisson_check(L, t.J, t.R)
        if not poisson.passed:
            report.poisson_failures.append(str(key))
            continue
        candidates = _candidates(L, t, coefficients)
        report.candidates += len(candidates)
        for i, a in enumerate(candidates):
            for j, b in enumerate(candidates):
                report.pairs_tested += 1
                if not commutes(a, b):
                    continue
                report.commuting += 1
                if is_positive(KahlerPair(L, a, b)):
                    logger.warning(f"{key}: positive type-0 pair at candidates ({i}, {j})")
                    report.positive.append((str(key), i, j))
    logger.info(f"Type-0 scan: {report.pairs_tested} pairs, {report.commuting} commuting, "
                f"{len(report.positive)} positive")
    return report
