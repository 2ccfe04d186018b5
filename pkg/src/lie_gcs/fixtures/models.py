"""Pydantic models of the fixture corpus.

Every fixture is a JSON object ``{id, kind, locator, params, samples,
deviation, tolerated, payload}``. Text fields inside payloads are linear
combinations such as ``"lam*(E11 + E44) + E23 - E32"``, ``"-k*f14"`` or
``"f2 + I*f3"`` in the fixture's own parameter names; ``samples`` binds
those names to rationals.
"""

from typing import Any, Dict, List, Literal, Mapping, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..core.expressions import evaluate
from ..core.matrix import Matrix
from ..core.scalars import decode_rational, encode_rational
from ..exceptions import DomainError, NotAutomorphismError
from ..exterior.forms import CForm, GenVector
from ..gcs.triple import Triple, endomorphism_from_text, skew_from_text
from ..lie.algebra import LieAlgebra
from ..lie.catalogue import CatalogueKey, catalogue_build

FixtureKind = Literal[
    "algebra", "triple", "conjugation", "kahler_pair", "transport", "cohomology_expected"
]
KINDS = ("algebra", "triple", "conjugation", "kahler_pair", "transport", "cohomology_expected")

Bindings = Dict[str, Any]


class AlgebraRef(BaseModel):
    """A catalogue name whose parameters are expressions in the fixture parameters."""
    model_config = ConfigDict(frozen=True)

    name: str
    params: Dict[str, str] = Field(default_factory=dict)

    def key(self, bindings: Mapping[str, Any]) -> CatalogueKey:
        return CatalogueKey(name=self.name, params={
            k: encode_rational(evaluate(expr, bindings)) for k, expr in self.params.items()})

    def build(self, bindings: Mapping[str, Any]) -> LieAlgebra:
        return catalogue_build(self.key(bindings))


class TripleText(BaseModel):
    model_config = ConfigDict(frozen=True)

    J: str
    R: str
    sigma: str

    def build(self, bindings: Mapping[str, Any], n: int = 4) -> Triple:
        return Triple.from_text(self.J, self.R, self.sigma, n=n, bindings=bindings)


class OpText(BaseModel):
    """One recorded transformation; ``matrix`` is an endomorphism for ``phi``
    and a skew form for ``b``. With ``inverse`` a ``phi`` acts by the inverse
    of the printed matrix."""
    op: Literal["phi", "b", "sign_flip", "homothety"]
    matrix: Optional[str] = None
    c: Optional[str] = None
    inverse: bool = False

    def resolve(self, bindings: Mapping[str, Any], n: int = 4) -> Dict[str, Any]:
        if self.op == "phi":
            A = endomorphism_from_text(self._require(), n, bindings)
            if self.inverse:
                A = A.inverse()
                if A is None:
                    raise NotAutomorphismError(f"Cannot invert the singular matrix '{self.matrix}'")
            return {"op": "phi", "A": A}
        if self.op == "b":
            return {"op": "b", "B": skew_from_text(self._require(), n, bindings)}
        if self.op == "homothety":
            return {"op": "homothety", "c": evaluate(self.c or "1", bindings)}
        return {"op": "sign_flip"}

    def _require(self) -> str:
        if self.matrix is None:
            raise DomainError(f"Operation '{self.op}' needs a matrix")
        return self.matrix


class AlgebraPayload(BaseModel):
    algebra: AlgebraRef
    brackets: Dict[str, str] = Field(default_factory=dict)
    unimodular: bool
    cocycle_dim: int

    def expected_brackets(self) -> Dict[tuple, tuple]:
        """``{"23": "v1"}`` read as ``[e2, e3] = e1``."""
        result = {}
        for pair, text in self.brackets.items():
            if len(pair) != 2 or not pair.isdigit():
                raise DomainError(f"Bracket key '{pair}' is not two digits")
            result[(int(pair[0]), int(pair[1]))] = GenVector.from_text(text, 4).X
        return result


class TriplePayload(BaseModel):
    algebra: AlgebraRef
    triple: TripleText
    type: int = 1
    rho: Optional[str] = None
    admissible: Optional[str] = None

    def rho_form(self, bindings: Mapping[str, Any]) -> Optional[CForm]:
        return CForm.from_text(self.rho, 4, bindings) if self.rho else None

    def admissible_vector(self, bindings: Mapping[str, Any]) -> Optional[GenVector]:
        return GenVector.from_text(self.admissible, 4, bindings) if self.admissible else None


class ConjugationPayload(BaseModel):
    """A recorded sequence of ``ops`` taking ``source`` to ``target``.

    The ops apply left to right, so a printed ``exp(B)φ(T)(…)`` is stored as
    ``[phi T, b B]``. ``when`` bounds the parameters of the identity.
    """
    algebra: AlgebraRef
    when: List[str] = Field(default_factory=list)
    source: TripleText
    ops: List[OpText]
    target: TripleText


class KahlerPayload(BaseModel):
    """A recorded generalized Kähler pair, checked with its bihermitian data."""
    name: str
    positive: bool = True


class TransportPayload(BaseModel):
    """A normal family moved onto a catalogue algebra.

    ``when`` holds the predicates bounding the row the passage belongs to;
    ``expected`` is the printed image, when one is printed.
    """
    family: str
    values: Dict[str, str]
    lam: str = "0"
    a: str = "1"
    when: List[str] = Field(default_factory=list)
    passage: List[str]
    target: AlgebraRef
    expected: Optional[TripleText] = None
    equivalence: Literal["equal", "sign_flip"] = "equal"

    def passage_matrix(self, bindings: Mapping[str, Any]) -> Matrix:
        """Columns are the target basis vectors written in the source basis."""
        columns = [GenVector.from_text(text, 4, bindings).X for text in self.passage]
        return Matrix.from_columns(columns)


class CohomologyExpected(BaseModel):
    gh_del: Dict[str, int]
    gh_bc: Dict[str, int]
    gh_a: Dict[str, int]
    d_rho_zero: bool
    im_dbar_minus1_zero: bool


class CohomologyPayload(BaseModel):
    """Expected dimensions for the structure of a ``triple`` fixture."""
    triple: str
    expected: CohomologyExpected


PAYLOADS = {
    "algebra": AlgebraPayload,
    "triple": TriplePayload,
    "conjugation": ConjugationPayload,
    "kahler_pair": KahlerPayload,
    "transport": TransportPayload,
    "cohomology_expected": CohomologyPayload,
}


class Fixture(BaseModel):
    """One corpus entry with its sample parameter points."""
    id: str
    kind: FixtureKind
    locator: str
    params: List[str] = Field(default_factory=list)
    samples: List[Dict[str, str]] = Field(default_factory=lambda: [{}])
    deviation: Optional[str] = None
    tolerated: List[str] = Field(default_factory=list)
    payload: Dict[str, Any]

    @field_validator("locator")
    @classmethod
    def locator_not_empty(cls, v):
        """Every fixture points back to where its data comes from."""
        if not v.strip():
            raise ValueError("Fixture locator must not be empty")
        return v

    def typed(self) -> Any:
        return PAYLOADS[self.kind].model_validate(self.payload)

    def bindings(self) -> List[Bindings]:
        """Sample points with every declared parameter bound to a rational."""
        result = []
        for sample in self.samples:
            missing = [p for p in self.params if p not in sample]
            if missing:
                raise DomainError(f"Fixture {self.id}: sample {sample} misses {missing}")
            result.append({k: decode_rational(v) for k, v in sample.items()})
        return result

    def instance_id(self, bindings: Mapping[str, Any]) -> str:
        if not bindings:
            return self.id
        bound = ",".join(f"{k}={encode_rational(v)}" for k, v in sorted(bindings.items()))
        return f"{self.id}[{bound}]"


class ManifestEntry(BaseModel):
    id: str
    kind: FixtureKind
    locator: str
    file: str


class Manifest(BaseModel):
    version: int
    files: Dict[str, str]
    fixtures: List[ManifestEntry]
