"""Pydantic request/response models for the HTTP API and the CLI client."""

from pydantic import BaseModel, Field


class PermModel(BaseModel):
    type: str = Field(pattern="^[CD]$")
    oneLine: list[int]


class WeightModel(BaseModel):
    n: int
    coords2: list[int]
    display: list[str] | None = None


class TableauModel(BaseModel):
    rows: list[list[int]]


class SymbolModel(BaseModel):
    type: str = Field(pattern="^[CD]$")
    n: int
    top: list[int]
    bottom: list[int]


class NormalFormModel(BaseModel):
    alg: str = Field(pattern="^(o|sp)$")
    v: int = 0
    L: dict[str, int] = {}
    m: int = 0
    R: bool = False
    Einf: bool = False


class TripleModel(BaseModel):
    x: int
    y: str
    Z: list[int] = []


# ---- requests -----------------------------------------------------------

class RsRequest(BaseModel):
    seq: list[int]


class RsResponse(BaseModel):
    insertion: TableauModel
    recording: TableauModel
    steps: list[dict]


class ElementRequest(BaseModel):
    perm: PermModel


class LengthResponse(BaseModel):
    length: int


class BruhatRequest(BaseModel):
    x: PermModel
    y: PermModel


class BoolResponse(BaseModel):
    value: bool


class DotRequest(BaseModel):
    perm: PermModel
    weight: list[str]
    rho: list[str] | None = None   # defaults to the rho of the group


class ClassesRequest(BaseModel):
    type: str = Field(pattern="^[CD]$")
    coords: list[str]


class ClassesResponse(BaseModel):
    classes: list[dict]


class TableauxOfElementResponse(BaseModel):
    insertion: TableauModel
    recording: TableauModel
    shape: list[int]


class SymbolOfElementResponse(BaseModel):
    symbol: SymbolModel
    special: bool
    nu: list[int]


class SymbolRequest(BaseModel):
    symbol: SymbolModel


class FactoredSymbolRequest(BaseModel):
    perm: PermModel
    coords: list[str]


class FactoredSymbolResponse(BaseModel):
    first: SymbolModel
    second: SymbolModel


class SystemSpec(BaseModel):
    """A Coxeter system: named type with rank, or an explicit matrix."""
    type: str = Field(default="C", pattern="^(A|C|D|matrix)$")
    rank: int = 2
    matrix: list[list[int]] | None = None


class KlTableRequest(BaseModel):
    system: SystemSpec


class KlEntry(BaseModel):
    x: list
    y: list
    P: list[list[int]]


class KlTableResponse(BaseModel):
    entries: list[KlEntry]


class ElementRef(BaseModel):
    oneLine: list[int] | None = None
    word: list[int] | None = None


class KlPolynomialRequest(BaseModel):
    system: SystemSpec
    x: ElementRef
    y: ElementRef


class PolynomialResponse(BaseModel):
    P: list[list[int]]   # [exponent in q, coefficient]


class HeckeTerm(BaseModel):
    element: ElementRef
    coeffs: list[list[int]]   # [exponent in half units, coefficient]


class HeckeElementModel(BaseModel):
    terms: list[HeckeTerm]


class HeckeBinaryRequest(BaseModel):
    system: SystemSpec
    a: HeckeElementModel
    b: HeckeElementModel


class HeckeUnaryRequest(BaseModel):
    system: SystemSpec
    a: HeckeElementModel


class HeckeResponse(BaseModel):
    result: HeckeElementModel


class TupleRequest(BaseModel):
    alg: str = Field(pattern="^(o|sp)$")
    tuple: list[str]


class TupleSetResponse(BaseModel):
    tuples: list[list[str]]


class ChainRequest(BaseModel):
    alg: str = Field(pattern="^(o|sp)$")
    from_: list[str] = Field(alias="from")
    to: list[str]

    model_config = {"populate_by_name": True}


class CriterionRequest(BaseModel):
    alg: str = Field(pattern="^(o|sp)$")
    lam: list[str]
    mu: list[str]


class CriterionResponse(BaseModel):
    criterion: bool
    chain: bool


class InsertRequest(BaseModel):
    alg: str = Field(pattern="^(o|sp)$")
    tuple: list[str]
    k: str
    side: str = Field(pattern="^(left|right)$")


class TupleResponse(BaseModel):
    tuple: list[str]


class BoundedRequest(BaseModel):
    tuple: list[str]


class BoundedResponse(BaseModel):
    bounded: bool
    finite_dimensional: bool


class TensorRequest(BaseModel):
    tuple: list[str]
    j: int = 0


class TensorResponse(BaseModel):
    shifts: list[list[str]]
    constituents: list[list[str]]


class FromTripleRequest(BaseModel):
    alg: str = Field(pattern="^(o|sp)$")
    triple: TripleModel


class NormalFormResponse(BaseModel):
    nf: NormalFormModel


class ProductRequest(BaseModel):
    a: NormalFormModel
    b: NormalFormModel


class LevelRequest(BaseModel):
    nf: NormalFormModel | None = None
    alg: str | None = None
    triple: TripleModel | None = None
    n: int
    bound: int | None = None


class PlsRequest(BaseModel):
    alg: str = Field(pattern="^(o|sp)$")
    tuple: list[str]
    width: int
    bound: int


class ClassifyRequest(BaseModel):
    alg: str = Field(default="sp", pattern="^(o|sp)$")
    x: int
    y: str
    Z: list[int] = []
    n: int


class ClassifyResponse(BaseModel):
    weight: WeightModel
    nf: NormalFormModel
    g: list[str]


class SeparateRequest(BaseModel):
    alg: str = Field(default="sp", pattern="^(o|sp)$")
    t1: TripleModel
    t2: TripleModel
    nmax: int = 5
    bound: int = 6


class SeparateResponse(BaseModel):
    separated: bool
    status: str
    certificate: dict | None = None


class EquivRequest(BaseModel):
    w1: PermModel
    w2: PermModel


class TauRequest(BaseModel):
    perm: PermModel
    i: int


class WindowRequest(BaseModel):
    h: list[int]
    r: int


class WindowResponse(BaseModel):
    k: int
    window: list[int]
    r: int
    f: int


class DimensionRequest(BaseModel):
    alg: str = Field(pattern="^(o|sp)$")
    tuple: list[str]


class IntResponse(BaseModel):
    value: int


class ErrorResponse(BaseModel):
    error: str
    detail: str
