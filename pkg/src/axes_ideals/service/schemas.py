"""Request/response models for the HTTP service."""
from __future__ import annotations

from typing import Literal, Optional, Union

from pydantic import BaseModel, Field, model_validator

Monomial = Union[str, list[int]]


class IdealPayload(BaseModel):
    n: int = Field(ge=1)
    gens: list[list[int]]


class IdealSelector(BaseModel):
    """Exactly one of `axes` (coordinate-axes ideal in N variables) or an
    explicit generator list."""

    axes: Optional[int] = None
    ideal: Optional[IdealPayload] = None

    @model_validator(mode="after")
    def _exactly_one(self):
        if (self.axes is None) == (self.ideal is None):
            raise ValueError("provide exactly one of 'axes' or 'ideal'")
        return self


class MemberRequest(IdealSelector):
    monomial: Monomial
    m: int
    mode: Literal["ordinary", "symbolic"] = "ordinary"
    engine: Optional[Literal["fast", "core", "oracle"]] = None
    explain: bool = False


class MemberResponse(BaseModel):
    member: bool
    mode: str
    engine: str
    explanation: Optional[str] = None


class CertifyRequest(BaseModel):
    n: int
    m: int
    monomial: Monomial


class CertificateModel(BaseModel):
    n: int
    m: int
    pairs: list[tuple[int, int]]


class CertifyResponse(BaseModel):
    member: bool
    certificate: Optional[CertificateModel] = None
    reason: Optional[str] = None


class VerifyRequest(BaseModel):
    certificate: CertificateModel
    monomial: Monomial


class VerifyResponse(BaseModel):
    valid: bool
    reason: Optional[str] = None


class PowerRequest(IdealSelector):
    m: int


class SymbolicRequest(IdealSelector):
    k: int


class IdealResponse(BaseModel):
    n: int
    gens: list[list[int]]


class IntersectRequest(BaseModel):
    ideals: list[IdealPayload]
    axes: Optional[int] = None

    @model_validator(mode="after")
    def _enough_operands(self):
        if len(self.ideals) + (self.axes is not None) < 2:
            raise ValueError("intersect needs at least two operands")
        return self


class ContainsRequest(BaseModel):
    """Either axes with m (outer, ordinary) and d (inner, symbolic), or two
    explicit ideals."""

    axes: Optional[int] = None
    m: Optional[int] = None
    d: Optional[int] = None
    outer: Optional[IdealPayload] = None
    inner: Optional[IdealPayload] = None

    @model_validator(mode="after")
    def _one_form(self):
        axes_form = self.axes is not None and self.m is not None and self.d is not None
        file_form = self.outer is not None and self.inner is not None
        if axes_form == file_form:
            raise ValueError("provide 'axes' with 'm' and 'd', or both 'outer' and 'inner'")
        return self


class ContainsResponse(BaseModel):
    contains: bool
    witness: Optional[list[int]] = None


class PrimesRequest(IdealSelector):
    pass


class PrimesResponse(BaseModel):
    n: int
    primes: list[list[int]]


class GuardModel(BaseModel):
    max_n: int = 8
    max_m: int = 10
    max_degree: int = 40


class SurveyRequest(BaseModel):
    n_values: list[int]
    m_values: list[int]
    guard: Optional[GuardModel] = None


class SurveyRowModel(BaseModel):
    n: int
    m: int
    d_min: int
    paper_bound: int
    els_bound: int
    witness: Optional[list[int]] = None


class SurveyResponse(BaseModel):
    rows: list[SurveyRowModel]


class CheckRequest(BaseModel):
    suite: Literal["decomposition", "symbolic", "engines", "all"] = "all"
    n_values: list[int]
    m_values: list[int]
    guard: Optional[GuardModel] = None


class CheckCell(BaseModel):
    check: str
    n: int
    m: int
    passed: bool


class CheckResponse(BaseModel):
    passed: bool
    cells: list[CheckCell]


class HealthResponse(BaseModel):
    status: str
    version: str
