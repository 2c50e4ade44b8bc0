"""Request and response models for the HTTP service."""

from __future__ import annotations

from typing import Literal, Optional, Union

from pydantic import BaseModel, Field


class ChartDoc(BaseModel):
    """Chart document; mirrors the JSON chart-file format."""

    n: int
    kind: Literal["builtin", "table"]
    name: str
    domain: Optional[list[list[float]]] = None
    axes: Optional[list[list[float]]] = None
    values: Optional[list] = None


class CheckRequest(BaseModel):
    space: Optional[str] = None
    chart: Optional[Union[str, ChartDoc]] = None
    at: Optional[list[float]] = None
    restarts: int = Field(default=20, ge=1)
    max_iters: int = Field(default=500, ge=1)
    seed: int = 0
    tol_res: float = Field(default=1e-10, gt=0)
    tol_grad: float = Field(default=1e-8, gt=0)
    step0: float = Field(default=0.1, gt=0)


class QuadrupleValue(BaseModel):
    ijkl: list[int]
    value: float


class CheckResponse(BaseModel):
    space: str
    n: int
    best_residual: float
    best_frame: list[list[float]]
    per_quadruple: list[QuadrupleValue]
    restarts: int
    seed: int
    converged: bool


class CertifyRequest(BaseModel):
    space: str
    seed: int = 0
    trials: int = Field(default=1000, ge=1)


class ComputedQuantity(BaseModel):
    quantity: str
    value: float


class CertificateModel(BaseModel):
    name: str
    passed: bool
    computed: list[ComputedQuantity]
    tolerance: float


class CertifyResponse(BaseModel):
    space: str
    all_passed: bool
    results: list[CertificateModel]


class CurvatureRequest(BaseModel):
    chart: Union[str, ChartDoc]
    at: Optional[list[float]] = None


class SectionalValue(BaseModel):
    ij: list[int]
    value: float


class CurvatureResponse(BaseModel):
    chart: str
    n: int
    at: list[float]
    sectional: list[SectionalValue]
    koszul_deviation: float
    distinct_quadruples: list[QuadrupleValue]
    max_distinct_quadruple: float


class LemmaRequest(BaseModel):
    trials: int = Field(default=1000, ge=1)
    seed: int = 0


class LemmaResponse(BaseModel):
    trials: int
    failures: int
    max_residual: float
    all_passed: bool
