"""HTTP service wrapping the library; the CLI is a thin client of these routes."""

from __future__ import annotations

import itertools

import numpy as np
from fastapi import FastAPI, HTTPException

from ..certificates import cp2_certificate_suite, hpq_certificate_suite, lemma_battery
from ..charts import (
    chart_from_json,
    chart_from_spec,
    curvature_oracle_at,
    diagonal_curvature,
    koszul_check,
)
from ..errors import OrthoCoordsError
from ..obstruction import ResidualSpec, SearchConfig, minimize
from ..oracles import oracle_for
from ..spaces import parse_space
from .schemas import (
    CertifyRequest,
    CertifyResponse,
    ChartDoc,
    CheckRequest,
    CheckResponse,
    CurvatureRequest,
    CurvatureResponse,
    LemmaRequest,
    LemmaResponse,
)

app = FastAPI(
    title="orthocoords",
    description="Curvature obstructions to orthogonal coordinates: "
                "residual search, chart curvature, and proof-step certificates.",
    version="0.1.0",
)


def _bad_request(exc: Exception):
    raise HTTPException(status_code=400, detail=str(exc))


def _resolve_chart(chart):
    if isinstance(chart, ChartDoc):
        return chart_from_json(chart.model_dump())
    return chart_from_spec(chart)


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/check", response_model=CheckResponse)
def check(req: CheckRequest) -> CheckResponse:
    """Run the obstruction-residual search on a model space or chart point."""
    try:
        if req.space is not None and req.chart is None:
            family = req.space.split(":", 1)[0]
            if family in ("flat", "sphere", "cp", "hp"):
                space = parse_space(req.space)
                oracle = oracle_for(space)
                label = space.label
            else:
                # anything else names a chart (builtin spec or JSON path)
                chart = chart_from_spec(req.space)
                point = np.asarray(req.at, float) if req.at else chart.center()
                oracle = curvature_oracle_at(chart, point)
                label = f"chart:{chart.name}"
        elif req.chart is not None:
            chart = _resolve_chart(req.chart)
            point = np.asarray(req.at, float) if req.at else chart.center()
            oracle = curvature_oracle_at(chart, point)
            label = f"chart:{chart.name}"
        else:
            raise HTTPException(status_code=400, detail="need either 'space' or 'chart'")
        cfg = SearchConfig(restarts=req.restarts, max_iters=req.max_iters,
                           step0=req.step0, tol_grad=req.tol_grad,
                           tol_res=req.tol_res, seed=req.seed)
        report = minimize(ResidualSpec(oracle), cfg, space_label=label)
    except (OrthoCoordsError, ValueError) as exc:
        _bad_request(exc)
    return CheckResponse(**report.to_dict())


@app.post("/certify", response_model=CertifyResponse)
def certify(req: CertifyRequest) -> CertifyResponse:
    """Run a proof-step certificate chain: cp:2 or hp:q with q >= 2."""
    try:
        space = parse_space(req.space)
        if space.family == "cp" and space.index == 2:
            results = cp2_certificate_suite(seed=req.seed)
        elif space.family == "hp" and space.index >= 2:
            results = hpq_certificate_suite(space.index, trials=req.trials, seed=req.seed)
        else:
            raise HTTPException(status_code=400,
                                detail=f"no certificate chain for {space.label}; "
                                       "supported: cp:2 and hp:q with q >= 2")
        payload = [r.to_dict() for r in results]
    except (OrthoCoordsError, ValueError) as exc:
        _bad_request(exc)
    return CertifyResponse(space=space.label,
                           all_passed=all(r["passed"] for r in payload),
                           results=payload)


@app.post("/curvature", response_model=CurvatureResponse)
def curvature(req: CurvatureRequest) -> CurvatureResponse:
    """Frame curvature of a diagonal chart at a point."""
    try:
        chart = _resolve_chart(req.chart)
        point = np.asarray(req.at, float) if req.at else chart.center()
        R = diagonal_curvature(chart, point)
        koszul = koszul_check(chart, point)
    except (OrthoCoordsError, ValueError) as exc:
        _bad_request(exc)
    n = chart.n
    sectional = [{"ij": [i, j], "value": float(R[i, j, i, j])}
                 for i in range(n) for j in range(i + 1, n)]
    quads = [{"ijkl": [i, j, k, l], "value": float(R[i, j, k, l])}
             for i, j in itertools.combinations(range(n), 2)
             for k, l in itertools.combinations(range(n), 2)
             if len({i, j, k, l}) == 4]
    max_quad = max((abs(q["value"]) for q in quads), default=0.0)
    return CurvatureResponse(
        chart=chart.name,
        n=n,
        at=[float(v) for v in np.asarray(point, float)],
        sectional=sectional,
        koszul_deviation=koszul,
        distinct_quadruples=quads,
        max_distinct_quadruple=max_quad,
    )


@app.post("/lemma", response_model=LemmaResponse)
def lemma(req: LemmaRequest) -> LemmaResponse:
    """Random-instance battery for the complex-span decomposition lemma."""
    result = lemma_battery(trials=req.trials, seed=req.seed)
    computed = dict(result.computed)
    return LemmaResponse(
        trials=int(computed["trials"]),
        failures=int(computed["failures"]),
        max_residual=computed["max_residual"],
        all_passed=result.passed,
    )
