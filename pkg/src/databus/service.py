"""Local HTTP/JSON service over the pure estimator.

All handlers are stateless; identical query strings produce byte-identical
responses (fixed field order, no timestamps).  Validation failures return
400 with field-level messages.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .presets import table_presets
from .tradeoff import ComputationProfile, estimate, sweep


def _profile(volume: float, patches: int, routing: float, p: float, epsilon: float,
             ancilla: int | None) -> ComputationProfile:
    """``patches`` counts data + ancilla together, split by the routing factor."""
    if ancilla is not None:
        q, a = patches - ancilla, ancilla
    else:
        q = round(patches / (1 + routing))
        a = patches - q
    return ComputationProfile(q, a, volume, p, epsilon)


def create_app(static_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="databus estimator", docs_url=None, redoc_url=None)

    @app.exception_handler(RequestValidationError)
    async def bad_query(request: Request, exc: RequestValidationError) -> JSONResponse:
        errors = [
            {"field": ".".join(str(p) for p in err["loc"][1:]) or str(err["loc"][-1]),
             "message": err["msg"]}
            for err in exc.errors()
        ]
        return JSONResponse(status_code=400, content={"errors": errors})

    @app.exception_handler(ValueError)
    async def bad_value(request: Request, exc: ValueError) -> JSONResponse:
        return JSONResponse(status_code=400, content={"errors": [{"message": str(exc)}]})

    @app.get("/api/health")
    async def health() -> dict:
        return {"status": "ok"}

    @app.get("/api/estimate")
    async def api_estimate(
        volume: float = Query(gt=0),
        patches: int = Query(ge=1),
        routing: float = Query(default=0.5, ge=0, le=1),
        p: float = Query(default=1e-3, gt=0),
        epsilon: float = Query(default=1e-2, gt=0, lt=1),
        ancilla: int | None = Query(default=None, ge=0),
        force_d_wo: int | None = Query(default=None, ge=3),
        force_d_with: int | None = Query(default=None, ge=3),
    ) -> JSONResponse:
        profile = _profile(volume, patches, routing, p, epsilon, ancilla)
        report = estimate(profile, force_d_wo=force_d_wo, force_d_with=force_d_with)
        return JSONResponse(content=report.to_dict())

    @app.get("/api/sweep")
    async def api_sweep(
        volume: float = Query(gt=0),
        patches: int = Query(ge=1),
        routing: float = Query(default=0.5, ge=0, le=1),
        p: float = Query(default=1e-3, gt=0),
        epsilon: float = Query(default=1e-2, gt=0, lt=1),
        ancilla: int | None = Query(default=None, ge=0),
        scale_min: float = Query(default=0.1, gt=0),
        scale_max: float = Query(default=10.0, gt=0),
        steps: int = Query(default=25, ge=1, le=500),
    ) -> JSONResponse:
        profile = _profile(volume, patches, routing, p, epsilon, ancilla)
        result = sweep(profile, scale_min, scale_max, steps)
        return JSONResponse(content=result.to_dict())

    @app.get("/api/presets")
    async def api_presets() -> JSONResponse:
        return JSONResponse(content=[p.to_dict() for p in table_presets()])

    root = Path(static_dir) if static_dir else Path(__file__).resolve().parents[2] / "frontend" / "dist"
    if root.is_dir():
        app.mount("/", StaticFiles(directory=str(root), html=True), name="ui")
    return app
