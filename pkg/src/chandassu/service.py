"""Stateless HTTP analysis service backing the composition UI.

POST /api/v1/analyze runs the full pipeline on one padyam (auto-detecting
the meter when no type is given) and returns the same bytes the CLI's
structured output produces. GET /api/v1/types lists the supported meters
and which micro-scores apply to each. No request mutates server state.
"""

from __future__ import annotations

from typing import Optional

from fastapi import FastAPI, HTTPException, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .errors import InputError, UnknownTypeError
from .meter_config import list_types, load_config
from .report import analysis_payload, payload_json

MAX_TEXT_BYTES = 64 * 1024


class AnalyzeRequest(BaseModel):
    text: str
    type_name: Optional[str] = None


def create_app(config_dir=None) -> FastAPI:
    app = FastAPI(title="chandassu analysis service", version="1")
    # The composition UI runs on a separate origin during development.
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(RequestValidationError)
    async def malformed_body(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": "malformed request body"})

    @app.post("/api/v1/analyze")
    def analyze(request: AnalyzeRequest) -> Response:
        if not request.text.strip():
            raise HTTPException(status_code=400, detail="text is empty")
        if len(request.text.encode("utf-8")) > MAX_TEXT_BYTES:
            raise HTTPException(status_code=400, detail="text exceeds 64 KiB")
        try:
            payload = analysis_payload(request.text, request.type_name, config_dir)
        except UnknownTypeError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from None
        except InputError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from None
        return Response(
            content=payload_json(payload), media_type="application/json"
        )

    @app.get("/api/v1/types")
    def types() -> list[dict]:
        entries = []
        for type_name, class_name in list_types():
            config = load_config(type_name, config_dir)
            entries.append(
                {
                    "type_name": type_name,
                    "class_name": class_name,
                    "n_paadalu": config.n_paadalu,
                    "n_aksharalu": config.n_aksharalu,
                    "prasa": config.prasa,
                    "yati_sthanam": list(config.yati_sthanam),
                    "yati_paadalu": list(config.yati_paadalu),
                    "applicable_scores": config.applicable_scores(),
                }
            )
        return entries

    return app


app = create_app()
