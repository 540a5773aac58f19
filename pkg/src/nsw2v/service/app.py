"""FastAPI application exposing the solver; run with

    uvicorn nsw2v.service.app:app
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..errors import FormatError, InvariantViolation, OracleTooLarge
from . import handlers
from .models import (
    GenerateRequest,
    GenerateResponse,
    OracleRequest,
    OracleResponse,
    SolveRequest,
    SolveResponse,
    VerifyRequest,
    VerifyResponse,
)

app = FastAPI(title="nsw2v", version="0.1.0")


@app.exception_handler(FormatError)
async def format_error(request: Request, exc: FormatError):
    return JSONResponse(
        status_code=400, content={"code": exc.code, "message": str(exc)}
    )


@app.exception_handler(ValueError)
async def value_error(request: Request, exc: ValueError):
    return JSONResponse(
        status_code=400, content={"code": "bad_parameter", "message": str(exc)}
    )


@app.exception_handler(OracleTooLarge)
async def oracle_too_large(request: Request, exc: OracleTooLarge):
    return JSONResponse(
        status_code=413, content={"code": "oracle_too_large", "message": str(exc)}
    )


@app.exception_handler(InvariantViolation)
async def invariant_violation(request: Request, exc: InvariantViolation):
    return JSONResponse(
        status_code=500, content={"code": "invariant_violation", "message": str(exc)}
    )


@app.get("/")
def root():
    return {"service": "nsw2v", "version": app.version}


@app.post("/solve", response_model=SolveResponse)
def solve(request: SolveRequest) -> SolveResponse:
    return handlers.solve(request)


@app.post("/verify", response_model=VerifyResponse)
def verify(request: VerifyRequest) -> VerifyResponse:
    return handlers.verify(request)


@app.post("/generate", response_model=GenerateResponse)
def generate(request: GenerateRequest) -> GenerateResponse:
    return handlers.generate(request)


@app.post("/oracle", response_model=OracleResponse)
def oracle(request: OracleRequest) -> OracleResponse:
    return handlers.oracle(request)
