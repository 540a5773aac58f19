"""Request and response schemas shared by the HTTP API and the CLI."""

from __future__ import annotations

from pydantic import BaseModel


class SolveRequest(BaseModel):
    instance: str
    check: bool = False


class SolveResponse(BaseModel):
    allocation: str
    owners: list[int]
    profile: list[str]
    profile_halves: list[int]
    nsw: str


class VerifyRequest(BaseModel):
    instance: str
    allocation: str


class VerifyResponse(BaseModel):
    valid: bool
    violation: str | None = None
    profile: list[str] | None = None
    profile_halves: list[int] | None = None
    nsw: str | None = None


class GenerateRequest(BaseModel):
    agents: int
    goods: int
    s: str = "3/2"
    heavy_prob: str = "0.5"
    seed: int = 0


class GenerateResponse(BaseModel):
    instance: str


class OracleRequest(BaseModel):
    instance: str
    against: str | None = None


class OracleResponse(BaseModel):
    profile: list[str]
    profile_halves: list[int]
    nsw: str
    comparison: str | None = None
