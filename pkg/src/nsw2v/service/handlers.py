"""Operation handlers behind both the HTTP endpoints and the CLI.

Handlers take and return the pydantic schemas; failures surface as the
package's typed exceptions (FormatError, InvariantViolation,
OracleTooLarge, ValueError for bad generator parameters) and are mapped
to HTTP codes or process exit codes by the respective front end.
"""

from __future__ import annotations

import re

from ..errors import FormatError
from ..generator import generate_instance
from ..instance import (
    parse_allocation,
    parse_instance,
    serialize_allocation,
    serialize_instance,
    validate_allocation,
)
from ..oracle import brute_force_optimal
from ..solver import solve as run_solver
from ..valuation import bundle_values, format_half, nsw_compare, nsw_display
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

_S_ARG_RE = re.compile(r"(\d+)/2")


def solve(request: SolveRequest) -> SolveResponse:
    inst = parse_instance(request.instance)
    result = run_solver(inst, check=request.check)
    return SolveResponse(
        allocation=serialize_allocation(result.allocation),
        owners=list(result.allocation.owners),
        profile=[format_half(v) for v in result.profile],
        profile_halves=list(result.profile),
        nsw=nsw_display(result.profile),
    )


def verify(request: VerifyRequest) -> VerifyResponse:
    inst = parse_instance(request.instance)
    alloc = parse_allocation(request.allocation, inst)
    violation = validate_allocation(inst, alloc)
    if violation is not None:
        return VerifyResponse(valid=False, violation=violation)
    profile = bundle_values(inst, alloc)
    return VerifyResponse(
        valid=True,
        profile=[format_half(v) for v in profile],
        profile_halves=list(profile),
        nsw=nsw_display(profile),
    )


def generate(request: GenerateRequest) -> GenerateResponse:
    match = _S_ARG_RE.fullmatch(request.s)
    if not match:
        raise ValueError("s must have the form p/2")
    inst = generate_instance(
        agents=request.agents,
        goods=request.goods,
        heavy_value=int(match.group(1)),
        heavy_prob=request.heavy_prob,
        seed=request.seed,
    )
    return GenerateResponse(instance=serialize_instance(inst))


def oracle(request: OracleRequest) -> OracleResponse:
    inst = parse_instance(request.instance)
    profile, _ = brute_force_optimal(inst)
    comparison = None
    if request.against is not None:
        alloc = parse_allocation(request.against, inst)
        violation = validate_allocation(inst, alloc)
        if violation is not None:
            raise FormatError("alloc_invalid", violation)
        order = nsw_compare(bundle_values(inst, alloc), profile)
        comparison = {-1: "solver-worse", 0: "equal", 1: "solver-better"}[order]
    return OracleResponse(
        profile=[format_half(v) for v in profile],
        profile_halves=list(profile),
        nsw=nsw_display(profile),
        comparison=comparison,
    )
