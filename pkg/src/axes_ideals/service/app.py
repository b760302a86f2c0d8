"""FastAPI application wrapping the core package.

All computation is pure and stateless, so every operation is a POST with a
self-contained body.  Library errors map to HTTP statuses: bad input 400,
resource-guard refusal 413, violated internal invariant 500.
"""
from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..axes import (
    FactorizationCertificate,
    axes_ideal,
    greedy_certificate,
    member_ordinary_fast,
    ordinary_violation,
    verify_certificate,
)
from ..engines import membership_verdict, resolve_engine
from ..errors import GuardRefusal, InputError, InternalError
from ..ideals import MonomialIdeal, intersect_all, minimal_primes, minimalize, symbolic_power
from ..monomials import as_vector, check_length, parse_monomial
from ..oracle import (
    DEFAULT_GUARD,
    ResourceGuard,
    check_engine_agreement,
    check_primary_decomposition,
    check_symbolic_lemma,
    survey,
)
from . import schemas

_CHECKS = {
    "decomposition": check_primary_decomposition,
    "symbolic": check_symbolic_lemma,
    "engines": check_engine_agreement,
}


def _selected_ideal(selector: schemas.IdealSelector) -> tuple[MonomialIdeal, bool]:
    if selector.axes is not None:
        return axes_ideal(selector.axes), True
    return minimalize(selector.ideal.gens, selector.ideal.n), False


def _payload_ideal(payload: schemas.IdealPayload) -> MonomialIdeal:
    return minimalize(payload.gens, payload.n)


def _monomial_vector(monomial, n: int):
    if isinstance(monomial, str):
        return parse_monomial(monomial, n)
    return check_length(as_vector(monomial), n)


def _ideal_response(ideal: MonomialIdeal) -> schemas.IdealResponse:
    return schemas.IdealResponse(n=ideal.n, gens=[list(g) for g in ideal.gens])


def _guard(model: schemas.GuardModel | None) -> ResourceGuard:
    if model is None:
        return DEFAULT_GUARD
    return ResourceGuard(max_n=model.max_n, max_m=model.max_m, max_degree=model.max_degree)


def create_app() -> FastAPI:
    app = FastAPI(
        title="axes-ideals",
        version=__version__,
        description="Exact monomial-ideal arithmetic for coordinate-axes ideals: "
        "membership, certificates, symbolic powers, containment surveys.",
    )

    @app.exception_handler(InputError)
    async def _input_error(_: Request, exc: InputError) -> JSONResponse:
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.exception_handler(GuardRefusal)
    async def _guard_refusal(_: Request, exc: GuardRefusal) -> JSONResponse:
        return JSONResponse(status_code=413, content={"detail": str(exc)})

    @app.exception_handler(InternalError)
    async def _internal(_: Request, exc: InternalError) -> JSONResponse:
        return JSONResponse(status_code=500, content={"detail": str(exc)})

    @app.get("/health", response_model=schemas.HealthResponse)
    def health() -> schemas.HealthResponse:
        return schemas.HealthResponse(status="ok", version=__version__)

    @app.post("/member", response_model=schemas.MemberResponse)
    def member(req: schemas.MemberRequest) -> schemas.MemberResponse:
        ideal, is_axes = _selected_ideal(req)
        engine = resolve_engine(req.engine, req.mode, is_axes)
        vec = _monomial_vector(req.monomial, ideal.n)
        verdict, explanation = membership_verdict(ideal, vec, req.m, req.mode, engine)
        return schemas.MemberResponse(
            member=verdict,
            mode=req.mode,
            engine=engine,
            explanation=explanation if req.explain else None,
        )

    @app.post("/certify", response_model=schemas.CertifyResponse)
    def certify(req: schemas.CertifyRequest) -> schemas.CertifyResponse:
        vec = _monomial_vector(req.monomial, req.n)
        if not member_ordinary_fast(vec, req.m):
            return schemas.CertifyResponse(member=False, reason=ordinary_violation(vec, req.m))
        cert = greedy_certificate(vec, req.m)
        return schemas.CertifyResponse(
            member=True,
            certificate=schemas.CertificateModel(n=cert.n, m=cert.m, pairs=list(cert.pairs)),
        )

    @app.post("/verify", response_model=schemas.VerifyResponse)
    def verify(req: schemas.VerifyRequest) -> schemas.VerifyResponse:
        cert = FactorizationCertificate(
            req.certificate.n, req.certificate.m, tuple(req.certificate.pairs)
        )
        vec = _monomial_vector(req.monomial, cert.n)
        if verify_certificate(cert, vec):
            return schemas.VerifyResponse(valid=True)
        return schemas.VerifyResponse(
            valid=False, reason="certificate product does not divide the monomial"
        )

    @app.post("/power", response_model=schemas.IdealResponse)
    def power(req: schemas.PowerRequest) -> schemas.IdealResponse:
        ideal, _ = _selected_ideal(req)
        return _ideal_response(ideal.power(req.m))

    @app.post("/symbolic", response_model=schemas.IdealResponse)
    def symbolic(req: schemas.SymbolicRequest) -> schemas.IdealResponse:
        ideal, _ = _selected_ideal(req)
        return _ideal_response(symbolic_power(ideal, req.k))

    @app.post("/intersect", response_model=schemas.IdealResponse)
    def intersect(req: schemas.IntersectRequest) -> schemas.IdealResponse:
        operands = []
        if req.axes is not None:
            operands.append(axes_ideal(req.axes))
        operands.extend(_payload_ideal(p) for p in req.ideals)
        return _ideal_response(intersect_all(operands))

    @app.post("/contains", response_model=schemas.ContainsResponse)
    def contains(req: schemas.ContainsRequest) -> schemas.ContainsResponse:
        if req.axes is not None:
            base = axes_ideal(req.axes)
            outer = base.power(req.m)
            inner = symbolic_power(base, req.d)
        else:
            outer = _payload_ideal(req.outer)
            inner = _payload_ideal(req.inner)
        if outer.contains(inner):
            return schemas.ContainsResponse(contains=True)
        witness = next(g for g in inner.gens if not outer.member(g))
        return schemas.ContainsResponse(contains=False, witness=list(witness))

    @app.post("/primes", response_model=schemas.PrimesResponse)
    def primes(req: schemas.PrimesRequest) -> schemas.PrimesResponse:
        ideal, _ = _selected_ideal(req)
        supports = minimal_primes(ideal)
        return schemas.PrimesResponse(n=ideal.n, primes=[list(p.indices) for p in supports])

    @app.post("/survey", response_model=schemas.SurveyResponse)
    def survey_endpoint(req: schemas.SurveyRequest) -> schemas.SurveyResponse:
        rows = survey(req.n_values, req.m_values, _guard(req.guard))
        return schemas.SurveyResponse(rows=[schemas.SurveyRowModel(**r.to_dict()) for r in rows])

    @app.post("/check", response_model=schemas.CheckResponse)
    def check(req: schemas.CheckRequest) -> schemas.CheckResponse:
        names = list(_CHECKS) if req.suite == "all" else [req.suite]
        guard = _guard(req.guard)
        cells = []
        for name in names:
            for n in sorted(set(req.n_values)):
                for m in sorted(set(req.m_values)):
                    cells.append(
                        schemas.CheckCell(check=name, n=n, m=m, passed=_CHECKS[name](n, m, guard))
                    )
        return schemas.CheckResponse(passed=all(c.passed for c in cells), cells=cells)

    return app


app = create_app()
