from fastapi import HTTPException

from app.schemas import (
    ConjugateFactorResponse, ElementSetResponse, FactorizationResponse,
    LeadingIdempotentResponse, VerificationResponse,
)
from core.errors import InvalidInputError
from services.factorization_service import FactorizationService
from services.oracle_service import OracleService
from shared.utils.text_codec import parse_permutation, parse_transformation

factorization_service = FactorizationService()
oracle_service = OracleService()

STATUS_HTTP_CODES = {
    "invalid": 422,
    "not_a_member": 404,
    "self_check_failed": 500,
}


def _parse(images: str, n: int):
    try:
        return parse_transformation(images, n)
    except InvalidInputError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


def _unwrap(result: dict) -> dict:
    status = result.get("status", "ok")
    if status in STATUS_HTTP_CODES:
        raise HTTPException(status_code=STATUS_HTTP_CODES[status], detail=result["message"])
    return result


def factor(n: int, images: str) -> FactorizationResponse:
    result = _unwrap(factorization_service.factor(_parse(images, n)))
    return FactorizationResponse.from_domain(result["factorization"], result["verified"])


def conjugate(n: int, images: str, by: str) -> ConjugateFactorResponse:
    try:
        g = parse_permutation(by, n)
    except InvalidInputError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    result = _unwrap(factorization_service.conjugate(_parse(images, n), g))
    return ConjugateFactorResponse.from_domain(result["factor"])


def theorem5(n: int, images: str) -> LeadingIdempotentResponse:
    result = _unwrap(factorization_service.theorem5(_parse(images, n)))
    return LeadingIdempotentResponse.from_result(result)


def verify_theorem2(n: int) -> VerificationResponse:
    result = _unwrap(oracle_service.verify("theorem2", n))
    return VerificationResponse(check=result["check"], n=result["n"], verified=result["verified"])


def enumerate_idempotents(n: int, rank: int) -> ElementSetResponse:
    result = _unwrap(oracle_service.enumerate_idempotents(n, rank))
    return ElementSetResponse.from_domain(result["element_set"])
