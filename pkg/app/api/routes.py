from fastapi import APIRouter, Query

from app.controllers import epigen_controller
from app.schemas import (
    ConjugateFactorResponse, ElementSetResponse, FactorizationResponse,
    LeadingIdempotentResponse, VerificationResponse,
)


router = APIRouter()


@router.get("/health", tags=["system"])
def health_check():
    return {"status": "ok"}


@router.get("/factor", tags=["factorization"], response_model=FactorizationResponse,
            response_model_exclude_none=True)
def factor(n: int = Query(..., ge=1), images: str = Query(...)):
    """
    Factor a singular transformation into idempotents of the same rank.
    """
    return epigen_controller.factor(n=n, images=images)


@router.get("/conjugate", tags=["factorization"], response_model=ConjugateFactorResponse)
def conjugate(n: int = Query(..., ge=1), images: str = Query(...), by: str = Query(...)):
    """
    Conjugate a transformation by a permutation given in cycle notation.
    """
    return epigen_controller.conjugate(n=n, images=images, by=by)


@router.get("/theorem5", tags=["factorization"], response_model=LeadingIdempotentResponse)
def theorem5(n: int = Query(..., ge=1), images: str = Query(...)):
    return epigen_controller.theorem5(n=n, images=images)


@router.get("/verify/theorem2", tags=["oracle"], response_model=VerificationResponse)
def verify_theorem2(n: int = Query(..., ge=1)):
    return epigen_controller.verify_theorem2(n=n)


@router.get("/enumerate/idempotents", tags=["oracle"], response_model=ElementSetResponse)
def enumerate_idempotents(n: int = Query(..., ge=1), rank: int = Query(..., ge=1)):
    return epigen_controller.enumerate_idempotents(n=n, rank=rank)
