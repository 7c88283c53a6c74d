from .element_set import ElementSetResponse, VerificationResponse, WordResponse
from .factorization import (
    ConjugateFactorResponse, FactorSchema, FactorizationResponse,
    LeadingIdempotentResponse, RewriteResponse,
)

__all__ = [
    "ElementSetResponse", "VerificationResponse", "WordResponse",
    "ConjugateFactorResponse", "FactorSchema", "FactorizationResponse",
    "LeadingIdempotentResponse", "RewriteResponse",
]
