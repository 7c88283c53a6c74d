from pydantic import BaseModel, Field

from core.factorization import ConjugateFactor, Factorization, FactorRecord


class FactorSchema(BaseModel):
    images: str = Field(..., description="Space-separated 1-based images")
    kind: str
    conjugator: str | None = Field(default=None, description="Cycle notation, conjugate factors only")

    @classmethod
    def from_record(cls, record: FactorRecord) -> "FactorSchema":
        return cls(
            images=str(record.value),
            kind=record.kind.value,
            conjugator=record.conjugator.cycle_notation() if record.conjugator is not None else None,
        )


class FactorizationResponse(BaseModel):
    n: int
    input: str
    rank: int
    factors: list[FactorSchema]
    verified: bool
    base: str | None = None

    @classmethod
    def from_domain(cls, factorization: Factorization, verified: bool) -> "FactorizationResponse":
        return cls(
            n=factorization.n,
            input=str(factorization.input),
            rank=factorization.rank,
            factors=[FactorSchema.from_record(record) for record in factorization.factors],
            verified=verified,
            base=str(factorization.base) if factorization.base is not None else None,
        )


class ConjugateFactorResponse(BaseModel):
    base: str
    conjugator: str
    value: str

    @classmethod
    def from_domain(cls, factor: ConjugateFactor) -> "ConjugateFactorResponse":
        return cls(base=str(factor.base), conjugator=factor.conjugator.cycle_notation(),
                   value=str(factor.value))


class RewriteResponse(BaseModel):
    input: str
    swap: tuple[int, int]
    factors: list[FactorSchema]
    verified: bool
    base: str | None = None

    @classmethod
    def from_result(cls, result: dict) -> "RewriteResponse":
        base = result.get("base")
        return cls(
            input=str(result["input"]),
            swap=tuple(result["swap"]),
            factors=[FactorSchema.from_record(record) for record in result["factors"]],
            verified=result["verified"],
            base=str(base) if base is not None else None,
        )


class LeadingIdempotentResponse(BaseModel):
    input: str
    idempotent: str
    factors: list[ConjugateFactorResponse]
    product: str
    verified: bool

    @classmethod
    def from_result(cls, result: dict) -> "LeadingIdempotentResponse":
        return cls(
            input=str(result["input"]),
            idempotent=str(result["idempotent"]),
            factors=[ConjugateFactorResponse.from_domain(c) for c in result["factors"]],
            product=str(result["product"]),
            verified=result["verified"],
        )
