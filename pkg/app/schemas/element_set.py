from pydantic import BaseModel, Field

from core.element_set import ElementSet
from core.word import Word


class ElementSetResponse(BaseModel):
    n: int
    size: int
    members: list[str] = Field(..., description="Members in discovery order")

    @classmethod
    def from_domain(cls, element_set: ElementSet) -> "ElementSetResponse":
        return cls(n=element_set.n, size=element_set.size,
                   members=[str(member) for member in element_set.members])


class VerificationResponse(BaseModel):
    check: str
    n: int
    verified: bool


class WordResponse(BaseModel):
    base: str
    word: str
    value: str

    @classmethod
    def from_domain(cls, word: Word) -> "WordResponse":
        return cls(base=str(word.base), word=str(word), value=str(word.evaluate()))
