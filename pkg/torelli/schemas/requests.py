from typing import Optional

from pydantic import BaseModel, Field


class WordRequest(BaseModel):
    genus: int = Field(..., ge=1)
    word: str = Field("", max_length=10000)


class BraidRequest(BaseModel):
    strands: int = Field(..., ge=2)
    word: str = Field("", max_length=10000)
    at: int = -1


class ActionRequest(WordRequest):
    beta: Optional[int] = Field(None, ge=1)
