from typing import Any, Dict, List, Optional

from pydantic import BaseModel

from torelli.core.epsilon import FactorEntry, Factorization, NormalGenerator
from torelli.core.laurent import LaurentMatrix
from torelli.core.words import format_word, parse_word


class ResponseModel(BaseModel):
    success: bool
    message: str
    data: Optional[Any] = None


class CliEnvelope(BaseModel):
    inputs: Dict[str, Any]
    result: Any


class LaurentMatrixModel(BaseModel):
    dim: int
    entries: List[List[List[List[int]]]]

    @classmethod
    def from_matrix(cls, matrix: LaurentMatrix) -> "LaurentMatrixModel":
        return cls(**matrix.to_json())

    def to_matrix(self) -> LaurentMatrix:
        return LaurentMatrix.from_json(self.model_dump())


class FactorEntryModel(BaseModel):
    conj: str
    gen: str
    exp: int

    @classmethod
    def from_entry(cls, entry: FactorEntry) -> "FactorEntryModel":
        return cls(conj=format_word(entry.conj), gen=entry.generator.tag(), exp=entry.exponent)

    def to_entry(self, rank: int) -> FactorEntry:
        return FactorEntry(parse_word(self.conj, rank), NormalGenerator.parse(self.gen), self.exp)


class FactorizationModel(BaseModel):
    factorization: List[FactorEntryModel]
    verified: bool


def factorization_to_json(f: Factorization) -> List[FactorEntryModel]:
    return [FactorEntryModel.from_entry(entry) for entry in f.entries]


def factorization_from_json(entries: List[Dict[str, Any]], rank: int) -> Factorization:
    return Factorization(
        rank, tuple(FactorEntryModel(**entry).to_entry(rank) for entry in entries)
    )
