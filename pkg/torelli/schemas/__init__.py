from torelli.schemas.requests import ActionRequest, BraidRequest, WordRequest
from torelli.schemas.wire import (
    CliEnvelope,
    FactorEntryModel,
    FactorizationModel,
    LaurentMatrixModel,
    ResponseModel,
)

__all__ = [
    'ActionRequest',
    'BraidRequest',
    'WordRequest',
    'CliEnvelope',
    'FactorEntryModel',
    'FactorizationModel',
    'LaurentMatrixModel',
    'ResponseModel',
]
