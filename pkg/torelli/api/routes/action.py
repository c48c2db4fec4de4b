from fastapi import APIRouter

from torelli.api.deps import run_operation
from torelli.schemas.requests import ActionRequest, WordRequest
from torelli.schemas.wire import ResponseModel
from torelli.utils import operations as ops

router = APIRouter()


@router.post("/action/matrix", response_model=ResponseModel)
def matriz_accion(request: ActionRequest):
    """Matriz de la acción en [β_1..β_{2g+1}], o la imagen de β_k"""
    result = run_operation(ops.action_matrix, request.genus, request.word, request.beta)
    return {"success": True, "message": result.text, "data": result.data}


@router.post("/action/fix", response_model=ResponseModel)
def fija_beta(request: WordRequest):
    """¿La palabra es par y fija [β_1]?"""
    result = run_operation(ops.action_fix, request.genus, request.word)
    return {"success": True, "message": result.text, "data": result.data}
