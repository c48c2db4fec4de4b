from fastapi import APIRouter, Query

from torelli.api.deps import run_operation
from torelli.schemas.requests import BraidRequest
from torelli.schemas.wire import ResponseModel
from torelli.utils import operations as ops

router = APIRouter()


@router.post("/braids/burau", response_model=ResponseModel)
def matriz_burau(request: BraidRequest):
    """Matriz de Burau reducida con entradas de Laurent"""
    result = run_operation(ops.braid_burau, request.strands, request.word)
    return {"success": True, "message": "Matriz de Burau", "data": result.data}


@router.post("/braids/eval", response_model=ResponseModel)
def evaluar_burau(request: BraidRequest):
    """Matriz de Burau especializada en t = at"""
    result = run_operation(ops.braid_eval, request.strands, request.word, request.at)
    return {"success": True, "message": f"Burau en t = {request.at}", "data": result.data}


@router.post("/braids/perm", response_model=ResponseModel)
def permutacion_trenza(request: BraidRequest):
    """Permutación inducida en las hebras"""
    result = run_operation(ops.braid_perm, request.strands, request.word)
    return {"success": True, "message": result.data["cycles"], "data": result.data}


@router.post("/braids/kernel", response_model=ResponseModel)
def pertenece_kn(request: BraidRequest):
    """Pertenencia a K_n"""
    result = run_operation(ops.braid_kernel, request.strands, request.word)
    return {"success": True, "message": result.text, "data": result.data}


@router.get("/braids/center", response_model=ResponseModel)
def palabra_centro(strands: int = Query(..., ge=2), kernel: bool = False):
    """Giro completo Δ², o el generador de Z(B_n) ∩ K_n"""
    result = run_operation(ops.braid_center, strands, kernel)
    return {"success": True, "message": "Palabra central", "data": result.data}
