from fastapi import APIRouter, Depends, Query

from torelli.api.deps import max_len_param, radius_param, run_operation
from torelli.schemas.requests import WordRequest
from torelli.schemas.wire import ResponseModel
from torelli.utils import operations as ops

router = APIRouter()


@router.post("/words/reduce", response_model=ResponseModel)
def reducir_palabra(request: WordRequest):
    """Forma reducida de una palabra"""
    result = run_operation(ops.word_reduce, request.genus, request.word)
    return {"success": True, "message": "Palabra reducida", "data": result.data}


@router.post("/words/eps", response_model=ResponseModel)
def calcular_epsilon(request: WordRequest):
    """ε de una palabra par"""
    result = run_operation(ops.word_eps, request.genus, request.word)
    return {"success": True, "message": result.text, "data": result.data}


@router.post("/words/split", response_model=ResponseModel)
def escindir_palabra(request: WordRequest):
    """Descomposición w = k · s(ε(w))"""
    result = run_operation(ops.word_split, request.genus, request.word)
    return {"success": True, "message": "Palabra escindida", "data": result.data}


@router.post("/words/kernel", response_model=ResponseModel)
def pertenece_nucleo(request: WordRequest):
    """Pertenencia a ker ε"""
    result = run_operation(ops.word_kernel, request.genus, request.word)
    return {"success": True, "message": "Pertenencia calculada", "data": result.data}


@router.post("/words/factor", response_model=ResponseModel)
def factorizar_palabra(request: WordRequest):
    """Factorización en conjugados de generadores normales"""
    result = run_operation(ops.word_factor, request.genus, request.word)
    total = len(result.data["factorization"])
    return {"success": True, "message": f"{total} factor(es)", "data": result.data}


@router.get("/words/schreier", response_model=ResponseModel)
def generadores_schreier(
    genus: int = Query(..., ge=1),
    radius: int = Depends(radius_param),
):
    """Generadores de Schreier de ker ε hasta el radio dado"""
    result = run_operation(ops.word_schreier, genus, radius)
    return {"success": True, "message": f"{len(result.data)} generador(es)", "data": result.data}


@router.get("/words/enum", response_model=ResponseModel)
def enumerar_palabras(
    genus: int = Query(..., ge=1),
    max_len: int = Depends(max_len_param),
):
    """Palabras pares reducidas hasta la longitud dada"""
    result = run_operation(ops.word_enum, genus, max_len)
    return {"success": True, "message": f"{len(result.data)} palabra(s)", "data": result.data}
