from typing import Any, Callable

from fastapi import HTTPException, Query

from torelli.config import MAX_ENUM_LENGTH, MAX_SCHREIER_RADIUS
from torelli.core.errors import TorelliError, WordSyntaxError
from torelli.utils.operations import Result


def run_operation(operation: Callable[..., Result], *args: Any) -> Result:
    """Ejecuta una operación y traduce los errores de dominio a HTTPException"""
    try:
        return operation(*args)
    except WordSyntaxError as e:
        raise HTTPException(status_code=422, detail=str(e))
    except TorelliError as e:
        raise HTTPException(status_code=400, detail=str(e))


def max_len_param(max_len: int = Query(4, ge=0)) -> int:
    if max_len > MAX_ENUM_LENGTH:
        raise HTTPException(
            status_code=400,
            detail=f"Longitud máxima permitida: {MAX_ENUM_LENGTH}",
        )
    return max_len


def radius_param(radius: int = Query(0, ge=0)) -> int:
    if radius > MAX_SCHREIER_RADIUS:
        raise HTTPException(
            status_code=400,
            detail=f"Radio máximo permitido: {MAX_SCHREIER_RADIUS}",
        )
    return radius


__all__ = ['run_operation', 'max_len_param', 'radius_param']
