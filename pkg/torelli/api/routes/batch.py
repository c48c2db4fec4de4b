import shutil
import tempfile
from pathlib import Path
from typing import Optional

from fastapi import APIRouter, Depends, File, HTTPException, Query, UploadFile
from fastapi.responses import FileResponse

from torelli.api.deps import max_len_param
from torelli.config import ALLOWED_EXTENSIONS, MAX_FILE_SIZE, UPLOADS_DIR
from torelli.core.errors import TorelliError
from torelli.schemas.wire import ResponseModel
from torelli.utils.batch_handler import BatchHandler

router = APIRouter()

XLSX_MEDIA_TYPE = "application/vnd.openxmlformats-officedocument.spreadsheetml.sheet"


@router.get("/batch/plantilla")
async def descargar_plantilla():
    """Descargar plantilla de Excel para importar palabras"""
    try:
        filepath = BatchHandler.create_template()
        return FileResponse(
            path=filepath,
            filename="plantilla_palabras.xlsx",
            media_type=XLSX_MEDIA_TYPE,
        )
    except Exception as e:
        raise HTTPException(status_code=500, detail=f"Error al generar plantilla: {str(e)}")


@router.get("/batch/exportar", response_model=None)
async def exportar_palabras(
    genus: int = Query(..., ge=1),
    max_len: int = Depends(max_len_param),
):
    """Exportar las palabras pares hasta max_len con ε y pertenencia al núcleo"""
    try:
        filepath = BatchHandler.export_enumeration(genus, max_len)
        return FileResponse(path=filepath, filename=filepath.name, media_type=XLSX_MEDIA_TYPE)
    except TorelliError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        raise HTTPException(status_code=500, detail=f"Error al exportar palabras: {str(e)}")


@router.post("/batch/importar", response_model=ResponseModel)
async def importar_palabras(
    file: UploadFile = File(...),
    genus: int = Query(..., ge=1),
    sheet_names: Optional[str] = None,  # Nombres de hojas separados por coma
):
    """
    Evaluar las palabras de un archivo Excel
    Puede procesar múltiples hojas si se especifica sheet_names
    """

    # Validar extensión
    file_extension = Path(file.filename).suffix.lower()
    if file_extension not in ALLOWED_EXTENSIONS:
        raise HTTPException(
            status_code=400,
            detail=f"Tipo de archivo no permitido. Use: {', '.join(sorted(ALLOWED_EXTENSIONS))}"
        )

    # Validar tamaño
    file.file.seek(0, 2)
    file_size = file.file.tell()
    file.file.seek(0)

    if file_size > MAX_FILE_SIZE:
        raise HTTPException(
            status_code=400,
            detail=f"Archivo muy grande. Tamaño máximo: {MAX_FILE_SIZE / 1024 / 1024}MB"
        )

    UPLOADS_DIR.mkdir(parents=True, exist_ok=True)
    with tempfile.NamedTemporaryFile(
        dir=UPLOADS_DIR, prefix="upload_", suffix=file_extension, delete=False
    ) as placeholder:
        temp_filepath = Path(placeholder.name)

    try:
        with temp_filepath.open("wb") as buffer:
            shutil.copyfileobj(file.file, buffer)

        sheets_to_process = None
        if sheet_names:
            sheets_to_process = [s.strip() for s in sheet_names.split(',')]

        results_by_sheet = BatchHandler.import_words_multiple_sheets(
            temp_filepath, genus, sheets_to_process
        )

        filas = []
        errores = []
        hojas = {}
        for sheet_name, (rows, sheet_errors) in results_by_sheet.items():
            hojas[sheet_name] = {
                "procesadas": len(rows),
                "en_nucleo": sum(1 for row in rows if row['kernel']),
                "errores": len(sheet_errors),
            }
            filas.extend(rows)
            errores.extend(sheet_errors)

        total_nucleo = sum(1 for row in filas if row['kernel'])
        mensaje = f"{len(filas)} palabra(s) evaluada(s), {total_nucleo} en el núcleo"
        if errores:
            mensaje += f", {len(errores)} error(es)"

        return {
            "success": bool(filas),
            "message": mensaje,
            "data": {
                "filas": filas,
                "errores": errores[:10],  # Solo primeros 10 errores
                "total_errores": len(errores),
                "hojas_procesadas": hojas,
            }
        }

    except HTTPException:
        raise
    except Exception as e:
        raise HTTPException(status_code=500, detail=f"Error al procesar archivo: {str(e)}")

    finally:
        if temp_filepath.exists():
            temp_filepath.unlink()
