import logging
from datetime import datetime
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import pandas as pd
from openpyxl import Workbook, load_workbook
from openpyxl.styles import Alignment, Font, PatternFill

from torelli.config import EXPORTS_DIR
from torelli.core.epsilon import (
    epsilon,
    factor_kernel_word,
    in_ker_epsilon,
    rank_for_genus,
    verify_factorization,
)
from torelli.core.errors import TorelliError
from torelli.core.homology import in_torelli_kernel
from torelli.core.words import enumerate_even_words, format_word, is_even, parse_word

logger = logging.getLogger(__name__)

EXPORT_HEADERS = ["Palabra", "Longitud", "Epsilon", "Nucleo", "Fija b1"]
WORD_COLUMNS = ['word', 'palabra', 'palabras', 'w']


def _style_header(ws, color: str) -> None:
    header_fill = PatternFill(start_color=color, end_color=color, fill_type="solid")
    header_font = Font(bold=True, color="FFFFFF")
    for cell in ws[1]:
        cell.fill = header_fill
        cell.font = header_font
        cell.alignment = Alignment(horizontal="center", vertical="center")


class BatchHandler:
    """Importación y exportación de lotes de palabras en Excel"""

    @staticmethod
    def export_enumeration(genus: int, max_len: int, filename: Optional[str] = None) -> Path:
        """
        Exporta todas las palabras pares hasta ``max_len`` con su ε y pertenencia al núcleo

        Args:
            genus: Género g (rango 2g+1)
            max_len: Longitud máxima de las palabras
            filename: Nombre del archivo (opcional)

        Returns:
            Path del archivo generado
        """
        if not filename:
            timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
            filename = f"palabras_g{genus}_l{max_len}_{timestamp}.xlsx"

        EXPORTS_DIR.mkdir(parents=True, exist_ok=True)
        filepath = EXPORTS_DIR / filename

        wb = Workbook()
        ws = wb.active
        ws.title = "Palabras"
        ws.append(EXPORT_HEADERS)
        _style_header(ws, "4472C4")

        count = 0
        for w in enumerate_even_words(rank_for_genus(genus), max_len):
            ws.append([
                format_word(w),
                len(w),
                str(epsilon(w)),
                "si" if in_ker_epsilon(w) else "no",
                "si" if in_torelli_kernel(w) else "no",
            ])
            count += 1

        column_widths = [40, 10, 30, 10, 10]
        for i, width in enumerate(column_widths, start=1):
            ws.column_dimensions[chr(64 + i)].width = width

        wb.save(filepath)
        logger.info("Exportadas %d palabras a %s", count, filepath)
        return filepath

    @staticmethod
    def get_sheet_names(filepath: Path) -> List[str]:
        try:
            wb = load_workbook(filepath, read_only=True, data_only=True)
            sheet_names = wb.sheetnames
            wb.close()
            return sheet_names
        except Exception as e:
            logger.warning("No se pudo abrir %s: %s", filepath, e)
            return []

    @staticmethod
    def evaluate_word(text: str, genus: int) -> Dict:
        """Paridad, ε, núcleo y longitud de una factorización verificada"""
        w = parse_word(text, rank_for_genus(genus))
        row = {
            'word': format_word(w),
            'length': len(w),
            'even': is_even(w),
            'epsilon': None,
            'kernel': False,
            'factors': None,
            'verified': None,
        }
        if row['even']:
            row['epsilon'] = epsilon(w).to_list()
            row['kernel'] = in_ker_epsilon(w)
        if row['kernel']:
            factorization = factor_kernel_word(w)
            row['factors'] = len(factorization)
            row['verified'] = verify_factorization(w, factorization)
        return row

    @staticmethod
    def import_words_multiple_sheets(
        filepath: Path, genus: int, sheet_names: Optional[List[str]] = None
    ) -> Dict[str, Tuple[List[Dict], List[str]]]:
        """
        Evalúa las palabras de varias hojas

        Returns:
            Diccionario con {nombre_hoja: (filas_evaluadas, errores)}
        """
        try:
            xl_file = pd.ExcelFile(filepath)
            available_sheets = xl_file.sheet_names
        except Exception as e:
            return {"error": ([], [f"Error al leer el archivo Excel: {str(e)}"])}

        if not sheet_names:
            sheet_names = available_sheets

        results = {}
        for sheet_name in sheet_names:
            if sheet_name not in available_sheets:
                results[sheet_name] = ([], [f"La hoja '{sheet_name}' no existe en el archivo"])
                continue
            results[sheet_name] = BatchHandler._process_sheet(filepath, sheet_name, genus)
        return results

    @staticmethod
    def _process_sheet(
        filepath: Path, sheet_name: Union[str, int], genus: int
    ) -> Tuple[List[Dict], List[str]]:
        try:
            df = pd.read_excel(filepath, sheet_name=sheet_name, dtype=str, keep_default_na=False)
        except Exception as e:
            return [], [f"Error al procesar hoja '{sheet_name}': {str(e)}"]

        df.columns = df.columns.astype(str).str.strip().str.lower()
        column = next((col for col in df.columns if col in WORD_COLUMNS), None)
        if column is None:
            return [], [f"Hoja '{sheet_name}': Falta la columna de palabras ({', '.join(WORD_COLUMNS)})"]

        rows = []
        errores = []
        for idx, value in df[column].items():
            if not str(value).strip():
                continue
            try:
                rows.append(BatchHandler.evaluate_word(str(value).strip(), genus))
            except TorelliError as e:
                errores.append(f"Hoja '{sheet_name}', Fila {idx + 2}: {str(e)}")
        logger.info("Hoja %s: %d filas, %d errores", sheet_name, len(rows), len(errores))
        return rows, errores

    @staticmethod
    def create_template() -> Path:
        """Plantilla con la columna de palabras y dos ejemplos"""
        EXPORTS_DIR.mkdir(parents=True, exist_ok=True)
        filepath = EXPORTS_DIR / "plantilla_palabras.xlsx"

        wb = Workbook()
        ws = wb.active
        ws.title = "Plantilla Palabras"
        ws.append(["Palabra"])
        _style_header(ws, "39a900")
        ws.append(["z1 z1"])
        ws.append(["z3 z1 z2 z1 z1^-1 z3^-1 z1^-1 z2^-1"])
        ws.column_dimensions["A"].width = 50

        wb.save(filepath)
        return filepath
