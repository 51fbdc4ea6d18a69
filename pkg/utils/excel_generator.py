"""
Generador de archivos Excel para tablas de Betti y reportes de barrido
"""
import io
import logging

import pandas as pd
from openpyxl import Workbook
from openpyxl.styles import Alignment, Font, PatternFill
from openpyxl.utils import get_column_letter

from .resolution import _grid

logger = logging.getLogger(__name__)

COLOR_TITULO = "1F4E78"
COLOR_ENCABEZADO = "4472C4"
COLOR_FALLO = "F8CBAD"


def _hoja(ws, df, titulo, resaltar=None):
    """Título combinado en la fila 1, encabezados en la 2, datos desde la 3."""
    num_cols = max(len(df.columns), 1)
    ws.merge_cells(f"A1:{get_column_letter(num_cols)}1")
    celda = ws["A1"]
    celda.value = titulo
    celda.font = Font(bold=True, size=14, color="FFFFFF")
    celda.fill = PatternFill(start_color=COLOR_TITULO, end_color=COLOR_TITULO, fill_type="solid")
    celda.alignment = Alignment(horizontal="center", vertical="center")
    ws.row_dimensions[1].height = 25

    for col_idx, nombre in enumerate(df.columns, 1):
        cell = ws.cell(row=2, column=col_idx)
        cell.value = str(nombre)
        cell.font = Font(bold=True, color="FFFFFF")
        cell.fill = PatternFill(start_color=COLOR_ENCABEZADO, end_color=COLOR_ENCABEZADO, fill_type="solid")
        cell.alignment = Alignment(horizontal="center", vertical="center")

    relleno_fallo = PatternFill(start_color=COLOR_FALLO, end_color=COLOR_FALLO, fill_type="solid")
    for r_idx, (etiqueta, fila) in enumerate(df.iterrows(), 3):
        marcar = resaltar is not None and resaltar(fila)
        for c_idx, valor in enumerate(fila.tolist(), 1):
            cell = ws.cell(row=r_idx, column=c_idx)
            cell.value = None if pd.isna(valor) else (valor.item() if hasattr(valor, "item") else valor)
            cell.alignment = Alignment(horizontal="left", vertical="center")
            if marcar:
                cell.fill = relleno_fallo

    # ancho de columnas sin contar la fila del título combinado
    for col_idx in range(1, num_cols + 1):
        largo = max((len(str(ws.cell(row=r, column=col_idx).value or ""))
                     for r in range(2, len(df) + 3)), default=0)
        ws.column_dimensions[get_column_letter(col_idx)].width = min(largo + 2, 50)


def _guardar(wb):
    buffer = io.BytesIO()
    wb.save(buffer)
    return buffer.getvalue()


def generar_excel(df, titulo, hoja="Datos", resaltar=None):
    """
    Genera un archivo Excel a partir de un DataFrame

    Args:
        df: DataFrame con los datos
        titulo: texto de la fila de título
        hoja: nombre de la hoja
        resaltar: función fila -> bool para marcar filas

    Returns:
        bytes: archivo Excel
    """
    wb = Workbook()
    ws = wb.active
    ws.title = hoja
    _hoja(ws, df, titulo, resaltar)
    return _guardar(wb)


def betti_excel(t, titulo=None):
    """Tabla de Betti en la disposición filas = j - i, columnas = i."""
    titulo = titulo or f"TABLA DE BETTI ({t.subject.value}, {t.field.name})"
    if not t.entries:
        df = pd.DataFrame({"j-i": ["(ideal cero)"]})
    else:
        grid = _grid(t)
        df = grid.rename_axis(index="j-i", columns=None).reset_index()
        df.columns = [str(c) for c in df.columns]
        totales = {"j-i": "total"}
        totales.update({str(i): int(grid[i].sum()) for i in grid.columns})
        df = pd.concat([pd.DataFrame([totales]), df], ignore_index=True)
    return generar_excel(df, titulo, hoja="Betti")


def reports_excel(reportes, titulo="VERIFICACIÓN vdW(n,k)"):
    """Una fila por celda (n, k, cuerpo); las celdas en desacuerdo se resaltan."""
    filas = []
    for r in reportes:
        fila = {"n": r.n, "k": r.k, "cuerpo": r.field}
        for clave, valor in r.computed.items():
            fila[clave] = "" if valor is None else valor
        fila["lema"] = "" if r.lemma_nonfaces_verified is None else r.lemma_nonfaces_verified
        fila["acuerdo"] = r.agreement
        fila["fallos"] = ", ".join(r.failures)
        filas.append(fila)
    df = pd.DataFrame(filas)
    logger.debug("📊 %d filas para Excel", len(df))
    return generar_excel(df, titulo, hoja="Reporte", resaltar=lambda fila: not fila["acuerdo"])
