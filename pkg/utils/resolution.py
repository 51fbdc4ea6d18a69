"""
Tablas de Betti graduadas vía la fórmula de Hochster

β_{i,j}(R/I_Δ) = Σ_{|W| = j} dim H̃_{j-i-1}(Δ_W)
"""
import json
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from math import comb

import pandas as pd

from . import config
from .complex_core import _maximal, minimal_non_faces
from .errors import InvalidInputError, ParseError, ResourceLimitError
from .homology import FieldSpec, check_euler_poincare, reduced_homology_masks

logger = logging.getLogger(__name__)


class Subject(str, Enum):
    QUOTIENT = "quotient"
    IDEAL = "ideal"


@dataclass(frozen=True)
class BettiTable:
    """
    Números de Betti graduados: (i, j) -> β_{i,j}

    i es el grado homológico y j el grado interno. Las entradas nulas no se
    guardan.
    """
    subject: Subject
    n: int
    entries: tuple = ()
    field: FieldSpec = FieldSpec()

    def __post_init__(self):
        crudas = self.entries.items() if isinstance(self.entries, dict) else self.entries
        limpias = {}
        for (i, j), valor in crudas:
            if valor < 0:
                raise InvalidInputError(f"número de Betti negativo en ({i},{j}): {valor}")
            if valor:
                limpias[(int(i), int(j))] = int(valor)
        object.__setattr__(self, 'subject', Subject(self.subject))
        object.__setattr__(self, 'entries', tuple(sorted(limpias.items())))

    def get(self, i, j):
        return dict(self.entries).get((i, j), 0)

    def as_dict(self):
        return dict(self.entries)

    def __len__(self):
        return len(self.entries)

    @property
    def projective_dimension(self):
        return max((i for (i, _), _ in self.entries), default=0)

    def column(self, i):
        """{j: β_{i,j}} para un grado homológico."""
        return {j: v for (ii, j), v in self.entries if ii == i}

    def to_json(self):
        return {
            "subject": self.subject.value,
            "n": self.n,
            "field": self.field.name,
            "entries": [{"i": i, "j": j, "value": v} for (i, j), v in self.entries],
        }

    def dumps(self):
        return json.dumps(self.to_json(), indent=2)

    @classmethod
    def from_json(cls, datos):
        if isinstance(datos, str):
            datos = json.loads(datos)
        try:
            return cls(
                subject=Subject(datos["subject"]),
                n=int(datos["n"]),
                entries={(e["i"], e["j"]): e["value"] for e in datos["entries"]},
                field=FieldSpec.parse(datos["field"]),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise InvalidInputError(f"tabla de Betti JSON inválida: {e}") from e

    @classmethod
    def from_text(cls, texto, subject=Subject.QUOTIENT, n=0, field=FieldSpec()):
        return cls(subject=subject, n=n, entries=parse_text(texto), field=field)


@dataclass(frozen=True)
class ResolutionSummary:
    projective_dimension: int
    regularity: int
    cm_type: int
    generator_degrees: tuple = ()

    def to_json(self):
        return {
            "projective_dimension": self.projective_dimension,
            "regularity": self.regularity,
            "cm_type": self.cm_type,
            "generator_degrees": list(self.generator_degrees),
        }


def _sweep_range(facetas, inicio, fin, caracteristica, usar_memo, verificar):
    """Suma parcial de Hochster sobre los W del rango [inicio, fin)."""
    campo = FieldSpec(caracteristica)
    memo = {} if usar_memo else None
    parcial = Counter()
    for w in range(inicio, fin):
        traza = tuple(sorted(_maximal(f & w for f in facetas)))
        if memo is not None and traza in memo:
            h = memo[traza]
        else:
            h = reduced_homology_masks(traza, campo)
            if verificar:
                check_euler_poincare(traza, h)
            if memo is not None:
                memo[traza] = h
        j = w.bit_count()
        for t, valor in h.items():
            parcial[(j - t - 1, j)] += valor
    return parcial


def _chunks(total, partes):
    paso = max(1, -(-total // partes))
    return [(a, min(a + paso, total)) for a in range(0, total, paso)]


def hochster_betti(c, f=FieldSpec(), jobs=1, memo=None, check_euler=None, limit=None):
    """
    Tabla de Betti del anillo cociente por la fórmula de Hochster

    Los W se reparten en rangos disjuntos; las sumas parciales se combinan
    por suma entera, así que el resultado no depende del orden de los
    trabajadores.

    Args:
        c: SimplicialComplex
        f: FieldSpec de coeficientes
        jobs: procesos para el barrido (1 = secuencial)
        memo: memo por traza de facetas (None = config.HOCHSTER_MEMO)
        check_euler: verificar Euler-Poincaré en cada Δ_W (None = config.CHECK_EULER)
        limit: límite de n para el barrido (None = config.SWEEP_LIMIT)

    Returns:
        BettiTable con subject = quotient
    """
    limit = config.SWEEP_LIMIT if limit is None else limit
    memo = config.HOCHSTER_MEMO if memo is None else memo
    check_euler = config.CHECK_EULER if check_euler is None else check_euler
    if c.n > limit:
        raise ResourceLimitError(
            f"el barrido de Hochster recorre 2^{c.n} subconjuntos; "
            f"el límite configurado es n ≤ {limit} (--sweep-limit / VDW_SWEEP_LIMIT)",
            limit=limit)
    total = 1 << c.n
    facetas = c.masks
    if jobs <= 1 or total < 256:
        suma = _sweep_range(facetas, 0, total, f.characteristic, memo, check_euler)
    else:
        rangos = _chunks(total, jobs * 4)
        suma = Counter()
        with ProcessPoolExecutor(max_workers=jobs) as ejecutor:
            futuros = [ejecutor.submit(_sweep_range, facetas, a, b, f.characteristic, memo, check_euler)
                       for a, b in rangos]
            for futuro in futuros:
                suma.update(futuro.result())
    logger.debug("Hochster: %d subconjuntos, %d entradas no nulas", total, len(suma))
    return BettiTable(subject=Subject.QUOTIENT, n=c.n, entries=dict(suma), field=f)


def ideal_table(q):
    """β_{i,j}(I) = β_{i+1,j}(R/I)."""
    if q.subject is not Subject.QUOTIENT:
        raise InvalidInputError("ideal_table espera la tabla del anillo cociente")
    return BettiTable(
        subject=Subject.IDEAL, n=q.n, field=q.field,
        entries={(i - 1, j): v for (i, j), v in q.entries if i >= 1})


def has_linear_resolution(t):
    """Hay un d con toda entrada no nula en (i, i+d)."""
    if t.subject is not Subject.IDEAL:
        raise InvalidInputError("has_linear_resolution espera la tabla del ideal")
    if not t.entries:
        raise InvalidInputError("el ideal cero no tiene generadores: la resolución lineal no está definida")
    return len({j - i for (i, j), _ in t.entries}) == 1


def summarize(q):
    if q.subject is not Subject.QUOTIENT:
        raise InvalidInputError("summarize espera la tabla del anillo cociente")
    pdim = q.projective_dimension
    return ResolutionSummary(
        projective_dimension=pdim,
        regularity=max((j - i for (i, j), _ in q.entries), default=0),
        cm_type=sum(q.column(pdim).values()),
        generator_degrees=tuple(sorted(q.column(1))),
    )


def is_symmetric(q):
    """β_{i,j} = β_{p-i, c-j} con p = pdim y c el grado de la última columna."""
    pdim = q.projective_dimension
    ultima = q.column(pdim)
    if len(ultima) != 1:
        return False
    c = next(iter(ultima))
    tabla = q.as_dict()
    return all(tabla.get((pdim - i, c - j), 0) == v for (i, j), v in tabla.items())


def is_complete_intersection(c):
    """Un ideal monomial libre de cuadrados es intersección completa si sus generadores tienen soportes disjuntos."""
    usados = 0
    for s in minimal_non_faces(c):
        if usados & s.bits:
            return False
        usados |= s.bits
    return True


def koszul_totals_match(q):
    """Para una intersección completa con g generadores los totales son C(g, i)."""
    g = sum(q.column(1).values())
    totales = Counter()
    for (i, _), v in q.entries:
        totales[i] += v
    return all(totales.get(i, 0) == comb(g, i) for i in range(g + 1)) and max(totales) == g


def to_dataframe(t):
    return pd.DataFrame(
        [{"i": i, "j": j, "value": v} for (i, j), v in t.entries],
        columns=["i", "j", "value"])


def to_csv(t):
    return to_dataframe(t).to_csv(index=False)


def _grid(t):
    """Tabla filas = j - i, columnas = i, con ceros."""
    df = to_dataframe(t)
    df["fila"] = df["j"] - df["i"]
    filas = range(int(df["fila"].min()) if t.subject is Subject.IDEAL else 0, int(df["fila"].max()) + 1)
    columnas = range(0, t.projective_dimension + 1)
    return (df.pivot_table(index="fila", columns="i", values="value", aggfunc="sum", fill_value=0)
              .reindex(index=filas, columns=columnas, fill_value=0)
              .astype(int))


def render_text(t):
    """
    Tabla en la disposición usual de los sistemas de álgebra computacional

    Encabezado con los grados homológicos, fila 'total:' y luego una fila
    por cada j - i, con '.' para los ceros.
    """
    if not t.entries:
        return "(ideal cero: sin generadores)\n"
    grid = _grid(t)
    totales = grid.sum(axis=0)
    anchos = [max(len(str(i)), len(str(int(totales[i])))) for i in grid.columns]
    lineas = [" ".join([f"{'':>6}"] + [f"{i:>{w}}" for i, w in zip(grid.columns, anchos)])]
    lineas.append(" ".join([f"{'total:':>6}"] + [f"{int(totales[i]):>{w}}" for i, w in zip(grid.columns, anchos)]))
    for fila, valores in grid.iterrows():
        celdas = [f"{(str(v) if v else '.'):>{w}}" for v, w in zip(valores.tolist(), anchos)]
        lineas.append(" ".join([f"{str(fila) + ':':>6}"] + celdas))
    return "\n".join(lineas) + "\n"


def parse_text(texto):
    """Inverso de render_text: devuelve {(i, j): valor}."""
    lineas = [l for l in texto.splitlines() if l.strip()]
    if not lineas or lineas[0].strip().startswith("(ideal cero"):
        return {}
    try:
        columnas = [int(x) for x in lineas[0].split()]
    except ValueError as e:
        raise ParseError(f"encabezado de tabla de Betti inválido: {lineas[0]!r}", line=1) from e
    entradas = {}
    for numero, linea in enumerate(lineas[1:], start=2):
        etiqueta, _, resto = linea.strip().partition(":")
        if etiqueta == "total":
            continue
        try:
            fila = int(etiqueta)
            valores = [0 if x == "." else int(x) for x in resto.split()]
        except ValueError as e:
            raise ParseError(f"fila de tabla de Betti inválida: {linea!r}", line=numero) from e
        if len(valores) != len(columnas):
            raise ParseError(f"se esperaban {len(columnas)} columnas: {linea!r}", line=numero)
        for i, v in zip(columnas, valores):
            if v:
                entradas[(i, fila + i)] = v
    return entradas
