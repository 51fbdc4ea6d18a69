"""
Clasificación de vdW(n,k): Cohen-Macaulay, descomponible por vértices,
nivel, Gorenstein y resolución lineal

Cada predicado se calcula directamente y se compara con las fórmulas
cerradas en (n,k).
"""
import logging
import random
from math import comb
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from tqdm import tqdm

from . import config
from .complex_core import (
    SimplicialComplex, VdwParams, _bits, _maximal, face_masks, lemma_nonface_predictions,
    make_vdw, minimal_non_faces, one_skeleton, random_complex,
)
from .errors import InvalidInputError, ResourceLimitError
from .homology import FieldSpec, reduced_homology_masks
from .resolution import (
    BettiTable, has_linear_resolution, hochster_betti, ideal_table, is_complete_intersection,
    is_symmetric, summarize,
)
from .structure import is_chordal, is_flag, is_quasi_forest, leaf_order

logger = logging.getLogger(__name__)

PREDICATE_KEYS = (
    "linear_resolution", "cohen_macaulay", "vertex_decomposable", "level",
    "gorenstein", "quasi_forest", "flag", "chordal_skeleton",
)


def is_cohen_macaulay(c, f=FieldSpec()):
    """
    Criterio de Reisner

    Para toda cara F (∅ incluida), H̃_i(lk F) = 0 para i < dim lk F. Los
    enlaces repetidos se calculan una sola vez.
    """
    masks = c.masks
    vistos = set()
    for cara in sorted(face_masks(masks), key=lambda m: m.bit_count()):
        enlace = tuple(sorted(_maximal(g & ~cara for g in masks if cara & ~g == 0)))
        if enlace in vistos:
            continue
        vistos.add(enlace)
        dim = max(m.bit_count() for m in enlace) - 1
        h = reduced_homology_masks(enlace, f)
        if any(i < dim for i in h):
            logger.debug("no CM: el enlace de %s tiene homología %s", cara, h)
            return False
    return True


def _connected(masks):
    alcanzado = masks[0]
    pendientes = list(masks[1:])
    cambio = True
    while cambio and pendientes:
        cambio = False
        quedan = []
        for g in pendientes:
            if g & alcanzado:
                alcanzado |= g
                cambio = True
            else:
                quedan.append(g)
        pendientes = quedan
    return not pendientes


def _h_nonnegative(masks):
    d = max(m.bit_count() for m in masks)
    f = [0] * (d + 1)
    for m in face_masks(masks):
        f[m.bit_count()] += 1
    h = [0] * (d + 1)
    for k in range(d + 1):
        h[k] = sum((-1) ** (k - i) * comb(d - i, k - i) * f[i] for i in range(k + 1))
    return all(x >= 0 for x in h)


def _vertex_decomposable(masks, memo):
    if len(masks) == 1:
        return True
    if masks in memo:
        return memo[masks]
    dim = masks[0].bit_count() - 1
    if dim == 0:
        memo[masks] = True
        return True
    # condiciones necesarias de todo complejo shellable
    if not _connected(masks) or not _h_nonnegative(masks):
        memo[masks] = False
        return False
    vertices = 0
    for g in masks:
        vertices |= g
    if dim >= 2 and not all(_connected([g & ~(1 << v) for g in masks if g >> v & 1]) for v in _bits(vertices)):
        memo[masks] = False
        return False
    resultado = False
    for v in _bits(vertices):
        bit = 1 << v
        con = [g for g in masks if g & bit]
        sin = [g for g in masks if not g & bit]
        if not sin:
            continue
        # vértice de desprendimiento: ninguna faceta nueva al borrar v
        if not all(any((g & ~bit) & ~s == 0 for s in sin) for g in con):
            continue
        enlace = tuple(sorted(g & ~bit for g in con))
        borrado = tuple(sorted(sin))
        if _vertex_decomposable(enlace, memo) and _vertex_decomposable(borrado, memo):
            resultado = True
            break
    memo[masks] = resultado
    return resultado


def is_vertex_decomposable(c):
    """Simplejo, o existe un vértice de desprendimiento con enlace y borrado descomponibles."""
    if not c.is_pure:
        raise InvalidInputError("la descomposición por vértices sólo se decide para complejos puros")
    return _vertex_decomposable(tuple(sorted(c.masks)), {})


def _last_column_single_degree(q):
    return len(q.column(q.projective_dimension)) == 1


def is_level(c, f=FieldSpec(), betti=None, cm=None):
    cm = is_cohen_macaulay(c, f) if cm is None else cm
    if not cm:
        return False
    q = betti if betti is not None else hochster_betti(c, f)
    return _last_column_single_degree(q)


def is_gorenstein(c, f=FieldSpec(), betti=None, cm=None):
    q = betti if betti is not None else hochster_betti(c, f)
    return is_level(c, f, betti=q, cm=cm) and summarize(q).cm_type == 1


@dataclass(frozen=True)
class PredictedClassification:
    """Predicciones en forma cerrada; None donde no hay fórmula."""
    linear_resolution: bool = None
    cohen_macaulay: bool = None
    vertex_decomposable: bool = None
    level: bool = None
    gorenstein: bool = None
    quasi_forest: bool = None
    flag: bool = None
    chordal_skeleton: bool = None

    def to_json(self):
        return asdict(self)


def predicted_classification(n, k):
    """
    Predicciones para vdW(n,k)

    - resolución lineal: k = 1 o 2k ≥ n
    - Cohen-Macaulay = descomponible = nivel: n ≤ 6, k = 1 o 2k ≥ n
    - Gorenstein: (5,2), o ideal cero (k = n-1) o principal (k = n-2)
    """
    VdwParams(n, k)
    mitad = 2 * k >= n
    lineal = k == 1 or mitad
    cm = n <= 6 or k == 1 or mitad
    excepcionales = (n, k) in ((5, 2), (6, 2))
    if k == 1 or mitad:
        cordal = True
    elif excepcionales:
        cordal = False
    else:
        cordal = None
    return PredictedClassification(
        linear_resolution=lineal,
        cohen_macaulay=cm,
        vertex_decomposable=cm,
        level=cm,
        gorenstein=(n, k) == (5, 2) or k >= n - 2,
        quasi_forest=mitad,
        flag=mitad or excepcionales,
        chordal_skeleton=cordal,
    )


@dataclass
class ComplexAnalysis:
    """Todos los predicados y certificados de un complejo."""
    complex: SimplicialComplex
    field: FieldSpec
    minimal_non_faces: list
    betti: BettiTable
    flag: bool
    chordality: object
    leaf_order: object
    quasi_forest: bool
    cohen_macaulay: bool
    vertex_decomposable: bool
    level: bool
    gorenstein: bool
    linear_resolution: bool
    complete_intersection: bool
    symmetric_betti: bool

    @property
    def zero_ideal(self):
        return not self.minimal_non_faces

    @property
    def summary(self):
        return summarize(self.betti)

    def computed(self):
        return {
            "linear_resolution": self.linear_resolution,
            "cohen_macaulay": self.cohen_macaulay,
            "vertex_decomposable": self.vertex_decomposable,
            "level": self.level,
            "gorenstein": self.gorenstein,
            "quasi_forest": self.quasi_forest,
            "flag": self.flag,
            "chordal_skeleton": self.chordality.is_chordal,
        }

    def to_json(self):
        c = self.complex
        return {
            "n": c.n,
            "field": self.field.name,
            "facets": [list(f.vertices) for f in c.facets],
            "minimal_non_faces": [list(s.vertices) for s in self.minimal_non_faces],
            "degree_one_generators": list(c.isolated_vertices),
            "computed": self.computed(),
            "complete_intersection": self.complete_intersection,
            "symmetric_betti": self.symmetric_betti,
            "chordality": self.chordality.to_json(),
            "leaf_order": self.leaf_order.to_json() if self.leaf_order else None,
            "summary": self.summary.to_json(),
            "betti": self.betti.to_json(),
        }


def analyze_complex(c, f=FieldSpec(), jobs=1, limit=None, betti=None):
    """Calcula todos los predicados; la tabla de Betti se calcula una sola vez."""
    q = betti if betti is not None else hochster_betti(c, f, jobs=jobs, limit=limit)
    nocaras = minimal_non_faces(c)
    cm = is_cohen_macaulay(c, f)
    ideal = ideal_table(q)
    try:
        orden = leaf_order(c)
        cuasi_bosque = orden is not None
    except ResourceLimitError as e:
        logger.warning("⚠️ orden de hojas no decidido: %s", e)
        orden, cuasi_bosque = None, None
    return ComplexAnalysis(
        complex=c,
        field=f,
        minimal_non_faces=nocaras,
        betti=q,
        flag=all(len(s) == 2 for s in nocaras),
        chordality=is_chordal(one_skeleton(c)),
        leaf_order=orden,
        quasi_forest=cuasi_bosque,
        cohen_macaulay=cm,
        vertex_decomposable=is_vertex_decomposable(c) if c.is_pure else False,
        level=is_level(c, f, betti=q, cm=cm),
        gorenstein=is_gorenstein(c, f, betti=q, cm=cm),
        linear_resolution=has_linear_resolution(ideal) if len(ideal) else None,
        complete_intersection=is_complete_intersection(c),
        symmetric_betti=is_symmetric(q),
    )


@dataclass
class ClassificationReport:
    n: int
    k: int
    field: str
    computed: dict
    predicted: dict
    lemma_nonfaces_verified: bool = None
    failures: list = field(default_factory=list)
    zero_ideal: bool = False
    principal_ideal: bool = False
    betti: dict = None

    @property
    def agreement(self):
        return not self.failures

    def to_json(self):
        return {
            "n": self.n,
            "k": self.k,
            "field": self.field,
            "computed": self.computed,
            "predicted": self.predicted,
            "agreement": self.agreement,
            "lemma_nonfaces_verified": self.lemma_nonfaces_verified,
            "failures": list(self.failures),
            "zero_ideal": self.zero_ideal,
            "principal_ideal": self.principal_ideal,
            "betti": self.betti,
        }

    @classmethod
    def from_json(cls, datos):
        return cls(
            n=datos["n"], k=datos["k"], field=datos["field"],
            computed=dict(datos["computed"]), predicted=dict(datos["predicted"]),
            lemma_nonfaces_verified=datos.get("lemma_nonfaces_verified"),
            failures=list(datos.get("failures", [])),
            zero_ideal=datos.get("zero_ideal", False),
            principal_ideal=datos.get("principal_ideal", False),
            betti=datos.get("betti"),
        )


def _lemma_applies(n, k):
    return 1 < k and 2 * k < n and n >= 7


def _check_lemma(c, params, nocaras=None):
    nocaras = minimal_non_faces(c) if nocaras is None else nocaras
    conjunto = set(nocaras)
    predichas = lemma_nonface_predictions(params)
    grados = {len(s) for s in nocaras}
    return all(p in conjunto for p in predichas) and {2, 3} <= grados


def classify_cell(n, k, f=FieldSpec(), limit=None):
    """Un ClassificationReport para vdW(n,k)."""
    params = VdwParams(n, k)
    c = make_vdw(params)
    analisis = analyze_complex(c, f, limit=limit)
    computado = analisis.computed()
    predicho = predicted_classification(n, k).to_json()
    fallos = [clave for clave in PREDICATE_KEYS
              if computado[clave] is not None and predicho[clave] is not None
              and computado[clave] != predicho[clave]]
    if computado["vertex_decomposable"] and not computado["cohen_macaulay"]:
        fallos.append("vd_implies_cm")
    # la tabla de un anillo Gorenstein es simétrica: con dos o más generadores no puede ser lineal
    if (len(analisis.minimal_non_faces) >= 2 and computado["gorenstein"]
            and computado["linear_resolution"]):
        fallos.append("gorenstein_linear")
    # β_{1,j} del cociente contra el conteo independiente de no-caras mínimas
    generadores = analisis.betti.column(1)
    por_tamano = {}
    for s in analisis.minimal_non_faces:
        por_tamano[len(s)] = por_tamano.get(len(s), 0) + 1
    if generadores != por_tamano:
        fallos.append("generator_count")
    lema = None
    if _lemma_applies(n, k):
        lema = _check_lemma(c, params, analisis.minimal_non_faces)
        if not lema:
            fallos.append("lemma_nonfaces")
    reporte = ClassificationReport(
        n=n, k=k, field=f.name, computed=computado, predicted=predicho,
        lemma_nonfaces_verified=lema, failures=fallos,
        zero_ideal=analisis.zero_ideal,
        principal_ideal=len(analisis.minimal_non_faces) == 1,
        betti=analisis.betti.to_json(),
    )
    if fallos:
        logger.warning("❌ vdW(%d,%d) sobre %s: desacuerdo en %s", n, k, f.name, ", ".join(fallos))
    return reporte


def _classify_task(args):
    n, k, caracteristica, limit = args
    return classify_cell(n, k, FieldSpec(caracteristica), limit=limit)


def sweep_cells(n_max):
    return [(n, k) for n in range(2, n_max + 1) for k in range(1, n)]


def verify_range(n_max, f=FieldSpec(), jobs=1, limit=None, cache=None, progress=False):
    """
    Recorre todas las celdas 0 < k < n ≤ n_max

    Las celdas son independientes; con jobs > 1 se calculan en procesos
    separados y los reportes se devuelven ordenados por (n,k). `cache`, si
    se da, debe ofrecer get(n, k, campo) y put(reporte).
    """
    limit = config.SWEEP_LIMIT if limit is None else limit
    if n_max > limit:
        raise ResourceLimitError(
            f"verify con n_max={n_max} excede el límite de barrido n ≤ {limit}", limit=limit)
    celdas = sweep_cells(n_max)
    reportes = {}
    pendientes = []
    for n, k in celdas:
        guardado = cache.get(n, k, f) if cache is not None else None
        if guardado is not None:
            reportes[(n, k)] = guardado
        else:
            pendientes.append((n, k))
    logger.info("📊 %d celdas (%d en caché) sobre %s", len(celdas), len(celdas) - len(pendientes), f.name)
    barra = tqdm(total=len(pendientes), desc=f"vdW {f.name}", disable=not progress, unit="celda")
    tareas = [(n, k, f.characteristic, limit) for n, k in pendientes]
    if jobs <= 1:
        resultados = map(_classify_task, tareas)
        for reporte in resultados:
            reportes[(reporte.n, reporte.k)] = reporte
            barra.update(1)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as ejecutor:
            for reporte in ejecutor.map(_classify_task, tareas):
                reportes[(reporte.n, reporte.k)] = reporte
                barra.update(1)
    barra.close()
    if cache is not None:
        for n, k in pendientes:
            cache.put(reportes[(n, k)])
    return [reportes[celda] for celda in celdas]


@dataclass(frozen=True)
class LemmaCheck:
    n: int
    k: int
    predicted: tuple
    members: bool
    degrees: tuple

    @property
    def ok(self):
        return self.members and {2, 3} <= set(self.degrees)

    def to_json(self):
        return {"n": self.n, "k": self.k,
                "predicted": [list(s.vertices) for s in self.predicted],
                "members": self.members, "degrees": list(self.degrees), "ok": self.ok}


def verify_lemma_range(n_min=7, n_max=30):
    """No-caras predichas para 1 < k < n/2: pertenencia y grados {2,3} (sin Betti)."""
    resultados = []
    for n in range(max(n_min, 7), n_max + 1):
        for k in range(2, n):
            if not _lemma_applies(n, k):
                continue
            params = VdwParams(n, k)
            nocaras = minimal_non_faces(make_vdw(params))
            predichas = tuple(lemma_nonface_predictions(params))
            conjunto = set(nocaras)
            resultados.append(LemmaCheck(
                n=n, k=k, predicted=predichas,
                members=all(p in conjunto for p in predichas),
                degrees=tuple(sorted({len(s) for s in nocaras}))))
    return resultados


def compare_fields(reportes_a, reportes_b):
    """Divergencias (n, k, clave) entre dos pasadas con cuerpos distintos."""
    divergencias = []
    por_celda = {(r.n, r.k): r for r in reportes_b}
    for a in reportes_a:
        b = por_celda.get((a.n, a.k))
        if b is None:
            continue
        for clave in PREDICATE_KEYS:
            if a.computed.get(clave) != b.computed.get(clave):
                divergencias.append((a.n, a.k, clave))
        if a.betti and b.betti and a.betti["entries"] != b.betti["entries"]:
            divergencias.append((a.n, a.k, "betti"))
    for n, k, clave in divergencias:
        logger.warning("⚠️ vdW(%d,%d): %s difiere entre %s y %s", n, k, clave,
                       reportes_a[0].field, reportes_b[0].field)
    return divergencias


def quasi_forest_property(samples=500, seed=None, max_vertices=7, max_facets=8, n_max_vdw=10):
    """
    is_quasi_forest ⇔ (is_flag ∧ is_chordal(1-esqueleto))

    Sobre todas las celdas vdW con n ≤ n_max_vdw y `samples` complejos
    aleatorios sembrados. Devuelve la lista de contraejemplos.
    """
    seed = config.DEFAULT_SEED if seed is None else seed
    complejos = [make_vdw((n, k)) for n, k in sweep_cells(n_max_vdw)]
    rng = random.Random(seed)
    complejos += [random_complex(rng, max_vertices, max_facets) for _ in range(samples)]
    contraejemplos = []
    for c in complejos:
        izquierda = is_quasi_forest(c)
        derecha = is_flag(c) and is_chordal(one_skeleton(c)).is_chordal
        if izquierda != derecha:
            contraejemplos.append(c)
    return contraejemplos


def summarize_reports(reportes, divergencias=()):
    """Objeto resumen del reporte JSON."""
    fallos = [[r.n, r.k, r.field, clave] for r in reportes for clave in r.failures]
    fallos += [[n, k, "Q/GF", f"field:{clave}"] for n, k, clave in divergencias]
    gorenstein = sorted({(r.n, r.k) for r in reportes
                         if r.computed.get("gorenstein") and not r.zero_ideal and not r.principal_ideal})
    triviales = sorted({(r.n, r.k) for r in reportes
                        if r.computed.get("gorenstein") and (r.zero_ideal or r.principal_ideal)})
    return {
        "cells": len(reportes),
        "agreements": sum(1 for r in reportes if r.agreement),
        "failures": fallos,
        "gorenstein_cells": [list(c) for c in gorenstein],
        "trivial_gorenstein_cells": [list(c) for c in triviales],
        "field_divergences": [list(d) for d in divergencias],
    }
