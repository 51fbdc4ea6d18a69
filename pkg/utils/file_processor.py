"""
Procesador de archivos de facetas y de grafos

Formato de facetas: primera línea útil `n <N>`, luego una faceta por línea
(vértices 1-based separados por espacios). `#` inicia un comentario. Un
archivo sin facetas representa el complejo {∅}.
"""
import logging
from pathlib import Path

from .complex_core import SimplicialComplex, VertexSet
from .errors import InvalidInputError, ParseError

logger = logging.getLogger(__name__)


def _lineas_utiles(texto):
    for numero, linea in enumerate(texto.splitlines(), start=1):
        limpia = linea.split("#", 1)[0].strip()
        if limpia:
            yield numero, limpia


def _encabezado(lineas, path):
    try:
        numero, linea = next(lineas)
    except StopIteration:
        raise ParseError("archivo vacío: falta el encabezado 'n <N>'", line=1, path=path) from None
    partes = linea.split()
    if len(partes) != 2 or partes[0] != "n":
        raise ParseError(f"se esperaba 'n <N>', se encontró {linea!r}", line=numero, path=path)
    try:
        n = int(partes[1])
    except ValueError:
        raise ParseError(f"n no es un entero: {partes[1]!r}", line=numero, path=path) from None
    if n < 0:
        raise ParseError(f"n debe ser no negativo, se recibió {n}", line=numero, path=path)
    return n


def _enteros(linea, numero, path):
    try:
        return [int(x) for x in linea.split()]
    except ValueError:
        raise ParseError(f"se esperaban enteros: {linea!r}", line=numero, path=path) from None


def parse_facets(texto, path=None):
    """Texto de un archivo de facetas → SimplicialComplex."""
    lineas = _lineas_utiles(texto)
    n = _encabezado(lineas, path)
    facetas = []
    for numero, linea in lineas:
        vertices = _enteros(linea, numero, path)
        fuera = [v for v in vertices if not 1 <= v <= n]
        if fuera:
            raise ParseError(f"vértice fuera de [1, {n}]: {fuera[0]}", line=numero, path=path)
        facetas.append(VertexSet.of(vertices))
    if not facetas:
        return SimplicialComplex.empty(n)
    return SimplicialComplex(n, tuple(facetas))


def format_facets(c):
    lineas = [f"n {c.n}"]
    lineas += [" ".join(str(v) for v in f.vertices) for f in c.facets if len(f)]
    return "\n".join(lineas) + "\n"


def read_facets(ruta):
    ruta = Path(ruta)
    try:
        texto = ruta.read_text(encoding="utf-8")
    except OSError as e:
        raise InvalidInputError(f"no se pudo leer {ruta}: {e}") from e
    c = parse_facets(texto, path=str(ruta))
    logger.debug("📄 %s: n=%d, %d facetas", ruta, c.n, len(c.facets))
    return c


def write_facets(c, ruta):
    Path(ruta).write_text(format_facets(c), encoding="utf-8")


def parse_graph(texto, path=None):
    """Formato de grafo: `n <N>` y luego una arista `u v` por línea."""
    from .structure import Graph

    lineas = _lineas_utiles(texto)
    n = _encabezado(lineas, path)
    aristas = []
    for numero, linea in lineas:
        par = _enteros(linea, numero, path)
        if len(par) != 2:
            raise ParseError(f"una arista tiene dos extremos: {linea!r}", line=numero, path=path)
        u, v = par
        if not (1 <= u <= n and 1 <= v <= n) or u == v:
            raise ParseError(f"arista inválida {u} {v} para n={n}", line=numero, path=path)
        aristas.append((u, v))
    return Graph.from_edges(n, aristas)


def format_graph(g):
    lineas = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lineas) + "\n"


def read_graph(ruta):
    ruta = Path(ruta)
    try:
        texto = ruta.read_text(encoding="utf-8")
    except OSError as e:
        raise InvalidInputError(f"no se pudo leer {ruta}: {e}") from e
    return parse_graph(texto, path=str(ruta))


def write_graph(g, ruta):
    Path(ruta).write_text(format_graph(g), encoding="utf-8")
