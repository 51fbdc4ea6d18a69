"""
Grafos, cordalidad, complejos de cliques y cuasi-bosques

Los grafos usan la misma convención que los complejos: vértices 1..n hacia
afuera, bit v-1 por dentro.
"""
import logging
from collections import deque
from dataclasses import dataclass

from . import config
from .complex_core import SimplicialComplex, VertexSet, _as_mask, _bits, minimal_non_faces
from .errors import InvalidInputError, ResourceLimitError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Graph:
    """Grafo simple no dirigido sobre {1..n}; adjacency[v-1] es la máscara de vecinos de v."""
    n: int
    adjacency: tuple = ()

    def __post_init__(self):
        adj = tuple(self.adjacency) or (0,) * self.n
        if len(adj) != self.n:
            raise InvalidInputError(f"se esperaban {self.n} listas de adyacencia, hay {len(adj)}")
        for v, vecinos in enumerate(adj):
            if vecinos >> v & 1:
                raise InvalidInputError(f"lazo en el vértice {v + 1}")
            if vecinos >> self.n:
                raise InvalidInputError(f"el vértice {v + 1} tiene vecinos fuera de [1, {self.n}]")
            for u in _bits(vecinos):
                if not adj[u] >> v & 1:
                    raise InvalidInputError(f"adyacencia no simétrica entre {v + 1} y {u + 1}")
        object.__setattr__(self, 'adjacency', adj)

    @classmethod
    def from_edges(cls, n, edges):
        adj = [0] * n
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise InvalidInputError(f"arista fuera de rango: {u} {v} (n={n})")
            if u == v:
                raise InvalidInputError(f"lazo en el vértice {u}")
            adj[u - 1] |= 1 << (v - 1)
            adj[v - 1] |= 1 << (u - 1)
        return cls(n, tuple(adj))

    @classmethod
    def complete(cls, n):
        todos = (1 << n) - 1
        return cls(n, tuple(todos & ~(1 << v) for v in range(n)))

    @classmethod
    def cycle(cls, n):
        return cls.from_edges(n, [(v, v % n + 1) for v in range(1, n + 1)])

    def edges(self):
        return [(v + 1, u + 1) for v in range(self.n) for u in _bits(self.adjacency[v]) if u > v]

    def has_edge(self, u, v):
        return bool(self.adjacency[u - 1] >> (v - 1) & 1)

    def neighbors(self, v):
        return VertexSet(self.adjacency[v - 1]).vertices


@dataclass(frozen=True)
class ChordalityCheck:
    """Veredicto de cordalidad con su certificado (PEO o ciclo inducido sin cuerdas)."""
    is_chordal: bool
    peo: tuple = None
    cycle: tuple = None

    def __bool__(self):
        return self.is_chordal

    def to_json(self):
        return {"chordal": self.is_chordal,
                "peo": list(self.peo) if self.peo else None,
                "chordless_cycle": list(self.cycle) if self.cycle else None}


@dataclass(frozen=True)
class LeafOrder:
    """
    Orden de hojas: order[i] es hoja de <order[0..i]> con rama order[branches[i]]

    Las posiciones son 0-based; branches[0] es None.
    """
    order: tuple
    branches: tuple

    def to_json(self):
        return {"order": [list(f.vertices) for f in self.order],
                "branches": list(self.branches)}


def _lex_bfs(g):
    etiquetas = {v: [] for v in range(g.n)}
    pendientes = set(range(g.n))
    orden = []
    for paso in range(g.n, 0, -1):
        v = max(pendientes, key=lambda u: (etiquetas[u], -u))
        orden.append(v)
        pendientes.discard(v)
        for u in _bits(g.adjacency[v]):
            if u in pendientes:
                etiquetas[u].append(paso)
    return orden


def _peo_failure(g, peo):
    """Primer (v, padre, w) que rompe el orden de eliminación, o None."""
    posicion = {v: i for i, v in enumerate(peo)}
    for v in peo:
        posteriores = [u for u in _bits(g.adjacency[v]) if posicion[u] > posicion[v]]
        if not posteriores:
            continue
        padre = min(posteriores, key=posicion.__getitem__)
        for w in posteriores:
            if w != padre and not g.adjacency[padre] >> w & 1:
                return v, padre, w
    return None


def verify_peo(g, orden):
    """Comprueba que `orden` (1-based) sea un orden de eliminación perfecto."""
    peo = [v - 1 for v in orden]
    if sorted(peo) != list(range(g.n)):
        return False
    return _peo_failure(g, peo) is None


def _cycle_through(g, v, a, b):
    """Ciclo inducido v-a-...-b-v: camino más corto de a a b evitando N[v] salvo a y b."""
    prohibidos = g.adjacency[v] | (1 << v)
    permitidos = ((1 << g.n) - 1) & ~prohibidos | (1 << a) | (1 << b)
    previo = {a: None}
    cola = deque([a])
    while cola:
        x = cola.popleft()
        if x == b:
            camino = []
            while x is not None:
                camino.append(x)
                x = previo[x]
            return [v] + camino[::-1]
        for y in _bits(g.adjacency[x] & permitidos):
            if y not in previo:
                previo[y] = x
                cola.append(y)
    return None


def find_chordless_cycle(g, pista=None):
    """Un ciclo inducido sin cuerdas de longitud ≥ 4 (1-based), o None."""
    candidatos = []
    if pista is not None:
        candidatos.append(pista)
    for v in range(g.n):
        vecinos = list(_bits(g.adjacency[v]))
        for i, a in enumerate(vecinos):
            for b in vecinos[i + 1:]:
                if not g.adjacency[a] >> b & 1:
                    candidatos.append((v, a, b))
    for v, a, b in candidatos:
        ciclo = _cycle_through(g, v, a, b)
        if ciclo is not None:
            return tuple(x + 1 for x in ciclo)
    return None


def is_chordal(g):
    """
    Cordalidad por LexBFS

    El reverso del orden de LexBFS es un orden de eliminación perfecto si y
    sólo si el grafo es cordal.
    """
    peo = _lex_bfs(g)[::-1]
    falla = _peo_failure(g, peo)
    if falla is None:
        return ChordalityCheck(True, peo=tuple(v + 1 for v in peo))
    ciclo = find_chordless_cycle(g, pista=falla)
    return ChordalityCheck(False, cycle=ciclo)


def _degeneracy_order(g):
    grados = {v: g.adjacency[v].bit_count() for v in range(g.n)}
    restantes = set(range(g.n))
    orden = []
    while restantes:
        v = min(restantes, key=lambda u: (grados[u], u))
        orden.append(v)
        restantes.discard(v)
        for u in _bits(g.adjacency[v]):
            if u in restantes:
                grados[u] -= 1
    return orden


def _bron_kerbosch(adj, r, p, x, salida):
    if not p and not x:
        salida.append(r)
        return
    pivote = max(_bits(p | x), key=lambda u: (p & adj[u]).bit_count())
    for v in list(_bits(p & ~adj[pivote])):
        bit = 1 << v
        _bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], salida)
        p &= ~bit
        x |= bit


def maximal_cliques(g):
    """Cliques maximales (máscaras) por Bron-Kerbosch con pivote y orden de degeneración."""
    salida = []
    vistos = 0
    for v in _degeneracy_order(g):
        vecinos = g.adjacency[v]
        _bron_kerbosch(g.adjacency, 1 << v, vecinos & ~vistos, vecinos & vistos, salida)
        vistos |= 1 << v
    return salida


def clique_complex(g):
    cliques = maximal_cliques(g)
    if not cliques:
        return SimplicialComplex.empty(g.n)
    return SimplicialComplex(g.n, tuple(cliques))


def is_flag(c):
    """Toda no-cara mínima tiene exactamente dos elementos."""
    return all(len(s) == 2 for s in minimal_non_faces(c))


def _lex(mask):
    return [b + 1 for b in _bits(mask)]


def _leaves(masks, activos):
    """Pares (hoja, rama) del subcomplejo de las facetas activas, en orden lexicográfico."""
    indices = sorted((i for i in range(len(masks)) if activos >> i & 1), key=lambda i: _lex(masks[i]))
    for fi in indices:
        f = masks[fi]
        otros = [i for i in indices if i != fi]
        for gi in otros:
            rama = masks[gi] & f
            if all(masks[h] & f & ~rama == 0 for h in otros):
                yield fi, gi


def find_leaf(c):
    """La hoja lexicográficamente menor y su rama menor, o None."""
    masks = c.masks
    if len(masks) < 2:
        return None
    for fi, gi in _leaves(masks, (1 << len(masks)) - 1):
        return VertexSet(masks[fi]), VertexSet(masks[gi])
    return None


def leaf_order(c):
    """
    Busca un orden de hojas quitando hojas desde el final, con retroceso

    Los conjuntos de facetas que ya fallaron se recuerdan para no repetir
    la búsqueda.
    """
    masks = c.masks
    if len(masks) > config.LEAF_ORDER_MAX_FACETS:
        raise ResourceLimitError(
            f"la búsqueda de orden de hojas admite hasta {config.LEAF_ORDER_MAX_FACETS} facetas, "
            f"el complejo tiene {len(masks)}", limit=config.LEAF_ORDER_MAX_FACETS)
    fallidos = set()

    def buscar(activos):
        if activos.bit_count() == 1:
            return [(activos.bit_length() - 1, None)]
        if activos in fallidos:
            return None
        probadas = set()
        for fi, gi in _leaves(masks, activos):
            if fi in probadas:
                continue
            probadas.add(fi)
            resto = buscar(activos & ~(1 << fi))
            if resto is not None:
                return resto + [(fi, gi)]
        fallidos.add(activos)
        return None

    pasos = buscar((1 << len(masks)) - 1)
    if pasos is None:
        return None
    orden = [fi for fi, _ in pasos]
    posicion = {fi: p for p, fi in enumerate(orden)}
    return LeafOrder(
        order=tuple(VertexSet(masks[fi]) for fi in orden),
        branches=tuple(None if gi is None else posicion[gi] for _, gi in pasos))


def verify_leaf_order(c, lo):
    """Comprobación independiente de un LeafOrder."""
    if sorted(f.bits for f in lo.order) != sorted(c.masks) or len(lo.branches) != len(lo.order):
        return False
    for i in range(1, len(lo.order)):
        rama = lo.branches[i]
        if rama is None or not (0 <= rama < i):
            return False
        f = lo.order[i].bits
        g = lo.order[rama].bits & f
        if any(h.bits & f & ~g for h in lo.order[:i]):
            return False
    return True


def is_quasi_forest(c):
    return leaf_order(c) is not None


def free_vertices(c, f):
    """Vértices de la faceta f que no están en ninguna otra faceta."""
    mask = _as_mask(c, f)
    if mask not in c.masks:
        raise InvalidInputError(f"{VertexSet(mask)!r} no es una faceta del complejo")
    otros = 0
    for g in c.masks:
        if g != mask:
            otros |= g
    return VertexSet(mask & ~otros)
