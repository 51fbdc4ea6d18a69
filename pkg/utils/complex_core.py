"""
Complejos simpliciales y complejos de van der Waerden vdW(n,k)

Los vértices son 1-based hacia afuera (1..n) y 0-based dentro de las
máscaras de bits: el vértice v ocupa el bit v-1.
"""
import logging
import random
from dataclasses import dataclass, field
from functools import cached_property
from math import comb

from . import config
from .errors import InvalidInputError

logger = logging.getLogger(__name__)


def _bits(mask):
    """Posiciones (0-based) de los bits encendidos, en orden creciente."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask_key(mask):
    """Orden canónico: cardinalidad y luego lista de vértices 1-based."""
    return (mask.bit_count(), [b + 1 for b in _bits(mask)])


def _maximal(masks):
    """Deja sólo las máscaras maximales respecto a la inclusión, sin repetidos."""
    kept = []
    for m in sorted(set(masks), key=lambda x: -x.bit_count()):
        if not any(m & ~k == 0 for k in kept):
            kept.append(m)
    return kept


def _submasks(mask):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def face_masks(facet_masks):
    """Todas las caras (como máscaras) generadas por las facetas dadas."""
    caras = set()
    for f in facet_masks:
        if f in caras:
            continue
        caras.update(_submasks(f))
    return caras


@dataclass(frozen=True, order=False)
class VertexSet:
    """Subconjunto de {1..n} guardado como máscara de bits."""
    bits: int = 0

    def __post_init__(self):
        if self.bits < 0:
            raise InvalidInputError(f"máscara negativa: {self.bits}")

    @classmethod
    def of(cls, vertices):
        mask = 0
        for v in vertices:
            v = int(v)
            if v < 1:
                raise InvalidInputError(f"vértice fuera de rango: {v} (los vértices son 1-based)")
            mask |= 1 << (v - 1)
        return cls(mask)

    @property
    def vertices(self):
        return tuple(b + 1 for b in _bits(self.bits))

    @property
    def max_vertex(self):
        return self.bits.bit_length()

    def __len__(self):
        return self.bits.bit_count()

    def __iter__(self):
        return iter(self.vertices)

    def __contains__(self, v):
        return v >= 1 and bool(self.bits >> (v - 1) & 1)

    def issubset(self, other):
        return self.bits & ~other.bits == 0

    def __or__(self, other):
        return VertexSet(self.bits | other.bits)

    def __and__(self, other):
        return VertexSet(self.bits & other.bits)

    def __sub__(self, other):
        return VertexSet(self.bits & ~other.bits)

    def sort_key(self):
        return _mask_key(self.bits)

    def __repr__(self):
        return "{" + ",".join(str(v) for v in self.vertices) + "}"


@dataclass(frozen=True)
class SimplicialComplex:
    """
    Complejo simplicial sobre {1..n} dado por sus facetas

    Las facetas se deduplican, se maximalizan y se ordenan (cardinalidad,
    luego orden lexicográfico) al construir. El complejo vacío {∅} se
    representa con una sola faceta vacía.
    """
    n: int
    facets: tuple = field(default=())

    def __post_init__(self):
        if self.n < 0:
            raise InvalidInputError(f"n debe ser no negativo, se recibió {self.n}")
        masks = [f.bits if isinstance(f, VertexSet) else int(f) for f in self.facets]
        if not masks:
            raise InvalidInputError("un complejo necesita al menos una faceta (use {∅} para el complejo vacío)")
        limite = 1 << self.n
        for m in masks:
            if m < 0 or m >= limite:
                raise InvalidInputError(
                    f"la faceta {VertexSet(m)!r} tiene vértices fuera de [1, {self.n}]")
        canon = sorted(_maximal(masks), key=_mask_key)
        object.__setattr__(self, 'facets', tuple(VertexSet(m) for m in canon))

    @classmethod
    def from_facets(cls, n, facets):
        """Construye desde listas de vértices 1-based."""
        return cls(n, tuple(VertexSet.of(f) for f in facets))

    @classmethod
    def empty(cls, n):
        """El complejo {∅} sobre el conjunto base {1..n}."""
        return cls(n, (VertexSet(0),))

    @classmethod
    def simplex(cls, n):
        return cls(n, (VertexSet((1 << n) - 1),))

    @cached_property
    def masks(self):
        return tuple(f.bits for f in self.facets)

    @cached_property
    def vertex_mask(self):
        total = 0
        for m in self.masks:
            total |= m
        return total

    @property
    def vertices(self):
        """Vértices que están en alguna faceta."""
        return VertexSet(self.vertex_mask).vertices

    @property
    def isolated_vertices(self):
        """Vértices del conjunto base que no están en ninguna faceta."""
        return VertexSet(((1 << self.n) - 1) & ~self.vertex_mask).vertices

    @property
    def dimension(self):
        return max(m.bit_count() for m in self.masks) - 1

    @property
    def is_pure(self):
        return len({m.bit_count() for m in self.masks}) == 1

    @property
    def is_void_free_empty(self):
        return self.masks == (0,)

    @property
    def is_simplex(self):
        return len(self.masks) == 1

    def faces(self):
        """Todas las caras, ∅ incluida, en orden canónico."""
        return [VertexSet(m) for m in sorted(face_masks(self.masks), key=_mask_key)]

    def faces_of_dimension(self, i):
        return [VertexSet(m) for m in sorted(face_masks(self.masks), key=_mask_key)
                if m.bit_count() == i + 1]

    def __repr__(self):
        return f"SimplicialComplex(n={self.n}, facets={list(self.facets)})"


@dataclass(frozen=True)
class VdwParams:
    """Parámetros de vdW(n,k): conjunto base {1..n}, progresiones de k pasos."""
    n: int
    k: int

    def __post_init__(self):
        if not (0 < self.k < self.n):
            raise InvalidInputError(
                f"parámetros inválidos: se requiere 0 < k < n, "
                f"se recibió n={self.n}, k={self.k}")

    @property
    def d(self):
        """Mayor entero con 1 + k·d ≤ n."""
        return (self.n - 1) // self.k


def _as_mask(c, s):
    """Acepta VertexSet, máscara o iterable de vértices 1-based; valida el rango."""
    if isinstance(s, VertexSet):
        mask = s.bits
    elif isinstance(s, int):
        mask = s
    else:
        mask = VertexSet.of(s).bits
    if mask >> c.n:
        raise InvalidInputError(
            f"el conjunto {VertexSet(mask)!r} tiene vértices fuera de [1, {c.n}]")
    return mask


def make_vdw(params):
    """
    Construye vdW(n,k)

    Las facetas son todas las progresiones {a, a+j, ..., a+kj} con a, j ≥ 1
    y a + kj ≤ n.
    """
    if not isinstance(params, VdwParams):
        params = VdwParams(*params)
    n, k = params.n, params.k
    facetas = []
    for j in range(1, params.d + 1):
        for a in range(1, n - k * j + 1):
            mask = 0
            for t in range(k + 1):
                mask |= 1 << (a + t * j - 1)
            facetas.append(mask)
    return SimplicialComplex(n, tuple(facetas))


def vdw_facet_count(params):
    """|{(a,j) : a + kj ≤ n}|"""
    return sum(params.n - params.k * j for j in range(1, params.d + 1))


def is_face(c, s):
    mask = _as_mask(c, s)
    return any(mask & ~f == 0 for f in c.masks)


def _levelwise_non_faces(c, caras):
    """
    No-caras mínimas por cardinalidad creciente

    Un candidato de tamaño s se genera una sola vez (desde el candidato sin
    su vértice mayor) y sólo si todos sus subconjuntos de tamaño s-1 son
    caras; así ningún superconjunto de una no-cara llega a probarse.
    """
    resultado = [1 << v for v in range(c.n) if (1 << v) not in caras]
    nivel = [1 << v for v in range(c.n) if (1 << v) in caras]
    while nivel:
        siguiente = []
        for t in nivel:
            for x in range(t.bit_length(), c.n):
                bit = 1 << x
                if bit not in caras:
                    continue
                u = t | bit
                if u in caras:
                    siguiente.append(u)
                elif all((u & ~(1 << y)) in caras for y in _bits(t)):
                    resultado.append(u)
        nivel = siguiente
    return resultado


def _transversal_non_faces(c):
    """
    No-caras mínimas como transversales mínimos de los complementos de las facetas

    S no es cara si y sólo si corta el complemento de cada faceta.
    """
    universo = (1 << c.n) - 1
    aristas = sorted({universo & ~f for f in c.masks}, key=lambda x: x.bit_count())
    if aristas and aristas[0] == 0:
        return []
    transversales = [0]
    for arista in aristas:
        cortan = [t for t in transversales if t & arista]
        nuevos = []
        for t in transversales:
            if t & arista:
                continue
            for b in _bits(arista):
                u = t | (1 << b)
                if any(h & ~u == 0 for h in cortan):
                    continue
                nuevos.append(u)
        nuevos = set(nuevos)
        minimales = [u for u in nuevos
                     if not any(o != u and o & ~u == 0 for o in nuevos)]
        transversales = cortan + minimales
    return transversales


def minimal_non_faces(c):
    """
    No-caras mínimas de c, ordenadas por (cardinalidad, orden lexicográfico)

    Corresponden a los generadores minimales del ideal de Stanley-Reisner.
    """
    estimado = sum(1 << m.bit_count() for m in c.masks)
    if estimado <= config.FACE_LIMIT:
        masks = _levelwise_non_faces(c, face_masks(c.masks))
    else:
        logger.debug("%d caras estimadas, se usan transversales mínimos", estimado)
        masks = _transversal_non_faces(c)
    return [VertexSet(m) for m in sorted(masks, key=_mask_key)]


def lemma_nonface_predictions(params):
    """
    Las dos no-caras mínimas que se predicen para 1 < k < n/2, n ≥ 7

    Siempre {1, kd}; la de tamaño 3 depende de si d divide a k.
    """
    if not isinstance(params, VdwParams):
        params = VdwParams(*params)
    n, k, d = params.n, params.k, params.d
    if not (1 < k and 2 * k < n and n >= 7):
        raise InvalidInputError(
            f"la predicción de no-caras requiere 1 < k < n/2 y n ≥ 7, se recibió n={n}, k={k}")
    pares = VertexSet.of((1, k * d))
    if k % d:
        trio = (1, 1 + k * (d - 1), 1 + k * d)
    elif d < k:
        trio = (1, 1 + (k - 1) * (d - 1), 1 + (k - 1) * d)
    else:
        trio = (1, 1 + (k - 2) * d, 1 + (k - 1) * (d - 1))
    return [pares, VertexSet.of(trio)]


def generator_count_k1(n):
    """vdW(n,1) es el grafo completo: su ideal lo generan los C(n,3) tríos."""
    if n < 3:
        return 0
    return comb(n, 3)


def link(c, f):
    """Facetas {G \\ f : f ⊆ G}; los vértices de f quedan aislados."""
    mask = _as_mask(c, f)
    contienen = [g & ~mask for g in c.masks if mask & ~g == 0]
    if not contienen:
        raise InvalidInputError(f"{VertexSet(mask)!r} no es una cara del complejo")
    return SimplicialComplex(c.n, tuple(contienen))


def deletion(c, v):
    """Caras de c que no contienen a v."""
    if not (1 <= v <= c.n):
        raise InvalidInputError(f"vértice fuera de rango: {v} (n={c.n})")
    bit = 1 << (v - 1)
    if not c.vertex_mask & bit:
        return c
    return SimplicialComplex(c.n, tuple(g & ~bit for g in c.masks))


def induced_subcomplex(c, w):
    """Δ_W: las caras de c contenidas en W; {∅} si ninguna cara no vacía cabe."""
    mask = _as_mask(c, w)
    return SimplicialComplex(c.n, tuple(g & mask for g in c.masks))


def one_skeleton(c):
    """Grafo sobre [1, n] con arista {u,v} si {u,v} es cara."""
    from .structure import Graph

    adyacencia = [0] * c.n
    for f in c.masks:
        for b in _bits(f):
            adyacencia[b] |= f & ~(1 << b)
    return Graph(c.n, tuple(adyacencia))


def f_vector(c):
    """(f_{-1}, f_0, ..., f_dim): número de caras por dimensión."""
    conteo = [0] * (c.dimension + 2)
    for m in face_masks(c.masks):
        conteo[m.bit_count()] += 1
    return tuple(conteo)


def h_vector(c):
    """h_k = Σ_i (-1)^(k-i) C(d-i, k-i) f_{i-1}, con d = dim + 1."""
    f = f_vector(c)
    d = c.dimension + 1
    return tuple(
        sum((-1) ** (k - i) * comb(d - i, k - i) * f[i] for i in range(k + 1))
        for k in range(d + 1))


def random_complex(rng=None, max_vertices=7, max_facets=8):
    """
    Complejo aleatorio pequeño para pruebas de propiedades

    Los vértices usados se reetiquetan a 1..n para que ninguno quede aislado.
    """
    rng = rng if rng is not None else random.Random(config.DEFAULT_SEED)
    m = rng.randint(1, max_vertices)
    cuantas = rng.randint(1, max_facets)
    crudas = [rng.randint(1, (1 << m) - 1) for _ in range(cuantas)]
    maximales = _maximal(crudas)
    usados = 0
    for f in maximales:
        usados |= f
    etiqueta = {b: i for i, b in enumerate(_bits(usados))}
    facetas = []
    for f in maximales:
        nueva = 0
        for b in _bits(f):
            nueva |= 1 << etiqueta[b]
        facetas.append(nueva)
    return SimplicialComplex(len(etiqueta), tuple(facetas))
