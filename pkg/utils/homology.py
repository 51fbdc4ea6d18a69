"""
Homología simplicial reducida sobre un cuerpo exacto (Q o GF(p))

Se trabaja siempre con el complejo de cadenas aumentado: ∂_0 lleva cada
vértice a la cara vacía.
"""
import logging
from dataclasses import dataclass

from sympy import isprime

from .complex_core import SimplicialComplex, VertexSet, _bits, _mask_key, face_masks
from .errors import ConsistencyError, InvalidInputError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FieldSpec:
    """Cuerpo de coeficientes: característica 0 (Q) o un primo p (GF(p))."""
    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p != 0 and not isprime(p):
            raise InvalidInputError(f"GF(p) requiere p primo, se recibió p={p}")

    @classmethod
    def rationals(cls):
        return cls(0)

    @classmethod
    def prime(cls, p):
        return cls(int(p))

    @classmethod
    def parse(cls, texto):
        """
        Interpreta la notación de la línea de comandos

        Acepta 'Q', 'QQ', 'GF2', 'GF(7)' y 'GFp:7'.
        """
        t = str(texto).strip().upper().replace(' ', '')
        if t in ('Q', 'QQ'):
            return cls(0)
        for prefijo in ('GFP:', 'GF(', 'GF'):
            if t.startswith(prefijo):
                resto = t[len(prefijo):].rstrip(')')
                if resto.isdigit() and int(resto) > 0:
                    return cls(int(resto))
                break
        raise InvalidInputError(f"cuerpo no reconocido: {texto!r} (use Q, GF2 o GFp:<p>)")

    @property
    def is_rational(self):
        return self.characteristic == 0

    @property
    def name(self):
        return "Q" if self.characteristic == 0 else f"GF({self.characteristic})"

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class BoundaryMatrix:
    """
    Matriz de ∂_i: filas = caras de dimensión i-1, columnas = caras de dimensión i

    Las columnas se guardan dispersas como tuplas (fila, ±1).
    """
    dimension: int
    row_faces: tuple
    col_faces: tuple
    columns: tuple
    field: FieldSpec = FieldSpec()

    @property
    def shape(self):
        return (len(self.row_faces), len(self.col_faces))

    def to_dense(self):
        """Lista de filas con las entradas ya reducidas al cuerpo."""
        p = self.field.characteristic
        filas = [[0] * len(self.col_faces) for _ in self.row_faces]
        for j, col in enumerate(self.columns):
            for i, valor in col:
                filas[i][j] = valor % p if p else valor
        return filas

    def rank(self):
        return matrix_rank(self, self.field)


def _faces_by_size(masks):
    niveles = {}
    for m in face_masks(masks):
        niveles.setdefault(m.bit_count(), []).append(m)
    for lista in niveles.values():
        lista.sort(key=_mask_key)
    return niveles


def _boundary_columns(caras_i, caras_menores):
    """Columnas dispersas de ∂ con el signo (-1)^pos de la orientación estándar."""
    indice = {g: r for r, g in enumerate(caras_menores)}
    columnas = []
    for f in caras_i:
        columnas.append(tuple(
            (indice[f & ~(1 << b)], -1 if pos % 2 else 1)
            for pos, b in enumerate(_bits(f))))
    return columnas


def boundary_matrix(c, i, f=FieldSpec()):
    """∂_i del complejo aumentado de c (matriz vacía de forma correcta fuera de rango)."""
    niveles = _faces_by_size(c.masks)
    filas = niveles.get(i, []) if i >= 0 else []
    cols = niveles.get(i + 1, []) if i >= -1 else []
    columnas = _boundary_columns(cols, filas) if filas and cols else [() for _ in cols]
    return BoundaryMatrix(
        dimension=i,
        row_faces=tuple(VertexSet(m) for m in filas),
        col_faces=tuple(VertexSet(m) for m in cols),
        columns=tuple(columnas),
        field=f,
    )


def _rank_gf2(vectores):
    base = {}
    for v in vectores:
        while v:
            alto = v.bit_length() - 1
            if alto in base:
                v ^= base[alto]
            else:
                base[alto] = v
                break
    return len(base)


def _rank_mod_p(vectores, p):
    filas = [{c: v % p for c, v in vec.items() if v % p} for vec in vectores]
    filas = [f for f in filas if f]
    rango = 0
    while filas:
        pivote = min(range(len(filas)), key=lambda r: len(filas[r]))
        fila = filas.pop(pivote)
        col = next(iter(fila))
        inv = pow(fila[col], -1, p)
        nuevas = []
        for r in filas:
            a = r.get(col)
            if a:
                factor = a * inv % p
                for c, v in fila.items():
                    x = (r.get(c, 0) - factor * v) % p
                    if x:
                        r[c] = x
                    else:
                        r.pop(c, None)
            if r:
                nuevas.append(r)
        filas = nuevas
        rango += 1
    return rango


def _rank_bareiss(vectores):
    """
    Rango sobre Q por eliminación de Bareiss libre de fracciones

    Cada paso multiplica por el pivote actual y divide (exactamente) por el
    anterior; elegir el pivote entre las filas restantes es sólo una
    permutación, así que la división sigue siendo exacta.
    """
    filas = [dict(v) for v in vectores if v]
    rango = 0
    previo = 1
    while filas:
        pivote = min(range(len(filas)), key=lambda r: len(filas[r]))
        fila = filas.pop(pivote)
        col, p = min(fila.items(), key=lambda cv: abs(cv[1]))
        nuevas = []
        for r in filas:
            a = r.get(col, 0)
            nueva = {c: p * v for c, v in r.items()}
            if a:
                for c, v in fila.items():
                    nueva[c] = nueva.get(c, 0) - a * v
            nueva = {c: v // previo for c, v in nueva.items() if v}
            if nueva:
                nuevas.append(nueva)
        filas = nuevas
        previo = p
        rango += 1
    return rango


def _columns_rank(columnas, campo):
    p = campo.characteristic
    if p == 2:
        vectores = []
        for col in columnas:
            v = 0
            for r, valor in col:
                if valor % 2:
                    v |= 1 << r
            vectores.append(v)
        return _rank_gf2(vectores)
    vectores = [dict(col) for col in columnas]
    if p:
        return _rank_mod_p(vectores, p)
    return _rank_bareiss(vectores)


def matrix_rank(matriz, campo=FieldSpec()):
    """
    Rango exacto de una BoundaryMatrix o de una matriz densa (lista de filas)

    Las entradas densas deben ser enteras.
    """
    if isinstance(matriz, BoundaryMatrix):
        return _columns_rank(matriz.columns, campo)
    p = campo.characteristic
    columnas = {}
    for i, fila in enumerate(matriz):
        for j, valor in enumerate(fila):
            valor = int(valor) % p if p else int(valor)
            if valor:
                columnas.setdefault(j, []).append((i, valor))
    return _columns_rank([tuple(v) for v in columnas.values()], campo)


def _ranks(niveles, dim, campo):
    """rangos[i] = rango de ∂_i para i = 0..dim+1 (∂_0 es la aumentación)."""
    rangos = [1] + [0] * (dim + 1)
    for i in range(1, dim + 1):
        columnas = _boundary_columns(niveles[i + 1], niveles[i])
        rangos[i] = _columns_rank(columnas, campo)
    return rangos


def reduced_homology_masks(masks, campo=FieldSpec()):
    """
    Homología reducida del complejo generado por las facetas dadas

    Devuelve {dimensión: dim H̃_i} sólo con las entradas no nulas.
    """
    if masks == (0,) or masks == [0]:
        return {-1: 1}
    comun = masks[0]
    for m in masks[1:]:
        comun &= m
    if comun:
        # un cono es acíclico
        return {}
    dim = max(m.bit_count() for m in masks) - 1
    niveles = _faces_by_size(masks)
    conteo = [len(niveles.get(i + 1, ())) for i in range(dim + 1)]

    def _homologia(rangos):
        h = {}
        for i in range(dim + 1):
            valor = conteo[i] - rangos[i] - rangos[i + 1]
            if valor:
                h[i] = valor
        return h

    dos = FieldSpec(2)
    h2 = _homologia(_ranks(niveles, dim, dos))
    if campo.characteristic == 2:
        return h2
    if campo.is_rational and not h2:
        # rango_Q ≥ rango_2, así que la homología sobre Q también se anula
        return {}
    return _homologia(_ranks(niveles, dim, campo))


def reduced_betti_numbers(c, f=FieldSpec()):
    """Lista de (i, dim H̃_i) para i = -1..dim(c)."""
    h = reduced_homology_masks(c.masks, f)
    return [(i, h.get(i, 0)) for i in range(-1, c.dimension + 1)]


def reduced_euler_characteristic(c):
    """Σ_i (-1)^i f_i con i ≥ -1 (la cara vacía cuenta en dimensión -1)."""
    return _euler_masks(c.masks)


def _euler_masks(masks):
    total = 0
    for m in face_masks(masks):
        total += -1 if m.bit_count() % 2 == 0 else 1
    return total


def check_euler_poincare(masks, homologia):
    """Euler-Poincaré: Σ(-1)^i f_i = Σ(-1)^i dim H̃_i; lanza ConsistencyError si falla."""
    izquierda = _euler_masks(masks)
    derecha = sum(-v if i % 2 else v for i, v in homologia.items())
    if izquierda != derecha:
        complejo = SimplicialComplex(max(m.bit_length() for m in masks), tuple(masks))
        raise ConsistencyError(
            f"Euler-Poincaré falla en {complejo!r}: caras {izquierda} vs homología {derecha}")
