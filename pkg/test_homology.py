import pytest
from sympy import Matrix

from utils.complex_core import SimplicialComplex, make_vdw
from utils.errors import ConsistencyError, InvalidInputError
from utils.homology import (
    FieldSpec, boundary_matrix, check_euler_poincare, matrix_rank, reduced_betti_numbers,
    reduced_euler_characteristic, reduced_homology_masks,
)

Q = FieldSpec()
GF2 = FieldSpec(2)
GF3 = FieldSpec(3)


@pytest.mark.parametrize("texto,p", [("Q", 0), ("QQ", 0), ("GF2", 2), ("GF(7)", 7), ("GFp:5", 5), ("gf(3)", 3)])
def test_parse_de_cuerpos(texto, p):
    assert FieldSpec.parse(texto).characteristic == p


def test_cuerpo_no_primo():
    with pytest.raises(InvalidInputError):
        FieldSpec.parse("GF(4)")
    with pytest.raises(InvalidInputError):
        FieldSpec.parse("R")


@pytest.mark.parametrize("texto", ["GF0", "GF(0)", "GFp:0"])
def test_cuerpo_de_caracteristica_cero_no_es_gf(texto):
    with pytest.raises(InvalidInputError):
        FieldSpec.parse(texto)


def test_nombre_de_cuerpo():
    assert Q.name == "Q"
    assert GF2.name == "GF(2)"
    assert FieldSpec.parse(GF2.name) == GF2


def test_simplejo_aciclico():
    c = SimplicialComplex.simplex(5)
    assert all(h == 0 for _, h in reduced_betti_numbers(c, Q))


def test_borde_de_triangulo(triangle_boundary):
    for campo in (Q, GF2, GF3):
        assert reduced_betti_numbers(triangle_boundary, campo) == [(-1, 0), (0, 0), (1, 1)]


def test_complejo_vacio():
    assert reduced_betti_numbers(SimplicialComplex.empty(3)) == [(-1, 1)]


def test_dos_puntos():
    c = SimplicialComplex.from_facets(2, [[1], [2]])
    assert reduced_betti_numbers(c) == [(-1, 0), (0, 1)]


def test_plano_proyectivo_depende_del_cuerpo(rp2):
    assert reduced_homology_masks(rp2.masks, GF2) == {1: 1, 2: 1}
    assert reduced_homology_masks(rp2.masks, Q) == {}
    assert reduced_homology_masks(rp2.masks, GF3) == {}


def test_cuatro_ciclo():
    c = SimplicialComplex.from_facets(4, [[1, 2], [2, 3], [3, 4], [1, 4]])
    assert reduced_homology_masks(c.masks, Q) == {1: 1}


def test_borde_de_borde_es_cero():
    for c in (make_vdw((5, 2)), make_vdw((7, 3)), make_vdw((6, 1))):
        for i in range(1, c.dimension + 1):
            d_i = Matrix(boundary_matrix(c, i).to_dense())
            d_sig = Matrix(boundary_matrix(c, i + 1).to_dense())
            if d_i.shape[1] and d_sig.shape[1]:
                assert (d_i * d_sig).is_zero_matrix


def test_rango_contra_sympy(rp2):
    for c in (make_vdw((5, 2)), make_vdw((7, 3)), rp2):
        for i in range(0, c.dimension + 1):
            m = boundary_matrix(c, i, Q)
            denso = m.to_dense()
            esperado = Matrix(denso).rank() if denso and denso[0] else 0
            assert m.rank() == esperado


def test_rango_denso_por_cuerpo():
    assert matrix_rank([[1, 2], [2, 4]], Q) == 1
    assert matrix_rank([[2, 0], [0, 2]], GF2) == 0
    assert matrix_rank([[2, 0], [0, 2]], GF3) == 2
    assert matrix_rank([[3, 1], [1, 2]], FieldSpec(5)) == 1
    assert matrix_rank([[0, 0], [0, 0]], Q) == 0


def test_rango_gf2_reduce_entradas_pares():
    assert matrix_rank([[4, 1], [2, 1]], GF2) == 1
    assert matrix_rank([[3, 5], [1, 6]], GF2) == 2
    assert matrix_rank([[-2, 6], [8, -4]], GF2) == 0
    assert matrix_rank([[-1, 3], [1, 1]], GF2) == 1


def test_rango_bareiss_entradas_grandes():
    m = [[2, 4, 1], [6, 12, 3], [1, 1, 1]]
    assert matrix_rank(m, Q) == Matrix(m).rank()


def test_caracteristica_de_euler(triangle_boundary):
    assert reduced_euler_characteristic(triangle_boundary) == -1
    assert reduced_euler_characteristic(SimplicialComplex.simplex(3)) == 0
    assert reduced_euler_characteristic(SimplicialComplex.empty(2)) == -1


def test_euler_poincare(triangle_boundary):
    check_euler_poincare(triangle_boundary.masks, {1: 1})
    with pytest.raises(ConsistencyError):
        check_euler_poincare(triangle_boundary.masks, {})
