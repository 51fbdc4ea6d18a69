import pytest

from utils.classify import (
    PREDICATE_KEYS, ClassificationReport, analyze_complex, classify_cell, compare_fields,
    is_cohen_macaulay, is_gorenstein, is_level, is_vertex_decomposable, predicted_classification,
    quasi_forest_property, summarize_reports, verify_lemma_range, verify_range,
)
from utils.complex_core import SimplicialComplex, make_vdw
from utils.errors import InvalidInputError, ResourceLimitError
from utils.homology import FieldSpec

Q = FieldSpec()
GF2 = FieldSpec(2)


def test_cohen_macaulay(triangle_boundary):
    assert is_cohen_macaulay(make_vdw((6, 2)))
    assert not is_cohen_macaulay(make_vdw((7, 2)))
    assert is_cohen_macaulay(SimplicialComplex.simplex(4))
    assert is_cohen_macaulay(triangle_boundary)
    assert not is_cohen_macaulay(SimplicialComplex.from_facets(4, [[1, 2], [3, 4]]))


def test_cohen_macaulay_depende_del_cuerpo(rp2):
    assert is_cohen_macaulay(rp2, GF2) is False
    assert is_cohen_macaulay(rp2, Q) is True


def test_vertex_decomposable():
    assert is_vertex_decomposable(SimplicialComplex.simplex(3))
    assert is_vertex_decomposable(make_vdw((6, 2)))
    assert is_vertex_decomposable(make_vdw((7, 4)))
    assert not is_vertex_decomposable(make_vdw((8, 3)))
    assert not is_vertex_decomposable(SimplicialComplex.from_facets(4, [[1, 2], [3, 4]]))


def test_vertex_decomposable_no_puro():
    with pytest.raises(InvalidInputError):
        is_vertex_decomposable(SimplicialComplex.from_facets(3, [[1, 2], [3]]))


def test_nivel():
    assert is_level(make_vdw((5, 2)))
    assert is_level(make_vdw((6, 2)))
    assert not is_level(make_vdw((7, 2)))


def test_gorenstein(triangle_boundary):
    assert is_gorenstein(make_vdw((5, 2)))
    assert not is_gorenstein(make_vdw((6, 2)))
    assert is_gorenstein(SimplicialComplex.simplex(3))
    assert is_gorenstein(triangle_boundary)


def test_predicciones():
    p = predicted_classification(7, 3)
    assert (p.linear_resolution, p.cohen_macaulay) == (False, False)
    p = predicted_classification(6, 2)
    assert (p.linear_resolution, p.cohen_macaulay, p.level, p.gorenstein) == (False, True, True, False)
    assert (p.flag, p.chordal_skeleton, p.quasi_forest) == (True, False, False)
    p = predicted_classification(8, 4)
    assert (p.linear_resolution, p.cohen_macaulay) == (True, True)
    assert predicted_classification(5, 2).gorenstein
    assert predicted_classification(9, 2).chordal_skeleton is None


def test_predicciones_ideal_principal_o_cero():
    # k = n-2: ideal principal; k = n-1: ideal cero
    for n in range(3, 12):
        assert predicted_classification(n, n - 2).gorenstein
        assert predicted_classification(n, n - 1).gorenstein
    assert not predicted_classification(8, 5).gorenstein


def test_predicciones_parametros_invalidos():
    with pytest.raises(InvalidInputError):
        predicted_classification(3, 5)


def test_analisis_5_2():
    a = analyze_complex(make_vdw((5, 2)))
    assert a.gorenstein and a.level and a.cohen_macaulay
    assert a.linear_resolution is False
    assert a.quasi_forest is False
    assert [s.vertices for s in a.minimal_non_faces] == [(1, 4), (2, 5)]
    datos = a.to_json()
    assert datos["summary"]["cm_type"] == 1
    assert datos["chordality"]["chordless_cycle"] is not None
    assert datos["complete_intersection"] is True


def test_analisis_9_5():
    a = analyze_complex(make_vdw((9, 5)))
    assert a.linear_resolution and a.quasi_forest
    assert a.to_json()["leaf_order"]["branches"][0] is None


def test_analisis_simplejo_ideal_cero():
    a = analyze_complex(SimplicialComplex.simplex(4))
    assert a.zero_ideal
    assert a.linear_resolution is None
    assert a.gorenstein


def test_analisis_vertices_sin_usar():
    c = SimplicialComplex.from_facets(4, [[1, 2], [2, 3]])
    a = analyze_complex(c)
    assert a.to_json()["degree_one_generators"] == [4]
    assert a.linear_resolution is False


def test_celda_con_lema():
    r = classify_cell(7, 2)
    assert r.lemma_nonfaces_verified is True
    assert r.agreement
    assert r.computed["cohen_macaulay"] is False


def test_celda_sin_lema():
    r = classify_cell(6, 2)
    assert r.lemma_nonfaces_verified is None
    assert r.agreement
    assert r.computed["gorenstein"] is False


def test_reporte_json_ida_y_vuelta():
    r = classify_cell(5, 2)
    assert ClassificationReport.from_json(r.to_json()) == r
    assert r.to_json()["agreement"] is True


@pytest.mark.parametrize("campo", [Q, GF2])
def test_barrido_hasta_8(campo):
    reportes = verify_range(8, campo, jobs=1)
    assert [(r.n, r.k) for r in reportes] == [(n, k) for n in range(2, 9) for k in range(1, n)]
    assert all(r.agreement for r in reportes), [(r.n, r.k, r.failures) for r in reportes if r.failures]
    resumen = summarize_reports(reportes)
    assert resumen["cells"] == 28
    assert resumen["agreements"] == 28
    assert resumen["failures"] == []
    assert resumen["gorenstein_cells"] == [[5, 2]]
    assert [3, 1] in resumen["trivial_gorenstein_cells"]
    assert [8, 7] in resumen["trivial_gorenstein_cells"]


def test_paralelo_mismo_orden_y_resultado():
    secuencial = verify_range(6, Q, jobs=1)
    paralelo = verify_range(6, Q, jobs=2)
    assert [r.to_json() for r in paralelo] == [r.to_json() for r in secuencial]


def test_limite_del_barrido():
    with pytest.raises(ResourceLimitError):
        verify_range(9, Q, limit=8)


def test_comparar_cuerpos_detecta_divergencia():
    a = [classify_cell(5, 2, Q)]
    b = [classify_cell(5, 2, GF2)]
    b[0].computed["gorenstein"] = False
    assert compare_fields(a, b) == [(5, 2, "gorenstein")]
    resumen = summarize_reports(a + b, [(5, 2, "gorenstein")])
    assert resumen["field_divergences"] == [[5, 2, "gorenstein"]]
    assert resumen["failures"]


def test_claves_de_prediccion():
    assert set(predicted_classification(9, 3).to_json()) == set(PREDICATE_KEYS)


@pytest.fixture(scope="module")
def barrido_q_12():
    return verify_range(12, Q, jobs=1)


def test_barrido_completo_hasta_12(barrido_q_12):
    assert len(barrido_q_12) == 66
    assert all(r.agreement for r in barrido_q_12), [(r.n, r.k, r.failures) for r in barrido_q_12 if r.failures]
    resumen = summarize_reports(barrido_q_12)
    assert resumen["agreements"] == 66
    assert resumen["gorenstein_cells"] == [[5, 2]]


def test_resolucion_lineal_hasta_12(barrido_q_12):
    for r in barrido_q_12:
        if r.computed["linear_resolution"] is not None:
            assert r.computed["linear_resolution"] == (r.k == 1 or 2 * r.k >= r.n), (r.n, r.k)


def test_cohen_macaulay_y_descomponible_hasta_12(barrido_q_12):
    for r in barrido_q_12:
        esperado = r.n <= 6 or r.k == 1 or 2 * r.k >= r.n
        assert r.computed["cohen_macaulay"] == esperado, (r.n, r.k)
        assert r.computed["vertex_decomposable"] == r.computed["cohen_macaulay"], (r.n, r.k)
        if r.computed["cohen_macaulay"]:
            assert r.computed["level"], (r.n, r.k)


def test_cuerpos_q_y_gf2_coinciden_hasta_10(barrido_q_12):
    en_q = [r for r in barrido_q_12 if r.n <= 10]
    en_gf2 = verify_range(10, GF2, jobs=1)
    assert all(r.agreement for r in en_gf2)
    assert compare_fields(en_q, en_gf2) == []


def test_lema_hasta_30():
    chequeos = verify_lemma_range(7, 30)
    assert len(chequeos) == sum(1 for n in range(7, 31) for k in range(2, n) if 2 * k < n)
    assert [(ch.n, ch.k) for ch in chequeos if not ch.ok] == []


def test_propiedad_cuasi_bosque_500_muestras():
    assert quasi_forest_property(samples=500, seed=12345, n_max_vdw=10) == []
