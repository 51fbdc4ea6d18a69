import json

import pytest
from openpyxl import load_workbook

from app_vdw import main
from utils import __version__
from utils.cache_local import ResultCache
from utils.classify import classify_cell
from utils.homology import FieldSpec
from utils.resolution import BettiTable
from test_resolution import TEXTO_5_2, TEXTO_6_2


def test_gen(capsys):
    assert main(["gen", "7", "3"]) == 0
    salida = capsys.readouterr().out
    assert salida.splitlines()[0] == "n 7"
    assert len(salida.splitlines()) == 6


def test_gen_informa_facetas_por_stderr(capsys):
    assert main(["gen", "5", "2"]) == 0
    salida = capsys.readouterr()
    assert salida.out == "n 5\n1 2 3\n1 3 5\n2 3 4\n3 4 5\n"
    assert "4 facetas" in salida.err
    assert "facetas" not in salida.out


def test_gen_a_archivo(tmp_path, capsys):
    ruta = tmp_path / "vdw.txt"
    assert main(["gen", "5", "2", "--out", str(ruta)]) == 0
    assert "4 facetas" in capsys.readouterr().out
    assert ruta.read_text(encoding="utf-8").startswith("n 5\n")


def test_gen_parametros_invalidos(capsys):
    assert main(["gen", "3", "5"]) == 3
    assert "0 < k < n" in capsys.readouterr().err


def test_betti_texto(capsys):
    assert main(["betti", "--vdw", "5", "2", "--format", "text"]) == 0
    assert capsys.readouterr().out == TEXTO_5_2
    assert main(["betti", "--vdw", "6", "2", "--field", "GF2"]) == 0
    assert capsys.readouterr().out == TEXTO_6_2


def test_betti_simplejo(capsys):
    assert main(["betti", "--vdw", "4", "3"]) == 0
    assert capsys.readouterr().out == "       0\ntotal: 1\n    0: 1\n"


def test_betti_json(capsys):
    assert main(["betti", "--vdw", "5", "2", "--format", "json"]) == 0
    t = BettiTable.from_json(capsys.readouterr().out)
    assert t.as_dict() == {(0, 0): 1, (1, 2): 2, (2, 4): 1}


def test_betti_xlsx(tmp_path):
    ruta = tmp_path / "betti.xlsx"
    assert main(["betti", "--vdw", "6", "2", "--format", "xlsx", "--out", str(ruta)]) == 0
    ws = load_workbook(ruta).active
    assert ws["A1"].value.startswith("TABLA DE BETTI")
    assert ws["A3"].value == "total"


def test_betti_limite_de_barrido(capsys):
    assert main(["--sweep-limit", "8", "betti", "--vdw", "10", "2"]) == 2
    assert "8" in capsys.readouterr().err


def test_betti_archivo_mal_formado(tmp_path, capsys):
    ruta = tmp_path / "malo.txt"
    ruta.write_text("n 3\n1 2\n1 z\n", encoding="utf-8")
    assert main(["betti", "--facets", str(ruta)]) == 3
    assert ":3:" in capsys.readouterr().err


def test_analyze_5_2(capsys):
    assert main(["analyze", "--vdw", "5", "2"]) == 0
    datos = json.loads(capsys.readouterr().out)
    assert datos["computed"]["gorenstein"] is True
    assert datos["computed"]["linear_resolution"] is False
    assert datos["computed"]["quasi_forest"] is False
    assert datos["minimal_non_faces"] == [[1, 4], [2, 5]]


def test_analyze_9_5(capsys):
    assert main(["analyze", "--vdw", "9", "5"]) == 0
    datos = json.loads(capsys.readouterr().out)
    assert datos["computed"]["linear_resolution"] is True
    assert datos["computed"]["quasi_forest"] is True
    assert len(datos["leaf_order"]["order"]) == 4


def test_analyze_borde_de_triangulo(tmp_path, capsys):
    ruta = tmp_path / "triangulo.txt"
    ruta.write_text("n 3\n1 2\n2 3\n1 3\n", encoding="utf-8")
    assert main(["analyze", "--facets", str(ruta)]) == 0
    assert json.loads(capsys.readouterr().out)["computed"]["gorenstein"] is True


def test_verify_con_cache_idempotente(tmp_path, capsys):
    cache = tmp_path / "cache"
    primero, segundo = tmp_path / "r1.json", tmp_path / "r2.json"
    argumentos = ["-q", "verify", "--n-max", "6", "--jobs", "1", "--cache", str(cache)]
    assert main(argumentos + ["--out", str(primero)]) == 0
    resumen = json.loads(capsys.readouterr().out)
    assert resumen["cells"] == 15
    assert resumen["gorenstein_cells"] == [[5, 2]]
    assert len(ResultCache(cache)) == 15
    assert main(argumentos + ["--out", str(segundo)]) == 0
    assert primero.read_bytes() == segundo.read_bytes()


def test_verify_dos_cuerpos(tmp_path, capsys):
    argumentos = ["-q", "verify", "--n-max", "5", "--field", "Q", "--field", "GF2",
                  "--jobs", "1", "--no-cache", "--xlsx", str(tmp_path / "r.xlsx")]
    assert main(argumentos) == 0
    resumen = json.loads(capsys.readouterr().out)
    assert resumen["field_divergences"] == []
    assert resumen["cells"] == 20
    assert load_workbook(tmp_path / "r.xlsx").active["A1"].value.startswith("VERIFICACIÓN")


def test_verify_limite(capsys):
    assert main(["--sweep-limit", "5", "verify", "--n-max", "6", "--no-cache"]) == 2


def test_skeleton(capsys):
    assert main(["skeleton", "--vdw", "5", "2"]) == 0
    lineas = capsys.readouterr().out.splitlines()
    assert lineas[0] == "n 5"
    assert len(lineas) == 9


def test_lemma(capsys):
    assert main(["lemma", "--n-max", "14"]) == 0
    assert json.loads(capsys.readouterr().out)["failures"] == []


def test_qf_check(capsys):
    assert main(["qf-check", "--samples", "50", "--seed", "3"]) == 0
    assert json.loads(capsys.readouterr().out)["counterexamples"] == []


def test_version(capsys):
    with pytest.raises(SystemExit) as info:
        main(["--version"])
    assert info.value.code == 0
    assert __version__ in capsys.readouterr().out


def test_cache_se_invalida_por_version(tmp_path):
    vieja = ResultCache(tmp_path, version="0.9.0")
    vieja.put(classify_cell(5, 2))
    assert vieja.get(5, 2, FieldSpec()) is not None
    assert len(ResultCache(tmp_path, version="0.9.0")) == 1
    nueva = ResultCache(tmp_path, version=__version__)
    assert len(nueva) == 0
    assert nueva.get(5, 2, FieldSpec()) is None


def test_cache_devuelve_la_tabla(tmp_path):
    cache = ResultCache(tmp_path)
    cache.put(classify_cell(6, 2))
    assert cache.get_betti(6, 2, FieldSpec()).as_dict() == {
        (0, 0): 1, (1, 2): 4, (2, 3): 2, (2, 4): 3, (3, 5): 2}
    assert cache.get(6, 2, FieldSpec(2)) is None
