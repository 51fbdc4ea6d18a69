import os
from itertools import combinations

# antes de importar utils: config lee el entorno una sola vez
os.environ.setdefault("VDW_CHECK_EULER", "1")

import pytest  # noqa: E402

from utils.complex_core import SimplicialComplex  # noqa: E402

collect_ignore = ["examples"]


@pytest.fixture
def triangle_boundary():
    return SimplicialComplex.from_facets(3, [[1, 2], [2, 3], [1, 3]])


@pytest.fixture
def rp2():
    """Plano proyectivo con 6 vértices."""
    return SimplicialComplex.from_facets(6, [
        [1, 2, 3], [1, 2, 4], [1, 3, 5], [1, 4, 6], [1, 5, 6],
        [2, 3, 6], [2, 4, 5], [2, 5, 6], [3, 4, 5], [3, 4, 6],
    ])


@pytest.fixture
def brute_force_non_faces():
    """No-caras mínimas recorriendo todos los subconjuntos de [1, n]."""
    def enumerar(c):
        facetas = [set(f.vertices) for f in c.facets]

        def es_cara(s):
            return any(s <= f for f in facetas)

        resultado = []
        for tam in range(1, c.n + 1):
            for s in combinations(range(1, c.n + 1), tam):
                s = set(s)
                if not es_cara(s) and all(es_cara(s - {v}) for v in s):
                    resultado.append(tuple(sorted(s)))
        return resultado
    return enumerar
