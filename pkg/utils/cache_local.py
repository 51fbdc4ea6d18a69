"""
Caché local de resultados por celda (n, k, cuerpo)

Un directorio con un JSON por celda, nombrado por el SHA-256 de la clave, y
un manifest.json con la versión del artefacto. Si la versión del manifiesto
no coincide, el caché se vacía.
"""
import hashlib
import json
import logging
import os
import tempfile
from pathlib import Path

from . import __version__, config
from .classify import ClassificationReport
from .homology import FieldSpec
from .resolution import BettiTable

logger = logging.getLogger(__name__)

MANIFEST = "manifest.json"


def cache_key(n, k, campo, version=__version__):
    texto = json.dumps([n, k, campo.name, version])
    return hashlib.sha256(texto.encode("utf-8")).hexdigest()


def _escribir_atomico(ruta, datos):
    """Archivo temporal en el mismo directorio y luego os.replace."""
    ruta = Path(ruta)
    fd, temporal = tempfile.mkstemp(dir=ruta.parent, prefix=".tmp-", suffix=".json")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as f:
            json.dump(datos, f, indent=2, ensure_ascii=False)
            f.write("\n")
        os.replace(temporal, ruta)
    except BaseException:
        Path(temporal).unlink(missing_ok=True)
        raise


class ResultCache:
    """Caché de ClassificationReport; seguro ante invocaciones concurrentes por la escritura atómica."""

    def __init__(self, directorio=None, version=__version__):
        self.directorio = Path(directorio or config.CACHE_DIR)
        self.version = version
        self.aciertos = 0
        self.directorio.mkdir(parents=True, exist_ok=True)
        self._validar_manifiesto()

    def _validar_manifiesto(self):
        manifiesto = self.directorio / MANIFEST
        guardada = None
        if manifiesto.exists():
            try:
                guardada = json.loads(manifiesto.read_text(encoding="utf-8")).get("version")
            except (OSError, ValueError) as e:
                logger.warning("⚠️ manifiesto ilegible en %s: %s", self.directorio, e)
        if guardada != self.version:
            if guardada is not None:
                logger.info("📥 caché de la versión %s invalidado (actual %s)", guardada, self.version)
            self.clear()
            _escribir_atomico(manifiesto, {"version": self.version})

    def _ruta(self, n, k, campo):
        return self.directorio / f"{cache_key(n, k, campo, self.version)}.json"

    def get(self, n, k, campo):
        ruta = self._ruta(n, k, campo)
        if not ruta.exists():
            return None
        try:
            datos = json.loads(ruta.read_text(encoding="utf-8"))
            reporte = ClassificationReport.from_json(datos)
        except (OSError, ValueError, KeyError) as e:
            logger.warning("⚠️ entrada de caché corrupta %s: %s", ruta.name, e)
            return None
        self.aciertos += 1
        return reporte

    def get_betti(self, n, k, campo):
        reporte = self.get(n, k, campo)
        if reporte is None or reporte.betti is None:
            return None
        return BettiTable.from_json(reporte.betti)

    def put(self, reporte):
        campo = FieldSpec.parse(reporte.field)
        _escribir_atomico(self._ruta(reporte.n, reporte.k, campo), reporte.to_json())

    def clear(self):
        for ruta in self.directorio.glob("*.json"):
            ruta.unlink(missing_ok=True)

    def __len__(self):
        return sum(1 for r in self.directorio.glob("*.json") if r.name != MANIFEST)
