"""
Configuración del artefacto

Constantes leídas una sola vez de variables de entorno, con defectos
razonables para trabajo de escritorio.
"""
import logging
import os

logger = logging.getLogger(__name__)


def env_int(nombre, defecto):
    """Lee una variable de entorno entera; si no se puede leer usa el defecto."""
    valor = os.environ.get(nombre)
    if valor is None or not valor.strip():
        return defecto
    try:
        return int(valor)
    except ValueError:
        logger.warning("⚠️ %s=%r no es un entero, se usa %d", nombre, valor, defecto)
        return defecto


def env_bool(nombre, defecto=False):
    """Lee una variable de entorno booleana ('1', 'true', 'si', 'yes', 'on')."""
    valor = os.environ.get(nombre)
    if valor is None or not valor.strip():
        return defecto
    return valor.strip().lower() in ('1', 'true', 'si', 'sí', 'yes', 'on')


def default_jobs():
    return env_int('VDW_JOBS', os.cpu_count() or 1)


# Directorio del caché de resultados del CLI
CACHE_DIR = os.environ.get('VDW_CACHE_DIR', '.vdw_cache')

# 2^22 problemas de homología pequeños es el techo práctico
SWEEP_LIMIT = env_int('VDW_SWEEP_LIMIT', 22)

# Memo de homología por traza de facetas (memoria vs. tiempo)
HOCHSTER_MEMO = env_bool('VDW_HOCHSTER_MEMO', False)

# Verificación Euler-Poincaré dentro del barrido de Hochster
CHECK_EULER = env_bool('VDW_CHECK_EULER', False)

# Caras recorridas por la búsqueda por niveles de no-caras mínimas
FACE_LIMIT = env_int('VDW_FACE_LIMIT', 200_000)

# Semilla por defecto de los complejos aleatorios
DEFAULT_SEED = env_int('VDW_SEED', 12345)

# Cota de facetas para la búsqueda de órdenes de hojas con retroceso
LEAF_ORDER_MAX_FACETS = env_int('VDW_LEAF_LIMIT', 128)
