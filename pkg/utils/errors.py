"""
Excepciones del artefacto y sus códigos de salida
"""

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_RESOURCE_LIMIT = 2
EXIT_INPUT_ERROR = 3


class VdwError(Exception):
    """Error base del artefacto"""
    exit_code = EXIT_INPUT_ERROR


class InvalidInputError(VdwError, ValueError):
    """Entrada fuera del dominio de la operación"""
    exit_code = EXIT_INPUT_ERROR


class ParseError(InvalidInputError):
    """Archivo mal formado; guarda el número de línea (1-based)"""

    def __init__(self, mensaje, line=None, path=None):
        self.line = line
        self.path = path
        prefijo = ''
        if path:
            prefijo += f"{path}:"
        if line is not None:
            prefijo += f"{line}: "
        elif prefijo:
            prefijo += ' '
        super().__init__(f"{prefijo}{mensaje}")


class ResourceLimitError(VdwError, RuntimeError):
    """Se excedió un límite configurado; guarda el límite"""
    exit_code = EXIT_RESOURCE_LIMIT

    def __init__(self, mensaje, limit=None):
        self.limit = limit
        super().__init__(mensaje)


class ConsistencyError(VdwError, AssertionError):
    """Falló una identidad interna verificada bajo bandera"""
    exit_code = EXIT_VERIFICATION_FAILED
