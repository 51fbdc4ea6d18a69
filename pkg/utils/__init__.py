# Módulo utils para los complejos de van der Waerden
__version__ = "1.0.0"

from .complex_core import SimplicialComplex, VdwParams, make_vdw
from .homology import FieldSpec

__all__ = ['__version__', 'SimplicialComplex', 'VdwParams', 'make_vdw', 'FieldSpec']
