"""
Setup para los complejos de van der Waerden
"""
from setuptools import setup, find_packages

setup(
    name="vdw-complejos",
    version="1.0.0",
    description="Tablas de Betti y clasificación de los complejos de van der Waerden vdW(n,k)",
    packages=find_packages(exclude=["examples", "examples.*"]),
    py_modules=["app_vdw"],
    install_requires=[
        "pandas>=2.0.0",
        "openpyxl>=3.1.0",
        "sympy>=1.12",
        "tqdm>=4.65.0",
    ],
    extras_require={
        "dev": [
            "pytest>=7.0",
            "networkx>=3.0",
        ],
    },
    python_requires=">=3.10",
    entry_points={
        "console_scripts": [
            "vdw=app_vdw:main",
        ],
    },
)
