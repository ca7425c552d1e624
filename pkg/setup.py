"""Build shim: compile the optional C kernel, fall back to pure Python.

The package works without the extension; ``copgame.solver`` picks the pure
kernel at import time when ``copgame._solver_cy`` is missing.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/copgame/_solver_cy.pyx"],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - exercised only on broken toolchains
    print(f"copgame: skipping C kernel build ({exc}); using pure-Python kernel")

setup(ext_modules=ext_modules)
