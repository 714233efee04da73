"""Build script: compiles the optional Cython kernel.

The package works without the extension (a pure-Python backend is selected
at import time), so a missing or failing Cython toolchain only costs speed.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "symsig._kernel._speedups",
                ["src/symsig/_kernel/_speedups.pyx"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
