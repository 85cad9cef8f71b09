"""Build script: compiles the optional Cython speedups.

The package is fully functional without the extension (a pure-Python
implementation of the same kernels is selected at import time), so a
missing Cython or failing C toolchain only costs speed, not features.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/treewave/_kernels/_speedups.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
