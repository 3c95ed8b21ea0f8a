"""Build script: compiles the optional Cython kernel when Cython is present.

The package is fully functional without the extension (a pure-Python engine
is selected at import time); the extension only accelerates the entropy
iteration loop.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/braidseq/_ckernel.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
