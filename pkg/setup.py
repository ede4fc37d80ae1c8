"""Build script: compiles the optional enumeration kernel.

The package works without the compiled extension (a pure-Python fallback is
selected at import time); building it just makes `nsk enumerate` fast at the
upper end of its supported envelope.
"""
import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("NSK_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("nsk._enumcore", ["src/nsk/_enumcore.pyx"])],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
