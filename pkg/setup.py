"""Build the optional Cython cores; the package falls back to pure Python without them."""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("ORDRAMSEY_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension("ordramsey._embedcore", ["src/ordramsey/_embedcore.pyx"], extra_compile_args=["-O3"]),
                Extension("ordramsey._satcore", ["src/ordramsey/_satcore.pyx"], extra_compile_args=["-O3"]),
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
