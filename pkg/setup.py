"""Build hook for the optional compiled kernels.

The package is pure Python except for congruence_lab._speedups, a small
Cython module holding the hot loops (triangle recurrences and exact
multiply-accumulate).  The extension is marked optional: if it cannot be
built the install still succeeds and the pure-Python kernels are used.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("CONGRUENCE_LAB_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext = Extension(
            "congruence_lab._speedups",
            sources=["src/congruence_lab/_speedups.pyx"],
        )
        ext.optional = True
        ext_modules = cythonize([ext], language_level="3")
        for mod in ext_modules:
            mod.optional = True
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
