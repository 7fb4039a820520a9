"""Build script: compiles the optional fast event-loop extension.

The package is fully functional without the extension (a pure-Python
executor with identical semantics is selected at import time), so a
failed compile only costs speed.  Set RATEVEIL_NO_EXT=1 to skip the
extension build entirely.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("RATEVEIL_NO_EXT"):
    try:
        import numpy
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "rateveil._speedup",
                    ["src/rateveil/_speedup.pyx"],
                    include_dirs=[numpy.get_include()],
                    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={
                "language_level": 3,
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
