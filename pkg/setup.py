"""Build script: compiles the optional polynomial kernel extension.

The package is fully functional without the extension (a pure-Python
kernel is selected at import time), so a failed compile is tolerated.
Set SINTDYN_NO_EXT=1 to skip the extension build entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("SINTDYN_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext = Extension(
            "sintdyn._kernel._cypoly",
            sources=["src/sintdyn/_kernel/_cypoly.pyx"],
            extra_compile_args=["-O3"],
        )
        ext.optional = True
        ext_modules = cythonize(
            [ext],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
