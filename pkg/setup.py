"""Build script: compiles the optional Cayley-table kernel extension.

Set CDLAT_PURE=1 to skip the extension entirely; the package then runs on
the pure numpy fallback selected at import time.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("CDLAT_PURE"):
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "cdlat._ckernels",
                ["src/cdlat/_ckernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
