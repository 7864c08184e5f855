"""Build script for the optional compiled kernels.

The package is fully functional without them; ``ordcurves.kernels`` falls
back to the pure-Python implementation when the extension is missing.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("ORDCURVES_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "ordcurves._ckernels",
                    ["src/ordcurves/_ckernels.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
