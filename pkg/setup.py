"""Build script.

The compiled kernel module is optional: if Cython (or a C compiler) is
missing, or O2ENDO_NO_EXT is set, the package installs pure-Python and
selects the fallback kernels at import time.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("O2ENDO_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("o2endo._kernels", ["src/o2endo/_kernels.pyx"])],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
