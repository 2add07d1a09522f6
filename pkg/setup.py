"""Optional Cython build of the series kernels.

Without Cython (or a C compiler) the package installs as pure Python and
``invmod._backend`` falls back to ``invmod._kernels_py``.
"""
import os

from setuptools import setup

ext_modules = []
if os.environ.get("INVMOD_NO_EXT", "") in ("", "0"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("invmod._kernels", ["src/invmod/_kernels.pyx"], extra_compile_args=["-O2"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
