"""Build script: compiles the optional fast-kernel extension.

The package works without the extension (pure-Python kernels are selected at
import time), but corpus verification is an order of magnitude slower then.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pragma: no cover - build environments without Cython
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "pernull._kernels._core",
                ["src/pernull/_kernels/_core.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
