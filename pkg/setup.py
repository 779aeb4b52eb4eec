"""Build script: compiles the exponent-vector kernels when Cython is available.

The package is fully functional without the extension; semicurve.kernels
falls back to the pure-Python implementation at import time.
"""
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "semicurve._speedups",
                ["src/semicurve/_speedups.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
