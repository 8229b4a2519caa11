"""Build hook for the optional compiled kernel.

The package works without the extension (a pure-Python fallback is selected
at import time); building it just makes the pair-intersection and depth
kernels fast. Skipped automatically when Cython is unavailable.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "rectpierce._kernels",
                ["src/rectpierce/_kernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
