"""Build script for the optional compiled kernel extension.

The package works without the extension: hyper2d._kernels falls back to a
pure-Python implementation when hyper2d._kernels._core is not importable.
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
                "hyper2d._kernels._core",
                ["src/hyper2d/_kernels/_core.pyx"],
                optional=True,
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
