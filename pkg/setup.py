"""Build hook for the optional compiled summation kernels.

The package is pure Python unless Cython and a C compiler are present, in
which case hydrenyi._kernels_cy is built and picked up at import time.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "hydrenyi._kernels_cy",
                ["src/hydrenyi/_kernels_cy.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
