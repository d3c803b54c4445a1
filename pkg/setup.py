"""Build script: compiles the optional rational-arithmetic kernel.

The package is fully functional without the extension; if Cython or a C
compiler is unavailable, the pure-Python kernel is used instead.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "fibquat._kernel._crational",
                ["src/fibquat/_kernel/_crational.pyx"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
