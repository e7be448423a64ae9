"""Build hook: compile the optional kernel extension when Cython is around.

The package is fully functional without it (pure-Python kernels are picked
up at import time), so the extension is marked optional and any build
failure is non-fatal.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("monmap._kernels_c", ["src/monmap/_kernels_c.pyx"],
                   optional=True)],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
