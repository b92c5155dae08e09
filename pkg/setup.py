"""Build script: compiles the optional row-reduction kernel.

The package works without the extension (a pure-Python fallback is selected
at import time); the compiled kernel is what makes the interpolation searches
fast.  Build failures are therefore non-fatal.
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
                "jointslab.algebra._rowred",
                ["src/jointslab/algebra/_rowred.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
