"""Build script for the optional compiled kernels.

The package is pure Python plus one Cython extension holding the hot
series kernels.  If Cython or a C compiler is unavailable the extension
is skipped and the pure-Python kernels are used at runtime.
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
                "rrseries._kernels",
                ["src/rrseries/_kernels.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
