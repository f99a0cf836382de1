"""Build glue for the optional compiled kernel.

The package works without the extension (a pure-Python kernel module is
selected at import time), so the extension is marked optional: a missing
compiler degrades performance, not functionality.
"""

from setuptools import Extension, setup

try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "levymlmc._kernels",
                ["src/levymlmc/_kernels.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
