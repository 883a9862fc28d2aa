from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("gbcomet._kernels", ["src/gbcomet/_kernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # Pure-Python fallback kernels are selected at import time, so a build
    # without Cython still produces a working (slower) package.
    ext_modules = []

setup(ext_modules=ext_modules)
