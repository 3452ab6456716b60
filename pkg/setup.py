"""Build script for the optional compiled kernel.

The package works without it (pure-Python kernels are selected at import
time), so a failed extension build must not fail the install.
"""

from setuptools import Extension, setup

ext = Extension("olog._ckernel", sources=["src/olog/_ckernel.pyx"])
ext.optional = True

try:
    from Cython.Build import cythonize

    ext_modules = cythonize([ext], compiler_directives={"language_level": "3"})
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
