"""Build hook for the optional compiled crystal kernel.

Everything else is configured in pyproject.toml.  If Cython or a C compiler
is missing the extension is skipped and the pure-Python kernel is used.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("cplactic._ckernel", ["src/cplactic/_ckernel.pyx"], optional=True)],
        compiler_directives={"language_level": "3"},
        quiet=True,
    )

setup(ext_modules=ext_modules)
