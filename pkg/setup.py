import numpy
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    # optional=True: a failed compile falls back to the pure-Python kernels
    extensions = cythonize(
        [
            Extension(
                "kbcat._ckernels",
                ["src/kbcat/_ckernels.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O2"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
else:
    extensions = []

setup(ext_modules=extensions)
