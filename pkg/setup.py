import numpy as np
from setuptools import Extension, setup

# The compiled kernels are optional: if Cython or a C compiler is missing the
# package falls back to the numpy implementations at import time.
try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "ssn.kernels.ck",
                ["src/ssn/kernels/ck.pyx"],
                include_dirs=[np.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except Exception:
    extensions = []

setup(ext_modules=extensions)
