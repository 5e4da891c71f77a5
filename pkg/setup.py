import numpy as np
from Cython.Build import cythonize
from setuptools import Extension, setup

# The package works without the extension (pure-Python fallback in
# mixlang.kernels); building it is strongly recommended for real corpora.
extensions = [
    Extension(
        "mixlang.kernels._native",
        ["src/mixlang/kernels/_native.pyx"],
        include_dirs=[np.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
]

setup(
    ext_modules=cythonize(
        extensions,
        compiler_directives={"language_level": 3},
    )
)
