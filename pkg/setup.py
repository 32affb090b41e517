"""Build script: compiles the optional Cython kernel extension.

The package is fully functional without the extension (a numpy fallback is
selected at import time); the compiled kernels only make the hot
gate-application loops faster. If Cython or a C compiler is unavailable the
extension is simply skipped.

-ffp-contract=off keeps the C arithmetic bit-identical to the numpy fallback
(no fused multiply-add), so both backends produce the same amplitudes.
"""

from setuptools import Extension, setup

try:
    import numpy as np
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "qpeclass._kernels",
                ["src/qpeclass/_kernels.pyx"],
                include_dirs=[np.get_include()],
                extra_compile_args=["-O3", "-ffp-contract=off"],
            )
        ],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
