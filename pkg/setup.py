"""Build script: compiles the optional ``speccpt._kernels`` extension.

The extension is an accelerator only; if Cython or a C compiler is missing
(or SPECCPT_NO_EXT=1 is set) the package installs without it and the pure
NumPy/Python code paths are used at runtime.
"""

import os
import sys

from setuptools import setup


def extensions():
    if os.environ.get("SPECCPT_NO_EXT") == "1":
        return []
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        print("speccpt: Cython not available, building without the compiled core",
              file=sys.stderr)
        return []
    ext = Extension(
        "speccpt._kernels",
        ["src/speccpt/_kernels.pyx"],
        # -ffp-contract=off keeps float results identical to the pure path
        # (no fused multiply-add surprises in replay comparisons).
        extra_compile_args=["-O3", "-ffp-contract=off"],
    )
    return cythonize([ext], language_level=3)


setup(ext_modules=extensions())
