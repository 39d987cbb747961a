"""Build script: compiles the optional Groebner accelerator extension.

The package is fully functional without the extension (a pure-Python
backend is selected at import time), so compilation failures only
cost speed, never correctness.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build the accelerator if possible; warn and continue otherwise."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        import warnings

        warnings.warn(
            "compiled kernel unavailable, falling back to the pure-Python "
            f"backend: {exc}"
        )


def extensions():
    if os.environ.get("GODEAUX_NO_EXTENSION") == "1":
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    return cythonize(
        [Extension("godeaux._kernel", ["src/godeaux/_kernel.pyx"])],
        language_level=3,
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
