"""Build script: compiles the optional Z/2 reduction extension.

The extension is a speedup only; if Cython or a C compiler is unavailable
the install falls back to the pure-Python kernel.  Set EXTREMAL_CECH_NO_EXT=1
to skip the extension entirely.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext
from setuptools.errors import CCompilerError, ExecError, PlatformError

_BUILD_ERRORS = (CCompilerError, ExecError, PlatformError, ValueError, OSError)


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except _BUILD_ERRORS as exc:
            print(f"warning: extension build skipped ({exc}); using pure-Python kernel")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except _BUILD_ERRORS as exc:
            print(f"warning: {ext.name} skipped ({exc}); using pure-Python kernel")


ext_modules = []
if not os.environ.get("EXTREMAL_CECH_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("extremal_cech._reduce_cy", ["src/extremal_cech/_reduce_cy.pyx"])],
            language_level="3",
        )
    except ImportError:
        print("warning: Cython not available; using pure-Python kernel")

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
