"""Build script.

The package is pure Python with an optional compiled kernel for dense
polynomial arithmetic over prime fields (ore/_gfpoly.pyx).  If Cython or a
C compiler is missing the build falls back to the pure implementation,
which ore.gfpoly selects automatically at import time.
"""

import os

from setuptools import setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Skip the extension instead of failing the whole install."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            print(f"warning: skipping compiled kernel ({exc})")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: skipping {ext.name} ({exc})")


ext_modules = []
if not os.environ.get("ORE_NO_EXTENSION"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("ore._gfpoly", ["src/ore/_gfpoly.pyx"])],
            language_level=3,
        )
    except ImportError:
        print("warning: Cython not available, building without compiled kernel")

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
