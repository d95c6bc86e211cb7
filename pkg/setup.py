"""Build script: compiles the Gröbner kernel extension when possible.

The extension is optional; if Cython or a C compiler is unavailable the
package installs with the pure-Python kernel (slocc4._gbpure) selected at
import time.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/slocc4/_gbcore.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
