from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # The package still works without the extension; boxham.kernels falls
    # back to the pure-Python implementations at import time.
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("boxham._ckernels", ["src/boxham/_ckernels.pyx"])],
        language_level=3,
    )

setup(ext_modules=ext_modules)
