import os

from setuptools import setup

ext_modules = []
if not os.environ.get("PARETOFIT_NO_EXT"):
    try:
        import numpy as np
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:  # build without the extension; _pure is used
        pass
    else:
        ext_modules = cythonize(
            [
                Extension(
                    "paretofit._kernels",
                    ["src/paretofit/_kernels.pyx"],
                    include_dirs=[np.get_include()],
                    libraries=["m"],
                    extra_compile_args=["-O3", "-ffast-math"],
                )
            ],
            language_level=3,
        )

setup(ext_modules=ext_modules)
