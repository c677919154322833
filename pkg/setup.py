from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install; kernels.py falls back at import
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "pisano_legendre._kernels",
                ["src/pisano_legendre/_kernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
