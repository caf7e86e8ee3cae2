from setuptools import Extension, setup

try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("kmdecomp._core", ["src/kmdecomp/_core.pyx"], include_dirs=[numpy.get_include()], optional=True)],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
