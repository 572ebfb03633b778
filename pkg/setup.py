"""Optional compiled extension for the canonical-code kernel.

The package is pure Python; if Cython and a C compiler are available the
labelling kernel in dessinkit/_canon_c.pyx is compiled, otherwise the build
falls back silently to the pure-Python kernel (dessinkit/_canon.py).
"""

from setuptools import setup

ext_modules = []
try:
	from Cython.Build import cythonize

	ext_modules = cythonize(
		["src/dessinkit/_canon_c.pyx"],
		language_level=3,
	)
except Exception:
	pass

setup(ext_modules=ext_modules)
