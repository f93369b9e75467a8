from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "treeid._csearch",
                ["src/treeid/_csearch.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # no Cython or a translation error: ship the pure kernel
    print(f"treeid: building without the compiled kernel ({exc})")

setup(ext_modules=ext_modules)
