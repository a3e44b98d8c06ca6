import os

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

eigen_include = os.environ.get("EIGEN3_INCLUDE_DIR", "/usr/include/eigen3")
include_dirs = ["include", "vendor", eigen_include]
if os.path.isdir("/opt/vendor"):
    include_dirs.append("/opt/vendor")

ext = Pybind11Extension(
    "bcspec._core",
    sources=[
        "src/matrix.cpp",
        "src/spectra.cpp",
        "src/pair_spectrum.cpp",
        "src/io.cpp",
        "src/verify.cpp",
        "src/bindings.cpp",
    ],
    include_dirs=include_dirs,
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
