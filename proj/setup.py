import os
import shutil
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source_dir = Path(__file__).resolve().parent
        build_dir = Path(self.build_temp) / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)
        cfg = "Release"
        subprocess.run(
            [
                "cmake",
                str(source_dir),
                f"-DCMAKE_BUILD_TYPE={cfg}",
                "-DPOLYDYN_PYTHON_ONLY=ON",
                f"-Dpybind11_DIR={self._pybind11_dir()}",
            ],
            cwd=build_dir,
            check=True,
        )
        jobs = os.environ.get("CMAKE_BUILD_PARALLEL_LEVEL", str(os.cpu_count() or 1))
        subprocess.run(
            ["cmake", "--build", ".", "--target", "_core", "-j", jobs],
            cwd=build_dir,
            check=True,
        )
        built = next(build_dir.glob("_core*.so"))
        dest = Path(self.get_ext_fullpath(ext.name))
        dest.parent.mkdir(parents=True, exist_ok=True)
        shutil.copyfile(built, dest)

    @staticmethod
    def _pybind11_dir():
        try:
            import pybind11

            return pybind11.get_cmake_dir()
        except ImportError:
            return ""


setup(
    ext_modules=[CMakeExtension("polydyn._core")],
    cmdclass={"build_ext": CMakeBuild},
)
