import os
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
        out_dir = Path(self.get_ext_fullpath(ext.name)).parent.resolve()
        build_dir = Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)
        cfg = "Debug" if self.debug else "Release"
        args = [
            f"-DCMAKE_LIBRARY_OUTPUT_DIRECTORY={out_dir}",
            f"-DPython3_EXECUTABLE={sys.executable}",
            f"-DCMAKE_BUILD_TYPE={cfg}",
            "-DHECKEPAIRS_BUILD_TESTS=OFF",
            "-DHECKEPAIRS_BUILD_PYTHON=ON",
        ]
        src = Path(__file__).parent.resolve()
        subprocess.run(["cmake", "-S", str(src), "-B", str(build_dir)] + args, check=True)
        jobs = os.cpu_count() or 1
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "_core", "-j", str(jobs)],
            check=True,
        )


setup(
    ext_modules=[CMakeExtension("heckepairs._core")],
    cmdclass={"build_ext": CMakeBuild},
)
