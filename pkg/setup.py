from setuptools import setup, find_packages
import pathlib


directory = pathlib.Path(__file__).parent

README = (directory / "README.md").read_text()


setup(
    name="lattres",
    version="0.1.0",
    description="Resolutions, Betti numbers and Alexander duals of the monomial ideals of finite meet-semilattices",
    long_description=README,
    long_description_content_type="text/markdown",
    license="BSD-3",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "License :: OSI Approved :: BSD License",
        "Programming Language :: Python :: 3.10",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    packages=find_packages(exclude=["tests", "*.tests", "*.tests.*"]),
    include_package_data=True,
    package_data={"lattres": ["lattres.ini", "fixtures/*.json"]},
    python_requires=">=3.10",
    install_requires=[
        "networkx>=2.0",
        "numpy>=1.20",
        "pandas>=1.1.0",
        "sympy>=1.12",
    ],
    entry_points={
        "console_scripts": [
            "lattres=lattres.__main__:main",
        ],
    },
)
