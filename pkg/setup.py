from setuptools import setup, find_namespace_packages

# Read README file
with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

# Read requirements.txt
with open('requirements.txt') as f:
    requirements = [line for line in f.read().splitlines() if line and not line.startswith("#")]

setup(
    name="onticlab",
    version="0.1.0",
    description="Numerical laboratory for ontological models of quantum states",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_namespace_packages(include=["onticlab*"]),
    classifiers=[
        "Programming Language :: Python :: 3",
        "Operating System :: OS Independent",
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Physics",
    ],
    python_requires=">=3.11",
    install_requires=requirements,
    extras_require={
        "dev": ["pytest>=7.0.0", "pytest-cov>=4.0.0", "hypothesis>=6.80.0"],
    },
    entry_points={
        "console_scripts": ["onticlab=onticlab.cli.cli:app"],
    },
    include_package_data=True,
)
