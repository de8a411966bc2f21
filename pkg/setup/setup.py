"""
Plusweld Setup Configuration
"""
from setuptools import setup, find_packages
from pathlib import Path

# Read README from the repository root
root = Path(__file__).parent.parent
long_description = (root / "README.md").read_text(encoding='utf-8')

setup(
    name="plusweld",
    version="1.0.0",
    description="Gauss-code engine for plus-welded knotoids",
    long_description=long_description,
    long_description_content_type="text/markdown",
    package_dir={"": ".."},  # run from setup/
    packages=find_packages(where="..", exclude=["tests", "tests.*", "examples", "examples.*"]),
    py_modules=["config", "main"],
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
    ],
    python_requires=">=3.8",
    install_requires=[
        # No dependencies!
    ],
    extras_require={
        "dev": [
            "pytest>=7.0.0",
        ]
    },
    entry_points={
        "console_scripts": [
            "plusweld=cli.cli:main",
        ],
    },
    include_package_data=True,
    package_data={
        "": ["schema/*.json", "datasets/*"],
    },
)
