#!/usr/bin/env python

import sys
from setuptools import setup, find_packages
from io import open


needs_wheel = {'bdist_wheel'}.intersection(sys.argv)
wheel = ['wheel'] if needs_wheel else []

with open('README.md', 'r', encoding='utf-8') as f:
    long_description = f.read()

setup(
    name="dominatorColoring",
    use_scm_version={"write_to": "Lib/dominatorColoring/_version.py"},
    description="Minimum dominator colorings of oriented paths, with an exact oracle and an orientation survey.",
    long_description=long_description,
    long_description_content_type='text/markdown',
    keywords='graph coloring domination oriented path',
    license="MIT",
    packages=find_packages("Lib"),
    package_dir={"": "Lib"},
    python_requires='>=3.8',
    setup_requires=wheel + ["setuptools_scm"],
    install_requires=[
        "fontTools>=3.32.0",
        "numpy",
    ],
    extras_require={
        "test": [
            "pytest",
            "hypothesis",
        ],
    },
    entry_points={
        "console_scripts": [
            "dominatorColoring=dominatorColoring.cli:main",
        ],
    },
    classifiers=[
        "Development Status :: 4 - Beta",
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Natural Language :: English",
        "Operating System :: OS Independent",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Topic :: Software Development :: Libraries :: Python Modules",
    ],
)
