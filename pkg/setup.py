#!/usr/bin/python

import os

from setuptools import setup, find_packages

required_deps = ['numpy >= 1.20', 'scipy >= 1.6', 'decorator', 'setuptools']
test_deps = ['pytest', 'scripttest']
readme_file = open(os.path.join(os.path.dirname(os.path.abspath(__file__)),
                                'README'))

setup(
    name = "hybrid-quasicrystals",
    version = "0.1.0",
    packages = find_packages(exclude=["hybridqc.tests*"]),
    package_data = {
        'hybridqc.experiment': ['templates/presets/*.cfg'],
    },
    description = "Transport in hybrids of substitution-based quasicrystals",
    long_description = readme_file.read(),
    install_requires = required_deps,
    tests_require = test_deps,
    extras_require = {
        'docs' : ['sphinx >= 0.5'],
        'test' : test_deps,
    },
    license = "MIT",
    entry_points = """
    [console_scripts]
    hybridqc = hybridqc.experiment.shell:main
    """,
)
