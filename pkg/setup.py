#!/usr/bin/env python

from setuptools import setup
from catkin_pkg.python_setup import generate_distutils_setup

d = generate_distutils_setup(
    packages=['thermal_bell'],
    package_dir={'': 'src'},
    install_requires=['numpy', 'scipy', 'qutip'],
    extras_require={'test': ['hypothesis']},
    entry_points={'console_scripts': ['thermal_bell = thermal_bell.cli:main']},
)

setup(**d)
