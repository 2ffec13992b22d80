#!/usr/bin/env python
from setuptools import setup

from hdx import __version__

PACKAGE_NAME = 'python-hdx'


if __name__ == '__main__':
    setup(
        version=__version__,
        install_requires=[
            'numpy',
            'scipy',
            'sympy',
        ],
        name=PACKAGE_NAME,
        include_package_data=True,
        packages=['hdx', 'hdx_fixtures'],
        entry_points={
            'console_scripts': ['hdx = hdx.cli:main'],
        },
        description=(
            'Hodge Laplacian spectra of simplicial complexes, of their '
            'finite covers and of twisted group cohomology complexes'
        ),
        license='GPLv2',
        classifiers=[
            'Intended Audience :: Science/Research',
            'License :: OSI Approved :: GNU General Public License v2 (GPLv2)',
            'Operating System :: OS Independent',
            'Programming Language :: Python',
            'Programming Language :: Python :: 3',
            'Topic :: Scientific/Engineering :: Mathematics',
        ],
    )
