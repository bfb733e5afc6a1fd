#!/usr/bin/env python

try:
    from setuptools import setup
except ImportError:
    from distutils.core import setup

with open('README.md', 'r') as f:
    LONG_DESCRIPTION = f.read()

setup(
    name='valencelab',
    version='0.1.0',
    description='Extremal examples for the valence of logharmonic '
                'polynomials',
    long_description=LONG_DESCRIPTION,
    long_description_content_type='text/markdown',
    license='MIT',
    packages=['valencelab'],
    tests_require=['pytest'],
    install_requires=[
        'numpy',
        'scipy',
        'pathos',
        'bidict',
        'click',
        'matplotlib',
    ],
    entry_points={
        'console_scripts': [
            'valencelab = valencelab.cli:main',
        ],
    },
    classifiers=[
                    "Intended Audience :: Science/Research",
                    "License :: OSI Approved :: MIT License",
                    "Operating System :: POSIX",
                    "Programming Language :: Python :: 3",
                    "Topic :: Scientific/Engineering",
                    "Topic :: Scientific/Engineering :: Mathematics",
    ]
)
