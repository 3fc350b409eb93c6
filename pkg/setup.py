# -*- coding: utf-8 -*-
from setuptools import setup, find_packages

with open('README.md', 'r') as fh:
    long_description = fh.read()

dependencies = [
    "numpy >= 1.22",
    "scipy >= 1.8",
    "mpmath >= 1.2",
]

setup(
    name='exthyp',
    version='0.1.0',
    packages=find_packages(exclude=('test', 'build', 'dist')),
    long_description=long_description,
    long_description_content_type='text/markdown',
    license='BSD',
    description='Extended hyperbolic and de Sitter trigonometry with numerical verification',
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: BSD License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires='>=3.8',
    install_requires=dependencies,
    extras_require={
        'test': ["hypothesis >= 6.0"],
    },
    entry_points={
        'console_scripts': ['exthyp = exthyp.cli:main'],
    },
)
