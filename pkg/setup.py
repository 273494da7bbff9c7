#!/usr/bin/env python
# encoding: utf-8
#
# Copyright SAS Institute
#
#  Licensed under the Apache License, Version 2.0 (the License);
#  you may not use this file except in compliance with the License.
#  You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
#  Unless required by applicable law or agreed to in writing, software
#  distributed under the License is distributed on an "AS IS" BASIS,
#  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#  See the License for the specific language governing permissions and
#  limitations under the License.
#

''' Install mupsl, exact mu-profiles of finite groups '''

from setuptools import setup, find_packages

__version__ = None
with open('./mupsl/version.py') as f:
    exec(f.read())

long_desc = '''
mupsl: exact mu-profiles of finite groups

Computes the proportion of r-singular elements of permutation groups as exact
rationals, identifies PSL(2,q) from its mu-profile and replays the arithmetic
behind the characterization of PSL(2,q) by this profile.
'''

setup(
    name='mupsl',
    version=__version__,
    packages=find_packages(exclude=['tests', 'tests.*']),
    description='mupsl: exact mu-profiles of finite groups',
    long_description=long_desc,
    long_description_content_type="text/markdown",
    license='Apache v2.0',
    install_requires=[
        'pandas >= 1.5',
        'numpy >= 1.15.4',
        'sympy >= 1.5'
        ],
    setup_requires=[
        'numpy'
        ],
    entry_points={
        'console_scripts': [
            'mupsl = mupsl.cli:main',
            ],
        },
    python_requires='>=3.8',
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: Apache Software License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics"
    ],
    include_package_data=True,
)
