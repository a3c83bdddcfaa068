#!/usr/bin/env python3

# Copyright (C) 2026 tgmod Developers
# This program is free software under the terms of the GNU GPLv3 or later.

import setuptools

with open('README.md', 'r', encoding='utf-8') as README:
    long_description = README.read()

setuptools.setup(
    name                          = 'tgmod',
    version                       = '2026.1',
    author                        = 'tgmod Developers',
    author_email                  = '',
    description                   = 'Modules to estimate essential norms of '
                                    'Volterra-type integration operators',
    long_description              = long_description,
    long_description_content_type = 'text/markdown',
    packages                      = setuptools.find_packages(exclude=['tests']),
    python_requires               = '>=3.6',
    install_requires              = ['numpy', 'scipy', 'mpi4py'],
    entry_points                  = {
        'console_scripts': ['tgmod = tgmod.cli:main'],
        },
    classifiers                   = [
        'Programming Language :: Python',
        'License :: OSI Approved :: GNU General Public License (GPL)',
        'Operating System :: POSIX :: Linux',
        ],
    )
