# -*- coding: utf-8 -*-

#     Copyright 2024. ThingsBoard
#
#     Licensed under the Apache License, Version 2.0 (the "License");
#     you may not use this file except in compliance with the License.
#     You may obtain a copy of the License at
#
#         http://www.apache.org/licenses/LICENSE-2.0
#
#     Unless required by applicable law or agreed to in writing, software
#     distributed under the License is distributed on an "AS IS" BASIS,
#     WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#     See the License for the specific language governing permissions and
#     limitations under the License.

from setuptools import setup
from os import path

import version

current_directory = path.abspath(path.dirname(__file__))
with open(path.join(current_directory, 'README.md'), encoding='utf-8') as f:
    long_description = f.read()

setup(
    version=version.VERSION,
    name="bionet-simulator",
    author="ThingsBoard",
    author_email="info@thingsboard.io",
    license="Apache Software License (Apache Software License 2.0)",
    description="Finite element simulator for self-regulating transport networks.",
    long_description=long_description,
    long_description_content_type="text/markdown",
    include_package_data=True,
    python_requires=">=3.9",
    packages=['bionet_simulator', 'bionet_simulator.bn_utility', 'bionet_simulator.geometry',
              'bionet_simulator.quadrature', 'bionet_simulator.fem', 'bionet_simulator.flow',
              'bionet_simulator.analysis', 'bionet_simulator.storage', 'bionet_simulator.service',
              ],
    package_data={'bionet_simulator': ['config/*.json', 'config/*.conf']},
    install_requires=[
        'numpy>=1.22',
        'scipy>=1.12',
        'regex',
        'PyYAML',
        'simplejson',
        'questionary',
        'pyfiglet',
        'termcolor',
        'mmh3',
        'cachetools',
        'packaging==23.1',
    ],
    entry_points={
        'console_scripts': [
            'bn-simulator = bionet_simulator.bn_simulator:daemon',
            'bn-simulator-configurator = bionet_simulator.service.configuration_wizard:configure',
        ]
    })
