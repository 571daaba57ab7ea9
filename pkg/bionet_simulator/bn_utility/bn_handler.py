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

import logging
import logging.handlers
from os import environ, makedirs, path
from sys import stdout

LOGGER_NAMES = ('service', 'solver', 'geometry', 'storage', 'analysis')


def set_default_handler(level=logging.INFO):
    for logger_name in LOGGER_NAMES:
        logger = logging.getLogger(logger_name)
        handler = logging.StreamHandler(stdout)
        handler.setFormatter(logging.Formatter('[STREAM ONLY] %(asctime)s - %(levelname)s - [%(filename)s] - '
                                               '%(module)s - %(lineno)d - %(message)s'))
        logger.addHandler(handler)
        logger.setLevel(level)


class TimedRotatingFileHandler(logging.handlers.TimedRotatingFileHandler):
    def __init__(self, filename, when='h', interval=1, backupCount=0,
                 encoding=None, delay=False, utc=False):
        config_path = environ.get('BN_SIM_LOGS_PATH')
        if config_path:
            filename = config_path + '/' + filename.split('/')[-1]

        log_dir = path.dirname(filename)
        if log_dir and not path.exists(log_dir):
            makedirs(log_dir, exist_ok=True)

        super().__init__(filename, when=when, interval=interval, backupCount=backupCount,
                         encoding=encoding, delay=delay, utc=utc)
