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


class BnLogger(logging.Logger):
    ALL_ERRORS_COUNT = 0

    def __init__(self, name, level=logging.NOTSET):
        super(BnLogger, self).__init__(name=name, level=level)
        self.propagate = True
        self.parent = self.root
        self.errors = 0

    def reset(self):
        BnLogger.ALL_ERRORS_COUNT = BnLogger.ALL_ERRORS_COUNT - self.errors
        self.errors = 0

    def error(self, msg, *args, **kwargs):
        kwargs['stacklevel'] = 2
        super(BnLogger, self).error(msg, *args, **kwargs)
        self._count_error()

    def exception(self, msg, *args, **kwargs) -> None:
        kwargs['stacklevel'] = 2
        kwargs.setdefault('exc_info', True)
        super(BnLogger, self).error(msg, *args, **kwargs)
        self._count_error()

    def _count_error(self):
        BnLogger.ALL_ERRORS_COUNT += 1
        self.errors += 1

    @staticmethod
    def total_errors():
        return BnLogger.ALL_ERRORS_COUNT


logging.setLoggerClass(BnLogger)


def init_logger(name, level=None):
    """
    Registered logger of the given name with the level applied.
    Unknown level names leave the level unset so the logger inherits it.
    """
    log = logging.getLogger(name)
    if level:
        log_level = logging.getLevelName(str(level).upper())
        try:
            log.setLevel(log_level)
        except (TypeError, ValueError):
            log.setLevel(logging.NOTSET)
    return log
