from os import environ
from unittest import skipUnless

from bionet_simulator.service.constants import ENV_INTEGRATION
from tests.base_test import BaseTest


@skipUnless(environ.get(ENV_INTEGRATION) == '1', "set %s=1 to run long acceptance runs" % ENV_INTEGRATION)
class IntegrationBaseTest(BaseTest):

    def setUp(self):
        super().setUp()

    def tearDown(self):
        super().tearDown()
