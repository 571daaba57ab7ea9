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

from os.path import exists

from pyfiglet import Figlet
from questionary import ValidationError, Validator, prompt
from termcolor import colored

from bionet_simulator.bn_utility.bn_errors import ConfigurationError
from bionet_simulator.fem.fe_space import CoefficientSampling
from bionet_simulator.flow.entropy_generator import EntropyVariant
from bionet_simulator.geometry.level_set import DomainType
from bionet_simulator.service.constants import *
from bionet_simulator.service.run_config import RunConfig, parse_config, serialize_config

CONFIG_PATH = DEFAULT_CONFIG_PATH


class NotNullValidator(Validator):
    def validate(self, document):
        if not document.text or document.text == '':
            raise ValidationError(message='Value can\'t be empty!', cursor_position=len(document.text))


class NumberValidator(Validator):
    def validate(self, document):
        try:
            int(document.text)
        except ValueError:
            raise ValidationError(message='Must be a number type!', cursor_position=len(document.text))


class ResolutionValidator(NumberValidator):
    def validate(self, document):
        super(ResolutionValidator, self).validate(document)
        if int(document.text) < 2:
            raise ValidationError(message='Resolution must be at least 2!', cursor_position=len(document.text))


class PositiveFloatValidator(Validator):
    def validate(self, document):
        try:
            value = float(document.text)
        except ValueError:
            raise ValidationError(message='Must be a real number!', cursor_position=len(document.text))
        if value <= 0:
            raise ValidationError(message='Must be positive!', cursor_position=len(document.text))


class NonNegativeFloatValidator(Validator):
    def validate(self, document):
        try:
            value = float(document.text)
        except ValueError:
            raise ValidationError(message='Must be a real number!', cursor_position=len(document.text))
        if value < 0:
            raise ValidationError(message='Must not be negative!', cursor_position=len(document.text))


class GammaValidator(Validator):
    def validate(self, document):
        try:
            value = float(document.text)
        except ValueError:
            raise ValidationError(message='Must be a real number!', cursor_position=len(document.text))
        if not 0 < value < 2:
            raise ValidationError(message='gamma must lie in (0, 2)!', cursor_position=len(document.text))


def read_config_file(config_path=CONFIG_PATH):
    if exists(config_path):
        try:
            return parse_config(config_path).as_dict()
        except ConfigurationError as e:
            print(colored('Failed to load configuration file, using defaults: %s' % e, color='yellow'))
    return RunConfig({}).as_dict()


def generate_config_file(data, config_path=CONFIG_PATH):
    text = serialize_config(RunConfig(data))
    with open(config_path, 'w', encoding='utf-8') as file:
        file.write(text)


def configure(config_path=CONFIG_PATH):
    try:
        defaults = read_config_file(config_path)

        f = Figlet(font='slant')
        print(colored(f.renderText('BioNet'), color='green'))
        print(colored('Welcome to the network simulator configuration wizard', 'cyan'))
        print(colored('Answer the questions below to write a run configuration\n'))

        questions = [
            {
                'type': 'select',
                'name': DOMAIN_PARAMETER,
                'message': 'Domain:',
                'choices': [domain.value for domain in DomainType],
                'default': defaults[DOMAIN_PARAMETER]
            },
            {
                'type': 'input',
                'name': N_PARAMETER,
                'message': 'Grid resolution N:',
                'default': str(defaults[N_PARAMETER]),
                'validate': ResolutionValidator
            },
            {
                'type': 'select',
                'name': ENTROPY_PARAMETER,
                'message': 'Entropy generator:',
                'choices': [variant.value for variant in EntropyVariant],
                'default': defaults[ENTROPY_PARAMETER]
            },
            {
                'type': 'confirm',
                'name': TENSOR_MODE_PARAMETER,
                'message': 'Evolve a tensor conductivity?',
                'default': defaults[TENSOR_MODE_PARAMETER]
            },
            {
                'type': 'input',
                'name': T_PARAMETER,
                'message': 'Final time T:',
                'default': repr(defaults[T_PARAMETER]),
                'validate': NonNegativeFloatValidator
            },
            {
                'type': 'input',
                'name': NU_TILDE_PARAMETER,
                'message': 'Metabolic coefficient nu_tilde:',
                'default': repr(defaults[NU_TILDE_PARAMETER]),
                'validate': NonNegativeFloatValidator
            },
            {
                'type': 'input',
                'name': GAMMA_PARAMETER,
                'message': 'Metabolic exponent gamma:',
                'default': repr(defaults[GAMMA_PARAMETER]),
                'validate': GammaValidator
            },
            {
                'type': 'input',
                'name': R_PARAMETER,
                'message': 'Background permeability r:',
                'default': repr(defaults[R_PARAMETER]),
                'validate': NonNegativeFloatValidator
            },
            {
                'type': 'input',
                'name': EPSILON_PARAMETER,
                'message': 'Regularization epsilon:',
                'default': repr(defaults[EPSILON_PARAMETER]),
                'validate': PositiveFloatValidator
            },
            {
                'type': 'select',
                'name': COEFF_SAMPLING_PARAMETER,
                'message': 'Coefficient sampling:',
                'choices': [sampling.value for sampling in CoefficientSampling],
                'default': defaults[COEFF_SAMPLING_PARAMETER]
            },
            {
                'type': 'input',
                'name': SNAPSHOT_EVERY_PARAMETER,
                'message': 'Write a snapshot every (steps, 0 for final only):',
                'default': str(defaults[SNAPSHOT_EVERY_PARAMETER]),
                'validate': NumberValidator
            },
            {
                'type': 'input',
                'name': OUT_DIR_PARAMETER,
                'message': 'Output directory:',
                'default': defaults[OUT_DIR_PARAMETER],
                'validate': NotNullValidator
            },
        ]
        answers = prompt(questions)

        data = {key: value for key, value in defaults.items() if value is not None}
        if answers.get(DOMAIN_PARAMETER, defaults[DOMAIN_PARAMETER]) != defaults[DOMAIN_PARAMETER]:
            data.pop(SOURCE_X_PARAMETER, None)
            data.pop(SOURCE_Y_PARAMETER, None)
        data.update(answers)
        generate_config_file(data, config_path)

        print(colored('Configuration file %s updated' % config_path, 'green'))
    except Exception as e:
        print(colored('Something went wrong! Please try again.', color='red'))
        raise e


if __name__ == '__main__':
    configure()
