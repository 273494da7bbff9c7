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

import mupsl


class Config:
    """
    Option manager for mupsl

    Holds the package defaults and the values overridden in the current
    session. The command line front end builds its run configuration by
    overriding keys of the package-wide instance ``mupsl.config``.

    Examples
    --------

    >>> mupsl.config['enumeration_cap']
    1000000
    >>> mupsl.config['enumeration_cap'] = 5000
    >>> del mupsl.config['enumeration_cap']
    >>> mupsl.config['enumeration_cap']
    1000000

    """

    def __init__(self, *args):
        self.defaults = _get_default_config()
        self.overridden = dict()

        if len(args) > 1 and len(args) % 2 == 0:
            keys = args[::2]
            values = args[1::2]
            for key, value in zip(keys, values):
                self[key] = value

    def __getitem__(self, key):
        if key in self.overridden:
            return self.overridden[key]
        return self.defaults.get(key, None)

    def __setitem__(self, key, value):
        _validate(key, value)
        self.overridden[key] = value

    def __delitem__(self, key):
        if key in self.overridden:
            del self.overridden[key]
        elif key not in self.defaults:
            raise KeyError('ERROR: Invalid config key: {}'.format(key))

    @property
    def keys(self):
        dicts = [self.defaults, self.overridden]
        merged_keys = set().union(*dicts)
        return sorted(merged_keys)

    def __iter__(self):
        for key in self.keys:
            yield key

    def reset(self):
        self.overridden = dict()


_POSITIVE_KEYS = ('enumeration_cap', 'field_budget', 'psl2_q_max',
                  'factorial_n_max', 'alternating_f_max')
_RANGE_KEYS = ('q0_range', 'alternating_primes', 'sylow2_f_range',
               'suzuki_s_range')


def _validate(key, value):
    if key in _POSITIVE_KEYS:
        if isinstance(value, bool) or not isinstance(value, int) or value < 1:
            raise ValueError(
                'Config value {} must be a positive integer, got {!r}'.format(
                    key, value))
    elif key in _RANGE_KEYS:
        if len(tuple(value)) == 0:
            raise ValueError('Config value {} cannot be empty'.format(key))
    elif key == 'output_format':
        if value not in ('json', 'tsv'):
            raise ValueError(
                'Output format must be json or tsv, got {!r}'.format(value))
    elif key == 'max_workers':
        if value is not None and (not isinstance(value, int) or value < 1):
            raise ValueError('max_workers must be None or a positive integer')


def _get_default_config():
    config = dict()
    config['verbosity'] = 3
    config['enumeration_cap'] = 10 ** 6
    config['field_budget'] = 2 ** 16
    config['psl2_q_max'] = 49
    config['q0_range'] = (2, 3, 4, 5, 7, 8, 9)
    config['output_format'] = 'json'
    config['max_workers'] = None
    config['factorial_n_max'] = 200
    config['alternating_primes'] = (3, 5, 7, 11, 13)
    config['alternating_f_max'] = 6
    config['sylow2_f_range'] = tuple(range(2, 9))
    config['suzuki_s_range'] = tuple(range(1, 6))

    return config


def _load_default_config():
    mupsl.config = Config()
    mupsl.default_config_keys = mupsl.config.keys
