#    Licensed under the Apache License, Version 2.0 (the "License"); you may
#    not use this file except in compliance with the License. You may obtain
#    a copy of the License at
#
#         http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
#    WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
#    License for the specific language governing permissions and limitations
#    under the License.

"""Run parameters shared by the line finder and the analyses."""

import collections
import json
import logging

from oslo_utils import strutils

from cubicorbits.common.i18n import _
from cubicorbits import exc


LOG = logging.getLogger(__name__)

# name -> (default, kind); kind is 'int', 'seed' or 'tol'
OPTIONS = collections.OrderedDict([
    ('seed', (0, 'seed')),
    ('newton_starts', (200, 'int')),
    ('newton_max_iter', (50, 'int')),
    ('start_radius', (2.0, 'tol')),
    ('tol_step', (1e-13, 'tol')),
    ('tol_residual', (1e-10, 'tol')),
    ('tol_polish', (1e-12, 'tol')),
    ('tol_dedupe', (1e-6, 'tol')),
    ('tol_match', (1e-6, 'tol')),
    ('tol_real', (1e-8, 'tol')),
    ('tol_simple', (1e-6, 'tol')),
    ('tol_degenerate', (1e-9, 'tol')),
    ('retry_budget', (20, 'int')),
    ('workers', (1, 'int')),
])

MAX_SEED = 2 ** 64 - 1


class RunConfig(object):
    """Immutable set of run parameters.

    Unknown keys and invalid values raise :class:`exc.CommandError`.
    """

    def __init__(self, **kwargs):
        unknown = set(kwargs) - set(OPTIONS)
        if unknown:
            raise exc.CommandError(_("Unknown configuration key(s): %s")
                                   % ', '.join(sorted(unknown)))
        values = {}
        for name, (default, kind) in OPTIONS.items():
            value = kwargs.get(name)
            values[name] = default if value is None else _validate(
                name, value, kind)
        self.__dict__['_values'] = values

    def __getattr__(self, name):
        try:
            return self.__dict__['_values'][name]
        except KeyError:
            raise AttributeError(name)

    def __setattr__(self, name, value):
        raise AttributeError(_("RunConfig is immutable; use replace()"))

    def __eq__(self, other):
        return isinstance(other, RunConfig) and self._values == other._values

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return '<RunConfig %s>' % ', '.join(
            '%s=%r' % (k, v) for k, v in self.to_dict().items())

    def replace(self, **overrides):
        """Copy with the given non-None values replaced."""
        values = self.to_dict()
        values.update((k, v) for k, v in overrides.items() if v is not None)
        return RunConfig(**values)

    def to_dict(self):
        return collections.OrderedDict(
            (name, self._values[name]) for name in OPTIONS)

    @classmethod
    def from_file(cls, path):
        """Load a JSON object of options; missing keys keep defaults."""
        try:
            with open(path) as f:
                data = json.load(f)
        except (IOError, OSError) as e:
            raise exc.CommandError(_("Cannot read config %(path)s: %(err)s")
                                   % {'path': path, 'err': e})
        except ValueError as e:
            raise exc.CommandError(_("Config %(path)s is not valid JSON: "
                                     "%(err)s") % {'path': path, 'err': e})
        if not isinstance(data, dict):
            raise exc.CommandError(_("Config %s must hold a JSON object")
                                   % path)
        LOG.debug("Loaded configuration from %s", path)
        return cls(**data)


def _validate(name, value, kind):
    if isinstance(value, bool):
        raise exc.CommandError(_("%(name)s must be a number, not %(value)r")
                               % {'name': name, 'value': value})
    try:
        if kind == 'seed':
            return strutils.validate_integer(value, name, 0, MAX_SEED)
        if kind == 'int':
            return strutils.validate_integer(value, name, 1)
        value = float(value)
    except (TypeError, ValueError) as e:
        raise exc.CommandError(_("Invalid value for %(name)s: %(err)s")
                               % {'name': name, 'err': e})
    if not value > 0 or value == float('inf'):
        raise exc.CommandError(_("%(name)s must be a positive number, not "
                                 "%(value)r") % {'name': name,
                                                 'value': value})
    return value


DEFAULT = RunConfig()
