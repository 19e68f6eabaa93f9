# Copyright 2012 OpenStack LLC.
# All Rights Reserved.
#
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

from __future__ import print_function

import argparse
import json
import logging

from oslo_utils import strutils

from cubicorbits.common import cliutils
from cubicorbits.common import config as run_config
from cubicorbits.common.i18n import _
from cubicorbits import exc
from cubicorbits import geometry


LOG = logging.getLogger(__name__)


class HelpFormatter(argparse.HelpFormatter):
    def start_section(self, heading):
        # Title-case the headings
        heading = '%s%s' % (heading[0].upper(), heading[1:])
        super(HelpFormatter, self).start_section(heading)


class ArgumentParser(argparse.ArgumentParser):
    """Parser whose usage errors exit through CommandError (status 1)."""

    def error(self, message):
        raise exc.CommandError(_("%(prog)s: error: %(message)s")
                               % {'prog': self.prog, 'message': message})


def define_command(subparsers, command, callback, cmd_mapper):
    '''Define a command in the subparsers collection.

    :param subparsers: subparsers collection where the command will go
    :param command: command name
    :param callback: function that will be used to process the command
    '''
    desc = callback.__doc__ or ''
    help = desc.strip().split('\n')[0]
    arguments = getattr(callback, 'arguments', [])

    subparser = subparsers.add_parser(command, help=help,
                                      description=desc,
                                      add_help=False,
                                      formatter_class=HelpFormatter)
    subparser.add_argument('-h', '--help', action='help',
                           help=argparse.SUPPRESS)
    cmd_mapper[command] = subparser
    for (args, kwargs) in arguments:
        subparser.add_argument(*args, **kwargs)
    subparser.set_defaults(func=callback)


def define_commands_from_module(subparsers, command_module, cmd_mapper):
    """Add *do_* methods in a module and add as commands into a subparsers."""

    for method_name in (a for a in dir(command_module) if a.startswith('do_')):
        # Commands should be hypen-separated instead of underscores.
        command = method_name[3:].replace('_', '-')
        callback = getattr(command_module, method_name)
        define_command(subparsers, command, callback, cmd_mapper)


def surface_args(func):
    """Add the mutually exclusive --surface / --surface-file options."""
    cliutils.add_arg(func, '--surface-file', metavar='<path>',
                     help=_('Surface JSON file with a "monomials" list.'))
    cliutils.add_arg(func, '--surface', metavar='<name>',
                     choices=sorted(geometry.BUILTIN_SURFACES),
                     help=_('Built-in surface: %s.')
                     % ', '.join(sorted(geometry.BUILTIN_SURFACES)))
    return func


def load_surface(args):
    """The surface selected by --surface or --surface-file.

    :raises CommandError: if neither or both are given, or the file is
        unreadable or malformed.
    """
    name = getattr(args, 'surface', None)
    path = getattr(args, 'surface_file', None)
    if bool(name) == bool(path):
        raise exc.CommandError(_("Exactly one of --surface and "
                                 "--surface-file is required"))
    if name:
        return geometry.builtin_surface(name)
    try:
        with open(path) as f:
            data = json.load(f)
    except (IOError, OSError) as e:
        raise exc.CommandError(_("Cannot read surface %(path)s: %(err)s")
                               % {'path': path, 'err': e})
    except ValueError as e:
        raise exc.CommandError(_("Surface %(path)s is not valid JSON: "
                                 "%(err)s") % {'path': path, 'err': e})
    LOG.debug("Loaded surface from %s", path)
    return geometry.CubicSurface.from_dict(data, name=path)


def config_args(func):
    """Add the run configuration options shared by numeric commands."""
    cliutils.add_arg(func, '--workers', metavar='<count>', type=int,
                     help=_('Threads searching charts; the output does not '
                            'depend on it. Default: 1.'))
    cliutils.add_arg(func, '--max-iter', metavar='<count>', type=int,
                     dest='newton_max_iter',
                     help=_('Newton iterations per start. Default: 50.'))
    cliutils.add_arg(func, '--starts', metavar='<count>', type=int,
                     dest='newton_starts',
                     help=_('Newton starts per chart. Default: 200.'))
    cliutils.add_arg(func, '--seed', metavar='<integer>', type=int,
                     help=_('Random seed. Default: 0.'))
    cliutils.add_arg(func, '--config', metavar='<path>',
                     help=_('JSON object overriding the default run '
                            'parameters; explicit options win.'))
    return func


def config_from_args(args):
    """Defaults, then --config, then explicit options."""
    path = getattr(args, 'config', None)
    conf = (run_config.RunConfig.from_file(path) if path
            else run_config.DEFAULT)
    overrides = dict((name, getattr(args, name, None))
                     for name in ('seed', 'newton_starts', 'newton_max_iter',
                                  'workers'))
    return conf.replace(**overrides)


def to_json(data):
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False)


def write_text(text, out=None):
    """Print ``text``, or write it to the file ``out``."""
    if out is None:
        print(text, end='' if text.endswith('\n') else '\n')
        return
    try:
        with open(out, 'w') as f:
            f.write(text)
    except (IOError, OSError) as e:
        raise exc.CommandError(_("Cannot write %(path)s: %(err)s")
                               % {'path': out, 'err': e})
    LOG.debug("Wrote %s", out)


def write_json(data, out=None):
    write_text(to_json(data) + '\n', out)


def split_values(text, arg_name):
    """Integers from a comma-separated option value."""
    try:
        return [strutils.validate_integer(v.strip(), arg_name)
                for v in text.split(',')]
    except ValueError as e:
        raise exc.CommandError(_("argument %(arg)s: %(err)s")
                               % {'arg': arg_name, 'err': e})
