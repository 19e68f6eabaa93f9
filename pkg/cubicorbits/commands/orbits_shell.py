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

import logging

from cubicorbits import burnside
from cubicorbits.commands import resource_fields as res_fields
from cubicorbits.common import cliutils
from cubicorbits.common.i18n import _
from cubicorbits.common import utils
from cubicorbits import equivariant
from cubicorbits import exc
from cubicorbits import geometry
from cubicorbits import groups


LOG = logging.getLogger(__name__)

_NOTATION_ARG = cliutils.arg(
    '--notation', metavar='<coarse|exact>', choices=['coarse', 'exact'],
    default='coarse',
    help='"coarse" merges order-two and Klein classes the way they are '
         'usually printed; "exact" names every class. Default: coarse.')

_JSON_ARG = cliutils.arg(
    '--json', dest='json', action='store_true', default=False,
    help='Print JSON instead of tables.')


def _lines_for(args):
    surface = utils.load_surface(args)
    conf = utils.config_from_args(args)
    return geometry.find_lines(surface, conf=conf), conf


@utils.surface_args
@utils.config_args
@cliutils.arg('--group', metavar='<class>', default='S4',
              help='Subgroup class acting on the lines: %s. Default: S4.'
                   % ', '.join(groups.CLASS_NAMES))
@_NOTATION_ARG
@_JSON_ARG
def do_orbits(args):
    """Decompose the 27 lines into orbits of a permutation group."""
    lattice = groups.lattice_for(args.group)
    report, conf = _lines_for(args)
    decomposition = equivariant.euler_number(report.lines, lattice,
                                             conf.tol_match)
    coarse = args.notation == 'coarse'
    data = decomposition.to_dict(coarse=coarse)
    if args.json:
        utils.write_json(data)
        return
    print(data['euler_number'])
    fields = res_fields.ORBIT_RESOURCE
    cliutils.print_list(
        data['orbits'], list(fields.fields), field_labels=list(fields.labels),
        formatters={'members': lambda o: ' '.join(str(m)
                                                  for m in o['members'])})


@utils.surface_args
@utils.config_args
@_NOTATION_ARG
@_JSON_ARG
def do_table1(args):
    """Orbits of the lines under all eleven subgroup classes of S4.

    Every row is computed twice, directly and by restricting the S4 orbit
    decomposition, and the two must agree.
    """
    report, conf = _lines_for(args)
    rows = equivariant.table1(report.lines, conf.tol_match)
    coarse = args.notation == 'coarse'
    data = [row.to_dict(coarse=coarse) for row in rows]
    if args.json:
        utils.write_json(data)
        return
    fields = res_fields.TABLE1_RESOURCE
    cliutils.print_list(data, list(fields.fields),
                        field_labels=list(fields.labels))


@utils.config_args
@cliutils.arg('--trials', metavar='<count>', type=int, default=10,
              help='Number of random symmetric cubics. Default: 10.')
@_JSON_ARG
def do_verify_conservation(args):
    """Check that random symmetric cubics share one S4 line count."""
    if args.trials < 1:
        raise exc.CommandError(_("--trials must be at least 1"))
    conf = utils.config_from_args(args)
    expected = burnside.parse(equivariant.S4_ANSWER)
    trials = equivariant.conservation_trials(args.trials, conf.seed, conf,
                                             expected)
    data = [{'trial': t.index,
             'seed': t.seed,
             'element': t.decomposition.euler_number.to_bracket(),
             'result': 'pass' if t.passed else 'fail'} for t in trials]
    if args.json:
        utils.write_json({'expected': expected.to_bracket(),
                          'trials': data})
    else:
        fields = res_fields.TRIAL_RESOURCE
        cliutils.print_list(data, list(fields.fields),
                            field_labels=list(fields.labels))
    failed = sum(1 for t in trials if not t.passed)
    if failed:
        raise exc.ConservationMismatch(failed=failed, trials=len(trials),
                                       expected=expected)
    LOG.info("All %d trials agree with %s", len(trials), expected)
