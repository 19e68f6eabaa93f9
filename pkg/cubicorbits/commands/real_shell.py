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

from cubicorbits.commands import resource_fields as res_fields
from cubicorbits.common import cliutils
from cubicorbits.common import utils
from cubicorbits import exc
from cubicorbits import real_lines


@utils.surface_args
@utils.config_args
@cliutils.arg('--summary', dest='summary', action='store_true',
              default=False,
              help='Print count and orbit tables instead of JSON.')
def do_real(args):
    """Count real, hyperbolic and elliptic lines on a real cubic."""
    surface = utils.load_surface(args)
    if not surface.is_real:
        raise exc.SurfaceNotReal()
    conf = utils.config_from_args(args)
    analysis = real_lines.analyze_real(surface, conf)
    data = analysis.to_dict()
    if not args.summary:
        utils.write_json(data)
        return
    cliutils.print_dict({'real': data['real_count'],
                         'hyperbolic': data['hyperbolic'],
                         'elliptic': data['elliptic']})
    if analysis.orbits:
        fields = res_fields.REAL_ORBIT_RESOURCE
        cliutils.print_list(
            analysis.orbits, list(fields.fields),
            field_labels=list(fields.labels),
            formatters={'types': lambda o: ', '.join(o['types'])})
