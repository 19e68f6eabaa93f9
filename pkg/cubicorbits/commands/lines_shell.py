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

from cubicorbits.common import cliutils
from cubicorbits.common.i18n import _
from cubicorbits.common import utils
from cubicorbits import exc
from cubicorbits import export
from cubicorbits import geometry


@utils.surface_args
@utils.config_args
@cliutils.arg('--out', metavar='<path>',
              help='Write the JSON report to this file instead of stdout.')
def do_find_lines(args):
    """Find the 27 lines on a cubic surface.

    Prints the lines (orthonormal span and Plücker vector) together with
    the Newton statistics and the run configuration as JSON.
    """
    surface = utils.load_surface(args)
    conf = utils.config_from_args(args)
    report = geometry.find_lines(surface, conf=conf)
    utils.write_json(report.to_dict(), args.out)


@utils.surface_args
@utils.config_args
@cliutils.arg('--format', metavar='<format>', choices=['obj'], default='obj',
              help='Output format. Only "obj" (Wavefront) is supported.')
@cliutils.arg('--radius', metavar='<radius>', type=float,
              default=export.DEFAULT_RADIUS,
              help='Clip segments to this ball in the affine chart. '
                   'Default: %g.' % export.DEFAULT_RADIUS)
@cliutils.arg('--chart', metavar='<auto|h0,h1,h2,h3>', default='auto',
              help='Affine chart h.x = 1. "auto" keeps x0 = 1 when it shows '
                   'every real line.')
@cliutils.arg('--out', metavar='<path>',
              help='Write the mesh to this file instead of stdout.')
def do_export_lines(args):
    """Export the real lines as segments, one group per orbit."""
    if args.radius <= 0:
        raise exc.CommandError(_("--radius must be positive"))
    chart = export.parse_chart(args.chart)
    surface = utils.load_surface(args)
    if not surface.is_real:
        raise exc.SurfaceNotReal()
    conf = utils.config_from_args(args)
    report = geometry.find_lines(surface, conf=conf)
    result = export.export_lines(surface, report.lines, args.radius, chart,
                                 conf)
    utils.write_text(result.to_obj(title=surface.name), args.out)
    if not result.segment_count:
        raise exc.CommandError(_("No real line to export"))
