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

"""
Real lines as Wavefront OBJ line segments.

Points of P^3 are drawn in the affine chart h.x = 1, with coordinates taken
in an orthonormal basis of the hyperplane h.x = 0; each line is clipped to
the ball of radius R around the chart origin.
"""

import logging

import numpy as np

from cubicorbits.common.i18n import _
from cubicorbits.common.i18n import _LW
from cubicorbits import equivariant
from cubicorbits import exc
from cubicorbits import real_lines


LOG = logging.getLogger(__name__)

DEFAULT_RADIUS = 3.0
RANDOM_CHARTS = 256
CHART_SEED = 0


class AffineChart(object):
    """The chart h.x = 1 for a unit covector h."""

    def __init__(self, covector):
        h = np.asarray(covector, dtype=float)
        norm = np.linalg.norm(h)
        if h.shape != (4,) or not norm:
            raise exc.CommandError(_("A chart needs four numbers, not all "
                                     "zero"))
        self.covector = h / norm
        axis = np.flatnonzero(self.covector)
        if len(axis) == 1:
            # coordinate chart: keep the remaining coordinates in order
            others = [i for i in range(4) if i != axis[0]]
            self.basis = np.eye(4)[others] * np.sign(self.covector[axis[0]])
        else:
            self.basis = np.linalg.svd(self.covector[np.newaxis, :])[2][1:]

    def __str__(self):
        return ','.join('%g' % c for c in self.covector)

    def meeting(self, p0, p1):
        """Length of h restricted to the plane of the line.

        The line meets the ball of radius R iff this is at least
        1 / sqrt(R^2 + 1).
        """
        return float(np.hypot(self.covector.dot(p0), self.covector.dot(p1)))

    def segment(self, p0, p1, radius):
        """Endpoints of the line inside the ball, or None."""
        h0, h1 = self.covector.dot(p0), self.covector.dot(p1)
        m2 = h0 * h0 + h1 * h1
        if m2 <= 1e-15:
            return None
        base = self.basis.dot((h0 * p0 + h1 * p1) / m2)
        direction = self.basis.dot(-h1 * p0 + h0 * p1)
        direction = direction / np.linalg.norm(direction)
        closest = base - base.dot(direction) * direction
        distance = np.linalg.norm(closest)
        if distance > radius:
            return None
        half = np.sqrt(radius * radius - distance * distance)
        return closest - half * direction, closest + half * direction

    def homogenize(self, point):
        return self.covector + self.basis.T.dot(point)


def parse_chart(text):
    """``auto`` or four comma-separated numbers."""
    if text is None or text == 'auto':
        return None
    try:
        values = [float(v) for v in text.split(',')]
    except ValueError:
        raise exc.CommandError(_("Invalid chart %r") % text)
    if len(values) != 4:
        raise exc.CommandError(_("Invalid chart %r") % text)
    return AffineChart(values)


def choose_chart(spans, radius):
    """x0 = 1 if it shows every line, else the best of a fixed set."""
    threshold = 1 / np.sqrt(radius * radius + 1)
    default = AffineChart([1, 0, 0, 0])
    if all(default.meeting(p0, p1) >= threshold for p0, p1 in spans):
        return default
    rng = np.random.default_rng(CHART_SEED)
    candidates = [AffineChart(row) for row in np.eye(4)]
    candidates.extend(AffineChart(row)
                      for row in rng.standard_normal((RANDOM_CHARTS, 4)))
    scores = [min(c.meeting(p0, p1) for p0, p1 in spans)
              for c in candidates]
    best = candidates[int(np.argmax(scores))]
    LOG.debug("Chart x0 = 1 hides lines; using h = %s", best)
    return best


class ObjExport(object):
    def __init__(self, chart, radius, groups):
        self.chart = chart
        self.radius = radius
        self.groups = groups

    @property
    def segment_count(self):
        return sum(len(segments) for _name, segments in self.groups)

    def to_obj(self, title=None):
        lines = ['# %s' % (title or 'real lines'),
                 '# chart %s radius %g' % (self.chart, self.radius)]
        vertex = 0
        for name, segments in self.groups:
            lines.append('g %s' % name)
            for start, end in segments:
                for point in (start, end):
                    lines.append('v %.9f %.9f %.9f' % tuple(point))
                lines.append('l %d %d' % (vertex + 1, vertex + 2))
                vertex += 2
        return '\n'.join(lines) + '\n'


def export_lines(surface, lines, radius=DEFAULT_RADIUS, chart=None,
                 conf=None):
    """Segments of the real lines, grouped by S4-orbit when symmetric.

    :param chart: an :class:`AffineChart`, or None to choose one.
    :raises SurfaceNotReal: for complex coefficients.
    """
    if not surface.is_real:
        raise exc.SurfaceNotReal()
    tol_real = conf.tol_real if conf else None
    real = [i for i, line in enumerate(lines)
            if real_lines.is_real_line(line, tol_real)]
    spans = dict((i, real_lines.real_span(lines[i], tol_real)) for i in real)

    if surface.is_symmetric:
        decomposition = equivariant.euler_number(
            lines, 'S4', conf.tol_match if conf else None)
        grouping = [('orbit-%s' % o.stabilizer_class.label,
                     [i for i in o.members if i in spans])
                    for o in decomposition.orbits]
    else:
        grouping = [('real-lines', real)]
    grouping = [(name, members) for name, members in grouping if members]

    if chart is None and spans:
        chart = choose_chart(list(spans.values()), radius)
    chart = chart or AffineChart([1, 0, 0, 0])

    groups = []
    for name, members in grouping:
        segments = []
        for index in members:
            segment = chart.segment(spans[index][0], spans[index][1], radius)
            if segment is None:
                LOG.warning(_LW("Line %(index)d misses the ball of radius "
                                "%(radius)g"), {'index': index,
                                                'radius': radius})
                continue
            segments.append(segment)
        groups.append((name, segments))
    return ObjExport(chart, radius, groups)


def read_obj(text):
    """Parse our OBJ output into {group: [(start, end), ...]}."""
    vertices = []
    groups = {}
    current = None
    for raw in text.splitlines():
        fields = raw.split()
        if not fields or fields[0] == '#':
            continue
        if fields[0] == 'g':
            current = fields[1]
            groups.setdefault(current, [])
        elif fields[0] == 'v':
            vertices.append(np.array([float(f) for f in fields[1:4]]))
        elif fields[0] == 'l':
            i, j = int(fields[1]) - 1, int(fields[2]) - 1
            groups.setdefault(current, []).append((vertices[i], vertices[j]))
    return groups
