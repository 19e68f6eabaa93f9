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
Real lines on real cubic surfaces and their hyperbolic/elliptic type.

Along a real line the tangent planes of the surface sweep the pencil of
planes through the line by a degree-two map t -> [alpha(t) : beta(t)].
The involution exchanging the two points of each fibre has its fixed
points at the roots of the Wronskian alpha*beta' - alpha'*beta; the line
is hyperbolic when they are real and elliptic when they are not.
"""

import logging

import numpy as np

from cubicorbits.common import config as run_config
from cubicorbits.common.i18n import _LW
from cubicorbits import equivariant
from cubicorbits import exc
from cubicorbits import geometry


LOG = logging.getLogger(__name__)

HYPERBOLIC = 'hyperbolic'
ELLIPTIC = 'elliptic'

SCHLAEFLI_COUNTS = (3, 7, 15, 27)
SEGRE_DIFFERENCE = 3


def is_real_line(line, tol=None):
    """True iff the line equals its complex conjugate."""
    tol = run_config.DEFAULT.tol_real if tol is None else tol
    return geometry.projective_distance(line.plucker,
                                        np.conj(line.plucker)) < tol


def real_span(line, tol=None):
    """Two orthonormal real points spanning a real line.

    :raises NotRealLine: if the line is not real within ``tol``.
    """
    if not is_real_line(line, tol):
        raise exc.NotRealLine()
    parts = np.vstack([line.span.real, line.span.imag])
    _u, _s, vt = np.linalg.svd(parts)
    return vt[0], vt[1]


class PencilCoordinates(object):
    """Planes A, B through a real line and the gradient in their basis.

    ``alpha`` and ``beta`` hold ascending coefficients of quadratics in t
    with grad F(P0 + t P1) = alpha(t) A + beta(t) B.
    """

    def __init__(self, points, planes, alpha, beta):
        self.points = points
        self.planes = planes
        self.alpha = alpha
        self.beta = beta


def pencil_coordinates(surface, line, tol=None):
    p0, p1 = real_span(line, tol)
    planes = np.linalg.svd(np.vstack([p0, p1]))[2][2:]
    tensor = surface.tensor.real
    g00 = np.einsum('ijk,j,k->i', tensor, p0, p0)
    g01 = np.einsum('ijk,j,k->i', tensor, p0, p1)
    g11 = np.einsum('ijk,j,k->i', tensor, p1, p1)
    # grad F(P0 + t P1) = 3 (g00 + 2 t g01 + t^2 g11)
    gradient = np.vstack([3 * g00, 6 * g01, 3 * g11])
    coeffs = planes.dot(gradient.T)
    return PencilCoordinates((p0, p1), planes, coeffs[0], coeffs[1])


def wronskian(pencil):
    """Ascending coefficients (w0, w1, w2) of alpha*beta' - alpha'*beta."""
    a0, a1, a2 = pencil.alpha
    b0, b1, b2 = pencil.beta
    return np.array([a0 * b1 - a1 * b0,
                     2 * (a0 * b2 - a2 * b0),
                     a1 * b2 - a2 * b1])


def line_type(surface, line, conf=None):
    """``hyperbolic`` or ``elliptic`` for a real line on a real surface.

    :raises DegenerateInvolution: if the Wronskian discriminant is zero
        relative to the coefficient scale.
    """
    conf = conf or run_config.DEFAULT
    pencil = pencil_coordinates(surface, line, conf.tol_real)
    w0, w1, w2 = wronskian(pencil)
    discriminant = w1 * w1 - 4 * w0 * w2
    scale = float(np.abs([w0, w1, w2]).max())
    pencil_scale = float(np.abs(np.concatenate([pencil.alpha,
                                                pencil.beta])).max())
    if (scale <= conf.tol_degenerate * pencil_scale ** 2 or
            abs(discriminant) < conf.tol_degenerate * scale ** 2):
        raise exc.DegenerateInvolution(discriminant=discriminant)
    return HYPERBOLIC if discriminant > 0 else ELLIPTIC


class RealLineAnalysis(object):
    """Reality and type of every line, with per-orbit summaries."""

    def __init__(self, report, per_line, orbits=None):
        self.report = report
        self.per_line = per_line
        self.orbits = orbits or []

    @property
    def real_count(self):
        return sum(1 for entry in self.per_line if entry['real'])

    @property
    def hyperbolic_count(self):
        return sum(1 for entry in self.per_line
                   if entry['type'] == HYPERBOLIC)

    @property
    def elliptic_count(self):
        return sum(1 for entry in self.per_line if entry['type'] == ELLIPTIC)

    def to_dict(self):
        data = {'real_count': self.real_count,
                'hyperbolic': self.hyperbolic_count,
                'elliptic': self.elliptic_count,
                'lines': self.per_line}
        if self.orbits:
            data['orbits'] = self.orbits
        return data


def analyze_real(surface, conf=None, report=None):
    """Count real, hyperbolic and elliptic lines on a real cubic.

    For a symmetric surface the S4-orbits are reported with their types.

    :raises SurfaceNotReal: for complex coefficients.
    :raises SegreViolation: unless hyperbolic - elliptic == 3.
    """
    conf = conf or run_config.DEFAULT
    if not surface.is_real:
        raise exc.SurfaceNotReal()
    if report is None:
        report = geometry.find_lines(surface, conf=conf)
    per_line = []
    for index, line in enumerate(report.lines):
        real = is_real_line(line, conf.tol_real)
        kind = line_type(surface, line, conf) if real else None
        per_line.append({'index': index, 'real': real, 'type': kind})

    orbits = []
    if surface.is_symmetric:
        decomposition = equivariant.euler_number(report.lines, 'S4',
                                                 conf.tol_match)
        for orbit in decomposition.orbits:
            kinds = sorted(set(per_line[i]['type'] or 'n/a'
                               for i in orbit.members))
            orbits.append({'stabilizer': orbit.stabilizer_class.label,
                           'size': orbit.size,
                           'real': all(per_line[i]['real']
                                       for i in orbit.members),
                           'types': kinds})

    analysis = RealLineAnalysis(report, per_line, orbits)
    if analysis.real_count not in SCHLAEFLI_COUNTS:
        LOG.warning(_LW("Found %d real lines, not a Schlaefli count"),
                    analysis.real_count)
    difference = analysis.hyperbolic_count - analysis.elliptic_count
    if difference != SEGRE_DIFFERENCE:
        raise exc.SegreViolation(hyperbolic=analysis.hyperbolic_count,
                                 elliptic=analysis.elliptic_count)
    return analysis
