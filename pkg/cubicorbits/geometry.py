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
Cubic surfaces in P^3 and the lines on them.

A line lies on V(F) iff the binary cubic F(w*P0 + z*P1) vanishes.  In a
Grassmannian chart the line is x_i = a*x_k + b*x_l, x_j = c*x_k + d*x_l,
so finding lines means solving four cubic equations in (a, b, c, d).
"""

from concurrent import futures
import itertools
import logging
import math

import numpy as np

from cubicorbits.common import config as run_config
from cubicorbits.common.i18n import _
from cubicorbits.common.i18n import _LW
from cubicorbits import exc
from cubicorbits import groups


LOG = logging.getLogger(__name__)

EXPECTED_LINES = 27

EXPONENTS = tuple(sorted(
    (e for e in itertools.product(range(4), repeat=4) if sum(e) == 3),
    reverse=True))

PLUCKER_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))

# (dependent pair, free pair) for each of the six coordinate charts
CHARTS = tuple((tuple(sorted(set(range(4)) - set(free))), free)
               for free in PLUCKER_PAIRS)

ZETA = complex(math.cos(math.pi / 3), math.sin(math.pi / 3))

# Monomial-symmetric basis coefficients (x_i^3, x_i^2 x_j, x_i x_j x_k).
BUILTIN_SURFACES = {
    'fermat': (1.0, 0.0, 0.0),
    'clebsch': (0.0, -3.0, -6.0),
}

DIVERGED = 1e6
JSON_DIGITS = 12


def _multinomial(exponents):
    result = math.factorial(sum(exponents))
    for e in exponents:
        result //= math.factorial(e)
    return result


def _json_complex(value):
    return [round(float(value.real), JSON_DIGITS) + 0.0,
            round(float(value.imag), JSON_DIGITS) + 0.0]


def _json_float(value):
    return round(float(value), JSON_DIGITS) + 0.0


class CubicSurface(object):
    """Homogeneous cubic form in x0..x3 given by its 20 coefficients.

    :param coeffs: mapping exponent tuple -> complex, or a sequence in
        :data:`EXPONENTS` order.
    :param name: optional label, e.g. ``fermat``.
    """

    def __init__(self, coeffs, name=None):
        values = np.zeros(len(EXPONENTS), dtype=complex)
        if isinstance(coeffs, dict):
            for exponents, value in coeffs.items():
                exponents = tuple(int(e) for e in exponents)
                if exponents not in EXPONENTS:
                    raise exc.CommandError(
                        _("Not a cubic monomial: %s") % list(exponents))
                values[EXPONENTS.index(exponents)] += complex(value)
        else:
            values[:] = np.asarray(coeffs, dtype=complex)
        values.flags.writeable = False
        self.coeffs = values
        self.name = name
        self.tensor = self._symmetric_tensor()

    def _symmetric_tensor(self):
        # F(x) = sum T[i,j,k] x_i x_j x_k with T fully symmetric
        tensor = np.zeros((4, 4, 4), dtype=complex)
        for i, j, k in itertools.product(range(4), repeat=3):
            exponents = [0, 0, 0, 0]
            for m in (i, j, k):
                exponents[m] += 1
            exponents = tuple(exponents)
            tensor[i, j, k] = (self.coeffs[EXPONENTS.index(exponents)] /
                               _multinomial(exponents))
        tensor.flags.writeable = False
        return tensor

    def __repr__(self):
        return '<CubicSurface %s>' % (self.name or self.to_polynomial())

    def coefficient(self, exponents):
        return complex(self.coeffs[EXPONENTS.index(tuple(exponents))])

    @property
    def scale(self):
        """Largest coefficient modulus, at least 1."""
        return max(1.0, float(np.abs(self.coeffs).max()))

    @property
    def is_real(self):
        return not np.any(self.coeffs.imag)

    def is_zero(self):
        return not np.any(self.coeffs)

    def evaluate(self, x):
        x = np.asarray(x, dtype=complex)
        return complex(np.einsum('ijk,i,j,k->', self.tensor, x, x, x))

    def gradient(self, x):
        x = np.asarray(x, dtype=complex)
        return 3 * np.einsum('ijk,j,k->i', self.tensor, x, x)

    def permuted(self, g):
        """The form x -> F(g.x), where (g.x)[g(i)] = x[i]."""
        coeffs = {}
        for exponents, value in zip(EXPONENTS, self.coeffs):
            image = tuple(exponents[g(i)] for i in range(4))
            coeffs[image] = value
        return CubicSurface(coeffs)

    def symmetry_group(self, rtol=1e-12):
        """Subgroup of S4 leaving the form unchanged."""
        tol = rtol * self.scale
        return groups.Subgroup(
            g for g in groups.symmetric_group()
            if np.abs(self.permuted(g).coeffs - self.coeffs).max() <= tol)

    @property
    def is_symmetric(self):
        return len(self.symmetry_group()) == 24

    def to_polynomial(self):
        terms = []
        for exponents, value in zip(EXPONENTS, self.coeffs):
            if not value:
                continue
            monomial = '*'.join(
                'x%d' % i if e == 1 else 'x%d^%d' % (i, e)
                for i, e in enumerate(exponents) if e)
            number = value.real if not value.imag else value
            terms.append('%s*%s' % (number, monomial))
        return ' + '.join(terms) or '0'

    def to_dict(self):
        return {'monomials': [
            {'exponents': list(exponents),
             're': _json_float(value.real),
             'im': _json_float(value.imag)}
            for exponents, value in zip(EXPONENTS, self.coeffs) if value]}

    @classmethod
    def from_dict(cls, data, name=None):
        """Build a surface from Surface JSON.

        :raises CommandError: on malformed input.
        """
        if not isinstance(data, dict) or not isinstance(
                data.get('monomials'), list):
            raise exc.CommandError(
                _("Surface JSON needs a 'monomials' list"))
        coeffs = {}
        for entry in data['monomials']:
            try:
                exponents = tuple(int(e) for e in entry['exponents'])
                value = complex(float(entry['re']),
                                float(entry.get('im', 0.0)))
            except (KeyError, TypeError, ValueError):
                raise exc.CommandError(_("Malformed monomial: %r") % (entry,))
            if (len(exponents) != 4 or min(exponents) < 0 or
                    sum(exponents) != 3):
                raise exc.CommandError(
                    _("Exponents must be 4 nonnegative integers summing "
                      "to 3: %r") % (entry['exponents'],))
            if exponents in coeffs:
                raise exc.CommandError(_("Duplicate monomial %s")
                                       % list(exponents))
            coeffs[exponents] = value
        return cls(coeffs, name=name)


def symmetric_cubic(c_cube, c_square, c_triple, name=None):
    """c_cube*sum x_i^3 + c_square*sum x_i^2 x_j + c_triple*sum x_i x_j x_k."""
    coeffs = {}
    for exponents in EXPONENTS:
        shape = tuple(sorted(exponents, reverse=True))
        coeffs[exponents] = {(3, 0, 0, 0): c_cube,
                             (2, 1, 0, 0): c_square,
                             (1, 1, 1, 0): c_triple}[shape]
    return CubicSurface(coeffs, name=name)


def builtin_surface(name):
    try:
        basis = BUILTIN_SURFACES[name]
    except KeyError:
        raise exc.UnknownName(name=name)
    return symmetric_cubic(*basis, name=name)


class LineChart(object):
    """Affine chart x_i = a x_k + b x_l, x_j = c x_k + d x_l."""

    def __init__(self, dependent, free, params=(0, 0, 0, 0)):
        dependent, free = tuple(dependent), tuple(free)
        if sorted(dependent + free) != [0, 1, 2, 3]:
            raise exc.CommandError(
                _("Chart indices %(dep)s and %(free)s must partition "
                  "{0, 1, 2, 3}") % {'dep': dependent, 'free': free})
        self.dependent = dependent
        self.free = free
        self.params = np.array(params, dtype=complex)

    def __repr__(self):
        return '<LineChart x%d,x%d free %s>' % (self.free + (
            list(np.round(self.params, 6)),))

    def with_params(self, params):
        return LineChart(self.dependent, self.free, params)

    def points(self):
        return _chart_points(self.dependent, self.free,
                             self.params[np.newaxis, :])


def _chart_points(dependent, free, params):
    """Batched P0, P1 of shape (N, 4) for chart parameters (N, 4)."""
    (i, j), (k, l) = dependent, free
    count = params.shape[0]
    p0 = np.zeros((count, 4), dtype=complex)
    p1 = np.zeros((count, 4), dtype=complex)
    p0[:, k] = 1
    p1[:, l] = 1
    p0[:, i] = params[:, 0]
    p1[:, i] = params[:, 1]
    p0[:, j] = params[:, 2]
    p1[:, j] = params[:, 3]
    return p0, p1


def _chart_system(tensor, dependent, free, params):
    """Residuals (N, 4) and Jacobians (N, 4, 4) of the chart equations.

    Residuals are the coefficients (r3, r2, r1, r0) of w^3, w^2 z, w z^2,
    z^3; Jacobian columns follow (a, b, c, d).
    """
    p0, p1 = _chart_points(dependent, free, params)
    g00 = np.einsum('ijk,nj,nk->ni', tensor, p0, p0)
    g01 = np.einsum('ijk,nj,nk->ni', tensor, p0, p1)
    g11 = np.einsum('ijk,nj,nk->ni', tensor, p1, p1)
    residuals = np.stack([
        np.einsum('ni,ni->n', g00, p0),
        3 * np.einsum('ni,ni->n', g01, p0),
        3 * np.einsum('ni,ni->n', g11, p0),
        np.einsum('ni,ni->n', g11, p1),
    ], axis=1)
    jac = np.zeros(params.shape[:1] + (4, 4), dtype=complex)
    for column, (index, moved) in enumerate(((dependent[0], 0),
                                             (dependent[0], 1),
                                             (dependent[1], 0),
                                             (dependent[1], 1))):
        rows = np.stack([3 * g00[:, index], 6 * g01[:, index],
                         3 * g11[:, index], np.zeros(len(params))], axis=1)
        # moving P1 instead of P0 shifts the derivative one power of z
        if moved:
            rows = np.roll(rows, 1, axis=1)
        jac[:, :, column] = rows
    return residuals, jac


def binary_cubic(surface, p0, p1):
    """Coefficients of F(w*p0 + z*p1) in w^3, w^2 z, w z^2, z^3."""
    t = surface.tensor
    p0 = np.asarray(p0, dtype=complex)
    p1 = np.asarray(p1, dtype=complex)
    return np.array([
        np.einsum('ijk,i,j,k->', t, p0, p0, p0),
        3 * np.einsum('ijk,i,j,k->', t, p0, p0, p1),
        3 * np.einsum('ijk,i,j,k->', t, p0, p1, p1),
        np.einsum('ijk,i,j,k->', t, p1, p1, p1),
    ])


def restrict_to_line(surface, chart):
    """(r3, r2, r1, r0) of F restricted to the chart's line."""
    residuals, _jac = _chart_system(surface.tensor, chart.dependent,
                                    chart.free, chart.params[np.newaxis, :])
    return residuals[0]


def chart_jacobian(surface, chart):
    """4x4 derivative of :func:`restrict_to_line` in (a, b, c, d)."""
    _res, jac = _chart_system(surface.tensor, chart.dependent, chart.free,
                              chart.params[np.newaxis, :])
    return jac[0]


def normalize_plucker(vector):
    """Scale so the first entry of (near) maximal modulus is exactly 1."""
    vector = np.asarray(vector, dtype=complex)
    modulus = np.abs(vector)
    index = int(np.argmax(modulus >= (1 - 1e-9) * modulus.max()))
    result = vector / vector[index]
    result[index] = 1.0
    return result


def plucker_of_span(p, q):
    """Normalized 2x2 minors p_ij for (01, 02, 03, 12, 13, 23).

    :raises DependentSpan: if p and q are (numerically) dependent.
    """
    p = np.asarray(p, dtype=complex)
    q = np.asarray(q, dtype=complex)
    minors = np.array([p[i] * q[j] - p[j] * q[i] for i, j in PLUCKER_PAIRS])
    size = np.linalg.norm(p) * np.linalg.norm(q)
    if not size or np.linalg.norm(minors) <= 1e-12 * size:
        raise exc.DependentSpan()
    return normalize_plucker(minors)


def plucker_quadric(plucker):
    p01, p02, p03, p12, p13, p23 = plucker
    return complex(p01 * p23 - p02 * p13 + p03 * p12)


def projective_distance(u, v):
    """Distance between points of projective space, 0 iff proportional.

    Equals sqrt(1 - |<u, v>|^2) for unit vectors, computed as the norm of
    the part of v orthogonal to u.
    """
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    u = u / np.linalg.norm(u)
    v = v / np.linalg.norm(v)
    return float(np.linalg.norm(v - u * np.vdot(u, v)))


class ProjectiveLine(object):
    """A line in P^3 with an orthonormal span and Plücker coordinates."""

    def __init__(self, span):
        span = np.array(span, dtype=complex)
        if span.shape != (2, 4):
            raise exc.CommandError(_("A line span is two points of C^4"))
        singular = np.linalg.svd(span, compute_uv=False)
        if singular[0] == 0 or singular[1] <= 1e-12 * singular[0]:
            raise exc.DependentSpan()
        self.plucker = plucker_of_span(span[0], span[1])
        basis = np.linalg.qr(span.T)[0].T
        basis.flags.writeable = False
        self.plucker.flags.writeable = False
        self.span = basis

    @classmethod
    def from_chart(cls, chart):
        p0, p1 = chart.points()
        return cls([p0[0], p1[0]])

    def __repr__(self):
        return '<ProjectiveLine %s>' % self.sort_key()

    def distance(self, other):
        return projective_distance(self.plucker, other.plucker)

    def permuted_coordinates(self, images):
        """Line whose span columns are the given columns of this span."""
        return ProjectiveLine(self.span[:, list(images)])

    def best_chart(self):
        """Chart whose free pair carries the largest Plücker entry."""
        index = int(np.argmax(np.abs(self.plucker)))
        free = PLUCKER_PAIRS[index]
        dependent = tuple(sorted(set(range(4)) - set(free)))
        square = self.span[:, list(free)]
        if abs(np.linalg.det(square)) <= 1e-12:
            raise exc.NoChartContainsLine()
        span = np.linalg.solve(square, self.span)
        i, j = dependent
        return LineChart(dependent, free,
                         (span[0, i], span[1, i], span[0, j], span[1, j]))

    def residual(self, surface):
        """Largest coefficient of F restricted to the orthonormal span."""
        return float(np.abs(binary_cubic(surface, self.span[0],
                                          self.span[1])).max())

    def sort_key(self):
        return tuple((round(float(z.real), 8) + 0.0,
                      round(float(z.imag), 8) + 0.0) for z in self.plucker)

    def to_dict(self, residual=None):
        data = {'span': [[_json_complex(z) for z in row]
                         for row in self.span],
                'plucker': [_json_complex(z) for z in self.plucker]}
        if residual is not None:
            data['residual'] = _json_float(residual)
        return data

    @classmethod
    def from_dict(cls, data):
        try:
            span = [[complex(re, im) for re, im in row]
                    for row in data['span']]
        except (KeyError, TypeError, ValueError):
            raise exc.CommandError(_("Malformed line: %r") % (data,))
        return cls(span)


class LineFinderReport(object):
    """Lines found on a surface plus the Newton bookkeeping."""

    def __init__(self, surface, lines, residuals, simple, stats, config):
        self.surface = surface
        self.lines = lines
        self.residuals = residuals
        self.simple = simple
        self.stats = stats
        self.config = config

    @property
    def seed(self):
        return self.config.seed

    def __len__(self):
        return len(self.lines)

    def to_dict(self):
        # output is identical for any thread count
        config = self.config.to_dict()
        config.pop('workers')
        return {
            'surface': self.surface.to_dict(),
            'seed': self.seed,
            'config': config,
            'stats': self.stats,
            'lines': [line.to_dict(residual)
                      for line, residual in zip(self.lines, self.residuals)],
        }


def _solve_batch(jac, residuals):
    try:
        return np.linalg.solve(jac, residuals[..., np.newaxis])[..., 0]
    except np.linalg.LinAlgError:
        return np.einsum('nij,nj->ni', np.linalg.pinv(jac), residuals)


def _newton(tensor, dependent, free, params, conf):
    """Batched Newton; returns (params, converged mask)."""
    params = params.copy()
    active = np.ones(len(params), dtype=bool)
    converged = np.zeros(len(params), dtype=bool)
    for _iteration in range(conf.newton_max_iter):
        idx = np.flatnonzero(active)
        if not idx.size:
            break
        residuals, jac = _chart_system(tensor, dependent, free, params[idx])
        with np.errstate(all='ignore'):
            step = _solve_batch(jac, residuals)
            params[idx] -= step
            size = np.linalg.norm(step, axis=1)
            norm = np.linalg.norm(params[idx], axis=1)
        finite = np.isfinite(params[idx]).all(axis=1)
        bad = ~finite | (norm > DIVERGED)
        done = finite & (size < conf.tol_step * np.maximum(1.0, norm))
        converged[idx[done & ~bad]] = True
        active[idx[done | bad]] = False
    return params, converged


def _starts(seed, chart_index, conf):
    starts = np.empty((conf.newton_starts, 4), dtype=complex)
    for start in range(conf.newton_starts):
        rng = np.random.default_rng([seed, chart_index, start])
        radius = conf.start_radius * np.sqrt(rng.random(4))
        angle = 2 * np.pi * rng.random(4)
        starts[start] = radius * np.exp(1j * angle)
    return starts


def _search_chart(surface, chart_index, conf):
    dependent, free = CHARTS[chart_index]
    params, converged = _newton(surface.tensor, dependent, free,
                                _starts(conf.seed, chart_index, conf), conf)
    return [LineChart(dependent, free, p) for p in params[converged]]


def polish(surface, line, conf=None):
    """Re-run Newton on a line in its best chart."""
    conf = conf or run_config.DEFAULT
    chart = line.best_chart()
    params = chart.params[np.newaxis, :]
    for _iteration in range(conf.newton_max_iter):
        residuals, jac = _chart_system(surface.tensor, chart.dependent,
                                       chart.free, params)
        if np.abs(residuals).max() <= conf.tol_polish * surface.scale:
            break
        with np.errstate(all='ignore'):
            candidate = params - _solve_batch(jac, residuals)
        if not np.isfinite(candidate).all():
            break
        params = candidate
    return ProjectiveLine.from_chart(chart.with_params(params[0]))


def repolish(surface, line, conf=None):
    """The better of ``line`` and its polished version.

    Lines already within ``tol_polish`` are returned as they are.
    """
    conf = conf or run_config.DEFAULT
    residual = line.residual(surface)
    if residual <= conf.tol_polish * surface.scale:
        return line
    better = polish(surface, line, conf)
    if better.residual(surface) <= residual:
        return better
    LOG.warning(_LW("Re-polishing did not improve line %s"), line.sort_key())
    return line


def is_simple_zero(surface, line, tol=None):
    """True iff the chart Jacobian at the line is well conditioned."""
    tol = run_config.DEFAULT.tol_simple if tol is None else tol
    singular = np.linalg.svd(chart_jacobian(surface, line.best_chart()),
                             compute_uv=False)
    return bool(singular[0] > 0 and singular[-1] > tol * singular[0])


def find_lines(surface, seed=None, conf=None):
    """Find the lines on V(F) by multistart Newton over all six charts.

    Charts are searched in waves of ``conf.workers`` threads and merged in
    chart order, so the result only depends on (F, seed, conf).

    :raises DegenerateSurface: if the count is not 27 or a zero is not
        simple.
    """
    conf = conf or run_config.DEFAULT
    if seed is not None:
        conf = conf.replace(seed=seed)
    if surface.is_zero():
        raise exc.DegenerateSurface(reason=_("the zero polynomial"))

    tol_residual = conf.tol_residual * surface.scale
    lines = []
    stats = {'charts': 0, 'starts': 0, 'converged': 0, 'duplicates': 0,
             'rejected': 0}
    with futures.ThreadPoolExecutor(max_workers=conf.workers) as pool:
        for wave in range(0, len(CHARTS), conf.workers):
            indices = range(wave, min(wave + conf.workers, len(CHARTS)))
            results = list(pool.map(
                lambda i: _search_chart(surface, i, conf), indices))
            for chart_index, charts in zip(indices, results):
                _merge(surface, charts, lines, stats, tol_residual, conf)
                stats['charts'] += 1
                stats['starts'] += conf.newton_starts
                LOG.debug("Chart %d: %d distinct line(s) so far",
                          chart_index, len(lines))
                if len(lines) >= EXPECTED_LINES:
                    break
            if len(lines) >= EXPECTED_LINES:
                break

    polished = [repolish(surface, line, conf) for line in lines]
    polished.sort(key=lambda line: line.sort_key())
    residuals = [line.residual(surface) for line in polished]
    simple = [is_simple_zero(surface, line, conf.tol_simple)
              for line in polished]
    stats['distinct'] = len(polished)
    LOG.info("Found %(count)d line(s) with %(conv)d converged starts",
             {'count': len(polished), 'conv': stats['converged']})

    report = LineFinderReport(surface, polished, residuals, simple, stats,
                              conf)
    if len(polished) != EXPECTED_LINES:
        raise exc.DegenerateSurface(
            reason=_("found %(count)d lines instead of %(expected)d")
            % {'count': len(polished), 'expected': EXPECTED_LINES})
    if not all(simple):
        raise exc.DegenerateSurface(
            reason=_("%d line(s) are not simple zeros")
            % simple.count(False))
    return report


def _merge(surface, charts, lines, stats, tol_residual, conf):
    for chart in charts:
        stats['converged'] += 1
        try:
            line = ProjectiveLine.from_chart(chart)
        except exc.DependentSpan:
            stats['rejected'] += 1
            continue
        if line.residual(surface) > tol_residual:
            stats['rejected'] += 1
            continue
        if any(line.distance(known) < conf.tol_dedupe for known in lines):
            stats['duplicates'] += 1
            continue
        lines.append(line)


# Rows of the classical table: coordinate templates over w and z, with
# '-' for -1, 'Z' for zeta and 'Y' for zeta^-1.
FERMAT_TEMPLATES = (
    # orbit of twelve with transposition stabilizers
    'w -w z Zz', 'w -w z Yz', 'w Zw z -z', 'w Yw z -z',
    'w z Zw -z', 'w z Yw -z', 'w z -w Zz', 'w z -w Yz',
    'w z -z Zw', 'w z -z Yw', 'w z Zz -w', 'w z Yz -w',
    # orbit of twelve with double transposition stabilizers
    'w Zw z Zz', 'w Zw z Yz', 'w Yw z Zz', 'w Yw z Yz',
    'w z Zw Zz', 'w z Zw Yz', 'w z Yw Zz', 'w z Yw Yz',
    'w z Zz Zw', 'w z Yz Zw', 'w z Zz Yw', 'w z Yz Yw',
    # the three real lines
    'w -w z -z', 'w z -w -z', 'w z -z -w',
)

_FACTORS = {'': 1, '-': -1, 'Z': ZETA, 'Y': 1 / ZETA}


def template_line(template):
    """Line spanned by the w- and z-parts of a template like 'w -w z Zz'."""
    span = np.zeros((2, 4), dtype=complex)
    for position, token in enumerate(template.split()):
        row = 0 if token[-1] == 'w' else 1
        span[row, position] = _FACTORS[token[:-1]]
    return ProjectiveLine(span)


def fermat_lines_exact():
    """The 27 Fermat lines from their closed form, in table order."""
    return [template_line(t) for t in FERMAT_TEMPLATES]


def random_symmetric_cubic(seed, conf=None):
    """Sample symmetric cubics until one has 27 simple lines.

    :raises BudgetExhausted: after ``conf.retry_budget`` attempts.
    """
    return random_symmetric_lines(seed, conf)[0]


def random_symmetric_lines(seed, conf=None):
    """Like :func:`random_symmetric_cubic`, with the accepting report."""
    conf = conf or run_config.DEFAULT
    rng = np.random.default_rng(seed)
    for attempt in range(conf.retry_budget):
        coeffs = rng.standard_normal(3)
        surface = symmetric_cubic(*coeffs, name='random-%d' % seed)
        try:
            report = find_lines(surface, seed=seed, conf=conf)
        except exc.DegenerateSurface as e:
            LOG.info("Resampling symmetric cubic (attempt %(n)d): %(err)s",
                     {'n': attempt + 1, 'err': e})
            continue
        return surface, report
    raise exc.BudgetExhausted(attempts=conf.retry_budget)
