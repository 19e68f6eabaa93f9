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
Equivariant counts of the lines on a symmetric cubic surface.

The lines are decomposed into orbits under a permutation group of the
coordinates; the Burnside element sum [G/G_x] over the orbits is the
equivariant Euler number.
"""

import logging

import numpy as np

from cubicorbits import burnside
from cubicorbits.common import config as run_config
from cubicorbits import exc
from cubicorbits import geometry
from cubicorbits import groups


LOG = logging.getLogger(__name__)

# The answer for the full symmetric group on any smooth symmetric cubic.
S4_ANSWER = '[S4/C2o] + [S4/C2e] + [S4/D8]'


def act_on_line(g, line):
    """Image of a line under the coordinate permutation g.

    (g.x)[g(i)] = x[i], so column m of the new span is column g^-1(m).
    """
    return line.permuted_coordinates(g.inverse().images)


def line_equality(tol):
    def eq(a, b):
        return a.distance(b) < tol
    return eq


def _action(g, line):
    return act_on_line(g, line)


class Orbit(object):
    def __init__(self, members, stabilizer, stabilizer_class):
        self.members = members
        self.stabilizer = stabilizer
        self.stabilizer_class = stabilizer_class

    @property
    def representative(self):
        return self.members[0]

    @property
    def size(self):
        return len(self.members)

    def to_dict(self, label=None):
        return {'stabilizer': label or self.stabilizer_class.label,
                'size': self.size,
                'members': list(self.members)}


class OrbitDecomposition(object):
    """Orbits of a line set under a group, and the resulting element."""

    def __init__(self, lattice, lines, orbits):
        self.lattice = lattice
        self.lines = lines
        self.orbits = orbits
        coeffs = [0] * len(lattice.classes)
        for orbit in orbits:
            coeffs[lattice.index_of(orbit.stabilizer_class)] += 1
        self.euler_number = burnside.BurnsideElement(lattice, coeffs)

    @property
    def group(self):
        return self.lattice.name

    def to_dict(self, coarse=False):
        orbits = []
        for orbit in self.orbits:
            label = None
            if coarse:
                label = groups.coarse_label(self.lattice,
                                           orbit.stabilizer_class)
            orbits.append(orbit.to_dict(label))
        name = self.group
        if coarse:
            name = groups.coarse_group_name(name)
        return {'group': name,
                'orbits': orbits,
                'euler_number': self.euler_number.to_bracket(coarse=coarse)}


def euler_number(lines, group='S4', tol=None):
    """Orbit decomposition of ``lines`` under ``group``.

    :param group: class name, :class:`groups.Subgroup` or lattice.
    :raises PointsNotClosed: if the lines are not closed under the group.
    """
    tol = run_config.DEFAULT.tol_match if tol is None else tol
    lattice = groups.as_lattice(group)
    eq = line_equality(tol)
    lines = list(lines)
    blocks = groups.orbits(_action, lines, eq, group=lattice.group)
    orbits = []
    for block in blocks:
        stab = groups.stabilizer(_action, lines[block[0]], eq,
                                 group=lattice.group)
        if len(block) * len(stab) != lattice.order:
            raise exc.PointsNotClosed(index=block[0],
                                      element=str(lattice.group))
        orbits.append(Orbit(block, stab, lattice.class_of(stab)))
    orbits.sort(key=lambda o: (lattice.index_of(o.stabilizer_class),
                               o.members[0]))
    result = OrbitDecomposition(lattice, lines, orbits)
    LOG.debug("Lines under %(group)s: %(element)s",
              {'group': lattice.name, 'element': result.euler_number})
    return result


def line_character(lines, group='S4', tol=None):
    """Permutation character of the line set: fixed lines per class."""
    tol = run_config.DEFAULT.tol_match if tol is None else tol
    lattice = groups.as_lattice(group)
    values = []
    for element_class in lattice.element_classes:
        g = element_class.representative
        values.append(sum(1 for line in lines
                          if act_on_line(g, line).distance(line) < tol))
    return burnside.ClassFunction(lattice, values)


class Table1Row(object):
    def __init__(self, name, direct, restricted):
        self.name = name
        self.direct = direct
        self.restricted = restricted

    @property
    def agrees(self):
        return self.direct.euler_number == self.restricted

    def to_dict(self, coarse=False):
        return {'group': self.name,
                'direct': self.direct.euler_number.to_bracket(coarse=coarse),
                'restricted': self.restricted.to_bracket(coarse=coarse),
                'agrees': self.agrees}


def table1(lines, tol=None):
    """Orbit decompositions for all eleven subgroup classes of S4.

    Each row is computed directly and by restricting the S4 element.

    :raises Mismatch: if the two computations of a row disagree.
    """
    full = euler_number(lines, 'S4', tol)
    rows = []
    for cls in groups.lattice_for('S4').classes:
        direct = euler_number(lines, cls.name, tol)
        restricted = burnside.restrict(full.euler_number, cls.name)
        row = Table1Row(cls.name, direct, restricted)
        if not row.agrees:
            raise exc.Mismatch(group=cls.name,
                               direct=direct.euler_number,
                               restricted=restricted)
        rows.append(row)
    return rows


class ConservationResult(object):
    def __init__(self, first, second):
        self.first = first
        self.second = second

    @property
    def equal(self):
        return self.first.euler_number == self.second.euler_number

    def __bool__(self):
        return self.equal

    __nonzero__ = __bool__


def verify_conservation(first, second, group='S4', conf=None):
    """Compare the equivariant line counts of two symmetric surfaces."""
    conf = conf or run_config.DEFAULT
    decompositions = []
    for surface in (first, second):
        report = geometry.find_lines(surface, conf=conf)
        decompositions.append(euler_number(report.lines, group,
                                           conf.tol_match))
    return ConservationResult(*decompositions)


def trial_seeds(seed, trials):
    """Independent integer seeds derived from one master seed."""
    children = np.random.SeedSequence(seed).spawn(trials)
    return [int(child.generate_state(1)[0]) for child in children]


class Trial(object):
    def __init__(self, index, seed, surface, decomposition, expected):
        self.index = index
        self.seed = seed
        self.surface = surface
        self.decomposition = decomposition
        self.expected = expected

    @property
    def passed(self):
        return self.decomposition.euler_number == self.expected


def conservation_trials(trials, seed, conf=None, expected=None):
    """Equivariant counts for ``trials`` random symmetric cubics."""
    conf = conf or run_config.DEFAULT
    expected = expected or burnside.parse(S4_ANSWER)
    results = []
    for index, trial_seed in enumerate(trial_seeds(seed, trials)):
        surface, report = geometry.random_symmetric_lines(trial_seed, conf)
        decomposition = euler_number(report.lines, expected.lattice,
                                     conf.tol_match)
        results.append(Trial(index, trial_seed, surface, decomposition,
                             expected))
    return results
