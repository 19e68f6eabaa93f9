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
Small permutation groups: S4 and its subgroups.

Permutations act on coordinate indices 0..n-1 and print in the usual
1-based cycle notation, so ``(1 2)`` swaps the first two coordinates.
"""

import functools
import itertools
import logging
import operator
import re

import numpy as np

from cubicorbits.common.i18n import _
from cubicorbits import exc


LOG = logging.getLogger(__name__)

DEGREE = 4

# Tie-break for subgroup classes of equal order.
CLASS_NAMES = ('e', 'C2o', 'C2e', 'C3', 'K4norm', 'K4', 'C4', 'S3', 'D8',
               'A4', 'S4')

CANONICAL_GENERATORS = {
    'e': (),
    'C2o': ('(1 2)',),
    'C2e': ('(1 2)(3 4)',),
    'C3': ('(1 2 3)',),
    'C4': ('(1 2 3 4)',),
    'K4': ('(1 2)', '(3 4)'),
    'K4norm': ('(1 2)(3 4)', '(1 3)(2 4)'),
    'S3': ('(1 2)', '(1 2 3)'),
    'D8': ('(1 3)(2 4)', '(1 2)', '(3 4)'),
    'A4': ('(1 2 3)', '(1 2)(3 4)'),
    'S4': ('(1 2)', '(1 2 3 4)'),
}

# Labels of order-two subgroups inside the canonical representatives where
# one S4 class splits into several classes of the smaller group.  Klein
# groups use left, right and diagonal; the centre of D8 is C2c.
SUBCLASS_LABELS = {
    'K4': {'(1 2)': 'C2L', '(3 4)': 'C2R', '(1 2)(3 4)': 'C2D'},
    'K4norm': {'(1 2)(3 4)': 'C2L', '(1 3)(2 4)': 'C2R',
               '(1 4)(2 3)': 'C2D'},
    'D8': {'(1 2)(3 4)': 'C2c'},
}

LABEL_ALIASES = {
    'C2Δ': 'C2D',
    'C2Delta': 'C2D',
}

_CYCLE_RE = re.compile(r'\(([^()]*)\)')


class Permutation(object):
    """A bijection of {0, ..., n-1}, stored as its tuple of images."""

    __slots__ = ('images',)

    def __init__(self, images):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise exc.InvalidPermutation(degree=len(images) - 1,
                                         images=list(images))
        object.__setattr__(self, 'images', images)

    def __setattr__(self, name, value):
        raise AttributeError(_("Permutation is immutable"))

    @classmethod
    def identity(cls, degree=DEGREE):
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, *cycles, **kwargs):
        """Build a permutation from 1-based cycles.

        >>> str(Permutation.from_cycles((1, 2), (3, 4)))
        '(1 2)(3 4)'
        """
        degree = kwargs.pop('degree', DEGREE)
        images = list(range(degree))
        seen = set()
        for cycle in cycles:
            points = [int(p) - 1 for p in cycle]
            if (len(set(points)) != len(points) or seen.intersection(points)
                    or any(p < 0 or p >= degree for p in points)):
                raise exc.InvalidPermutation(degree=degree - 1,
                                             images=list(cycles))
            seen.update(points)
            for src, dst in zip(points, points[1:] + points[:1]):
                images[src] = dst
        return cls(images)

    def __call__(self, point):
        return self.images[point]

    def __mul__(self, other):
        return compose(self, other)

    def __invert__(self):
        return self.inverse()

    def __len__(self):
        return len(self.images)

    def __eq__(self, other):
        return (isinstance(other, Permutation) and
                self.images == other.images)

    def __ne__(self, other):
        return not self == other

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return hash(self.images)

    def inverse(self):
        inv = [0] * len(self.images)
        for src, dst in enumerate(self.images):
            inv[dst] = src
        return Permutation(inv)

    def is_identity(self):
        return all(i == p for i, p in enumerate(self.images))

    def cycles(self):
        """Non-trivial cycles, each starting at its smallest point."""
        seen = set()
        result = []
        for start in range(len(self.images)):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            point = self.images[start]
            while point != start:
                cycle.append(point)
                seen.add(point)
                point = self.images[point]
            if len(cycle) > 1:
                result.append(tuple(cycle))
        return result

    def cycle_type(self):
        """Sorted cycle lengths including fixed points, e.g. (1, 1, 2)."""
        lengths = [len(c) for c in self.cycles()]
        lengths.extend([1] * self.fixed_point_count())
        return tuple(sorted(lengths))

    def fixed_point_count(self):
        return sum(1 for i, p in enumerate(self.images) if i == p)

    def order(self):
        result = 1
        for cycle in self.cycles():
            result = result * len(cycle) // _gcd(result, len(cycle))
        return result

    def __str__(self):
        cycles = self.cycles()
        if not cycles:
            return 'e'
        return ''.join('(%s)' % ' '.join(str(p + 1) for p in c)
                       for c in cycles)

    def __repr__(self):
        return '<Permutation %s>' % self


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def compose(a, b):
    """Return a∘b, the permutation i -> a(b(i))."""
    if len(a) != len(b):
        raise exc.InvalidPermutation(degree=len(a) - 1,
                                     images=list(b.images))
    return Permutation(a.images[i] for i in b.images)


def parse_permutation(text, degree=DEGREE):
    """Parse cycle notation such as ``(1 2)(3 4)`` or ``(1,2,3)``.

    ``e``, ``id`` and ``()`` denote the identity.
    """
    stripped = text.strip()
    if stripped in ('e', 'id', '()', ''):
        return Permutation.identity(degree)
    if _CYCLE_RE.sub('', stripped).strip():
        raise exc.ParseError(text=text)
    cycles = []
    for body in _CYCLE_RE.findall(stripped):
        try:
            cycles.append([int(p) for p in re.split(r'[\s,]+', body.strip())
                           if p])
        except ValueError:
            raise exc.ParseError(text=text)
    try:
        return Permutation.from_cycles(*cycles, degree=degree)
    except exc.InvalidPermutation:
        raise exc.ParseError(text=text)


class Subgroup(object):
    """A finite set of permutations closed under composition."""

    def __init__(self, elements):
        self.elements = frozenset(elements)
        if not self.elements:
            raise ValueError(_("A subgroup is never empty"))
        self.degree = len(next(iter(self.elements)))
        self._sorted = tuple(sorted(self.elements))

    @classmethod
    def generate(cls, generators, degree=DEGREE):
        """Closure of the generators under composition."""
        return cls(closure(generators, degree=degree))

    @classmethod
    def trivial(cls, degree=DEGREE):
        return cls([Permutation.identity(degree)])

    def __len__(self):
        return len(self.elements)

    order = property(__len__)

    def __iter__(self):
        return iter(self._sorted)

    def __contains__(self, g):
        return g in self.elements

    def __eq__(self, other):
        return isinstance(other, Subgroup) and self.elements == other.elements

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.elements)

    def __str__(self):
        return '{%s}' % ', '.join(str(g) for g in self._sorted)

    def __repr__(self):
        return '<Subgroup of order %d %s>' % (len(self), self)

    @property
    def identity(self):
        return Permutation.identity(self.degree)

    def is_subgroup_of(self, other):
        return self.elements <= other.elements

    def conjugate(self, g):
        """g H g⁻¹."""
        g_inv = g.inverse()
        return Subgroup(g * h * g_inv for h in self.elements)

    def intersection(self, other):
        return Subgroup(self.elements & other.elements)

    def is_normal_in(self, group):
        return all(self.conjugate(g) == self for g in group)

    def generators(self):
        """A short generating set, greedily chosen in sorted order."""
        gens = []
        span = Subgroup.trivial(self.degree)
        for g in self._sorted:
            if g not in span:
                gens.append(g)
                span = Subgroup.generate(gens, self.degree)
            if span == self:
                break
        return gens


def closure(generators, degree=DEGREE):
    elements = {Permutation.identity(degree)}
    frontier = list(elements)
    generators = list(generators)
    while frontier:
        new = []
        for a in generators:
            for b in frontier:
                c = a * b
                if c not in elements:
                    elements.add(c)
                    new.append(c)
        frontier = new
    return elements


@functools.lru_cache(maxsize=None)
def symmetric_group(degree=DEGREE):
    return Subgroup(Permutation(p)
                    for p in itertools.permutations(range(degree)))


def enumerate_subgroups(group):
    """Every subgroup of ``group`` exactly once.

    Starting from the trivial subgroup, each known subgroup is enlarged by
    one more element at a time until no new subgroup appears.
    """
    trivial = Subgroup.trivial(group.degree)
    found = {trivial}
    frontier = [trivial]
    while frontier:
        new = []
        for sub in frontier:
            for g in group:
                if g in sub:
                    continue
                bigger = Subgroup.generate(list(sub.generators()) + [g],
                                           group.degree)
                if bigger not in found:
                    found.add(bigger)
                    new.append(bigger)
        frontier = new
    return sorted(found, key=lambda s: (len(s), tuple(s)))


def classify_subgroup(subgroup):
    """Name of the S4 conjugacy class of ``subgroup``."""
    if subgroup.degree != DEGREE:
        raise exc.NotASubgroup(subgroup=subgroup, group='S4')
    order = len(subgroup)
    types = [g.cycle_type() for g in subgroup if not g.is_identity()]
    if order == 1:
        return 'e'
    if order == 2:
        return 'C2o' if types[0] == (1, 1, 2) else 'C2e'
    if order == 4:
        if (4,) in types:
            return 'C4'
        if subgroup.is_normal_in(symmetric_group()):
            return 'K4norm'
        return 'K4'
    names = {3: 'C3', 6: 'S3', 8: 'D8', 12: 'A4', 24: 'S4'}
    if order not in names:
        raise exc.NotASubgroup(subgroup=subgroup, group='S4')
    return names[order]


@functools.lru_cache(maxsize=None)
def canonical_subgroup(name):
    """The fixed representative of an S4 subgroup class."""
    name = LABEL_ALIASES.get(name, name)
    if name not in CANONICAL_GENERATORS:
        raise exc.UnknownName(name=name)
    gens = [parse_permutation(text) for text in CANONICAL_GENERATORS[name]]
    return Subgroup.generate(gens)


def coset_space(group, subgroup):
    """Left cosets gK as frozensets, ordered by their smallest element."""
    if not subgroup.is_subgroup_of(group):
        raise exc.NotASubgroup(subgroup=subgroup, group=group)
    cosets = set()
    for g in group:
        cosets.add(frozenset(g * k for k in subgroup))
    return sorted(cosets, key=min)


def stabilizer(action, x, eq=None, group=None):
    """The subgroup {g : eq(g·x, x)}; ``eq=None`` compares with ==."""
    group = group or symmetric_group()
    eq = eq or operator.eq
    return Subgroup(g for g in group if eq(action(g, x), x))


def orbits(action, points, eq=None, group=None):
    """Partition indices of ``points`` into orbits.

    With ``eq=None`` the points must be hashable and are matched exactly.

    :returns: list of sorted index lists, ordered by smallest member.
    :raises PointsNotClosed: if some g·x matches no listed point.
    """
    group = group or symmetric_group()
    points = list(points)
    find = _finder(points, eq)
    owner = [None] * len(points)
    blocks = []
    for start, x in enumerate(points):
        if owner[start] is not None:
            continue
        block = {start}
        for g in group:
            image = action(g, x)
            match = find(image)
            if match is None:
                raise exc.PointsNotClosed(index=start, element=str(g))
            block.add(match)
        for index in block:
            owner[index] = len(blocks)
        blocks.append(sorted(block))
    return blocks


def _finder(points, eq):
    if eq is None:
        index = {}
        for i, point in enumerate(points):
            index.setdefault(point, i)
        return index.get

    def find(image):
        for i, candidate in enumerate(points):
            if eq(image, candidate):
                return i
        return None
    return find


class SubgroupClass(object):
    """A conjugacy class of subgroups inside an ambient group."""

    def __init__(self, label, s4_name, representative, members):
        self.label = label
        self.name = s4_name
        self.representative = representative
        self.members = tuple(members)

    @property
    def order(self):
        return len(self.representative)

    def __contains__(self, subgroup):
        return subgroup in self.members

    def __str__(self):
        return self.label

    def __repr__(self):
        return '<SubgroupClass %s (%d conjugates)>' % (self.label,
                                                       len(self.members))


class ElementClass(object):
    """A conjugacy class of elements, with its cyclic subgroup."""

    def __init__(self, representative, members):
        self.representative = representative
        self.members = tuple(sorted(members))
        self.cyclic = Subgroup.generate([representative],
                                        degree=len(representative))

    @property
    def label(self):
        return str(self.representative)

    def __len__(self):
        return len(self.members)

    def __str__(self):
        return self.label


class TableOfMarks(object):
    """Fixed-point counts marks[H, K] = |(G/K)^H| over subgroup classes."""

    def __init__(self, classes, marks):
        self.classes = tuple(classes)
        self.marks = marks
        self.marks.flags.writeable = False
        self._index = dict((c.label, i) for i, c in enumerate(self.classes))

    def __getitem__(self, key):
        row, col = key
        return int(self.marks[self._position(row), self._position(col)])

    def _position(self, key):
        if isinstance(key, SubgroupClass):
            key = key.label
        if isinstance(key, int):
            return key
        return self._index[key]

    @property
    def labels(self):
        return [c.label for c in self.classes]


class SubgroupLattice(object):
    """Subgroups of a small permutation group, up to conjugacy.

    :param group: the ambient :class:`Subgroup`
    :param name: S4 class name used for the ambient group in brackets;
        defaults to its classification.
    """

    def __init__(self, group, name=None):
        self.group = group
        self.name = name or classify_subgroup(group)
        self.subgroups = enumerate_subgroups(group)
        self.classes = self._build_classes()
        self._class_index = dict((s, i) for i, c in enumerate(self.classes)
                                 for s in c.members)
        self._by_label = dict((c.label, c) for c in self.classes)
        self.element_classes = self._build_element_classes()
        self._marks = None
        LOG.debug("Lattice %s: %d subgroups in %d classes", self.name,
                  len(self.subgroups), len(self.classes))

    def __repr__(self):
        return '<SubgroupLattice %s>' % self.name

    @property
    def order(self):
        return len(self.group)

    def _build_classes(self):
        overrides = {}
        ranks = {}
        if (self.name in SUBCLASS_LABELS and
                self.group == canonical_subgroup(self.name)):
            for rank, (text, label) in enumerate(
                    SUBCLASS_LABELS[self.name].items()):
                cyclic = Subgroup.generate([parse_permutation(text)])
                overrides[cyclic] = label
                ranks[label] = rank

        seen = set()
        classes = []
        for sub in self.subgroups:
            if sub in seen:
                continue
            members = set(sub.conjugate(g) for g in self.group)
            seen.update(members)
            rep = min(members, key=lambda s: tuple(s))
            s4_name = classify_subgroup(rep)
            label = None
            for member in members:
                if member in overrides:
                    label = overrides[member]
            if rep == self.group:
                label = self.name
            classes.append([label or s4_name, s4_name, rep, members])
        # overridden labels keep their listed order, ahead of the rest
        classes.sort(key=lambda item: (len(item[2]),
                                       CLASS_NAMES.index(item[1]),
                                       ranks.get(item[0], len(ranks)),
                                       tuple(item[2])))

        counts = {}
        for entry in classes:
            counts[entry[0]] = counts.get(entry[0], 0) + 1
        suffix = {}
        for entry in classes:
            if counts[entry[0]] > 1:
                suffix[entry[0]] = suffix.get(entry[0], 0) + 1
                entry[0] = '%s.%d' % (entry[0], suffix[entry[0]])
        return [SubgroupClass(label, s4_name, rep,
                              sorted(members, key=lambda s: tuple(s)))
                for label, s4_name, rep, members in classes]

    def _build_element_classes(self):
        seen = set()
        result = []
        for g in self.group:
            if g in seen:
                continue
            members = set(x * g * x.inverse() for x in self.group)
            seen.update(members)
            result.append(ElementClass(min(members), members))
        result.sort(key=lambda c: (c.representative.order(),
                                   -c.representative.fixed_point_count(),
                                   c.representative.images))
        return result

    def class_of(self, subgroup):
        try:
            return self.classes[self._class_index[subgroup]]
        except KeyError:
            raise exc.NotASubgroup(subgroup=subgroup, group=self.name)

    def index_of(self, subgroup_class):
        if isinstance(subgroup_class, SubgroupClass):
            return self.classes.index(subgroup_class)
        return self.classes.index(self.class_named(subgroup_class))

    def class_named(self, label):
        """Look up a class by exact label, alias, or unique coarse name."""
        label = LABEL_ALIASES.get(label, label)
        if label in self._by_label:
            return self._by_label[label]
        coarse = [c for c in self.classes
                  if label in (c.name, coarse_label(self, c))]
        if len(coarse) == 1:
            return coarse[0]
        raise exc.UnknownName(name=label)

    @property
    def top(self):
        return self.classes[-1]

    def table_of_marks(self):
        """Brute-force table of marks, computed once per lattice."""
        if self._marks is None:
            size = len(self.classes)
            marks = np.zeros((size, size), dtype=np.int64)
            for col, k_class in enumerate(self.classes):
                cosets = coset_space(self.group, k_class.representative)
                reps = [min(coset) for coset in cosets]
                k_elements = k_class.representative.elements
                for row, h_class in enumerate(self.classes):
                    h_elements = h_class.representative.elements
                    marks[row, col] = sum(
                        1 for g in reps
                        if all(g.inverse() * h * g in k_elements
                               for h in h_elements))
            self._marks = TableOfMarks(self.classes, marks)
        return self._marks


def table_of_marks(group=None):
    return lattice_for(group or 'S4').table_of_marks()


def coarse_group_name(name):
    """Ambient name as printed in bracket notation by parity only."""
    return {'C2o': 'C2', 'C2e': 'C2', 'K4norm': 'K4'}.get(name, name)


def coarse_label(lattice, subgroup_class):
    """Coarse label: the ambient name on top, Klein groups as K4."""
    if subgroup_class.representative == lattice.group:
        return coarse_group_name(lattice.name)
    label = subgroup_class.label
    if label == 'C2c':
        return 'C2e'
    if subgroup_class.name in ('K4', 'K4norm'):
        return 'K4'
    return label


@functools.lru_cache(maxsize=None)
def lattice_for(name):
    """Cached lattice of a canonical S4 subgroup, by class name."""
    name = LABEL_ALIASES.get(name, name)
    return SubgroupLattice(canonical_subgroup(name), name)


@functools.lru_cache(maxsize=None)
def lattice_of(subgroup):
    """Lattice for an arbitrary subgroup, reusing canonical ones."""
    name = classify_subgroup(subgroup)
    if subgroup == canonical_subgroup(name):
        return lattice_for(name)
    return SubgroupLattice(subgroup, name)


def as_lattice(group):
    if isinstance(group, SubgroupLattice):
        return group
    if isinstance(group, Subgroup):
        return lattice_of(group)
    return lattice_for(group)
