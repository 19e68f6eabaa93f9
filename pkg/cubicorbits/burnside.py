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
Burnside ring arithmetic.

An element is an integer combination of transitive G-sets [G/H], one basis
element per conjugacy class of subgroups.  Products and restrictions are
computed on actual coset spaces; the table of marks is kept as the check.
"""

import functools
import logging
import numbers
import re

import numpy as np

from cubicorbits.common.i18n import _
from cubicorbits import exc
from cubicorbits import groups


LOG = logging.getLogger(__name__)

_TERM_RE = re.compile(r'^(-?\d*)\s*\*?\s*\[([^/\]]+)/([^\]]+)\]$')


def same_group(x, y):
    """True iff x and y live over the same subgroup of S4."""
    return x.lattice is y.lattice or x.lattice.group == y.lattice.group


class BurnsideElement(object):
    """Integer vector over the subgroup classes of a lattice."""

    def __init__(self, lattice, coeffs):
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != len(lattice.classes):
            raise ValueError(_("Expected %(expected)d coefficients, got "
                               "%(got)d") % {'expected': len(lattice.classes),
                                             'got': len(coeffs)})
        self.lattice = lattice
        self.coeffs = coeffs

    @property
    def group(self):
        return self.lattice.name

    def _check(self, other):
        if not isinstance(other, BurnsideElement):
            raise TypeError(_("Not a Burnside element: %r") % other)
        if not same_group(self, other):
            raise exc.GroupMismatch(left=self.group, right=other.group)

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, -other)

    def __neg__(self):
        return scale(self, -1)

    def __mul__(self, other):
        if isinstance(other, numbers.Integral):
            return scale(self, other)
        return multiply(self, other)

    def __rmul__(self, other):
        return scale(self, other)

    def __eq__(self, other):
        return (isinstance(other, BurnsideElement) and
                same_group(self, other) and self.coeffs == other.coeffs)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.group, self.coeffs))

    def coefficient(self, label):
        return self.coeffs[self.lattice.index_of(label)]

    def terms(self):
        """Nonzero (SubgroupClass, coefficient) pairs in class order."""
        return [(c, k) for c, k in zip(self.lattice.classes, self.coeffs)
                if k]

    def is_nonnegative(self):
        return all(c >= 0 for c in self.coeffs)

    @property
    def cardinality(self):
        """Size of the G-set, i.e. the character value at e."""
        return sum(k * self.lattice.order // c.order
                   for c, k in self.terms())

    def to_bracket(self, coarse=False):
        """Render as ``k[G/H] + ...``.

        With ``coarse`` the coarse notation is used: order-two classes by
        parity only, every Klein four-group as K4.
        """
        lattice = self.lattice
        if coarse:
            top = groups.coarse_group_name(lattice.name)
            merged = []
            for cls, k in self.terms():
                label = groups.coarse_label(lattice, cls)
                for entry in merged:
                    if entry[0] == label:
                        entry[1] += k
                        break
                else:
                    merged.append([label, k])
        else:
            top = lattice.name
            merged = [[cls.label, k] for cls, k in self.terms()]
        parts = []
        for label, k in merged:
            if not k:
                continue
            term = '[%s/%s]' % (top, label)
            prefix = '' if k == 1 else ('-' if k == -1 else str(k))
            parts.append(prefix + term)
        if not parts:
            return '0'
        text = parts[0]
        for part in parts[1:]:
            if part.startswith('-'):
                text += ' - ' + part[1:]
            else:
                text += ' + ' + part
        return text

    def __str__(self):
        return self.to_bracket()

    def __repr__(self):
        return '<BurnsideElement %s>' % self

    def to_dict(self):
        return dict((c.label, k) for c, k in self.terms())


class ClassFunction(object):
    """Integer values on the element conjugacy classes of a group."""

    def __init__(self, lattice, values):
        values = tuple(int(v) for v in values)
        if len(values) != len(lattice.element_classes):
            raise exc.CommandError(
                _("A class function of %(group)s takes %(expected)d values, "
                  "got %(got)d") % {'group': lattice.name,
                                    'expected': len(lattice.element_classes),
                                    'got': len(values)})
        self.lattice = lattice
        self.values = values

    @property
    def labels(self):
        return [c.label for c in self.lattice.element_classes]

    def __getitem__(self, index):
        return self.values[index]

    def __eq__(self, other):
        return (isinstance(other, ClassFunction) and
                same_group(self, other) and self.values == other.values)

    def __ne__(self, other):
        return not self == other

    def __str__(self):
        return '(%s)' % ', '.join(str(v) for v in self.values)

    def to_dict(self):
        return dict(zip(self.labels, self.values))


class CharacterSolutions(object):
    """All nonnegative Burnside elements realizing a character."""

    def __init__(self, character, solutions):
        self.character = character
        self.solutions = solutions

    @property
    def unique(self):
        return len(self.solutions) == 1

    def __len__(self):
        return len(self.solutions)

    def __iter__(self):
        return iter(self.solutions)


def zero(group='S4'):
    lattice = groups.as_lattice(group)
    return BurnsideElement(lattice, [0] * len(lattice.classes))


def one(group='S4'):
    lattice = groups.as_lattice(group)
    return transfer(lattice.top, lattice)


def transfer(subgroup, group='S4'):
    """The basis element [G/H], i.e. the transfer of 1 from H to G.

    :param subgroup: a class label, :class:`groups.SubgroupClass` or a
        :class:`groups.Subgroup` of the ambient group.
    """
    lattice = groups.as_lattice(group)
    if isinstance(subgroup, groups.Subgroup):
        cls = lattice.class_of(subgroup)
    elif isinstance(subgroup, groups.SubgroupClass):
        cls = subgroup
    else:
        cls = lattice.class_named(subgroup)
    coeffs = [0] * len(lattice.classes)
    coeffs[lattice.index_of(cls)] = 1
    return BurnsideElement(lattice, coeffs)


def induce(x, group='S4'):
    """Transfer an H-set to G: [H/K] becomes [G/K].

    :raises NotASubgroup: unless x's group lies inside ``group``.
    """
    target = groups.as_lattice(group)
    if not x.lattice.group.is_subgroup_of(target.group):
        raise exc.NotASubgroup(subgroup=x.group, group=target.name)
    coeffs = [0] * len(target.classes)
    for cls, count in zip(x.lattice.classes, x.coeffs):
        if count:
            k = target.class_of(cls.representative)
            coeffs[target.index_of(k)] += count
    return BurnsideElement(target, coeffs)


def add(x, y):
    x._check(y)
    return BurnsideElement(x.lattice,
                           [a + b for a, b in zip(x.coeffs, y.coeffs)])


def scale(x, k):
    return BurnsideElement(x.lattice, [k * a for a in x.coeffs])


def marks(x):
    """Mark vector: number of H-fixed points for every class H."""
    table = x.lattice.table_of_marks().marks
    return table.dot(np.array(x.coeffs, dtype=np.int64))


@functools.lru_cache(maxsize=None)
def _basis_product(lattice, i, j):
    a = lattice.classes[i].representative
    b = lattice.classes[j].representative
    coeffs = [0] * len(lattice.classes)
    # Orbits of A on G/B are the double cosets AgB.
    for block in _orbit_reps(a, groups.coset_space(lattice.group, b)):
        g = min(block)
        stab = a.intersection(b.conjugate(g))
        coeffs[lattice.index_of(lattice.class_of(stab))] += 1
    return tuple(coeffs)


def _orbit_reps(acting, cosets):
    """Cosets grouped into orbits under left multiplication."""
    lookup = dict((g, coset) for coset in cosets for g in coset)
    remaining = set(cosets)
    result = []
    for coset in cosets:
        if coset not in remaining:
            continue
        g = min(coset)
        orbit = set(lookup[h * g] for h in acting)
        remaining -= orbit
        result.append(coset)
    return result


def multiply(x, y):
    """Product of G-sets, bilinear over double-coset decompositions."""
    x._check(y)
    lattice = x.lattice
    total = [0] * len(lattice.classes)
    for i, a in enumerate(x.coeffs):
        if not a:
            continue
        for j, b in enumerate(y.coeffs):
            if not b:
                continue
            for k, c in enumerate(_basis_product(lattice, i, j)):
                total[k] += a * b * c
    return BurnsideElement(lattice, total)


@functools.lru_cache(maxsize=None)
def _basis_restriction(lattice, target, j):
    k = lattice.classes[j].representative
    h = target.group
    coeffs = [0] * len(target.classes)
    for coset in _orbit_reps(h, groups.coset_space(lattice.group, k)):
        g = min(coset)
        stab = h.intersection(k.conjugate(g))
        coeffs[target.index_of(target.class_of(stab))] += 1
    return tuple(coeffs)


def restrict(x, subgroup):
    """View a G-set as an H-set and decompose into H-orbits.

    :param subgroup: class name of a canonical representative, a
        :class:`groups.Subgroup` of x's group, or a lattice.
    :returns: element over the lattice of H.
    """
    target = groups.as_lattice(subgroup)
    if not target.group.is_subgroup_of(x.lattice.group):
        raise exc.NotASubgroup(subgroup=target.group, group=x.group)
    total = [0] * len(target.classes)
    for j, a in enumerate(x.coeffs):
        if not a:
            continue
        for k, c in enumerate(_basis_restriction(x.lattice, target, j)):
            total[k] += a * c
    return BurnsideElement(target, total)


def perm_character(x):
    """Fixed-point counts of every element class."""
    lattice = x.lattice
    mark_vector = marks(x)
    values = [mark_vector[lattice.index_of(lattice.class_of(c.cyclic))]
              for c in lattice.element_classes]
    return ClassFunction(lattice, values)


def solve_character(character, group=None):
    """Enumerate nonnegative G-sets whose permutation character is given.

    Classes are tried largest first; the count of [G/K] is bounded by the
    residual character divided by the fixed points of each element on G/K.

    :param character: :class:`ClassFunction` or a sequence of values in
        element class order.
    :raises NoSolution: when no nonnegative combination exists.
    """
    if not isinstance(character, ClassFunction):
        character = ClassFunction(groups.as_lattice(group or 'S4'),
                                  character)
    lattice = character.lattice
    table = lattice.table_of_marks().marks
    cyclic_rows = [lattice.index_of(lattice.class_of(c.cyclic))
                   for c in lattice.element_classes]
    # columns[k][c]: fixed points of element class c on G/K_k
    columns = [[int(table[row, k]) for row in cyclic_rows]
               for k in range(len(lattice.classes))]
    target = list(character.values)
    if target[0] < 0:
        raise exc.NoSolution(character=str(character))
    order = sorted(range(len(lattice.classes)),
                   key=lambda k: -lattice.classes[k].order)

    solutions = []
    coeffs = [0] * len(lattice.classes)

    def search(depth, residual):
        if depth == len(order):
            if not any(residual):
                solutions.append(BurnsideElement(lattice, coeffs))
            return
        k = order[depth]
        bound = min(residual[c] // m
                    for c, m in enumerate(columns[k]) if m > 0)
        for count in range(max(bound, -1), -1, -1):
            coeffs[k] = count
            search(depth + 1, [r - count * m
                               for r, m in zip(residual, columns[k])])
        coeffs[k] = 0

    search(0, target)
    solutions.sort(key=lambda s: s.coeffs)
    LOG.debug("Character %s of %s: %d nonnegative solution(s)", character,
              lattice.name, len(solutions))
    if not solutions:
        raise exc.NoSolution(character=str(character))
    return CharacterSolutions(character, solutions)


def from_gset(group, points, action, eq=None):
    """Brute-force element of a finite G-set given by its points."""
    lattice = groups.as_lattice(group)
    coeffs = [0] * len(lattice.classes)
    for block in groups.orbits(action, points, eq, group=lattice.group):
        stab = groups.stabilizer(action, points[block[0]], eq,
                                 group=lattice.group)
        coeffs[lattice.index_of(lattice.class_of(stab))] += 1
    return BurnsideElement(lattice, coeffs)


def parse(text, group=None):
    """Parse bracket notation such as ``[S4/C2o] + 2[S4/D8]``.

    Labels are matched exactly first, then by alias, then by coarse name
    when that names a single class.  ``0`` is the zero element.
    """
    source = text
    text = text.replace('Δ', 'D').replace('−', '-').strip()
    if not text:
        raise exc.ParseError(text=source)
    lattice = groups.as_lattice(group) if group is not None else None
    if text == '0':
        if lattice is None:
            raise exc.ParseError(text=source)
        return zero(lattice)

    pieces = re.split(r'(?<=\])\s*(?=[+-])', text)
    terms = []
    for piece in pieces:
        piece = piece.strip()
        sign = 1
        if piece.startswith('+'):
            piece = piece[1:].strip()
        elif piece.startswith('-') and not piece[1:2].isdigit():
            sign = -1
            piece = piece[1:].strip()
        match = _TERM_RE.match(piece)
        if not match:
            raise exc.ParseError(text=source)
        count, ambient, label = match.groups()
        if count in ('', '-'):
            count = count + '1'
        terms.append((sign * int(count), ambient.strip(), label.strip()))

    for _count, ambient, _label in terms:
        if lattice is None:
            try:
                lattice = groups.lattice_for(ambient)
            except exc.UnknownName:
                raise exc.ParseError(text=source)
        if ambient not in (lattice.name,
                           groups.coarse_group_name(lattice.name)):
            raise exc.GroupMismatch(left=lattice.name, right=ambient)

    coeffs = [0] * len(lattice.classes)
    for count, _ambient, label in terms:
        if label == groups.coarse_group_name(lattice.name):
            cls = lattice.top
        else:
            try:
                cls = lattice.class_named(label)
            except exc.UnknownName:
                raise exc.ParseError(text=source)
        coeffs[lattice.index_of(cls)] += count
    return BurnsideElement(lattice, coeffs)
