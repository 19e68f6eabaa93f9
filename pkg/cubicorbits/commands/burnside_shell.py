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

from cubicorbits import burnside
from cubicorbits.commands import resource_fields as res_fields
from cubicorbits.common import cliutils
from cubicorbits.common.i18n import _
from cubicorbits.common import utils
from cubicorbits import equivariant
from cubicorbits import exc
from cubicorbits import geometry
from cubicorbits import groups


OPERATIONS = ('mul', 'res', 'tr', 'marks', 'character', 'solve-character')

# operation -> number of bracket-notation elements it takes
ARITY = {
    'mul': (2,),
    'res': (1,),
    'tr': (0, 1),
    'marks': (1,),
    'character': (1,),
    'solve-character': (0,),
}


def _elements(args):
    expected = ARITY[args.operation]
    if len(args.elements) not in expected:
        raise exc.CommandError(
            _("burnside %(op)s takes %(n)s element(s), got %(got)d")
            % {'op': args.operation,
               'n': ' or '.join(str(n) for n in expected),
               'got': len(args.elements)})
    group = args.source if args.operation == 'tr' else args.group
    return [burnside.parse(text, group) for text in args.elements]


def _require(value, option, operation):
    if not value:
        raise exc.CommandError(_("burnside %(op)s needs %(option)s")
                               % {'op': operation, 'option': option})


def _print_element(x, args):
    text = x.to_bracket(coarse=args.notation == 'coarse')
    if args.json:
        utils.write_json({'group': x.group, 'element': text,
                          'coefficients': x.to_dict()})
    else:
        print(text)


def _print_table(rows, resource, args, extra=None):
    if args.json:
        data = {'rows': rows}
        data.update(extra or {})
        utils.write_json(data)
        return
    cliutils.print_list(rows, list(resource.fields),
                        field_labels=list(resource.labels))
    for key, value in sorted((extra or {}).items()):
        print('%s: %s' % (key, value))


def _character_of_args(args):
    group = args.group or 'S4'
    if args.values and args.of_lines:
        raise exc.CommandError(_("Give either --values or --of-lines"))
    if args.values:
        values = utils.split_values(args.values, '--values')
        return burnside.ClassFunction(groups.as_lattice(group), values)
    _require(args.of_lines, '--values or --of-lines', args.operation)
    conf = utils.config_from_args(args)
    surface = geometry.builtin_surface(args.of_lines)
    report = geometry.find_lines(surface, conf=conf)
    return equivariant.line_character(report.lines, group, conf.tol_match)


@cliutils.arg('operation', metavar='<operation>', choices=OPERATIONS,
              help='One of: %s.' % ', '.join(OPERATIONS))
@cliutils.arg('elements', metavar='<element>', nargs='*',
              help='Burnside elements in bracket notation, e.g. '
                   '"[S4/C2o] + 2[S4/D8]".')
@cliutils.arg('--group', metavar='<class>',
              help='Ambient group for "0", --values, --of-lines and the '
                   'target of "tr". Default: taken from the element, or S4.')
@cliutils.arg('--to', metavar='<class>',
              help='Subgroup class to restrict to ("res").')
@cliutils.arg('--from', dest='source', metavar='<class>',
              help='Subgroup to transfer from ("tr"); without an element '
                   'this prints [G/H].')
@cliutils.arg('--values', metavar='<v1,v2,...>',
              help='Character values in element class order '
                   '("solve-character").')
@cliutils.arg('--of-lines', metavar='<surface>',
              choices=sorted(geometry.BUILTIN_SURFACES),
              help='Use the permutation character of the lines on a '
                   'built-in surface ("solve-character").')
@cliutils.arg('--notation', metavar='<coarse|exact>',
              choices=['coarse', 'exact'], default='exact',
              help='Bracket notation for results. Default: exact.')
@cliutils.arg('--json', dest='json', action='store_true', default=False,
              help='Print JSON.')
def do_burnside(args):
    """Arithmetic in the Burnside ring of a subgroup of S4.

    mul multiplies two elements, res restricts to --to, tr transfers from
    --from, marks prints the mark vector, character the permutation
    character, and solve-character lists every nonnegative G-set with a
    given character.
    """
    elements = _elements(args)
    op = args.operation

    if op == 'mul':
        _print_element(elements[0] * elements[1], args)
    elif op == 'res':
        _require(args.to, '--to', op)
        _print_element(burnside.restrict(elements[0], args.to), args)
    elif op == 'tr':
        _require(args.source, '--from', op)
        if elements:
            result = burnside.induce(elements[0], args.group or 'S4')
        else:
            result = burnside.transfer(args.source, args.group or 'S4')
        _print_element(result, args)
    elif op == 'marks':
        x = elements[0]
        rows = [{'class': cls.label, 'mark': int(m)}
                for cls, m in zip(x.lattice.classes, burnside.marks(x))]
        _print_table(rows, res_fields.MARKS_RESOURCE, args,
                     {'group': x.group})
    elif op == 'character':
        character = burnside.perm_character(elements[0])
        rows = [{'class': label, 'value': value}
                for label, value in zip(character.labels, character.values)]
        _print_table(rows, res_fields.CHARACTER_RESOURCE, args,
                     {'group': character.lattice.name})
    else:
        character = _character_of_args(args)
        solutions = burnside.solve_character(character)
        coarse = args.notation == 'coarse'
        rows = [{'index': i, 'solution': s.to_bracket(coarse=coarse)}
                for i, s in enumerate(solutions)]
        _print_table(rows, res_fields.SOLUTION_RESOURCE, args,
                     {'group': character.lattice.name,
                      'character': str(character),
                      'unique': solutions.unique})
