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
Exception definitions.

Every exception carries the process exit status the shell reports for it,
the way HTTP errors carry their status code.
"""

from cubicorbits.common.i18n import _


class CubicOrbitsException(Exception):
    """The base exception class for all exceptions this library raises."""
    exit_code = 1
    message = _("Unexpected error")

    def __init__(self, message=None, **kwargs):
        self.kwargs = kwargs
        message = message or self.message
        if kwargs:
            message = message % kwargs
        self.message = message
        super(CubicOrbitsException, self).__init__(message)


class CommandError(CubicOrbitsException):
    """Error in CLI tool."""
    message = _("Invalid command")


class UnknownName(CubicOrbitsException):
    """A surface, group or subgroup class name is not known."""
    message = _("Unknown name: %(name)s")


class ParseError(CubicOrbitsException):
    """Text could not be parsed as a permutation or Burnside element."""
    message = _("Could not parse %(text)r")


class InvalidPermutation(CubicOrbitsException):
    message = _("Not a permutation of {0, ..., %(degree)d}: %(images)s")


class NotASubgroup(CubicOrbitsException):
    message = _("%(subgroup)s is not a subgroup of %(group)s")


class GroupMismatch(CubicOrbitsException):
    """Burnside ring arithmetic across different ambient groups."""
    message = _("Ambient groups differ: %(left)s and %(right)s")


class NoSolution(CubicOrbitsException):
    message = _("No G-set realizes the character %(character)s")


class SurfaceNotReal(CubicOrbitsException):
    message = _("surface not real")


class DependentSpan(CubicOrbitsException):
    message = _("The spanning points of the line are linearly dependent")


class NoChartContainsLine(CubicOrbitsException):
    message = _("No Grassmannian chart contains the line")


class NotRealLine(CubicOrbitsException):
    message = _("The line is not defined over the reals")


class DegenerateSurface(CubicOrbitsException):
    """The surface is singular or numerically ill-conditioned."""
    exit_code = 2
    message = _("Degenerate surface: %(reason)s")


class BudgetExhausted(DegenerateSurface):
    message = _("No smooth surface found after %(attempts)d attempts")


class PointsNotClosed(CubicOrbitsException):
    """The point set is not closed under the group action."""
    exit_code = 3
    message = _("Point %(index)d is mapped outside the set by %(element)s")


class Mismatch(CubicOrbitsException):
    """Direct and restricted orbit decompositions disagree."""
    exit_code = 4
    message = _("Row %(group)s: direct %(direct)s != restricted "
                "%(restricted)s")


class SegreViolation(CubicOrbitsException):
    exit_code = 5
    message = _("Segre identity fails: %(hyperbolic)d hyperbolic, "
                "%(elliptic)d elliptic")


class DegenerateInvolution(CubicOrbitsException):
    """The tangent-plane involution has a double fixed point."""
    exit_code = 5
    message = _("Involution discriminant %(discriminant)g is numerically "
                "zero")


class ConservationMismatch(CubicOrbitsException):
    exit_code = 6
    message = _("%(failed)d of %(trials)d trials differ from %(expected)s")
