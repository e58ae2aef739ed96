# Software License Agreement (BSD License)
#
# Copyright (c) 2026, thermal_bell contributors.
# All rights reserved.
#
# Redistribution and use in source and binary forms, with or without
# modification, are permitted provided that the following conditions
# are met:
#
#  * Redistributions of source code must retain the above copyright
#    notice, this list of conditions and the following disclaimer.
#  * Redistributions in binary form must reproduce the above
#    copyright notice, this list of conditions and the following
#    disclaimer in the documentation and/or other materials provided
#    with the distribution.
#  * Neither the name of the copyright holder nor the names of its
#    contributors may be used to endorse or promote products derived
#    from this software without specific prior written permission.
#
# THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS
# "AS IS" AND ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT
# LIMITED TO, THE IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS
# FOR A PARTICULAR PURPOSE ARE DISCLAIMED. IN NO EVENT SHALL THE
# COPYRIGHT OWNER OR CONTRIBUTORS BE LIABLE FOR ANY DIRECT, INDIRECT,
# INCIDENTAL, SPECIAL, EXEMPLARY, OR CONSEQUENTIAL DAMAGES (INCLUDING,
# BUT NOT LIMITED TO, PROCUREMENT OF SUBSTITUTE GOODS OR SERVICES;
# LOSS OF USE, DATA, OR PROFITS; OR BUSINESS INTERRUPTION) HOWEVER
# CAUSED AND ON ANY THEORY OF LIABILITY, WHETHER IN CONTRACT, STRICT
# LIABILITY, OR TORT (INCLUDING NEGLIGENCE OR OTHERWISE) ARISING IN
# ANY WAY OUT OF THE USE OF THIS SOFTWARE, EVEN IF ADVISED OF THE
# POSSIBILITY OF SUCH DAMAGE.

"""
.. module:: bell_harness
    :synopsis: CH74 Bell statistic, canonical angle sets and visibility thresholds.

The statistic evaluated everywhere is the middle term of the Clauser-Horne
inequality with ``X = Y = 1``::

    -1 <= xy - xy' + x'y + x'y' - x' - y <= 0

where ``x, x', y, y'`` are single detection probabilities and the products are
joint detection probabilities. With correlation functions of the form
``A (1 +- V cos)``, every joint probability depends on a cosine argument only,
so angle sets are carried as the four cosine arguments.
"""

import enum
import itertools
import logging
import math
from dataclasses import dataclass, field

import numpy as np

from .analytic_core import SettingPair
from .util import TWO_PI, check_positive, check_unit_interval

logger = logging.getLogger(__name__)

LOWER_BOUND = -1.0
UPPER_BOUND = 0.0

# Bounds are only reported as violated beyond this guard band.
GUARD_BAND = 1e-12

SQRT2 = math.sqrt(2.0)


class ModelTag(enum.Enum):
    SIX_TERM_SPE = 'SixTerm_SPE'
    SIX_TERM_TLS = 'SixTerm_TLS'
    FOUR_TERM_TLS = 'FourTerm_TLS'

    @property
    def six_term(self):
        return self is not ModelTag.FOUR_TERM_TLS


class Bound(enum.Enum):
    UPPER = 'upper'
    LOWER = 'lower'


@dataclass(frozen=True)
class AngleSet:
    """
    The four cosine arguments ``(delta1 - delta2, delta1 - delta2',
    delta1' - delta2, delta1' - delta2')`` of a Bell test, in radians.

    Use :meth:`from_phases` to build one from detector phases and
    :meth:`detector_phases` to get back a consistent set of phases.
    """
    args: tuple

    def __post_init__(self):
        if len(self.args) != 4:
            raise ValueError("an angle set has four cosine arguments, got %d" % len(self.args))
        object.__setattr__(self, 'args', tuple(float(a) for a in self.args))

    @classmethod
    def from_phases(cls, a1, a1p, a2, a2p):
        return cls((a1 - a2, a1 - a2p, a1p - a2, a1p - a2p))

    def detector_phases(self, tol=1e-9):
        """
        A realization ``(delta1, delta1', delta2, delta2')`` with ``delta1 = 0``
        whose cosine values equal those of this angle set. Since only cosines
        enter, each argument may be realized with either sign; the first
        consistent sign pattern is used.

        :raises ValueError: if no sign pattern is consistent
        """
        t = self.args
        for signs in itertools.product((1.0, -1.0), repeat=4):
            s = [sign * arg for sign, arg in zip(signs, t)]
            mismatch = math.remainder((s[0] - s[1]) - (s[2] - s[3]), TWO_PI)
            if abs(mismatch) < tol:
                a1 = 0.0
                a2 = -s[0]
                a2p = -s[1]
                a1p = s[2] + a2
                return (a1, a1p, a2, a2p)
        raise ValueError("cosine arguments %s cannot be realized by detector phases" % (t,))

    @property
    def bracket(self):
        return bracket(self)


@dataclass(frozen=True)
class BellReport:
    """
    Outcome of one Bell test. ``violates_upper`` and ``violates_lower`` require
    the bound to be exceeded by ``GUARD_BAND + sigma_margin * stderr``.
    """
    statistic: float
    model_tag: ModelTag
    visibility_used: float
    lower_bound: float = LOWER_BOUND
    upper_bound: float = UPPER_BOUND
    stderr: float = 0.0
    sigma_margin: float = 0.0
    angles: AngleSet = None
    violates_upper: bool = field(init=False)
    violates_lower: bool = field(init=False)

    def __post_init__(self):
        margin = GUARD_BAND + self.sigma_margin * self.stderr
        object.__setattr__(self, 'violates_upper', self.statistic - margin > self.upper_bound)
        object.__setattr__(self, 'violates_lower', self.statistic + margin < self.lower_bound)

    @property
    def violated(self):
        return self.violates_upper or self.violates_lower

    def to_dict(self):
        return {
            'statistic': self.statistic,
            'stderr': self.stderr,
            'lower_bound': self.lower_bound,
            'upper_bound': self.upper_bound,
            'violates_lower': self.violates_lower,
            'violates_upper': self.violates_upper,
            'model_tag': self.model_tag.value,
            'visibility_used': None if math.isnan(self.visibility_used) else self.visibility_used,
            'cosine_arguments_rad': list(self.angles.args) if self.angles is not None else None,
        }


def bracket(angles):
    """
    ``cos(t1) - cos(t2) + cos(t3) + cos(t4)`` of the cosine arguments.
    """
    t1, t2, t3, t4 = angles.args
    return math.cos(t1) - math.cos(t2) + math.cos(t3) + math.cos(t4)


def _check_probability(name, value):
    value = float(value)
    if not -GUARD_BAND <= value <= 1.0 + GUARD_BAND:
        raise ValueError("%s is not a probability: %s" % (name, value))
    return value


def ch74_middle(x, xp, y, yp, joints):
    """
    Middle term of the CH74 inequality with ``X = Y = 1``.

    :param joints: joint probabilities ordered ``(xy, xy', x'y, x'y')``
    :type joints: sequence of 4 floats
    :returns: ``xy - xy' + x'y + x'y' - x' - y``
    :raises ValueError: for values outside [0, 1]
    """
    for name, value in (('x', x), ('xp', xp), ('y', y), ('yp', yp)):
        _check_probability(name, value)
    if len(joints) != 4:
        raise ValueError("expected four joint probabilities, got %d" % len(joints))
    j1, j2, j3, j4 = [_check_probability('joint', j) for j in joints]
    return math.fsum((j1, -j2, j3, j4, -float(xp), -float(y)))


def default_angles(bound):
    """
    The canonical Bell angles as cosine arguments: ``(pi/4, 3pi/4, pi/4, pi/4)``
    for the upper bound, ``(3pi/4, pi/4, 3pi/4, 3pi/4)`` for the lower bound.

    :type bound: Bound
    :rtype: AngleSet
    """
    bound = Bound(bound)
    q = math.pi / 4.0
    if bound is Bound.UPPER:
        return AngleSet((q, 3.0 * q, q, q))
    return AngleSet((3.0 * q, q, 3.0 * q, 3.0 * q))


def statistic_value(model_tag, visibility, bracket_value):
    """
    The CH74 statistic as a function of visibility and cosine bracket.
    Six-term: ``V B / (6 - 2V) + 2 / (6 - 2V) - 1``; four-term: ``V B / 4 - 1/2``.
    Works elementwise on numpy arrays.
    """
    if ModelTag(model_tag).six_term:
        denominator = 6.0 - 2.0 * visibility
        return visibility * bracket_value / denominator + 2.0 / denominator - 1.0
    return visibility * bracket_value / 4.0 - 0.5


def bell_statistic(model_tag, visibility, angles):
    """
    Evaluate the Bell statistic for a correlation set of visibility ``visibility``.

    :type model_tag: ModelTag
    :type visibility: float
    :type angles: AngleSet
    :rtype: BellReport
    :raises ValueError: if ``visibility`` is outside [0, 1]
    """
    model_tag = ModelTag(model_tag)
    visibility = check_unit_interval('visibility', visibility)
    value = statistic_value(model_tag, visibility, bracket(angles))
    return BellReport(statistic=value, model_tag=model_tag, visibility_used=visibility, angles=angles)


def statistic_from_probabilities(sets, angles, model_tag=ModelTag.FOUR_TERM_TLS, stderr=0.0,
                                 sigma_margin=0.0, visibility_used=None):
    """
    Bell statistic from four probability sets, one per cosine argument, ordered
    ``(d1,d2), (d1,d2'), (d1',d2), (d1',d2')``. Joint probabilities are the
    ``D1D2`` entries; ``x'`` is the first marginal of the third set and ``y``
    the second marginal of the first set.

    :type sets: sequence of ProbabilitySet
    :rtype: BellReport
    """
    if len(sets) != 4:
        raise ValueError("expected four probability sets, got %d" % len(sets))
    joints = [s[SettingPair.D1D2] for s in sets]
    x = sets[0].marginal_1
    y = sets[0].marginal_2
    xp = sets[2].marginal_1
    yp = sets[1].marginal_2
    value = ch74_middle(x, xp, y, yp, joints)
    if visibility_used is None:
        b = bracket(angles)
        visibility_used = 4.0 * (value + 0.5) / b if abs(b) > GUARD_BAND else float('nan')
    return BellReport(statistic=value, model_tag=ModelTag(model_tag), visibility_used=visibility_used,
                      stderr=stderr, sigma_margin=sigma_margin, angles=angles)


def threshold_visibility(model_tag, bound):
    """
    Smallest visibility that violates ``bound`` at the canonical angles.

    Six-term: ``2/(1+sqrt 2)`` (upper), ``1/sqrt 2`` (lower).
    Four-term: ``1/sqrt 2`` for both bounds.
    """
    model_tag = ModelTag(model_tag)
    bound = Bound(bound)
    if model_tag.six_term and bound is Bound.UPPER:
        return 2.0 / (1.0 + SQRT2)
    return 1.0 / SQRT2


def min_violating_m():
    """
    Smallest m whose thermal visibility ``m/(m+2)`` exceeds ``1/sqrt 2``.

    The comparison ``m/(m+2) > 1/sqrt 2`` is done exactly as ``2 m**2 > (m+2)**2``.
    """
    m = 1
    while not 2 * m * m > (m + 2) ** 2:
        m += 1
    return m


def angle_scan(model_tag, visibility, grid_step):
    """
    Exhaustive search over detector phases on a grid of spacing ``grid_step``
    in [0, 2pi). ``delta1`` is fixed at zero because only phase differences
    enter; ``delta1'``, ``delta2`` and ``delta2'`` are scanned.

    :returns: the grid points attaining the maximal statistic followed by those
              attaining the minimal one, each as ``(AngleSet, statistic)``, in grid order
    :raises ValueError: if ``grid_step`` is not positive
    """
    check_positive('grid_step', grid_step)
    model_tag = ModelTag(model_tag)
    visibility = check_unit_interval('visibility', visibility)
    grid = np.arange(0.0, TWO_PI - 1e-12, grid_step)
    logger.debug("angle scan over %d^3 phase combinations", grid.size)

    # one delta1' slice at a time over the (delta2, delta2') plane
    a2, a2p = np.meshgrid(grid, grid, indexing='ij')
    a2, a2p = a2.ravel(), a2p.ravel()
    side_2 = np.cos(-a2) - np.cos(-a2p)
    top, bottom = _Extreme(1.0), _Extreme(-1.0)
    for i, a1p in enumerate(grid):
        stats = statistic_value(model_tag, visibility, side_2 + np.cos(a1p - a2) + np.cos(a1p - a2p))
        top.update(i, stats)
        bottom.update(i, stats)

    groups = [top] if top.value - bottom.value <= GUARD_BAND else [top, bottom]
    result = []
    for extreme in groups:
        for i, index, values in extreme.hits:
            for k, value in zip(index, values):
                result.append((AngleSet.from_phases(0.0, grid[i], a2[k], a2p[k]), float(value)))
    return result


class _Extreme(object):
    """
    Running maximum (``sign = 1``) or minimum (``sign = -1``) of a scan with
    every point within ``GUARD_BAND`` of it, kept as ``(slice, indices, values)``.
    """
    def __init__(self, sign):
        self.sign = sign
        self.value = -sign * np.inf
        self.hits = []

    def _near(self, values):
        return self.sign * (values - self.value) >= -GUARD_BAND

    def update(self, i, values):
        best = float(values.max() if self.sign > 0 else values.min())
        if self.sign * (best - self.value) > 0.0:
            self.value = best
            self.hits = [(j, index[self._near(v)], v[self._near(v)]) for j, index, v in self.hits]
            self.hits = [hit for hit in self.hits if hit[1].size]
        index = np.flatnonzero(self._near(values))
        if index.size:
            self.hits.append((i, index, values[index]))
