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
.. module:: analytic_core
    :synopsis: Closed-form correlation functions and detection probabilities.

Closed forms for two statistically independent sources seen by detectors in
the far field, where a detector at optical phase ``delta`` sees the field
``E(+) = E0 (a1 + exp(i delta) a2)``.

The correlation sets follow the four-detector arrangement: detectors at
``delta1``, ``delta2`` and at the pi-shifted partners ``pi1 = delta1 + pi``,
``pi2 = delta2 + pi``. For second order all six detector pairs are used, for
the (m+1)-th order thermal case only the four mixed pairs survive the
post-selection (m photons on one side, one photon on the other).

Example::

    from thermal_bell.analytic_core import (SourceModel, SourceKind, DetectorSetting,
                                            gm1_tls_set, probabilities_four)

    model = SourceModel(SourceKind.TLS, mean_photons=1.0)
    cset = gm1_tls_set(6, DetectorSetting(0.0), DetectorSetting(0.0), model)
    probs = probabilities_four(cset)   # joint[D1D2] == (1 + 0.75) / 4
"""

import enum
import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from .util import check_positive, check_unit_interval, wrap_phase

logger = logging.getLogger(__name__)

# Largest m for which the amplitude A is built from exact integer factorials.
EXACT_FACTORIAL_MAX_M = 20

# Maximal second order visibility of two independent coherent sources.
COHERENT_VISIBILITY_BOUND = 0.5


class SourceKind(enum.Enum):
    SPE = 'SPE'
    TLS = 'TLS'
    COHERENT = 'Coherent'


class SettingPair(enum.Enum):
    """
    Labels of the detector pairs. ``D`` is the setting itself, ``P`` its pi-shifted partner.
    """
    D1D2 = 'd1d2'
    P1P2 = 'p1p2'
    D1P2 = 'd1p2'
    P1D2 = 'p1d2'
    D1P1 = 'd1p1'
    D2P2 = 'd2p2'


FOUR_PAIRS = (SettingPair.D1D2, SettingPair.P1P2, SettingPair.D1P2, SettingPair.P1D2)
SIX_PAIRS = FOUR_PAIRS + (SettingPair.D1P1, SettingPair.D2P2)


@dataclass(frozen=True)
class SourceModel:
    """
    The emitter pair.

    :param kind: thermal, single photon emitters or coherent
    :type kind: SourceKind
    :param mean_photons: mean photon number per source; ignored for SPE
    :type mean_photons: float
    :param field_amp: amplitude E0 of the total field, arbitrary units
    :type field_amp: float
    """
    kind: SourceKind = SourceKind.TLS
    mean_photons: float = 1.0
    field_amp: float = 1.0

    def __post_init__(self):
        if not isinstance(self.kind, SourceKind):
            object.__setattr__(self, 'kind', SourceKind(self.kind))
        if self.mean_photons < 0.0 or math.isnan(self.mean_photons):
            raise ValueError("mean_photons must be >= 0, got %s" % self.mean_photons)
        check_positive('field_amp', self.field_amp)

    @property
    def photons(self):
        """
        Mean photon number per source actually entering the formulas.
        """
        if self.kind is SourceKind.SPE:
            return 1.0
        return float(self.mean_photons)

    @property
    def max_visibility(self):
        """
        Largest second order fringe visibility this kind of source pair can produce.
        """
        if self.kind is SourceKind.SPE:
            return 1.0
        if self.kind is SourceKind.COHERENT:
            return coherent_visibility_bound()
        return 1.0 / 3.0


@dataclass(frozen=True)
class DetectorSetting:
    """
    A detector position expressed as optical phase ``delta`` in radians.
    """
    delta: float

    @property
    def partner(self):
        """
        The pi-shifted partner setting. The phase is not reduced.
        """
        return DetectorSetting(self.delta + math.pi)

    def display(self):
        return wrap_phase(self.delta)


@dataclass(frozen=True)
class CorrelationSet:
    """
    Correlation values of one order at the four (or six) detector pairs.

    ``values`` maps :class:`SettingPair` to the correlation value. When
    ``normalized`` is true the values are divided by ``g1 ** order``.
    """
    order: int
    values: dict
    visibility: float
    amplitude: float
    normalized: bool = False

    def __post_init__(self):
        if self.order < 2:
            raise ValueError("correlation order must be >= 2, got %s" % self.order)
        for pair, value in self.values.items():
            if value < 0.0:
                raise ValueError("correlation value at %s is negative: %s" % (pair.value, value))

    @property
    def has_same_side(self):
        return SettingPair.D1P1 in self.values and SettingPair.D2P2 in self.values

    def __getitem__(self, pair):
        return self.values[pair]


@dataclass(frozen=True)
class ProbabilitySet:
    """
    Joint detection probabilities and the single-detector marginals derived from them.
    """
    joint: dict
    marginal_1: float
    marginal_2: float
    normalization: float

    def __getitem__(self, pair):
        return self.joint[pair]

    @property
    def total(self):
        return math.fsum(self.joint.values())


def _cos_diff(d1, d2):
    return math.cos(d1.delta - d2.delta)


def _check_order(m):
    if isinstance(m, bool) or int(m) != m or m < 1:
        raise ValueError("m must be an integer >= 1, got %s" % (m,))
    return int(m)


def _four_values(amplitude, visibility, cos_delta):
    plus = amplitude * (1.0 + visibility * cos_delta)
    minus = amplitude * (1.0 - visibility * cos_delta)
    return {
        SettingPair.D1D2: plus,
        SettingPair.P1P2: plus,
        SettingPair.D1P2: minus,
        SettingPair.P1D2: minus,
    }


def _six_values(amplitude, visibility, cos_delta):
    values = _four_values(amplitude, visibility, cos_delta)
    same_side = amplitude * (1.0 - visibility)
    values[SettingPair.D1P1] = same_side
    values[SettingPair.D2P2] = same_side
    return values


def g1(model, setting):
    """
    First order correlation ``<E(-) E(+)>``; independent of the detector setting.

    :param model: the source pair
    :type model: SourceModel
    :param setting: detector setting, accepted for symmetry with the other functions
    :type setting: DetectorSetting
    :returns: ``2 E0**2 <n>`` (``2 E0**2`` for SPE)
    """
    return 2.0 * model.field_amp ** 2 * model.photons


def g2_spe(d1, d2, vis, field_amp=1.0):
    """
    Second order correlation of two single photon emitters,
    ``2 E0**4 (1 + vis cos(delta1 - delta2))``.

    :raises ValueError: if ``vis`` is outside [0, 1]
    """
    vis = check_unit_interval('vis', vis)
    return 2.0 * field_amp ** 4 * (1.0 + vis * _cos_diff(d1, d2))


def g2_tls(d1, d2, vis, model):
    """
    Second order correlation of two thermal sources,
    ``6 E0**4 <n>**2 (1 + vis cos(delta1 - delta2))``; ``vis = 1/3`` is the
    physical value.

    :raises ValueError: if ``vis`` is outside [0, 1]
    """
    vis = check_unit_interval('vis', vis)
    return 6.0 * model.field_amp ** 4 * model.photons ** 2 * (1.0 + vis * _cos_diff(d1, d2))


def visibility_tls(m, exact=False):
    """
    Fringe visibility ``m / (m + 2)`` of the (m+1)-th order thermal correlation.

    :param m: number of photons recorded at the first detector position
    :type m: int
    :param exact: return a :class:`fractions.Fraction` instead of a float
    :type exact: bool
    :raises ValueError: if ``m < 1``
    """
    m = _check_order(m)
    value = Fraction(m, m + 2)
    return value if exact else float(value)


def coherent_visibility_bound():
    return COHERENT_VISIBILITY_BOUND


def gm1_tls_normalized(m, delta_diff, vis=None):
    """
    The (m+1)-th order thermal correlation divided by ``g1 ** (m + 1)``:
    ``(m+2)! / (2 (m+1)) * (1 + V cos(delta_diff))``.

    :raises OverflowError: if the baseline does not fit in a double
    """
    m = _check_order(m)
    visibility = visibility_tls(m) if vis is None else check_unit_interval('vis', vis)
    baseline = Fraction(math.factorial(m + 2), 2 * (m + 1))
    try:
        baseline = float(baseline)
    except OverflowError:
        raise OverflowError("normalized amplitude for m=%d exceeds double precision" % m)
    return baseline * (1.0 + visibility * math.cos(delta_diff))


def gm1_tls_set(m, d1, d2, model, vis_override=None):
    """
    The four (m+1)-th order correlation functions of two thermal sources,
    ``A (1 +- V cos(delta1 - delta2))`` with
    ``A = (m+2)!/(m+1) * 2**m * E0**(2(m+1)) * <n>**(m+1)``.

    For ``m > 20`` only the normalized form is returned (``normalized`` set on
    the result, values divided by ``g1 ** (m + 1)``).

    :param m: photons recorded at ``d1``
    :type m: int
    :param vis_override: replaces ``m / (m + 2)``, e.g. by a measured visibility
    :type vis_override: float
    :rtype: CorrelationSet
    """
    m = _check_order(m)
    if model.kind is not SourceKind.TLS:
        raise ValueError("gm1_tls_set needs a TLS source model, got %s" % model.kind.value)
    visibility = visibility_tls(m) if vis_override is None else check_unit_interval('vis_override', vis_override)
    cos_delta = _cos_diff(d1, d2)

    if m > EXACT_FACTORIAL_MAX_M:
        logger.warning("m=%d exceeds exact factorial range, returning normalized correlations", m)
        baseline = gm1_tls_normalized(m, 0.0, 0.0)
        return CorrelationSet(m + 1, _four_values(baseline, visibility, cos_delta),
                              visibility, baseline, normalized=True)

    # (m+2)!/(m+1) == (m+2) m!, kept in integers
    prefactor = (m + 2) * math.factorial(m) * 2 ** m
    amplitude = float(prefactor) * model.field_amp ** (2 * (m + 1)) * model.photons ** (m + 1)
    return CorrelationSet(m + 1, _four_values(amplitude, visibility, cos_delta), visibility, amplitude)


def spe_set(d1, d2, vis, field_amp=1.0):
    """
    The six second order correlation functions of two single photon emitters.
    """
    vis = check_unit_interval('vis', vis)
    amplitude = 2.0 * field_amp ** 4
    return CorrelationSet(2, _six_values(amplitude, vis, _cos_diff(d1, d2)), vis, amplitude)


def g2_tls_set(d1, d2, vis, model):
    """
    The six second order correlation functions of two thermal sources.
    """
    vis = check_unit_interval('vis', vis)
    amplitude = 6.0 * model.field_amp ** 4 * model.photons ** 2
    return CorrelationSet(2, _six_values(amplitude, vis, _cos_diff(d1, d2)), vis, amplitude)


def _normalize(values, pairs):
    for pair in pairs:
        if pair not in values:
            raise ValueError("correlation set lacks the %s entry" % pair.value)
        if values[pair] < 0.0:
            raise ValueError("correlation value at %s is negative: %s" % (pair.value, values[pair]))
    normalization = math.fsum(values[pair] for pair in pairs)
    if not normalization > 0.0:
        raise ValueError("correlation set sums to zero")
    return dict((pair, values[pair] / normalization) for pair in pairs), normalization


def probabilities_six(cset):
    """
    Joint and single detection probabilities from the six second order
    correlation functions, normalized by their sum ``N``.

    :param cset: a set with all six pairs, see :func:`spe_set` and :func:`g2_tls_set`
    :type cset: CorrelationSet
    :rtype: ProbabilitySet
    :raises ValueError: if an entry is missing or negative
    """
    joint, normalization = _normalize(cset.values, SIX_PAIRS)
    marginal_1 = math.fsum((joint[SettingPair.D1P1], joint[SettingPair.D1P2], joint[SettingPair.D1D2]))
    marginal_2 = math.fsum((joint[SettingPair.P1D2], joint[SettingPair.D2P2], joint[SettingPair.D1D2]))
    return ProbabilitySet(joint, marginal_1, marginal_2, normalization)


def probabilities_four(cset):
    """
    Joint and single detection probabilities of the post-selected (m+1)-th
    order events: m photons at ``delta1`` (or ``pi1``) and one at ``delta2``
    (or ``pi2``). Events with photons on both ``delta1`` and ``pi1`` (or on
    both ``delta2`` and ``pi2``) are discarded, so only the four mixed pairs
    enter the normalization ``N = 4 A``.

    :rtype: ProbabilitySet
    :raises ValueError: if an entry is missing or negative
    """
    joint, normalization = _normalize(cset.values, FOUR_PAIRS)
    marginal_1 = joint[SettingPair.D1D2] + joint[SettingPair.D1P2]
    marginal_2 = joint[SettingPair.D1D2] + joint[SettingPair.P1D2]
    return ProbabilitySet(joint, marginal_1, marginal_2, normalization)
