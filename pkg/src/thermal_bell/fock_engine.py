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
.. module:: fock_engine
    :synopsis: Exact two-mode Fock-space computations on a truncated basis.

States are density matrices on ``|n1, n2>`` with ``n1, n2 < dim``, held as
:class:`qutip.Qobj` with tensor dims ``[[dim, dim], [dim, dim]]``. Mode 1 and
mode 2 are the two source modes; a detector at optical phase ``delta`` sees
``E(+)(delta) = E0 (a1 + exp(i delta) a2)``.

Recording m photons at ``delta1`` is the projection::

    rho(m) = E(+)(delta1)**m rho E(-)(delta1)**m / tr(...)

which, for thermal input, leaves the detected mode ``(a1 + exp(i delta1) a2)/sqrt 2``
with mean photon number ``(m+1) nbar`` and produces the cross correlation
``|C(m)| = m / (m + 2)`` between the source modes.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np
import qutip
from scipy import stats

from .errors import TruncationError, ZeroProbabilityError

logger = logging.getLogger(__name__)

# Largest trace deficit of a freshly truncated thermal state.
THERMAL_TRACE_TOL = 1e-8
# Largest population allowed on the outermost Fock layer after projection.
TAIL_TOL = 1e-10

HERMITIAN_TOL = 1e-12
PSD_TOL = 1e-10
FIRST_MOMENT_TOL = 1e-12


class TwoModeState(object):
    """
    A normalized two-mode density matrix plus its truncation bookkeeping.

    :param matrix: the density matrix
    :type matrix: qutip.Qobj
    :param trace_deficit: ``1 - tr`` before renormalization
    :type trace_deficit: float
    :param tail_mass: population on the outermost Fock layer (``n1 = dim-1`` or ``n2 = dim-1``)
    :type tail_mass: float
    :param tol: tail mass above which the state is flagged under-truncated
    :type tol: float
    """
    def __init__(self, matrix, trace_deficit=0.0, tail_mass=None, tol=TAIL_TOL):
        dim = matrix.dims[0][0]
        if matrix.dims != [[dim, dim], [dim, dim]]:
            raise ValueError("expected a two-mode operator, got dims %s" % (matrix.dims,))
        self._matrix = matrix
        self._dim = dim
        self._trace_deficit = float(trace_deficit)
        self._tail_mass = _edge_population(matrix, dim) if tail_mass is None else float(tail_mass)
        self._tol = tol

    @property
    def dim(self):
        return self._dim

    @property
    def matrix(self):
        return self._matrix

    @property
    def trace_deficit(self):
        return self._trace_deficit

    @property
    def tail_mass(self):
        return self._tail_mass

    @property
    def under_truncated(self):
        return self._tail_mass > self._tol

    def check(self):
        """
        Verify that the state is Hermitian, positive semidefinite and of unit trace.

        :raises ValueError: naming the first violated property
        """
        rho = self._matrix.full()
        if np.max(np.abs(rho - rho.conj().T)) > HERMITIAN_TOL:
            raise ValueError("density matrix is not Hermitian")
        smallest = np.linalg.eigvalsh(0.5 * (rho + rho.conj().T)).min()
        if smallest < -PSD_TOL:
            raise ValueError("density matrix has negative eigenvalue %g" % smallest)
        trace = np.trace(rho).real
        if abs(trace - 1.0) > 1e-10:
            raise ValueError("density matrix has trace %.15g" % trace)
        return True


@dataclass(frozen=True)
class DetectionOperator:
    """
    ``E(+)(delta) = scale (a1 + exp(i delta) a2)``.
    """
    delta: float
    scale: float = 1.0

    def operator(self, dim):
        a1, a2 = _mode_operators(dim)
        return self.scale * (a1 + np.exp(1j * self.delta) * a2)


def detection_operator(delta, scale, dim):
    return DetectionOperator(delta, scale).operator(dim)


def _mode_operators(dim):
    a = qutip.destroy(dim)
    eye = qutip.qeye(dim)
    return qutip.tensor(a, eye), qutip.tensor(eye, a)


def _edge_population(matrix, dim):
    populations = np.real(matrix.diag()).reshape(dim, dim)
    return float(populations[-1, :].sum() + populations[:, -1].sum() - populations[-1, -1])


def _thermal_populations(mean_photons, dim):
    if mean_photons == 0.0:
        p = np.zeros(dim)
        p[0] = 1.0
        return p
    ratio = mean_photons / (1.0 + mean_photons)
    return (1.0 - ratio) * ratio ** np.arange(dim)


def auto_dim(mean_photons, m, tol=TAIL_TOL, minimum=4):
    """
    Smallest cutoff for which the photon-number tail of the m-photon-subtracted
    thermal mode (negative binomial with ``m + 1`` successes) is below ``tol``.
    """
    if mean_photons <= 0.0:
        return max(minimum, m + 2)
    success = 1.0 / (1.0 + mean_photons)
    dim = max(minimum, m + 2)
    while stats.nbinom.sf(dim - 1, m + 1, success) >= tol:
        dim += 1
    return dim


def thermal_state(mean_photons, dim, tol=THERMAL_TRACE_TOL):
    """
    Two independent thermal modes with identical mean photon number,
    renormalized after truncation.

    :raises TruncationError: if the discarded tail exceeds ``tol``
    :raises ValueError: for ``dim < 2`` or negative ``mean_photons``
    """
    if dim < 2:
        raise ValueError("dim must be >= 2, got %s" % dim)
    if mean_photons < 0.0:
        raise ValueError("mean_photons must be >= 0, got %s" % mean_photons)
    p = _thermal_populations(mean_photons, dim)
    deficit = 1.0 - p.sum() ** 2
    if deficit > tol:
        raise TruncationError("thermal state with nbar=%g loses %.3g of its trace at dim=%d"
                              % (mean_photons, deficit, dim),
                              suggested_dim=auto_dim(mean_photons, 0, tol))
    p = p / p.sum()
    single = qutip.Qobj(np.diag(p))
    rho = qutip.tensor(single, single)
    return TwoModeState(rho, trace_deficit=deficit)


def spe_state(dim=2):
    """
    Two single photon emitters, ``|1,1><1,1|``.
    """
    if dim < 2:
        raise ValueError("dim must be >= 2, got %s" % dim)
    rho = qutip.tensor(qutip.fock_dm(dim, 1), qutip.fock_dm(dim, 1))
    return TwoModeState(rho)


def project_m(state, delta1, m, field_amp=1.0):
    """
    State of the sources after ``m`` photons have been recorded at ``delta1``.

    :type state: TwoModeState
    :raises ZeroProbabilityError: if the detection event has zero probability
    :returns: the normalized :class:`TwoModeState`; ``under_truncated`` flags a
              populated outermost Fock layer
    """
    if m < 1:
        raise ValueError("m must be >= 1, got %s" % m)
    e_plus = detection_operator(delta1, field_amp, state.dim)
    projector = e_plus ** m
    unnormalized = projector * state.matrix * projector.dag()
    weight = unnormalized.tr().real
    if not weight > 1e-300:
        raise ZeroProbabilityError("recording %d photons at delta=%g has zero probability" % (m, delta1))
    result = TwoModeState(unnormalized / weight, trace_deficit=state.trace_deficit)
    if result.under_truncated:
        logger.warning("projected state (m=%d, dim=%d) has tail mass %.3g",
                       m, state.dim, result.tail_mass)
    return result


def conditioned_thermal(mean_photons, delta1, m, dim=None, tol=TAIL_TOL):
    """
    Thermal state projected by ``m`` detections at ``delta1``. The cutoff is
    chosen by :func:`auto_dim` unless given; if the projected state is
    under-truncated the cutoff is raised once and the computation repeated.

    :raises TruncationError: if the second attempt is still under-truncated
    """
    if dim is None:
        dim = auto_dim(mean_photons, m, tol)
    for attempt in range(2):
        state = project_m(thermal_state(mean_photons, dim), delta1, m)
        if not state.under_truncated:
            return state
        raised = max(dim + 4, int(math.ceil(dim * 1.5)))
        if attempt == 0:
            logger.warning("raising Fock cutoff from %d to %d (tail mass %.3g)", dim, raised, state.tail_mass)
            dim = raised
    raise TruncationError("projected thermal state (nbar=%g, m=%d) still under-truncated at dim=%d"
                          % (mean_photons, m, dim), suggested_dim=raised)


def mode_occupations(state, delta):
    """
    ``(<b^+ b>, <a1^+ a1>, <a2^+ a2>)`` with ``b = (a1 + exp(i delta) a2)/sqrt 2``.
    """
    a1, a2 = _mode_operators(state.dim)
    b = (a1 + np.exp(1j * delta) * a2) / math.sqrt(2.0)
    rho = state.matrix
    return (qutip.expect(b.dag() * b, rho).real,
            qutip.expect(a1.dag() * a1, rho).real,
            qutip.expect(a2.dag() * a2, rho).real)


def cross_corr(state):
    """
    Cross correlation coefficient of the two source modes,
    ``<a1^+ a2> / sqrt(<a1^+ a1> <a2^+ a2>)``.

    :raises ValueError: if the first moments do not vanish or a mode is empty
    """
    a1, a2 = _mode_operators(state.dim)
    rho = state.matrix
    first = max(abs(qutip.expect(a1, rho)), abs(qutip.expect(a2, rho)))
    if first > FIRST_MOMENT_TOL:
        raise ValueError("first moments do not vanish: |<a>| = %g" % first)
    n1 = qutip.expect(a1.dag() * a1, rho).real
    n2 = qutip.expect(a2.dag() * a2, rho).real
    if n1 < 1e-300 or n2 < 1e-300:
        raise ValueError("cross correlation undefined for an empty mode (n1=%g, n2=%g)" % (n1, n2))
    return complex(qutip.expect(a1.dag() * a2, rho)) / math.sqrt(n1 * n2)


def expect_gm1(state, m, delta1, delta2, field_amp=1.0):
    """
    Normally ordered correlation
    ``<E(-)(d1)**m E(-)(d2) E(+)(d2) E(+)(d1)**m>``.

    :raises TruncationError: if the cutoff cannot hold ``m + 1`` photons
    """
    if m < 0:
        raise ValueError("m must be >= 0, got %s" % m)
    if 2 * (state.dim - 1) < m + 1:
        raise TruncationError("dim=%d cannot hold %d photons" % (state.dim, m + 1),
                              suggested_dim=(m + 1) // 2 + 2)
    if state.under_truncated:
        logger.warning("correlation of order %d on an under-truncated state (tail %.3g)",
                       m + 1, state.tail_mass)
    e1 = detection_operator(delta1, field_amp, state.dim)
    e2 = detection_operator(delta2, field_amp, state.dim)
    annihilate = e2 * e1 ** m if m > 0 else e2
    value = (annihilate * state.matrix * annihilate.dag()).tr()
    return float(np.real(value))
