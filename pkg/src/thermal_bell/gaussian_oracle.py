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
.. module:: gaussian_oracle
    :synopsis: Thermal-light correlations as permanents of the coherence matrix.

For Gaussian (thermal) fields the normally ordered moment
``<E(-)(r1)...E(-)(rn) E(+)(rn)...E(+)(r1)>`` equals the permanent of the
first order coherence matrix ``J_pq = <E(-)(r_p) E(+)(r_q)>``. This module
evaluates that permanent with Ryser's formula and is used to check the closed
forms of :mod:`thermal_bell.analytic_core` independently.
"""

import collections
import logging
import math
from dataclasses import dataclass

import numpy as np

from .analytic_core import SourceKind

logger = logging.getLogger(__name__)

# Ryser costs 2**n * n operations.
MAX_PERMANENT_SIZE = 16

PermanentCorrelation = collections.namedtuple('PermanentCorrelation', ['raw', 'normalized'])


@dataclass(frozen=True)
class CoherenceMatrix:
    """
    Hermitian first order coherence matrix of ``size`` detector positions.
    """
    size: int
    entries: np.ndarray

    def __post_init__(self):
        if self.entries.shape != (self.size, self.size):
            raise ValueError("coherence matrix has shape %s, expected %d x %d"
                             % (self.entries.shape, self.size, self.size))

    @property
    def diagonal(self):
        return np.real(np.diag(self.entries))

    def is_valid(self, tol=1e-12):
        """
        Hermitian, positive real diagonal and ``|J_pq| <= sqrt(J_pp J_qq)``.
        """
        j = self.entries
        if not np.allclose(j, j.conj().T, rtol=0.0, atol=tol):
            return False
        diag = self.diagonal
        if np.any(diag <= 0.0) or np.any(np.abs(np.imag(np.diag(j))) > tol):
            return False
        bound = np.sqrt(np.outer(diag, diag))
        return bool(np.all(np.abs(j) <= bound * (1.0 + tol) + tol))


def coherence_matrix(deltas, model):
    """
    Coherence matrix for detectors at the optical phases ``deltas``:
    ``J_pq = E0**2 <n> (1 + exp(i (delta_q - delta_p)))``.

    :param deltas: detector phases in radians; repeat a phase to place several detectors there
    :type deltas: sequence of float
    :type model: thermal_bell.analytic_core.SourceModel
    :raises ValueError: for non-thermal models or an empty phase list
    """
    if model.kind is not SourceKind.TLS:
        raise ValueError("the Gaussian moment theorem applies to thermal sources only, got %s"
                         % model.kind.value)
    deltas = np.asarray(deltas, dtype=float)
    if deltas.ndim != 1 or deltas.size == 0:
        raise ValueError("need a non-empty list of detector phases")
    scale = model.field_amp ** 2 * model.photons
    entries = scale * (1.0 + np.exp(1j * (deltas[np.newaxis, :] - deltas[:, np.newaxis])))
    return CoherenceMatrix(deltas.size, entries)


def permanent(matrix):
    """
    Permanent of a square matrix by Ryser's formula, visiting the column
    subsets in Gray-code order so each step adds or removes one column from
    the running row sums.

    :type matrix: numpy.ndarray
    :returns: complex permanent
    :raises ValueError: if the matrix is not square or larger than 16 x 16
    """
    a = np.asarray(matrix, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("permanent needs a square matrix, got shape %s" % (a.shape,))
    n = a.shape[0]
    if n > MAX_PERMANENT_SIZE:
        raise ValueError("permanent of a %d x %d matrix exceeds the size guard of %d"
                         % (n, n, MAX_PERMANENT_SIZE))
    if n == 0:
        return complex(1.0)

    row_sums = np.zeros(n, dtype=complex)
    subset = 0
    subset_size = 0
    total = 0j
    for k in range(1, 1 << n):
        column = (k & -k).bit_length() - 1
        subset ^= 1 << column
        if subset & (1 << column):
            row_sums += a[:, column]
            subset_size += 1
        else:
            row_sums -= a[:, column]
            subset_size -= 1
        term = np.prod(row_sums)
        total += -term if subset_size % 2 else term
    return complex(total * (-1) ** n)


def gm1_from_permanent(m, delta1, delta2, model):
    """
    The (m+1)-th order thermal correlation for ``m`` detectors at ``delta1``
    and one at ``delta2``, as the permanent of the literal ``(m+1) x (m+1)``
    coherence matrix.

    :returns: ``PermanentCorrelation(raw, normalized)``; ``normalized`` divides
              by the product of the diagonal entries (the ``g1`` values)
    :raises ValueError: if the permanent is not real and nonnegative, or on the size guard
    """
    if m < 1:
        raise ValueError("m must be >= 1, got %s" % m)
    if m + 1 > MAX_PERMANENT_SIZE:
        raise ValueError("m + 1 = %d exceeds the permanent size guard" % (m + 1))
    cm = coherence_matrix([delta1] * m + [delta2], model)
    value = permanent(cm.entries)
    if abs(value.imag) > 1e-9 * max(abs(value.real), 1.0) or value.real < -1e-9 * abs(value):
        raise ValueError("permanent of a coherence matrix is not real nonnegative: %s" % value)
    raw = value.real
    normalized = raw / math.prod(cm.diagonal)
    return PermanentCorrelation(raw, normalized)


def fringe_visibility(values):
    """
    ``(max - min) / (max + min)`` of a sampled fringe.
    """
    values = np.asarray(values, dtype=float)
    top, bottom = values.max(), values.min()
    return float((top - bottom) / (top + bottom))
