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

import cmath
import logging
import math

from .analytic_core import DetectorSetting, SettingPair, SourceKind, SourceModel, gm1_tls_set, visibility_tls
from .command import Command, write_json
from .fock_engine import auto_dim, conditioned_thermal, cross_corr, expect_gm1, mode_occupations, thermal_state
from .util import parse_floats, report_info

logger = logging.getLogger(__name__)

# Phase offsets of the second detector used for the Fock-vs-closed-form check.
CHECK_OFFSETS = (0.0, 0.5 * math.pi, math.pi)


class QuantumCommand(Command):
    """
    Cross correlation after photon detection and Fock-space checks of the closed forms.
    """
    def setup(self):
        self.name = 'quantum'
        self.help = 'cross correlation C(m) and Fock-space correlation checks'
        self.default_out = 'quantum.json'

    def add_arguments(self, parser):
        parser.add_argument('--m', help='range of m, e.g. 1..4')
        parser.add_argument('--nbar', help='comma separated mean photon numbers')
        parser.add_argument('--deltas', help='comma separated detector phases (rad)')
        parser.add_argument('--dim', type=int, help='Fock cutoff per mode, automatic if omitted')
        parser.add_argument('--tol', type=float, help='tail mass tolerance')

    def overrides(self, args):
        return {
            'm': args.m,
            'quantum.mean_photons': args.nbar,
            'quantum.deltas': args.deltas,
            'quantum.dim': args.dim,
            'quantum.tol': args.tol,
        }

    def run(self, config, out):
        q = config.quantum
        nbars = parse_floats(q.mean_photons)
        deltas = parse_floats(q.deltas)
        correlation_rows = []
        check_rows = []
        for nbar in nbars:
            for m in config.m_values:
                for delta1 in deltas:
                    state = conditioned_thermal(nbar, delta1, m, dim=q.dim, tol=q.tol)
                    c = cross_corr(state)
                    detected, n1, n2 = mode_occupations(state, delta1)
                    correlation_rows.append({
                        'm': m, 'mean_photons': nbar, 'delta1_rad': delta1, 'dim': state.dim,
                        'abs_c': abs(c), 'arg_c_rad': cmath.phase(c), 'expected': visibility_tls(m),
                        'deviation': abs(abs(c) - visibility_tls(m)),
                        'detected_occupation': detected, 'source_occupations': [n1, n2],
                    })
                check_rows.extend(self._check(nbar, m, deltas[0], q))
        max_c = max(row['deviation'] for row in correlation_rows)
        max_g = max(row['rel_deviation'] for row in check_rows)
        report_info("max |C| deviation %.3g, max Fock-vs-closed-form deviation %.3g" % (max_c, max_g))
        write_json(out, {
            'cross_correlation': correlation_rows,
            'fock_vs_analytic': check_rows,
            'max_c_deviation': max_c,
            'max_rel_deviation': max_g,
        })
        return 0

    def _check(self, nbar, m, delta1, q):
        model = SourceModel(SourceKind.TLS, nbar)
        # cutoff sized for the (m+1)-th moment, not for the projected state
        dim = q.dim if q.dim is not None else auto_dim(nbar, m + 2, q.tol)
        state = thermal_state(nbar, dim)
        rows = []
        for offset in CHECK_OFFSETS:
            delta2 = delta1 - offset
            fock = expect_gm1(state, m, delta1, delta2)
            cset = gm1_tls_set(m, DetectorSetting(delta1), DetectorSetting(delta2), model)
            closed = cset[SettingPair.D1D2]
            rows.append({
                'm': m, 'mean_photons': nbar, 'delta_rad': offset, 'dim': dim,
                'fock': fock, 'closed_form': closed, 'rel_deviation': abs(fock - closed) / closed,
            })
        return rows
