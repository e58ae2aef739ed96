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

import logging

from .analytic_core import (DetectorSetting, SourceKind, FOUR_PAIRS, SIX_PAIRS, gm1_tls_normalized, gm1_tls_set,
                            probabilities_four, probabilities_six, spe_set, visibility_tls)
from .command import Command, write_csv
from .errors import ConfigError
from .gaussian_oracle import MAX_PERMANENT_SIZE, fringe_visibility, gm1_from_permanent
from .util import TWO_PI, report_info

logger = logging.getLogger(__name__)


def delta_grid(points):
    return [TWO_PI * k / points for k in range(points)]


def oracle_deviation(m, model, deltas):
    """
    Largest relative deviation between the permanent and the closed form over
    ``deltas``, and the visibility of the permanent-generated fringe.
    """
    normalized = [gm1_from_permanent(m, 0.0, -delta, model).normalized for delta in deltas]
    closed = [gm1_tls_normalized(m, delta) for delta in deltas]
    deviation = max(abs(p - c) / c for p, c in zip(normalized, closed))
    return deviation, fringe_visibility(normalized)


class AnalyticCommand(Command):
    """
    Closed-form correlation functions, probabilities and the visibility law.
    """
    def setup(self):
        self.name = 'analytic'
        self.help = 'closed-form correlations, probabilities and visibilities'
        self.default_out = 'analytic.csv'

    def add_arguments(self, parser):
        parser.add_argument('--m', help='range of m, e.g. 1..8')
        parser.add_argument('--curve', choices=['visibility', 'correlations', 'probabilities'])
        parser.add_argument('--oracle', action='store_true', default=None,
                            help='cross-check thermal correlations against the permanent oracle')
        parser.add_argument('--delta-points', type=int, help='points of the phase grid')
        parser.add_argument('--source', choices=[k.value for k in SourceKind])
        parser.add_argument('--nbar', type=float, help='mean photon number per source')

    def overrides(self, args):
        return {
            'm': args.m,
            'analytic.curve': args.curve,
            'analytic.oracle': args.oracle,
            'analytic.delta_points': args.delta_points,
            'source.kind': args.source,
            'source.mean_photons': args.nbar,
        }

    def run(self, config, out):
        curve = config.analytic.curve
        if curve == 'visibility':
            self._visibility(config, out)
        else:
            self._sets(config, out, curve == 'probabilities')
        return 0

    def _visibility(self, config, out):
        header = ['m', 'order', 'visibility_exact', 'visibility']
        oracle = config.analytic.oracle
        if oracle:
            header += ['visibility_oracle', 'max_rel_deviation']
        model = config.source_model
        if oracle and model.kind is not SourceKind.TLS:
            raise ConfigError("the permanent oracle needs a TLS source", field='source.kind')
        deltas = delta_grid(config.analytic.delta_points)
        rows = []
        worst = 0.0
        for m in config.m_values:
            exact = visibility_tls(m, exact=True)
            row = [m, m + 1, '%d/%d' % (exact.numerator, exact.denominator), float(exact)]
            if oracle:
                if m + 1 > MAX_PERMANENT_SIZE:
                    raise ConfigError("m=%d exceeds the permanent size guard" % m, field='m')
                deviation, visibility = oracle_deviation(m, model, deltas)
                worst = max(worst, deviation)
                row += [visibility, deviation]
            rows.append(row)
        write_csv(out, {}, header, rows)
        if oracle:
            report_info("oracle: max relative deviation %.3g over %d phases" % (worst, len(deltas)))

    def _correlation_set(self, m, delta, config):
        model = config.source_model
        d1, d2 = DetectorSetting(0.0), DetectorSetting(-delta)
        if model.kind is SourceKind.SPE:
            if m != 1:
                raise ConfigError("single photon emitters only have second order sets", field='m')
            return spe_set(d1, d2, 1.0, model.field_amp)
        if model.kind is SourceKind.TLS:
            return gm1_tls_set(m, d1, d2, model)
        raise ConfigError("no closed-form sets for %s sources" % model.kind.value, field='source.kind')

    def _sets(self, config, out, probabilities):
        pairs = SIX_PAIRS if config.source_model.kind is SourceKind.SPE else FOUR_PAIRS
        header = ['m', 'delta_rad'] + [pair.value for pair in pairs]
        if probabilities:
            header += ['marginal_1', 'marginal_2', 'normalization']
        rows = []
        for m in config.m_values:
            for delta in delta_grid(config.analytic.delta_points):
                cset = self._correlation_set(m, delta, config)
                if probabilities:
                    probs = probabilities_six(cset) if cset.has_same_side else probabilities_four(cset)
                    rows.append([m, delta] + [probs[p] for p in pairs]
                                + [probs.marginal_1, probs.marginal_2, probs.normalization])
                else:
                    rows.append([m, delta] + [cset[p] for p in pairs])
        write_csv(out, {'delta_rad': 'rad'}, header, rows)
