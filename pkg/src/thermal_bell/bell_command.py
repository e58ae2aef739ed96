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

from .analytic_core import visibility_tls
from .bell_harness import (Bound, ModelTag, angle_scan, bell_statistic, default_angles, min_violating_m,
                           threshold_visibility)
from .command import Command, write_json
from .util import report_info, report_warn

logger = logging.getLogger(__name__)

# Second order visibility of each six-term model when none is given.
SIX_TERM_VISIBILITY = {
    ModelTag.SIX_TERM_SPE: 1.0,
    ModelTag.SIX_TERM_TLS: 1.0 / 3.0,
}


class BellCommand(Command):
    """
    CH74 statistic, bound checks and visibility thresholds.
    """
    def setup(self):
        self.name = 'bell'
        self.help = 'evaluate the CH74 statistic and the violation thresholds'
        self.default_out = 'bell.json'

    def add_arguments(self, parser):
        group = parser.add_mutually_exclusive_group()
        group.add_argument('--six-term', dest='model_tag', action='store_const', const=ModelTag.SIX_TERM_TLS.value,
                           help='second order, all six detector pairs')
        group.add_argument('--four-term', dest='model_tag', action='store_const',
                           const=ModelTag.FOUR_TERM_TLS.value, help='(m+1)-th order, post-selected pairs')
        group.add_argument('--model', dest='model_tag', choices=[t.value for t in ModelTag])
        parser.add_argument('--vis', type=float, help='visibility; overrides m / (m + 2)')
        parser.add_argument('--m', help='range of m for the four-term model')
        parser.add_argument('--bound', choices=[b.value for b in Bound])
        parser.add_argument('--grid-step', type=float, help='also scan detector phases on this grid (rad)')

    def overrides(self, args):
        return {
            'bell.model_tag': args.model_tag,
            'bell.visibility': args.vis,
            'bell.bound': args.bound,
            'bell.grid_step': args.grid_step,
            'm': args.m,
        }

    def _cases(self, config, tag):
        if config.bell.visibility is not None:
            return [(None, config.bell.visibility)]
        if tag.six_term:
            return [(1, SIX_TERM_VISIBILITY[tag])]
        return [(m, visibility_tls(m)) for m in config.m_values]

    def _check_source(self, config, tag):
        """
        Warn when a second order visibility override is out of reach of the configured sources.
        """
        if config.bell.visibility is None or not tag.six_term:
            return
        model = config.source_model
        if config.bell.visibility > model.max_visibility:
            report_warn("visibility %.4f exceeds the %.4f two independent %s sources can reach at second order"
                        % (config.bell.visibility, model.max_visibility, model.kind.value))

    def run(self, config, out):
        tag = ModelTag(config.bell.model_tag)
        bound = Bound(config.bell.bound)
        angles = default_angles(bound)
        self._check_source(config, tag)
        reports = []
        for m, visibility in self._cases(config, tag):
            report = bell_statistic(tag, visibility, angles)
            entry = report.to_dict()
            entry['m'] = m
            if config.bell.grid_step is not None:
                scan = angle_scan(tag, visibility, config.bell.grid_step)
                entry['angle_scan'] = [{'cosine_arguments_rad': list(a.args), 'statistic': s} for a, s in scan]
            reports.append(entry)
            report_info("%s V=%.6f: statistic %+.7f%s" % (tag.value, visibility, report.statistic,
                                                         ' (violated)' if report.violated else ''))
        write_json(out, {
            'bound': bound.value,
            'reports': reports,
            'thresholds': dict((b.value, threshold_visibility(tag, b)) for b in Bound),
            'min_violating_m': min_violating_m(),
        })
        return 0
