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

from .bell_harness import Bound, default_angles
from .command import Command, write_csv, write_json
from .correlator import bell_from_frames, visibility_table
from .errors import ConfigError
from .frame_io import read_spkl
from .util import report_info

logger = logging.getLogger(__name__)


class CorrelateCommand(Command):
    """
    Visibility of the measured correlation fringes and, optionally, the Bell statistic.
    """
    def setup(self):
        self.name = 'correlate'
        self.help = 'estimate correlations, visibilities and Bell statistics from frames'
        self.default_out = 'correlate.csv'

    def add_arguments(self, parser):
        parser.add_argument('--frames', help='SPKL frame file')
        parser.add_argument('--m', help='range of m, e.g. 1..7')
        parser.add_argument('--x1', type=int, help='column of the m pixels, default the centre')
        parser.add_argument('--n-boot', type=int, help='bootstrap replicates')
        parser.add_argument('--block', type=int, help='frames per bootstrap block')
        parser.add_argument('--bell', action='store_true', default=None, help='also evaluate the Bell statistic')
        parser.add_argument('--bound', choices=[b.value for b in Bound])
        parser.add_argument('--decorrelate', action='store_true', default=None,
                            help='shuffled-frame control')
        parser.add_argument('--sigma-margin', type=float, help='standard errors required for a violation')
        parser.add_argument('--curves', action='store_true', default=None,
                            help='also write the correlation curves')

    def overrides(self, args):
        return {
            'correlate.frames': args.frames,
            'm': args.m,
            'correlate.x1': args.x1,
            'correlate.n_boot': args.n_boot,
            'correlate.block': args.block,
            'correlate.bell': args.bell,
            'bell.bound': args.bound,
            'correlate.decorrelate': args.decorrelate,
            'correlate.sigma_margin': args.sigma_margin,
            'correlate.curves': args.curves,
        }

    def run(self, config, out):
        c = config.correlate
        if c.frames is None:
            raise ConfigError("no frame file given", field='correlate.frames')
        frames = read_spkl(c.frames)
        curves = [] if c.curves else None
        table = visibility_table(frames, config.m_values, x1=c.x1, n_boot=c.n_boot, block=c.block,
                                 seed=config.seed, decorrelate=c.decorrelate, curves=curves)
        write_csv(out, {}, ['m', 'v_theory', 'v_hat', 'stderr', 'fit_residual'], [list(row) for row in table])
        for row in table:
            report_info("m=%d: V = %.4f +- %.4f (theory %.4f)" % (row.m, row.v_hat, row.stderr, row.v_theory))

        if curves is not None:
            rows = [[curve.m] + list(point) for curve in curves for point in curve.rows()]
            write_csv('%s.curves.csv' % out, {'delta_rad': 'rad'},
                      ['m', 'x2_pixel', 'delta_rad', 'g_value', 'stderr'], rows)

        if c.bell:
            angles = default_angles(Bound(config.bell.bound))
            reports = []
            for m in config.m_values:
                report = bell_from_frames(frames, m, angles, n_boot=c.n_boot, block=c.block, seed=config.seed,
                                          decorrelate=c.decorrelate, sigma_margin=c.sigma_margin)
                entry = report.to_dict()
                entry['m'] = m
                reports.append(entry)
                report_info("m=%d: Bell statistic %+.5f +- %.5f%s" % (m, report.statistic, report.stderr,
                                                                      ' (violated)' if report.violated else ''))
            write_json('%s.bell.json' % out, {'bound': config.bell.bound, 'decorrelate': c.decorrelate,
                                               'reports': reports})
        return 0
