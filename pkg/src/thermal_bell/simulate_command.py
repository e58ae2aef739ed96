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

from .analytic_core import SourceKind
from .command import Command
from .frame_io import write_spkl
from .speckle_sim import generate_frames, mean_profile, photonize, speckle_contrast
from .util import report_info

logger = logging.getLogger(__name__)


class SimulateCommand(Command):
    """
    Write a synthetic frame stack to an SPKL file.
    """
    def setup(self):
        self.name = 'simulate'
        self.help = 'generate pseudothermal double slit frames'
        self.default_out = 'frames.spkl'

    def add_arguments(self, parser):
        parser.add_argument('--frames', dest='n_frames', type=int, help='number of frames')
        parser.add_argument('--tau-ratio', type=float, help='integration time over coherence time')
        parser.add_argument('--substeps', type=int, help='samples per integration window')
        parser.add_argument('--subsources', type=int, help='emitters per slit')
        parser.add_argument('--balance', type=float, help='second slit intensity relative to the first')
        parser.add_argument('--gain', type=float, help='convert to Poisson photon counts with this gain')
        parser.add_argument('--workers', type=int, help='generator threads')
        parser.add_argument('--source', choices=[SourceKind.TLS.value, SourceKind.COHERENT.value])
        parser.add_argument('--nbar', type=float, help='mean photon number per source')
        parser.add_argument('--width', type=int, help='frame width in pixels')
        parser.add_argument('--height', type=int, help='frame height in pixels')
        parser.add_argument('--z', type=float, help='propagation distance (m)')
        parser.add_argument('--pitch', type=float, help='pixel pitch (m)')

    def overrides(self, args):
        return {
            'simulate.n_frames': args.n_frames,
            'simulate.tau_ratio': args.tau_ratio,
            'simulate.substeps': args.substeps,
            'simulate.n_subsources': args.subsources,
            'simulate.balance': args.balance,
            'simulate.gain': args.gain,
            'simulate.workers': args.workers,
            'source.kind': args.source,
            'source.mean_photons': args.nbar,
            'geometry.width': args.width,
            'geometry.height': args.height,
            'geometry.propagation': args.z,
            'geometry.pixel_pitch': args.pitch,
        }

    def run(self, config, out):
        s = config.simulate
        frames = generate_frames(config.geometry, config.source_model, s.n_frames, tau_ratio=s.tau_ratio,
                                 substeps=s.substeps, n_subsources=s.n_subsources, seed=config.seed,
                                 balance=s.balance, workers=s.workers)
        if s.gain is not None:
            frames = photonize(frames, s.gain, config.seed)
        write_spkl(out, frames)
        geom = config.geometry
        report_info("%d frames of %d x %d written to %s" % (frames.n_frames, geom.height, geom.width, out))
        report_info("mean intensity %.6g, speckle contrast %.4f" % (mean_profile(frames).mean(),
                                                                     speckle_contrast(frames).mean()))
        report_info("fringe period %.6g m (%.2f pixels)" % (geom.fringe_period, geom.period_pixels))
        return 0
