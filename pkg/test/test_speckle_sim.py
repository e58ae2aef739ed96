#!/usr/bin/env python

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

import math
import unittest

import numpy as np

from thermal_bell.analytic_core import SourceKind, SourceModel
from thermal_bell.errors import SamplingError
from thermal_bell.speckle_sim import (BLOCK_FRAMES, FrameMeta, FrameSet, Geometry, generate_frames, mean_profile,
                                      photonize, speckle_contrast)

SMALL = Geometry(width=32, height=2)


def small_run(n_frames, seed=0, **kwargs):
    kwargs.setdefault('tau_ratio', 0.01)
    kwargs.setdefault('substeps', 2)
    kwargs.setdefault('n_subsources', 4)
    return generate_frames(SMALL, SourceModel(), n_frames, seed=seed, **kwargs)


class TestGeometry(unittest.TestCase):

    def test_default_fringe_period(self):
        geom = Geometry()
        self.assertAlmostEqual(geom.fringe_period, 532e-9 * 0.3 / 200e-6)
        self.assertAlmostEqual(geom.period_pixels, geom.fringe_period / 5.5e-6)
        self.assertGreater(geom.period_pixels, 16.0)
        self.assertIs(geom.validate(), geom)

    def test_under_resolved_fringe(self):
        with self.assertRaises(SamplingError):
            Geometry(pixel_pitch=60e-6).validate()
        with self.assertRaises(ValueError):
            Geometry(wavelength=0.0).validate()

    def test_phase_axis(self):
        geom = Geometry(width=161)
        self.assertAlmostEqual(float(geom.phase(80)), 0.0)
        step = float(geom.phase(81) - geom.phase(80))
        self.assertAlmostEqual(step, 2.0 * math.pi / geom.period_pixels)
        self.assertAlmostEqual(float(geom.envelope(80)), 1.0)

    def test_column_for_phase(self):
        geom = Geometry()
        column, error = geom.column_for_phase(math.pi)
        self.assertLessEqual(abs(error), math.pi / geom.period_pixels + 1e-12)
        self.assertAlmostEqual(math.cos(float(geom.phase(column))), -1.0, places=2)


class TestGenerate(unittest.TestCase):

    def test_shape_and_rows(self):
        frames = small_run(300)
        self.assertEqual(frames.frames.shape, (300, 2, 32))
        self.assertEqual(frames.frames.dtype, np.float32)
        np.testing.assert_array_equal(frames[:, 0, :], frames[:, 1, :])
        self.assertTrue(np.all(frames.frames >= 0.0))
        self.assertEqual(frames.meta.n_subsources, 4)

    def test_reproducible(self):
        np.testing.assert_array_equal(small_run(300, seed=5).frames, small_run(300, seed=5).frames)
        self.assertFalse(np.array_equal(small_run(300, seed=5).frames, small_run(300, seed=6).frames))

    def test_independent_of_worker_count(self):
        n = 3 * BLOCK_FRAMES + 10
        np.testing.assert_array_equal(small_run(n, seed=2).frames, small_run(n, seed=2, workers=3).frames)

    def test_shorter_run_is_prefix(self):
        short = small_run(300, seed=9)
        long = small_run(700, seed=9)
        np.testing.assert_array_equal(short.frames, long.frames[:300])

    def test_single_slit_is_exponential(self):
        frames = generate_frames(SMALL, SourceModel(), 40000, tau_ratio=0.0, substeps=1, n_subsources=16,
                                 seed=11, balance=0.0)
        intensity = frames[:, 0, 16].astype(float)
        ratio = np.mean(intensity ** 2) / np.mean(intensity) ** 2
        self.assertAlmostEqual(ratio, 2.0, delta=0.1)
        self.assertAlmostEqual(float(speckle_contrast(frames).mean()), 1.0, delta=0.05)

    def test_mean_follows_envelope(self):
        frames = generate_frames(Geometry(), SourceModel(mean_photons=1.0), 10000, tau_ratio=0.01, substeps=2,
                                 n_subsources=8, seed=4)
        columns = np.arange(frames.width)
        ratio = mean_profile(frames) / Geometry().envelope(columns)
        self.assertAlmostEqual(float(ratio.mean()), 2.0, delta=0.1)

    def test_long_integration_lowers_contrast(self):
        fast = generate_frames(SMALL, SourceModel(), 2000, tau_ratio=0.0, substeps=4, n_subsources=8, seed=1)
        slow = generate_frames(SMALL, SourceModel(), 2000, tau_ratio=4.0, substeps=16, n_subsources=8, seed=1)
        self.assertLess(speckle_contrast(slow).mean(), speckle_contrast(fast).mean())

    def test_coherent_source(self):
        frames = generate_frames(SMALL, SourceModel(SourceKind.COHERENT), 500, tau_ratio=0.0, substeps=1)
        self.assertEqual(frames.meta.n_subsources, 1)
        self.assertEqual(frames.meta.source_kind, 'Coherent')

    def test_invalid_arguments(self):
        with self.assertRaises(ValueError):
            generate_frames(SMALL, SourceModel(SourceKind.SPE), 10)
        with self.assertRaises(ValueError):
            generate_frames(SMALL, SourceModel(), 0)
        with self.assertRaises(ValueError):
            generate_frames(SMALL, SourceModel(), 10, tau_ratio=-1.0)
        with self.assertRaises(SamplingError):
            generate_frames(Geometry(pixel_pitch=60e-6), SourceModel(), 10)


class TestPhotonize(unittest.TestCase):

    def test_counts_follow_intensity(self):
        frames = small_run(2000, seed=3)
        gain = 50.0
        counts = photonize(frames, gain, seed=3)
        self.assertEqual(counts.meta.gain, gain)
        self.assertTrue(np.all(counts.frames == np.round(counts.frames)))
        self.assertFalse(np.array_equal(counts[:, 0, :], counts[:, 1, :]))
        expected = gain * float(frames.frames.astype(float).mean())
        self.assertAlmostEqual(float(counts.frames.astype(float).mean()) / expected, 1.0, delta=0.01)

    def test_count_variance_is_super_poissonian(self):
        frames = small_run(20000, seed=5)
        gain = 5.0
        counts = photonize(frames, gain, seed=5)[:, 0, 16].astype(float)
        intensity = frames[:, 0, 16].astype(float)
        fano = counts.var() / counts.mean()
        self.assertAlmostEqual(fano / (1.0 + gain * intensity.var() / intensity.mean()), 1.0, delta=0.1)
        self.assertGreater(fano, 1.5)

    def test_reproducible(self):
        frames = small_run(300, seed=3)
        np.testing.assert_array_equal(photonize(frames, 10.0, 1).frames, photonize(frames, 10.0, 1).frames)
        with self.assertRaises(ValueError):
            photonize(frames, 0.0, 1)


class TestFrameSet(unittest.TestCase):

    def test_shape_check(self):
        meta = FrameMeta(seed=0, tau_ratio=0.0, substeps=1, n_subsources=1, geometry=SMALL)
        with self.assertRaises(ValueError):
            FrameSet(np.zeros((4, 32)), meta)
        frames = FrameSet(np.zeros((4, 2, 32), dtype=np.float32), meta)
        self.assertEqual(len(frames), 4)
        self.assertEqual((frames.height, frames.width), (2, 32))
        self.assertIn('fringe_period', meta.to_dict())


if __name__ == '__main__':
    unittest.main()
