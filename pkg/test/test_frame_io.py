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

import json
import os
import shutil
import tempfile
import unittest

import numpy as np

from thermal_bell.analytic_core import SourceModel
from thermal_bell.errors import FrameFormatError
from thermal_bell.frame_io import HEADER, read_header, read_spkl, sidecar_path, write_spkl
from thermal_bell.speckle_sim import Geometry, generate_frames


class TestFrameFiles(unittest.TestCase):

    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()
        self.frames = generate_frames(Geometry(width=48, height=3), SourceModel(), 300, tau_ratio=0.06, substeps=2,
                                      n_subsources=4, seed=12)
        self.path = os.path.join(self.tmpdir, 'frames.spkl')
        write_spkl(self.path, self.frames)

    def tearDown(self):
        shutil.rmtree(self.tmpdir)

    def test_header(self):
        self.assertEqual(HEADER.size, 36)
        n_frames, height, width, tau_ratio, seed = read_header(self.path)
        self.assertEqual((n_frames, height, width), (300, 3, 48))
        self.assertEqual(tau_ratio, 0.06)
        self.assertEqual(seed, 12)
        self.assertEqual(os.path.getsize(self.path), 36 + 4 * 300 * 3 * 48)

    def test_read_back(self):
        frames = read_spkl(self.path)
        np.testing.assert_array_equal(frames.frames, self.frames.frames)
        self.assertEqual(frames.meta, self.frames.meta)
        self.assertEqual(frames.meta.geometry.width, 48)

    def test_rewrite_is_byte_identical(self):
        other = os.path.join(self.tmpdir, 'copy.spkl')
        write_spkl(other, read_spkl(self.path))
        for a, b in ((self.path, other), (sidecar_path(self.path), sidecar_path(other))):
            with open(a, 'rb') as fa, open(b, 'rb') as fb:
                self.assertEqual(fa.read(), fb.read())

    def test_bad_magic(self):
        with open(self.path, 'r+b') as f:
            f.write(b'XXXX')
        with self.assertRaises(FrameFormatError):
            read_spkl(self.path)

    def test_truncated_file(self):
        with open(self.path, 'r+b') as f:
            f.truncate(HEADER.size + 100)
        with self.assertRaises(FrameFormatError):
            read_spkl(self.path)
        with open(self.path, 'r+b') as f:
            f.truncate(10)
        with self.assertRaises(FrameFormatError):
            read_header(self.path)

    def test_missing_sidecar(self):
        os.remove(sidecar_path(self.path))
        with self.assertLogs('thermal_bell.frame_io', 'WARNING'):
            frames = read_spkl(self.path)
        self.assertEqual((frames.meta.geometry.height, frames.meta.geometry.width), (3, 48))
        self.assertEqual(frames.meta.seed, 12)

    def test_inconsistent_sidecar(self):
        with open(sidecar_path(self.path)) as f:
            data = json.load(f)
        data['geometry']['width'] = 64
        with open(sidecar_path(self.path), 'w') as f:
            json.dump(data, f)
        with self.assertRaises(FrameFormatError):
            read_spkl(self.path)

    def test_missing_file(self):
        with self.assertRaises(OSError):
            read_spkl(os.path.join(self.tmpdir, 'absent.spkl'))


if __name__ == '__main__':
    unittest.main()
