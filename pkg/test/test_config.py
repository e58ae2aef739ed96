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

import os
import shutil
import tempfile
import unittest

from thermal_bell.analytic_core import SourceKind
from thermal_bell.config import RunConfig, load_config
from thermal_bell.errors import ConfigError
from thermal_bell.util import parse_floats, parse_range


class TestRunConfig(unittest.TestCase):

    def test_defaults(self):
        config = RunConfig().validate()
        self.assertEqual(config.m_values, list(range(1, 9)))
        self.assertEqual(config.source_model.kind, SourceKind.TLS)
        self.assertEqual(config.geometry.width, 160)
        self.assertEqual(config.simulate.tau_ratio, 0.06)

    def test_round_trip(self):
        config = RunConfig().merged({'seed': 4, 'simulate.n_frames': 500, 'geometry.propagation': 0.5})
        self.assertEqual(RunConfig.from_dict(config.to_dict()), config)
        self.assertEqual(config.geometry.propagation, 0.5)

    def test_overrides_skip_none(self):
        base = RunConfig.from_dict({'m': '2..3', 'bell': {'bound': 'lower'}})
        merged = base.merged({'m': None, 'bell.bound': 'upper', 'seed': 7})
        self.assertEqual(merged.m, '2..3')
        self.assertEqual(merged.bell.bound, 'upper')
        self.assertEqual(merged.seed, 7)

    def test_unknown_keys(self):
        with self.assertRaises(ConfigError) as cm:
            RunConfig.from_dict({'geometry': {'wavelenght': 1e-6}})
        self.assertEqual(cm.exception.field, 'geometry.wavelenght')
        with self.assertRaises(ConfigError):
            RunConfig.from_dict({'frames': 10})

    def test_type_errors(self):
        with self.assertRaises(ConfigError) as cm:
            RunConfig.from_dict({'simulate': {'n_frames': 'many'}})
        self.assertEqual(cm.exception.field, 'simulate.n_frames')
        with self.assertRaises(ConfigError):
            RunConfig.from_dict({'simulate': {'n_frames': 10.5}})
        with self.assertRaises(ConfigError):
            RunConfig.from_dict({'correlate': {'bell': 1}})
        with self.assertRaises(ConfigError):
            RunConfig.from_dict({'seed': True})

    def test_value_errors(self):
        cases = [
            {'m': '5..1'},
            {'m': '0..3'},
            {'seed': -1},
            {'source': {'kind': 'LED'}},
            {'geometry': {'pixel_pitch': 0.0}},
            {'simulate': {'tau_ratio': -0.1}},
            {'bell': {'visibility': 1.5}},
            {'quantum': {'dim': 1}},
            {'quantum': {'deltas': ''}},
        ]
        for data in cases:
            with self.assertRaises(ConfigError):
                RunConfig.from_dict(data)


class TestConfigFile(unittest.TestCase):

    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()
        self.path = os.path.join(self.tmpdir, 'run.json')

    def tearDown(self):
        shutil.rmtree(self.tmpdir)

    def test_load(self):
        with open(self.path, 'w') as f:
            f.write('{\n  "m": "1..7",\n  "source": {"mean_photons": 0.5},\n  "simulate": {"n_frames": 2000}\n}\n')
        config = load_config(self.path)
        self.assertEqual(config.m_values, list(range(1, 8)))
        self.assertEqual(config.source.mean_photons, 0.5)
        self.assertEqual(config.simulate.n_frames, 2000)

    def test_syntax_error_has_line(self):
        with open(self.path, 'w') as f:
            f.write('{\n  "m": "1..7",\n  "seed": \n}\n')
        with self.assertRaises(ConfigError) as cm:
            load_config(self.path)
        self.assertEqual(cm.exception.line, 4)

    def test_field_error_has_line(self):
        with open(self.path, 'w') as f:
            f.write('{\n  "m": "1..3",\n  "simulate": {\n    "n_frames": "many"\n  }\n}\n')
        with self.assertRaises(ConfigError) as cm:
            load_config(self.path)
        self.assertEqual(cm.exception.field, 'simulate.n_frames')
        self.assertEqual(cm.exception.line, 4)

    def test_range_error_has_line(self):
        with open(self.path, 'w') as f:
            f.write('{\n  "seed": -1\n}\n')
        with self.assertRaises(ConfigError) as cm:
            load_config(self.path)
        self.assertEqual(cm.exception.field, 'seed')
        self.assertEqual(cm.exception.line, 2)
        self.assertIn('line 2', str(cm.exception))

    def test_missing_file(self):
        with self.assertRaises(OSError):
            load_config(os.path.join(self.tmpdir, 'absent.json'))


class TestParsers(unittest.TestCase):

    def test_parse_range(self):
        self.assertEqual(parse_range('1..3'), [1, 2, 3])
        self.assertEqual(parse_range('5'), [5])
        self.assertEqual(parse_range('1,4, 6'), [1, 4, 6])
        with self.assertRaises(ValueError):
            parse_range('4..2')
        with self.assertRaises(ValueError):
            parse_range('a..b')

    def test_parse_floats(self):
        self.assertEqual(parse_floats('0.05,0.2'), [0.05, 0.2])
        with self.assertRaises(ValueError):
            parse_floats(' ')


if __name__ == '__main__':
    unittest.main()
