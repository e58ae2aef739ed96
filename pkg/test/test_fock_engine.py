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

import cmath
import math
import unittest

from thermal_bell.analytic_core import DetectorSetting, SettingPair, SourceKind, SourceModel, gm1_tls_set, visibility_tls
from thermal_bell.errors import TruncationError, ZeroProbabilityError
from thermal_bell.fock_engine import (auto_dim, conditioned_thermal, cross_corr, expect_gm1, mode_occupations,
                                      project_m, spe_state, thermal_state)


class TestStates(unittest.TestCase):

    def test_thermal_state(self):
        state = thermal_state(0.2, 15)
        self.assertTrue(state.check())
        self.assertLess(state.trace_deficit, 1e-8)
        _, n1, n2 = mode_occupations(state, 0.0)
        self.assertAlmostEqual(n1, 0.2, places=9)
        self.assertAlmostEqual(n2, 0.2, places=9)

    def test_thermal_state_is_mode_symmetric(self):
        rho = thermal_state(0.1, 10).matrix
        self.assertLess((rho - rho.permute([1, 0])).norm(), 1e-14)

    def test_vacuum(self):
        state = thermal_state(0.0, 4)
        self.assertAlmostEqual(state.matrix.full()[0, 0].real, 1.0)
        with self.assertRaises(ZeroProbabilityError):
            project_m(state, 0.0, 1)

    def test_truncation_guard(self):
        with self.assertRaises(TruncationError) as cm:
            thermal_state(1.0, 5)
        self.assertGreater(cm.exception.suggested_dim, 5)
        with self.assertRaises(ValueError):
            thermal_state(0.1, 1)

    def test_auto_dim_grows_with_m(self):
        self.assertGreaterEqual(auto_dim(0.2, 4), auto_dim(0.2, 1))
        self.assertGreaterEqual(auto_dim(0.2, 1), 4)


class TestProjection(unittest.TestCase):

    def test_cross_correlation_law(self):
        for nbar in (0.05, 0.2):
            for m in range(1, 5):
                for delta1 in (0.0, 0.7):
                    state = conditioned_thermal(nbar, delta1, m)
                    self.assertTrue(state.check())
                    self.assertFalse(state.under_truncated)
                    c = cross_corr(state)
                    self.assertAlmostEqual(abs(c), visibility_tls(m), delta=1e-8)
                    expected = cmath.exp(-1j * delta1) * visibility_tls(m)
                    self.assertLess(abs(c - expected), 1e-8)

    def test_occupations_after_detection(self):
        nbar = 0.1
        for m in (1, 3):
            state = conditioned_thermal(nbar, 0.3, m)
            detected, n1, n2 = mode_occupations(state, 0.3)
            self.assertAlmostEqual(detected / ((m + 1) * nbar), 1.0, delta=1e-8)
            self.assertAlmostEqual(n1 / ((m + 2) * nbar / 2.0), 1.0, delta=1e-8)
            self.assertAlmostEqual(n2 / ((m + 2) * nbar / 2.0), 1.0, delta=1e-8)

    def test_cutoff_is_raised_once(self):
        with self.assertLogs('thermal_bell.fock_engine', 'WARNING'):
            state = conditioned_thermal(0.2, 0.0, 2, dim=11)
        self.assertGreater(state.dim, 11)
        self.assertFalse(state.under_truncated)

    def test_cutoff_too_small(self):
        with self.assertRaises(TruncationError):
            conditioned_thermal(1.0, 0.0, 4, dim=6)

    def test_uncorrelated_without_detection(self):
        self.assertLess(abs(cross_corr(thermal_state(0.2, 15))), 1e-12)


class TestCorrelations(unittest.TestCase):

    def test_single_photon_emitters(self):
        state = spe_state()
        for delta in (0.0, 1.0, math.pi):
            self.assertAlmostEqual(expect_gm1(state, 1, 0.0, -delta), 2.0 * (1.0 + math.cos(delta)), places=12)

    def test_second_order_thermal(self):
        nbar = 0.3
        state = thermal_state(nbar, auto_dim(nbar, 3))
        for delta in (0.0, 0.5 * math.pi, math.pi):
            value = expect_gm1(state, 1, 0.0, -delta)
            expected = 6.0 * nbar ** 2 * (1.0 + math.cos(delta) / 3.0)
            self.assertAlmostEqual(value / expected, 1.0, delta=1e-8)

    def test_higher_orders_agree_with_closed_form(self):
        nbar = 0.2
        model = SourceModel(SourceKind.TLS, nbar)
        for m in range(2, 5):
            state = thermal_state(nbar, auto_dim(nbar, m + 2))
            for delta in (0.0, 0.5 * math.pi, math.pi):
                fock = expect_gm1(state, m, 0.0, -delta)
                closed = gm1_tls_set(m, DetectorSetting(0.0), DetectorSetting(-delta), model)[SettingPair.D1D2]
                self.assertAlmostEqual(fock / closed, 1.0, delta=1e-6)

    def test_cutoff_cannot_hold_photons(self):
        with self.assertRaises(TruncationError):
            expect_gm1(spe_state(), 3, 0.0, 0.0)


if __name__ == '__main__':
    unittest.main()
