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
.. module:: commands
    :synopsis: The subcommands of the thermal_bell command line.

This module collects the standard subcommands. Each one is a
:class:`~thermal_bell.command.Command` and is handed to the parser in
:func:`thermal_bell.cli.build_parser`. A custom subcommand only needs to
implement :func:`add_arguments`, :func:`overrides` and :func:`run`::

    from thermal_bell.command import Command, write_json
    from thermal_bell.analytic_core import visibility_tls

    class VisibilityCommand(Command):
        def setup(self):
            self.name = 'vis'
            self.default_out = 'vis.json'

        def run(self, config, out):
            write_json(out, dict((m, visibility_tls(m)) for m in config.m_values))
            return 0
"""

from .analytic_command import AnalyticCommand
from .bell_command import BellCommand
from .correlate_command import CorrelateCommand
from .quantum_command import QuantumCommand
from .simulate_command import SimulateCommand


def default_commands():
    return [AnalyticCommand(), BellCommand(), QuantumCommand(), SimulateCommand(), CorrelateCommand()]
