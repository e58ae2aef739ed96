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

import csv
import json
import logging
import math
from datetime import datetime, timezone

from .frame_io import dump_json

logger = logging.getLogger(__name__)


class Command(object):
    """
    Base class from which subcommands should inherit.

    A subcommand declares its flags in :meth:`add_arguments`, maps parsed flags
    onto dotted configuration fields in :meth:`overrides` and does its work in
    :meth:`run`, which receives the merged :class:`~thermal_bell.config.RunConfig`.
    """
    def __init__(self):
        self.setup()

        if not hasattr(self, 'name'):
            self.name = type(self).__name__.lower()
        if not hasattr(self, 'help'):
            self.help = ''
        if not hasattr(self, 'default_out'):
            self.default_out = '%s.out' % self.name

    def setup(self):
        """
        Called during ``__init__``. Subclasses should set ``self.name``,
        ``self.help`` and ``self.default_out`` here.
        """
        pass

    def add_arguments(self, parser):
        """
        Add the subcommand's own flags to ``parser``.

        :type parser: argparse.ArgumentParser
        """
        pass

    def overrides(self, args):
        """
        Most of the flag handling should be done here.

        :returns: dict of dotted configuration field names to flag values;
                  ``None`` values leave the configured value untouched
        """
        return {}

    def run(self, config, out):
        """
        Do the work and write the primary output to ``out``.

        :type config: thermal_bell.config.RunConfig
        :returns: process exit code
        """
        raise NotImplementedError

    def register(self, subparsers, parents):
        parser = subparsers.add_parser(self.name, help=self.help, description=self.help, parents=parents)
        self.add_arguments(parser)
        parser.set_defaults(command=self)
        return parser

    def execute(self, config):
        """
        Run the command and write the configuration and run-record sidecars.
        """
        out = config.out or self.default_out
        started = datetime.now(timezone.utc)
        dump_json(config.to_dict(), '%s.config.json' % out)
        code = self.run(config, out)
        dump_json({
            'command': self.name,
            'started': started.isoformat(),
            'finished': datetime.now(timezone.utc).isoformat(),
            'exit_code': code,
        }, '%s.run.json' % out)
        return code


def write_csv(path, units, header, rows):
    """
    Write ``rows`` below a ``# units:`` comment line and a header row.

    :param units: column name to unit, e.g. ``{'delta_rad': 'rad'}``
    :type units: dict
    """
    with open(path, 'w', newline='') as f:
        f.write('# units: %s\n' % ', '.join('%s=%s' % (name, units.get(name, 'dimensionless'))
                                          for name in header))
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(header)
        for row in rows:
            writer.writerow([_format(value) for value in row])
    logger.info("wrote %d rows to %s", len(rows), path)


def write_json(path, data):
    with open(path, 'w') as f:
        json.dump(_finite(data), f, indent=2, sort_keys=True)
        f.write('\n')
    logger.info("wrote %s", path)


def _format(value):
    if isinstance(value, float):
        return repr(float(value))
    return value


def _finite(data):
    if isinstance(data, dict):
        return dict((k, _finite(v)) for k, v in data.items())
    if isinstance(data, (list, tuple)):
        return [_finite(v) for v in data]
    if isinstance(data, float) and not math.isfinite(data):
        return None
    return data
