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
.. module:: cli
    :synopsis: ``thermal_bell`` command line entry point.

Exit codes: 0 success, 2 configuration or usage error, 3 numeric guard
(truncation, sampling, fit, frame count), 4 I/O or frame format error.
"""

import argparse
import logging
import sys

from . import __version__
from .commands import default_commands
from .config import RunConfig, load_config
from .errors import ConfigError, NumericGuardError
from .util import configure_logging, report_err

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERIC = 3
EXIT_IO = 4


def build_parser(commands=None):
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', help='JSON configuration file')
    common.add_argument('--seed', type=int, help='random seed')
    common.add_argument('--out', help='primary output file')
    common.add_argument('-v', '--verbose', action='count', default=0, help='-v for info, -vv for debug')

    parser = argparse.ArgumentParser(prog='thermal_bell',
                                     description='Bell tests with higher order correlations of thermal light')
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    subparsers = parser.add_subparsers(dest='command_name', metavar='COMMAND')
    subparsers.required = True
    for command in commands if commands is not None else default_commands():
        command.register(subparsers, [common])
    return parser


def resolve_config(args):
    """
    Defaults, then the ``--config`` file, then command-line flags.
    """
    config = load_config(args.config) if args.config else RunConfig()
    overrides = {'seed': args.seed, 'out': args.out}
    overrides.update(args.command.overrides(args))
    return config.merged(overrides)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)
    try:
        config = resolve_config(args)
        return args.command.execute(config)
    except ConfigError as e:
        report_err(str(e))
        return EXIT_CONFIG
    except NumericGuardError as e:
        report_err(str(e))
        return EXIT_NUMERIC
    except OSError as e:
        report_err(str(e))
        return EXIT_IO
    except ValueError as e:
        report_err(str(e))
        return EXIT_CONFIG


if __name__ == '__main__':
    sys.exit(main())
