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
import math
import sys

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi


def report_info(msg, stream=None):
    """
    Logs a message with ``logger.info`` and echoes it to the user.

    :param msg: Message to display.
    :type msg: str
    :param stream: Where to echo the message, defaults to ``sys.stdout``
    :type stream: file
    """
    logger.info(msg)
    print(msg, file=stream if stream is not None else sys.stdout)


def report_warn(msg, stream=None):
    """
    Logs a message with ``logger.warning`` and echoes it to the user.

    :param msg: Message to display.
    :type msg: str
    :param stream: Where to echo the message, defaults to ``sys.stderr``
    :type stream: file
    """
    logger.warning(msg)
    print('warning: %s' % msg, file=stream if stream is not None else sys.stderr)


def report_err(msg, stream=None):
    """
    Logs a message with ``logger.error`` and echoes it to the user.

    :param msg: Message to display.
    :type msg: str
    :param stream: Where to echo the message, defaults to ``sys.stderr``
    :type stream: file
    """
    logger.error(msg)
    print('error: %s' % msg, file=stream if stream is not None else sys.stderr)


def configure_logging(verbosity=0):
    """
    Install a single stderr handler on the package logger.

    :param verbosity: 0 for warnings only, 1 for info, 2 or more for debug.
    :type verbosity: int
    """
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    root = logging.getLogger('thermal_bell')
    root.setLevel(level)
    if not root.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter('[%(levelname)s] %(name)s: %(message)s'))
        root.addHandler(handler)


def check_unit_interval(name, value):
    """
    Raise ``ValueError`` unless ``0 <= value <= 1``.

    :returns: ``value`` as a float
    """
    value = float(value)
    if not 0.0 <= value <= 1.0:
        raise ValueError("%s must lie in [0, 1], got %s" % (name, value))
    return value


def check_positive(name, value):
    value = float(value)
    if not value > 0.0 or math.isinf(value):
        raise ValueError("%s must be positive and finite, got %s" % (name, value))
    return value


def wrap_phase(delta):
    """
    Reduce a phase to [0, 2*pi) for display. Never used for arithmetic.
    """
    return math.fmod(math.fmod(delta, TWO_PI) + TWO_PI, TWO_PI)


def parse_range(text):
    """
    Parse an integer range such as ``1..8``, ``3`` or ``1,2,5``.

    :param text: The range expression.
    :type text: str
    :returns: list of int, in the order given
    :raises ValueError: if the expression is malformed or empty
    """
    text = str(text).strip()
    values = []
    for part in text.split(','):
        part = part.strip()
        if not part:
            continue
        if '..' in part:
            lo, hi = part.split('..', 1)
            lo, hi = int(lo), int(hi)
            values.extend(range(lo, hi + 1))
        else:
            values.append(int(part))
    if not values:
        raise ValueError("empty range '%s'" % text)
    return values


def parse_floats(text):
    """
    Parse a comma separated list of floats, e.g. ``0.05,0.2``.
    """
    values = [float(p) for p in str(text).split(',') if p.strip()]
    if not values:
        raise ValueError("empty list '%s'" % text)
    return values
