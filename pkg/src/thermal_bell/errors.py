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
Exception types raised by thermal_bell.

Everything numeric derives from ``ValueError`` and file format problems from
``OSError``, so callers that only care about the broad category can keep
catching the built-in types.
"""


class ConfigError(ValueError):
    """
    Invalid run configuration.

    :param msg: Human readable description.
    :type msg: str
    :param field: Dotted name of the offending field, e.g. ``geometry.wavelength``
    :type field: str
    :param line: Line number in the JSON document, if known
    :type line: int
    """
    def __init__(self, msg, field=None, line=None):
        self.reason = msg
        self.field = field
        self.line = line
        if field is not None:
            msg = "%s: %s" % (field, msg)
        if line is not None:
            msg = "line %d: %s" % (line, msg)
        super(ConfigError, self).__init__(msg)


class NumericGuardError(ValueError):
    """
    Base class for guards that refuse to return a number that cannot be trusted.
    """
    pass


class TruncationError(NumericGuardError):
    """
    The Fock cutoff is too small for the requested computation.

    :param msg: Human readable description.
    :type msg: str
    :param suggested_dim: A cutoff that is expected to pass the tail check.
    :type suggested_dim: int
    """
    def __init__(self, msg, suggested_dim=None):
        self.suggested_dim = suggested_dim
        if suggested_dim is not None:
            msg = "%s (try dim >= %d)" % (msg, suggested_dim)
        super(TruncationError, self).__init__(msg)


class SamplingError(NumericGuardError):
    pass


class ZeroProbabilityError(NumericGuardError):
    pass


class FitError(NumericGuardError):
    pass


class InsufficientFramesError(NumericGuardError):
    pass


class FrameFormatError(OSError):
    pass
