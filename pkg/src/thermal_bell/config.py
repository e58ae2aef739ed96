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
.. module:: config
    :synopsis: Run configuration with JSON file and command-line overrides.

Precedence, lowest first: the defaults of :class:`RunConfig`, the JSON file
given with ``--config``, command-line flags. The effective configuration is
written next to every primary output so the file alone reproduces the run::

    {
      "m": "1..8",
      "source": {"kind": "TLS", "mean_photons": 1.0},
      "geometry": {"propagation": 0.3, "pixel_pitch": 5.5e-06},
      "simulate": {"n_frames": 100000, "tau_ratio": 0.06}
    }
"""

import json
import re
import logging
from dataclasses import asdict, dataclass, field, fields, replace

from .analytic_core import SourceKind, SourceModel
from .bell_harness import Bound, ModelTag
from .errors import ConfigError
from .speckle_sim import Geometry
from .util import parse_floats, parse_range

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SourceConfig:
    kind: str = SourceKind.TLS.value
    mean_photons: float = 1.0
    field_amp: float = 1.0


@dataclass(frozen=True)
class AnalyticConfig:
    curve: str = 'visibility'
    oracle: bool = False
    delta_points: int = 64


@dataclass(frozen=True)
class BellConfig:
    model_tag: str = ModelTag.FOUR_TERM_TLS.value
    visibility: float = None
    bound: str = Bound.UPPER.value
    grid_step: float = None


@dataclass(frozen=True)
class QuantumConfig:
    mean_photons: str = '0.05,0.2'
    deltas: str = '0.0,0.7'
    dim: int = None
    tol: float = 1e-10


@dataclass(frozen=True)
class SimulateConfig:
    n_frames: int = 100000
    tau_ratio: float = 0.06
    substeps: int = 8
    n_subsources: int = 64
    balance: float = 1.0
    gain: float = None
    workers: int = None


@dataclass(frozen=True)
class CorrelateConfig:
    frames: str = None
    x1: int = None
    n_boot: int = 200
    block: int = 64
    bell: bool = False
    decorrelate: bool = False
    sigma_margin: float = 2.0
    curves: bool = False


SECTIONS = {
    'geometry': Geometry,
    'source': SourceConfig,
    'analytic': AnalyticConfig,
    'bell': BellConfig,
    'quantum': QuantumConfig,
    'simulate': SimulateConfig,
    'correlate': CorrelateConfig,
}

CHOICES = {
    'source.kind': [k.value for k in SourceKind],
    'analytic.curve': ['visibility', 'correlations', 'probabilities'],
    'bell.model_tag': [t.value for t in ModelTag],
    'bell.bound': [b.value for b in Bound],
}


@dataclass(frozen=True)
class RunConfig:
    """
    Every parameter a command uses. ``m`` is a range expression such as ``1..8``.
    """
    seed: int = 0
    out: str = None
    m: str = '1..8'
    geometry: Geometry = field(default_factory=Geometry)
    source: SourceConfig = field(default_factory=SourceConfig)
    analytic: AnalyticConfig = field(default_factory=AnalyticConfig)
    bell: BellConfig = field(default_factory=BellConfig)
    quantum: QuantumConfig = field(default_factory=QuantumConfig)
    simulate: SimulateConfig = field(default_factory=SimulateConfig)
    correlate: CorrelateConfig = field(default_factory=CorrelateConfig)

    @property
    def m_values(self):
        return parse_range(self.m)

    @property
    def source_model(self):
        return SourceModel(SourceKind(self.source.kind), self.source.mean_photons, self.source.field_amp)

    @classmethod
    def from_dict(cls, data):
        """
        Build a validated configuration from nested dictionaries.

        :raises ConfigError: naming the first offending field
        """
        if not isinstance(data, dict):
            raise ConfigError("configuration must be a JSON object")
        top = {}
        for key, value in data.items():
            if key in SECTIONS:
                top[key] = _section(key, SECTIONS[key], value)
            elif key in ('seed', 'out', 'm'):
                top[key] = _coerce(key, _TOP_TYPES[key], value)
            else:
                raise ConfigError("unknown configuration key", field=key)
        config = cls(**top)
        config.validate()
        return config

    def to_dict(self):
        return asdict(self)

    def merged(self, overrides):
        """
        A copy with ``overrides`` (dotted names, ``None`` values skipped) applied.
        """
        data = self.to_dict()
        for name, value in overrides.items():
            if value is None:
                continue
            section, _, key = name.rpartition('.')
            target = data[section] if section else data
            target[key] = value
        return RunConfig.from_dict(data)

    def validate(self):
        """
        :raises ConfigError: for out-of-range values
        """
        for name, choices in CHOICES.items():
            section, key = name.split('.')
            value = getattr(getattr(self, section), key)
            if value not in choices:
                raise ConfigError("'%s' is not one of %s" % (value, ', '.join(choices)), field=name)
        if self.seed < 0:
            raise ConfigError("seed must be >= 0", field='seed')
        try:
            m_values = parse_range(self.m)
        except ValueError as e:
            raise ConfigError(str(e), field='m')
        if min(m_values) < 1:
            raise ConfigError("m must be >= 1", field='m')
        positive = ('geometry.wavelength', 'geometry.slit_separation', 'geometry.slit_width',
                    'geometry.propagation', 'geometry.pixel_pitch', 'geometry.width', 'geometry.height',
                    'source.field_amp', 'analytic.delta_points',
                    'simulate.n_frames', 'simulate.substeps', 'simulate.n_subsources',
                    'correlate.block', 'quantum.tol')
        for name in positive:
            section, key = name.split('.')
            if not getattr(getattr(self, section), key) > 0:
                raise ConfigError("must be positive", field=name)
        non_negative = ('source.mean_photons', 'simulate.tau_ratio', 'simulate.balance', 'correlate.n_boot',
                        'correlate.sigma_margin')
        for name in non_negative:
            section, key = name.split('.')
            if not getattr(getattr(self, section), key) >= 0:
                raise ConfigError("must be >= 0", field=name)
        if self.bell.visibility is not None and not 0.0 <= self.bell.visibility <= 1.0:
            raise ConfigError("must lie in [0, 1]", field='bell.visibility')
        if self.simulate.gain is not None and not self.simulate.gain > 0:
            raise ConfigError("must be positive", field='simulate.gain')
        if self.quantum.dim is not None and self.quantum.dim < 2:
            raise ConfigError("must be >= 2", field='quantum.dim')
        for name in ('quantum.mean_photons', 'quantum.deltas'):
            try:
                parse_floats(getattr(self.quantum, name.split('.')[1]))
            except ValueError as e:
                raise ConfigError(str(e), field=name)
        return self


_TOP_TYPES = {'seed': int, 'out': str, 'm': str}


def _coerce(name, kind, value):
    if value is None:
        return None
    if kind is bool:
        if not isinstance(value, bool):
            raise ConfigError("expected true or false, got %r" % (value,), field=name)
        return value
    if kind is str:
        if isinstance(value, (list, tuple)):
            return ','.join(str(v) for v in value)
        return str(value)
    if isinstance(value, bool):
        raise ConfigError("expected a number, got %r" % (value,), field=name)
    try:
        converted = kind(value)
    except (TypeError, ValueError):
        raise ConfigError("expected %s, got %r" % (kind.__name__, value), field=name)
    if kind is int and converted != value:
        raise ConfigError("expected an integer, got %r" % (value,), field=name)
    return converted


def _field_kind(f):
    kind = f.type
    if isinstance(kind, str):
        kind = {'int': int, 'float': float, 'str': str, 'bool': bool}[kind]
    return kind


def _section(name, cls, data):
    if isinstance(data, cls):
        return data
    if not isinstance(data, dict):
        raise ConfigError("expected an object", field=name)
    known = dict((f.name, f) for f in fields(cls))
    values = {}
    for key, value in data.items():
        if key not in known:
            raise ConfigError("unknown configuration key", field='%s.%s' % (name, key))
        values[key] = _coerce('%s.%s' % (name, key), _field_kind(known[key]), value)
    return replace(cls(), **values)


def _field_line(text, name):
    """
    Line of the key of dotted field ``name`` in a JSON document, each part
    searched after the previous one, or ``None`` if it does not appear.
    """
    position, match = 0, None
    for key in name.split('.'):
        match = re.compile(r'"%s"\s*:' % re.escape(key)).search(text, position)
        if match is None:
            return None
        position = match.end()
    return text.count('\n', 0, match.start()) + 1


def load_config(path):
    """
    Read a JSON configuration file.

    :raises ConfigError: with the line number for JSON syntax errors and for
                         invalid fields that appear in the file
    :raises OSError: if the file cannot be read
    """
    with open(path) as f:
        text = f.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigError(e.msg, field=path, line=e.lineno)
    logger.debug("loaded configuration from %s", path)
    try:
        return RunConfig.from_dict(data)
    except ConfigError as e:
        if e.field is None or e.line is not None:
            raise
        raise ConfigError(e.reason, field=e.field, line=_field_line(text, e.field))
