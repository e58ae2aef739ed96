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
.. module:: speckle_sim
    :synopsis: Synthetic camera frames of two pseudothermal slit sources.

Each slit is illuminated by a rotating-ground-glass style source: a set of
sub-sources spread evenly across the slit whose complex amplitudes follow a
stationary Gauss-Markov process with field autocorrelation
``exp(-dt / tau_c)``. A frame integrates ``|E(x)|**2`` over ``substeps``
samples of the camera integration window ``tau_i = tau_ratio * tau_c``.

The slits are long along the camera rows, so in the Fraunhofer plane every
row of a frame carries the same intensity profile. Continuous frames are
therefore stored once per frame and broadcast over the rows;
:func:`photonize` turns them into independent photon counts per pixel.

Generation runs over blocks of :data:`BLOCK_FRAMES` frames, each seeded from
``SeedSequence(seed, spawn_key=(block,))``, so a run is reproducible
regardless of the number of worker threads and a shorter run is a prefix of a
longer one.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, replace

import numpy as np
from scipy import special

from .analytic_core import SourceKind
from .errors import SamplingError
from .util import TWO_PI, check_positive

logger = logging.getLogger(__name__)

BLOCK_FRAMES = 256
MIN_PERIOD_PIXELS = 16.0


@dataclass(frozen=True)
class Geometry:
    """
    Double slit and camera. Lengths in metres, sizes in pixels.
    """
    wavelength: float = 532e-9
    slit_separation: float = 200e-6
    slit_width: float = 25e-6
    propagation: float = 0.3
    pixel_pitch: float = 5.5e-6
    width: int = 160
    height: int = 9

    @property
    def fringe_period(self):
        """
        ``lambda z / d`` in metres.
        """
        return self.wavelength * self.propagation / self.slit_separation

    @property
    def period_pixels(self):
        return self.fringe_period / self.pixel_pitch

    def validate(self):
        """
        :raises ValueError: for non-positive lengths or sizes
        :raises SamplingError: if a fringe period spans fewer than 16 pixels
        """
        for name in ('wavelength', 'slit_separation', 'slit_width', 'propagation', 'pixel_pitch'):
            check_positive(name, getattr(self, name))
        if int(self.width) < 2 or int(self.height) < 1:
            raise ValueError("frame must be at least 2 x 1 pixels, got %s x %s" % (self.width, self.height))
        if self.period_pixels < MIN_PERIOD_PIXELS:
            raise SamplingError("fringe period of %.2f pixels is under-resolved (need >= %g)"
                                % (self.period_pixels, MIN_PERIOD_PIXELS))
        return self

    def abscissa(self, column):
        """
        Pixel-centre position in metres, measured from the optical axis at the frame centre.
        """
        return (np.asarray(column, dtype=float) - 0.5 * (self.width - 1)) * self.pixel_pitch

    def phase(self, column):
        """
        Optical phase ``delta(x) = 2 pi d x / (lambda z)`` of a column.
        """
        return TWO_PI * self.slit_separation * self.abscissa(column) / (self.wavelength * self.propagation)

    def envelope(self, column):
        """
        Single slit diffraction envelope ``sinc**2(pi a x / (lambda z))``.
        """
        return np.sinc(self.slit_width * self.abscissa(column) / (self.wavelength * self.propagation)) ** 2

    def column_for_phase(self, target, near=None):
        """
        The column whose phase is closest to ``target`` modulo 2 pi; among
        equally good columns the one closest to ``near`` (default: the centre).

        :returns: ``(column, phase_error)``
        """
        columns = np.arange(self.width)
        error = np.remainder(self.phase(columns) - target + math.pi, TWO_PI) - math.pi
        near = 0.5 * (self.width - 1) if near is None else near
        best = np.lexsort((np.abs(columns - near), np.round(np.abs(error), 12)))[0]
        return int(best), float(error[best])

    def to_dict(self):
        return asdict(self)


@dataclass(frozen=True)
class FrameMeta:
    seed: int
    tau_ratio: float
    substeps: int
    n_subsources: int
    geometry: Geometry
    source_kind: str = SourceKind.TLS.value
    mean_photons: float = 1.0
    field_amp: float = 1.0
    balance: float = 1.0
    gain: float = None

    def to_dict(self):
        data = asdict(self)
        data['fringe_period'] = self.geometry.fringe_period
        return data


class FrameSet(object):
    """
    A stack of frames, shape ``(n_frames, height, width)``, float32, with the
    parameters that produced it.
    """
    def __init__(self, frames, meta):
        frames = np.asarray(frames)
        if frames.ndim != 3:
            raise ValueError("frames must have shape (n_frames, height, width), got %s" % (frames.shape,))
        self._frames = frames
        self._meta = meta

    @property
    def frames(self):
        return self._frames

    @property
    def meta(self):
        return self._meta

    @property
    def n_frames(self):
        return self._frames.shape[0]

    @property
    def height(self):
        return self._frames.shape[1]

    @property
    def width(self):
        return self._frames.shape[2]

    def __len__(self):
        return self.n_frames

    def __getitem__(self, index):
        return self._frames[index]


def _block_rng(seed, block):
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=(block,))))


def _subsource_positions(geom, n_subsources):
    offsets = geom.slit_width * ((np.arange(n_subsources) + 0.5) / n_subsources - 0.5)
    half = 0.5 * geom.slit_separation
    return np.concatenate((-half + offsets, half + offsets))


def _propagator(geom, positions, balance):
    """
    Complex field at every column per unit amplitude of each emitter, shape (n_emitters, width).
    """
    x = geom.abscissa(np.arange(geom.width))
    scale = geom.wavelength * geom.propagation
    prop = np.exp(1j * TWO_PI * np.outer(positions, x) / scale)
    prop *= np.sinc(geom.slit_width * x / scale)[np.newaxis, :]
    prop[positions.size // 2:] *= math.sqrt(balance)
    return prop


def _thermal_block(rng, n, substeps, n_emitters, sigma, rho):
    draws = rng.standard_normal((n, substeps, n_emitters, 2))
    noise = (draws[..., 0] + 1j * draws[..., 1]) * (sigma / math.sqrt(2.0))
    amplitude = np.empty_like(noise)
    amplitude[:, 0] = noise[:, 0]
    innovation = math.sqrt(max(0.0, 1.0 - rho * rho))
    for step in range(1, substeps):
        amplitude[:, step] = rho * amplitude[:, step - 1] + innovation * noise[:, step]
    return amplitude


def _coherent_block(rng, n, substeps, modulus, dt):
    draws = rng.standard_normal((n, substeps, 2))
    phase = np.empty_like(draws)
    phase[:, 0] = TWO_PI * special.ndtr(draws[:, 0])
    steps = math.sqrt(2.0 * dt) * draws[:, 1:]
    phase[:, 1:] = phase[:, :1] + np.cumsum(steps, axis=1)
    return modulus * np.exp(1j * phase)


def generate_frames(geom, model, n_frames, tau_ratio=0.06, substeps=8, n_subsources=64, seed=0,
                    balance=1.0, workers=None):
    """
    Simulate ``n_frames`` camera frames.

    :param geom: slit and camera geometry
    :type geom: Geometry
    :param model: TLS (pseudothermal sub-sources) or Coherent (one emitter per slit)
    :type model: thermal_bell.analytic_core.SourceModel
    :param tau_ratio: camera integration time over source coherence time
    :type tau_ratio: float
    :param substeps: samples of the integration window
    :type substeps: int
    :param n_subsources: emitters per slit (TLS only)
    :type n_subsources: int
    :param balance: intensity of the second slit relative to the first, 0 blocks it
    :type balance: float
    :param workers: threads used for the blocks, ``None`` for one
    :type workers: int
    :rtype: FrameSet
    :raises SamplingError: if the fringe is under-resolved
    :raises ValueError: for invalid counts, ratios or source kinds
    """
    geom.validate()
    if int(n_frames) != n_frames or n_frames < 1:
        raise ValueError("n_frames must be a positive integer, got %s" % n_frames)
    if not tau_ratio >= 0.0 or math.isinf(tau_ratio):
        raise ValueError("tau_ratio must be finite and >= 0, got %s" % tau_ratio)
    if int(substeps) != substeps or substeps < 1:
        raise ValueError("substeps must be a positive integer, got %s" % substeps)
    if int(n_subsources) != n_subsources or n_subsources < 1:
        raise ValueError("n_subsources must be a positive integer, got %s" % n_subsources)
    if not 0.0 <= balance or math.isinf(balance):
        raise ValueError("balance must be finite and >= 0, got %s" % balance)
    if model.kind is SourceKind.SPE:
        raise ValueError("single photon emitters have no classical field to simulate")

    n_frames, substeps, n_subsources = int(n_frames), int(substeps), int(n_subsources)
    dt = tau_ratio / substeps
    coherent = model.kind is SourceKind.COHERENT
    if coherent:
        positions = np.array([-0.5 * geom.slit_separation, 0.5 * geom.slit_separation])
    else:
        positions = _subsource_positions(geom, n_subsources)
    prop = _propagator(geom, positions, balance)
    slit_power = model.field_amp ** 2 * model.photons

    def block(index):
        start = index * BLOCK_FRAMES
        n = min(BLOCK_FRAMES, n_frames - start)
        rng = _block_rng(seed, index)
        if coherent:
            amplitude = _coherent_block(rng, n, substeps, math.sqrt(slit_power), dt)
        else:
            amplitude = _thermal_block(rng, n, substeps, positions.size,
                                       math.sqrt(slit_power / n_subsources), math.exp(-dt))
        field = amplitude @ prop
        intensity = (field.real ** 2 + field.imag ** 2).mean(axis=1)
        logger.debug("generated frame block %d (%d frames)", index, n)
        return intensity.astype(np.float32)

    n_blocks = (n_frames + BLOCK_FRAMES - 1) // BLOCK_FRAMES
    if workers is None or workers <= 1:
        profiles = [block(i) for i in range(n_blocks)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            profiles = list(pool.map(block, range(n_blocks)))
    profiles = np.concatenate(profiles, axis=0)
    frames = np.broadcast_to(profiles[:, np.newaxis, :], (n_frames, geom.height, geom.width))

    meta = FrameMeta(seed=int(seed), tau_ratio=float(tau_ratio), substeps=substeps,
                     n_subsources=1 if coherent else n_subsources, geometry=geom,
                     source_kind=model.kind.value, mean_photons=model.photons,
                     field_amp=model.field_amp, balance=float(balance))
    logger.info("simulated %d frames of %d x %d pixels (tau_ratio=%g, %s)",
                n_frames, geom.height, geom.width, tau_ratio, model.kind.value)
    return FrameSet(frames, meta)


def photonize(frames, gain, seed):
    """
    Replace intensities by Poisson photon counts with mean ``gain * I``,
    drawn independently for every pixel.

    :type frames: FrameSet
    :rtype: FrameSet
    """
    check_positive('gain', gain)
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence(seed)))
    counts = np.empty(frames.frames.shape, dtype=np.float32)
    for start in range(0, frames.n_frames, BLOCK_FRAMES):
        chunk = frames.frames[start:start + BLOCK_FRAMES]
        counts[start:start + BLOCK_FRAMES] = rng.poisson(gain * chunk.astype(float))
    return FrameSet(counts, replace(frames.meta, gain=float(gain)))


def mean_profile(frames):
    """
    Ensemble mean intensity of every column, averaged over rows.
    """
    return frames.frames.mean(axis=(0, 1), dtype=np.float64)


def speckle_contrast(frames):
    """
    Standard deviation over mean of the intensity of every column, computed
    over frames and averaged over rows.
    """
    data = frames.frames
    mean = data.mean(axis=0, dtype=np.float64)
    std = data.std(axis=0, dtype=np.float64)
    with np.errstate(invalid='ignore', divide='ignore'):
        contrast = np.where(mean > 0.0, std / mean, 0.0)
    return contrast.mean(axis=0)
