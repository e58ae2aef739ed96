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
.. module:: correlator
    :synopsis: Normalized higher order intensity correlations from frame stacks.

The estimator of the (m+1)-th order correlation between ``m`` pixels in one
column ``x1`` (rows ``y1_rows``) and one pixel ``(x2, y2)`` is::

    g = < prod_i I(x1, y_i) * I(x2, y2) > / ( prod_i <I(x1, y_i)> * <I(x2, y2)> )

with averages over frames. Intensities are divided by their means before the
product is taken, products of six or more factors are formed in the log
domain, and the frame sum is accumulated per block of frames and finished
with :func:`math.fsum`. Standard errors come from a block bootstrap over
frames.
"""

import collections
import logging
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import curve_fit

from .analytic_core import CorrelationSet, SettingPair, probabilities_four, visibility_tls
from .bell_harness import AngleSet, ModelTag, statistic_from_probabilities
from .errors import FitError, InsufficientFramesError, SamplingError
from .util import TWO_PI

logger = logging.getLogger(__name__)

MIN_FRAMES = 100
LOG_DOMAIN_MIN_M = 6

# Detector columns of the two sides of a Bell test, each paired with its pi-shifted partner.
SIDES_1 = (('d1', 'p1'), ('d1p', 'p1p'))
SIDES_2 = (('d2', 'p2'), ('d2p', 'p2p'))

VisibilityRow = collections.namedtuple('VisibilityRow', ['m', 'v_theory', 'v_hat', 'stderr', 'fit_residual'])


@dataclass(frozen=True)
class CorrelationCurve:
    """
    ``values[k]`` is the normalized correlation with the single pixel at
    column ``x2_positions[k]``; ``deltas[k]`` is its phase relative to ``x1``.
    ``replicates``, when present, holds the bootstrap replicate curves, one
    per row.
    """
    m: int
    x1: int
    y1_rows: tuple
    y2: int
    x2_positions: np.ndarray
    deltas: np.ndarray
    values: np.ndarray
    stderr: np.ndarray
    n_frames_used: int
    replicates: np.ndarray = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        size = len(self.x2_positions)
        if not len(self.deltas) == len(self.values) == len(self.stderr) == size:
            raise ValueError("curve columns differ in length")
        if np.any(self.values < 0.0) or np.any(self.stderr < 0.0):
            raise ValueError("correlation values and errors must be >= 0")
        if self.replicates is not None and np.shape(self.replicates)[1:] != (size,):
            raise ValueError("replicate curves must have %d columns, got shape %s"
                             % (size, np.shape(self.replicates)))

    def rows(self):
        """
        ``(x2_pixel, delta_rad, g_value, stderr)`` tuples for CSV output.
        """
        return [(int(x), float(d), float(g), float(s))
                for x, d, g, s in zip(self.x2_positions, self.deltas, self.values, self.stderr)]


@dataclass(frozen=True)
class VisibilityEstimate:
    value: float
    stderr: float
    fit_residual: float
    amplitude: float = float('nan')
    phase: float = 0.0


def _block_starts(n_frames, block):
    return np.arange(0, n_frames, block)


def bootstrap_weights(n_blocks, n_boot, seed):
    """
    Resampling weights of a block bootstrap: ``weights[r, b]`` counts how
    often block ``b`` is drawn in replicate ``r``.
    """
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence(seed)))
    draws = rng.integers(0, n_blocks, size=(n_boot, n_blocks))
    weights = np.zeros((n_boot, n_blocks))
    rows = np.repeat(np.arange(n_boot), n_blocks)
    np.add.at(weights, (rows, draws.ravel()), 1.0)
    return weights


def _shuffle_shift(n_frames, seed):
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=(1,))))
    return int(rng.integers(1, n_frames))


def _column_means(data, starts):
    blocks = np.add.reduceat(data, starts, axis=0)
    return np.array([math.fsum(col) for col in blocks.T]) / data.shape[0]


def _normalized(data, starts):
    """
    Columns divided by their frame means.
    """
    means = _column_means(data, starts)
    if np.any(means <= 0.0):
        raise ValueError("a selected pixel has zero mean intensity")
    return data / means


def _product(u, m):
    if m >= LOG_DOMAIN_MIN_M:
        with np.errstate(divide='ignore'):
            return np.exp(np.log(u).sum(axis=1))
    return np.prod(u, axis=1)


def _resolve_y2(height, y1_rows, y2):
    if y2 is not None:
        return int(y2)
    for row in range(height):
        if row not in y1_rows:
            return row
    return y1_rows[0]


def _correlate(frames, m, x1, y1_rows, x2_scan, y2, block, weights, decorrelate, seed):
    """
    Point estimates and bootstrap replicates, shapes ``(k,)`` and ``(n_boot, k)``.
    """
    data = frames.frames
    n_frames = data.shape[0]
    starts = _block_starts(n_frames, block)
    u = _normalized(np.asarray(data[:, list(y1_rows), x1], dtype=np.float64), starts)
    v = _normalized(np.asarray(data[:, y2, :][:, x2_scan], dtype=np.float64), starts)
    if decorrelate:
        v = np.roll(v, _shuffle_shift(n_frames, seed), axis=0)
    w = _product(u, m)[:, np.newaxis] * v

    counts = np.diff(np.append(starts, n_frames)).astype(float)
    w_blocks = np.add.reduceat(w, starts, axis=0)
    values = np.array([math.fsum(col) for col in w_blocks.T]) / n_frames

    if weights is None:
        return values, None
    n_resampled = weights @ counts
    g_star = (weights @ w_blocks) / n_resampled[:, np.newaxis]
    u_star = (weights @ np.add.reduceat(u, starts, axis=0)) / n_resampled[:, np.newaxis]
    v_star = (weights @ np.add.reduceat(v, starts, axis=0)) / n_resampled[:, np.newaxis]
    replicates = g_star / (np.prod(u_star, axis=1)[:, np.newaxis] * v_star)
    return values, replicates


def _check_pixels(frames, m, x1, y1_rows, x2_scan, y2):
    if m < 1:
        raise ValueError("m must be >= 1, got %s" % m)
    if len(y1_rows) != m or len(set(y1_rows)) != m:
        raise ValueError("need %d distinct rows at x1, got %s" % (m, list(y1_rows)))
    for row in list(y1_rows) + [y2]:
        if not 0 <= row < frames.height:
            raise ValueError("row %d outside a frame of height %d" % (row, frames.height))
    for column in [x1] + list(x2_scan):
        if not 0 <= column < frames.width:
            raise ValueError("column %d outside a frame of width %d" % (column, frames.width))
    if y2 in y1_rows and x1 in x2_scan:
        raise ValueError("pixel (%d, %d) is used both at x1 and x2" % (x1, y2))
    if frames.n_frames < MIN_FRAMES:
        raise InsufficientFramesError("need at least %d frames, got %d" % (MIN_FRAMES, frames.n_frames))


def estimate_gm1(frames, m, x1, y1_list, x2_scan=None, y2=None, geom=None, n_boot=200, block=64,
                 seed=0, decorrelate=False):
    """
    Estimate the normalized (m+1)-th order correlation for every column in ``x2_scan``.

    :param frames: frame stack
    :type frames: thermal_bell.speckle_sim.FrameSet
    :param m: number of pixels at ``x1``
    :type m: int
    :param x1: column of the ``m`` pixels
    :type x1: int
    :param y1_list: their ``m`` distinct rows
    :type y1_list: sequence of int
    :param x2_scan: columns of the single pixel, defaults to every column
    :type x2_scan: sequence of int
    :param y2: row of the single pixel, defaults to the first row not in ``y1_list``
    :type y2: int
    :param geom: geometry for the phase axis, defaults to the frames' own
    :type geom: thermal_bell.speckle_sim.Geometry
    :param n_boot: bootstrap replicates, 0 disables the error estimate
    :type n_boot: int
    :param decorrelate: take the single pixel from a cyclically shifted frame index
    :type decorrelate: bool
    :rtype: CorrelationCurve
    :raises InsufficientFramesError: for fewer than 100 frames
    :raises ValueError: for pixels outside the frame or used twice
    """
    y1_rows = tuple(int(y) for y in y1_list)
    x2_scan = np.arange(frames.width) if x2_scan is None else np.asarray(x2_scan, dtype=int)
    y2 = _resolve_y2(frames.height, y1_rows, y2)
    _check_pixels(frames, m, x1, y1_rows, x2_scan, y2)
    geom = frames.meta.geometry if geom is None else geom

    n_blocks = len(_block_starts(frames.n_frames, block))
    weights = bootstrap_weights(n_blocks, n_boot, seed) if n_boot > 0 else None
    values, replicates = _correlate(frames, m, x1, y1_rows, x2_scan, y2, block, weights, decorrelate, seed)
    stderr = replicates.std(axis=0, ddof=1) if replicates is not None else np.zeros_like(values)
    deltas = geom.phase(x2_scan) - geom.phase(x1)
    logger.debug("estimated g(%d) at %d columns from %d frames", m + 1, len(x2_scan), frames.n_frames)
    return CorrelationCurve(m=m, x1=int(x1), y1_rows=y1_rows, y2=y2, x2_positions=x2_scan,
                            deltas=deltas, values=values, stderr=stderr, n_frames_used=frames.n_frames,
                            replicates=replicates)


def _fringe(delta, amplitude, visibility, phase):
    return amplitude * (1.0 + visibility * np.cos(delta - phase))


def _covers_period(deltas):
    ordered = np.sort(np.asarray(deltas, dtype=float))
    if ordered.size < 4:
        return False
    step = np.median(np.diff(ordered))
    return ordered[-1] - ordered[0] + step >= TWO_PI - 1e-9


def _refit_visibilities(design, replicates, sigma=None):
    """
    Visibility of every replicate curve from the linear form
    ``c0 + c1 cos(delta) + c2 sin(delta)`` of the fringe model, which has
    the same weighted least squares optimum as the nonlinear fit.
    """
    scale = np.ones(design.shape[0]) if sigma is None else 1.0 / sigma
    coeffs, _, _, _ = np.linalg.lstsq(design * scale[:, np.newaxis], (replicates * scale).T, rcond=None)
    c0, c1, c2 = coeffs
    with np.errstate(divide='ignore', invalid='ignore'):
        visibilities = np.hypot(c1, c2) / c0
    return visibilities[np.isfinite(visibilities) & (c0 > 0.0)]


def fit_visibility(curve, geom=None, max_iter=2000):
    """
    Fit ``A (1 + V cos(delta - phi))`` to a correlation curve. The period is
    fixed by the phase axis, taken from ``geom`` when given and from the
    curve otherwise; ``A``, ``V`` and ``phi`` are free. Points are
    weighted by their standard errors when all of them are positive.

    The points of one curve come from the same frames and are strongly
    correlated. When the curve carries bootstrap replicates, every replicate
    is refitted and the standard error of ``V`` is their spread; otherwise
    it comes from the fit covariance.

    :type curve: CorrelationCurve
    :rtype: VisibilityEstimate
    :raises FitError: if the curve spans less than one fringe period or the fit fails
    """
    if geom is None:
        deltas = np.asarray(curve.deltas, dtype=float)
    else:
        deltas = geom.phase(curve.x2_positions) - geom.phase(curve.x1)
    values = np.asarray(curve.values, dtype=float)
    if not _covers_period(deltas):
        raise FitError("correlation curve spans less than one fringe period")

    design = np.column_stack((np.ones_like(deltas), np.cos(deltas), np.sin(deltas)))
    (c0, c1, c2), _, _, _ = np.linalg.lstsq(design, values, rcond=None)
    if not c0 > 0.0:
        raise FitError("correlation curve has no positive baseline")
    p0 = (c0, math.hypot(c1, c2) / c0, math.atan2(c2, c1))

    sigma = np.asarray(curve.stderr, dtype=float)
    weighted = bool(np.all(sigma > 0.0))
    try:
        params, cov = curve_fit(_fringe, deltas, values, p0=p0, sigma=sigma if weighted else None,
                                absolute_sigma=weighted, maxfev=max_iter)
    except RuntimeError as e:
        raise FitError("visibility fit did not converge: %s" % e)
    if not np.all(np.isfinite(cov)):
        raise FitError("visibility fit covariance could not be estimated")

    amplitude, visibility, phase = params
    if visibility < 0.0:
        visibility, phase = -visibility, phase + math.pi
    if visibility > 1.0:
        logger.warning("fitted visibility %.4f clipped to 1", visibility)
        visibility = 1.0
    residual = math.sqrt(np.mean((values - _fringe(deltas, *params)) ** 2)) / abs(amplitude)
    stderr = math.sqrt(max(cov[1, 1], 0.0))
    if curve.replicates is not None:
        refits = _refit_visibilities(design, np.asarray(curve.replicates, dtype=float), sigma if weighted else None)
        if refits.size > 1:
            stderr = float(np.std(refits, ddof=1))
        logger.debug("m=%d: %d replicate refits, visibility spread %.4g", curve.m, refits.size, stderr)
    estimate = VisibilityEstimate(value=float(visibility), stderr=float(stderr),
                                  fit_residual=residual, amplitude=float(amplitude),
                                  phase=math.remainder(phase, TWO_PI))
    logger.info("m=%d: fitted visibility %.4f +- %.4f", curve.m, estimate.value, estimate.stderr)
    return estimate


def _detector_layout(geom, angles, n_sets):
    """
    Columns of the eight detectors ``d1, p1, d1', p1', d2, p2, d2', p2'`` in
    ``n_sets`` detector sets, set ``s`` with every phase advanced by ``s``
    columns' worth of phase, and the realized cosine arguments averaged over
    the sets.

    :returns: ``(layout, realized)``, ``layout[name]`` holding one column per set
    :raises SamplingError: if a detector phase has no column within half a column's phase step
    """
    step = TWO_PI / geom.period_pixels
    tolerance = 0.5 * step + 1e-9
    a1, a1p, a2, a2p = angles.detector_phases()
    targets = {
        'd1': a1, 'p1': a1 + math.pi, 'd1p': a1p, 'p1p': a1p + math.pi,
        'd2': a2, 'p2': a2 + math.pi, 'd2p': a2p, 'p2p': a2p + math.pi,
    }
    layout = dict((name, np.empty(n_sets, dtype=int)) for name in targets)
    errors = dict((name, np.empty(n_sets)) for name in targets)
    for s in range(n_sets):
        for name, target in targets.items():
            column, error = geom.column_for_phase(target + s * step)
            if abs(error) > tolerance:
                raise SamplingError("no column realizes detector %s at phase %.4f rad: nearest column %d is off "
                                    "by %.4f rad, more than half a column (%.4f rad)"
                                    % (name, target + s * step, column, error, 0.5 * step))
            layout[name][s] = column
            errors[name][s] = error
    realized = AngleSet.from_phases(*[targets[k] + float(errors[k].mean()) for k in ('d1', 'd1p', 'd2', 'd2p')])
    logger.debug("%d detector sets, realized cosine arguments %s", n_sets, realized.args)
    return layout, realized


def _fsum_blocks(blocks):
    flat = blocks.reshape(blocks.shape[0], -1)
    return np.array([math.fsum(col) for col in flat.T]).reshape(blocks.shape[1:])


def _pooled_correlations(frames, m, y1_rows, y2, layout, block, weights, decorrelate, seed, chunk_blocks=32):
    """
    The sixteen correlations between a side 1 detector (``m`` rows) and a
    side 2 detector (row ``y2``), each averaged over the detector sets of
    ``layout``, with their bootstrap replicates. Frames are read twice, in
    chunks of whole bootstrap blocks: once for the pixel means and once for
    the products.

    :returns: ``(point, replicates)`` keyed by ``(side 1 name, side 2 name)``;
              ``replicates`` is empty without ``weights``
    """
    data = frames.frames
    n_frames = data.shape[0]
    rows = list(y1_rows)
    names_1 = [name for pair in SIDES_1 for name in pair]
    names_2 = [name for pair in SIDES_2 for name in pair]
    keys = [(n1, n2) for n1 in names_1 for n2 in names_2]
    cols_1 = np.unique(np.concatenate([layout[name] for name in names_1]))
    cols_2 = np.unique(np.concatenate([layout[name] for name in names_2]))
    at_1 = dict((name, np.searchsorted(cols_1, layout[name])) for name in names_1)
    at_2 = dict((name, np.searchsorted(cols_2, layout[name])) for name in names_2)
    shift = _shuffle_shift(n_frames, seed) if decorrelate else 0

    starts = _block_starts(n_frames, block)
    chunk = block * chunk_blocks

    def chunks():
        for lo in range(0, n_frames, chunk):
            hi = min(lo + chunk, n_frames)
            x1 = np.asarray(data[lo:hi][:, rows][:, :, cols_1], dtype=np.float64)
            # the side 2 pixel of frame i is read from frame i - shift
            x2 = np.asarray(data[(np.arange(lo, hi) - shift) % n_frames, y2][:, cols_2], dtype=np.float64)
            yield lo // block, np.arange(0, hi - lo, block), x1, x2

    sums_1 = np.empty((len(starts), len(rows), cols_1.size))
    sums_2 = np.empty((len(starts), cols_2.size))
    for b, local, x1, x2 in chunks():
        sums_1[b:b + local.size] = np.add.reduceat(x1, local, axis=0)
        sums_2[b:b + local.size] = np.add.reduceat(x2, local, axis=0)
    mean_1 = _fsum_blocks(sums_1) / n_frames
    mean_2 = _fsum_blocks(sums_2) / n_frames
    if np.any(mean_1 <= 0.0) or np.any(mean_2 <= 0.0):
        raise ValueError("a selected pixel has zero mean intensity")

    n_sets = len(layout['d1'])
    w_sums = dict((key, np.empty((len(starts), n_sets))) for key in keys)
    for b, local, x1, x2 in chunks():
        u = _product(x1 / mean_1, m)
        v = x2 / mean_2
        for n1, n2 in keys:
            w = u[:, at_1[n1]] * v[:, at_2[n2]]
            w_sums[(n1, n2)][b:b + local.size] = np.add.reduceat(w, local, axis=0)

    point = dict((key, float(np.mean(_fsum_blocks(w_sums[key]) / n_frames))) for key in keys)
    replicates = {}
    if weights is None:
        return point, replicates
    counts = np.diff(np.append(starts, n_frames)).astype(float)
    n_resampled = (weights @ counts)[:, np.newaxis]
    u_star = (weights @ sums_1.reshape(len(starts), -1)).reshape((-1,) + sums_1.shape[1:])
    u_star = np.prod(u_star / mean_1 / n_resampled[:, :, np.newaxis], axis=1)
    v_star = (weights @ sums_2) / mean_2 / n_resampled
    for n1, n2 in keys:
        g_star = (weights @ w_sums[(n1, n2)]) / n_resampled
        g_star /= u_star[:, at_1[n1]] * v_star[:, at_2[n2]]
        replicates[(n1, n2)] = g_star.mean(axis=1)
    return point, replicates


def _probability_sets(g, m):
    """
    Four-term probability sets ordered ``(d1,d2), (d1,d2'), (d1',d2), (d1',d2')``.
    """
    sets = []
    for d1, p1 in SIDES_1:
        for d2, p2 in SIDES_2:
            values = {
                SettingPair.D1D2: g[(d1, d2)],
                SettingPair.P1P2: g[(p1, p2)],
                SettingPair.D1P2: g[(d1, p2)],
                SettingPair.P1D2: g[(p1, d2)],
            }
            cset = CorrelationSet(m + 1, values, float('nan'), float('nan'), normalized=True)
            sets.append(probabilities_four(cset))
    return sets


def bell_from_frames(frames, m, angles, geom=None, y1_rows=None, n_boot=200, block=64, seed=0,
                     decorrelate=False, sigma_margin=2.0, translate=True):
    """
    Four-term CH74 statistic estimated from frames. Each cosine argument of
    ``angles`` is realized by a pair of detector columns and their pi-shifted
    partners. With ``translate`` the whole detector set is also moved across
    one fringe period, a column at a time, and each of the sixteen
    correlations is averaged over the moved sets; otherwise the set nearest
    the frame centre is used alone. The correlations share one set of
    bootstrap replicates, which gives the statistic its standard error.

    :param angles: cosine arguments to realize; the report carries the realized ones
    :type angles: thermal_bell.bell_harness.AngleSet
    :param sigma_margin: standard errors by which a bound must be exceeded
    :type sigma_margin: float
    :param translate: average over detector sets spanning one fringe period
    :type translate: bool
    :rtype: thermal_bell.bell_harness.BellReport
    :raises InsufficientFramesError: for fewer than 100 frames
    :raises SamplingError: if a detector phase has no column within half a column's phase step
    """
    geom = frames.meta.geometry if geom is None else geom
    y1_rows = tuple(range(m)) if y1_rows is None else tuple(int(y) for y in y1_rows)
    y2 = _resolve_y2(frames.height, y1_rows, None)
    n_sets = max(1, int(math.floor(geom.period_pixels))) if translate else 1
    layout, realized = _detector_layout(geom, angles, n_sets)
    x2_columns = np.unique(np.concatenate([layout[name] for pair in SIDES_2 for name in pair]))
    for x1 in np.unique(np.concatenate([layout[name] for pair in SIDES_1 for name in pair])):
        _check_pixels(frames, m, int(x1), y1_rows, x2_columns, y2)

    n_blocks = len(_block_starts(frames.n_frames, block))
    weights = bootstrap_weights(n_blocks, n_boot, seed) if n_boot > 0 else None
    point, replicates = _pooled_correlations(frames, m, y1_rows, y2, layout, block, weights, decorrelate, seed)

    stderr = 0.0
    if weights is not None:
        boot_stats = []
        for r in range(weights.shape[0]):
            g = dict((key, column[r]) for key, column in replicates.items())
            boot_stats.append(statistic_from_probabilities(_probability_sets(g, m), realized).statistic)
        stderr = float(np.std(boot_stats, ddof=1))

    report = statistic_from_probabilities(_probability_sets(point, m), realized,
                                          model_tag=ModelTag.FOUR_TERM_TLS, stderr=stderr,
                                          sigma_margin=sigma_margin)
    logger.info("m=%d: Bell statistic %.5f +- %.5f from %d frames%s", m, report.statistic, stderr,
                frames.n_frames, " (shuffled)" if decorrelate else "")
    return report


def visibility_table(frames, m_values, geom=None, x1=None, n_boot=200, block=64, seed=0, decorrelate=False,
                     curves=None):
    """
    Fitted visibility against ``m / (m + 2)`` for every ``m``, using the
    first ``m`` rows at ``x1`` (default: the centre column) and the full
    width as the ``x2`` scan.

    :param curves: if given, every estimated :class:`CorrelationCurve` is appended to it
    :type curves: list
    :returns: list of :class:`VisibilityRow`
    """
    geom = frames.meta.geometry if geom is None else geom
    x1 = frames.width // 2 if x1 is None else x1
    table = []
    for m in m_values:
        curve = estimate_gm1(frames, m, x1, range(m), geom=geom, n_boot=n_boot, block=block, seed=seed,
                             decorrelate=decorrelate)
        if curves is not None:
            curves.append(curve)
        estimate = fit_visibility(curve, geom)
        table.append(VisibilityRow(m, visibility_tls(m), estimate.value, estimate.stderr, estimate.fit_residual))
    return table
