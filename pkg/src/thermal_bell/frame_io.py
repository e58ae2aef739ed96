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
.. module:: frame_io
    :synopsis: SPKL frame files and their JSON sidecars.

Layout, little-endian::

    magic "SPKL" | u32 version (1) | u32 n_frames | u32 height | u32 width |
    f64 tau_ratio | u64 seed | n_frames * height * width float32, frame-major, row-major

The remaining :class:`~thermal_bell.speckle_sim.FrameMeta` fields are written
to ``<file>.json`` next to the frame file.
"""

import json
import logging
import os
import struct

import numpy as np

from .errors import FrameFormatError
from .speckle_sim import BLOCK_FRAMES, FrameMeta, FrameSet, Geometry

logger = logging.getLogger(__name__)

MAGIC = b'SPKL'
VERSION = 1
HEADER = struct.Struct('<4sIIIIdQ')


def sidecar_path(path):
    return '%s.json' % path


def dump_json(data, path):
    """
    Write ``data`` as deterministic JSON (sorted keys, fixed indentation).
    """
    with open(path, 'w') as f:
        json.dump(data, f, indent=2, sort_keys=True)
        f.write('\n')


def write_spkl(path, frameset):
    """
    :type frameset: thermal_bell.speckle_sim.FrameSet
    :raises ValueError: if the seed does not fit the header
    """
    meta = frameset.meta
    if not 0 <= meta.seed < 2 ** 64:
        raise ValueError("seed %s does not fit an unsigned 64 bit header field" % meta.seed)
    header = HEADER.pack(MAGIC, VERSION, frameset.n_frames, frameset.height, frameset.width,
                         float(meta.tau_ratio), int(meta.seed))
    with open(path, 'wb') as f:
        f.write(header)
        for start in range(0, frameset.n_frames, BLOCK_FRAMES):
            chunk = frameset.frames[start:start + BLOCK_FRAMES]
            f.write(np.ascontiguousarray(chunk, dtype='<f4').tobytes())
    dump_json(meta.to_dict(), sidecar_path(path))
    logger.info("wrote %d frames to %s", frameset.n_frames, path)


def read_header(path):
    """
    :returns: ``(n_frames, height, width, tau_ratio, seed)``
    :raises FrameFormatError: for a short file, wrong magic or unknown version
    """
    with open(path, 'rb') as f:
        raw = f.read(HEADER.size)
    if len(raw) != HEADER.size:
        raise FrameFormatError("%s: truncated header (%d bytes)" % (path, len(raw)))
    magic, version, n_frames, height, width, tau_ratio, seed = HEADER.unpack(raw)
    if magic != MAGIC:
        raise FrameFormatError("%s: bad magic %r" % (path, magic))
    if version != VERSION:
        raise FrameFormatError("%s: unsupported version %d" % (path, version))
    return n_frames, height, width, tau_ratio, seed


def _meta_from_sidecar(path, height, width, tau_ratio, seed):
    side = sidecar_path(path)
    if not os.path.exists(side):
        logger.warning("%s has no sidecar, assuming default geometry", path)
        return FrameMeta(seed=seed, tau_ratio=tau_ratio, substeps=1, n_subsources=1,
                         geometry=Geometry(width=width, height=height))
    try:
        with open(side) as f:
            data = json.load(f)
        data.pop('fringe_period', None)
        geometry = Geometry(**data.pop('geometry'))
        meta = FrameMeta(geometry=geometry, **data)
    except (ValueError, TypeError, KeyError) as e:
        raise FrameFormatError("%s: malformed sidecar: %s" % (side, e))
    if (geometry.width, geometry.height) != (width, height):
        raise FrameFormatError("%s: sidecar geometry %d x %d does not match frames %d x %d"
                               % (side, geometry.width, geometry.height, width, height))
    if meta.seed != seed or meta.tau_ratio != tau_ratio:
        raise FrameFormatError("%s: sidecar seed or tau_ratio disagrees with the header" % side)
    return meta


def read_spkl(path):
    """
    Memory-map a frame file.

    :rtype: thermal_bell.speckle_sim.FrameSet
    :raises FrameFormatError: if the header or size is inconsistent
    :raises OSError: if the file cannot be opened
    """
    n_frames, height, width, tau_ratio, seed = read_header(path)
    expected = HEADER.size + 4 * n_frames * height * width
    actual = os.path.getsize(path)
    if actual != expected:
        raise FrameFormatError("%s: expected %d bytes for %d frames of %d x %d, found %d"
                               % (path, expected, n_frames, height, width, actual))
    meta = _meta_from_sidecar(path, height, width, tau_ratio, seed)
    if n_frames == 0:
        frames = np.zeros((0, height, width), dtype=np.float32)
    else:
        frames = np.memmap(path, dtype='<f4', mode='r', offset=HEADER.size, shape=(n_frames, height, width))
    logger.debug("mapped %d frames from %s", n_frames, path)
    return FrameSet(frames, meta)
