"""RGB raster I/O (PPM P6/P3, dependency-free) and the pure-quaternion encoding."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import QuatMatrix


@dataclass(frozen=True)
class ImageTensor:
    """RGB planes as floats in [0, 1], shape (height, width)."""

    r: np.ndarray
    g: np.ndarray
    b: np.ndarray
    bit_depth: int = 8

    def __post_init__(self):
        planes = [np.asarray(p, dtype=np.float64) for p in (self.r, self.g, self.b)]
        shape = planes[0].shape
        if len(shape) != 2:
            raise ValueError("channel planes must be 2-d")
        for p in planes[1:]:
            if p.shape != shape:
                raise ValueError("channel shapes differ")
        for p in planes:
            if p.min() < 0.0 or p.max() > 1.0:
                raise ValueError("channel values must lie in [0, 1]")
        if self.bit_depth not in (8, 16):
            raise ValueError("bit_depth must be 8 or 16")
        object.__setattr__(self, "r", planes[0])
        object.__setattr__(self, "g", planes[1])
        object.__setattr__(self, "b", planes[2])

    @property
    def height(self) -> int:
        return self.r.shape[0]

    @property
    def width(self) -> int:
        return self.r.shape[1]


def _read_token(data: bytes, pos: int) -> tuple[bytes, int]:
    # skip whitespace and '#' comments
    while pos < len(data):
        c = data[pos:pos + 1]
        if c == b"#":
            while pos < len(data) and data[pos:pos + 1] != b"\n":
                pos += 1
        elif c.isspace():
            pos += 1
        else:
            break
    start = pos
    while pos < len(data) and not data[pos:pos + 1].isspace():
        pos += 1
    if start == pos:
        raise ValueError("truncated PPM header")
    return data[start:pos], pos


def read_ppm(path) -> ImageTensor:
    """Read a P6 (binary) or P3 (ASCII) PPM file."""
    with open(path, "rb") as fh:
        data = fh.read()
    magic, pos = _read_token(data, 0)
    if magic not in (b"P6", b"P3"):
        raise ValueError(f"unsupported PPM magic {magic!r}")
    fields = []
    for _ in range(3):
        tok, pos = _read_token(data, pos)
        fields.append(int(tok))
    width, height, maxval = fields
    if width < 1 or height < 1 or not 0 < maxval < 65536:
        raise ValueError(f"bad PPM header: {width}x{height} maxval {maxval}")
    count = width * height * 3
    if magic == b"P6":
        pos += 1  # single whitespace byte after maxval
        if maxval < 256:
            raw = np.frombuffer(data, dtype=np.uint8, count=count, offset=pos)
        else:
            raw = np.frombuffer(data, dtype=">u2", count=count, offset=pos)
        pixels = raw.astype(np.float64).reshape(height, width, 3)
    else:
        values = data[pos:].split()
        if len(values) < count:
            raise ValueError("truncated P3 pixel data")
        pixels = np.array(values[:count], dtype=np.float64).reshape(height, width, 3)
        if pixels.max() > maxval:
            raise ValueError("P3 sample exceeds maxval")
    pixels /= maxval
    depth = 8 if maxval < 256 else 16
    return ImageTensor(r=pixels[:, :, 0], g=pixels[:, :, 1], b=pixels[:, :, 2],
                       bit_depth=depth)


def write_ppm(img: ImageTensor, path) -> None:
    """Write a binary P6 file at the image's bit depth."""
    maxval = 255 if img.bit_depth == 8 else 65535
    stacked = np.stack([img.r, img.g, img.b], axis=-1)
    quant = np.rint(np.clip(stacked, 0.0, 1.0) * maxval)
    body = quant.astype(np.uint8 if maxval == 255 else ">u2").tobytes()
    with open(path, "wb") as fh:
        fh.write(f"P6\n{img.width} {img.height}\n{maxval}\n".encode())
        fh.write(body)


def image_to_quat(img: ImageTensor) -> QuatMatrix:
    """Encode R, G, B on the i, j, k planes of a pure quaternion matrix."""
    zero = np.zeros_like(img.r)
    return QuatMatrix(zero, img.r, img.g, img.b)


def quat_to_image(A: QuatMatrix, bit_depth: int = 8) -> ImageTensor:
    """Decode a pure quaternion matrix back to an RGB raster.

    The real plane must be zero (Frobenius norm below 1e-9); callers should
    project with pi2 first.  Channel values are clamped to [0, 1].
    """
    real_mass = float(np.sqrt((A.comps[0] ** 2).sum()))
    if real_mass >= 1e-9:
        raise ValueError(
            f"matrix is not pure (||Re||_F = {real_mass:.3e}); apply pi2 first"
        )
    clip = lambda p: np.clip(p, 0.0, 1.0)
    return ImageTensor(r=clip(A.a1), g=clip(A.a2), b=clip(A.a3), bit_depth=bit_depth)
