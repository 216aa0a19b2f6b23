"""Regenerate peppers64.ppm, the 64x64 RGB crop used by the image tests.

Deterministic synthetic scene (gradients, discs, soft texture) with
independent structure per channel, giving the decaying singular-value
profile typical of natural photos.  Run from this directory:

    python make_test_image.py
"""

import numpy as np

from purequat.image import ImageTensor, write_ppm


def build(size: int = 64) -> ImageTensor:
    yy, xx = np.mgrid[0:size, 0:size] / (size - 1.0)

    def disc(cy, cx, rad, soft=0.08):
        d = np.sqrt((yy - cy) ** 2 + (xx - cx) ** 2)
        return np.clip((rad - d) / soft, 0.0, 1.0)

    r = 0.55 + 0.35 * xx - 0.15 * yy
    r += 0.35 * disc(0.35, 0.3, 0.18)
    r -= 0.25 * disc(0.7, 0.75, 0.22)
    r += 0.06 * np.sin(9.0 * np.pi * (xx + 0.3 * yy))

    g = 0.45 + 0.3 * np.sin(2.2 * np.pi * yy) * np.cos(1.4 * np.pi * xx)
    g += 0.3 * disc(0.65, 0.35, 0.2)
    g += 0.05 * np.sin(13.0 * np.pi * (yy - 0.2 * xx))

    b = 0.3 + 0.45 * yy
    b += 0.3 * disc(0.3, 0.72, 0.16)
    b += 0.2 * disc(0.8, 0.2, 0.14)
    b += 0.04 * np.cos(11.0 * np.pi * (xx * yy + xx))

    rng = np.random.Generator(np.random.PCG64(20240615))
    grain = rng.normal(0.0, 0.015, size=(size, size))
    clip = lambda p: np.clip(p + grain, 0.0, 1.0)
    return ImageTensor(r=clip(r), g=clip(g), b=clip(b), bit_depth=8)


if __name__ == "__main__":
    write_ppm(build(), "peppers64.ppm")
    print("wrote peppers64.ppm")
