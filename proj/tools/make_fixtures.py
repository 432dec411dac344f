#!/usr/bin/env python3
"""Regenerate the bundled PGM fixtures from scikit-image sample data.

All sources are CC0 or public domain (see the scikit-image data README).
"""
import pathlib

import numpy as np
from skimage import color, data

ROOT = pathlib.Path(__file__).resolve().parent.parent / "tests" / "fixtures"

COVERS = ["camera", "brick", "moon", "coffee", "chelsea", "coins", "rocket", "clock"]


def gray(img):
    if img.ndim == 3:
        img = np.rint(color.rgb2gray(img) * 255.0)
    return img.astype(np.uint8)


def even(img):
    h, w = img.shape
    return img[: h - h % 2, : w - w % 2]


def half(img):
    h, w = img.shape
    blocks = img[: h - h % 2, : w - w % 2].reshape(h // 2, 2, w // 2, 2).astype(np.uint32)
    return (blocks.sum(axis=(1, 3)) // 4).astype(np.uint8)


def write_pgm(path, img):
    h, w = img.shape
    with open(path, "wb") as f:
        f.write(f"P5\n{w} {h}\n255\n".encode("ascii"))
        f.write(np.ascontiguousarray(img).tobytes())


def main():
    for name in COVERS:
        write_pgm(ROOT / "covers" / f"{name}.pgm", even(gray(getattr(data, name)())))
    write_pgm(ROOT / "secrets" / "astronaut.pgm", half(gray(data.astronaut())))
    cell = half(gray(data.cell()))
    write_pgm(ROOT / "secrets" / "cell.pgm", cell[:256, :256])


if __name__ == "__main__":
    main()
