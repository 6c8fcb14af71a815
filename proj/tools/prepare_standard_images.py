#!/usr/bin/env python3
"""Convert user-supplied copies of the standard test images to 256x256 P5 PGM.

The images are not redistributed with this repository. Point this script at
files you already have (any format Pillow reads) and it writes the names the
acceptance suite looks for:

    tools/prepare_standard_images.py --lena lena.tif --barbara barbara.png \
        --camera cameraman.tif --fruits fruits.png --butterfly butterfly.png

Images that are already 256x256 8-bit gray are copied pixel for pixel; anything
else is converted to luminance and resized with a Lanczos filter, which will
move the reference statistics away from the published ones.
"""

import argparse
import pathlib
import sys

from PIL import Image

NAMES = ("lena", "barbara", "camera", "fruits", "butterfly")


def convert(src: pathlib.Path, dst: pathlib.Path, size: int) -> bool:
    img = Image.open(src)
    exact = img.mode == "L" and img.size == (size, size)
    if not exact:
        img = img.convert("L").resize((size, size), Image.LANCZOS)
    with open(dst, "wb") as f:
        f.write(b"P5\n%d %d\n255\n" % (size, size))
        f.write(img.tobytes())
    return exact


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name in NAMES:
        parser.add_argument(f"--{name}", type=pathlib.Path, help=f"source file for {name}")
    parser.add_argument("--out", type=pathlib.Path,
                        default=pathlib.Path(__file__).resolve().parent.parent / "tests" / "data" / "standard")
    parser.add_argument("--size", type=int, default=256)
    args = parser.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    wrote = 0
    for name in NAMES:
        src = getattr(args, name)
        if src is None:
            continue
        dst = args.out / f"{name}.pgm"
        exact = convert(src, dst, args.size)
        print(f"{dst}{'' if exact else '  (converted/resized)'}")
        wrote += 1
    if wrote == 0:
        parser.print_usage(sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
