"""Rasterize the cubic whose imaginary projection has six complement components.

Writes a PGM image and prints the component report and the matching of
unbounded components to the cones of the initial form.
"""

import argparse

from hypercone import constructions as C
from hypercone.improj import asymptotics as A
from hypercone.improj import raster as R


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--res", type=int, default=192)
    ap.add_argument("--out", default="six_components.pgm")
    args = ap.parse_args()
    f = C.cubic_six_components().poly
    box = (-4, 4, -4, 4)
    grid = R.raster(f, box, args.res)
    R.write_pgm(grid, args.out)
    rep = R.components(grid)
    print(f"{f.to_text()}: {rep.total} components ({rep.bounded} bounded), image in {args.out}")
    for c in rep.components:
        print(f"  #{c.id}: {c.pixel_count} px, boundary={c.touches_boundary}, pair={c.paired_with}")
    rec = A.recession_correspondence(f, box=box, resolution=args.res)
    print(f"matched to cones of the initial form: {list(rec.matches)}; thin strips: {list(rec.thin)}")
    print(f"limit directions: {[round(a, 4) for a in A.limit_directions(f).angles()]}")


if __name__ == "__main__":
    main()
