"""Bounded strictly convex complement components from rotated quartic factors."""

import argparse

from hypercone import constructions as C
from hypercone.improj import raster as R


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--K", type=int, default=4)
    ap.add_argument("--res", type=int, default=512, help="the convexity proxy needs about 512 pixels")
    ap.add_argument("--out", default="strictly_convex.pgm")
    args = ap.parse_args()
    entry = C.p_K2(args.K)
    grid = R.raster(entry.target, (-6, 6, -6, 6), args.res)
    R.write_pgm(grid, args.out)
    rep = R.components(grid)
    inner = [c for c in rep.components if not c.touches_boundary]
    print(f"K={args.K}: {rep.bounded} bounded components (expected {entry.expected['bounded']})")
    for c in inner:
        print(f"  #{c.id}: {c.pixel_count} px, convexity {c.convexity_score:.3f}, strictly convex {c.strictly_convex}")
    print(f"image in {args.out}")


if __name__ == "__main__":
    main()
