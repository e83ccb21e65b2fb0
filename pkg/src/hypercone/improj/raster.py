"""Rasters of imaginary projections in the plane and their complement components.

A raster samples membership at pixel centers.  Complement components are the
connected components of Outside pixels, where two neighbouring pixels (in the
8-neighbourhood) are joined only if the midpoint of their centers is Outside
as well.  The midpoint test keeps thin pieces of ``I(f)`` that pass between
pixel centers (coordinate axes on pixel edges, asymptotes through pixel
corners) from merging components, and lets one-pixel-wide diagonal pieces of
the complement stay connected.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np
from scipy.spatial import ConvexHull
from skimage.measure import find_contours

from .membership import DEFAULT_CONFIG, MembershipConfig, Verdict, point_decider

__all__ = [
    "Component",
    "ComponentReport",
    "RasterGrid",
    "components",
    "raster",
    "read_pgm",
    "write_pgm",
]

INSIDE, OUTSIDE, UNKNOWN = 0, 255, 128
_CODE = {Verdict.INSIDE: INSIDE, Verdict.OUTSIDE: OUTSIDE, Verdict.UNKNOWN: UNKNOWN}


@dataclass
class RasterGrid:
    """Tri-state membership raster; row 0 is the top (largest ``y2``)."""

    box: tuple[Fraction, Fraction, Fraction, Fraction]
    resolution: int
    cells: np.ndarray
    mode: str
    probe: Callable | None = field(default=None, repr=False, compare=False)
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def dx(self) -> Fraction:
        return (self.box[1] - self.box[0]) / self.resolution

    @property
    def dy(self) -> Fraction:
        return (self.box[3] - self.box[2]) / self.resolution

    def lattice_point(self, a: int, b: int) -> tuple[Fraction, Fraction]:
        """Point at half-pixel lattice coordinates: column ``a/2``, row ``b/2`` from the top-left corner."""
        axes = self._cache.get("axes")
        if axes is None:
            m = 2 * self.resolution + 1
            hx, hy = self.dx / 2, self.dy / 2
            axes = self._cache["axes"] = (
                [self.box[0] + k * hx for k in range(m)],
                [self.box[3] - k * hy for k in range(m)],
            )
        return (axes[0][a], axes[1][b])

    def center(self, row: int, col: int) -> tuple[Fraction, Fraction]:
        return self.lattice_point(2 * col + 1, 2 * row + 1)

    def pixel_of(self, y: Sequence) -> tuple[int, int] | None:
        """Row and column of the pixel containing ``y``, or ``None`` outside the box."""
        c = (Fraction(y[0]) - self.box[0]) / self.dx
        r = (self.box[3] - Fraction(y[1])) / self.dy
        col, row = int(np.floor(float(c))), int(np.floor(float(r)))
        if 0 <= row < self.resolution and 0 <= col < self.resolution:
            return row, col
        return None

    def lattice_outside(self, a: int, b: int) -> bool:
        """Membership at a half-lattice point (cached); ``False`` unless decided Outside."""
        if a % 2 and b % 2:
            return self.cells[b // 2, a // 2] == OUTSIDE
        key = (a, b)
        if key not in self._cache:
            self._cache[key] = self.probe(self.lattice_point(a, b)).value is Verdict.OUTSIDE
        return self._cache[key]

    def counts(self) -> dict[str, int]:
        return {
            "inside": int((self.cells == INSIDE).sum()),
            "outside": int((self.cells == OUTSIDE).sum()),
            "unknown": int((self.cells == UNKNOWN).sum()),
        }


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("HYPERCONE_THREADS", "1")))
    except ValueError:
        return 1


def _rows(f, mode, cfg, box, resolution, rows) -> list[list[int]]:
    decide = point_decider(f, mode, cfg)
    x0, x1, y0, y1 = box
    dx, dy = (x1 - x0) / resolution, (y1 - y0) / resolution
    xs = [x0 + (2 * c + 1) * dx / 2 for c in range(resolution)]
    out = []
    for r in rows:
        yv = y1 - (2 * r + 1) * dy / 2
        out.append([_CODE[decide((x, yv)).value] for x in xs])
    return out


def raster(
    f,
    box: Sequence,
    resolution: int,
    mode: str = "exact",
    cfg: MembershipConfig = DEFAULT_CONFIG,
    threads: int | None = None,
) -> RasterGrid:
    """Membership of every pixel center of a ``resolution x resolution`` grid over ``box``.

    ``box`` is ``(x_min, x_max, y_min, y_max)``.  ``f`` is anything accepted
    by :func:`~hypercone.improj.membership.membership` in two variables.
    Parallel evaluation (``threads`` or ``HYPERCONE_THREADS``) splits rows
    across processes; the assembled grid does not depend on it.
    """
    if isinstance(f, list):
        f = tuple(f)
    from .membership import _nvars

    if _nvars(f) != 2:
        raise ValueError("rasters are only defined for polynomials in two variables")
    if resolution < 8:
        raise ValueError("resolution must be at least 8")
    box = tuple(Fraction(b) for b in box)
    if box[0] >= box[1] or box[2] >= box[3]:
        raise ValueError("empty box")
    threads = _threads() if threads is None else threads
    rows = list(range(resolution))
    if threads > 1:
        chunks = [rows[i::threads] for i in range(threads)]
        cells = np.zeros((resolution, resolution), dtype=np.uint8)
        with ProcessPoolExecutor(threads) as ex:
            futs = [ex.submit(_rows, f, mode, cfg, box, resolution, ch) for ch in chunks]
            for ch, fut in zip(chunks, futs):
                for r, vals in zip(ch, fut.result()):
                    cells[r] = vals
    else:
        cells = np.array(_rows(f, mode, cfg, box, resolution, rows), dtype=np.uint8)
    return RasterGrid(box, resolution, cells, mode, probe=point_decider(f, mode, cfg))


# ---------------------------------------------------------------------------
# PGM
# ---------------------------------------------------------------------------


def write_pgm(grid: RasterGrid, path) -> None:
    """Binary PGM (P5, maxval 255): Inside 0, Outside 255, Unknown 128."""
    n = grid.resolution
    with open(path, "wb") as fh:
        fh.write(f"P5\n{n} {n}\n255\n".encode("ascii"))
        fh.write(np.ascontiguousarray(grid.cells, dtype=np.uint8).tobytes())


def read_pgm(path) -> np.ndarray:
    with open(path, "rb") as fh:
        data = fh.read()
    parts = data.split(maxsplit=4)
    if parts[0] != b"P5":
        raise ValueError("not a binary PGM")
    w, h, maxval = int(parts[1]), int(parts[2]), int(parts[3])
    if maxval != 255:
        raise ValueError("expected maxval 255")
    # the raster is the trailing w*h bytes; the body may start with whitespace bytes
    return np.frombuffer(data[len(data) - w * h :], dtype=np.uint8).reshape(h, w)


# ---------------------------------------------------------------------------
# components
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Component:
    id: int
    pixel_count: int
    representative: tuple[Fraction, Fraction]
    touches_boundary: bool
    convexity_score: float
    max_straight_run: float
    strictly_convex: bool
    paired_with: int | None


@dataclass(frozen=True)
class ComponentReport:
    components: tuple[Component, ...]
    total: int
    bounded: int
    unbounded: int
    labels: np.ndarray = field(repr=False, compare=False)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        p = self.parent
        while p[a] != a:
            p[a] = p[p[a]]
            a = p[a]
        return a

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def _label(grid: RasterGrid) -> np.ndarray:
    n = grid.resolution
    out = grid.cells == OUTSIDE
    uf = _UnionFind(n * n)
    check = grid.probe is not None
    # 4-neighbours first: the midpoint is a pixel-edge midpoint
    for r in range(n):
        row = out[r]
        for c in range(n):
            if not row[c]:
                continue
            if c + 1 < n and row[c + 1] and (not check or grid.lattice_outside(2 * c + 2, 2 * r + 1)):
                uf.union(r * n + c, r * n + c + 1)
            if r + 1 < n and out[r + 1, c] and (not check or grid.lattice_outside(2 * c + 1, 2 * r + 2)):
                uf.union(r * n + c, (r + 1) * n + c)
    if check:
        # diagonal neighbours through the shared pixel corner
        for r in range(n - 1):
            for c in range(n):
                if not out[r, c]:
                    continue
                for dc in (-1, 1):
                    c2 = c + dc
                    if 0 <= c2 < n and out[r + 1, c2]:
                        a, b = r * n + c, (r + 1) * n + c2
                        if uf.find(a) != uf.find(b) and grid.lattice_outside(2 * c + 1 + dc, 2 * r + 2):
                            uf.union(a, b)
    labels = np.full((n, n), -1, dtype=np.int64)
    roots: dict[int, int] = {}
    for r in range(n):
        for c in range(n):
            if out[r, c]:
                root = uf.find(r * n + c)
                labels[r, c] = roots.setdefault(root, len(roots))
    return labels


def _convexity(rows: np.ndarray, cols: np.ndarray, mask: np.ndarray) -> float:
    """Pixel count over the area of the convex hull of the pixels' corners."""
    # corners of boundary pixels suffice for the hull
    pts = np.concatenate(
        [np.stack([rows + dr, cols + dc], axis=1) for dr in (0, 1) for dc in (0, 1)]
    ).astype(float)
    pts = np.unique(pts, axis=0)
    try:
        area = ConvexHull(pts).volume
    except Exception:
        return 0.0
    return float(min(1.0, len(rows) / area))


def _straight_run(mask: np.ndarray, frame: np.ndarray, dev: float = 0.75) -> float:
    """Longest boundary stretch (in pixels) that stays within ``dev`` of a straight chord.

    ``mask`` is the component on a padded crop and ``frame`` marks padded
    cells outside the raster box; contour pieces along the box frame are
    clipping, not boundary, and are skipped.
    """
    best = 0.0
    for contour in find_contours(mask.astype(float), 0.5):
        r, c = contour[:, 0], contour[:, 1]
        on_frame = (
            frame[np.floor(r).astype(int), np.floor(c).astype(int)]
            | frame[np.ceil(r).astype(int), np.ceil(c).astype(int)]
        )
        # split into pieces without frame vertices
        piece: list[int] = []
        pieces = []
        for i, f in enumerate(on_frame):
            if f:
                if piece:
                    pieces.append(piece)
                piece = []
            else:
                piece.append(i)
        if piece:
            pieces.append(piece)
        for idx in pieces:
            pts = contour[idx]
            best = max(best, _longest_chord(pts, dev))
    return best


def _fits(pts: np.ndarray, i: int, j: int, dev: float) -> bool:
    a, b = pts[i], pts[j]
    d = b - a
    norm = float(np.hypot(d[0], d[1]))
    if norm == 0:
        return True
    seg = pts[i : j + 1] - a
    dist = np.abs(seg[:, 0] * d[1] - seg[:, 1] * d[0]) / norm
    return bool(dist.max() <= dev)


def _longest_chord(pts: np.ndarray, dev: float) -> float:
    n = len(pts)
    if n < 2:
        return 0.0
    best = 0.0
    step = max(1, n // 256)
    for i in range(0, n - 1, step):
        # grow geometrically, then bisect back to the last fitting end point
        k = 1
        while i + k < n and _fits(pts, i, i + k, dev):
            k *= 2
        lo, hi = k // 2, min(k, n - 1 - i)
        if hi > lo and _fits(pts, i, i + hi, dev):
            lo = hi
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if _fits(pts, i, i + mid, dev):
                lo = mid
            else:
                hi = mid
        j = i + lo
        best = max(best, float(np.hypot(*(pts[j] - pts[i]))))
    return best


def components(
    grid: RasterGrid, convex_tol: float = 0.98, segment_tol: float | None = None
) -> ComponentReport:
    """Connected components of the Outside pixels with shape diagnostics.

    ``segment_tol`` (pixels) bounds the longest straight boundary stretch of a
    strictly convex component; it defaults to ``resolution / 3``.
    """
    n = grid.resolution
    seg_tol = n / 3 if segment_tol is None else segment_tol
    labels = _label(grid)
    count = int(labels.max()) + 1 if labels.size and labels.max() >= 0 else 0
    comps = []
    reps = []
    for k in range(count):
        rows, cols = np.nonzero(labels == k)
        touches = bool(rows.min() == 0 or cols.min() == 0 or rows.max() == n - 1 or cols.max() == n - 1)
        # representative: the component pixel closest to the centroid
        cr, cc = rows.mean(), cols.mean()
        i = int(np.argmin((rows - cr) ** 2 + (cols - cc) ** 2))
        rep = grid.center(int(rows[i]), int(cols[i]))
        reps.append(rep)
        score = _convexity(rows, cols, labels == k)
        r0, r1, c0, c1 = rows.min(), rows.max(), cols.min(), cols.max()
        crop = np.zeros((r1 - r0 + 3, c1 - c0 + 3), dtype=bool)
        crop[1:-1, 1:-1] = labels[r0 : r1 + 1, c0 : c1 + 1] == k
        frame = np.zeros_like(crop)
        rr = np.arange(r0 - 1, r1 + 2)
        cc_ = np.arange(c0 - 1, c1 + 2)
        frame |= ((rr < 0) | (rr >= n))[:, None]
        frame |= ((cc_ < 0) | (cc_ >= n))[None, :]
        run = _straight_run(crop, frame)
        comps.append([k, len(rows), rep, touches, score, run, score >= convex_tol and run <= seg_tol])
    # pairing through the negated representative
    paired: list[int | None] = [None] * count
    for k, rep in enumerate(reps):
        px = grid.pixel_of((-rep[0], -rep[1]))
        if px is not None and labels[px] >= 0:
            paired[k] = int(labels[px])
    for k in range(count):
        j = paired[k]
        if j is not None and paired[j] != k:
            paired[k] = None
    out = tuple(
        Component(k, int(cnt), rep, touches, float(score), float(run), bool(strict), paired[k])
        for (k, cnt, rep, touches, score, run, strict) in comps
    )
    bounded = sum(1 for c in out if not c.touches_boundary)
    return ComponentReport(out, len(out), bounded, len(out) - bounded, labels)
