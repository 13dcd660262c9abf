"""Closed current paths (lines + circular arcs) and their magnetic fields.

A :class:`CurrentLoop` is an ordered, closed chain of straight
:class:`Line` and circular :class:`Arc` segments carrying a persistent
current.  Field evaluation discretises arcs into chords (bounded sagitta
error) and sums the exact finite-segment Biot-Savart expression

    B = mu0*I/4pi * (|r1| + |r2|) (r1 x r2) / (|r1||r2| (|r1||r2| + r1.r2))

over the chords, which is exact for the straight segments.  Evaluation
points closer than :data:`WIRE_EXCLUSION_RADIUS` to any wire raise
:class:`SingularFieldError` instead of being regularised.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from . import _kernels
from .errors import GeometryError, SingularFieldError
from .quantities import MU0

#: default sagitta tolerance for replacing arcs by chords (m)
DEFAULT_SAGITTA_TOL = 1.0e-9
#: evaluation points closer than this to a wire are an error (m)
WIRE_EXCLUSION_RADIUS = 1.0e-8
#: maximum endpoint gap for a loop to count as closed (m)
CLOSURE_TOL = 1.0e-9

_Z = np.array([0.0, 0.0, 1.0])
_X = np.array([1.0, 0.0, 0.0])


def _as_point(p) -> np.ndarray:
    a = np.asarray(p, dtype=np.float64).reshape(3)
    if not np.all(np.isfinite(a)):
        raise GeometryError(f"non-finite coordinates: {p!r}")
    return a


def unit_vector(v) -> np.ndarray:
    a = np.asarray(v, dtype=np.float64).reshape(3)
    n = np.linalg.norm(a)
    if n == 0.0 or not np.isfinite(n):
        raise GeometryError(f"cannot normalise zero or non-finite vector {v!r}")
    return a / n


def perpendicular_frame(normal) -> tuple[np.ndarray, np.ndarray]:
    """Deterministic right-handed in-plane frame (u, v) with u x v = n.

    For n = z this returns (x, y); for n = y it returns (x, -z), so a
    film with its normal along y keeps x as its first in-plane axis.
    """
    n = unit_vector(normal)
    c = np.cross(n, _Z)
    if np.linalg.norm(c) < 1.0e-12:
        u = _X.copy()
    else:
        u = c / np.linalg.norm(c)
    v = np.cross(n, u)
    return u, v


# ---------------------------------------------------------------------------
# path segments
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Line:
    """Straight segment from ``start`` to ``end`` (m)."""

    start: np.ndarray
    end: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "start", _as_point(self.start))
        object.__setattr__(self, "end", _as_point(self.end))
        if np.linalg.norm(self.end - self.start) == 0.0:
            raise GeometryError("zero-length line segment")

    @property
    def start_point(self) -> np.ndarray:
        return self.start

    @property
    def end_point(self) -> np.ndarray:
        return self.end

    def reversed(self) -> "Line":
        return Line(self.end, self.start)

    def chord_points(self, tol: float) -> np.ndarray:
        # a line is its own chord; the next segment supplies the endpoint
        return self.start[None, :]


@dataclass(frozen=True)
class Arc:
    """Circular arc in the plane with unit ``normal`` through ``center``.

    The point at angle ``theta`` is ``center + radius*(cos(theta)*u_ref
    + sin(theta)*(normal x u_ref))``; the arc runs from ``start_angle``
    through ``start_angle + sweep`` (sweep signed, ``0 < |sweep| <=
    2*pi``).  ``u_ref`` defaults to a deterministic in-plane axis.
    """

    center: np.ndarray
    radius: float
    normal: np.ndarray
    start_angle: float
    sweep: float
    u_ref: np.ndarray | None = None

    def __post_init__(self):
        object.__setattr__(self, "center", _as_point(self.center))
        if not self.radius > 0.0:
            raise GeometryError(f"arc radius must be positive, got {self.radius}")
        if not 0.0 < abs(self.sweep) <= 2.0 * math.pi + 1.0e-12:
            raise GeometryError(f"arc sweep must satisfy 0 < |sweep| <= 2*pi, got {self.sweep}")
        n = unit_vector(self.normal)
        object.__setattr__(self, "normal", n)
        if self.u_ref is None:
            u = perpendicular_frame(n)[0]
        else:
            u = np.asarray(self.u_ref, dtype=np.float64).reshape(3)
            u = u - np.dot(u, n) * n
            nu = np.linalg.norm(u)
            if nu < 1.0e-12:
                raise GeometryError("arc u_ref is parallel to the plane normal")
            u = u / nu
        object.__setattr__(self, "u_ref", u)

    @property
    def _v(self) -> np.ndarray:
        return np.cross(self.normal, self.u_ref)

    def point(self, theta) -> np.ndarray:
        theta = np.asarray(theta, dtype=np.float64)
        return (
            self.center
            + self.radius * np.cos(theta)[..., None] * self.u_ref
            + self.radius * np.sin(theta)[..., None] * self._v
        )

    @property
    def start_point(self) -> np.ndarray:
        return self.point(self.start_angle)

    @property
    def end_point(self) -> np.ndarray:
        return self.point(self.start_angle + self.sweep)

    def reversed(self) -> "Arc":
        return Arc(
            self.center,
            self.radius,
            self.normal,
            self.start_angle + self.sweep,
            -self.sweep,
            self.u_ref,
        )

    def chord_count(self, tol: float) -> int:
        if not tol > 0.0:
            raise GeometryError("sagitta tolerance must be positive")
        if tol >= self.radius * (1.0 - math.cos(abs(self.sweep) / 2.0)):
            return 1
        theta_max = 2.0 * math.acos(1.0 - tol / self.radius)
        return max(1, int(math.ceil(abs(self.sweep) / theta_max * (1.0 - 1.0e-12))))

    def chord_points(self, tol: float) -> np.ndarray:
        n = self.chord_count(tol)
        thetas = self.start_angle + self.sweep * np.arange(n) / n
        return self.point(thetas)


PathSegment = Union[Line, Arc]


# ---------------------------------------------------------------------------
# polylines and loops
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Polyline:
    """Implicitly closed polygonal wire: vertex i connects to i+1 (mod n).

    ``source_segments`` maps each chord back to the originating segment
    index of the loop it was discretised from (identity for hand-built
    polylines).
    """

    vertices: np.ndarray
    current: float
    source_segments: np.ndarray | None = None

    def __post_init__(self):
        v = np.ascontiguousarray(np.asarray(self.vertices, dtype=np.float64))
        if v.ndim != 2 or v.shape[1] != 3 or v.shape[0] < 3:
            raise GeometryError("polyline needs an (n>=3, 3) vertex array")
        if not np.all(np.isfinite(v)):
            raise GeometryError("polyline has non-finite vertices")
        gaps = np.linalg.norm(np.roll(v, -1, axis=0) - v, axis=1)
        if np.any(gaps == 0.0):
            raise GeometryError("polyline has repeated consecutive vertices")
        object.__setattr__(self, "vertices", v)
        if self.source_segments is not None:
            s = np.ascontiguousarray(np.asarray(self.source_segments, dtype=np.int64))
            if s.shape != (v.shape[0],):
                raise GeometryError("source_segments length must match vertex count")
            object.__setattr__(self, "source_segments", s)

    @property
    def chord_starts(self) -> np.ndarray:
        return self.vertices

    @property
    def chord_ends(self) -> np.ndarray:
        return np.roll(self.vertices, -1, axis=0)


@dataclass(frozen=True)
class CurrentLoop:
    """Closed chain of path segments carrying a persistent current (A).

    Construction validates closure (endpoint gaps below
    :data:`CLOSURE_TOL`) and that non-adjacent segments keep a clearance
    of at least :data:`WIRE_EXCLUSION_RADIUS` (simple curve).
    """

    segments: tuple
    current: float

    def __post_init__(self):
        segs = tuple(self.segments)
        if len(segs) < 1:
            raise GeometryError("a loop needs at least one segment")
        object.__setattr__(self, "segments", segs)
        for i, seg in enumerate(segs):
            nxt = segs[(i + 1) % len(segs)]
            gap = float(np.linalg.norm(seg.end_point - nxt.start_point))
            if gap > CLOSURE_TOL:
                raise GeometryError(
                    f"loop not closed: segment {i} ends {gap:.3e} m away from "
                    f"segment {(i + 1) % len(segs)}"
                )
        _check_simple(segs)

    def reversed(self) -> "CurrentLoop":
        return CurrentLoop(tuple(s.reversed() for s in reversed(self.segments)), self.current)

    def with_current(self, current: float) -> "CurrentLoop":
        return CurrentLoop(self.segments, current)


def _seg_seg_distance(p0, p1, q0, q1):
    """Pairwise minimum distance between segment sets, shape (na, nb)."""
    d1 = p1 - p0
    d2 = q1 - q0
    r = p0[:, None, :] - q0[None, :, :]
    a = np.einsum("ij,ij->i", d1, d1)[:, None]
    e = np.einsum("ij,ij->i", d2, d2)[None, :]
    f = np.einsum("ijk,jk->ij", r, d2)
    c = np.einsum("ijk,ik->ij", r, d1)
    b = d1 @ d2.T
    denom = a * e - b * b
    with np.errstate(divide="ignore", invalid="ignore"):
        s = np.where(denom > 0.0, (b * f - c * e) / denom, 0.0)
    s = np.clip(s, 0.0, 1.0)
    t = (b * s + f) / e
    t_cl = np.clip(t, 0.0, 1.0)
    s = np.clip((b * t_cl - c) / a, 0.0, 1.0)
    cp = p0[:, None, :] + s[:, :, None] * d1[:, None, :]
    cq = q0[None, :, :] + t_cl[:, :, None] * d2[None, :, :]
    return np.linalg.norm(cp - cq, axis=2)


def _check_simple(segs) -> None:
    if len(segs) < 3:
        return
    chords = [s.chord_points(DEFAULT_SAGITTA_TOL) for s in segs]
    closed = [
        np.vstack([c, segs[(i + 1) % len(segs)].start_point[None, :]])
        for i, c in enumerate(chords)
    ]
    n = len(segs)
    for i in range(n):
        for j in range(i + 1, n):
            if j == i + 1 or (i == 0 and j == n - 1):
                continue  # adjacent segments share an endpoint
            ci, cj = closed[i], closed[j]
            d = _seg_seg_distance(ci[:-1], ci[1:], cj[:-1], cj[1:])
            if d.min() < WIRE_EXCLUSION_RADIUS:
                raise GeometryError(
                    f"segments {i} and {j} approach within {d.min():.3e} m; "
                    "the loop is not a simple curve"
                )


def discretize(loop: CurrentLoop, tol: float = DEFAULT_SAGITTA_TOL) -> Polyline:
    """Replace arcs by chords deviating at most ``tol`` from the true arc."""
    if not tol > 0.0:
        raise GeometryError("sagitta tolerance must be positive")
    verts = []
    src = []
    for i, seg in enumerate(loop.segments):
        pts = seg.chord_points(tol)
        verts.append(pts)
        src.extend([i] * len(pts))
    return Polyline(np.vstack(verts), loop.current, np.asarray(src, dtype=np.int64))


def as_polyline(obj, tol: float = DEFAULT_SAGITTA_TOL) -> Polyline:
    if isinstance(obj, Polyline):
        return obj
    if isinstance(obj, CurrentLoop):
        return discretize(obj, tol)
    raise TypeError(f"expected CurrentLoop or Polyline, got {type(obj).__name__}")


# ---------------------------------------------------------------------------
# field evaluation
# ---------------------------------------------------------------------------

def field_at_points(
    obj,
    points,
    *,
    tol: float = DEFAULT_SAGITTA_TOL,
    exclusion: float = WIRE_EXCLUSION_RADIUS,
) -> np.ndarray:
    """B (T) of a loop/polyline at an (n, 3) array of points."""
    poly = as_polyline(obj, tol)
    pts = np.asarray(points, dtype=np.float64)
    if pts.ndim != 2 or pts.shape[1] != 3:
        raise ValueError("points must have shape (n, 3)")
    raw, dmin, jmin = _kernels.segment_field_sum(poly.chord_starts, poly.chord_ends, pts)
    k = int(np.argmin(dmin))
    if dmin[k] < exclusion:
        chord = int(jmin[k])
        seg = chord if poly.source_segments is None else int(poly.source_segments[chord])
        raise SingularFieldError(
            f"evaluation point {pts[k].tolist()} lies {dmin[k]:.3e} m from wire "
            f"segment {seg} (chord {chord}), inside the {exclusion:.1e} m exclusion radius"
        )
    return raw * (MU0 * poly.current / (4.0 * math.pi))


def field_at(obj, point, **kwargs) -> np.ndarray:
    """B (T) at a single point; see :func:`field_at_points`."""
    return field_at_points(obj, np.asarray(point, dtype=np.float64).reshape(1, 3), **kwargs)[0]


@dataclass(frozen=True)
class GridField:
    """Row-major (C-order, last axis fastest) field samples on a box grid."""

    axes: tuple
    shape: tuple
    points: np.ndarray
    values: np.ndarray


def field_grid(obj, region, resolution, **kwargs) -> GridField:
    """Sample the field on an axis-aligned box.

    ``region`` is (lo, hi) corner points; ``resolution`` the sample
    count per axis.  An axis with a single sample is placed at the box
    centre; otherwise samples include both box faces.
    """
    lo = _as_point(region[0])
    hi = _as_point(region[1])
    res = tuple(int(r) for r in resolution)
    if any(r < 1 for r in res):
        raise ValueError("resolution counts must be >= 1")
    axes = tuple(
        np.array([0.5 * (lo[k] + hi[k])]) if res[k] == 1 else np.linspace(lo[k], hi[k], res[k])
        for k in range(3)
    )
    mesh = np.meshgrid(*axes, indexing="ij")
    pts = np.stack([m.ravel(order="C") for m in mesh], axis=1)
    vals = field_at_points(obj, pts, **kwargs)
    return GridField(axes=axes, shape=res, points=pts, values=vals)


# ---------------------------------------------------------------------------
# loop builders
# ---------------------------------------------------------------------------

def make_square_loop(side: float, center=(0.0, 0.0, 0.0), normal=(0.0, 0.0, 1.0),
                     current: float = 0.0) -> CurrentLoop:
    """Square loop of given side, traversed right-handedly about ``normal``."""
    if not side > 0.0:
        raise GeometryError("square side must be positive")
    c = _as_point(center)
    u, v = perpendicular_frame(normal)
    h = 0.5 * side
    corners = [c + h * (u + v), c + h * (-u + v), c + h * (-u - v), c + h * (u - v)]
    lines = tuple(Line(corners[i], corners[(i + 1) % 4]) for i in range(4))
    return CurrentLoop(lines, current)


def make_arc_loop(
    left_right_radius: float,
    top_bottom_radius: float,
    center=(0.0, 0.0, 0.0),
    current: float = 0.0,
    *,
    normal=(0.0, 0.0, 1.0),
    style: str = "convex",
) -> CurrentLoop:
    """Closed loop of four quarter arcs.

    Two arcs of ``left_right_radius`` face left/right, two of
    ``top_bottom_radius`` face top/bottom.  Closure is built in: the
    arc centres are placed so adjacent endpoints coincide exactly.

    style="convex"
        Arcs bulge outward and join tangentially; equal radii give a
        circle.
    style="pillow"
        Arcs bow inward (centres outside the loop), meeting in four
        cusps.  This is the low-stray-flux orientation: it cuts the
        mutual inductance to a neighbouring loop by more than an order
        of magnitude compared to the convex shape of equal radii.
    """
    r1 = float(left_right_radius)
    r2 = float(top_bottom_radius)
    if not (r1 > 0.0 and r2 > 0.0):
        raise GeometryError("arc-loop radii must be positive")
    c = _as_point(center)
    n = unit_vector(normal)
    u, _ = perpendicular_frame(n)
    q = math.pi / 2.0
    if style == "convex":
        a = (r2 - r1) / math.sqrt(2.0)
        specs = [
            ((a, 0.0), r1, -q / 2.0, q),
            ((0.0, -a), r2, q / 2.0, q),
            ((-a, 0.0), r1, 3.0 * q / 2.0, q),
            ((0.0, a), r2, 5.0 * q / 2.0, q),
        ]
    elif style == "pillow":
        cx = (r1 + r2) / math.sqrt(2.0)
        specs = [
            ((cx, 0.0), r1, 5.0 * q / 2.0, -q),
            ((0.0, cx), r2, 7.0 * q / 2.0, -q),
            ((-cx, 0.0), r1, q / 2.0, -q),
            ((0.0, -cx), r2, 3.0 * q / 2.0, -q),
        ]
    else:
        raise GeometryError(f"unknown arc-loop style {style!r}")
    v = np.cross(n, u)
    arcs = tuple(
        Arc(c + cu * u + cv * v, r, n, th0, sw, u_ref=u) for (cu, cv), r, th0, sw in specs
    )
    try:
        return CurrentLoop(arcs, current)
    except GeometryError as exc:
        raise GeometryError(
            f"quarter arcs with radii {r1:g}, {r2:g} do not close into a simple loop: {exc}"
        ) from exc


def make_squid_loop(
    left_right_radius: float,
    top_bottom_radius: float,
    offset: float,
    center=(0.0, 0.0, 0.0),
    current: float = 0.0,
    *,
    normal=(0.0, 0.0, 1.0),
) -> CurrentLoop:
    """Readout loop tracing a pillow arc-loop at constant outward ``offset``.

    The exact offset curve of the pillow: the four concave arcs shrink
    by ``offset`` around unchanged centres, and each cusp is rounded by
    a semicircle of radius ``offset`` about the cusp point.  The result
    runs parallel to the pillow wire with a uniform gap, giving a large
    mutual inductance to the enclosed loop.
    """
    r1 = float(left_right_radius)
    r2 = float(top_bottom_radius)
    t = float(offset)
    if not (r1 > 0.0 and r2 > 0.0):
        raise GeometryError("arc-loop radii must be positive")
    if not 0.0 < t < min(r1, r2):
        raise GeometryError("squid offset must be positive and below both radii")
    c = _as_point(center)
    n = unit_vector(normal)
    u, _ = perpendicular_frame(n)
    v = np.cross(n, u)
    q = math.pi / 2.0
    cx = (r1 + r2) / math.sqrt(2.0)
    arc_specs = [
        ((cx, 0.0), r1, 5.0 * q / 2.0, -q),
        ((0.0, cx), r2, 7.0 * q / 2.0, -q),
        ((-cx, 0.0), r1, q / 2.0, -q),
        ((0.0, -cx), r2, 3.0 * q / 2.0, -q),
    ]
    s2 = math.sqrt(2.0)
    cusps = [
        (r2 / s2, r1 / s2),
        (-r2 / s2, r1 / s2),
        (-r2 / s2, -r1 / s2),
        (r2 / s2, -r1 / s2),
    ]
    segments = []
    for i, ((au, av), r, th0, sw) in enumerate(arc_specs):
        segments.append(Arc(c + au * u + av * v, r - t, n, th0, sw, u_ref=u))
        cu, cv = cusps[i]
        ai = np.array(arc_specs[i][0])
        an = np.array(arc_specs[(i + 1) % 4][0])
        cp = np.array((cu, cv))
        d0 = ai - cp
        a0 = math.atan2(d0[1], d0[0])
        # the two offset endpoints at a cusp are antipodal; sweep the
        # semicircle that passes through the outward direction
        amid_out = math.atan2(cv, cu)
        delta = (amid_out - a0 + math.pi) % (2.0 * math.pi) - math.pi
        sweep = math.pi if delta >= 0.0 else -math.pi
        segments.append(Arc(c + cu * u + cv * v, t, n, a0, sweep, u_ref=u))
    return CurrentLoop(tuple(segments), current)
