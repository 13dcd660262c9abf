"""Hot numeric kernels with numba and pure-numpy implementations.

Both kernels work on closed polylines given as per-chord start/end arrays.

``segment_field_sum``
    Sum of the exact finite-segment Biot-Savart expression over all
    chords, per evaluation point, without the mu0*I/4pi prefactor.
    Also returns each point's distance to the nearest chord (and which
    chord), so callers can enforce a wire exclusion radius.

``neumann_pair_sum``
    Double Gauss-Legendre quadrature of 1/|xa - xb| over every chord
    pair, weighted by the chord-vector dot product, without the mu0/4pi
    prefactor.  The Gauss order per pair is picked from a fixed ladder
    by the caller (proximity escalation + global refinement).

The numba path is deterministic (fixed summation order, no prange); the
numpy path is deterministic as well but sums in a different order, so
the two backends agree only to floating-point roundoff.
"""

from __future__ import annotations

import numpy as np

from ._backend import BACKEND, HAVE_NUMBA

GAUSS_ORDERS = (4, 8, 16, 32, 64)

_N_ORDERS = len(GAUSS_ORDERS)
_MAX_ORDER = GAUSS_ORDERS[-1]

# Gauss-Legendre nodes/weights mapped to [0, 1], padded to a rectangle.
GAUSS_X01 = np.zeros((_N_ORDERS, _MAX_ORDER))
GAUSS_W01 = np.zeros((_N_ORDERS, _MAX_ORDER))
GAUSS_SIZES = np.array(GAUSS_ORDERS, dtype=np.int64)
for _i, _m in enumerate(GAUSS_ORDERS):
    _x, _w = np.polynomial.legendre.leggauss(_m)
    GAUSS_X01[_i, :_m] = 0.5 * (_x + 1.0)
    GAUSS_W01[_i, :_m] = 0.5 * _w


# ---------------------------------------------------------------------------
# pure-numpy implementations
# ---------------------------------------------------------------------------

def segment_field_sum_numpy(seg_start, seg_end, points, chunk=4096):
    """Vectorised over points in chunks; loops nothing but the chunks."""
    pts = np.ascontiguousarray(points, dtype=np.float64)
    n = pts.shape[0]
    out = np.zeros((n, 3))
    dmin = np.full(n, np.inf)
    jmin = np.zeros(n, dtype=np.int64)
    s0 = seg_start[None, :, :]
    s1 = seg_end[None, :, :]
    edge = seg_end - seg_start
    elen2 = np.einsum("ij,ij->i", edge, edge)[None, :]
    for lo in range(0, n, chunk):
        p = pts[lo : lo + chunk, None, :]
        r1 = p - s0
        r2 = p - s1
        n1 = np.linalg.norm(r1, axis=2)
        n2 = np.linalg.norm(r2, axis=2)
        dot = np.einsum("ijk,ijk->ij", r1, r2)
        cross = np.cross(r1, r2)
        denom = n1 * n2 * (n1 * n2 + dot)
        with np.errstate(divide="ignore", invalid="ignore"):
            f = np.where(denom > 0.0, (n1 + n2) / denom, 0.0)
        out[lo : lo + chunk] = np.einsum("ij,ijk->ik", f, cross)
        # point-to-chord distance (clamped projection)
        t = np.clip(np.einsum("ijk,jk->ij", r1, edge) / elen2, 0.0, 1.0)
        foot = s0 + t[:, :, None] * edge[None, :, :]
        dseg = np.linalg.norm(p - foot, axis=2)
        jm = np.argmin(dseg, axis=1)
        rows = np.arange(dseg.shape[0])
        dmin[lo : lo + chunk] = dseg[rows, jm]
        jmin[lo : lo + chunk] = jm
    return out, dmin, jmin


def neumann_pair_sum_numpy(a0, a1, b0, b1, order_idx):
    da = a1 - a0
    db = b1 - b0
    dots = da @ db.T
    total = 0.0
    for lvl in range(_N_ORDERS):
        ii, jj = np.nonzero(order_idx == lvl)
        if ii.size == 0:
            continue
        m = int(GAUSS_SIZES[lvl])
        x = GAUSS_X01[lvl, :m]
        w = GAUSS_W01[lvl, :m]
        ww = w[:, None] * w[None, :]
        chunk = max(1, 2_000_000 // (m * m))
        for lo in range(0, ii.size, chunk):
            i = ii[lo : lo + chunk]
            j = jj[lo : lo + chunk]
            pa = a0[i][:, None, :] + da[i][:, None, :] * x[None, :, None]
            pb = b0[j][:, None, :] + db[j][:, None, :] * x[None, :, None]
            r = np.linalg.norm(pa[:, :, None, :] - pb[:, None, :, :], axis=3)
            total += float(np.sum(np.sum(ww[None, :, :] / r, axis=(1, 2)) * dots[i, j]))
    return total


# ---------------------------------------------------------------------------
# numba implementations
# ---------------------------------------------------------------------------

if HAVE_NUMBA:
    from numba import njit

    @njit(cache=True)
    def _field_kernel(s0, s1, pts, out, dmin, jmin):  # pragma: no cover - jit
        ns = s0.shape[0]
        for i in range(pts.shape[0]):
            px, py, pz = pts[i, 0], pts[i, 1], pts[i, 2]
            bx = by = bz = 0.0
            dbest = 1.0e300
            jbest = 0
            for j in range(ns):
                r1x = px - s0[j, 0]
                r1y = py - s0[j, 1]
                r1z = pz - s0[j, 2]
                r2x = px - s1[j, 0]
                r2y = py - s1[j, 1]
                r2z = pz - s1[j, 2]
                n1 = np.sqrt(r1x * r1x + r1y * r1y + r1z * r1z)
                n2 = np.sqrt(r2x * r2x + r2y * r2y + r2z * r2z)
                dot = r1x * r2x + r1y * r2y + r1z * r2z
                denom = n1 * n2 * (n1 * n2 + dot)
                if denom > 0.0:
                    f = (n1 + n2) / denom
                    bx += f * (r1y * r2z - r1z * r2y)
                    by += f * (r1z * r2x - r1x * r2z)
                    bz += f * (r1x * r2y - r1y * r2x)
                ex = s1[j, 0] - s0[j, 0]
                ey = s1[j, 1] - s0[j, 1]
                ez = s1[j, 2] - s0[j, 2]
                el2 = ex * ex + ey * ey + ez * ez
                t = (r1x * ex + r1y * ey + r1z * ez) / el2
                if t < 0.0:
                    t = 0.0
                elif t > 1.0:
                    t = 1.0
                fx = r1x - t * ex
                fy = r1y - t * ey
                fz = r1z - t * ez
                d = np.sqrt(fx * fx + fy * fy + fz * fz)
                if d < dbest:
                    dbest = d
                    jbest = j
            out[i, 0] = bx
            out[i, 1] = by
            out[i, 2] = bz
            dmin[i] = dbest
            jmin[i] = jbest

    def segment_field_sum_numba(seg_start, seg_end, points):
        pts = np.ascontiguousarray(points, dtype=np.float64)
        out = np.empty((pts.shape[0], 3))
        dmin = np.empty(pts.shape[0])
        jmin = np.empty(pts.shape[0], dtype=np.int64)
        _field_kernel(
            np.ascontiguousarray(seg_start, dtype=np.float64),
            np.ascontiguousarray(seg_end, dtype=np.float64),
            pts,
            out,
            dmin,
            jmin,
        )
        return out, dmin, jmin

    @njit(cache=True)
    def _neumann_kernel(a0, a1, b0, b1, order_idx, gx, gw, sizes):  # pragma: no cover
        total = 0.0
        for i in range(a0.shape[0]):
            dax = a1[i, 0] - a0[i, 0]
            day = a1[i, 1] - a0[i, 1]
            daz = a1[i, 2] - a0[i, 2]
            for j in range(b0.shape[0]):
                dbx = b1[j, 0] - b0[j, 0]
                dby = b1[j, 1] - b0[j, 1]
                dbz = b1[j, 2] - b0[j, 2]
                dot = dax * dbx + day * dby + daz * dbz
                if dot == 0.0:
                    continue
                lvl = order_idx[i, j]
                m = sizes[lvl]
                acc = 0.0
                for p in range(m):
                    xp = gx[lvl, p]
                    ax = a0[i, 0] + dax * xp
                    ay = a0[i, 1] + day * xp
                    az = a0[i, 2] + daz * xp
                    wp = gw[lvl, p]
                    for q in range(m):
                        xq = gx[lvl, q]
                        rx = ax - (b0[j, 0] + dbx * xq)
                        ry = ay - (b0[j, 1] + dby * xq)
                        rz = az - (b0[j, 2] + dbz * xq)
                        acc += wp * gw[lvl, q] / np.sqrt(rx * rx + ry * ry + rz * rz)
                total += acc * dot
        return total

    def neumann_pair_sum_numba(a0, a1, b0, b1, order_idx):
        return _neumann_kernel(
            np.ascontiguousarray(a0, dtype=np.float64),
            np.ascontiguousarray(a1, dtype=np.float64),
            np.ascontiguousarray(b0, dtype=np.float64),
            np.ascontiguousarray(b1, dtype=np.float64),
            np.ascontiguousarray(order_idx, dtype=np.int64),
            GAUSS_X01,
            GAUSS_W01,
            GAUSS_SIZES,
        )


if BACKEND == "numba":
    segment_field_sum = segment_field_sum_numba
    neumann_pair_sum = neumann_pair_sum_numba
else:
    segment_field_sum = segment_field_sum_numpy
    neumann_pair_sum = neumann_pair_sum_numpy
