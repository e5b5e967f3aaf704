"""Pure-numpy fallbacks.  Same signatures as the numba kernels, different algorithms:
level-wise batch expansion instead of depth-first walks."""
import numpy as np


def enum_hnf(n, p, delta, contain):
    delta = np.asarray(delta, dtype=np.int64)
    pw = p ** delta
    if contain >= 0 and np.any(delta > contain):
        return np.zeros((0, n, n), dtype=np.int64)
    # states: partial H (rows i..n-1 filled) and R = p^contain * H^{-1} rows
    H = np.zeros((1, n, n), dtype=np.int64)
    R = np.zeros((1, n, n), dtype=np.int64)
    for i in range(n - 1, -1, -1):
        radices = [int(pw[j]) for j in range(i + 1, n)]
        if radices:
            grids = np.stack(
                np.meshgrid(*[np.arange(r, dtype=np.int64) for r in radices], indexing="ij"), -1
            ).reshape(-1, len(radices))
        else:
            grids = np.zeros((1, 0), dtype=np.int64)
        k = grids.shape[0]
        m = H.shape[0]
        H = np.repeat(H, k, axis=0)
        R = np.repeat(R, k, axis=0)
        H[:, i, i] = pw[i]
        H[:, i, i + 1:] = np.tile(grids, (m, 1))
        if contain >= 0:
            pd = int(pw[i])
            R[:, i, i] = p ** (contain - int(delta[i]))
            keep = np.ones(H.shape[0], dtype=bool)
            for j in range(i + 1, n):
                acc = np.einsum("mk,mk->m", H[:, i, i + 1:j + 1], R[:, i + 1:j + 1, j])
                keep &= acc % pd == 0
                R[:, i, j] = -(acc // pd)
            H = H[keep]
            R = R[keep]
    return H


def _det_divisors(mats, p, M):
    # local exponents via gcd of k x k minors: nu_1+..+nu_k = min val of k-minors
    from itertools import combinations

    m, n, _ = mats.shape
    out = np.zeros((m, n), dtype=np.int64)
    for s in range(m):
        a = [[int(x) for x in row] for row in mats[s]]
        prev = 0
        for k in range(1, n + 1):
            best = M * k
            for rows in combinations(range(n), k):
                for cols in combinations(range(n), k):
                    d = _det([[a[r][c] for c in cols] for r in rows])
                    if d:
                        v = 0
                        while d % p == 0:
                            d //= p
                            v += 1
                        best = min(best, v)
            out[s, k - 1] = min(best - prev, M)
            prev = best
    return out


def _det(m):
    from ..lattice.matrix import bareiss_det

    return bareiss_det(m)


def smith_exponents(mats, p, M):
    return _det_divisors(np.asarray(mats, dtype=np.int64), p, M)


def symplectic_mask(mats, modulus):
    mats = np.asarray(mats, dtype=np.int64)
    d = mats.shape[1]
    h = d // 2
    J = np.zeros((d, d), dtype=np.int64)
    J[:h, h:] = np.eye(h, dtype=np.int64)
    J[h:, :h] = -np.eye(h, dtype=np.int64)
    G = mats @ J @ np.transpose(mats, (0, 2, 1))
    return np.all(G % modulus == 0, axis=(1, 2))


def _ceildiv(a, b):
    return -((-a) // b)


def _count_one(B, A, rhs, lo, hi):
    n = B.shape[0]
    base = np.zeros((1, n), dtype=np.int64)
    for i in range(n - 1):
        s0 = base[:, i]
        cs = _ceildiv(lo[i] - s0, B[i, i])
        ce = (hi[i] - s0) // B[i, i]
        cnt = np.maximum(ce - cs + 1, 0)
        idx = np.repeat(np.arange(base.shape[0]), cnt)
        if idx.size == 0:
            return 0
        starts = np.cumsum(cnt) - cnt
        offs = np.arange(idx.size) - np.repeat(starts, cnt)
        c = cs[idx] + offs
        base = base[idx] + c[:, None] * B[i][None, :]
    # last coordinate from the facet inequalities
    r = rhs[None, :] - base[:, : n - 1] @ A[:, : n - 1].T
    a = A[:, n - 1]
    big = np.int64(1 << 62)
    L = np.full(base.shape[0], -big)
    U = np.full(base.shape[0], big)
    pos, neg, zer = a > 0, a < 0, a == 0
    if pos.any():
        U = np.minimum(U, (r[:, pos] // a[pos]).min(axis=1))
    if neg.any():
        L = np.maximum(L, _ceildiv(r[:, neg], a[neg]).max(axis=1))
    ok = np.ones(base.shape[0], dtype=bool)
    if zer.any():
        ok = (r[:, zer] >= 0).all(axis=1)
    s0 = base[:, n - 1]
    d = B[n - 1, n - 1]
    cs = _ceildiv(L - s0, d)
    ce = (U - s0) // d
    cnt = np.where(ok & (L <= U), np.maximum(ce - cs + 1, 0), 0)
    return int(cnt.sum())


def count_points(B, A, b, vmin, vmax, scale, ts):
    B = np.asarray(B, dtype=np.int64)
    A = np.asarray(A, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    out = np.zeros(len(ts), dtype=np.int64)
    for k, t in enumerate(ts):
        st = int(scale) * int(t)
        out[k] = _count_one(B, A, st * b, st * np.asarray(vmin), st * np.asarray(vmax))
    return out
