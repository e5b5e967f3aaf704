"""numba kernels.  Signatures mirror ``_numpy`` exactly."""
import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def _check_row(H, R, i, n, p, delta, contain):
    # R holds p^contain * H^{-1}; rows > i are already valid
    if contain < 0:
        return True
    if delta[i] > contain:
        return False
    pd = 1
    for _ in range(delta[i]):
        pd *= p
    pc = 1
    for _ in range(contain - delta[i]):
        pc *= p
    R[i, i] = pc
    for j in range(i + 1, n):
        acc = 0
        for k in range(i + 1, j + 1):
            acc += H[i, k] * R[k, j]
        if acc % pd != 0:
            return False
        R[i, j] = -(acc // pd)
    return True


@njit(cache=True, nogil=True)
def _walk(n, p, delta, contain, out, emit):
    pw = np.ones(n, dtype=np.int64)
    for j in range(n):
        for _ in range(delta[j]):
            pw[j] *= p
    total = np.ones(n, dtype=np.int64)
    for i in range(n):
        t = 1
        for j in range(i + 1, n):
            t *= pw[j]
        total[i] = t
    H = np.zeros((n, n), dtype=np.int64)
    R = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        H[i, i] = pw[i]
    cur = np.zeros(n, dtype=np.int64)
    count = 0
    i = n - 1
    cur[i] = 0
    while True:
        if cur[i] < total[i]:
            x = cur[i]
            for j in range(n - 1, i, -1):
                H[i, j] = x % pw[j]
                x //= pw[j]
            cur[i] += 1
            if _check_row(H, R, i, n, p, delta, contain):
                if i == 0:
                    if emit:
                        out[count, :, :] = H
                    count += 1
                else:
                    i -= 1
                    cur[i] = 0
        else:
            i += 1
            if i == n:
                break
    return count


@njit(cache=True)
def enum_hnf(n, p, delta, contain):
    dummy = np.zeros((1, n, n), dtype=np.int64)
    m = _walk(n, p, delta, contain, dummy, False)
    out = np.zeros((m, n, n), dtype=np.int64)
    _walk(n, p, delta, contain, out, True)
    return out


@njit(cache=True, nogil=True)
def _inv_mod(a, m):
    # a is a unit mod m
    t, newt = 0, 1
    r, newr = m, a % m
    while newr != 0:
        q = r // newr
        t, newt = newt, t - q * newt
        r, newr = newr, r - q * newr
    if t < 0:
        t += m
    return t


@njit(cache=True, nogil=True)
def _val(x, p, cap):
    if x == 0:
        return cap
    k = 0
    while x % p == 0:
        x //= p
        k += 1
    return k


@njit(cache=True, nogil=True)
def smith_exponents(mats, p, M):
    """Local Smith exponents over Z_(p) by elimination modulo p^M."""
    m = mats.shape[0]
    n = mats.shape[1]
    mod = 1
    for _ in range(M):
        mod *= p
    out = np.zeros((m, n), dtype=np.int64)
    a = np.zeros((n, n), dtype=np.int64)
    for s in range(m):
        for i in range(n):
            for j in range(n):
                v = mats[s, i, j] % mod
                a[i, j] = v
        for t in range(n):
            bi, bj, bv = -1, -1, M
            for i in range(t, n):
                for j in range(t, n):
                    v = _val(a[i, j], p, M)
                    if v < bv:
                        bv = v
                        bi = i
                        bj = j
            if bi < 0:
                for k in range(t, n):
                    out[s, k] = M
                break
            out[s, t] = bv
            if bi != t:
                for j in range(n):
                    tmp = a[t, j]
                    a[t, j] = a[bi, j]
                    a[bi, j] = tmp
            if bj != t:
                for i in range(n):
                    tmp = a[i, t]
                    a[i, t] = a[i, bj]
                    a[i, bj] = tmp
            pv = 1
            for _ in range(bv):
                pv *= p
            u = a[t, t] // pv
            uinv = _inv_mod(u % mod, mod)
            for i in range(t + 1, n):
                if a[i, t] != 0:
                    f = ((a[i, t] // pv) % mod) * uinv % mod
                    for j in range(t, n):
                        a[i, j] = (a[i, j] - f * a[t, j]) % mod
            for j in range(t + 1, n):
                if a[t, j] != 0:
                    f = ((a[t, j] // pv) % mod) * uinv % mod
                    for i in range(t, n):
                        a[i, j] = (a[i, j] - f * a[i, t]) % mod
    return out


@njit(cache=True, nogil=True)
def symplectic_mask(mats, modulus):
    m = mats.shape[0]
    d = mats.shape[1]
    h = d // 2
    out = np.zeros(m, dtype=np.bool_)
    for s in range(m):
        ok = True
        for i in range(d):
            if not ok:
                break
            for j in range(i + 1, d):
                w = 0
                for k in range(h):
                    w += mats[s, i, k] * mats[s, j, h + k] - mats[s, i, h + k] * mats[s, j, k]
                if w % modulus != 0:
                    ok = False
                    break
        out[s] = ok
    return out


@njit(cache=True, nogil=True)
def _floordiv(a, b):
    return a // b


@njit(cache=True, nogil=True)
def _ceildiv(a, b):
    return -((-a) // b)


@njit(cache=True, nogil=True)
def _last_interval(A, rhs, y, n):
    # integer interval for the last coordinate given the others
    lo = -(1 << 62)
    hi = 1 << 62
    for f in range(A.shape[0]):
        r = rhs[f]
        for j in range(n - 1):
            r -= A[f, j] * y[j]
        a = A[f, n - 1]
        if a > 0:
            v = _floordiv(r, a)
            if v < hi:
                hi = v
        elif a < 0:
            v = _ceildiv(r, a)
            if v > lo:
                lo = v
        elif r < 0:
            return 1, 0
    return lo, hi


@njit(cache=True, nogil=True)
def _count_one(B, A, rhs, lo, hi):
    n = B.shape[0]
    base = np.zeros((n + 1, n), dtype=np.int64)
    y = np.zeros(n, dtype=np.int64)
    if n == 1:
        L, U = _last_interval(A, rhs, y, 1)
        d = B[0, 0]
        cs = _ceildiv(L, d)
        ce = _floordiv(U, d)
        return max(ce - cs + 1, 0)
    c = np.zeros(n, dtype=np.int64)
    cend = np.zeros(n, dtype=np.int64)
    total = 0
    i = 0
    c[0] = _ceildiv(lo[0], B[0, 0])
    cend[0] = _floordiv(hi[0], B[0, 0])
    while i >= 0:
        if c[i] > cend[i]:
            i -= 1
            if i >= 0:
                c[i] += 1
            continue
        for j in range(i, n):
            base[i + 1, j] = base[i, j] + c[i] * B[i, j]
        if i == n - 2:
            for j in range(n - 1):
                y[j] = base[j + 1, j]
            L, U = _last_interval(A, rhs, y, n)
            if L <= U:
                s0 = base[n - 1, n - 1]
                d = B[n - 1, n - 1]
                cs = _ceildiv(L - s0, d)
                ce = _floordiv(U - s0, d)
                if ce >= cs:
                    total += ce - cs + 1
            c[i] += 1
        else:
            i += 1
            s0 = base[i, i]
            c[i] = _ceildiv(lo[i] - s0, B[i, i])
            cend[i] = _floordiv(hi[i] - s0, B[i, i])
    return total


@njit(cache=True, nogil=True)
def count_points(B, A, b, vmin, vmax, scale, ts):
    """#{y in rowspan(B) : A y <= scale*t*b} for each t (B upper triangular)."""
    out = np.zeros(ts.shape[0], dtype=np.int64)
    for k in range(ts.shape[0]):
        st = scale * ts[k]
        out[k] = _count_one(B, A, st * b, st * vmin, st * vmax)
    return out
