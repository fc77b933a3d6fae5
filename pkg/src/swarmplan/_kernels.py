"""Hot numeric kernels: k-nearest-neighbor search, min-jerk window sampling,
and the dual active-set QP core.

Every function here is njit-compatible numpy; :mod:`swarmplan._accel` decides
whether it runs compiled or as plain Python (``SWARMPLAN_NUMBA=0``).
"""

import numpy as np

from ._accel import maybe_njit

# Solver status codes shared with swarmplan.qpsolver
QP_OPTIMAL = 0
QP_INFEASIBLE = 1
QP_MAXITER = 2


@maybe_njit(cache=True)
def knn_indices(positions, M):
    """Indices of the min(M, N-1) nearest other rows, per row.

    Row i is ordered by ascending Euclidean distance from positions[i],
    ties broken by lower index (stable sort).
    """
    N = positions.shape[0]
    m = M if M < N - 1 else N - 1
    if m < 0:
        m = 0
    out = np.empty((N, m), dtype=np.int64)
    d = np.empty(N, dtype=np.float64)
    for i in range(N):
        for j in range(N):
            s = 0.0
            for k in range(positions.shape[1]):
                diff = positions[j, k] - positions[i, k]
                s += diff * diff
            d[j] = s
        d[i] = np.inf
        order = np.argsort(d, kind="mergesort")
        for j in range(m):
            out[i, j] = order[j]
    return out


@maybe_njit(cache=True)
def pairwise_min_dist(positions):
    """Minimum pairwise Euclidean distance; inf for fewer than two rows."""
    N = positions.shape[0]
    best = np.inf
    for i in range(N):
        for j in range(i + 1, N):
            s = 0.0
            for k in range(positions.shape[1]):
                diff = positions[i, k] - positions[j, k]
                s += diff * diff
            if s < best:
                best = s
    return np.sqrt(best)


@maybe_njit(cache=True)
def quintic_window(p0, disp, duration, t0, dt, steps):
    """Sample a rest-to-rest quintic segment at t0 + dt*(1..steps).

    Position p(t) = p0 + s(tau)*disp with s = 10 tau^3 - 15 tau^4 + 6 tau^5,
    tau = clip(t/duration, 0, 1); returns (pos, vel, acc) arrays (steps, n).
    Beyond the duration the segment holds the endpoint at rest.
    """
    n = p0.shape[0]
    pos = np.empty((steps, n), dtype=np.float64)
    vel = np.empty((steps, n), dtype=np.float64)
    acc = np.empty((steps, n), dtype=np.float64)
    for k in range(steps):
        t = t0 + dt * (k + 1)
        if t <= 0.0:
            s = 0.0
            sd = 0.0
            sdd = 0.0
        elif t >= duration:
            s = 1.0
            sd = 0.0
            sdd = 0.0
        else:
            tau = t / duration
            tau2 = tau * tau
            tau3 = tau2 * tau
            s = tau3 * (10.0 - 15.0 * tau + 6.0 * tau2)
            sd = 30.0 * tau2 * (1.0 - 2.0 * tau + tau2) / duration
            sdd = (60.0 * tau - 180.0 * tau2 + 120.0 * tau3) / (duration * duration)
        for c in range(n):
            pos[k, c] = p0[c] + s * disp[c]
            vel[k, c] = sd * disp[c]
            acc[k, c] = sdd * disp[c]
    return pos, vel, acc


@maybe_njit(cache=True)
def _solve_cholesky(L, U, y):
    """Solve (L L^T) x = y given lower factor L and its transpose U."""
    n = L.shape[0]
    x = y.copy()
    for i in range(n):
        s = x[i]
        if i > 0:
            s -= np.dot(L[i, :i], x[:i])
        x[i] = s / L[i, i]
    for i in range(n - 1, -1, -1):
        s = x[i]
        if i < n - 1:
            s -= np.dot(U[i, i + 1:], x[i + 1:])
        x[i] = s / U[i, i]
    return x


@maybe_njit(cache=True)
def qp_solve_dual_active_set(L, U, f, A, b, max_iter, feas_tol):
    """Dual active-set method for min 1/2 z'Hz + f'z  s.t.  A z <= b.

    H enters through its Cholesky factor (L lower, U = L.T).  Starts from
    the unconstrained optimum and adds violated constraints one at a time,
    taking dual steps that drop blocking constraints as needed.

    Returns (z, lam, status, iterations) with lam the multipliers of
    A z <= b (lam >= 0) and status one of QP_OPTIMAL / QP_INFEASIBLE /
    QP_MAXITER.
    """
    n = L.shape[0]
    mc = A.shape[0]
    x = _solve_cholesky(L, U, -f)
    lam = np.zeros(mc, dtype=np.float64)
    active = np.empty(n, dtype=np.int64)
    lam_act = np.zeros(n, dtype=np.float64)
    nact = 0
    iters = 0

    while iters < max_iter:
        iters += 1
        # most violated row of A z <= b
        viol = np.dot(A, x) - b
        p = -1
        worst = feas_tol
        for i in range(mc):
            if viol[i] > worst:
                worst = viol[i]
                p = i
        if p < 0:
            for j in range(nact):
                lam[active[j]] = lam_act[j]
            return x, lam, QP_OPTIMAL, iters

        cp = -A[p]  # constraint in >= form: cp'x >= -b[p]
        lam_p = 0.0
        while True:
            hinv_cp = _solve_cholesky(L, U, cp)
            if nact > 0:
                hinv_nt = np.empty((nact, n), dtype=np.float64)
                for j in range(nact):
                    hinv_nt[j] = _solve_cholesky(L, U, -A[active[j]])
                S = np.empty((nact, nact), dtype=np.float64)
                rhs = np.empty(nact, dtype=np.float64)
                for j in range(nact):
                    nj = -A[active[j]]
                    rhs[j] = np.dot(nj, hinv_cp)
                    for kk in range(nact):
                        S[j, kk] = np.dot(nj, hinv_nt[kk])
                r = np.linalg.solve(S, rhs)
                z = hinv_cp - np.dot(r, hinv_nt)
            else:
                r = np.zeros(0, dtype=np.float64)
                z = hinv_cp

            # cz = ||z||_H^2; compare against ||hinv_cp||_H^2 for a
            # scale-invariant rank test of cp against the active normals
            cz = np.dot(cp, z)
            full = np.dot(cp, hinv_cp)
            z_is_zero = cz <= 1e-13 * (1.0 + abs(full))

            # dual step length: first active multiplier driven to zero
            t1 = np.inf
            k1 = -1
            for j in range(nact):
                if r[j] > 1e-14:
                    tj = lam_act[j] / r[j]
                    if tj < t1:
                        t1 = tj
                        k1 = j
            # primal step length: violated constraint becomes tight
            if z_is_zero:
                t2 = np.inf
            else:
                t2 = (-b[p] - np.dot(cp, x)) / cz

            t = t1 if t1 < t2 else t2
            if not np.isfinite(t):
                return x, lam, QP_INFEASIBLE, iters

            if not z_is_zero:
                x = x + t * z
            lam_p += t
            for j in range(nact):
                lam_act[j] -= t * r[j]

            if t2 <= t1:
                active[nact] = p
                lam_act[nact] = lam_p
                nact += 1
                break
            # drop the blocking constraint and retry with the same p
            for j in range(k1, nact - 1):
                active[j] = active[j + 1]
                lam_act[j] = lam_act[j + 1]
            nact -= 1

    for j in range(nact):
        lam[active[j]] = lam_act[j]
    return x, lam, QP_MAXITER, iters
