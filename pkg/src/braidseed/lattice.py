"""Integer lattice helpers: row Hermite normal form and membership tests.

All matrices are lists of integer rows. Lattices are spanned by rows.
"""

from __future__ import annotations


def hnf(rows, ncols=None):
    """Row-style Hermite normal form together with the transform.

    Returns (H, U) with H = U * A, H in echelon form with positive pivots,
    zero rows dropped from H (and the matching rows from U).
    """
    A = [list(r) for r in rows]
    if ncols is None:
        ncols = len(A[0]) if A else 0
    n = len(A)
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    r = 0
    for col in range(ncols):
        if r == n:
            break
        # euclid on column col among rows r..n-1
        while True:
            nz = [i for i in range(r, n) if A[i][col] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(A[i][col]))
            A[r], A[p] = A[p], A[r]
            U[r], U[p] = U[p], U[r]
            done = True
            for i in range(r + 1, n):
                if A[i][col]:
                    q = A[i][col] // A[r][col]
                    A[i] = [x - q * y for x, y in zip(A[i], A[r])]
                    U[i] = [x - q * y for x, y in zip(U[i], U[r])]
                    if A[i][col]:
                        done = False
            if done:
                break
        if r < n and A[r][col] != 0:
            if A[r][col] < 0:
                A[r] = [-x for x in A[r]]
                U[r] = [-x for x in U[r]]
            for i in range(r):
                q = A[i][col] // A[r][col]
                if q:
                    A[i] = [x - q * y for x, y in zip(A[i], A[r])]
                    U[i] = [x - q * y for x, y in zip(U[i], U[r])]
            r += 1
    return A[:r], U[:r]


def _pivots(H):
    out = []
    for row in H:
        out.append(next(j for j, x in enumerate(row) if x))
    return out


def solve(rows, v):
    """Integer x with x * A = v, or None when v is not in the row lattice."""
    v = list(v)
    if not rows:
        return [] if not any(v) else None
    H, U = hnf(rows, len(v))
    y = [0] * len(H)
    rest = v[:]
    for t, (row, p) in enumerate(zip(H, _pivots(H))):
        if rest[p] % row[p]:
            return None
        q = rest[p] // row[p]
        y[t] = q
        rest = [a - q * b for a, b in zip(rest, row)]
    if any(rest):
        return None
    x = [0] * len(rows)
    for t, q in enumerate(y):
        if q:
            x = [a + q * b for a, b in zip(x, U[t])]
    return x


def same_lattice(rows1, rows2, ncols):
    H1, _ = hnf(rows1, ncols)
    H2, _ = hnf(rows2, ncols)
    return H1 == H2


def spans_all(rows, ncols):
    """True iff the rows span Z^ncols."""
    H, _ = hnf(rows, ncols)
    return H == [[int(i == j) for j in range(ncols)] for i in range(ncols)]


def inverse_unitriangular(M):
    """Exact inverse of an upper unitriangular integer matrix."""
    n = len(M)
    inv = [[int(i == j) for j in range(n)] for i in range(n)]
    for j in range(n):
        for i in range(j - 1, -1, -1):
            inv[i][j] = -sum(M[i][k] * inv[k][j] for k in range(i + 1, j + 1))
    return inv
