"""
Dense exact linear algebra over Q(q): matrices are lists of rows of
QRational.  Elimination skips zero entries, which keeps the 27x27 braiding
computations cheap.
"""

from __future__ import annotations

from .scalar_field import ONE, ZERO, QRational, as_qrational


def zeros(n, m=None):
    m = n if m is None else m
    return [[ZERO] * m for _ in range(n)]


def identity(n):
    out = zeros(n)
    for i in range(n):
        out[i][i] = ONE
    return out


def matmul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = zeros(n, m)
    for i in range(n):
        row = a[i]
        acc = out[i]
        for t in range(k):
            x = row[t]
            if x:
                brow = b[t]
                for j in range(m):
                    y = brow[j]
                    if y:
                        acc[j] = acc[j] + x * y
    return out


def matvec(a, v):
    out = []
    for row in a:
        acc = ZERO
        for x, y in zip(row, v):
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return out


def add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scale(a, c):
    return [[x * c for x in row] for row in a]


def kron(a, b):
    n, m = len(a), len(a[0])
    p, r = len(b), len(b[0])
    out = zeros(n * p, m * r)
    for i in range(n):
        for j in range(m):
            x = a[i][j]
            if x:
                for k in range(p):
                    for t in range(r):
                        y = b[k][t]
                        if y:
                            out[i * p + k][j * r + t] = x * y
    return out


def transpose(a):
    return [list(col) for col in zip(*a)]


def equal(a, b) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def map_entries(a, fn):
    return [[fn(x) for x in row] for row in a]


def _pivot_cost(x: QRational):
    return (len(x.den), len(x.num))


def row_reduce(a):
    """
    Reduced row echelon form.  Returns (rref, pivot columns).
    """
    m = [[as_qrational(x) for x in row] for row in a]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        best = None
        for i in range(r, nrows):
            x = m[i][c]
            if x and (best is None or _pivot_cost(x) < _pivot_cost(m[best][c])):
                best = i
        if best is None:
            continue
        m[r], m[best] = m[best], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv if x else x for x in m[r]]
        prow = m[r]
        nz = [j for j in range(ncols) if prow[j]]
        for i in range(nrows):
            if i != r:
                f = m[i][c]
                if f:
                    row = m[i]
                    for j in nz:
                        row[j] = row[j] - f * prow[j]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a) -> int:
    return len(row_reduce(a)[1])


def nullspace(a):
    """Basis of {v : a v = 0} as a list of vectors."""
    ncols = len(a[0])
    rref, pivots = row_reduce(a)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for i, p in enumerate(pivots):
            x = rref[i][f]
            if x:
                v[p] = -x
        basis.append(v)
    return basis


def solve(a, b):
    """
    Unique solution x of a x = b (b a vector or a matrix given as a list of
    columns is not supported; pass a vector).  Raises ValueError when the
    system is inconsistent or underdetermined.
    """
    n = len(a[0])
    aug = [list(row) + [as_qrational(v)] for row, v in zip(a, b)]
    rref, pivots = row_reduce(aug)
    if n in pivots:
        raise ValueError("inconsistent linear system")
    if len(pivots) < n:
        raise ValueError(f"underdetermined linear system (rank {len(pivots)} < {n})")
    x = [ZERO] * n
    for i, p in enumerate(pivots):
        x[p] = rref[i][n]
    return x


def inverse(a):
    n = len(a)
    aug = [list(row) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(a)]
    rref, pivots = row_reduce(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in rref[:n]]


def in_span(vectors, v) -> bool:
    """Is v in the span of the given vectors?"""
    if not vectors:
        return not any(v)
    return rank(vectors + [v]) == rank(vectors)


def same_span(u, v) -> bool:
    r = rank(u)
    return r == rank(v) == rank(u + v)


def to_json(a):
    return [[x.to_json() for x in row] for row in a]
