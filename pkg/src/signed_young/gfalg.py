"""Exact dense linear algebra over a prime field GF(p).

Matrices are plain ``numpy`` int64 arrays with entries in ``[0, p)``; the
modulus travels as an explicit argument. Vectors are rows: the image of a
row vector ``v`` under a matrix ``g`` acting on columns is ``v @ g.T``.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatchError


def as_matrix(m, p: int) -> np.ndarray:
    a = np.array(m, dtype=np.int64)
    if a.ndim == 1:
        a = a.reshape(1, -1) if a.size else a.reshape(0, 0)
    return a % p


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def inv_mod(x: int, p: int) -> int:
    return pow(int(x), -1, p)


def echelon(m, p: int) -> tuple[np.ndarray, int, list[int]]:
    """Reduced row echelon form, rank and pivot columns."""
    a = as_matrix(m, p).copy()
    nrows, ncols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        a[r, c:] = (a[r, c:] * inv_mod(a[r, c], p)) % p
        col = a[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            a[hit, c:] = (a[hit, c:] - np.outer(col[hit], a[r, c:])) % p
        pivots.append(c)
        r += 1
    return a, r, pivots


def rank(m, p: int) -> int:
    return echelon(m, p)[1]


def nullspace(m, p: int) -> np.ndarray:
    """Rows spanning ``{x : m @ x = 0}``; shape ``(nullity, ncols)``."""
    a = as_matrix(m, p)
    ncols = a.shape[1]
    if a.shape[0] == 0:
        return identity(ncols)
    rref, r, pivots = echelon(a, p)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, c in enumerate(pivots):
            basis[k, c] = (-rref[i, f]) % p
    return basis


def solve(a, b, p: int) -> np.ndarray | None:
    """Some ``x`` with ``a @ x = b``, or None if the system is inconsistent."""
    a, b = as_matrix(a, p), np.array(b, dtype=np.int64) % p
    vector = b.ndim == 1
    if vector:
        b = b.reshape(-1, 1)
    if a.shape[0] != b.shape[0]:
        raise DimensionMismatchError(f"cannot solve {a.shape} x = {b.shape}")
    n = a.shape[1]
    rref, r, pivots = echelon(np.hstack([a, b]), p)
    if any(c >= n for c in pivots):
        return None
    x = np.zeros((n, b.shape[1]), dtype=np.int64)
    for i, c in enumerate(pivots):
        x[c] = rref[i, n:]
    return x.ravel() if vector else x


def inverse(m, p: int) -> np.ndarray:
    a = as_matrix(m, p)
    n = a.shape[0]
    if a.shape != (n, n):
        raise DimensionMismatchError(f"inverse of non-square {a.shape}")
    rref, r, _ = echelon(np.hstack([a, identity(n)]), p)
    if r < n or not np.array_equal(rref[:, :n], identity(n)):
        raise ZeroDivisionError("matrix is singular")
    return rref[:, n:]


def det_mod_p(m, p: int) -> int:
    a = as_matrix(m, p).copy()
    n = a.shape[0]
    if a.shape != (n, n):
        raise DimensionMismatchError(f"determinant of non-square {a.shape}")
    det = 1
    for c in range(n):
        nz = np.flatnonzero(a[c:, c])
        if nz.size == 0:
            return 0
        k = c + int(nz[0])
        if k != c:
            a[[c, k]] = a[[k, c]]
            det = -det
        piv = int(a[c, c])
        det = det * piv % p
        below = a[c + 1 :, c]
        hit = np.flatnonzero(below)
        if hit.size:
            factors = below[hit] * inv_mod(piv, p) % p
            a[c + 1 + hit, c:] = (a[c + 1 + hit, c:] - np.outer(factors, a[c, c:])) % p
    return det % p


def matmul(a, b, p: int) -> np.ndarray:
    """Product mod p; goes through float64 BLAS whenever that is exact."""
    a, b = np.asarray(a), np.asarray(b)
    inner = a.shape[-1] if a.ndim else 1
    if inner * (p - 1) ** 2 < 2**52:
        out = np.asarray(a, dtype=np.float64) @ np.asarray(b, dtype=np.float64)
        return np.rint(out).astype(np.int64) % p
    return (a.astype(np.int64) @ b.astype(np.int64)) % p


def random_matrix_word(gens, p: int, seed: int, n_terms: int = 6, max_len: int = 4) -> np.ndarray:
    """A seed-determined linear combination of short words in ``gens``.

    The first term has coefficient 1; later ones get random nonzero
    coefficients.
    """
    gens = [as_matrix(g, p) for g in gens]
    if not gens:
        raise ValueError("need at least one generator")
    n = gens[0].shape[0]
    if any(g.shape != (n, n) for g in gens):
        raise DimensionMismatchError("generators must be square of equal size")
    rng = np.random.default_rng(seed)
    out = np.zeros((n, n), dtype=np.int64)
    for t in range(n_terms):
        length = int(rng.integers(1, max_len + 1))
        word = gens[int(rng.integers(len(gens)))]
        for _ in range(length - 1):
            word = matmul(word, gens[int(rng.integers(len(gens)))], p)
        coef = 1 if t == 0 else int(rng.integers(1, p))
        out = (out + coef * word) % p
    return out


class EchelonBasis:
    """Incrementally grown subspace kept in reduced row echelon form."""

    def __init__(self, n: int, p: int):
        self.n, self.p = n, p
        self.rows = np.zeros((0, n), dtype=np.int64)
        self.pivots: list[int] = []

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def reduce(self, vectors) -> np.ndarray:
        x = as_matrix(vectors, self.p)
        if self.pivots and x.size:
            x = (x - matmul(x[:, self.pivots], self.rows, self.p)) % self.p
        return x

    def add(self, vectors) -> np.ndarray:
        """Add ``vectors``; return the new independent rows (echelonized)."""
        x = self.reduce(vectors)
        x = x[np.any(x, axis=1)] if x.size else x
        if x.size == 0:
            return np.zeros((0, self.n), dtype=np.int64)
        rref, r, piv = echelon(x, self.p)
        new = rref[:r]
        if r:
            if self.pivots:
                self.rows = (self.rows - matmul(self.rows[:, piv], new, self.p)) % self.p
            rows = np.vstack([self.rows, new])
            pivots = self.pivots + piv
            order = np.argsort(pivots, kind="stable")
            self.rows = rows[order]
            self.pivots = [pivots[i] for i in order]
        return new

    def contains(self, v) -> bool:
        return not np.any(self.reduce(v))


def spin(vectors, gens, p: int, stop_at: int | None = None) -> EchelonBasis:
    """Smallest subspace containing ``vectors`` and stable under every matrix in ``gens``.

    ``stop_at`` ends the search early once the dimension reaches it.
    """
    gens = [np.asarray(g, dtype=np.int64) for g in gens]
    vectors = as_matrix(vectors, p)
    n = vectors.shape[1] if vectors.size else (gens[0].shape[0] if gens else 0)
    space = EchelonBasis(n, p)
    limit = n if stop_at is None else min(stop_at, n)
    frontier = space.add(vectors)
    while frontier.shape[0] and space.dim < limit:
        fresh = []
        for g in gens:
            fresh.append(space.add(matmul(frontier, g.T, p)))
            if space.dim >= limit:
                break
        frontier = np.vstack(fresh)
    return space
