"""Symmetric group modules over GF(p), given by the images of ``s_1, ..., s_{d-1}``.

Specht modules are built inside the permutation module on row tabloids,
in the basis of standard polytabloids. A tabloid is stored as the tuple of
row indices of ``1, ..., d``. The lexicographically smallest tabloid
occurring in the standard polytabloid ``e_t`` is ``{t}`` itself, with
coefficient 1. So any vector of the Specht module can be written in the
standard basis by repeatedly cancelling its smallest tabloid. That
replaces Garnir straightening.
"""

from __future__ import annotations

from functools import cached_property, lru_cache
from itertools import permutations, product
from math import factorial, prod

import numpy as np
from scipy import sparse

from .errors import DimensionMismatchError, InternalConsistencyError
from .gfalg import EchelonBasis, as_matrix, echelon, matmul
from .partitions import Partition, as_partition, check_prime, conjugate


class GroupRep:
    """Matrices (acting on column vectors) for the adjacent transpositions of ``Σ_degree``."""

    def __init__(self, degree: int, p: int, gens, dim: int | None = None, label: str = ""):
        self.degree = degree
        self.p = p
        self._gens = tuple(as_matrix(g, p) for g in gens)
        if dim is None:
            dim = self._gens[0].shape[0] if self._gens else 1
        self._dim = dim
        self.label = label
        if len(self._gens) != max(degree - 1, 0):
            raise DimensionMismatchError(f"Σ_{degree} needs {degree - 1} generators, got {len(self._gens)}")
        if any(g.shape != (dim, dim) for g in self._gens):
            raise DimensionMismatchError("generator shapes disagree with the dimension")

    @property
    def gens(self) -> tuple[np.ndarray, ...]:
        return self._gens

    @property
    def dim(self) -> int:
        return self._dim

    def __repr__(self) -> str:
        name = self.label or "GroupRep"
        return f"<{name}: Σ_{self.degree} over GF({self.p}), dim {self.dim}>"

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "p": self.p,
            "dim": self.dim,
            "label": self.label,
            "gens": [g.tolist() for g in self.gens],
        }


def relations_hold(rep: GroupRep) -> bool:
    """Involution, braid and far-commutation relations of the Coxeter presentation."""
    p, g = rep.p, rep.gens
    eye = np.eye(rep.dim, dtype=np.int64)
    for i, a in enumerate(g):
        if not np.array_equal(matmul(a, a, p), eye):
            return False
        for j in range(i + 1, len(g)):
            b = g[j]
            if j == i + 1:
                lhs = matmul(matmul(a, b, p), a, p)
                rhs = matmul(matmul(b, a, p), b, p)
            else:
                lhs, rhs = matmul(a, b, p), matmul(b, a, p)
            if not np.array_equal(lhs, rhs):
                return False
    return True


def trivial_rep(d: int, p: int) -> GroupRep:
    return GroupRep(d, p, [[[1]]] * (d - 1), dim=1, label="trivial")


def sign_rep(d: int, p: int) -> GroupRep:
    return GroupRep(d, p, [[[p - 1]]] * (d - 1), dim=1, label="sgn")


def tensor_sign(r: GroupRep) -> GroupRep:
    return GroupRep(r.degree, r.p, [(-g) % r.p for g in r.gens], dim=r.dim, label=f"{r.label}⊗sgn")


def dual_rep(r: GroupRep) -> GroupRep:
    # generators are involutions, so the contragredient is the transpose
    return GroupRep(r.degree, r.p, [g.T for g in r.gens], dim=r.dim, label=f"{r.label}*")


def submodule_rep(r: GroupRep, basis) -> GroupRep:
    """Action on an invariant subspace spanned by the rows of ``basis``."""
    rref, k, piv = echelon(basis, r.p)
    rows = rref[:k]
    gens = []
    for g in r.gens:
        images = (rows @ g.T) % r.p
        if np.any((images - images[:, piv] @ rows) % r.p):
            raise DimensionMismatchError("subspace is not invariant")
        gens.append(images[:, piv].T)
    return GroupRep(r.degree, r.p, gens, dim=k, label=f"sub({r.label})")


def quotient_rep(r: GroupRep, basis) -> GroupRep:
    """Action on ``V / U`` for the invariant subspace ``U`` spanned by the rows of ``basis``."""
    p = r.p
    space = EchelonBasis(r.dim, p)
    space.add(basis)
    keep = [c for c in range(r.dim) if c not in set(space.pivots)]
    gens = []
    for g in r.gens:
        images = space.reduce(g[:, keep].T)
        gens.append(images[:, keep].T)
    return GroupRep(r.degree, p, gens, dim=len(keep), label=f"{r.label}/U")


# --- signed permutation modules -------------------------------------------


class SignedPermRep(GroupRep):
    """``M(alpha|beta)``: induced from ``Σ_alpha × Σ_beta``, trivial on alpha, sign on beta.

    Basis vectors are cosets, recorded as the tuple of block labels of
    ``1..d`` (blocks of alpha first, then of beta). Cosets are listed in
    lexicographic order. The generators are stored as signed permutations
    and expanded to dense matrices only when ``gens`` is read.
    """

    def __init__(self, alpha, beta, p: int):
        check_prime(p)
        self.alpha, self.beta = as_partition(alpha), as_partition(beta)
        sizes = list(self.alpha) + list(self.beta)
        self.n_alpha_blocks = len(self.alpha)
        d = sum(sizes)
        self.degree, self.p = d, p
        self.label = f"M({self.alpha}|{self.beta})"
        start = tuple(b for b, s in enumerate(sizes) for _ in range(s))
        self.cosets = sorted(set(_multiset_permutations(start)))
        self._dim = len(self.cosets)
        index = {c: k for k, c in enumerate(self.cosets)}
        self.root = index[start]
        self.perm, self.sign = [], []
        for i in range(d - 1):
            perm = np.empty(self._dim, dtype=np.int64)
            sign = np.ones(self._dim, dtype=np.int64)
            for k, c in enumerate(self.cosets):
                if c[i] == c[i + 1]:
                    perm[k] = k
                    if c[i] >= self.n_alpha_blocks:
                        sign[k] = -1
                else:
                    swapped = list(c)
                    swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
                    perm[k] = index[tuple(swapped)]
            self.perm.append(perm)
            self.sign.append(sign)

    @cached_property
    def _dense(self) -> tuple[np.ndarray, ...]:
        out = []
        for perm, sign in zip(self.perm, self.sign):
            g = np.zeros((self._dim, self._dim), dtype=np.int64)
            g[perm, np.arange(self._dim)] = sign % self.p
            out.append(g)
        return tuple(out)

    @property
    def gens(self) -> tuple[np.ndarray, ...]:
        return self._dense

    def subgroup_generators(self) -> list[tuple[int, int]]:
        """``(i, chi)`` for each ``s_i`` in the Young subgroup and its character value."""
        sizes = list(self.alpha) + list(self.beta)
        out, pos = [], 0
        for b, s in enumerate(sizes):
            chi = 1 if b < self.n_alpha_blocks else -1
            out.extend((i, chi) for i in range(pos, pos + s - 1))
            pos += s
        return out

    @cached_property
    def coset_tree(self) -> list[tuple[int, int, int]]:
        """BFS edges ``(child, parent, i)`` with ``g_child = s_i g_parent``, root first."""
        seen = {self.root}
        order = [self.root]
        edges = []
        for k in order:
            for i, perm in enumerate(self.perm):
                c = int(perm[k])
                if c not in seen:
                    seen.add(c)
                    order.append(c)
                    edges.append((c, k, i))
        if len(seen) != self._dim:
            raise InternalConsistencyError("coset graph is not connected")
        return edges


def _multiset_permutations(seq):
    counts: dict = {}
    for x in seq:
        counts[x] = counts.get(x, 0) + 1
    keys = sorted(counts)
    n = len(seq)
    out: list = []

    def rec(prefix):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for x in keys:
            if counts[x]:
                counts[x] -= 1
                prefix.append(x)
                rec(prefix)
                prefix.pop()
                counts[x] += 1

    rec([])
    return out


def signed_perm_rep(alpha, beta, p: int) -> SignedPermRep:
    return SignedPermRep(alpha, beta, p)


def perm_module(lam, p: int) -> SignedPermRep:
    return SignedPermRep(lam, Partition(), p)


# --- Specht modules --------------------------------------------------------


def standard_tableaux(lam) -> list[tuple[tuple[int, ...], ...]]:
    """Standard tableaux of shape ``lam`` (rows of entries), ordered by tabloid key."""
    lam = as_partition(lam)
    d = lam.size
    out = []

    def rec(rows: list[list[int]], k: int):
        if k > d:
            out.append(tuple(tuple(r) for r in rows))
            return
        for i in range(len(lam)):
            if len(rows[i]) < lam[i] and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(k)
                rec(rows, k + 1)
                rows[i].pop()

    rec([[] for _ in lam], 1)
    out.sort(key=_tabloid_key)
    return out


def _tabloid_key(t) -> tuple[int, ...]:
    d = sum(len(r) for r in t)
    key = [0] * d
    for i, row in enumerate(t):
        for x in row:
            key[x - 1] = i
    return tuple(key)


def _perm_sign(perm) -> int:
    sign, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


@lru_cache(maxsize=64)
def _column_moves(m: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    return tuple((perm, _perm_sign(perm)) for perm in permutations(range(m)))


def polytabloid(t) -> dict[tuple[int, ...], int]:
    """``e_t`` as a map tabloid key -> ±1."""
    d = sum(len(r) for r in t)
    columns = []
    for j in range(len(t[0]) if t else 0):
        columns.append([row[j] for row in t if len(row) > j])
    out = {}
    for choice in product(*(_column_moves(len(col)) for col in columns)):
        key = [0] * d
        sign = 1
        for col, (perm, s) in zip(columns, choice):
            sign *= s
            for k, x in enumerate(col):
                key[x - 1] = perm[k]
        out[tuple(key)] = sign
    return out


def column_group_order(lam) -> int:
    return prod(factorial(c) for c in conjugate(as_partition(lam)))


class SpechtBasis:
    """Standard polytabloids of one shape, with straightening into their span."""

    def __init__(self, lam, p: int):
        self.lam = as_partition(lam)
        self.p = p
        self.tableaux = standard_tableaux(self.lam)
        self.keys = [_tabloid_key(t) for t in self.tableaux]
        self.index = {k: i for i, k in enumerate(self.keys)}
        self._poly: dict[int, dict] = {}

    def poly(self, i: int) -> dict:
        if i not in self._poly:
            self._poly[i] = polytabloid(self.tableaux[i])
        return self._poly[i]

    def coordinates(self, vec: dict) -> dict[int, int]:
        """Standard-basis coordinates of a tabloid combination lying in the Specht module."""
        p = self.p
        v = {k: c % p for k, c in vec.items() if c % p}
        coords: dict[int, int] = {}
        while v:
            key = min(v)
            i = self.index.get(key)
            if i is None:
                raise InternalConsistencyError(f"vector is not in S^{self.lam}: leading tabloid {key}")
            c = v[key]
            coords[i] = c
            for k, s in self.poly(i).items():
                x = (v.get(k, 0) - c * s) % p
                if x:
                    v[k] = x
                else:
                    v.pop(k, None)
        return coords

    def generator_matrix(self, i: int) -> np.ndarray:
        """Matrix of ``s_{i+1}`` (0-indexed ``i``) on the standard polytabloids."""
        n, p = len(self.tableaux), self.p
        g = np.zeros((n, n), dtype=np.int64)
        for j, t in enumerate(self.tableaux):
            key = self.keys[j]
            a, b = i, i + 1  # entries i+1, i+2 in 1-indexed terms
            row_a, row_b = key[a], key[b]
            col_a = t[row_a].index(a + 1)
            col_b = t[row_b].index(b + 1)
            if col_a == col_b:
                g[j, j] = p - 1
                continue
            swapped = list(key)
            swapped[a], swapped[b] = row_b, row_a
            target = self.index.get(tuple(swapped))
            if target is not None and row_a != row_b and _is_standard_swap(t, a + 1):
                g[target, j] = 1
                continue
            moved = {}
            for k, s in self.poly(j).items():
                k2 = list(k)
                k2[a], k2[b] = k2[b], k2[a]
                moved[tuple(k2)] = s
            for r, c in self.coordinates(moved).items():
                g[r, j] = c
        return g


def _is_standard_swap(t, x: int) -> bool:
    """Swapping ``x`` and ``x+1`` in standard ``t`` leaves it standard (different row and column)."""
    pos = {v: (i, j) for i, row in enumerate(t) for j, v in enumerate(row)}
    (r1, c1), (r2, c2) = pos[x], pos[x + 1]
    return r1 != r2 and c1 != c2


@lru_cache(maxsize=256)
def _specht_basis(lam: Partition, p: int) -> SpechtBasis:
    return SpechtBasis(lam, p)


def specht_rep(lam, p: int) -> GroupRep:
    """``S^lam`` in the standard polytabloid basis."""
    check_prime(p)
    lam = as_partition(lam)
    basis = _specht_basis(lam, p)
    d = lam.size
    gens = [basis.generator_matrix(i) for i in range(d - 1)]
    return GroupRep(d, p, gens, dim=len(basis.tableaux), label=f"S^{lam}")


def specht_module(lam, p: int) -> GroupRep:
    """A cheap model of ``S^lam`` up to isomorphism.

    When the column group of ``lam'`` is smaller, uses
    ``S^lam ≅ (S^{lam'})* ⊗ sgn`` instead of building polytabloids of
    ``lam`` directly.
    """
    lam = as_partition(lam)
    conj = conjugate(lam)
    if column_group_order(conj) < column_group_order(lam):
        r = tensor_sign(dual_rep(specht_rep(conj, p)))
        r.label = f"S^{lam}"
        return r
    return specht_rep(lam, p)


def gram_matrix(lam, p: int) -> np.ndarray:
    """Gram matrix of the standard form on the standard polytabloids, mod p."""
    check_prime(p)
    lam = as_partition(lam)
    basis = _specht_basis(lam, p)
    cols: dict = {}
    rows, idx, data = [], [], []
    for i in range(len(basis.tableaux)):
        for k, s in basis.poly(i).items():
            rows.append(i)
            idx.append(cols.setdefault(k, len(cols)))
            data.append(s)
    m = sparse.csr_matrix((data, (rows, idx)), shape=(len(basis.tableaux), max(len(cols), 1)), dtype=np.int64)
    return np.asarray((m @ m.T).todense(), dtype=np.int64) % p
