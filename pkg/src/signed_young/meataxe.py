"""Hom spaces, Norton irreducibility testing, summand and isomorphism tests.

Hom spaces are found by spinning: a homomorphism out of ``A`` is fixed by
the images of a generating set of ``A``, so only those images are unknown.
For a signed permutation module ``M = Ind_H(chi)``, Frobenius reciprocity
turns homs to and from ``M`` into ``chi``-eigenvectors of the Young
subgroup, which avoids ever writing a system in ``dim M`` squared
unknowns.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .errors import DimensionMismatchError, DomainError, InconclusiveError, PreconditionError
from .gfalg import EchelonBasis, det_mod_p, inverse, matmul, nullspace, random_matrix_word, spin
from .specht import GroupRep, SignedPermRep


@dataclass(frozen=True)
class HomSpace:
    source: GroupRep
    target: GroupRep
    basis: tuple = field(default_factory=tuple)

    @property
    def dim(self) -> int:
        return len(self.basis)


def _check_compatible(a: GroupRep, b: GroupRep) -> None:
    if a.degree != b.degree or a.p != b.p:
        raise DimensionMismatchError(f"{a} and {b} are not modules for the same group algebra")


def _spin_basis(rep: GroupRep):
    """Spin unit vectors until the whole space is covered, recording provenance.

    Returns the spanning vectors (as rows) and, for each, either
    ``("seed", r)`` or ``("gen", parent, i)`` meaning ``s_i`` applied to
    vector ``parent``.
    """
    n, p = rep.dim, rep.p
    space = EchelonBasis(n, p)
    vecs, prov = [], []
    seeds = 0
    for e in range(n):
        if space.dim == n:
            break
        unit = np.zeros(n, dtype=np.int64)
        unit[e] = 1
        if space.contains(unit):
            continue
        space.add(unit)
        vecs.append(unit)
        prov.append(("seed", seeds))
        seeds += 1
        k = len(vecs) - 1
        while k < len(vecs) and space.dim < n:
            for i, g in enumerate(rep.gens):
                w = (g @ vecs[k]) % p
                if not space.contains(w):
                    space.add(w)
                    vecs.append(w)
                    prov.append(("gen", k, i))
            k += 1
    return np.array(vecs, dtype=np.int64), prov, seeds


def _hom_generic(a: GroupRep, b: GroupRep, max_entries: int = 60_000_000) -> list[np.ndarray]:
    p, n, m = a.p, a.dim, b.dim
    vecs, prov, r = _spin_basis(a)
    if n * m * m * r > max_entries:
        raise InconclusiveError(f"hom space {a} -> {b} is too large for the generic solver")
    basis_mat = vecs.T  # columns are the spanning vectors
    basis_inv = inverse(basis_mat, p)
    # images[j] is the linear map (m x r*m) from the seed images to f(vecs[j])
    images = np.zeros((n, m, r * m), dtype=np.int64)
    for j, item in enumerate(prov):
        if item[0] == "seed":
            images[j, :, item[1] * m : (item[1] + 1) * m] = np.eye(m, dtype=np.int64)
        else:
            images[j] = matmul(b.gens[item[2]], images[item[1]], p)
    kernel = np.eye(r * m, dtype=np.int64)
    current = images
    for ga, gb in zip(a.gens, b.gens):
        width = kernel.shape[1]
        if width == 0:
            break
        coords = matmul(basis_inv, matmul(ga, basis_mat, p), p)  # a_g in the spanning basis
        # lhs[j] = sum_k coords[k, j] current[k];  rhs[j] = gb @ current[j]
        lhs = matmul(coords.T, current.reshape(n, m * width), p).reshape(n, m, width)
        stacked = current.transpose(1, 0, 2).reshape(m, n * width)
        rhs = matmul(gb, stacked, p).reshape(m, n, width).transpose(1, 0, 2)
        eqs = ((lhs - rhs) % p).reshape(n * m, width)
        if not eqs.any():
            continue
        null = nullspace(eqs, p)  # rows
        kernel = matmul(kernel, null.T, p)
        current = matmul(current.reshape(n * m, width), null.T, p).reshape(n, m, -1)
    out = []
    flat = images.transpose(1, 0, 2).reshape(m * n, r * m)
    for y in kernel.T:
        cols = matmul(flat, y.reshape(-1, 1), p).reshape(m, n)  # f(vecs[j]) as columns
        out.append(matmul(cols, basis_inv, p))
    return out


def _eigen_space(rep: GroupRep, pairs, transpose: bool = False) -> np.ndarray:
    """Rows ``v`` with ``g_i v = chi v`` (or ``g_i^T v = chi v``) for each ``(i, chi)``."""
    p, n = rep.p, rep.dim
    if not pairs:
        return np.eye(n, dtype=np.int64)
    blocks = []
    for i, chi in pairs:
        g = rep.gens[i].T if transpose else rep.gens[i]
        blocks.append((g - chi * np.eye(n, dtype=np.int64)) % p)
    return nullspace(np.vstack(blocks), p)


def _orbit_vectors(m: SignedPermRep, rep: GroupRep, vecs: np.ndarray, transpose: bool) -> np.ndarray:
    """``out[c] = rho(g_c) v`` (or the contragredient action) for each coset ``c``.

    ``vecs`` has shape ``(k, n)``; the result has shape ``(dim M, k, n)``.
    """
    p = rep.p
    mats = [g.T if transpose else g for g in rep.gens]
    out = np.zeros((m.dim, vecs.shape[0], vecs.shape[1]), dtype=np.int64)
    out[m.root] = vecs % p
    for child, parent, i in m.coset_tree:
        out[child] = (out[parent] @ mats[i].T) % p
    return out


def _frobenius_into(s: GroupRep, m: SignedPermRep) -> np.ndarray:
    """Homs ``S -> M`` as an array ``(k, dim M, dim S)``."""
    phis = _eigen_space(s, m.subgroup_generators(), transpose=True)
    if phis.shape[0] == 0:
        return np.zeros((0, m.dim, s.dim), dtype=np.int64)
    z = _orbit_vectors(m, s, phis, transpose=True)  # z[c, j] = rho(g_c^{-1})^T phi_j
    return np.transpose(z, (1, 0, 2))


def _frobenius_out_of(m: SignedPermRep, s: GroupRep) -> np.ndarray:
    """Homs ``M -> S`` as an array ``(k, dim S, dim M)``."""
    vs = _eigen_space(s, m.subgroup_generators())
    if vs.shape[0] == 0:
        return np.zeros((0, s.dim, m.dim), dtype=np.int64)
    u = _orbit_vectors(m, s, vs, transpose=False)  # u[c, j] = rho(g_c) v_j
    return np.transpose(u, (1, 2, 0))


def hom_basis(a: GroupRep, b: GroupRep, method: str = "auto") -> HomSpace:
    """Basis of ``Hom(a, b)``; each element ``X`` satisfies ``X a_i = b_i X``.

    ``method`` is ``"auto"``, ``"generic"`` or ``"frobenius"`` (the last
    needs one side to be a :class:`SignedPermRep`).
    """
    _check_compatible(a, b)
    if method not in ("auto", "generic", "frobenius"):
        raise ValueError(f"unknown method {method!r}")
    if method != "generic":
        if isinstance(b, SignedPermRep) and not isinstance(a, SignedPermRep):
            return HomSpace(a, b, tuple(_frobenius_into(a, b)))
        if isinstance(a, SignedPermRep) and not isinstance(b, SignedPermRep):
            return HomSpace(a, b, tuple(_frobenius_out_of(a, b)))
        if isinstance(b, SignedPermRep):
            return HomSpace(a, b, tuple(_frobenius_into(a, b)))
        if method == "frobenius":
            raise PreconditionError("Frobenius reciprocity needs a signed permutation module")
    return HomSpace(a, b, tuple(_hom_generic(a, b)))


def endomorphism_dim(r: GroupRep) -> int:
    return hom_basis(r, r, method="generic").dim


# --- MeatAxe ---------------------------------------------------------------


@dataclass(frozen=True)
class MeatAxeResult:
    irreducible: bool
    seed: int
    attempts: int
    submodule_dim: int | None = None


def _projective_points(rows: np.ndarray, p: int):
    k = rows.shape[0]
    for lead in range(k):
        for tail in product(range(p), repeat=k - lead - 1):
            coeffs = np.zeros(k, dtype=np.int64)
            coeffs[lead] = 1
            coeffs[lead + 1 :] = tail
            yield (coeffs @ rows) % p


def meataxe(r: GroupRep, seed: int = 0, max_attempts: int = 64, max_len: int = 4, enum_cap: int = 1000) -> MeatAxeResult:
    """Norton's irreducibility test with seed-deterministic random algebra elements.

    For a singular element ``A`` with kernel ``N``: if no vector of ``N``
    spins to a proper submodule and one kernel vector of ``A^T`` spins to
    the whole dual space, the module is irreducible. Every vector of ``N`` is
    spun, up to scalars, so the verdict is exact; only the number of
    attempts is random.
    """
    if r.dim < 1:
        raise PreconditionError("MeatAxe needs a nonzero module")
    if r.dim == 1:
        return MeatAxeResult(True, seed, 0)
    n, p = r.dim, r.p
    gens = list(r.gens)
    gens_t = [g.T for g in gens]
    eye = np.eye(n, dtype=np.int64)
    for attempt in range(max_attempts):
        sub_seed = int(np.random.SeedSequence([seed, attempt]).generate_state(1)[0])
        a = random_matrix_word(gens, p, sub_seed, max_len=max_len)
        best = None
        for c in range(p):
            null = nullspace((a - c * eye) % p, p)
            if null.shape[0] and (best is None or null.shape[0] < best[1].shape[0]):
                best = (c, null)
                if null.shape[0] == 1:
                    break
        if best is None:
            continue
        c, null = best
        for v in null:
            dim = spin(v, gens, p).dim
            if dim < n:
                return MeatAxeResult(False, seed, attempt + 1, dim)
        k = null.shape[0]
        if k > 1:
            if (p**k - 1) // (p - 1) > enum_cap:
                continue
            for v in _projective_points(null, p):
                dim = spin(v, gens, p).dim
                if dim < n:
                    return MeatAxeResult(False, seed, attempt + 1, dim)
        w = nullspace(((a - c * eye) % p).T, p)[0]
        dim = spin(w, gens_t, p).dim
        if dim < n:
            return MeatAxeResult(False, seed, attempt + 1, n - dim)
        return MeatAxeResult(True, seed, attempt + 1)
    raise InconclusiveError(f"MeatAxe found no usable element for {r} in {max_attempts} attempts")


def meataxe_irreducible(r: GroupRep, seed: int = 0) -> bool:
    return meataxe(r, seed).irreducible


# --- summands and isomorphisms ----------------------------------------------


def _check_absolutely_irreducible(s: GroupRep) -> None:
    if s.dim > 300:
        return
    cached = getattr(s, "_end_dim", None)
    if cached is None:
        cached = s._end_dim = endomorphism_dim(s)
    if cached != 1:
        raise DomainError(f"End({s}) is not the prime field; summand test assumptions fail")


def is_summand_irred(s: GroupRep, m: GroupRep) -> bool:
    """Whether the irreducible ``s`` is a direct summand of ``m``.

    With ``End(s) = k`` every composite ``S -> M -> S`` is a scalar, so it
    is enough to look for one basis pair with a nonzero composite.
    """
    _check_compatible(s, m)
    _check_absolutely_irreducible(s)
    p = s.p
    if isinstance(m, SignedPermRep) and not isinstance(s, SignedPermRep):
        phis = _eigen_space(s, m.subgroup_generators(), transpose=True)
        vs = _eigen_space(s, m.subgroup_generators())
        if phis.shape[0] == 0 or vs.shape[0] == 0:
            return False
        z = _orbit_vectors(m, s, phis, transpose=True)  # (cosets, kphi, n)
        u = _orbit_vectors(m, s, vs, transpose=False)  # (cosets, kv, n)
        for j in range(vs.shape[0]):
            for k in range(phis.shape[0]):
                composite = (u[:, j, :].T @ z[:, k, :]) % p
                if composite.any():
                    return True
        return False
    into = hom_basis(s, m).basis
    out = hom_basis(m, s).basis
    return any(matmul(g, f, p).any() for f in into for g in out)


def is_isomorphic_irred(a: GroupRep, b: GroupRep) -> bool:
    """Isomorphism of two irreducible modules: equal dimension and a nonzero hom."""
    _check_compatible(a, b)
    if a.dim != b.dim:
        return False
    return hom_basis(a, b, method="generic").dim > 0


def is_isomorphic(a: GroupRep, b: GroupRep, exhaustive_cap: int = 3**8, samples: int = 256, seed: int = 0, max_dim: int = 200) -> bool:
    """Isomorphism of arbitrary modules by searching the hom space for an invertible element.

    Exhaustive when the hom space has at most ``exhaustive_cap`` elements;
    otherwise a failed random search raises :class:`InconclusiveError`.
    """
    _check_compatible(a, b)
    if a.dim != b.dim:
        return False
    if a.dim > max_dim:
        raise InconclusiveError(f"dimension {a.dim} exceeds the isomorphism search cap {max_dim}")
    basis = hom_basis(a, b, method="generic").basis
    h, p = len(basis), a.p
    if h == 0:
        return False
    stack = np.array(basis, dtype=np.int64)
    rng = np.random.default_rng(seed)
    tries = min(samples, p**h)
    for _ in range(tries):
        x = np.tensordot(rng.integers(0, p, h), stack, axes=1) % p
        if det_mod_p(x, p):
            return True
    if p**h <= exhaustive_cap:
        for coeffs in product(range(p), repeat=h):
            if any(coeffs) and det_mod_p(np.tensordot(np.array(coeffs), stack, axes=1) % p, p):
                return True
        return False
    raise InconclusiveError(f"no isomorphism found among {tries} samples of a {p}^{h} hom space")
