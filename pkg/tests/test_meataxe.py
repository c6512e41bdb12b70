from math import factorial, prod

import numpy as np
import pytest

from signed_young.errors import DimensionMismatchError, InconclusiveError
from signed_young.gfalg import det_mod_p, matmul
from signed_young.meataxe import (
    endomorphism_dim,
    hom_basis,
    is_isomorphic,
    is_isomorphic_irred,
    is_summand_irred,
    meataxe,
    meataxe_irreducible,
)
from signed_young.partitions import all_partitions, is_p_regular
from signed_young.specht import (
    dual_rep,
    perm_module,
    sign_rep,
    signed_perm_rep,
    specht_module,
    specht_rep,
    tensor_sign,
    trivial_rep,
    gram_matrix,
)


def check_homs(space):
    a, b, p = space.source, space.target, space.source.p
    for x in space.basis:
        for ga, gb in zip(a.gens, b.gens):
            assert np.array_equal(matmul(x, ga, p), matmul(gb, x, p))


def test_hom_examples():
    assert hom_basis(trivial_rep(3, 3), sign_rep(3, 3)).dim == 0
    s = specht_rep((2, 1), 3)
    space = hom_basis(s, s)
    assert space.dim == 1
    check_homs(space)
    assert endomorphism_dim(perm_module((2, 1), 3)) == 2


@pytest.mark.parametrize(
    "src, alpha, beta, p",
    [((2, 1), (2, 1), (), 3), ((3, 1), (2,), (2,), 3), ((2, 2), (2, 2), (), 3), ((3, 1, 1), (2,), (3,), 3), ((3, 2), (3, 1, 1), (), 5)],
)
def test_frobenius_matches_generic(src, alpha, beta, p):
    s = specht_rep(src, p)
    m = signed_perm_rep(alpha, beta, p)
    into_f, into_g = hom_basis(s, m), hom_basis(s, m, method="generic")
    out_f, out_g = hom_basis(m, s), hom_basis(m, s, method="generic")
    assert into_f.dim == into_g.dim and out_f.dim == out_g.dim
    check_homs(into_f)
    check_homs(out_f)


def test_hom_space_contains_identity():
    s = specht_rep((3, 1), 3)
    space = hom_basis(s, s)
    stack = np.array(space.basis).reshape(space.dim, -1)
    eye = np.eye(s.dim, dtype=np.int64).ravel()
    from signed_young.gfalg import rank

    assert rank(np.vstack([stack, eye]), 3) == space.dim


def test_hom_incompatible():
    with pytest.raises(DimensionMismatchError):
        hom_basis(trivial_rep(3, 3), trivial_rep(4, 3))


@pytest.mark.parametrize(
    "rep, expected",
    [
        (trivial_rep(4, 3), True),
        (sign_rep(4, 5), True),
        (specht_rep((2, 1), 3), False),
        (specht_rep((2, 1), 5), True),
        (specht_rep((3, 3, 2), 3), False),
        (specht_rep((6, 1, 1), 3), True),
        (perm_module((2, 1), 5), False),
    ],
)
def test_meataxe_examples(rep, expected):
    assert meataxe_irreducible(rep) is expected


def test_meataxe_submodule_dimension_is_proper():
    res = meataxe(specht_rep((3, 3, 2), 3))
    assert not res.irreducible and 0 < res.submodule_dim < 42


def test_meataxe_is_seed_deterministic():
    r = specht_rep((4, 2), 3)
    assert meataxe(r, seed=4) == meataxe(r, seed=4)
    assert all(meataxe(r, seed=s).irreducible == meataxe(r).irreducible for s in range(5))


@pytest.mark.parametrize("lam", [lam for n in range(2, 7) for lam in all_partitions(n) if is_p_regular(lam, 3)])
def test_meataxe_matches_gram(lam):
    expected = det_mod_p(gram_matrix(lam, 3), 3) != 0
    assert meataxe_irreducible(specht_module(lam, 3)) is expected


@pytest.mark.parametrize("lam, p", [((2, 1), 3), ((2, 1), 5), ((3,), 3), ((2, 2), 3), ((2, 2), 5)])
def test_trivial_summand_of_permutation_module(lam, p):
    # the composite trivial -> M -> trivial is multiplication by the multinomial
    d = sum(lam)
    multinomial = factorial(d) // prod(factorial(x) for x in lam)
    assert is_summand_irred(trivial_rep(d, p), perm_module(lam, p)) is (multinomial % p != 0)


def test_summand_examples():
    s = specht_rep((3, 1, 1, 1, 1, 1), 3)
    assert is_summand_irred(s, s)
    assert is_summand_irred(s, signed_perm_rep((3, 1, 1), (3,), 3))
    assert not is_summand_irred(s, signed_perm_rep((8,), (), 3))


def test_isomorphism_examples():
    assert is_isomorphic_irred(trivial_rep(3, 3), trivial_rep(3, 3))
    assert not is_isomorphic_irred(trivial_rep(3, 3), sign_rep(3, 3))
    s = specht_rep((2, 1), 5)
    assert is_isomorphic_irred(tensor_sign(s), s)


def test_isomorphism_of_reducible_modules():
    s = specht_rep((2, 1), 3)
    # S^(2,1) over GF(3) is uniserial: its dual has the composition factors in the opposite order
    assert is_isomorphic(s, s)
    assert not is_isomorphic(s, dual_rep(s))
    assert is_isomorphic(perm_module((2, 1), 3), perm_module((2, 1), 3))
    with pytest.raises(InconclusiveError):
        is_isomorphic(s, s, max_dim=1)
