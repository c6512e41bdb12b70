import json
from itertools import product

import pytest
from hypothesis import given

from oracles import strip_rim_hooks
from conftest import odd_primes, partitions, primes
from signed_young.abacus import (
    BlockId,
    block_members,
    block_of,
    default_beads,
    from_core_quotient,
    from_partition,
    is_rouquier,
    max_rouquier_weight,
    p_core,
    p_quotient,
    p_weight,
    residue_content,
    rouquier_decompose,
    same_block,
    to_partition,
)
from signed_young.errors import ConfigurationError, NotDecomposableError, PreconditionError
from signed_young.partitions import Partition, all_partitions, is_p_regular, is_p_restricted


@pytest.mark.parametrize(
    "lam, p, b, positions",
    [((), 3, 3, {2, 1, 0}), ((3, 1, 1), 3, 6, {8, 5, 4, 2, 1, 0}), ((4, 2), 3, 6, {9, 6, 3, 2, 1, 0})],
)
def test_from_partition_examples(lam, p, b, positions):
    a = from_partition(lam, p, b)
    assert a.positions == frozenset(positions)
    assert to_partition(a) == Partition(lam)


def test_to_partition_example():
    assert to_partition(from_partition((1, 1, 1), 3, 3)) == Partition((1, 1, 1))
    assert from_partition((1, 1, 1), 3, 3).positions == frozenset({3, 2, 1})


def test_too_few_beads():
    with pytest.raises(ConfigurationError):
        from_partition((1, 1, 1, 1), 3, 3)
    with pytest.raises(ConfigurationError):
        from_partition((1,), 3, 4)


@given(partitions(), primes)
def test_round_trip_any_bead_count(lam, p):
    b = default_beads(lam, p)
    assert b % p == 0 and b >= len(lam)
    for extra in (0, p, 2 * p):
        a = from_partition(lam, p, b + extra)
        assert len(a.positions) == b + extra
        assert to_partition(a) == lam


def test_abacus_json_and_render():
    a = from_partition((6, 1, 1), 3)
    data = json.loads(json.dumps(a.to_json()))
    assert data == {"p": 3, "beads": 3, "positions": [8, 2, 1]}
    assert a.render().splitlines()[0] == "0 1 2"
    assert "●" in a.render()


@pytest.mark.parametrize(
    "lam, p, core, weight",
    [
        ((1, 1, 1), 3, (), 1),
        ((4, 2), 3, (4, 2), 0),
        ((3, 1, 1, 1, 1, 1), 3, (3, 1, 1), 1),
        ((3, 2, 2, 2, 1, 1), 3, (3, 1, 1), 2),
    ],
)
def test_core_and_weight_examples(lam, p, core, weight):
    assert p_core(lam, p) == Partition(core)
    assert p_weight(lam, p) == weight


@given(partitions(), primes)
def test_core_matches_rim_hook_stripping(lam, p):
    core, removed = strip_rim_hooks(lam, p)
    assert p_core(lam, p) == Partition(core)
    assert p_weight(lam, p) == removed


@pytest.mark.parametrize(
    "lam, p, quotient",
    [
        ((3, 1, 1, 1, 1, 1), 3, ((1,), (), ())),
        ((6, 1, 1), 3, ((), (), (1,))),
        ((3, 1, 1), 3, ((), (), ())),
    ],
)
def test_quotient_examples(lam, p, quotient):
    assert p_quotient(lam, p) == tuple(Partition(q) for q in quotient)


@given(partitions(), odd_primes)
def test_quotient_sizes_sum_to_weight(lam, p):
    q = p_quotient(lam, p)
    assert len(q) == p
    assert sum(x.size for x in q) == p_weight(lam, p)
    assert from_core_quotient(p_core(lam, p), q, p) == lam


@pytest.mark.parametrize("lam, p, content", [((3,), 3, (1, 1, 1)), ((1, 1, 1), 3, (1, 1, 1)), ((), 3, (0, 0, 0))])
def test_residue_content_examples(lam, p, content):
    assert residue_content(lam, p) == content


@pytest.mark.parametrize("p", [2, 3])
def test_blocks_are_residue_content_classes(p):
    # same core iff same residue content, checked exhaustively for small sizes
    for n in range(9):
        parts = all_partitions(n)
        for lam, mu in product(parts, parts):
            assert same_block(lam, mu, p) == (residue_content(lam, p) == residue_content(mu, p))


@pytest.mark.parametrize(
    "lam, mu, expected",
    [((3,), (1, 1, 1), True), ((6, 1, 1), (3, 3, 2), True), ((3,), (2, 1), True), ((4,), (3, 1), False)],
)
def test_same_block_examples(lam, mu, expected):
    # (2,1) has a 3-hook, so its 3-core is empty like that of (3)
    assert same_block(lam, mu, 3) is expected


def test_block_id_validates_core():
    with pytest.raises(ConfigurationError):
        BlockId(3, Partition((3,)), 1)
    assert BlockId(3, Partition((3, 1, 1)), 2).degree == 11


@pytest.mark.parametrize(
    "core, w, p, b, expected",
    [
        ((3, 1, 1), 2, 3, 6, True),
        ((3, 1, 1), 3, 3, 6, False),
        ((3, 1, 1), 1, 3, None, True),
        ((), 1, 3, None, True),
        ((2,), 0, 3, None, True),
    ],
)
def test_is_rouquier_examples(core, w, p, b, expected):
    assert is_rouquier(BlockId(p, Partition(core), w), b) is expected


def test_weight_one_is_not_automatically_rouquier():
    # on the abacus of (2) runner 2 is empty while runner 1 is not, so the condition fails even at w = 1
    assert is_rouquier(BlockId(3, Partition((2,)), 1)) is False


@given(odd_primes)
def test_rouquier_independent_of_bead_count(p):
    for n in range(8):
        for core in all_partitions(n):
            if p_core(core, p) != core:
                continue
            w = max_rouquier_weight(core, p)
            for weight in range(w + 2):
                block = BlockId(p, core, weight)
                base = is_rouquier(block)
                assert all(is_rouquier(block, default_beads(core, p) + k * p) == base for k in range(3))
                assert base == (weight == 0 or weight <= w)


def test_block_members_match_brute_force():
    for n in range(11):
        by_block = {}
        for lam in all_partitions(n):
            by_block.setdefault(block_of(lam, 3), set()).add(lam)
        for block, members in by_block.items():
            assert set(block_members(block)) == members


@pytest.mark.parametrize(
    "lam, mu, tau, tilde, sigma",
    [
        ((3, 1, 1, 1, 1, 1), (), (1,), (3, 1, 1, 1, 1, 1), (3, 1, 1)),
        ((6, 1, 1), (1,), (), (3, 1, 1), (6, 1, 1)),
        ((3, 2, 2, 2, 1, 1), (), (1, 1), (3, 2, 2, 2, 1, 1), (3, 1, 1)),
    ],
)
def test_rouquier_decompose_examples(lam, mu, tau, tilde, sigma):
    dec = rouquier_decompose(lam, 3)
    assert dec.core == Partition((3, 1, 1))
    assert (dec.mu, dec.tau, dec.lambda_tilde, dec.sigma) == tuple(map(Partition, (mu, tau, tilde, sigma)))
    assert dec.identities_hold() and dec.is_valid()
    assert json.loads(json.dumps(dec.to_json()))["lambda"] == str(Partition(lam))


def test_rouquier_decompose_rejects():
    with pytest.raises(NotDecomposableError):
        rouquier_decompose((3, 3, 2), 3)
    with pytest.raises(PreconditionError):
        rouquier_decompose((1, 1), 2)

def test_rouquier_decompose_needs_rouquier_block():
    with pytest.raises(PreconditionError):
        rouquier_decompose((5,), 3)  # core (2), weight 1, runner counts fail


def test_decomposition_regularity_in_valid_cases():
    for core in [(3, 1, 1), (), (1,)]:
        for w in range(3):
            block = BlockId(3, Partition(core), w)
            if not is_rouquier(block):
                continue
            for lam in block_members(block):
                try:
                    dec = rouquier_decompose(lam, 3)
                except NotDecomposableError:
                    continue
                assert dec.identities_hold()
                assert dec.is_valid() == (
                    is_p_restricted(dec.lambda_tilde, 3) and is_p_regular(dec.mu, 3) and is_p_regular(dec.tau, 3)
                )
