import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import adic_split_search, conjugate_by_columns, dominates_by_sums
from conftest import partitions, primes
from signed_young.errors import DomainError, ModulusError, PartitionError, SizeMismatchError
from signed_young.partitions import (
    Node,
    Partition,
    add_scaled,
    addable_nodes,
    all_partitions,
    conjugate,
    count_standard_tableaux,
    crystal_path,
    dominates,
    is_p_regular,
    is_p_restricted,
    mullineux,
    nodes,
    p_adic_split,
    removable_nodes,
    residue,
    restricted_mullineux,
)


@pytest.mark.parametrize(
    "text, parts",
    [("6,1,1", (6, 1, 1)), ("-", ()), ("3", (3,)), (" 2,2 ", (2, 2))],
)
def test_parse_round_trip(text, parts):
    lam = Partition.parse(text)
    assert tuple(lam) == parts
    assert Partition.parse(str(lam)) == lam


@pytest.mark.parametrize("bad", ["2,3", "a,1", "1,,1", "2,0", "1,-1"])
def test_parse_rejects(bad):
    with pytest.raises(PartitionError):
        Partition.parse(bad)


def test_trailing_zeros_are_dropped():
    assert Partition((3, 1, 0, 0)) == Partition((3, 1))
    assert str(Partition(())) == "-"


@pytest.mark.parametrize(
    "lam, expected",
    [((), ()), ((2, 2), (2, 2)), ((6, 4, 1), (3, 2, 2, 2, 1, 1))],
)
def test_conjugate_examples(lam, expected):
    assert conjugate(lam) == Partition(expected)


@given(partitions())
def test_conjugate_matches_column_count(lam):
    assert tuple(conjugate(lam)) == conjugate_by_columns(lam)
    assert conjugate(conjugate(lam)) == lam


@pytest.mark.parametrize(
    "lam, mu, expected",
    [
        ((3, 1), (2, 2), True),
        ((2, 2), (3, 1), False),
        ((3, 2, 2, 2, 1, 1), (3, 1, 1, 1, 1, 1, 1, 1, 1), True),
    ],
)
def test_dominates_examples(lam, mu, expected):
    assert dominates(lam, mu) is expected


def test_dominance_against_partial_sums():
    for n in range(9):
        for lam in all_partitions(n):
            for mu in all_partitions(n):
                assert dominates(lam, mu) == dominates_by_sums(lam, mu)
                # conjugation reverses dominance
                assert dominates(lam, mu) == dominates(conjugate(mu), conjugate(lam))


def test_dominates_size_mismatch():
    with pytest.raises(SizeMismatchError):
        dominates((2,), (1,))


@pytest.mark.parametrize(
    "lam, p, regular, restricted",
    [
        ((3, 1, 1, 1, 1, 1), 3, False, True),
        ((6, 1, 1), 3, True, False),
        ((), 3, True, True),
        ((2, 2), 2, False, False),
    ],
)
def test_regular_restricted_examples(lam, p, regular, restricted):
    assert is_p_regular(lam, p) is regular
    assert is_p_restricted(lam, p) is restricted


@given(partitions(), primes)
def test_regular_iff_conjugate_restricted(lam, p):
    assert is_p_regular(lam, p) == is_p_restricted(conjugate(lam), p)


def test_add_scaled_examples():
    assert add_scaled((3, 1, 1, 1, 1, 1), (1,), 3) == Partition((6, 1, 1, 1, 1, 1))
    assert add_scaled((3, 1, 1), (), 3) == Partition((3, 1, 1))
    with pytest.raises(PartitionError):
        add_scaled((1,), (0, 1), 3)


@pytest.mark.parametrize(
    "lam, p, tau, mu",
    [((6, 1, 1), 3, (3, 1, 1), (1,)), ((2, 1), 3, (2, 1), ()), ((3,), 3, (), (1,))],
)
def test_p_adic_split_examples(lam, p, tau, mu):
    assert p_adic_split(lam, p) == (Partition(tau), Partition(mu))


@pytest.mark.parametrize("p", [2, 3, 5])
def test_p_adic_split_is_the_unique_decomposition(p):
    for n in range(11):
        for lam in all_partitions(n):
            found = adic_split_search(lam, p)
            assert len(found) == 1
            tau, mu = p_adic_split(lam, p)
            assert (tuple(tau), tuple(mu)) == found[0]


def test_modulus_validation():
    with pytest.raises(ModulusError):
        p_adic_split((2, 1), 1)
    with pytest.raises(ModulusError):
        mullineux((2, 1), 4)


def test_nodes_and_residues():
    assert [residue(n, 3) for n in nodes((3,))] == [0, 1, 2]
    assert set(addable_nodes((2, 2))) == {Node(1, 3), Node(3, 1)}
    assert removable_nodes(()) == []
    assert [residue(n, 3) for n in nodes((1, 1, 1))] == [0, 2, 1]


@given(partitions())
def test_addable_removable_counts(lam):
    # corners and outer corners alternate along the rim
    assert len(addable_nodes(lam)) == len(removable_nodes(lam)) + 1


@pytest.mark.parametrize(
    "lam, p, expected",
    [((3,), 3, (2, 1)), ((2, 1), 3, (3,)), ((2,), 5, (1, 1)), ((3, 1, 1), 3, (3, 1, 1))],
)
def test_mullineux_examples(lam, p, expected):
    assert mullineux(lam, p) == Partition(expected)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_mullineux_involution_on_regular_partitions(p):
    for n in range(11):
        regular = [lam for lam in all_partitions(n) if is_p_regular(lam, p)]
        images = [mullineux(lam, p) for lam in regular]
        assert all(m.size == n and is_p_regular(m, p) for m in images)
        assert all(mullineux(m, p) == lam for lam, m in zip(regular, images))
        assert sorted(images) == sorted(regular)


def test_mullineux_trivial_in_characteristic_two():
    for n in range(10):
        for lam in all_partitions(n):
            if is_p_regular(lam, 2):
                assert mullineux(lam, 2) == lam


@given(partitions(max_part=4, max_len=4), st.sampled_from([5, 7, 11]))
def test_mullineux_is_conjugation_for_large_p(lam, p):
    if lam.size < p:
        assert mullineux(lam, p) == conjugate(lam)


def test_mullineux_rejects_singular():
    with pytest.raises(DomainError):
        mullineux((1, 1, 1), 3)


def test_restricted_mullineux():
    # (3,1,1) is 3-restricted and self-conjugate; its conjugate is fixed by M
    assert restricted_mullineux((3, 1, 1), 3) == Partition((3, 1, 1))
    assert restricted_mullineux((1, 1), 3) == Partition((2,))
    with pytest.raises(DomainError):
        restricted_mullineux((4,), 3)


def test_crystal_path_residue_content():
    lam = Partition((4, 2, 1))
    path = crystal_path(lam, 3)
    assert len(path) == lam.size
    assert sorted(path) == sorted(residue(n, 3) for n in nodes(lam))


@pytest.mark.parametrize("lam, dim", [((2, 1), 2), ((3, 1, 1, 1, 1, 1), 21), ((3, 3, 2), 42), ((3, 2, 2, 2, 1, 1), 693)])
def test_hook_length_dimensions(lam, dim):
    assert count_standard_tableaux(lam) == dim
