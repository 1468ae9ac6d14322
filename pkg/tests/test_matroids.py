import pytest

from twistwidth import (
    Matroid,
    NotAMatroidError,
    d_min,
    is_matroid,
    validate,
)


@pytest.fixture
def two_bases():
    return Matroid(validate("ab", ["a", "b"]))


def test_is_matroid(cat):
    assert not is_matroid(cat[2])
    assert is_matroid(validate("ab", ["a", "b"]))


def test_matroid_rejects_mixed_sizes(cat):
    with pytest.raises(NotAMatroidError):
        Matroid(cat[0])


def test_d_min_is_always_a_matroid(dms_by_n):
    for n in (2, 3):
        for d in dms_by_n[n]:
            assert is_matroid(d_min(d).dm)


def test_d_min_of_matroid_is_itself():
    d = validate("ab", ["a", "b"])
    assert d_min(d).dm == d


def test_d_min_picks_minimum_sets(cat):
    assert d_min(cat[4]).bases == (0,)
    d = validate("ab", ["a", "ab"])
    assert [sorted(s) for s in d_min(d).dm.feasible_sets()] == [["a"]]


def test_rank(two_bases, cat):
    assert two_bases.rank([]) == 0
    assert two_bases.rank("ab") == two_bases.rank_total == 1
    assert d_min(cat[2]).rank("ab") == 0


def test_nullity(two_bases, cat):
    assert two_bases.nullity([]) == 0
    assert d_min(cat[2]).nullity("ab") == 2
    m = two_bases
    assert m.nullity("ab") == 2 - m.rank_total


def test_connectivity(two_bases):
    all_loops = Matroid(validate("abc", [""]))
    for a in range(8):
        assert all_loops.connectivity(a) == 0
    assert two_bases.connectivity([]) == 0
    assert two_bases.connectivity("a") == 1


def test_separators(two_bases):
    assert two_bases.is_separator([])
    assert two_bases.is_separator("ab")
    assert not two_bases.is_separator("a")


def test_every_set_is_separator_when_empty_feasible(dms_by_n):
    for d in dms_by_n[3]:
        if 0 in d.masks:
            m = d_min(d)
            assert all(m.is_separator(a) for a in range(8))


def test_connectivity_symmetric_under_complement(dms_by_n):
    for d in dms_by_n[3]:
        m = d_min(d)
        for a in range(8):
            assert m.connectivity(a) == m.connectivity(7 ^ a)
            assert m.is_separator(a) == m.is_separator(7 ^ a)


def test_rank_monotone_and_submodular(dms_by_n):
    for d in dms_by_n[3]:
        m = d_min(d)
        subsets = range(8)
        for x in subsets:
            for y in subsets:
                if x & ~y == 0:
                    assert m.rank(x) <= m.rank(y)
                assert (
                    m.rank(x | y) + m.rank(x & y) <= m.rank(x) + m.rank(y)
                )
