import pytest

from conftest import enumerated
from schurkit.enumeration import (
    _prefixes,
    _set_partitions,
    all_schur_rings,
    all_schur_rings_unfiltered,
    canonical_form,
    catalog_entry,
)
from schurkit.errors import OrderBoundExceeded
from schurkit.groups import AbelianGroup
from schurkit.schur import Partition, trivial_schur, verify_schur


def bell(n):
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


@pytest.mark.parametrize("factors,count", [((2,), 1), ((3,), 2), ((4,), 3), ((2, 2), 5), ((4, 2), 28), ((2, 2, 2), 100)])
def test_counts(factors, count):
    assert all_schur_rings(AbelianGroup(factors)).count == count


def test_z3_rings():
    rings = all_schur_rings(AbelianGroup.cyclic(3)).rings
    assert sorted(canonical_form(S) for S in rings) == [[[0], [1], [2]], [[0], [1, 2]]]


@pytest.mark.parametrize("factors", [(2,), (3,), (4,), (5,), (6,), (2, 2), (7,)])
def test_unfiltered_path_agrees(factors):
    G = AbelianGroup(factors)
    assert all_schur_rings_unfiltered(G) == all_schur_rings(G).rings


def test_elementary_abelian_leaves_are_bell_numbers():
    # every element is an involution, so nothing is pruned
    res = all_schur_rings(AbelianGroup((2, 2, 2)))
    assert res.leaves == bell(7) == 877


def test_prefixes_cover_search_space():
    G = AbelianGroup.cyclic(12)
    leaves = sum(1 for _ in _prefixes(G, 2))
    assert leaves >= 2
    single = all_schur_rings(G)
    for w in (2, 3):
        par = all_schur_rings(G, workers=w)
        assert [S.partition for S in par.rings] == [S.partition for S in single.rings]
        assert par.leaves == single.leaves


def test_outputs_are_distinct_and_verified():
    res = enumerated((12,))
    parts = [S.partition for S in res.rings]
    assert len(set(parts)) == len(parts) == res.count == 32
    for S in res.rings:
        assert verify_schur(S.partition) == S


def test_bound():
    with pytest.raises(OrderBoundExceeded):
        all_schur_rings(AbelianGroup((2, 2, 2, 2)))
    with pytest.raises(OrderBoundExceeded):
        all_schur_rings(AbelianGroup.cyclic(6), bound=5)


def test_canonical_form(ring_T):
    assert canonical_form(trivial_schur(AbelianGroup.cyclic(4))) == [[0], [1, 2, 3]]
    assert canonical_form(ring_T) == [[0], [6], [2, 8], [4, 10], [1, 3, 5, 7, 9, 11]]
    again = verify_schur(Partition.from_elements(ring_T.group, [[(k,) for k in c] for c in canonical_form(ring_T)]))
    assert canonical_form(again) == canonical_form(ring_T)
    G = AbelianGroup((2, 2))
    assert canonical_form(trivial_schur(G)) == [[[0, 0]], [[0, 1], [1, 0], [1, 1]]]


def test_catalog_entry(ring_T):
    e = catalog_entry(ring_T)
    assert e["dimension"] == 5
    assert e["s_subgroup_orders"] == [1, 2, 6, 12]
    assert e["tidy"] is True
    assert e["wedderburn"] == "Q^3 ⊕ Q(zeta_3)"
    assert "wedderburn" not in catalog_entry(trivial_schur(AbelianGroup((2, 2))))


def test_partitions_rejected_by_prefilter_are_not_schur():
    # every identity-singleton partition of Z6 that is not inverse closed fails verification
    G = AbelianGroup.cyclic(6)
    found = {S.partition for S in all_schur_rings(G).rings}
    for p in _set_partitions(list(range(1, 6))):
        part = Partition.from_indices(G, [[0]] + p)
        closed = all(frozenset(int(G.inv[i]) for i in c) in set(part.classes) for c in part.classes)
        if not closed:
            assert part not in found


def test_repeat_runs_identical():
    G = AbelianGroup((4, 2))
    a = [canonical_form(S) for S in all_schur_rings(G).rings]
    b = [canonical_form(S) for S in all_schur_rings(G, workers=2).rings]
    assert a == b
