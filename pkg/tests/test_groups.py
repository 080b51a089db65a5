import itertools
from math import gcd

import pytest
from hypothesis import given, strategies as st

from schurkit.errors import AmbientMismatch, NotADivisor, NotAHomomorphism, NotCyclic, OrderBoundExceeded, ParseError
from schurkit.groups import (
    AbelianGroup,
    GroupHom,
    all_subgroups,
    automorphism_group,
    check_bound,
    cyclic_subgroup,
    generate,
    join,
    layer,
    meet,
    parse_group,
    quotient,
    subgroup_as_group,
    trivial_subgroup,
    whole,
)

SMALL = [(), (2,), (12,), (2, 2), (2, 6), (3, 3), (4, 2), (2, 2, 2), (8,), (30,)]


def brute_subgroups(G):
    """Oracle: every subset containing 1 and closed under the operation."""
    out = []
    rest = list(range(1, G.order))
    for r in range(len(rest) + 1):
        for sub in itertools.combinations(rest, r):
            s = {0, *sub}
            if all(int(G.mul[a, b]) in s for a in s for b in s):
                out.append(frozenset(s))
    return set(out)


def test_parse_group():
    assert parse_group("Z2xZ6").factors == (2, 6)
    assert parse_group("z12").factors == (12,)
    assert parse_group("1").order == 1
    for bad in ("", "Z", "Z0", "Z2xx3", "Q8", "Z-3"):
        with pytest.raises(ParseError):
            parse_group(bad)


def test_elements_and_identity():
    G = AbelianGroup((2, 3))
    assert G.order == 6
    assert G.elements[0] == (0, 0)
    assert set(G.elements) == {(a, b) for a in range(2) for b in range(3)}
    with pytest.raises(AmbientMismatch):
        G.coerce((2, 0))


@pytest.mark.parametrize("factors,count", [((12,), 6), ((), 1), ((2, 2), 5), ((2, 6), 10), ((3, 3), 6), ((2, 2, 2), 16)])
def test_all_subgroups_counts(factors, count):
    assert len(all_subgroups(AbelianGroup(factors)).subgroups) == count


@pytest.mark.parametrize("factors", [(2, 2), (6,), (2, 4), (3, 3), (2, 2, 2), (12,)])
def test_all_subgroups_matches_brute_force(factors):
    G = AbelianGroup(factors)
    assert {H.elements for H in all_subgroups(G).subgroups} == brute_subgroups(G)


def test_cyclic_subgroup_and_layer(z12):
    assert cyclic_subgroup(z12, 1) == trivial_subgroup(z12)
    assert cyclic_subgroup(z12, 2).elements == {0, 6}
    assert cyclic_subgroup(z12, 6) == generate(z12, [(2,)])
    assert layer(z12, 1) == {(0,)}
    assert layer(z12, 4) == {(3,), (9,)}
    assert layer(z12, 12) == {(1,), (5,), (7,), (11,)}
    with pytest.raises(NotADivisor):
        cyclic_subgroup(z12, 5)
    with pytest.raises(NotCyclic):
        cyclic_subgroup(AbelianGroup((2, 2)), 2)


def test_join_meet(z12):
    G4, G6, G2 = (cyclic_subgroup(z12, d) for d in (4, 6, 2))
    assert join(G4, G6) == whole(z12)
    assert meet(G4, G6) == G2
    assert join(G4, G4) == meet(G4, G4) == G4
    K = AbelianGroup((2, 2))
    a, b = generate(K, [(1, 0)]), generate(K, [(0, 1)])
    assert join(a, b) == whole(K)
    assert meet(a, b) == trivial_subgroup(K)
    with pytest.raises(AmbientMismatch):
        join(G2, a)


@pytest.mark.parametrize("factors", SMALL)
def test_product_formula_and_lattice_closure(factors):
    G = AbelianGroup(factors)
    subs = all_subgroups(G).subgroups
    sset = set(subs)
    for H, K in itertools.product(subs, repeat=2):
        J, M = join(H, K), meet(H, K)
        assert J in sset and M in sset
        assert J.order * M.order == H.order * K.order


@pytest.mark.parametrize("n", [12, 30, 8])
def test_cyclic_lattice_distributive(n):
    subs = all_subgroups(AbelianGroup.cyclic(n)).subgroups
    for H, K, L in itertools.product(subs, repeat=3):
        assert join(H, meet(K, L)) == meet(join(H, K), join(H, L))


def test_quotients(z12):
    Q, pi = quotient(z12, trivial_subgroup(z12))
    assert Q == z12 and all(pi(g) == g for g in z12.elements)
    Q, pi = quotient(z12, cyclic_subgroup(z12, 3))
    assert Q.factors == (4,) and Q.order_of(pi((1,))) == 4
    G = AbelianGroup((2, 6))
    Q, pi = quotient(G, generate(G, [(1, 0)]))
    assert Q.factors == (6,)
    assert pi((1, 0)) == (0,) and pi((0, 1)) == (1,)


@pytest.mark.parametrize("factors", SMALL)
def test_quotient_kills_subgroup(factors):
    G = AbelianGroup(factors)
    for H in all_subgroups(G).subgroups:
        Q, pi = quotient(G, H)
        assert Q.order * H.order == G.order
        assert pi.kernel() == H
        assert all(pi(G.element(h)) == Q.identity for h in H.elements)
        assert pi.respects_operation()


def test_subgroup_as_group():
    G = AbelianGroup((2, 6))
    for H in all_subgroups(G).subgroups:
        A, emb = subgroup_as_group(H)
        assert emb.image() == H and emb.kernel().order == 1


@pytest.mark.parametrize("factors,count", [((2,), 1), ((12,), 4), ((3, 3), 48), ((2, 2), 6), ((2, 4), 8), ((30,), 8)])
def test_automorphism_counts(factors, count):
    assert len(automorphism_group(AbelianGroup(factors))) == count


@pytest.mark.parametrize("factors", [(12,), (2, 2), (2, 4), (3, 3), (2, 2, 2)])
def test_automorphisms_form_group(factors):
    G = AbelianGroup(factors)
    auts = automorphism_group(G)
    tables = {tuple(a.table.tolist()) for a in auts}
    ident = tuple(range(G.order))
    assert ident in tables
    for s in tables:
        inv = [0] * G.order
        for i, j in enumerate(s):
            inv[j] = i
        assert tuple(inv) in tables
        for t in tables:
            assert tuple(s[i] for i in t) in tables


def test_unit_count_matches_aut_z_n():
    for n in range(1, 25):
        assert len(automorphism_group(AbelianGroup.cyclic(n))) == sum(gcd(k, n) == 1 for k in range(n))


def test_hom_validation():
    with pytest.raises(NotAHomomorphism):
        GroupHom(AbelianGroup.cyclic(4), AbelianGroup.cyclic(6), ((1,),))


def test_bound(monkeypatch):
    G = AbelianGroup((2, 2, 2, 2))
    check_bound(G)
    with pytest.raises(OrderBoundExceeded):
        check_bound(G, 13)
    monkeypatch.setenv("SCHURKIT_MAX_ORDER", "10")
    with pytest.raises(OrderBoundExceeded):
        check_bound(G)


@given(st.lists(st.integers(2, 6), min_size=1, max_size=2), st.data())
def test_generate_is_smallest_closed_superset(factors, data):
    G = AbelianGroup(tuple(factors))
    gens = data.draw(st.lists(st.integers(0, G.order - 1), max_size=3))
    H = generate(G, [G.element(i) for i in gens])
    assert H.is_closed()
    assert all(i in H.elements for i in gens)
    for K in all_subgroups(G).subgroups:
        if all(i in K.elements for i in gens):
            assert H.elements <= K.elements
