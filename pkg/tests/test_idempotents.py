import random
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from conftest import enumerated
from schurkit.algebra import AlgebraElement, normalized_sum, parse_element, subgroup_sum
from schurkit.analysis import primitive_idempotents_general
from schurkit.errors import AtomCapExceeded, NonPositive, NotAMember, NotCyclic, NotIdempotent, NotInN, NotMember
from schurkit.groups import AbelianGroup, GroupHom, all_subgroups, cyclic_subgroup, generate, trivial_subgroup, whole
from schurkit.idempotents import (
    atoms,
    beta_fn,
    covers,
    decompose,
    epsilon,
    epsilon1_coefficient,
    epsilon_coefficient,
    epsilon_full,
    full_lattice,
    idempotent_system,
    involved_atoms,
    lambda_fn,
    primitive_idempotents_QG,
    primitivity_oracle,
    quotient_descent,
    schur_primitive_idempotents,
)
from schurkit.lattices import SemiLattice
from schurkit.linalg import in_span, rref
from schurkit.numtheory import divisors, factorize
from schurkit.schur import group_algebra, orbit_schur, s_subgroups

Z12 = AbelianGroup.cyclic(12)


def G_(d):
    return cyclic_subgroup(Z12, d)


def random_semilattice(G, rng):
    subs = all_subgroups(G).subgroups
    pick = [H for H in subs if rng.random() < 0.3]
    return SemiLattice.generated_by(G, pick)


def random_abelian(rng, max_order=24):
    while True:
        k = rng.choice([1, 1, 2, 2, 3])
        f = tuple(sorted(rng.randint(2, 6) for _ in range(k)))
        G = AbelianGroup(f)
        if G.order <= max_order:
            return G


def test_covers():
    L = full_lattice(Z12)
    assert covers(L, whole(Z12)) == []
    assert set(covers(L, trivial_subgroup(Z12))) == {G_(2), G_(3)}
    K = AbelianGroup((2, 2))
    a = generate(K, [(1, 0)])
    L3 = SemiLattice.generated_by(K, [a])
    assert covers(L3, trivial_subgroup(K)) == [a]
    assert epsilon(L3, trivial_subgroup(K)) == AlgebraElement.one(K) - normalized_sum(a)
    with pytest.raises(NotAMember):
        covers(L3, generate(K, [(0, 1)]))


def test_epsilon_examples():
    L = full_lattice(Z12)
    assert epsilon(L, whole(Z12)) == normalized_sum(whole(Z12))
    assert epsilon(L, trivial_subgroup(Z12)) == parse_element(
        Z12, "1/3 - 1/3*z^6 - 1/6*z^4 - 1/6*z^8 + 1/6*z^2 + 1/6*z^10")
    K = AbelianGroup((2, 2))
    assert epsilon(full_lattice(K), trivial_subgroup(K)).is_zero()


def test_two_member_system():
    L = SemiLattice.generated_by(Z12, [])
    sys_ = idempotent_system(L)
    Ghat = normalized_sum(whole(Z12))
    assert sys_[trivial_subgroup(Z12)] == AlgebraElement.one(Z12) - Ghat
    assert sys_[whole(Z12)] == Ghat


def test_primitive_idempotents_QG():
    assert len(primitive_idempotents_QG(Z12)) == 6
    K = AbelianGroup((2, 2))
    P = primitive_idempotents_QG(K)
    assert sorted(H.order for H in P.idempotents) == [2, 2, 2, 4]
    T = AbelianGroup(())
    assert [e for _, e in primitive_idempotents_QG(T).items()] == [AlgebraElement.one(T)]


@pytest.mark.parametrize("factors", [(12,), (2, 2), (2, 6), (3, 3), (2, 2, 2), (4, 4), (30,)])
def test_atoms_are_a_complete_orthogonal_family(factors):
    G = AbelianGroup(factors)
    A = [e for _, e in atoms(G)]
    assert all(e for e in A)
    assert sum(A, AlgebraElement.zero(G)) == AlgebraElement.one(G)
    for i, a in enumerate(A):
        assert a * a == a
        for b in A[i + 1:]:
            assert (a * b).is_zero()
    # nonzero epsilons of the full lattice are exactly those with cyclic quotient
    for H in full_lattice(G):
        assert bool(epsilon_full(G, H)) == any(H == K for K, _ in atoms(G))


def test_decompose_examples(ring_S, ring_U):
    L = full_lattice(Z12)
    for H in L:
        assert decompose(L, H) == [H]
    assert sorted(K.order for K in decompose(s_subgroups(ring_S), G_(2))) == [2, 4]
    assert sorted(K.order for K in decompose(s_subgroups(ring_U), G_(1))) == [1, 2, 4]


def test_descent_examples(ring_S):
    L = s_subgroups(ring_S)
    for H in L:
        assert quotient_descent(L, H, H).holds
    d = quotient_descent(L, G_(2), G_(4))
    assert d.holds and d.bijection
    assert d.lhs.group.order == 3
    d = quotient_descent(full_lattice(Z12), G_(1), G_(1))
    assert d.holds
    with pytest.raises(NotInN):
        quotient_descent(L, G_(2), G_(3))


def test_descent_to_z6():
    L = SemiLattice.generated_by(Z12, [G_(2), G_(4)])  # 1 < G_2 < G_4 < G
    d = quotient_descent(L, G_(1), G_(1))
    assert d.holds


@given(st.sampled_from([12, 30]), st.integers(0, 10**6))
def test_descent_random(n, seed):
    rng = random.Random(seed)
    G = AbelianGroup.cyclic(n)
    L = random_semilattice(G, rng)
    H = rng.choice(L.sorted())
    N = rng.choice(decompose(L, H))
    d = quotient_descent(L, H, N)
    assert d.holds and d.bijection


def test_schur_primitive_idempotents(ring_T, ring_U):
    sys_ = schur_primitive_idempotents(group_algebra(Z12))
    assert all(sys_[H] == epsilon_full(Z12, H) for H in full_lattice(Z12))
    assert len(schur_primitive_idempotents(ring_T)) == 4
    assert schur_primitive_idempotents(ring_T)[G_(1)] == parse_element(Z12, "1/2 - 1/2*z^6")
    assert schur_primitive_idempotents(ring_U)[G_(1)] == parse_element(Z12, "2/3 - 1/3*z^4 - 1/3*z^8")
    with pytest.raises(NotCyclic):
        schur_primitive_idempotents(group_algebra(AbelianGroup((2, 2))))


def test_primitivity_oracle_examples(ring_T):
    G = AbelianGroup((3, 3))
    S = orbit_schur(G, [GroupHom(G, G, ((0, 1), (2, 0)))])
    Ghat = normalized_sum(whole(G))
    assert primitivity_oracle(S, Ghat)
    assert not primitivity_oracle(S, AlgebraElement.one(G) - Ghat)
    assert len(involved_atoms(AlgebraElement.one(G) - Ghat)) == 4
    with pytest.raises(NotIdempotent):
        primitivity_oracle(S, Ghat * 2)
    with pytest.raises(NotMember):
        primitivity_oracle(ring_T, epsilon_full(Z12, G_(3)))
    with pytest.raises(AtomCapExceeded):
        primitivity_oracle(group_algebra(Z12), AlgebraElement.one(Z12), cap=3)


def test_oracle_agrees_on_cyclic_enumerations(cyclic_catalog):
    for rings in cyclic_catalog.values():
        for S in rings:
            for _, e in schur_primitive_idempotents(S).items():
                assert primitivity_oracle(S, e)


def test_lambda_beta():
    assert lambda_fn(1) == 1 and beta_fn(1) == 1
    assert beta_fn(6) == 6 - 3 - 2 + 1 == 2
    assert epsilon1_coefficient(30, 2) == Fraction(-4, 15)
    for bad in (0, -3):
        with pytest.raises(NonPositive):
            beta_fn(bad)


@given(st.integers(1, 400), st.integers(1, 400))
def test_beta_multiplicative(m, n):
    if gcd(m, n) == 1:
        assert beta_fn(m * n) == beta_fn(m) * beta_fn(n)


def direct_epsilon1(n):
    """Oracle: expand prod over primes p | n of (1 - hat(G_p)) as a dense vector mod n."""
    vec = [Fraction(0)] * n
    vec[0] = Fraction(1)
    for p, _ in factorize(n):
        step = n // p
        new = [Fraction(0)] * n
        for k, c in enumerate(vec):
            if c:
                new[k] += c
                for j in range(p):
                    new[(k + j * step) % n] -= c / p
        vec = new
    return vec


@pytest.mark.parametrize("n", [6, 12, 30, 210])
def test_coefficient_formula(n):
    vec = direct_epsilon1(n)
    eps = epsilon_full(AbelianGroup.cyclic(n), trivial_subgroup(AbelianGroup.cyclic(n)))
    assert eps.vector() == vec
    for k in range(n):
        a = n // gcd(k, n)
        assert vec[k] == epsilon1_coefficient(n, a)


@pytest.mark.parametrize("n", [12, 30])
def test_coefficient_formula_general_h(n):
    G = AbelianGroup.cyclic(n)
    for h in divisors(n):
        e = epsilon_full(G, cyclic_subgroup(G, h))
        for k in range(n):
            assert e.coeffs.get(k, 0) == epsilon_coefficient(n, h, n // gcd(k, n))


def check_semilattice_clauses(L):
    G = L.group
    eps = {H: epsilon(L, H) for H in L}
    for H in L:
        for K in L:
            prod_ = normalized_sum(K) * eps[H]
            if K.elements <= H.elements:
                assert prod_ == eps[H]
            else:
                assert prod_.is_zero()
            if H != K:
                assert (eps[H] * eps[K]).is_zero()
        assert eps[H] * eps[H] == eps[H]
    assert sum(eps.values(), AlgebraElement.zero(G)) == AlgebraElement.one(G)
    return eps


@given(st.integers(0, 10**6))
def test_semilattice_clauses_random(seed):
    rng = random.Random(seed)
    G = random_abelian(rng)
    check_semilattice_clauses(random_semilattice(G, rng))


@given(st.sampled_from([4, 6, 8, 9, 12, 16, 18, 24, 30]), st.integers(0, 10**6))
def test_cyclic_nonvanishing(n, seed):
    G = AbelianGroup.cyclic(n)
    L = random_semilattice(G, random.Random(seed))
    assert all(epsilon(L, H) for H in L)


def test_span_equality_full_check():
    for f in [(12,), (2, 6), (2, 2, 2)]:
        G = AbelianGroup(f)
        idempotent_system(full_lattice(G), check=True)


def test_idempotents_of_cyclic_rings_lie_in_lattice_span():
    for n in (6, 8, 12):
        for S in enumerated((n,)).rings:
            red, piv = rref([subgroup_sum(H).vector() for H in s_subgroups(S)])
            for e in primitive_idempotents_general(S):
                assert in_span(e.vector(), red, piv)
