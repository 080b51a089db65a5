"""Central idempotent systems attached to semi-lattices of subgroups.

For a semi-lattice ``L`` and ``H`` in ``L`` the idempotent ``epsilon(L, H)``
is the product of ``Ĥ - M̂`` over the covers ``M`` of ``H`` in ``L`` (and
``Ĝ`` for ``H = G``).  Over an abelian group the nonzero ``epsilon(G, K)``
are exactly the primitive central idempotents of ``Q[G]``; every other
system decomposes into them.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .algebra import AlgebraElement, apply_hom, normalized_sum, subgroup_sum
from .errors import AtomCapExceeded, NonPositive, NotAMember, NotCyclic, NotIdempotent, NotInN, NotMember
from .groups import AbelianGroup, Subgroup, all_subgroups, quotient, trivial_subgroup
from .lattices import SemiLattice
from .linalg import rref
from .numtheory import divisors, factorize, radical
from .schur import SchurRing, membership, s_subgroups

DEFAULT_ATOM_CAP = 20


def _require_member(L: SemiLattice, H: Subgroup) -> None:
    if H not in L:
        raise NotAMember(f"{H} is not in the semi-lattice")


def covers(L: SemiLattice, H: Subgroup) -> list:
    """Minimal members of ``L`` strictly above ``H``."""
    _require_member(L, H)
    above = [M for M in L if H.elements < M.elements]
    return [M for M in above if not any(K.elements < M.elements for K in above)]


@lru_cache(maxsize=4096)
def epsilon(L: SemiLattice, H: Subgroup) -> AlgebraElement:
    _require_member(L, H)
    h = normalized_sum(H)
    out = h
    for M in covers(L, H):
        out = out * (h - normalized_sum(M))
    return out


@lru_cache(maxsize=64)
def full_lattice(G: AbelianGroup) -> SemiLattice:
    return SemiLattice.full(G)


def epsilon_full(G: AbelianGroup, K: Subgroup) -> AlgebraElement:
    """``epsilon(G, K)`` for the lattice of all subgroups."""
    return epsilon(full_lattice(G), K)


def is_cyclic_quotient(G: AbelianGroup, K: Subgroup) -> bool:
    index = G.order // K.order
    mul = G.mul
    for g in range(G.order):
        cur, m = g, 1
        while cur not in K.elements:
            cur = int(mul[cur, g])
            m += 1
        if m == index:
            return True
    return False


@dataclass
class IdempotentSystem:
    lattice: SemiLattice
    idempotents: dict  # Subgroup -> AlgebraElement

    def items(self) -> list:
        return sorted(self.idempotents.items(), key=lambda kv: kv[0].sort_key())

    def nonzero(self) -> dict:
        return {H: e for H, e in self.idempotents.items() if e}

    def __len__(self):
        return len(self.idempotents)

    def __getitem__(self, H: Subgroup) -> AlgebraElement:
        return self.idempotents[H]

    def total(self) -> AlgebraElement:
        G = self.lattice.group
        return sum(self.idempotents.values(), AlgebraElement.zero(G))


def idempotent_system(L: SemiLattice, check: bool = True) -> IdempotentSystem:
    """All ``epsilon(L, H)``, checked idempotent, orthogonal, complete, and
    spanning the same space as the member sums."""
    sys_ = IdempotentSystem(L, {H: epsilon(L, H) for H in L})
    if check:
        G = L.group
        items = [e for _, e in sys_.items()]
        for i, a in enumerate(items):
            assert a * a == a, "epsilon is not idempotent"
            for b in items[i + 1:]:
                assert (a * b).is_zero(), "epsilons are not orthogonal"
        assert sys_.total() == AlgebraElement.one(G), "system is not complete"
        span_eps = rref([e.vector() for e in items])[0]
        span_sub = rref([subgroup_sum(H).vector() for H in L])[0]
        assert span_eps == span_sub, "spans differ"
    return sys_


def primitive_idempotents_QG(G: AbelianGroup) -> IdempotentSystem:
    """``{epsilon(G, H) : G/H cyclic}``: the primitive central idempotents of Q[G]."""
    L = full_lattice(G)
    return IdempotentSystem(
        L, {H: epsilon(L, H) for H in L if is_cyclic_quotient(G, H)}
    )


@lru_cache(maxsize=64)
def atoms(G: AbelianGroup) -> tuple:
    """Primitive central idempotents of Q[G] as (subgroup, idempotent) pairs."""
    return tuple(primitive_idempotents_QG(G).items())


def decompose(L: SemiLattice, H: Subgroup) -> list:
    """Subgroups ``K >= H`` containing no cover of ``H``; ``epsilon(L, H)`` is
    the sum of the full-lattice ``epsilon(G, K)`` over them.  Members with
    non-cyclic ``G/K`` contribute zero."""
    _require_member(L, H)
    G = L.group
    cov = covers(L, H)
    out = [
        K for K in all_subgroups(G)
        if H.elements <= K.elements and not any(M.elements <= K.elements for M in cov)
    ]
    total = sum((epsilon_full(G, K) for K in out), AlgebraElement.zero(G))
    assert total == epsilon(L, H), "decomposition identity failed"
    return out


def decomposition_atoms(L: SemiLattice, H: Subgroup) -> list:
    """The members of :func:`decompose` with nonzero ``epsilon(G, K)``."""
    G = L.group
    return [K for K in decompose(L, H) if is_cyclic_quotient(G, K)]


@dataclass
class DescentCheck:
    lhs: AlgebraElement  # image of epsilon(L, H) in G/N
    rhs: AlgebraElement  # epsilon(pi(L), N/N)
    mapped: frozenset  # pi applied to N(L, H, N)
    target: frozenset  # N(pi(L), N/N)
    injective: bool

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    @property
    def bijection(self) -> bool:
        return self.injective and self.mapped == self.target


def image_lattice(L: SemiLattice, phi) -> SemiLattice:
    return SemiLattice(phi.codomain, frozenset(phi.image_of(M) for M in L))


def quotient_descent(L: SemiLattice, H: Subgroup, N: Subgroup) -> DescentCheck:
    """Compare the image of ``epsilon(L, H)`` in ``G/N`` with ``epsilon(pi(L), 1)``."""
    G = L.group
    NLH = decompose(L, H)
    if N not in NLH:
        raise NotInN(f"{N} is not in N(L, H)")
    Q, pi = quotient(G, N)
    lhs = apply_hom(pi, epsilon(L, H))
    piL = image_lattice(L, pi)
    one = trivial_subgroup(Q)
    rhs = epsilon(piL, one)
    above = [K for K in NLH if N.elements <= K.elements]
    mapped = frozenset(pi.image_of(K) for K in above)
    target = frozenset(decompose(piL, one))
    return DescentCheck(lhs, rhs, mapped, target, len(mapped) == len(above))


def schur_primitive_idempotents(S: SchurRing) -> IdempotentSystem:
    """``{epsilon(S, H)}`` over the S-subgroups; primitive when G is cyclic."""
    if not S.group.is_cyclic:
        raise NotCyclic("use primitivity_oracle for non-cyclic groups")
    return idempotent_system(s_subgroups(S), check=False)


def involved_atoms(e: AlgebraElement) -> list:
    """Atoms ``a`` of Q[G] with ``a e = a``; for an idempotent they sum to ``e``."""
    return [(K, a) for K, a in atoms(e.group) if a * e == a]


def primitivity_oracle(S: SchurRing, e: AlgebraElement, cap: int = DEFAULT_ATOM_CAP) -> bool:
    """Decide primitivity of an idempotent of S by subset search over the
    primitive idempotents of Q[G] involved in it."""
    if e * e != e:
        raise NotIdempotent("element is not idempotent")
    if not membership(S, e):
        raise NotMember("idempotent is not in the ring")
    if e.is_zero():
        return False
    P = [a for _, a in involved_atoms(e)]
    assert sum(P, AlgebraElement.zero(S.group)) == e
    if len(P) > cap:
        raise AtomCapExceeded(f"{len(P)} atoms exceed cap {cap}")
    for size in range(1, len(P)):
        for sub in itertools.combinations(P, size):
            if membership(S, sum(sub, AlgebraElement.zero(S.group))):
                return False
    return True


# the coefficient formula for epsilon(Z_n, 1)


def lambda_fn(n: int) -> int:
    """``(-1)^(number of prime factors of n, with multiplicity)``."""
    if n < 1:
        raise NonPositive(f"{n} is not positive")
    return -1 if sum(e for _, e in factorize(n)) % 2 else 1


def beta_fn(n: int) -> int:
    """Alternating sum of divisors: ``sum over d | n of lambda(d) * n/d``."""
    if n < 1:
        raise NonPositive(f"{n} is not positive")
    return sum(lambda_fn(d) * (n // d) for d in divisors(n))


def epsilon1_coefficient(n: int, a: int) -> Fraction:
    """Coefficient of an element of order ``a`` in ``epsilon(Z_n, 1)``."""
    if n < 1 or a < 1:
        raise NonPositive("arguments must be positive")
    m = radical(n)
    if m % a:
        return Fraction(0)
    return Fraction(lambda_fn(a) * beta_fn(m // a), m)


def epsilon_coefficient(n: int, h: int, a: int) -> Fraction:
    """Coefficient of an element of order ``a`` in ``epsilon(Z_n, G_h)``,
    obtained from the quotient ``Z_n / G_h``."""
    if n % h or n % a:
        raise ValueError("h and a must divide n")
    a_bar = a // gcd(a, h)
    return epsilon1_coefficient(n // h, a_bar) / h
