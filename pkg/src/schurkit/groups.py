"""Finite abelian groups given as products of cyclic factors.

Elements are residue tuples; internally every element is addressed by its
index in the lexicographic order of residue tuples, so that the identity has
index 0 and ``Z_n`` elements ``z^k`` have index ``k``.
"""
from __future__ import annotations

import itertools
import os
import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import prod
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    AmbientMismatch,
    NotADivisor,
    NotAHomomorphism,
    NotCyclic,
    OrderBoundExceeded,
    ParseError,
)
from .numtheory import factorize

DEFAULT_MAX_ORDER = 256

GroupElement = tuple


def max_order() -> int:
    """Order bound for enumerative operations; ``SCHURKIT_MAX_ORDER`` overrides it."""
    raw = os.environ.get("SCHURKIT_MAX_ORDER")
    return int(raw) if raw else DEFAULT_MAX_ORDER


def check_bound(G: "AbelianGroup", bound: int | None = None) -> None:
    bound = max_order() if bound is None else bound
    if G.order > bound:
        raise OrderBoundExceeded(f"|G| = {G.order} exceeds bound {bound}")


@dataclass(frozen=True)
class AbelianGroup:
    factors: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(int(f) for f in self.factors))
        if any(f < 2 for f in self.factors):
            raise ValueError(f"cyclic factors must be >= 2, got {self.factors}")

    @classmethod
    def cyclic(cls, n: int) -> "AbelianGroup":
        return cls(() if n == 1 else (n,))

    @property
    def order(self) -> int:
        return prod(self.factors)

    @property
    def rank(self) -> int:
        return len(self.factors)

    def __str__(self):
        if not self.factors:
            return "Z1"
        return "x".join(f"Z{f}" for f in self.factors)

    def __repr__(self):
        return f"AbelianGroup({str(self)})"

    # element bookkeeping

    @cached_property
    def residues(self) -> np.ndarray:
        """``(order, rank)`` array of residue tuples in index order."""
        if not self.factors:
            return np.zeros((1, 0), dtype=np.int64)
        grids = np.meshgrid(*[np.arange(f) for f in self.factors], indexing="ij")
        return np.stack([g.ravel() for g in grids], axis=1).astype(np.int64)

    @cached_property
    def elements(self) -> tuple:
        return tuple(tuple(int(x) for x in row) for row in self.residues)

    @cached_property
    def _strides(self) -> np.ndarray:
        strides = [1] * self.rank
        for i in range(self.rank - 2, -1, -1):
            strides[i] = strides[i + 1] * self.factors[i + 1]
        return np.array(strides, dtype=np.int64)

    def index(self, g) -> int:
        g = self.coerce(g)
        return int(sum(r * s for r, s in zip(g, self._strides)))

    def element(self, i: int) -> GroupElement:
        return self.elements[i]

    def coerce(self, g) -> GroupElement:
        """Accept a residue tuple, or a bare int for single-factor groups."""
        if isinstance(g, (int, np.integer)) and self.rank == 1:
            g = (int(g) % self.factors[0],)
        g = tuple(int(x) for x in g)
        if len(g) != self.rank or any(not 0 <= r < f for r, f in zip(g, self.factors)):
            raise AmbientMismatch(f"{g} is not an element of {self}")
        return g

    def __contains__(self, g) -> bool:
        try:
            self.coerce(g)
        except (AmbientMismatch, TypeError):
            return False
        return True

    @property
    def identity(self) -> GroupElement:
        return (0,) * self.rank

    def add(self, a, b) -> GroupElement:
        return tuple((x + y) % f for x, y, f in zip(a, b, self.factors))

    def neg(self, a) -> GroupElement:
        return tuple((-x) % f for x, f in zip(a, self.factors))

    def scale(self, k: int, a) -> GroupElement:
        return tuple((k * x) % f for x, f in zip(a, self.factors))

    @cached_property
    def mul(self) -> np.ndarray:
        """Cayley table on indices: ``mul[i, j]`` is the index of ``g_i g_j``."""
        n, R = self.order, self.residues
        if self.rank == 0:
            return np.zeros((1, 1), dtype=np.int64)
        f = np.array(self.factors, dtype=np.int64)
        summed = (R[:, None, :] + R[None, :, :]) % f
        return (summed @ self._strides).reshape(n, n)

    @cached_property
    def inv(self) -> np.ndarray:
        if self.rank == 0:
            return np.zeros(1, dtype=np.int64)
        f = np.array(self.factors, dtype=np.int64)
        return ((-self.residues) % f) @ self._strides

    @cached_property
    def orders(self) -> np.ndarray:
        """Order of every element, by index."""
        out = np.ones(self.order, dtype=np.int64)
        for r, f in zip(self.residues.T, self.factors):
            o = f // np.gcd(r, f)
            out = np.lcm(out, o)
        return out

    def order_of(self, g) -> int:
        return int(self.orders[self.index(g)])

    @property
    def exponent(self) -> int:
        return int(self.orders.max())

    @property
    def is_cyclic(self) -> bool:
        return self.exponent == self.order

    @cached_property
    def generator(self) -> GroupElement:
        """The first element (in index order) of maximal order; requires cyclic."""
        if not self.is_cyclic:
            raise NotCyclic(f"{self} is not cyclic")
        return self.elements[int(np.argmax(self.orders == self.order))]

    @cached_property
    def discrete_log(self) -> np.ndarray:
        """``discrete_log[i] = k`` with ``g_i = generator^k``; requires cyclic."""
        z = self.index(self.generator)
        out = np.zeros(self.order, dtype=np.int64)
        cur = 0
        for k in range(self.order):
            out[cur] = k
            cur = int(self.mul[cur, z])
        return out

    def power(self, k: int) -> GroupElement:
        """``generator^k`` for cyclic groups."""
        return self.scale(k, self.generator)

    def format_element(self, g) -> str:
        g = self.coerce(g)
        if self.rank == 1:
            return f"z^{g[0]}"
        return "(" + ",".join(str(r) for r in g) + ")"

    def encode(self, g):
        """JSON-friendly element: an int for single-factor groups, else a list."""
        g = self.coerce(g)
        return g[0] if self.rank == 1 else list(g)


_GROUP_RE = re.compile(r"^z(\d+)$")


def parse_group(spec: str) -> AbelianGroup:
    """Parse ``"Z12"``, ``"Z2xZ6"`` (case-insensitive) into an AbelianGroup."""
    text = spec.strip().lower().replace(" ", "")
    if text in ("1", "z1", "trivial"):
        return AbelianGroup(())
    factors = []
    for part in text.split("x"):
        m = _GROUP_RE.match(part)
        if not m:
            raise ParseError(f"malformed group spec {spec!r}")
        f = int(m.group(1))
        if f < 1:
            raise ParseError(f"malformed group spec {spec!r}")
        if f > 1:
            factors.append(f)
    return AbelianGroup(tuple(factors))


@dataclass(frozen=True)
class Subgroup:
    group: AbelianGroup
    elements: frozenset = field(compare=True)

    @classmethod
    def from_elements(cls, G: AbelianGroup, elems: Iterable) -> "Subgroup":
        idx = frozenset(G.index(g) for g in elems)
        H = cls(G, idx)
        if not H.is_closed():
            raise AmbientMismatch("element set is not a subgroup")
        return H

    @classmethod
    def from_indices(cls, G: AbelianGroup, idx: Iterable[int]) -> "Subgroup":
        return cls(G, frozenset(int(i) for i in idx))

    def is_closed(self) -> bool:
        if 0 not in self.elements:
            return False
        idx = np.fromiter(self.elements, dtype=np.int64)
        prods = self.group.mul[np.ix_(idx, idx)]
        return bool(np.isin(prods, idx).all())

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def sorted_indices(self) -> tuple:
        return tuple(sorted(self.elements))

    def members(self) -> list:
        return [self.group.elements[i] for i in self.sorted_indices]

    def __contains__(self, g) -> bool:
        if isinstance(g, (int, np.integer)) and self.group.rank != 1:
            return int(g) in self.elements
        return self.group.index(g) in self.elements

    def __le__(self, other: "Subgroup") -> bool:
        _same_ambient(self, other)
        return self.elements <= other.elements

    def __lt__(self, other: "Subgroup") -> bool:
        _same_ambient(self, other)
        return self.elements < other.elements

    def sort_key(self):
        return (self.order, self.sorted_indices)

    def __repr__(self):
        gens = ", ".join(self.group.format_element(g) for g in generators(self))
        return f"<{gens}>" if gens else "<1>"


def _same_ambient(H: Subgroup, K: Subgroup) -> None:
    if H.group != K.group:
        raise AmbientMismatch(f"subgroups live in {H.group} and {K.group}")


def trivial_subgroup(G: AbelianGroup) -> Subgroup:
    return Subgroup(G, frozenset([0]))


def whole(G: AbelianGroup) -> Subgroup:
    return Subgroup(G, frozenset(range(G.order)))


def _close(G: AbelianGroup, base: frozenset, gen: int) -> frozenset:
    out = set(base)
    frontier = list(base)
    while frontier:
        x = frontier.pop()
        y = int(G.mul[x, gen])
        if y not in out:
            out.add(y)
            frontier.append(y)
    return frozenset(out)


def generate(G: AbelianGroup, gens: Iterable) -> Subgroup:
    """Subgroup generated by a set of elements."""
    S = frozenset([0])
    for g in gens:
        i = G.index(g)
        if i not in S:
            S = _close(G, S, i)
    return Subgroup(G, S)


def generators(H: Subgroup) -> list:
    """A small generating set, chosen greedily in index order."""
    G = H.group
    S = frozenset([0])
    gens = []
    # larger-order elements first keeps the list short
    for i in sorted(H.elements, key=lambda i: (-int(G.orders[i]), i)):
        if i not in S:
            S = _close(G, S, i)
            gens.append(G.elements[i])
    return gens


def join(H: Subgroup, K: Subgroup) -> Subgroup:
    _same_ambient(H, K)
    G = H.group
    h = np.fromiter(H.elements, dtype=np.int64)
    k = np.fromiter(K.elements, dtype=np.int64)
    return Subgroup(G, frozenset(int(x) for x in np.unique(G.mul[np.ix_(h, k)])))


def meet(H: Subgroup, K: Subgroup) -> Subgroup:
    _same_ambient(H, K)
    return Subgroup(H.group, H.elements & K.elements)


@dataclass(frozen=True)
class SubgroupLattice:
    group: AbelianGroup
    subgroups: tuple
    join_table: dict = field(compare=False, repr=False)
    meet_table: dict = field(compare=False, repr=False)

    def __len__(self):
        return len(self.subgroups)

    def __iter__(self):
        return iter(self.subgroups)

    def position(self, H: Subgroup) -> int:
        return self.subgroups.index(H)


def _cyclic_subgroup_of(G: AbelianGroup, i: int) -> Subgroup:
    return Subgroup(G, _close(G, frozenset([0]), i))


@lru_cache(maxsize=64)
def all_subgroups(G: AbelianGroup, bound: int | None = None) -> SubgroupLattice:
    """Every subgroup once, in canonical (order, elements) order, with join/meet tables."""
    check_bound(G, bound)
    found = {_cyclic_subgroup_of(G, i) for i in range(G.order)}
    frontier = list(found)
    while frontier:
        new = []
        current = list(found)
        for H in frontier:
            for K in current:
                J = join(H, K)
                if J not in found:
                    found.add(J)
                    new.append(J)
        frontier = new
    subs = tuple(sorted(found, key=Subgroup.sort_key))
    pos = {H: i for i, H in enumerate(subs)}
    jt, mt = {}, {}
    for a, H in enumerate(subs):
        for b in range(a, len(subs)):
            K = subs[b]
            jt[a, b] = jt[b, a] = pos[join(H, K)]
            mt[a, b] = mt[b, a] = pos[meet(H, K)]
    return SubgroupLattice(G, subs, jt, mt)


def cyclic_subgroup(G: AbelianGroup, d: int) -> Subgroup:
    """The unique subgroup of order ``d`` of a cyclic group."""
    if not G.is_cyclic:
        raise NotCyclic(f"{G} is not cyclic")
    if d < 1 or G.order % d:
        raise NotADivisor(f"{d} does not divide {G.order}")
    return Subgroup(G, frozenset(int(i) for i in np.flatnonzero(d % G.orders == 0)))


def layer(G: AbelianGroup, d: int) -> frozenset:
    """Elements of order exactly ``d`` (as residue tuples)."""
    if not G.is_cyclic:
        raise NotCyclic(f"{G} is not cyclic")
    if d < 1 or G.order % d:
        raise NotADivisor(f"{d} does not divide {G.order}")
    return frozenset(G.elements[i] for i in np.flatnonzero(G.orders == d))


def invariant_factors(orders: Sequence[int]) -> tuple:
    """Invariant factors (ascending, each dividing the next) of an abelian
    group, read off from the multiset of its element orders."""
    n = len(orders)
    per_prime = []
    for p, e in (factorize(n) if n > 1 else ()):
        # counts[j] = number of elements killed by p^j
        counts = [1]
        while counts[-1] < p ** e:
            j = len(counts)
            counts.append(sum(1 for o in orders if (p ** j) % o == 0))
        # ge[j-1] = number of cyclic p-factors of exponent >= j
        ge = []
        for j in range(1, len(counts)):
            ratio, r = counts[j] // counts[j - 1], 0
            while ratio > 1:
                ratio //= p
                r += 1
            ge.append(r)
        exps = []
        for j, g in enumerate(ge):
            nxt = ge[j + 1] if j + 1 < len(ge) else 0
            exps.extend([j + 1] * (g - nxt))
        per_prime.append((p, sorted(exps, reverse=True)))
    k = max((len(e) for _, e in per_prime), default=0)
    desc = []
    for t in range(k):
        d = 1
        for p, exps in per_prime:
            if t < len(exps):
                d *= p ** exps[t]
        desc.append(d)
    return tuple(reversed(desc))


def _abelian_basis(items: list, add, order_of, factors: tuple) -> list:
    """Backtracking search for independent elements with the given orders.

    ``items`` lists candidates in preference order, ``items[0]`` being the
    identity; returns one element per factor, aligned with ``factors``.
    """
    zero = items[0]
    chosen = [None] * len(factors)
    todo = list(reversed(range(len(factors))))  # largest factor first

    def multiples(q):
        out, m = [zero], q
        while m != zero:
            out.append(m)
            m = add(m, q)
        return out

    def rec(t: int, S: frozenset) -> bool:
        if t == len(todo):
            return True
        i = todo[t]
        for q in items:
            if order_of(q) != factors[i]:
                continue
            mult = multiples(q)
            if any(m in S for m in mult[1:]):
                continue
            chosen[i] = q
            if rec(t + 1, frozenset(add(s, m) for s in S for m in mult)):
                return True
        return False

    if not rec(0, frozenset([zero])):
        raise RuntimeError("no basis found; group data inconsistent")
    return chosen


@dataclass(frozen=True)
class GroupHom:
    domain: AbelianGroup
    codomain: AbelianGroup
    images: tuple

    def __post_init__(self):
        images = tuple(self.codomain.coerce(g) for g in self.images)
        object.__setattr__(self, "images", images)
        if len(images) != self.domain.rank:
            raise NotAHomomorphism("need one image per domain generator")
        for img, f in zip(images, self.domain.factors):
            if f % self.codomain.order_of(img):
                raise NotAHomomorphism(f"image {img} has order not dividing {f}")

    @cached_property
    def table(self) -> np.ndarray:
        """Index map: ``table[i]`` is the codomain index of the image of ``g_i``."""
        C = self.codomain
        if C.rank == 0:
            return np.zeros(self.domain.order, dtype=np.int64)
        if self.domain.rank == 0:
            return np.zeros(1, dtype=np.int64)
        M = np.array(self.images, dtype=np.int64).reshape(self.domain.rank, C.rank)
        f = np.array(C.factors, dtype=np.int64)
        return ((self.domain.residues @ M) % f) @ C._strides

    def __call__(self, g) -> GroupElement:
        return self.codomain.elements[int(self.table[self.domain.index(g)])]

    def kernel(self) -> Subgroup:
        return Subgroup(self.domain, frozenset(int(i) for i in np.flatnonzero(self.table == 0)))

    def image(self) -> Subgroup:
        return Subgroup(self.codomain, frozenset(int(i) for i in np.unique(self.table)))

    def image_of(self, H: Subgroup) -> Subgroup:
        if H.group != self.domain:
            raise AmbientMismatch("subgroup not in the domain")
        return Subgroup(self.codomain, frozenset(int(self.table[i]) for i in H.elements))

    def preimage(self, H: Subgroup) -> Subgroup:
        if H.group != self.codomain:
            raise AmbientMismatch("subgroup not in the codomain")
        mask = np.isin(self.table, np.fromiter(H.elements, dtype=np.int64))
        return Subgroup(self.domain, frozenset(int(i) for i in np.flatnonzero(mask)))

    @property
    def is_bijective(self) -> bool:
        return self.domain.order == self.codomain.order and len(np.unique(self.table)) == self.codomain.order

    def compose(self, inner: "GroupHom") -> "GroupHom":
        """``self ∘ inner``."""
        if inner.codomain != self.domain:
            raise AmbientMismatch("cannot compose")
        D = inner.domain
        gens = [tuple(int(i == j) for j in range(D.rank)) for i in range(D.rank)]
        return GroupHom(D, self.codomain, tuple(self(inner(g)) for g in gens))

    def respects_operation(self) -> bool:
        """Exhaustive check that the linear extension is a homomorphism."""
        D, t, C = self.domain, self.table, self.codomain
        return bool((t[D.mul] == C.mul[np.ix_(t, t)]).all())


def identity_hom(G: AbelianGroup) -> GroupHom:
    gens = [tuple(int(i == j) for j in range(G.rank)) for i in range(G.rank)]
    return GroupHom(G, G, tuple(gens))


def hom_from_table(D: AbelianGroup, C: AbelianGroup, table) -> GroupHom:
    gens = [tuple(int(i == j) for j in range(D.rank)) for i in range(D.rank)]
    return GroupHom(D, C, tuple(C.elements[int(table[D.index(g)])] for g in gens))


def quotient(G: AbelianGroup, H: Subgroup):
    """``G/H`` in canonical invariant-factor form together with the projection."""
    if H.group != G:
        raise AmbientMismatch("subgroup of another group")
    h = np.fromiter(H.elements, dtype=np.int64)
    rep = G.mul[:, h].min(axis=1)  # coset representative = least index in the coset
    reps = sorted(set(int(r) for r in rep))

    def add(a, b):
        return int(rep[G.mul[a, b]])

    def order_of(a):
        k, cur = 1, a
        while cur != 0:
            cur = add(cur, a)
            k += 1
        return k

    orders = {r: order_of(r) for r in reps}
    factors = invariant_factors([orders[r] for r in reps])
    Q = AbelianGroup(factors)
    basis = _abelian_basis(reps, add, orders.__getitem__, factors)
    coords = {}
    for c in itertools.product(*[range(f) for f in factors]):
        x = 0
        for ci, q in zip(c, basis):
            for _ in range(ci):
                x = add(x, q)
        coords[x] = c
    gens = [tuple(int(i == j) for j in range(G.rank)) for i in range(G.rank)]
    pi = GroupHom(G, Q, tuple(coords[int(rep[G.index(g)])] for g in gens))
    assert pi.kernel() == H and pi.image().order == Q.order
    return Q, pi


def subgroup_as_group(H: Subgroup):
    """An abstract group isomorphic to ``H`` and an embedding onto ``H``."""
    G = H.group
    items = list(H.sorted_indices)
    factors = invariant_factors([int(G.orders[i]) for i in items])
    A = AbelianGroup(factors)

    def add(a, b):
        return int(G.mul[a, b])

    basis = _abelian_basis(items, add, lambda i: int(G.orders[i]), factors)
    emb = GroupHom(A, G, tuple(G.elements[b] for b in basis))
    assert emb.image() == H and emb.kernel().order == 1
    return A, emb


def automorphism_group(G: AbelianGroup, bound: int | None = None) -> list:
    """All automorphisms, by backtracking over generator images."""
    check_bound(G, bound)
    k = G.rank
    out = []
    candidates = [
        [i for i in range(G.order) if f % int(G.orders[i]) == 0] for f in G.factors
    ]
    sizes = [prod(G.factors[: i + 1]) for i in range(k)]

    def rec(t: int, S: frozenset, chosen: list):
        if t == k:
            out.append(GroupHom(G, G, tuple(G.elements[i] for i in chosen)))
            return
        for i in candidates[t]:
            S2 = _close(G, S, i)
            if len(S2) == sizes[t]:
                rec(t + 1, S2, chosen + [i])

    rec(0, frozenset([0]), [])
    return out
