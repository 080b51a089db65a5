"""Wedderburn decompositions of Schur rings over cyclic groups.

Each S-subgroup ``H`` of ``Z_n`` carries the idempotent ``epsilon(S, H)``;
the ideal it cuts out is isomorphic to the image of ``S`` under the
evaluation ``z -> zeta_d`` with ``d = [G : H]``.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .algebra import AlgebraElement
from .cyclotomic import CyclotomicElement, CyclotomicField, cyclotomic_poly, minimal_polynomial
from .errors import NotADivisor, NotCyclic, NotUnits
from .groups import AbelianGroup, GroupHom, Subgroup, all_subgroups
from .linalg import rref
from .numtheory import divisors, factorize, totient
from .schur import SchurRing, s_subgroups


def _require_cyclic(G: AbelianGroup) -> None:
    if not G.is_cyclic:
        raise NotCyclic(f"{G} is not cyclic")


def omega(a: AlgebraElement, d: int) -> CyclotomicElement:
    """Evaluate ``a`` at ``z -> zeta_d`` (``z`` the canonical generator)."""
    G = a.group
    _require_cyclic(G)
    if d < 1 or G.order % d:
        raise NotADivisor(f"{d} does not divide {G.order}")
    K = CyclotomicField(d)
    dlog = G.discrete_log
    out = [Fraction(0)] * K.degree
    for i, c in a.coeffs.items():
        z = K._zeta_powers[int(dlog[i]) % d]
        for t, v in enumerate(z):
            if v:
                out[t] += c * v
    return CyclotomicElement(K, tuple(out))


def image_dimension(S: SchurRing, d: int) -> tuple[int, list]:
    """Rank of ``omega(S, d)`` and an echelon basis of it."""
    _require_cyclic(S.group)
    K = CyclotomicField(d)
    red, _ = rref([omega(c, d).coords for c in S.class_sums])
    basis = [K.from_coords(r) for r in red]
    return len(basis), basis


def _small_combinations(k: int):
    """Integer coefficient vectors of growing height, in a fixed order."""
    for h in itertools.count(1):
        for v in itertools.product(range(-h, h + 1), repeat=k):
            if max(abs(x) for x in v) == h:
                yield v


def find_generator(basis: list) -> tuple[CyclotomicElement, list]:
    """An element of the span whose minimal polynomial has degree ``len(basis)``."""
    dim = len(basis)
    for b in basis:
        mp = minimal_polynomial(b)
        if len(mp) - 1 == dim:
            return b, mp
    for v in _small_combinations(dim):
        x = basis[0].field.zero()
        for c, b in zip(v, basis):
            x = x + b * c
        mp = minimal_polynomial(x)
        if len(mp) - 1 == dim:
            return x, mp
    raise AssertionError("unreachable: the span is a field")


def _squarefree_signed(num: int) -> int:
    sign = -1 if num < 0 else 1
    out = 1
    for p, e in factorize(abs(num)):
        if e % 2:
            out *= p
    return sign * out


def canonical_minpoly(mp: list) -> list:
    """Linear polys become ``x``; quadratics become ``x^2 + x + (1-D)/4`` or
    ``x^2 - D`` for the squarefree discriminant part ``D``.  Higher degrees are
    returned unchanged."""
    if len(mp) == 2:
        return [Fraction(0), Fraction(1)]
    if len(mp) != 3:
        return list(mp)
    c, b, _ = mp
    disc = b * b - 4 * c
    D = _squarefree_signed(disc.numerator * disc.denominator)
    if D % 4 == 1:
        return [Fraction(1 - D, 4), Fraction(1), Fraction(1)]
    return [Fraction(-D), Fraction(0), Fraction(1)]


def format_poly(mp: list) -> str:
    terms = []
    for k in range(len(mp) - 1, -1, -1):
        c = Fraction(mp[k])
        if not c:
            continue
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        if mono and abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}" if mono else f"{abs(c)}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for s, t in terms[1:]:
        out += f" {s} {t}"
    return out


def field_label(conductor: int, dimension: int, canon: list) -> str:
    if dimension == 1:
        return "Q"
    if dimension == 2:
        if canon == [Fraction(1), Fraction(0), Fraction(1)]:
            return "Q(i)"
        if canon == [Fraction(1), Fraction(1), Fraction(1)]:
            return "Q(zeta_3)"
        D = -int(canon[0]) if canon[1] == 0 else 1 - 4 * int(canon[0])
        return f"Q(sqrt({D}))"
    if dimension == totient(conductor):
        m = conductor // 2 if conductor % 4 == 2 else conductor
        return f"Q(zeta_{m})"
    return f"Q(zeta_{conductor})[deg {dimension}]"


@dataclass
class WedderburnComponent:
    subgroup: Subgroup
    conductor: int
    dimension: int
    subfield_basis: list
    generator_minpoly: list  # canonical form

    @property
    def label(self) -> str:
        return field_label(self.conductor, self.dimension, self.generator_minpoly)

    def to_dict(self) -> dict:
        return {
            "subgroup_order": self.subgroup.order,
            "conductor": self.conductor,
            "dimension": self.dimension,
            "minpoly": [str(c) for c in self.generator_minpoly],
            "field": self.label,
        }


def pretty_shape(labels) -> str:
    """``Q^a ⊕ K^b ⊕ ...`` with the rational part first, others by label."""
    cnt = Counter(labels)
    parts = []
    for lab in sorted(cnt, key=lambda s: (s != "Q", len(s), s)):
        k = cnt[lab]
        parts.append(lab if k == 1 else f"{lab}^{k}")
    return " ⊕ ".join(parts)


@dataclass
class Decomposition:
    ring_dimension: int
    components: list

    def labels(self) -> list:
        return [c.label for c in self.components]

    def pretty(self) -> str:
        return pretty_shape(self.labels())

    def to_dict(self) -> dict:
        return {
            "ring_dimension": self.ring_dimension,
            "components": [c.to_dict() for c in self.components],
            "shape": self.pretty(),
        }


def wedderburn_decomposition(S: SchurRing) -> Decomposition:
    G = S.group
    _require_cyclic(G)
    comps = []
    for H in sorted(s_subgroups(S), key=lambda H: -H.order):
        d = G.order // H.order
        dim, basis = image_dimension(S, d)
        _, mp = find_generator(basis)
        comps.append(WedderburnComponent(H, d, dim, basis, canonical_minpoly(mp)))
    out = Decomposition(S.dimension, comps)
    assert sum(c.dimension for c in comps) == S.dimension
    return out


def perlis_walker(G: AbelianGroup) -> dict:
    """``d -> a_d``, the number of cyclic subgroups of order ``d``."""
    cnt: Counter = Counter()
    for H in all_subgroups(G):
        if any(int(G.orders[i]) == H.order for i in H.elements):
            cnt[H.order] += 1
    return dict(sorted(cnt.items()))


def perlis_walker_shape(G: AbelianGroup) -> str:
    labels = []
    for d, a in perlis_walker(G).items():
        canon = canonical_minpoly([Fraction(c) for c in cyclotomic_poly(d)])
        labels += [field_label(d, totient(d), canon)] * a
    return pretty_shape(labels)


def _check_units(n: int, A) -> list:
    A = sorted({a % n for a in A}) if n > 1 else [0]
    if n > 1 and any(gcd(a, n) != 1 for a in A):
        raise NotUnits("elements must be coprime to n")
    if n > 1 and any((a * b) % n not in A for a in A for b in A):
        raise NotUnits("set is not closed under multiplication")
    return A


def orbit_fixed_field_dims(n: int, A) -> dict:
    """``d -> phi(d) / |A mod d|`` for every divisor ``d`` of ``n``."""
    A = _check_units(n, A)
    return {d: totient(d) // len({a % d for a in A}) for d in divisors(n)}


def power_map(G: AbelianGroup, u: int) -> GroupHom:
    """``g -> g^u``."""
    return GroupHom(G, G, tuple(G.scale(u, e) for e in _unit_vectors(G)))


def _unit_vectors(G: AbelianGroup) -> list:
    return [tuple(int(i == j) for j in range(G.rank)) for i in range(G.rank)]


def generated_automorphisms(G: AbelianGroup, auts) -> set:
    """All composites of ``auts`` as permutation tables (tuples)."""
    gens = [tuple(int(x) for x in a.table) for a in auts]
    ident = tuple(range(G.order))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for t in frontier:
            for g in gens:
                c = tuple(g[i] for i in t)
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return seen


def orbit_formula_dims(G: AbelianGroup, auts) -> list:
    """Component dimensions predicted by ``sum_d a_d Q(zeta_d)^H`` where ``H``
    acts through the power maps it contains.  Exact for cyclic groups; an
    over-count in general."""
    e = G.exponent
    group = generated_automorphisms(G, auts)
    U = [u for u in range(1, e + 1) if gcd(u, e) == 1
         and tuple(int(x) for x in power_map(G, u).table) in group]
    dims = []
    for d, a in perlis_walker(G).items():
        dims += [totient(d) // len({u % d for u in U})] * a
    return dims


__all__ = [
    "Decomposition",
    "WedderburnComponent",
    "canonical_minpoly",
    "field_label",
    "find_generator",
    "format_poly",
    "image_dimension",
    "omega",
    "orbit_fixed_field_dims",
    "orbit_formula_dims",
    "perlis_walker",
    "perlis_walker_shape",
    "pretty_shape",
    "wedderburn_decomposition",
]
