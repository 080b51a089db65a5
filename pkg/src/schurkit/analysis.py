"""Primitive idempotents of Schur rings over abelian groups and tidiness."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .algebra import AlgebraElement, format_element, subgroup_sum
from .errors import AtomCapExceeded
from .idempotents import DEFAULT_ATOM_CAP, atoms, epsilon, primitivity_oracle
from .linalg import in_span, rank, rref
from .schur import SchurRing, membership, s_subgroups


def primitive_idempotents_general(S: SchurRing, cap: int = DEFAULT_ATOM_CAP) -> list:
    """Minimal sums of atoms of Q[G] lying in ``S``.

    Found sums are disjoint, so each hit removes its atoms from the pool and
    the search restarts at the current size.
    """
    G = S.group
    pool = [a for _, a in atoms(G)]
    if len(pool) > cap:
        raise AtomCapExceeded(f"{len(pool)} atoms exceed cap {cap}")
    zero = AlgebraElement.zero(G)
    found = []
    size = 1
    while pool:
        hit = None
        for sub in itertools.combinations(range(len(pool)), size):
            e = sum((pool[i] for i in sub), zero)
            if membership(S, e):
                hit = (sub, e)
                break
        if hit is None:
            size += 1
            continue
        found.append(hit[1])
        pool = [a for i, a in enumerate(pool) if i not in hit[0]]
    return sorted(found, key=_idem_key)


def _idem_key(e: AlgebraElement):
    return tuple(-c for c in e.vector())


def ideal_dimensions(S: SchurRing, idems: list) -> list:
    """``dim(S e)`` for each idempotent ``e``."""
    return [rank([(c * e).vector() for c in S.class_sums]) for e in idems]


@dataclass
class TidinessReport:
    ring: SchurRing
    primitive_idempotents: list
    lattice_span_dimension: int
    witnesses: list = field(default_factory=list)
    epsilons_primitive: bool = True

    @property
    def tidy(self) -> bool:
        return not self.witnesses

    @property
    def verdict(self) -> str:
        return "tidy" if self.tidy else "not tidy"

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "lattice_span_dimension": self.lattice_span_dimension,
            "primitive_idempotents": [format_element(e) for e in self.primitive_idempotents],
            "witnesses": [format_element(e) for e in self.witnesses],
        }


def is_tidy(S: SchurRing, cap: int = DEFAULT_ATOM_CAP) -> TidinessReport:
    prims = primitive_idempotents_general(S, cap)
    L = s_subgroups(S)
    red, piv = rref([subgroup_sum(H).vector() for H in L])
    witnesses = [e for e in prims if not in_span(e.vector(), red, piv)]
    eps = [epsilon(L, H) for H in L]
    eps_prim = all(primitivity_oracle(S, e, cap) for e in eps if e)
    return TidinessReport(S, prims, len(red), witnesses, eps_prim)
