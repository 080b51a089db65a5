"""Schur rings over finite abelian groups."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .algebra import AlgebraElement, apply_hom, hadamard, indicator, is_constant_on, star
from .errors import (
    GroupMismatch,
    IdentityNotSingleton,
    NotALattice,
    NotAnAutomorphism,
    NotAPartition,
    NotDirectProduct,
    NotInverseClosed,
    NotMultiplicativelyClosed,
    SchurKitError,
    WedgePreconditionFailed,
)
from .groups import (
    AbelianGroup,
    GroupHom,
    Subgroup,
    all_subgroups,
    quotient,
    subgroup_as_group,
)
from .lattices import SemiLattice
from .linalg import in_span, rref


def _class_key(c: frozenset):
    return (len(c), min(c))


@dataclass(frozen=True)
class Partition:
    """Disjoint nonempty index classes covering the group, in canonical order."""

    group: AbelianGroup
    classes: tuple

    @classmethod
    def from_indices(cls, G: AbelianGroup, classes: Iterable[Iterable[int]]) -> "Partition":
        cl = [frozenset(int(i) for i in c) for c in classes]
        if any(not c for c in cl):
            raise NotAPartition("empty class")
        seen: set = set()
        for c in cl:
            if seen & c:
                raise NotAPartition("classes overlap")
            seen |= c
        if seen != set(range(G.order)):
            raise NotAPartition("classes do not cover the group")
        return cls(G, tuple(sorted(cl, key=_class_key)))

    @classmethod
    def from_elements(cls, G: AbelianGroup, classes: Iterable[Iterable]) -> "Partition":
        return cls.from_indices(G, [[G.index(g) for g in c] for c in classes])

    @classmethod
    def from_labels(cls, G: AbelianGroup, labels: Sequence[int]) -> "Partition":
        groups: dict = {}
        for i, lab in enumerate(labels):
            groups.setdefault(lab, []).append(i)
        return cls.from_indices(G, groups.values())

    @cached_property
    def labels(self) -> np.ndarray:
        out = np.empty(self.group.order, dtype=np.int64)
        for k, c in enumerate(self.classes):
            out[list(c)] = k
        return out

    def __len__(self):
        return len(self.classes)

    def element_classes(self) -> list:
        """Classes as sorted lists of residue tuples."""
        return [[self.group.elements[i] for i in sorted(c)] for c in self.classes]


@dataclass(frozen=True, eq=False)
class SchurRing:
    """A verified Schur partition; build with :func:`verify_schur` or a constructor."""

    partition: Partition
    structure_constants: dict = field(repr=False)

    @property
    def group(self) -> AbelianGroup:
        return self.partition.group

    @property
    def classes(self) -> tuple:
        return self.partition.classes

    @property
    def dimension(self) -> int:
        return len(self.partition.classes)

    @cached_property
    def class_sums(self) -> list:
        return [indicator(self.group, c) for c in self.classes]

    def __eq__(self, other):
        return isinstance(other, SchurRing) and self.partition == other.partition

    def __hash__(self):
        return hash(self.partition)

    def __repr__(self):
        return f"SchurRing({self.group}, dim={self.dimension})"

    def __contains__(self, a: AlgebraElement) -> bool:
        return membership(self, a)

    def class_of(self, g) -> frozenset:
        return self.classes[int(self.partition.labels[self.group.index(g)])]

    def coordinates(self, a: AlgebraElement) -> list:
        """Coefficients of a member in the class-sum basis."""
        if not membership(self, a):
            raise SchurKitError("element is not in the ring")
        return [a.coeffs.get(min(c), Fraction(0)) for c in self.classes]


def verify_schur(p: Partition) -> SchurRing:
    """Check the three Schur axioms; returns the ring with its structure constants."""
    G = p.group
    classes = p.classes
    labels = p.labels
    if classes[0] != frozenset([0]):
        raise IdentityNotSingleton("the identity must form its own class")
    inv = G.inv
    class_set = set(classes)
    for k, c in enumerate(classes):
        if frozenset(int(inv[i]) for i in c) not in class_set:
            raise NotInverseClosed(k)
    r = len(classes)
    mul = G.mul
    reps = np.array([min(c) for c in classes], dtype=np.int64)
    lam = {}
    for i in range(r):
        cnt = np.asarray(_kernels.class_product_counts(labels, mul, r, i))
        on_reps = cnt[:, reps]
        bad = np.flatnonzero((cnt != on_reps[:, labels]).any(axis=1))
        bad = bad[bad >= i]
        if bad.size:
            raise NotMultiplicativelyClosed(i, int(bad[0]))
        for j, k in zip(*np.nonzero(on_reps)):
            lam[i, int(j), int(k)] = int(on_reps[j, k])
    return SchurRing(p, lam)


def membership(S: SchurRing, a: AlgebraElement) -> bool:
    if a.group != S.group:
        raise GroupMismatch("element over another group")
    return is_constant_on(a, S.classes)


def is_s_set(S: SchurRing, A: Iterable) -> bool:
    """True if ``A`` is a union of S-classes."""
    G = S.group
    idx = {G.index(g) for g in A}
    return _is_union(S, idx)


def _is_union(S: SchurRing, idx) -> bool:
    return all(c <= idx or not (c & idx) for c in S.classes)


def s_subgroups(S: SchurRing) -> SemiLattice:
    """All subgroups whose sum lies in S (a lattice)."""
    subs = [H for H in all_subgroups(S.group) if _is_union(S, H.elements)]
    return SemiLattice(S.group, frozenset(subs))


# constructors


def group_algebra(G: AbelianGroup) -> SchurRing:
    return verify_schur(Partition.from_indices(G, [[i] for i in range(G.order)]))


def trivial_schur(G: AbelianGroup) -> SchurRing:
    classes = [[0]] + ([list(range(1, G.order))] if G.order > 1 else [])
    return verify_schur(Partition.from_indices(G, classes))


def orbit_schur(G: AbelianGroup, auts: Iterable[GroupHom]) -> SchurRing:
    """Orbits of the automorphism group generated by ``auts``."""
    tables = []
    for a in auts:
        if a.domain != G or a.codomain != G or not a.is_bijective:
            raise NotAnAutomorphism(f"{a.images} is not an automorphism of {G}")
        tables.append(a.table)
    parent = list(range(G.order))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for t in tables:
        for i in range(G.order):
            a, b = find(i), find(int(t[i]))
            if a != b:
                parent[max(a, b)] = min(a, b)
    return verify_schur(Partition.from_labels(G, [find(i) for i in range(G.order)]))


def lattice_schur(G: AbelianGroup, L: SemiLattice) -> SchurRing:
    """The Schur ring spanned by the sums of the members of a subgroup lattice.

    Classes are the strata of the common refinement of the member indicators.
    """
    if L.group != G:
        raise GroupMismatch("lattice over another group")
    if not L.is_lattice:
        raise NotALattice("family is not closed under intersections")
    members = L.sorted()
    sigs = [tuple(i in H.elements for H in members) for i in range(G.order)]
    return verify_schur(Partition.from_labels(G, sigs))


def _coordinate_embeddings(S_group, T_group, G):
    if G.factors != S_group.factors + T_group.factors:
        raise NotDirectProduct("embeddings required unless G's factors concatenate")
    k, m = S_group.rank, T_group.rank
    left = GroupHom(S_group, G, tuple(tuple(int(i == j) for j in range(k + m)) for i in range(k)))
    right = GroupHom(T_group, G, tuple(tuple(int(i + k == j) for j in range(k + m)) for i in range(m)))
    return left, right


def dot_product(S: SchurRing, T: SchurRing, G: AbelianGroup,
                left: GroupHom | None = None, right: GroupHom | None = None) -> SchurRing:
    """Product partition of two rings over internal direct factors of ``G``."""
    if left is None or right is None:
        left, right = _coordinate_embeddings(S.group, T.group, G)
    if left.domain != S.group or right.domain != T.group or left.codomain != G or right.codomain != G:
        raise NotDirectProduct("embedding domains/codomains do not match")
    A, B = left.image(), right.image()
    if A.order != S.group.order or B.order != T.group.order:
        raise NotDirectProduct("embeddings are not injective")
    if A.elements & B.elements != {0} or A.order * B.order != G.order:
        raise NotDirectProduct("images do not form an internal direct product")
    lt, rt, mul = left.table, right.table, G.mul
    classes = []
    for c in S.classes:
        for d in T.classes:
            classes.append({int(mul[lt[x], rt[y]]) for x in c for y in d})
    return verify_schur(Partition.from_indices(G, classes))


def wedge_product(S: SchurRing, T: SchurRing, G: AbelianGroup, H: Subgroup, K: Subgroup,
                  embed: GroupHom | None = None, proj: GroupHom | None = None) -> SchurRing:
    """Glue ``S`` over ``H`` and ``T`` over ``G/K`` along ``H/K``.

    ``embed`` maps ``S.group`` onto ``H``; ``proj`` maps ``G`` onto ``T.group``
    with kernel ``K``.  Defaults are :func:`subgroup_as_group` and
    :func:`quotient`.
    """
    if H.group != G or K.group != G:
        raise WedgePreconditionFailed("H and K must be subgroups of G")
    if not (1 < K.order and K.elements <= H.elements and H.order < G.order):
        raise WedgePreconditionFailed("chain 1 < K <= H < G")
    if embed is None:
        A, embed = subgroup_as_group(H)
        if A != S.group:
            raise WedgePreconditionFailed("S is not over the canonical copy of H")
    if proj is None:
        Q, proj = quotient(G, K)
        if Q != T.group:
            raise WedgePreconditionFailed("T is not over the canonical quotient G/K")
    if embed.domain != S.group or embed.codomain != G or embed.image() != H or embed.kernel().order != 1:
        raise WedgePreconditionFailed("embedding is not an isomorphism onto H")
    if proj.domain != G or proj.codomain != T.group or proj.kernel() != K or proj.image().order != T.group.order:
        raise WedgePreconditionFailed("projection is not onto G/K with kernel K")
    et = embed.table
    s_classes = [frozenset(int(et[i]) for i in c) for c in S.classes]
    if not all(c <= K.elements or not (c & K.elements) for c in s_classes):
        raise WedgePreconditionFailed("K is not an S-subgroup")
    HK = proj.image_of(H)
    if not _is_union(T, HK.elements):
        raise WedgePreconditionFailed("H/K is not a T-subgroup")
    composite = proj.compose(embed)
    pi_S = [apply_hom(composite, c).vector() for c in S.class_sums]
    t_inside = [indicator(T.group, c).vector() for c in T.classes if c <= HK.elements]
    if rref(pi_S)[0] != rref(t_inside)[0]:
        raise WedgePreconditionFailed("pi(S) differs from T restricted to H/K")
    pt = proj.table
    classes = list(s_classes)
    for c in T.classes:
        if not c <= HK.elements:
            classes.append(frozenset(int(i) for i in np.flatnonzero(np.isin(pt, list(c)))))
    return verify_schur(Partition.from_indices(G, classes))


def maximal_lattice_subring(S: SchurRing) -> SchurRing:
    return lattice_schur(S.group, s_subgroups(S))


def span_partition(G: AbelianGroup, elems: Sequence[AlgebraElement],
                   support: Iterable[int] | None = None) -> list:
    """Coarsest partition (of ``support``, default all of G) on whose classes
    every element of the span is constant."""
    support = range(G.order) if support is None else sorted(support)
    zero = Fraction(0)
    groups: dict = {}
    for i in support:
        sig = tuple(e.coeffs.get(i, zero) for e in elems)
        groups.setdefault(sig, []).append(i)
    return [frozenset(v) for v in groups.values()]


def is_schur_span(elems: Sequence[AlgebraElement]) -> bool:
    """Closure criterion: a subalgebra is a Schur ring iff it contains 1 and
    the sum of all group elements and is closed under ``*`` and ``∘``."""
    G = elems[0].group
    red, piv = rref([e.vector() for e in elems])
    def inside(a):
        return in_span(a.vector(), red, piv)

    basis = [AlgebraElement.from_vector(G, r) for r in red]
    if not inside(AlgebraElement.one(G)) or not inside(indicator(G, range(G.order))):
        return False
    for a in basis:
        if not inside(star(a)):
            return False
        for b in basis:
            if not inside(hadamard(a, b)) or not inside(a * b):
                return False
    return True


@dataclass
class CayleyImage:
    basis: list
    is_schur: bool
    partition: list | None  # classes as index sets in the codomain
    ring: SchurRing | None = None  # over an abstract copy of the image group
    embedding: GroupHom | None = None

    @property
    def dimension(self) -> int:
        return len(self.basis)


def cayley_image(phi: GroupHom, S: SchurRing) -> CayleyImage:
    """Image of ``S`` under the linear extension of ``phi`` and whether it is a
    Schur ring over ``phi(G)``."""
    if phi.domain != S.group:
        raise GroupMismatch("map is not defined on the ring's group")
    C = phi.codomain
    imgs = [apply_hom(phi, c) for c in S.class_sums]
    red, _ = rref([a.vector() for a in imgs])
    basis = [AlgebraElement.from_vector(C, r) for r in red]
    img = phi.image()
    blocks = span_partition(C, basis, img.elements)
    if len(blocks) != len(basis):
        return CayleyImage(basis, False, None)
    A, emb = subgroup_as_group(img)
    back = {int(emb.table[i]): i for i in range(A.order)}
    try:
        ring = verify_schur(Partition.from_indices(A, [[back[i] for i in b] for b in blocks]))
    except SchurKitError:
        return CayleyImage(basis, False, None)
    return CayleyImage(basis, True, sorted(blocks, key=_class_key), ring, emb)
