"""Exhaustive search for all Schur rings over a small abelian group.

Non-identity elements are placed one at a time into blocks.  Each block is
created together with its inverse partner (itself, or a fresh block), so
every completed assignment is an inverse-closed partition; multiplicative
closure is tested at the leaves by the integer kernel.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .analysis import is_tidy
from .errors import SchurKitError
from .groups import AbelianGroup, check_bound
from .schur import Partition, SchurRing, s_subgroups, verify_schur
from .wedderburn import wedderburn_decomposition

DEFAULT_ENUM_BOUND = 13


@dataclass
class EnumerationResult:
    group: AbelianGroup
    rings: list
    count: int
    elapsed: float
    leaves: int = 0


def _search(mul, inv, start_labels, start_partner, start_pos, out, counter):
    n = mul.shape[0]
    labels = list(start_labels)
    partner = list(start_partner)

    def rec(pos):
        while pos < n and labels[pos] >= 0:
            pos += 1
        if pos == n:
            counter[0] += 1
            arr = np.asarray(labels, dtype=np.int64)
            if _kernels.is_closed(arr, mul, len(partner)):
                out.append(tuple(labels))
            return
        y = int(inv[pos])
        selfinv = y == pos
        for b in range(1, len(partner)):
            if selfinv and partner[b] != b:
                continue
            labels[pos] = b
            labels[y] = partner[b]
            rec(pos + 1)
        labels[y] = -1
        # new self-paired block
        b = len(partner)
        partner.append(b)
        labels[pos] = labels[y] = b
        rec(pos + 1)
        partner.pop()
        if not selfinv:
            # new pair of mutually inverse blocks
            partner.extend([b + 1, b])
            labels[pos], labels[y] = b, b + 1
            rec(pos + 1)
            partner.pop()
            partner.pop()
        labels[pos] = labels[y] = -1

    rec(start_pos)


def _prefixes(G: AbelianGroup, depth: int) -> list:
    """Partial assignments after the first ``depth`` placement decisions."""
    n, inv = G.order, G.inv
    labels = [-1] * n
    labels[0] = 0
    states = [(labels, [0], 1)]
    for _ in range(depth):
        nxt = []
        for labels, partner, pos in states:
            while pos < n and labels[pos] >= 0:
                pos += 1
            if pos == n:
                nxt.append((labels, partner, pos))
                continue
            y = int(inv[pos])
            selfinv = y == pos
            for b in range(1, len(partner)):
                if selfinv and partner[b] != b:
                    continue
                lab = list(labels)
                lab[pos], lab[y] = b, partner[b]
                nxt.append((lab, list(partner), pos + 1))
            b = len(partner)
            lab = list(labels)
            lab[pos] = lab[y] = b
            nxt.append((lab, partner + [b], pos + 1))
            if not selfinv:
                lab = list(labels)
                lab[pos], lab[y] = b, b + 1
                nxt.append((lab, partner + [b + 1, b], pos + 1))
        states = nxt
    return states


def _run_prefix(args):
    factors, labels, partner, pos = args
    G = AbelianGroup(factors)
    out: list = []
    counter = [0]
    _search(G.mul, G.inv, labels, partner, pos, out, counter)
    return out, counter[0]


def canonical_key(labels) -> tuple:
    """Classes of a label vector as sorted index tuples in canonical order."""
    groups: dict = {}
    for i, lab in enumerate(labels):
        groups.setdefault(lab, []).append(i)
    return tuple(sorted((tuple(c) for c in groups.values()), key=lambda c: (len(c), c[0])))


def all_schur_rings(G: AbelianGroup, bound: int = DEFAULT_ENUM_BOUND, workers: int = 1) -> EnumerationResult:
    check_bound(G, bound)
    t0 = time.perf_counter()
    if workers > 1 and G.order > 2:
        jobs = [(G.factors, lab, part, pos) for lab, part, pos in _prefixes(G, 2)]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_run_prefix, jobs))
        found = [r for rs, _ in parts for r in rs]
        leaves = sum(c for _, c in parts)
    else:
        labels = [-1] * G.order
        labels[0] = 0
        found, leaves = _run_prefix((G.factors, labels, [0], 1))
    keys = sorted({canonical_key(lab) for lab in found})
    rings = [verify_schur(Partition.from_indices(G, k)) for k in keys]
    return EnumerationResult(G, rings, len(rings), time.perf_counter() - t0, leaves)


def _set_partitions(items: list):
    """All set partitions of ``items`` via restricted growth strings."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for p in _set_partitions(rest):
        yield [[first]] + p
        for k in range(len(p)):
            yield p[:k] + [[first] + p[k]] + p[k + 1:]


def all_schur_rings_unfiltered(G: AbelianGroup, bound: int = 8) -> list:
    """Slow reference path: every set partition checked by :func:`verify_schur`."""
    check_bound(G, bound)
    out = []
    for p in _set_partitions(list(range(1, G.order))):
        try:
            out.append(verify_schur(Partition.from_indices(G, [[0]] + p)))
        except SchurKitError:
            pass
    return sorted(out, key=lambda S: canonical_key(S.partition.labels))


def canonical_form(S: SchurRing) -> list:
    """Classes as sorted encoded elements, ordered by (size, least element)."""
    G = S.group
    classes = sorted((sorted(c) for c in S.classes), key=lambda c: (len(c), c[0]))
    return [[G.encode(G.element(i)) for i in c] for c in classes]


def catalog_entry(S: SchurRing) -> dict:
    entry = {
        "classes": canonical_form(S),
        "dimension": S.dimension,
        "s_subgroup_orders": s_subgroups(S).orders(),
        "tidy": is_tidy(S).tidy,
    }
    if S.group.is_cyclic:
        entry["wedderburn"] = wedderburn_decomposition(S).pretty()
    return entry
