"""JSON ring specifications.

A document is ``{"group": "Z12", "kind": ..., ...}`` with kind-specific keys:

* ``algebra`` / ``trivial``: nothing else.
* ``partition``: ``"classes"``, a list of element lists.
* ``orbit``: ``"automorphisms"``, each a list of generator images.
* ``lattice``: ``"subgroups"``, each an element list (1 and G are implied).
* ``dot``: ``"left"`` and ``"right"``, ring documents over the factors.
* ``wedge``: ``"H"``, ``"K"`` (element lists), ``"inner"`` over the
  canonical copy of H and ``"outer"`` over the canonical quotient G/K.

Elements are integers for cyclic groups and residue lists otherwise.
"""
from __future__ import annotations

import json
from pathlib import Path

from .enumeration import canonical_form
from .errors import ParseError, SchurKitError
from .groups import AbelianGroup, GroupHom, Subgroup, parse_group
from .lattices import SemiLattice
from .schur import (
    Partition,
    SchurRing,
    dot_product,
    group_algebra,
    lattice_schur,
    orbit_schur,
    trivial_schur,
    verify_schur,
    wedge_product,
)

KINDS = ("algebra", "trivial", "partition", "orbit", "lattice", "dot", "wedge")


def load_spec(text: str, group: str | None = None) -> dict:
    """Resolve a ``--ring`` argument: a kind name, ``@path`` or inline JSON."""
    text = text.strip()
    if text in ("algebra", "trivial"):
        doc = {"kind": text}
    else:
        raw = Path(text[1:]).read_text() if text.startswith("@") else text
        try:
            doc = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ParseError(f"ring spec is not valid JSON: {exc}") from None
        if not isinstance(doc, dict):
            raise ParseError("ring spec must be a JSON object")
    if group is not None:
        doc.setdefault("group", group)
    return doc


def _field(doc: dict, key: str):
    if key not in doc:
        raise ParseError(f"ring spec of kind {doc.get('kind')!r} needs {key!r}")
    return doc[key]


def _elements(G: AbelianGroup, items) -> list:
    if not isinstance(items, list):
        raise ParseError("expected a list of elements")
    try:
        return [G.coerce(tuple(x) if isinstance(x, list) else x) for x in items]
    except (TypeError, ValueError) as exc:
        raise ParseError(str(exc)) from None


def build_ring(doc: dict) -> SchurRing:
    if "group" not in doc:
        raise ParseError("ring spec needs a group")
    G = parse_group(str(doc["group"]))
    kind = doc.get("kind", "partition")
    if kind not in KINDS:
        raise ParseError(f"unknown ring kind {kind!r}")
    if kind == "algebra":
        return group_algebra(G)
    if kind == "trivial":
        return trivial_schur(G)
    if kind == "partition":
        classes = [_elements(G, c) for c in _field(doc, "classes")]
        return verify_schur(Partition.from_elements(G, classes))
    if kind == "orbit":
        auts = [GroupHom(G, G, tuple(_elements(G, imgs))) for imgs in _field(doc, "automorphisms")]
        return orbit_schur(G, auts)
    if kind == "lattice":
        subs = [Subgroup.from_elements(G, _elements(G, s)) for s in _field(doc, "subgroups")]
        return lattice_schur(G, SemiLattice.generated_by(G, subs))
    if kind == "dot":
        left = build_ring(_field(doc, "left"))
        right = build_ring(_field(doc, "right"))
        return dot_product(left, right, G)
    H = Subgroup.from_elements(G, _elements(G, _field(doc, "H")))
    K = Subgroup.from_elements(G, _elements(G, _field(doc, "K")))
    return wedge_product(build_ring(_field(doc, "inner")), build_ring(_field(doc, "outer")), G, H, K)


def ring_from_arg(text: str, group: str | None = None) -> SchurRing:
    try:
        return build_ring(load_spec(text, group))
    except SchurKitError:
        raise
    except OSError as exc:
        raise ParseError(f"cannot read ring spec: {exc}") from None


def dump_ring(S: SchurRing) -> dict:
    """Canonical ``partition`` document for a ring."""
    return {"group": str(S.group), "kind": "partition", "classes": canonical_form(S)}
