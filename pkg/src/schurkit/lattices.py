"""Join-closed families of subgroups."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import AmbientMismatch, NotASemiLattice
from .groups import AbelianGroup, Subgroup, all_subgroups, join, meet, trivial_subgroup, whole


@dataclass(frozen=True)
class SemiLattice:
    """Subgroups closed under joins, containing 1 and G."""

    group: AbelianGroup
    members: frozenset

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        G = self.group
        if any(H.group != G for H in self.members):
            raise AmbientMismatch("member from another group")
        if trivial_subgroup(G) not in self.members or whole(G) not in self.members:
            raise NotASemiLattice("must contain 1 and G")
        ms = self.sorted()
        for a, H in enumerate(ms):
            for K in ms[a + 1:]:
                if join(H, K) not in self.members:
                    raise NotASemiLattice(f"join of {H} and {K} missing")

    @classmethod
    def generated_by(cls, G: AbelianGroup, subs: Iterable[Subgroup]) -> "SemiLattice":
        """Join-closure of ``subs`` together with 1 and G."""
        found = set(subs) | {trivial_subgroup(G), whole(G)}
        changed = True
        while changed:
            changed = False
            for H in list(found):
                for K in list(found):
                    J = join(H, K)
                    if J not in found:
                        found.add(J)
                        changed = True
        return cls(G, frozenset(found))

    @classmethod
    def full(cls, G: AbelianGroup) -> "SemiLattice":
        return cls(G, frozenset(all_subgroups(G).subgroups))

    def sorted(self) -> list:
        return sorted(self.members, key=Subgroup.sort_key)

    @cached_property
    def is_lattice(self) -> bool:
        ms = self.sorted()
        return all(meet(H, K) in self.members for i, H in enumerate(ms) for K in ms[i + 1:])

    def __contains__(self, H) -> bool:
        return H in self.members

    def __iter__(self):
        return iter(self.sorted())

    def __len__(self):
        return len(self.members)

    def orders(self) -> list:
        return [H.order for H in self.sorted()]
