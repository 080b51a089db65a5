"""Reference rings and known values behind ``schurkit selfcheck``."""
from __future__ import annotations

from fractions import Fraction

from .algebra import AlgebraElement, indicator, parse_element
from .analysis import ideal_dimensions, is_tidy
from .enumeration import all_schur_rings
from .groups import AbelianGroup, GroupHom, cyclic_subgroup, parse_group, trivial_subgroup
from .idempotents import decomposition_atoms, epsilon, epsilon_full, full_lattice
from .schur import cayley_image, s_subgroups
from .specdoc import build_ring
from .wedderburn import orbit_formula_dims, wedderburn_decomposition

Z12 = AbelianGroup.cyclic(12)

RING_S = {"group": "Z12", "kind": "partition",
          "classes": [[0], [6], [4, 8], [2, 10], [1, 5, 9], [3, 7, 11]]}
RING_T = {"group": "Z12", "kind": "partition",
          "classes": [[0], [6], [4, 10], [2, 8], [1, 3, 5, 7, 9, 11]]}
RING_U = {"group": "Z12", "kind": "partition",
          "classes": [[0], [4], [8], [2, 6, 10], [1, 5, 9], [3, 7, 11]]}
# sigma: a -> a b^3, b -> b^-1
RING_Z2Z6 = {"group": "Z2xZ6", "kind": "orbit", "automorphisms": [[[1, 3], [0, 5]]]}
# sigma: a -> b, b -> a^2
RING_Z3Z3 = {"group": "Z3xZ3", "kind": "orbit", "automorphisms": [[[0, 1], [2, 0]]]}
RING_Z5Z5 = {"group": "Z5xZ5", "kind": "lattice",
             "subgroups": [[[i, 0] for i in range(5)], [[0, i] for i in range(5)],
                           [[i, i] for i in range(5)]]}

# epsilon(Z12, G_d), keyed by d
EPS_QZ12 = {
    1: "1/3 - 1/3*z^6 - 1/6*z^4 - 1/6*z^8 + 1/6*z^2 + 1/6*z^10",
    2: "1/6 + 1/6*z^6 - 1/6*z^3 - 1/6*z^9 - 1/12*z^2 - 1/12*z^4 - 1/12*z^8 - 1/12*z^10"
       " + 1/12*z + 1/12*z^5 + 1/12*z^7 + 1/12*z^11",
    3: "1/6 + 1/6*z^4 + 1/6*z^8 - 1/6*z^2 - 1/6*z^6 - 1/6*z^10",
    4: "1/6 + 1/6*z^3 + 1/6*z^6 + 1/6*z^9 - 1/12*z - 1/12*z^2 - 1/12*z^4 - 1/12*z^5"
       " - 1/12*z^7 - 1/12*z^8 - 1/12*z^10 - 1/12*z^11",
    6: "1/12 + 1/12*z^2 + 1/12*z^4 + 1/12*z^6 + 1/12*z^8 + 1/12*z^10"
       " - 1/12*z - 1/12*z^3 - 1/12*z^5 - 1/12*z^7 - 1/12*z^9 - 1/12*z^11",
    12: " + ".join(["1/12"] + [f"1/12*z^{k}" for k in range(1, 12)]),
}

S_SUBGROUP_ORDERS = {"S": [1, 2, 3, 6, 12], "T": [1, 2, 6, 12], "U": [1, 3, 6, 12]}

SHAPES = {"S": "Q^4 ⊕ Q(i)", "T": "Q^3 ⊕ Q(zeta_3)", "U": "Q^2 ⊕ Q(i) ⊕ Q(zeta_3)"}

ENUMERATION_COUNTS = {"Z4xZ2": 28, "Z2xZ2xZ2": 100}


def _check_eps_QZ12() -> bool:
    return all(
        epsilon_full(Z12, cyclic_subgroup(Z12, d)) == parse_element(Z12, text)
        for d, text in EPS_QZ12.items()
    )


def _check_worked_rings() -> bool:
    rings = {"S": build_ring(RING_S), "T": build_ring(RING_T), "U": build_ring(RING_U)}
    if any(s_subgroups(R).orders() != S_SUBGROUP_ORDERS[k] for k, R in rings.items()):
        return False
    G2 = cyclic_subgroup(Z12, 2)
    one = trivial_subgroup(Z12)
    checks = [
        (rings["S"], G2, "1/3 + 1/3*z^6 - 1/6*z^2 - 1/6*z^4 - 1/6*z^8 - 1/6*z^10"),
        (rings["T"], one, "1/2 - 1/2*z^6"),
        (rings["U"], one, "2/3 - 1/3*z^4 - 1/3*z^8"),
    ]
    return all(epsilon(s_subgroups(R), H) == parse_element(Z12, t) for R, H, t in checks)


def _check_shapes() -> bool:
    return all(
        wedderburn_decomposition(build_ring(doc)).pretty() == SHAPES[k]
        for k, doc in (("S", RING_S), ("T", RING_T), ("U", RING_U))
    )


def _check_counts() -> bool:
    return all(all_schur_rings(parse_group(g)).count == c for g, c in ENUMERATION_COUNTS.items())


def _check_cayley() -> bool:
    S = build_ring(RING_Z2Z6)
    C = AbelianGroup.cyclic(6)
    phi = GroupHom(S.group, C, ((0,), (1,)))
    img = cayley_image(phi, S)
    return img.dimension == 5 and not img.is_schur


def _check_not_tidy() -> bool:
    S = build_ring(RING_Z3Z3)
    rep = is_tidy(S)
    G = S.group
    split = {
        parse_element(G, "2/3 + 1/3*(1,0) + 1/3*(2,0) + 1/3*(0,1) + 1/3*(0,2)") - _g_bar(G, "2/9"),
        parse_element(G, "2/3 + 1/3*(1,1) + 1/3*(2,2) + 1/3*(1,2) + 1/3*(2,1)") - _g_bar(G, "2/9"),
    }
    witnesses = set(rep.witnesses)
    actual = len(ideal_dimensions(S, rep.primitive_idempotents))
    predicted = len(orbit_formula_dims(G, [GroupHom(G, G, ((0, 1), (2, 0)))]))
    return not rep.tidy and witnesses == split and (actual, predicted) == (3, 5)


def _g_bar(G: AbelianGroup, coef: str) -> AlgebraElement:
    return indicator(G, range(G.order)) * Fraction(coef)


def _check_klein() -> bool:
    G = AbelianGroup((2, 2))
    return epsilon(full_lattice(G), trivial_subgroup(G)).is_zero()


def _check_z5z5() -> bool:
    S = build_ring(RING_Z5Z5)
    return sorted(len(c) for c in S.classes) == [1, 4, 4, 4, 12]


def _check_decomposition_atoms() -> bool:
    S, T, U = build_ring(RING_S), build_ring(RING_T), build_ring(RING_U)
    G = {d: cyclic_subgroup(Z12, d) for d in (1, 2, 3, 4, 6, 12)}

    def atoms_of(R, h):
        return sorted(K.order for K in decomposition_atoms(s_subgroups(R), G[h]))

    return (atoms_of(S, 2) == [2, 4] and atoms_of(T, 1) == [1, 3]
            and atoms_of(U, 1) == [1, 2, 4])


CHECKS = {
    "idempotents of Q[Z12]": _check_eps_QZ12,
    "worked rings S, T, U": _check_worked_rings,
    "decomposition atoms": _check_decomposition_atoms,
    "wedderburn shapes": _check_shapes,
    "enumeration counts": _check_counts,
    "Z2xZ6 cayley image": _check_cayley,
    "Z3xZ3 not tidy": _check_not_tidy,
    "Z2xZ2 epsilon(G,1) = 0": _check_klein,
    "Z5xZ5 lattice ring": _check_z5z5,
}


def run_selfcheck() -> list:
    return [(name, bool(fn())) for name, fn in CHECKS.items()]
