import pytest

from conftest import enumerated
from schurkit.algebra import AlgebraElement, normalized_sum, parse_element
from schurkit.analysis import ideal_dimensions, is_tidy, primitive_idempotents_general
from schurkit.errors import AtomCapExceeded
from schurkit.groups import AbelianGroup, GroupHom, all_subgroups, generate, whole
from schurkit.idempotents import atoms, schur_primitive_idempotents
from schurkit.lattices import SemiLattice
from schurkit.schur import group_algebra, lattice_schur, orbit_schur

Z3Z3 = AbelianGroup((3, 3))


@pytest.fixture(scope="module")
def z3z3_orbit():
    return orbit_schur(Z3Z3, [GroupHom(Z3Z3, Z3Z3, ((0, 1), (2, 0)))])


def test_group_algebra_idempotents_are_atoms():
    for f in [(12,), (2, 6), (3, 3)]:
        G = AbelianGroup(f)
        prims = primitive_idempotents_general(group_algebra(G))
        assert set(prims) == {a for _, a in atoms(G)}


def test_z3z3_idempotents(z3z3_orbit):
    G = Z3Z3
    prims = primitive_idempotents_general(z3z3_orbit)
    Gbar = sum((AlgebraElement.basis(G, g) for g in G.elements), AlgebraElement.zero(G))
    e1 = parse_element(G, "2/3 + 1/3*(1,0) + 1/3*(2,0) + 1/3*(0,1) + 1/3*(0,2)") - Gbar * 2 / 9
    e2 = parse_element(G, "2/3 + 1/3*(1,1) + 1/3*(2,2) + 1/3*(1,2) + 1/3*(2,1)") - Gbar * 2 / 9
    assert set(prims) == {normalized_sum(whole(G)), e1, e2}
    a, b = generate(G, [(1, 0)]), generate(G, [(0, 1)])
    atom = dict(atoms(G))
    assert e1 == atom[a] + atom[b]
    assert ideal_dimensions(z3z3_orbit, prims) == [1, 1, 1]


def test_z3z3_not_tidy(z3z3_orbit):
    rep = is_tidy(z3z3_orbit)
    assert not rep.tidy and rep.verdict == "not tidy"
    assert len(rep.witnesses) == 2
    assert sum(rep.witnesses, AlgebraElement.zero(Z3Z3)) == AlgebraElement.one(Z3Z3) - normalized_sum(whole(Z3Z3))
    assert not rep.epsilons_primitive
    assert rep.lattice_span_dimension == 2


def test_lattice_rings_tidy():
    for f in [(2, 2), (2, 4), (3, 3), (2, 2, 2), (12,)]:
        G = AbelianGroup(f)
        subs = all_subgroups(G).subgroups
        for H in subs:
            L = SemiLattice.generated_by(G, [H])
            if L.is_lattice:
                assert is_tidy(lattice_schur(G, L)).tidy
        assert is_tidy(lattice_schur(G, SemiLattice.full(G))).tidy


@pytest.mark.parametrize("factors", [(4,), (6,), (8,), (12,)])
def test_cyclic_rings_oracle_equivalence(factors):
    for S in enumerated(factors).rings:
        thm = {e for _, e in schur_primitive_idempotents(S).items()}
        assert set(primitive_idempotents_general(S)) == thm
        assert is_tidy(S).tidy


@pytest.mark.parametrize("factors", [(2, 2), (4, 2), (2, 2, 2), (3, 3), (2, 6)])
def test_tidiness_characterizations_agree(factors):
    verdicts = []
    for S in enumerated(factors).rings:
        rep = is_tidy(S)
        assert rep.tidy == rep.epsilons_primitive
        prims = rep.primitive_idempotents
        assert sum(prims, AlgebraElement.zero(S.group)) == AlgebraElement.one(S.group)
        for i, a in enumerate(prims):
            for b in prims[i + 1:]:
                assert (a * b).is_zero()
        verdicts.append(rep.tidy)
    if S.group.order <= 8:
        assert all(verdicts)


def test_atom_cap():
    with pytest.raises(AtomCapExceeded):
        primitive_idempotents_general(group_algebra(AbelianGroup.cyclic(12)), cap=3)
