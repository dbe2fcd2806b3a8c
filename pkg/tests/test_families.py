"""Named element families: constructor formulas vs membership predicates,
element constructors, and spec parsing."""

import itertools

import pytest

from diamondsemi import algebra, families
from diamondsemi.families import (
    BadFamilyParamsError,
    UnknownFamilyError,
    annihilate_atom,
    constant_atom,
    constant_bottom,
    constant_top,
    family_elements,
    family_names,
    family_predicate_members,
    identity_endo,
    make_subset,
    near_constant,
    nilpotent_at,
    parse_family_spec,
    partial_identity,
    permutation_endo,
    phi_embedding,
    redirect_atom,
)

# representative parameters per family; () means parameter-free
PARAM_CHOICES = {
    "AC": [()], "E01": [()], "Ea1": [()], "AA": [()], "IDAA": [()],
    "Reg": [()], "P": [()], "MReg": [()], "MAX": [()], "IDReg": [()],
    "IDRegX": [()], "SI": [()],
    "Eai": [(1,), (2,)], "E0i": [(1,), (2,)], "Ei1": [(1,), (2,)],
    "R": [(1,), (2,)], "SIa": [(1,), (2,)],
    "Eset": [(1, 2), (1,)], "SIset": [(1, 2)],
    "Sk": [(2,), (3,)],
    "I7.5": [(1, 2, 3)],
    "S7.2": [()],
}


@pytest.mark.parametrize("n", [4, 5, 6])
def test_formula_and_predicate_agree(n, semirings):
    """Extensional construction and intensional membership define the same set."""
    S = semirings[n]
    d = S.diamond
    for name in family_names():
        if name == "S7.2" and n != 5:
            continue
        for params in PARAM_CHOICES[name]:
            if name in ("I7.5",) and max(params) > d.atom_count:
                continue
            built = {e.images for e in family_elements(d, name, params)}
            filtered = family_predicate_members(S, name, params)
            if filtered is None:
                continue  # extensional-only family
            assert built == {e.images for e in filtered}, (name, params, n)


def test_all_families_covered_by_param_choices():
    assert set(PARAM_CHOICES) == set(family_names())


def test_element_constructors():
    from diamondsemi.lattice import Diamond

    d = Diamond(6)
    t = d.top_code
    assert constant_bottom(d).images == (0, 0, 0, 0, 0)
    assert constant_top(d).images == (t,) * 5
    assert constant_atom(d, 3).images == (3, 3, 3, 3, 3)
    assert identity_endo(d).images == (1, 2, 3, 4, t)
    assert annihilate_atom(d, 2).images == (t, 0, t, t, t)
    assert redirect_atom(d, 2, 4).images == (t, 4, t, t, t)
    assert near_constant(d, 1, 3).images == (1, 1, 0, 1, 1)
    assert nilpotent_at(d, 2).images == (2, 0, 2, 2, 2)
    assert partial_identity(d, (1, 3)).images == (1, t, 3, t, t)
    assert permutation_endo(d, {1: 2, 2: 1, 3: 3, 4: 4}).images == (2, 1, 3, 4, t)
    with pytest.raises(BadFamilyParamsError):
        constant_atom(d, 9)
    with pytest.raises(BadFamilyParamsError):
        permutation_endo(d, {1: 1, 2: 1, 3: 3, 4: 4})


def test_family_sizes(semirings):
    for n in (4, 5, 6):
        d = semirings[n].diamond
        k = n - 2
        assert len(family_elements(d, "AC")) == k + 2
        assert len(family_elements(d, "E01")) == n
        assert len(family_elements(d, "AA")) == k * k + k + 2
        import math

        assert len(family_elements(d, "P")) == math.factorial(k)
        assert len(family_elements(d, "Eai", (1,))) == 3 * (n - 1)
        assert len(family_elements(d, "SIa", (1,))) == 3
        for m in range(2, n):
            assert len(family_elements(d, "Sk", (m,))) == m


def test_parse_family_spec():
    assert parse_family_spec("AA") == ("AA", ())
    assert parse_family_spec("Eai:2") == ("Eai", (2,))
    assert parse_family_spec("Eset:1,3") == ("Eset", (1, 3))
    with pytest.raises(UnknownFamilyError):
        parse_family_spec("nope")
    with pytest.raises(BadFamilyParamsError):
        parse_family_spec("Eai:x")


def test_bad_params(semirings):
    d = semirings[5].diamond
    with pytest.raises(BadFamilyParamsError):
        family_elements(d, "Eai", ())
    with pytest.raises(BadFamilyParamsError):
        family_elements(d, "Eai", (7,))
    with pytest.raises(BadFamilyParamsError):
        family_elements(d, "Sk", (9,))
    with pytest.raises(BadFamilyParamsError):
        family_elements(d, "I7.5", (1, 2))
    with pytest.raises(UnknownFamilyError):
        make_subset(semirings[5], "nope")


def test_partial_identity_laws(semirings):
    """alpha_A + alpha_B = alpha_A * alpha_B = alpha_{A intersect B}."""
    S = semirings[5]
    d = S.diamond
    atoms = range(1, d.atom_count + 1)
    subsets = [
        frozenset(c)
        for size in range(d.atom_count + 1)
        for c in itertools.combinations(atoms, size)
    ]
    for A, B in itertools.product(subsets, repeat=2):
        pa, pb = partial_identity(d, A), partial_identity(d, B)
        meet = partial_identity(d, A & B).images
        assert (pa + pb).images == meet
        assert (pa * pb).images == meet


def test_redirect_composition_law(semirings):
    """psi_{i,j} . psi_{j,k} = psi_{i,k} (left factor applied first)."""
    d = semirings[6].diamond
    for i, j, k in itertools.product(range(1, d.atom_count + 1), repeat=3):
        left = redirect_atom(d, i, j) * redirect_atom(d, j, k)
        assert left.images == redirect_atom(d, i, k).images


def test_phi_embedding_is_injective_homomorphism(semirings):
    S4, S5 = semirings[4], semirings[5]
    mapping = phi_embedding(S4, S5, 1, 3)
    assert len(set(mapping.values())) == S4.order == 16
    for x in range(S4.order):
        for y in range(S4.order):
            assert mapping[int(S4.add_table[x, y])] == int(
                S5.add_table[mapping[x], mapping[y]]
            )
            assert mapping[int(S4.mul_table[x, y])] == int(
                S5.mul_table[mapping[x], mapping[y]]
            )
    with pytest.raises(BadFamilyParamsError):
        phi_embedding(S4, S5, 2, 2)
