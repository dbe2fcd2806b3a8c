"""Named endomorphisms and named subsets of the endomorphism semiring.

Each element family is built directly from its defining formula; each
subset family carries both a generative construction and an intensional
membership predicate over the enumerated elements, so the two can be
compared as a drift check.  Subset families are addressable by string
("AC", "E01", "Eai:1", "Eset:1,2", ...) for the CLI.

Glossary of constructors (images listed as (a_1..a_{n-2}, 1)):
  constant_bottom        the zero map
  constant_top           everything above bottom to top
  constant_atom(i)       everything above bottom to a_i
  annihilate_atom(i)     a_i to bottom, everything else to top
  redirect_atom(i, j)    a_i to a_j, everything else to top
  near_constant(i, j)    a_j to bottom, everything else to a_i
  nilpotent_at(i)        near_constant(i, i)
  partial_identity(A)    fixes the atoms in A, everything else to top
"""

from __future__ import annotations

from itertools import combinations

from .algebra import SubsetRef
from .endo import Endo, EndoSemiring
from .lattice import Diamond


class UnknownFamilyError(ValueError):
    """Family name is not in the closed registry."""


class BadFamilyParamsError(ValueError):
    """Family parameters are missing or out of range."""


# -- element constructors ------------------------------------------------


def _check_atom(d: Diamond, i: int) -> None:
    if not 1 <= i <= d.atom_count:
        raise BadFamilyParamsError(f"atom index {i} out of range 1..{d.atom_count}")


def constant_bottom(d: Diamond) -> Endo:
    return Endo(d, (0,) * (d.n - 1))


def constant_top(d: Diamond) -> Endo:
    return Endo(d, (d.top_code,) * (d.n - 1))


def constant_atom(d: Diamond, i: int) -> Endo:
    _check_atom(d, i)
    return Endo(d, (i,) * (d.n - 1))


def identity_endo(d: Diamond) -> Endo:
    return Endo(d, tuple(range(1, d.n)))


def annihilate_atom(d: Diamond, i: int) -> Endo:
    _check_atom(d, i)
    images = [d.top_code] * (d.n - 1)
    images[i - 1] = 0
    return Endo(d, tuple(images))


def redirect_atom(d: Diamond, i: int, j: int) -> Endo:
    _check_atom(d, i)
    _check_atom(d, j)
    images = [d.top_code] * (d.n - 1)
    images[i - 1] = j
    return Endo(d, tuple(images))


def near_constant(d: Diamond, i: int, j: int) -> Endo:
    _check_atom(d, i)
    _check_atom(d, j)
    images = [i] * (d.n - 1)
    images[j - 1] = 0
    return Endo(d, tuple(images))


def nilpotent_at(d: Diamond, i: int) -> Endo:
    return near_constant(d, i, i)


def partial_identity(d: Diamond, atoms) -> Endo:
    atoms = set(atoms)
    for i in atoms:
        _check_atom(d, i)
    images = [d.top_code] * (d.n - 1)
    for i in atoms:
        images[i - 1] = i
    return Endo(d, tuple(images))


# alias matching the role it plays inside restricted semirings
identity_on_atoms = partial_identity


def permutation_endo(d: Diamond, perm) -> Endo:
    """perm maps atom index -> atom index bijectively."""
    images = [perm[i] for i in range(1, d.atom_count + 1)]
    if sorted(images) != list(range(1, d.atom_count + 1)):
        raise BadFamilyParamsError("not a permutation of the atoms")
    return Endo(d, tuple(images) + (d.top_code,))


# -- membership predicates ----------------------------------------------


def _is_constant(e: Endo) -> bool:
    return len(set(e.images)) == 1


def _image_within(e: Endo, allowed: set[int]) -> bool:
    return set(e.images) <= allowed


def _is_almost_absorbing(e: Endo) -> bool:
    # zero, top-constant, or top-fixing with at most one non-top atom image
    d = e.diamond
    if e.images == constant_bottom(d).images:
        return True
    if e.top_image != d.top_code:
        return False
    off = [c for c in e.atom_images if c != d.top_code]
    return len(off) <= 1


def _is_permutation(e: Endo) -> bool:
    d = e.diamond
    return e.top_image == d.top_code and sorted(e.atom_images) == list(
        range(1, d.atom_count + 1)
    )


def _is_mul_idempotent(e: Endo) -> bool:
    return (e * e).images == e.images


def _is_regular(e: Endo) -> bool:
    # bottom outside the image and not a constant-atom map
    if 0 in e.images:
        return False
    return not (_is_constant(e) and e.images[0] != e.diamond.top_code)


# -- subset families -----------------------------------------------------


def _atom_set_param(d: Diamond, params) -> tuple[int, ...]:
    if not params:
        raise BadFamilyParamsError("family needs a non-empty atom index set")
    atoms = tuple(sorted(set(params)))
    for i in atoms:
        _check_atom(d, i)
    return atoms


def _single_atom_param(d: Diamond, params) -> int:
    if len(params) != 1:
        raise BadFamilyParamsError(f"family needs exactly one atom index, got {params}")
    _check_atom(d, params[0])
    return params[0]


def _formula_almost_constant(d: Diamond, params) -> list[Endo]:
    return [constant_bottom(d), constant_top(d)] + [
        constant_atom(d, i) for i in range(1, d.atom_count + 1)
    ]


def _pred_almost_constant(e: Endo, params) -> bool:
    return _is_constant(e)


def _formula_two_valued(d: Diamond, params) -> list[Endo]:
    # images within {bottom, top}: zero, top-constant, single-annihilator maps
    return [constant_bottom(d), constant_top(d)] + [
        annihilate_atom(d, i) for i in range(1, d.atom_count + 1)
    ]


def _pred_two_valued(e: Endo, params) -> bool:
    return _image_within(e, {0, e.diamond.top_code})


def _formula_atom_to_atom(d: Diamond, params) -> list[Endo]:
    out = [constant_bottom(d), constant_top(d)]
    for i in range(1, d.atom_count + 1):
        for j in range(1, d.atom_count + 1):
            out.append(redirect_atom(d, i, j))
    return out


def _pred_atom_to_atom(e: Endo, params) -> bool:
    d = e.diamond
    if e.images == constant_bottom(d).images:
        return True
    if e.top_image != d.top_code:
        return False
    off = [c for c in e.atom_images if c != d.top_code]
    return len(off) == 0 or (len(off) == 1 and 1 <= off[0] <= d.atom_count)


def _formula_almost_absorbing(d: Diamond, params) -> list[Endo]:
    seen = {e.images: e for e in _formula_two_valued(d, ())}
    for e in _formula_atom_to_atom(d, ()):
        seen.setdefault(e.images, e)
    return list(seen.values())


def _pred_almost_absorbing(e: Endo, params) -> bool:
    return _is_almost_absorbing(e)


def _formula_aa_idempotents(d: Diamond, params) -> list[Endo]:
    out = [constant_top(d)]
    for i in range(1, d.atom_count + 1):
        out.append(annihilate_atom(d, i))
        out.append(redirect_atom(d, i, i))
    return out


def _pred_aa_idempotents(e: Endo, params) -> bool:
    return _is_almost_absorbing(e) and _is_mul_idempotent(e) and e.images != constant_bottom(e.diamond).images


def _formula_regular(d: Diamond, params) -> list[Endo]:
    from .endo import enumerate_all

    return [e for e in enumerate_all(d) if _is_regular(e)]


def _pred_regular(e: Endo, params) -> bool:
    return _is_regular(e)


def _formula_permutations(d: Diamond, params) -> list[Endo]:
    from itertools import permutations

    out = []
    for values in permutations(range(1, d.atom_count + 1)):
        out.append(Endo(d, values + (d.top_code,)))
    return out


def _pred_permutations(e: Endo, params) -> bool:
    return _is_permutation(e)


def _formula_regular_non_invertible(d: Diamond, params) -> list[Endo]:
    return [e for e in _formula_regular(d, ()) if not _is_permutation(e)]


def _pred_regular_non_invertible(e: Endo, params) -> bool:
    return _is_regular(e) and not _is_permutation(e)


def _formula_non_permutations(d: Diamond, params) -> list[Endo]:
    from .endo import enumerate_all

    return [e for e in enumerate_all(d) if not _is_permutation(e)]


def _pred_non_permutations(e: Endo, params) -> bool:
    return not _is_permutation(e)


def _formula_regular_idempotents(d: Diamond, params) -> list[Endo]:
    out = []
    atoms = range(1, d.atom_count + 1)
    for size in range(d.atom_count + 1):
        for subset in combinations(atoms, size):
            out.append(partial_identity(d, subset))
    return out


def _pred_regular_idempotents(e: Endo, params) -> bool:
    return _is_regular(e) and _is_mul_idempotent(e)


def _formula_regular_idempotents_ext(d: Diamond, params) -> list[Endo]:
    seen = {e.images: e for e in _formula_regular_idempotents(d, ())}
    for e in _formula_almost_constant(d, ()):
        seen.setdefault(e.images, e)
    return list(seen.values())


def _pred_regular_idempotents_ext(e: Endo, params) -> bool:
    return _pred_regular_idempotents(e, ()) or _is_constant(e)


def _formula_chain_image(d: Diamond, params) -> list[Endo]:
    (i,) = (_single_atom_param(d, params),)
    out = [constant_bottom(d), constant_atom(d, i), constant_top(d)]
    for j in range(1, d.atom_count + 1):
        out.append(near_constant(d, i, j))
        out.append(redirect_atom(d, j, i))
        out.append(annihilate_atom(d, j))
    return out


def _pred_chain_image(e: Endo, params) -> bool:
    i = params[0]
    return _image_within(e, {0, i, e.diamond.top_code})


def _formula_chain_lower(d: Diamond, params) -> list[Endo]:
    i = _single_atom_param(d, params)
    out = [constant_bottom(d), constant_atom(d, i)]
    for j in range(1, d.atom_count + 1):
        out.append(near_constant(d, i, j))
    return out


def _pred_chain_lower(e: Endo, params) -> bool:
    i = params[0]
    return _image_within(e, {0, i})


def _formula_chain_upper(d: Diamond, params) -> list[Endo]:
    i = _single_atom_param(d, params)
    out = [constant_atom(d, i), constant_top(d)]
    for j in range(1, d.atom_count + 1):
        out.append(redirect_atom(d, j, i))
    return out


def _pred_chain_upper(e: Endo, params) -> bool:
    i = params[0]
    return _image_within(e, {i, e.diamond.top_code})


def _formula_multi_chain(d: Diamond, params) -> list[Endo]:
    from .endo import enumerate_all

    atoms = _atom_set_param(d, params)
    allowed = {0, d.top_code} | set(atoms)
    return [e for e in enumerate_all(d) if _image_within(e, allowed)]


def _pred_multi_chain(e: Endo, params) -> bool:
    allowed = {0, e.diamond.top_code} | set(params)
    return _image_within(e, allowed)


def _formula_two_valued_plus_redirects(d: Diamond, params) -> list[Endo]:
    i = _single_atom_param(d, params)
    out = _formula_two_valued(d, ())
    for j in range(1, d.atom_count + 1):
        out.append(redirect_atom(d, j, i))
    return out


def _pred_two_valued_plus_redirects(e: Endo, params) -> bool:
    return _pred_two_valued(e, ()) or _pred_chain_upper(e, params) and 0 not in e.images and not _is_constant(e)


def _formula_stable_idempotents(d: Diamond, params) -> list[Endo]:
    seen = {e.images: e for e in _formula_regular_idempotents(d, ())}
    for i in range(1, d.atom_count + 1):
        e = annihilate_atom(d, i)
        seen.setdefault(e.images, e)
    e = constant_top(d)
    seen.setdefault(e.images, e)
    return list(seen.values())


def _pred_stable_idempotents(e: Endo, params) -> bool:
    return e.top_image == e.diamond.top_code and _is_mul_idempotent(e)


def _formula_stable_idempotents_chain(d: Diamond, params) -> list[Endo]:
    atoms = _atom_set_param(d, params)
    allowed = {0, d.top_code} | set(atoms)
    return [
        e for e in _formula_stable_idempotents(d, ()) if _image_within(e, allowed)
    ]


def _pred_stable_idempotents_chain(e: Endo, params) -> bool:
    return _pred_stable_idempotents(e, ()) and _pred_multi_chain(e, params)


def _formula_simple_chain_link(d: Diamond, params) -> list[Endo]:
    if len(params) != 1:
        raise BadFamilyParamsError("chain link needs a single order parameter")
    m = params[0]
    if not 2 <= m <= d.n - 1:
        raise BadFamilyParamsError(f"chain order {m} out of range 2..{d.n - 1}")
    return [annihilate_atom(d, j) for j in range(1, m)] + [constant_top(d)]


def _pred_simple_chain_link(e: Endo, params) -> bool:
    m = params[0]
    d = e.diamond
    if e.images == constant_top(d).images:
        return True
    return any(e.images == annihilate_atom(d, j).images for j in range(1, m))


def remark_72_elements(d: Diamond) -> list[Endo]:
    """The 13-element non-simple subsemiring inside the a_1,a_2 double chain (n=5)."""
    if d.n != 5:
        raise BadFamilyParamsError("this family is defined for n=5 only")
    a, b, t = 1, 2, d.top_code
    tuples = [
        (t, t, t, t),
        (a, t, t, t), (t, a, t, t), (t, t, a, t),
        (b, t, t, t), (t, b, t, t), (t, t, b, t),
        (a, b, t, t), (b, a, t, t),
        (a, t, b, t), (b, t, a, t),
        (t, a, b, t), (t, b, a, t),
    ]
    return [Endo(d, images) for images in tuples]


def _formula_remark_72(d: Diamond, params) -> list[Endo]:
    return remark_72_elements(d)


def _formula_union_chain_ideal(d: Diamond, params) -> list[Endo]:
    atoms = _atom_set_param(d, params)
    if len(atoms) < 3:
        raise BadFamilyParamsError("union ideal needs at least 3 atom indices")
    seen: dict[tuple[int, ...], Endo] = {}
    for j in atoms:
        rest = tuple(i for i in atoms if i != j)
        for e in _formula_multi_chain(d, rest):
            seen.setdefault(e.images, e)
    return list(seen.values())


def _pred_union_chain_ideal(e: Endo, params) -> bool:
    atoms = tuple(params)
    return any(
        _pred_multi_chain(e, tuple(i for i in atoms if i != j)) for j in atoms
    )


# name -> (formula builder, predicate or None, params kind doc)
_FAMILIES = {
    "AC": (_formula_almost_constant, _pred_almost_constant),
    "E01": (_formula_two_valued, _pred_two_valued),
    "Ea1": (_formula_atom_to_atom, _pred_atom_to_atom),
    "AA": (_formula_almost_absorbing, _pred_almost_absorbing),
    "IDAA": (_formula_aa_idempotents, _pred_aa_idempotents),
    "Reg": (_formula_regular, _pred_regular),
    "P": (_formula_permutations, _pred_permutations),
    "MReg": (_formula_regular_non_invertible, _pred_regular_non_invertible),
    "MAX": (_formula_non_permutations, _pred_non_permutations),
    "IDReg": (_formula_regular_idempotents, _pred_regular_idempotents),
    "IDRegX": (_formula_regular_idempotents_ext, _pred_regular_idempotents_ext),
    "Eai": (_formula_chain_image, _pred_chain_image),
    "E0i": (_formula_chain_lower, _pred_chain_lower),
    "Ei1": (_formula_chain_upper, _pred_chain_upper),
    "Eset": (_formula_multi_chain, _pred_multi_chain),
    "R": (_formula_two_valued_plus_redirects, _pred_two_valued_plus_redirects),
    "SI": (_formula_stable_idempotents, _pred_stable_idempotents),
    "SIa": (
        lambda d, params: [
            annihilate_atom(d, _single_atom_param(d, params)),
            redirect_atom(d, params[0], params[0]),
            constant_top(d),
        ],
        lambda e, params: _pred_stable_idempotents(e, ())
        and _pred_chain_image(e, params)
        # every other atom maps to top: excludes annihilators of other atoms
        and all(
            c == e.diamond.top_code
            for j, c in enumerate(e.atom_images, start=1)
            if j != _single_atom_param(e.diamond, params)
        ),
    ),
    "SIset": (_formula_stable_idempotents_chain, _pred_stable_idempotents_chain),
    "Sk": (_formula_simple_chain_link, _pred_simple_chain_link),
    "S7.2": (_formula_remark_72, None),
    "I7.5": (_formula_union_chain_ideal, _pred_union_chain_ideal),
}


def family_names() -> tuple[str, ...]:
    return tuple(sorted(_FAMILIES))


def family_elements(d: Diamond, name: str, params: tuple[int, ...] = ()) -> list[Endo]:
    """The family as a deduplicated, canonically sorted element list."""
    if name not in _FAMILIES:
        raise UnknownFamilyError(f"unknown family {name!r}; known: {family_names()}")
    formula, _ = _FAMILIES[name]
    seen = {e.images: e for e in formula(d, tuple(params))}
    return [seen[k] for k in sorted(seen)]


def family_predicate_members(
    S: EndoSemiring, name: str, params: tuple[int, ...] = ()
) -> list[Endo] | None:
    """Intensional form: filter the enumerated elements; None if extensional-only."""
    if name not in _FAMILIES:
        raise UnknownFamilyError(f"unknown family {name!r}; known: {family_names()}")
    _, pred = _FAMILIES[name]
    if pred is None:
        return None
    return [e for e in S.endos if pred(e, tuple(params))]


def make_subset(S: EndoSemiring, name: str, params: tuple[int, ...] = ()) -> SubsetRef:
    elems = family_elements(S.diamond, name, params)
    return SubsetRef(S, tuple(S.index(e) for e in elems))


def parse_family_spec(text: str) -> tuple[str, tuple[int, ...]]:
    """Parse CLI specs like "AC", "Eai:1", "Eset:1,2", "I7.5:1,2,3"."""
    if ":" in text:
        name, raw = text.split(":", 1)
        try:
            params = tuple(int(p) for p in raw.split(",") if p.strip())
        except ValueError:
            raise BadFamilyParamsError(f"bad parameters in family spec {text!r}") from None
    else:
        name, params = text, ()
    if name not in _FAMILIES:
        raise UnknownFamilyError(f"unknown family {name!r}; known: {family_names()}")
    return name, params


# -- the order-16 embedding into a double chain -------------------------


def phi_embedding(
    S4: EndoSemiring, Sn: EndoSemiring, a: int, b: int
) -> dict[int, int]:
    """Index map embedding the n=4 semiring into E(a_a, a_b) of a larger diamond.

    The image tuple keeps positions a and b for the two atom images and
    fills every other coordinate with the image of top.
    """
    if S4.diamond.n != 4:
        raise BadFamilyParamsError("first semiring must be over the 4-element diamond")
    dn = Sn.diamond
    if dn.n <= 4:
        raise BadFamilyParamsError("target diamond must have n > 4")
    if a == b:
        raise BadFamilyParamsError("need two distinct atoms")
    _check_atom(dn, a)
    _check_atom(dn, b)

    translate = {0: 0, 1: a, 2: b, 3: dn.top_code}
    mapping: dict[int, int] = {}
    for idx, e in enumerate(S4.endos):
        img_a, img_b, img_t = (translate[c] for c in e.images)
        images = [img_t] * (dn.n - 1)
        images[a - 1] = img_a
        images[b - 1] = img_b
        mapping[idx] = Sn.index(Endo(dn, tuple(images)))
    return mapping
