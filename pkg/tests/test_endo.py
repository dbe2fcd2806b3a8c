"""Endomorphism enumeration, arithmetic and the semiring construction.

The fast enumerator is checked against an independent brute-force oracle
(filter all n^(n-1) image tuples by the homomorphism property) and against
the closed-form count.
"""

import itertools

import pytest

from diamondsemi.endo import (
    Endo,
    NotAHomomorphismError,
    build_semiring,
    endo_count,
    enumerate_brute,
    enumerate_fast,
    parse_endo,
    validate,
)
from diamondsemi.lattice import Diamond

KNOWN_ORDERS = {4: 16, 5: 50, 6: 234}


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_fast_matches_brute_oracle(n):
    d = Diamond(n)
    fast = sorted(e.images for e in enumerate_fast(d))
    brute = sorted(e.images for e in enumerate_brute(d))
    assert fast == brute
    assert len(fast) == len(set(fast)) == endo_count(n)


@pytest.mark.parametrize("n,order", sorted(KNOWN_ORDERS.items()))
def test_known_orders(n, order):
    assert endo_count(n) == order
    assert len(enumerate_fast(Diamond(n))) == order


@pytest.mark.parametrize("n", [4, 5])
def test_every_endo_preserves_joins_and_bottom(n):
    d = Diamond(n)
    for e in enumerate_fast(d):
        assert e.apply_code(0) == 0
        for x, y in itertools.product(range(n), repeat=2):
            assert e.apply_code(d.join_codes(x, y)) == d.join_codes(
                e.apply_code(x), e.apply_code(y)
            )


def test_worked_examples_n4():
    # atoms a=a1, b=a2; tuples are (image of a, image of b, image of top)
    d = Diamond(4)
    oaa = Endo(d, (0, 1, 1))
    aoa = Endo(d, (1, 0, 1))
    obb = Endo(d, (0, 2, 2))
    bob = Endo(d, (2, 0, 2))
    abar = Endo(d, (1, 1, 1))
    ident = Endo(d, (1, 2, 3))
    zero = Endo(d, (0, 0, 0))
    assert (oaa + aoa).images == abar.images
    assert (obb + aoa).images == ident.images
    assert (oaa * bob).images == obb.images  # left operand applied first
    assert (aoa * oaa).images == zero.images


def test_validate_rejects_non_homomorphisms():
    d = Diamond(5)
    # two atoms map to distinct atoms while top maps to an atom: join breaks
    with pytest.raises(NotAHomomorphismError) as exc:
        validate(d, (1, 2, 1, 1))
    assert exc.value.witness is not None
    with pytest.raises(Exception):
        validate(d, (0, 0))  # wrong arity
    ok = validate(d, (1, 2, 3, 4))
    assert ok.images == (1, 2, 3, 4)


def test_str_parse_roundtrip():
    d = Diamond(5)
    for e in enumerate_fast(d):
        assert parse_endo(d, str(e)).images == e.images


@pytest.mark.parametrize("n", [4, 5])
def test_semiring_tables_agree_with_operator_arithmetic(n):
    S = build_semiring(Diamond(n))
    for i, j in itertools.product(range(0, S.order, 7), range(0, S.order, 5)):
        x, y = S.endos[i], S.endos[j]
        assert int(S.add_table[i, j]) == S.index(x + y)
        assert int(S.mul_table[i, j]) == S.index(x * y)


def test_semiring_identity_and_zero():
    S = build_semiring(Diamond(4))
    assert S.labels[S.zero_index] == "(0,0,0)"
    assert S.labels[S.one_index] == "(a1,a2,1)"
