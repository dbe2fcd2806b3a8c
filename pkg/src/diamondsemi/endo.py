"""Zero-fixing join-endomorphisms of the diamond and their semiring.

An endomorphism is stored as the tuple of image codes of
(a_1, ..., a_{n-2}, 1); bottom maps to bottom implicitly.  Addition is the
pointwise join.  Multiplication is composition with the left factor applied
first: (f * g)(x) = g(f(x)).  This is the convention every downstream
structural computation uses; the resulting multiplication table for n=4
matches the published one row-by-row (row = left operand).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .lattice import Diamond, LatticeElement, SizeCapError


class NotAHomomorphismError(ValueError):
    """Candidate tuple fails join-preservation; carries a witness pair."""

    def __init__(self, message: str, witness: tuple[int, int]):
        super().__init__(message)
        self.witness = witness  # codes (x, y) with img(x v y) != img(x) v img(y)


class DiamondMismatchError(ValueError):
    """Operands live over different diamonds."""


@dataclass(frozen=True)
class Endo:
    """A zero-fixing join-endomorphism, as the image tuple of (a_1..a_{n-2}, 1)."""

    diamond: Diamond
    images: tuple[int, ...]

    def apply_code(self, code: int) -> int:
        if code == 0:
            return 0
        return self.images[code - 1]

    def apply(self, x: LatticeElement) -> LatticeElement:
        return self.diamond.element(self.apply_code(self.diamond.code(x)))

    @property
    def top_image(self) -> int:
        return self.images[-1]

    @property
    def atom_images(self) -> tuple[int, ...]:
        return self.images[:-1]

    def image_codes(self) -> set[int]:
        """Image of the whole lattice, bottom included."""
        return {0} | set(self.images)

    def __add__(self, other: "Endo") -> "Endo":
        if self.diamond != other.diamond:
            raise DiamondMismatchError("cannot add endomorphisms over different diamonds")
        d = self.diamond
        return Endo(d, tuple(d.join_codes(a, b) for a, b in zip(self.images, other.images)))

    def __mul__(self, other: "Endo") -> "Endo":
        # left operand applies first: (f * g)(x) = g(f(x))
        if self.diamond != other.diamond:
            raise DiamondMismatchError("cannot compose endomorphisms over different diamonds")
        return Endo(self.diamond, tuple(other.apply_code(c) for c in self.images))

    def __str__(self) -> str:
        d = self.diamond
        return "(" + ",".join(d.render_code(c) for c in self.images) + ")"


def validate(d: Diamond, images: tuple[int, ...] | list[int]) -> Endo:
    """Check join-preservation of a candidate image tuple over all pairs.

    The pairs that can fail are (a_i, a_j) with i != j (joining to top) and
    (a_i, 1); everything else is forced.  All pairs are still swept so a
    failure carries a concrete witness.
    """
    images = tuple(images)
    if len(images) != d.n - 1:
        raise ValueError(f"expected {d.n - 1} images, got {len(images)}")
    for c in images:
        if not 0 <= c < d.n:
            raise ValueError(f"image code {c} out of range for n={d.n}")
    e = Endo(d, images)
    for x in range(d.n):
        for y in range(x, d.n):
            lhs = e.apply_code(d.join_codes(x, y))
            rhs = d.join_codes(e.apply_code(x), e.apply_code(y))
            if lhs != rhs:
                raise NotAHomomorphismError(
                    f"tuple {e} breaks join at ({d.render_code(x)}, {d.render_code(y)}): "
                    f"image of join is {d.render_code(lhs)} but join of images is "
                    f"{d.render_code(rhs)}",
                    witness=(x, y),
                )
    return e


def is_valid(d: Diamond, images: tuple[int, ...]) -> bool:
    try:
        validate(d, images)
        return True
    except NotAHomomorphismError:
        return False


def parse_endo(d: Diamond, text: str) -> Endo:
    """Parse the "(0,a1,a1)" rendering back into an endomorphism."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    parts = [p for p in body.split(",") if p.strip()]
    codes = [d.code(d.parse(p)) for p in parts]
    return validate(d, codes)


# -- enumeration ---------------------------------------------------------


def enumerate_brute(d: Diamond) -> list[Endo]:
    """Oracle path: filter all n^(n-1) image tuples through validate."""
    out = []
    for images in itertools.product(range(d.n), repeat=d.n - 1):
        if is_valid(d, images):
            out.append(Endo(d, images))
    out.sort(key=lambda e: e.images)
    return out


def enumerate_fast(d: Diamond) -> list[Endo]:
    """Generate endomorphisms by structural case analysis on the top image.

    Cases: the zero map; top maps to an atom k (all atoms to a_k, or one
    atom to bottom and the rest to a_k); top maps to top (one atom to
    bottom and the rest to top, or an injective assignment of some atoms
    to atoms with the rest going to top).
    """
    n = d.n
    m = n - 2
    t = n - 1
    out: list[tuple[int, ...]] = [(0,) * (n - 1)]

    for k in range(1, m + 1):
        out.append((k,) * (n - 1))  # constant a_k above bottom
        for z in range(1, m + 1):  # one atom dropped to bottom
            images = [k] * (n - 1)
            images[z - 1] = 0
            out.append(tuple(images))

    for z in range(1, m + 1):  # one atom to bottom, rest to top
        images = [t] * (n - 1)
        images[z - 1] = 0
        out.append(tuple(images))

    atoms = range(1, m + 1)
    for size in range(0, m + 1):  # injective partial maps atoms -> atoms
        for support in itertools.combinations(atoms, size):
            for values in itertools.permutations(atoms, size):
                images = [t] * (n - 1)
                for pos, val in zip(support, values):
                    images[pos - 1] = val
                out.append(tuple(images))

    uniq = sorted(set(out))
    return [Endo(d, images) for images in uniq]


def enumerate_all(d: Diamond) -> list[Endo]:
    """All zero-fixing endomorphisms in canonical (lexicographic) order."""
    return enumerate_fast(d)


def endo_count(n: int) -> int:
    """Closed-form census matching the case analysis of enumerate_fast."""
    import math

    m = n - 2
    injective = sum(
        math.comb(m, k) * math.perm(m, k) for k in range(m + 1)
    )
    return 1 + m * (m + 1) + m + injective


# -- the dense-table semiring -------------------------------------------


class SemiringLawError(RuntimeError):
    """A constructed table violates a semiring law (implementation bug)."""


@dataclass(frozen=True, eq=False)
class EndoSemiring:
    """All endomorphisms of a diamond with dense addition/composition tables."""

    diamond: Diamond
    endos: tuple[Endo, ...]
    add_table: np.ndarray
    mul_table: np.ndarray
    zero_index: int
    one_index: int

    @property
    def order(self) -> int:
        return len(self.endos)

    def index(self, e: Endo) -> int:
        return self._index_map[e.images]

    @property
    def _index_map(self) -> dict[tuple[int, ...], int]:
        cache = self.__dict__.get("_index_map_cache")
        if cache is None:
            cache = {e.images: i for i, e in enumerate(self.endos)}
            object.__setattr__(self, "_index_map_cache", cache)
        return cache

    @property
    def labels(self) -> tuple[str, ...]:
        cache = self.__dict__.get("_labels_cache")
        if cache is None:
            cache = tuple(str(e) for e in self.endos)
            object.__setattr__(self, "_labels_cache", cache)
        return cache


def build_semiring(d: Diamond) -> EndoSemiring:
    endos = enumerate_all(d)
    order = len(endos)
    index = {e.images: i for i, e in enumerate(endos)}
    dtype = np.int16 if order < 2**15 else np.int32
    add = np.empty((order, order), dtype=dtype)
    mul = np.empty((order, order), dtype=dtype)
    for i, f in enumerate(endos):
        for j, g in enumerate(endos):
            s = f + g
            p = f * g
            try:
                add[i, j] = index[s.images]
                mul[i, j] = index[p.images]
            except KeyError:  # pragma: no cover - closure failure is fatal
                raise SemiringLawError(f"{f} op {g} left the enumerated set")
    zero_index = index[(0,) * (d.n - 1)]
    one_index = index[tuple(range(1, d.n))]
    ring = EndoSemiring(d, tuple(endos), add, mul, zero_index, one_index)
    _assert_laws(ring)
    return ring


def _assert_laws(ring: EndoSemiring) -> None:
    # cheap spot assertions at build time; the full law report lives in algebra
    add, mul, z, one = ring.add_table, ring.mul_table, ring.zero_index, ring.one_index
    if not np.array_equal(add, add.T):
        raise SemiringLawError("addition table is not symmetric")
    if not np.array_equal(np.diag(add), np.arange(ring.order)):
        raise SemiringLawError("addition is not idempotent")
    rng = np.arange(ring.order)
    if not (
        np.array_equal(add[z], rng)
        and np.array_equal(mul[z], np.full(ring.order, z))
        and np.array_equal(mul[:, z], np.full(ring.order, z))
    ):
        raise SemiringLawError("zero element misbehaves")
    if not (np.array_equal(mul[one], rng) and np.array_equal(mul[:, one], rng)):
        raise SemiringLawError("identity element misbehaves")
