"""The diamond join-semilattice: bottom, an antichain of atoms, and top.

Elements are ordered canonically as [0, a_1, ..., a_{n-2}, 1].  Internally
an element is a small integer code (0 = bottom, 1..n-2 = atoms, n-1 = top);
the public `LatticeElement` wrapper carries the structural view.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

BOTTOM = "bottom"
ATOM = "atom"
TOP = "top"

DEFAULT_MAX_N = 10
_ENV_MAX_N = "DIAMONDSEMI_MAX_N"


class InvalidElementError(ValueError):
    """An element does not belong to the given diamond."""


class SizeCapError(ValueError):
    """Requested lattice size exceeds the configured cap."""


def max_n() -> int:
    """Size cap, overridable through the DIAMONDSEMI_MAX_N env var."""
    raw = os.environ.get(_ENV_MAX_N)
    if raw is None:
        return DEFAULT_MAX_N
    return int(raw)


@dataclass(frozen=True)
class LatticeElement:
    tag: str
    atom_index: int | None = None

    def __post_init__(self):
        if self.tag not in (BOTTOM, ATOM, TOP):
            raise InvalidElementError(f"unknown tag {self.tag!r}")
        if (self.tag == ATOM) != (self.atom_index is not None):
            raise InvalidElementError("atom_index present iff tag is atom")
        if self.tag == ATOM and self.atom_index < 1:
            raise InvalidElementError(f"atom index must be >= 1, got {self.atom_index}")

    def __str__(self) -> str:
        if self.tag == BOTTOM:
            return "0"
        if self.tag == TOP:
            return "1"
        return f"a{self.atom_index}"


_BOTTOM_ELEMENT = LatticeElement(BOTTOM)
_TOP_ELEMENT = LatticeElement(TOP)


def bottom() -> LatticeElement:
    return _BOTTOM_ELEMENT


def top() -> LatticeElement:
    return _TOP_ELEMENT


def atom(i: int) -> LatticeElement:
    return LatticeElement(ATOM, i)


@dataclass(frozen=True)
class Diamond:
    """The n-element diamond: 0 below an antichain of n-2 atoms below 1."""

    n: int
    cap: int = field(default_factory=max_n)

    def __post_init__(self):
        if self.n < 4:
            raise ValueError(f"diamond needs n >= 4, got n={self.n}")
        if self.n > self.cap:
            raise SizeCapError(f"n={self.n} exceeds cap {self.cap}")

    @property
    def atom_count(self) -> int:
        return self.n - 2

    @property
    def top_code(self) -> int:
        return self.n - 1

    # -- code <-> element -------------------------------------------------

    def code(self, x: LatticeElement) -> int:
        """Canonical index of x: 0, atoms 1..n-2, top n-1."""
        if x.tag == BOTTOM:
            return 0
        if x.tag == TOP:
            return self.n - 1
        if not 1 <= x.atom_index <= self.atom_count:
            raise InvalidElementError(
                f"atom index {x.atom_index} out of range 1..{self.atom_count}"
            )
        return x.atom_index

    def element(self, code: int) -> LatticeElement:
        if not 0 <= code < self.n:
            raise InvalidElementError(f"code {code} out of range for n={self.n}")
        if code == 0:
            return _BOTTOM_ELEMENT
        if code == self.n - 1:
            return _TOP_ELEMENT
        return LatticeElement(ATOM, code)

    def elements(self) -> list[LatticeElement]:
        """All elements in canonical order [0, a_1, ..., a_{n-2}, 1]."""
        return [self.element(c) for c in range(self.n)]

    # -- the join order ---------------------------------------------------

    def join_codes(self, x: int, y: int) -> int:
        t = self.n - 1
        if x == 0 or x == y:
            return y
        if y == 0:
            return x
        if x == t or y == t:
            return t
        return t  # distinct atoms join to top

    def join(self, x: LatticeElement, y: LatticeElement) -> LatticeElement:
        return self.element(self.join_codes(self.code(x), self.code(y)))

    def leq_codes(self, x: int, y: int) -> bool:
        return self.join_codes(x, y) == y

    def leq(self, x: LatticeElement, y: LatticeElement) -> bool:
        return self.leq_codes(self.code(x), self.code(y))

    # -- rendering --------------------------------------------------------

    def render_code(self, code: int) -> str:
        return str(self.element(code))

    def parse(self, text: str) -> LatticeElement:
        text = text.strip()
        if text == "0":
            return _BOTTOM_ELEMENT
        if text == "1":
            return _TOP_ELEMENT
        if text.startswith("a"):
            try:
                i = int(text[1:])
            except ValueError:
                raise InvalidElementError(f"cannot parse element {text!r}") from None
            if not 1 <= i <= self.atom_count:
                raise InvalidElementError(f"atom {text!r} out of range for n={self.n}")
            return LatticeElement(ATOM, i)
        raise InvalidElementError(f"cannot parse element {text!r}")
