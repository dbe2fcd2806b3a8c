"""Principal congruences by union-find closure, and simplicity decisions.

A congruence is the smallest equivalence merging a seed pair that is
compatible with both operations: whenever u ~ v, also u+t ~ v+t,
u*t ~ v*t and t*u ~ t*v for every t.  Simplicity is decided by sweeping
all element pairs and checking every principal congruence is full; the
lattice of all congruences is never enumerated except in the small-order
cross-check `all_congruences`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations


@dataclass(frozen=True)
class Partition:
    """Normalized partition: block ids numbered by first occurrence."""

    blocks: tuple[int, ...]

    @staticmethod
    def from_assignment(assignment) -> "Partition":
        remap: dict[int, int] = {}
        out = []
        for b in assignment:
            if b not in remap:
                remap[b] = len(remap)
            out.append(remap[b])
        return Partition(tuple(out))

    @staticmethod
    def identity(m: int) -> "Partition":
        return Partition(tuple(range(m)))

    @staticmethod
    def full(m: int) -> "Partition":
        return Partition((0,) * m)

    @property
    def size(self) -> int:
        return len(self.blocks)

    @property
    def block_count(self) -> int:
        return len(set(self.blocks))

    @property
    def is_identity(self) -> bool:
        return self.block_count == self.size

    @property
    def is_full(self) -> bool:
        return self.block_count <= 1

    def same(self, x: int, y: int) -> bool:
        return self.blocks[x] == self.blocks[y]

    def block_lists(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for i, b in enumerate(self.blocks):
            out.setdefault(b, []).append(i)
        return [out[b] for b in sorted(out)]

    def refines(self, other: "Partition") -> bool:
        """True when every block of self sits inside a block of other."""
        rep: dict[int, int] = {}
        for i, b in enumerate(self.blocks):
            if b in rep:
                if other.blocks[i] != other.blocks[rep[b]]:
                    return False
            else:
                rep[b] = i
        return True


class UnionFind:
    """Array union-find with path halving and union by size."""

    def __init__(self, m: int):
        self.parent = list(range(m))
        self.size = [1] * m

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]
        return True

    def partition(self) -> Partition:
        return Partition.from_assignment(self.find(i) for i in range(len(self.parent)))


def principal_congruence(S, x: int, y: int) -> Partition:
    """Smallest congruence merging x and y, by worklist closure."""
    m = S.order
    add, mul = S.add_table, S.mul_table
    uf = UnionFind(m)
    queue = [(x, y)]
    while queue:
        u, v = queue.pop()
        if not uf.union(u, v):
            continue
        for t in range(m):
            a, b = int(add[u, t]), int(add[v, t])
            if uf.find(a) != uf.find(b):
                queue.append((a, b))
            a, b = int(mul[u, t]), int(mul[v, t])
            if uf.find(a) != uf.find(b):
                queue.append((a, b))
            a, b = int(mul[t, u]), int(mul[t, v])
            if uf.find(a) != uf.find(b):
                queue.append((a, b))
    return uf.partition()


def is_congruence(S, part: Partition) -> bool:
    """Post-hoc validity: the partition respects both operations."""
    m = S.order
    add, mul = S.add_table, S.mul_table
    for block in part.block_lists():
        u = block[0]
        for v in block[1:]:
            for t in range(m):
                if not part.same(int(add[u, t]), int(add[v, t])):
                    return False
                if not part.same(int(mul[u, t]), int(mul[v, t])):
                    return False
                if not part.same(int(mul[t, u]), int(mul[t, v])):
                    return False
    return True


def is_congruence_simple(S, want_witness: bool = True) -> tuple[bool, Partition | None]:
    """True iff every pair generates the full congruence.

    Degenerate one-element semirings count as simple.  On failure, the
    finest non-full principal congruence found is returned as witness.
    """
    m = S.order
    if m <= 1:
        return True, None
    witness: Partition | None = None
    for x, y in combinations(range(m), 2):
        part = principal_congruence(S, x, y)
        if not part.is_full:
            if not want_witness:
                return False, part
            if witness is None or part.block_count > witness.block_count:
                witness = part
    return (witness is None), witness


def all_partitions(m: int):
    """All partitions of range(m) as restricted-growth assignments."""
    assignment = [0] * m

    def rec(i: int, top: int):
        if i == m:
            yield Partition(tuple(assignment))
            return
        for b in range(top + 1):
            assignment[i] = b
            yield from rec(i + 1, top + (1 if b == top else 0))

    yield from rec(0, 0)


def all_congruences(S) -> list[Partition]:
    """Exhaustive congruence set by partition sweep; small orders only."""
    if S.order > 8:
        raise ValueError("partition sweep is meant for orders <= 8")
    return [p for p in all_partitions(S.order) if is_congruence(S, p)]
