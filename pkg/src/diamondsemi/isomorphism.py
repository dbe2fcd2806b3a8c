"""Brute-force isomorphism search between small finite semirings.

Candidates are pruned by iteratively refined element invariants (idempotency
flags plus operation-profile colors) before backtracking; any map found is
re-verified exhaustively on both tables.
"""

from __future__ import annotations

from collections import Counter

from .algebra import ISO_SEARCH_LIMIT


def verify_isomorphism(A, B, mapping: dict[int, int]) -> bool:
    """Exhaustive check that mapping is a bijection preserving both tables."""
    m = A.order
    if B.order != m or len(mapping) != m:
        return False
    if len(set(mapping.values())) != m:
        return False
    for x in range(m):
        for y in range(m):
            if mapping[int(A.add_table[x, y])] != int(B.add_table[mapping[x], mapping[y]]):
                return False
            if mapping[int(A.mul_table[x, y])] != int(B.mul_table[mapping[x], mapping[y]]):
                return False
    return True


def _colors(S, rounds: int = 3) -> list:
    m = S.order
    add, mul = S.add_table, S.mul_table
    color = [
        (int(add[x, x]) == x, int(mul[x, x]) == x)
        for x in range(m)
    ]
    for _ in range(rounds):
        nxt = []
        for x in range(m):
            profile = Counter()
            for t in range(m):
                profile[
                    (color[t], color[int(add[x, t])], color[int(mul[x, t])], color[int(mul[t, x])])
                ] += 1
            nxt.append((color[x], tuple(sorted(profile.items(), key=repr))))
        if len(set(nxt)) == len(set(color)):
            color = nxt
            break
        color = nxt
    return color


def find_isomorphism(A, B, candidate: dict[int, int] | None = None) -> dict[int, int] | None:
    """A table-preserving bijection, or None.

    Orders above ISO_SEARCH_LIMIT only verify a supplied candidate map.
    """
    if candidate is not None:
        return dict(candidate) if verify_isomorphism(A, B, candidate) else None
    if A.order != B.order:
        return None
    m = A.order
    if m > ISO_SEARCH_LIMIT:
        raise ValueError(
            f"order {m} exceeds search cap {ISO_SEARCH_LIMIT}; supply a candidate map"
        )

    ca, cb = _colors(A), _colors(B)
    if sorted(map(repr, ca)) != sorted(map(repr, cb)):
        return None
    targets = {c: [y for y in range(m) if repr(cb[y]) == c] for c in set(map(repr, ca))}

    mapping: dict[int, int] = {}
    used = [False] * m
    # assign most-constrained elements first
    order = sorted(range(m), key=lambda x: len(targets[repr(ca[x])]))

    def consistent(x: int, y: int) -> bool:
        for u, v in mapping.items():
            for TA, TB in ((A.add_table, B.add_table), (A.mul_table, B.mul_table)):
                r = int(TA[x, u])
                if r in mapping and mapping[r] != int(TB[y, v]):
                    return False
                r = int(TA[u, x])
                if r in mapping and mapping[r] != int(TB[v, y]):
                    return False
        return True

    def backtrack(i: int) -> bool:
        if i == m:
            return True
        x = order[i]
        for y in targets[repr(ca[x])]:
            if used[y] or not consistent(x, y):
                continue
            mapping[x] = y
            used[y] = True
            if backtrack(i + 1):
                return True
            del mapping[x]
            used[y] = False
        return False

    if backtrack(0) and verify_isomorphism(A, B, mapping):
        return dict(mapping)
    return None
