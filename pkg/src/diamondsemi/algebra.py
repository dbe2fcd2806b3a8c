"""Generic finite-semiring analysis over dense operation tables.

Everything here works on any object exposing `labels`, `add_table`,
`mul_table`, `order` and (possibly None) `zero_index` / `one_index`; both
`endo.EndoSemiring` and the standalone `FiniteSemiring` restrictions
qualify.  All decisions are exhaustive table scans or closures; nothing is
probabilistic except the large-order sampling path of `check_laws`, which
uses a fixed seed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

EXHAUSTIVE_LAW_LIMIT = 300
LAW_SAMPLE_TRIPLES = 1_000_000
LAW_SAMPLE_SEED = 20240817
ISO_SEARCH_LIMIT = 20


@dataclass(eq=False)
class FiniteSemiring:
    """An indexed element list with dense addition and multiplication tables."""

    labels: tuple[str, ...]
    add_table: np.ndarray
    mul_table: np.ndarray
    zero_index: int | None = None
    one_index: int | None = None
    # set on restrictions: position i here is element embedding[i] of ambient
    embedding: tuple[int, ...] | None = None
    ambient: object = None

    @property
    def order(self) -> int:
        return len(self.labels)


def find_zero(S) -> int | None:
    """Index of the additively neutral, multiplicatively absorbing element."""
    m = S.order
    add, mul = S.add_table, S.mul_table
    rng = np.arange(m)
    for z in range(m):
        if (
            np.array_equal(add[z], rng)
            and np.all(mul[z] == z)
            and np.all(mul[:, z] == z)
        ):
            return z
    return None


def find_identity(S) -> int | None:
    m = S.order
    mul = S.mul_table
    rng = np.arange(m)
    for e in range(m):
        if np.array_equal(mul[e], rng) and np.array_equal(mul[:, e], rng):
            return e
    return None


def find_infinity(S) -> int | None:
    """Element that absorbs both additively and multiplicatively."""
    m = S.order
    add, mul = S.add_table, S.mul_table
    for w in range(m):
        if np.all(add[w] == w) and np.all(mul[w] == w) and np.all(mul[:, w] == w):
            return w
    return None


def zero_of(S) -> int | None:
    z = getattr(S, "zero_index", None)
    return z if z is not None else find_zero(S)


def identity_of(S) -> int | None:
    e = getattr(S, "one_index", None)
    return e if e is not None else find_identity(S)


# -- law checking --------------------------------------------------------


@dataclass
class LawReport:
    order: int
    exhaustive: bool
    add_commutative: bool
    add_associative: bool
    mul_associative: bool
    left_distributive: bool
    right_distributive: bool
    add_idempotent: bool
    zero: int | None
    identity: int | None
    infinity: int | None
    failures: list[dict] = field(default_factory=list)

    @property
    def all_pass(self) -> bool:
        return (
            self.add_commutative
            and self.add_associative
            and self.mul_associative
            and self.left_distributive
            and self.right_distributive
        )


def check_laws(S) -> LawReport:
    """Full semiring-law report; exhaustive up to EXHAUSTIVE_LAW_LIMIT."""
    m = S.order
    add, mul = np.asarray(S.add_table), np.asarray(S.mul_table)
    failures: list[dict] = []

    add_comm = bool(np.array_equal(add, add.T))
    if not add_comm:
        i, j = [int(v[0]) for v in np.nonzero(add != add.T)]
        failures.append({"law": "add_commutative", "x": i, "y": j})
    add_idem = bool(np.array_equal(np.diag(add), np.arange(m)))

    exhaustive = m <= EXHAUSTIVE_LAW_LIMIT
    if exhaustive:
        triples = None
    else:
        rng = np.random.default_rng(LAW_SAMPLE_SEED)
        triples = rng.integers(0, m, size=(3, LAW_SAMPLE_TRIPLES))

    def check3(name: str, fn) -> bool:
        if exhaustive:
            ys, zs = np.meshgrid(np.arange(m), np.arange(m), indexing="ij")
            for x in range(m):
                bad = fn(x, ys, zs)
                if bad is not None:
                    failures.append({"law": name, **bad})
                    return False
            return True
        xs, ys, zs = triples
        bad = fn(xs, ys, zs)
        if bad is not None:
            failures.append({"law": name, **bad})
            return False
        return True

    def first_bad(lhs, rhs, x, ys, zs):
        diff = np.nonzero(lhs != rhs)
        if len(diff[0]) == 0:
            return None
        i = tuple(int(d[0]) for d in diff)
        if np.ndim(x) == 0:
            return {"x": int(x), "y": int(ys[i]), "z": int(zs[i])}
        return {"x": int(x[i]), "y": int(ys[i]), "z": int(zs[i])}

    add_assoc = check3(
        "add_associative",
        lambda x, ys, zs: first_bad(add[add[x, ys], zs], add[x, add[ys, zs]], x, ys, zs),
    )
    mul_assoc = check3(
        "mul_associative",
        lambda x, ys, zs: first_bad(mul[mul[x, ys], zs], mul[x, mul[ys, zs]], x, ys, zs),
    )
    left_dist = check3(
        "left_distributive",
        lambda x, ys, zs: first_bad(mul[x, add[ys, zs]], add[mul[x, ys], mul[x, zs]], x, ys, zs),
    )
    right_dist = check3(
        "right_distributive",
        lambda x, ys, zs: first_bad(mul[add[ys, zs], x], add[mul[ys, x], mul[zs, x]], x, ys, zs),
    )

    return LawReport(
        order=m,
        exhaustive=exhaustive,
        add_commutative=add_comm,
        add_associative=add_assoc,
        mul_associative=mul_assoc,
        left_distributive=left_dist,
        right_distributive=right_dist,
        add_idempotent=add_idem,
        zero=find_zero(S),
        identity=find_identity(S),
        infinity=find_infinity(S),
        failures=failures,
    )


def is_viterbi(S) -> bool:
    """Additively idempotent and x*x + x = x for every x."""
    m = S.order
    add, mul = S.add_table, S.mul_table
    rng = np.arange(m)
    if not np.array_equal(np.diag(add), rng):
        return False
    squares = mul[rng, rng]
    return bool(np.array_equal(add[squares, rng], rng))


# -- element classification ---------------------------------------------


@dataclass
class ClassificationRecord:
    index: int
    label: str
    is_add_idempotent: bool
    is_mul_idempotent: bool
    is_nilpotent: bool
    nilpotency_index: int | None
    is_left_zero_divisor: bool
    is_right_zero_divisor: bool
    is_regular: bool
    is_invertible: bool
    inverse: int | None
    image: tuple[str, ...] | None  # endomorphism image, when available
    fixes_top: bool | None

    @property
    def is_zero_divisor(self) -> bool:
        return self.is_left_zero_divisor or self.is_right_zero_divisor


def classify(S) -> list[ClassificationRecord]:
    """Per-element flags; divisor/nilpotent flags are vacuously false without a zero."""
    m = S.order
    add, mul = S.add_table, S.mul_table
    z = zero_of(S)
    e = identity_of(S)
    endos = getattr(S, "endos", None)
    diamond = getattr(S, "diamond", None)

    records = []
    for x in range(m):
        nilpotent = False
        nil_index = None
        left_zd = right_zd = False
        if z is not None and x != z:
            p, k = x, 1
            seen = set()
            while p not in seen:
                seen.add(p)
                p = int(mul[p, x])
                k += 1
                if p == z:
                    nilpotent, nil_index = True, k
                    break
            others = np.delete(np.arange(m), z)
            left_zd = bool(np.any(mul[x, others] == z))
            right_zd = bool(np.any(mul[others, x] == z))
        regular = z is not None and x != z and not (left_zd or right_zd)
        inverse = None
        if e is not None:
            hits = np.nonzero((mul[x] == e) & (mul[:, x] == e))[0]
            if len(hits):
                inverse = int(hits[0])
        image = fixes_top = None
        if endos is not None and diamond is not None:
            endo = endos[x]
            image = tuple(sorted(diamond.render_code(c) for c in endo.image_codes()))
            fixes_top = endo.top_image == diamond.top_code
        records.append(
            ClassificationRecord(
                index=x,
                label=S.labels[x],
                is_add_idempotent=bool(add[x, x] == x),
                is_mul_idempotent=bool(mul[x, x] == x),
                is_nilpotent=nilpotent,
                nilpotency_index=nil_index,
                is_left_zero_divisor=left_zd,
                is_right_zero_divisor=right_zd,
                is_regular=regular,
                is_invertible=inverse is not None,
                inverse=inverse,
                image=image,
                fixes_top=fixes_top,
            )
        )
    return records


# -- subsets, subsemirings, ideals --------------------------------------


class NotClosedError(ValueError):
    """Subset is not closed under the requested operations."""


@dataclass(frozen=True)
class SubsetRef:
    """A canonically sorted subset of a semiring's element indices."""

    ambient: object
    indices: tuple[int, ...]

    def __post_init__(self):
        idx = tuple(sorted(set(self.indices)))
        if idx != self.indices:
            object.__setattr__(self, "indices", idx)
        m = self.ambient.order
        for i in idx:
            if not 0 <= i < m:
                raise ValueError(f"index {i} out of range for order {m}")

    def __len__(self) -> int:
        return len(self.indices)

    def labels(self) -> tuple[str, ...]:
        return tuple(self.ambient.labels[i] for i in self.indices)


def is_subsemiring(sub: SubsetRef) -> tuple[bool, dict | None]:
    """Closure under both tables; witness names the escaping pair."""
    S = sub.ambient
    members = set(sub.indices)
    for op_name, table in (("add", S.add_table), ("mul", S.mul_table)):
        for i in sub.indices:
            for j in sub.indices:
                r = int(table[i, j])
                if r not in members:
                    return False, {"op": op_name, "x": i, "y": j, "result": r}
    return True, None


def ideal_kind(sub: SubsetRef) -> tuple[str, dict | None]:
    """Strongest of two_sided / left / right / none, with an escape witness.

    Convention: the subset absorbs right multiplication (sub * S inside sub)
    for a *right* ideal, left multiplication for a *left* ideal.
    """
    S = sub.ambient
    members = set(sub.indices)
    add, mul = S.add_table, S.mul_table
    for i in sub.indices:
        for j in sub.indices:
            r = int(add[i, j])
            if r not in members:
                return "none", {"op": "add", "x": i, "y": j, "result": r}
    right_witness = left_witness = None
    for i in sub.indices:
        for t in range(S.order):
            if right_witness is None:
                r = int(mul[i, t])
                if r not in members:
                    right_witness = {"op": "mul", "x": i, "y": t, "result": r}
            if left_witness is None:
                r = int(mul[t, i])
                if r not in members:
                    left_witness = {"op": "mul", "x": t, "y": i, "result": r}
        if right_witness is not None and left_witness is not None:
            break
    if right_witness is None and left_witness is None:
        return "two_sided", None
    if right_witness is None:
        return "right", left_witness
    if left_witness is None:
        return "left", right_witness
    return "none", right_witness


def generated_ideal(S, seed: set[int] | tuple[int, ...]) -> frozenset[int]:
    """Closure of seed under addition and two-sided multiplication by S."""
    add, mul = S.add_table, S.mul_table
    m = S.order
    members = set(int(s) for s in seed)
    frontier = list(members)
    while frontier:
        nxt = []
        for x in frontier:
            for t in range(m):
                for r in (int(mul[x, t]), int(mul[t, x])):
                    if r not in members:
                        members.add(r)
                        nxt.append(r)
            for y in list(members):
                r = int(add[x, y])
                if r not in members:
                    members.add(r)
                    nxt.append(r)
        frontier = nxt
    return frozenset(members)


def is_maximal_ideal(sub: SubsetRef) -> bool:
    """No proper two-sided ideal strictly between sub and the whole semiring."""
    S = sub.ambient
    kind, witness = ideal_kind(sub)
    if kind != "two_sided":
        raise NotClosedError(f"subset is not a two-sided ideal ({kind}, witness {witness})")
    m = S.order
    if len(sub.indices) == m:
        raise NotClosedError("subset is not proper")
    members = set(sub.indices)
    for x in range(m):
        if x in members:
            continue
        if len(generated_ideal(S, members | {x})) != m:
            return False
    return True


def is_ideal_simple(S) -> bool:
    """Only two-sided ideals are the zero singleton (if any) and S itself.

    For semirings without zero this asks that no proper nonempty two-sided
    ideal exists at all.
    """
    m = S.order
    if m == 1:
        return True
    z = zero_of(S)
    for x in range(m):
        if x == z:
            continue
        seed = {x} if z is None else {x, z}
        if len(generated_ideal(S, seed)) != m:
            return False
    return True


def subsemiring_restrict(sub: SubsetRef) -> FiniteSemiring:
    """Standalone semiring on the subset, with re-indexed dense tables."""
    ok, witness = is_subsemiring(sub)
    if not ok:
        raise NotClosedError(f"subset not closed: {witness}")
    S = sub.ambient
    idx = sub.indices
    pos = {g: i for i, g in enumerate(idx)}
    k = len(idx)
    dtype = S.add_table.dtype
    add = np.empty((k, k), dtype=dtype)
    mul = np.empty((k, k), dtype=dtype)
    for i, gi in enumerate(idx):
        for j, gj in enumerate(idx):
            add[i, j] = pos[int(S.add_table[gi, gj])]
            mul[i, j] = pos[int(S.mul_table[gi, gj])]
    ring = FiniteSemiring(
        labels=tuple(S.labels[g] for g in idx),
        add_table=add,
        mul_table=mul,
        embedding=idx,
        ambient=S,
    )
    ring.zero_index = find_zero(ring)
    ring.one_index = find_identity(ring)
    return ring


def restrict_subset(restricted: FiniteSemiring, ambient_indices) -> SubsetRef:
    """Re-express ambient element indices inside a restriction."""
    pos = {g: i for i, g in enumerate(restricted.embedding)}
    return SubsetRef(restricted, tuple(pos[int(g)] for g in ambient_indices))
