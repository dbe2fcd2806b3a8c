"""Published operation tables used for cell-by-cell comparison.

The n=4 tables reproduce the printed 16x16 worked example (claim id
"Example 3.2") verbatim, including any typesetting slips; comparisons
against the computed tables therefore report mismatched cells instead of
assuming the printed data is error-free.  Element names use the compact
three-letter form of that example: atoms "a" = a_1, "b" = a_2.

The 3x3 tables belong to the order-3 stable-idempotent subsemiring
(claim id "Example 6.4"), written over the generic labels F (atom
annihilator), G (atom fixer) and T (constant top).
"""

N4_ELEMENTS = (
    "000", "0aa", "a0a", "aaa", "0bb", "b0b", "bbb", "ab1",
    "ba1", "011", "101", "a11", "1a1", "b11", "1b1", "111",
)

N4_ADD_PRINTED = (
    ("000", "0aa", "a0a", "aaa", "0bb", "b0b", "bbb", "ab1", "ba1", "011", "101", "a11", "1a1", "b11", "1b1", "111"),
    ("0aa", "0aa", "aaa", "aaa", "011", "ba1", "b11", "a11", "ba1", "011", "1a1", "a11", "1a1", "b11", "111", "111"),
    ("a0a", "aaa", "a0a", "aaa", "ab1", "101", "1b1", "ab1", "1a1", "a11", "101", "a11", "1a1", "111", "1b1", "111"),
    ("aaa", "aaa", "aaa", "aaa", "a11", "1a1", "111", "a11", "1a1", "a11", "1a1", "a11", "1a1", "111", "111", "111"),
    ("0bb", "011", "ab1", "a11", "0bb", "bbb", "bbb", "ab1", "b11", "011", "1b1", "a11", "111", "b11", "1b1", "111"),
    ("b0b", "ba1", "101", "1a1", "bbb", "b0b", "bbb", "1b1", "ba1", "b11", "101", "111", "1a1", "b11", "1b1", "111"),
    ("bbb", "b11", "1b1", "111", "bbb", "bbb", "bbb", "1b1", "b11", "b11", "1b1", "111", "111", "b11", "1b1", "111"),
    ("ab1", "a11", "ab1", "a11", "ab1", "1b1", "1b1", "ab1", "111", "a11", "1b1", "a11", "111", "111", "1b1", "111"),
    ("ba1", "ba1", "1a1", "1a1", "b11", "ba1", "b11", "111", "ba1", "b11", "1a1", "111", "1a1", "b11", "111", "111"),
    ("011", "011", "a11", "a11", "011", "b11", "b11", "a11", "b11", "011", "111", "a11", "111", "b11", "111", "111"),
    ("101", "1a1", "101", "1a1", "1b1", "101", "1b1", "1b1", "1a1", "111", "101", "111", "1a1", "111", "1b1", "111"),
    ("a11", "a11", "a11", "a11", "a11", "111", "111", "a11", "111", "a11", "111", "a11", "111", "111", "111", "111"),
    ("1a1", "1a1", "1a1", "1a1", "111", "1a1", "111", "111", "1a1", "111", "1a1", "111", "1a1", "111", "111", "111"),
    ("b11", "b11", "111", "111", "b11", "b11", "b11", "111", "b11", "b11", "111", "111", "111", "b11", "111", "111"),
    ("1b1", "111", "1b1", "111", "1b1", "1b1", "1b1", "1b1", "111", "111", "1b1", "111", "111", "111", "1b1", "111"),
    ("111", "111", "111", "111", "111", "111", "111", "111", "111", "111", "111", "111", "111", "111", "111", "111"),
)

N4_MUL_PRINTED = (
    ("000", "000", "000", "000", "000", "000", "000", "000", "000", "000", "000", "000", "000", "000", "000", "000"),
    ("000", "000", "0aa", "0aa", "000", "0bb", "0bb", "0aa", "0aa", "000", "011", "0aa", "011", "0bb", "011", "011"),
    ("000", "000", "a0a", "a0a", "000", "b0b", "b0b", "a0a", "b0b", "000", "101", "a0a", "101", "b0b", "101", "101"),
    ("000", "000", "aaa", "aaa", "000", "bbb", "bbb", "aaa", "bbb", "000", "111", "aaa", "111", "bbb", "111", "111"),
    ("000", "0aa", "000", "0aa", "0bb", "000", "0bb", "0bb", "0aa", "011", "000", "011", "0aa", "011", "0bb", "011"),
    ("000", "a0a", "000", "a0a", "b0b", "000", "b0b", "b0b", "a0a", "101", "000", "101", "a0a", "101", "b0b", "101"),
    ("000", "aaa", "000", "aaa", "bbb", "000", "bbb", "bbb", "aaa", "111", "000", "111", "aaa", "111", "bbb", "111"),
    ("000", "0aa", "a0a", "aaa", "0bb", "b0b", "bbb", "ab1", "ba1", "011", "101", "a11", "1a1", "b11", "1b1", "111"),
    ("000", "a0a", "0aa", "aaa", "b0b", "0bb", "bbb", "ba1", "ab1", "101", "011", "1a1", "a11", "1b1", "b11", "111"),
    ("000", "0aa", "0aa", "0aa", "0bb", "0bb", "011", "011", "011", "011", "011", "011", "011", "011", "011", "011"),
    ("000", "a0a", "a0a", "a0a", "b0b", "b0b", "b0b", "101", "101", "101", "101", "101", "101", "101", "101", "101"),
    ("000", "0aa", "aaa", "aaa", "0bb", "bbb", "bbb", "a11", "b11", "011", "111", "a11", "111", "b11", "111", "111"),
    ("000", "a0a", "aaa", "aaa", "b0b", "bbb", "bbb", "1a1", "1b1", "101", "111", "1a1", "111", "1b1", "111", "111"),
    ("000", "aaa", "0aa", "aaa", "bbb", "0bb", "bbb", "b11", "a11", "111", "011", "111", "a11", "111", "b11", "111"),
    ("000", "aaa", "a0a", "aaa", "bbb", "b0b", "bbb", "1b1", "1a1", "111", "101", "111", "1a1", "111", "1b1", "111"),
    ("000", "aaa", "aaa", "aaa", "bbb", "bbb", "bbb", "111", "111", "111", "111", "111", "111", "111", "111", "111"),
)

# order-3 stable-idempotent subsemiring: F annihilates the atom, G fixes it,
# T is the constant-top map
SI3_ELEMENTS = ("F", "G", "T")

SI3_ADD = (
    ("F", "G", "T"),
    ("G", "G", "T"),
    ("T", "T", "T"),
)

SI3_MUL = (
    ("F", "F", "F"),
    ("F", "G", "T"),
    ("T", "T", "T"),
)


def compact_n4_label(images: tuple[int, ...]) -> str:
    """Render an n=4 image tuple in the three-letter printed form."""
    names = {0: "0", 1: "a", 2: "b", 3: "1"}
    return "".join(names[c] for c in images)


def compare_tables(computed_labels, computed_table, printed_table):
    """List of mismatching cells [(row_label, col_label, computed, printed)]."""
    mismatches = []
    for i, row in enumerate(printed_table):
        for j, printed in enumerate(row):
            got = computed_labels[int(computed_table[i, j])]
            if got != printed:
                mismatches.append(
                    (computed_labels[i], computed_labels[j], got, printed)
                )
    return mismatches
