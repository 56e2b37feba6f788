"""Root system construction: labels, matrices, root counts, angles."""

import pytest

from coxabs.field import ONE, ZERO, cos_pi_over
from coxabs.rootsystem import (
    CoxeterMatrix,
    InfiniteTypeError,
    RootSystem,
    UnsupportedBondError,
    format_type_multiset,
    make_label,
    named_coxeter_matrix,
    parse_label,
)

# (name, rank, positive root count, group order)
KNOWN_SYSTEMS = [
    ("A1", 1, 1, 2),
    ("A2", 2, 3, 6),
    ("A3", 3, 6, 24),
    ("B2", 2, 4, 8),
    ("B3", 3, 9, 48),
    ("B4", 4, 16, 384),
    ("D4", 4, 12, 192),
    ("F4", 4, 24, 1152),
    ("H3", 3, 15, 120),
    ("H4", 4, 60, 14400),
    ("E6", 6, 36, 51840),
    ("I2(5)", 2, 5, 10),
    ("I2(6)", 2, 6, 12),
]


@pytest.mark.parametrize("name,rank,n_pos,order", KNOWN_SYSTEMS)
def test_positive_root_counts(name, rank, n_pos, order):
    system = RootSystem.named(name)
    assert system.rank == rank
    assert system.n_pos == n_pos
    assert system.n_roots == 2 * n_pos
    assert 2 * n_pos * rank >= rank  # sanity on storage shape
    del order  # group order is checked in the element tests


def test_parse_label_normalizes_small_dihedrals():
    assert parse_label("I2(3)") == parse_label("A2")
    assert parse_label("I2(4)") == parse_label("B2")
    assert str(parse_label("I2(4)")) == "B2"
    assert parse_label("I2(5)").family == "I"
    assert parse_label("B2") == make_label("B", 2)


def test_parse_label_rejects_garbage():
    for bad in ("Q3", "A0", "E9", "I2(1)", "", "B"):
        with pytest.raises(Exception):
            parse_label(bad)


def test_format_type_multiset():
    labels = (parse_label("A1"), parse_label("A1"), parse_label("B2"))
    assert format_type_multiset(labels) == "A1 x A1 x B2"
    assert format_type_multiset(()) == "trivial"


def test_matrix_from_text_round_trip():
    matrix = CoxeterMatrix.from_text("3  1 3 2  3 1 3  2 3 1")
    assert matrix == named_coxeter_matrix(parse_label("A3"))


def test_matrix_validation():
    with pytest.raises(ValueError):
        CoxeterMatrix.from_rows([[1, 3], [2, 1]])  # not symmetric
    with pytest.raises(ValueError):
        CoxeterMatrix.from_rows([[2, 3], [3, 1]])  # diagonal must be 1
    with pytest.raises(ValueError):
        CoxeterMatrix.from_rows([[1, 1], [1, 1]])  # off-diagonal >= 2


def test_affine_matrix_is_rejected():
    # the triangle with all bonds 3 has a semidefinite form
    rows = [[1, 3, 3], [3, 1, 3], [3, 3, 1]]
    with pytest.raises(InfiniteTypeError):
        RootSystem.build(CoxeterMatrix.from_rows(rows))


def test_bond_seven_is_rejected_geometrically():
    rows = [[1, 7], [7, 1]]
    with pytest.raises(UnsupportedBondError):
        RootSystem.build(CoxeterMatrix.from_rows(rows))


def test_simple_roots_are_unit_and_at_the_right_angle():
    system = RootSystem.named("B2")
    s0, s1 = system.simple_idx
    assert system.bilinear(s0, s0) == ONE
    assert system.bilinear(s1, s1) == ONE
    assert system.bilinear(s0, s1) == -cos_pi_over(4)


def test_all_roots_are_unit_vectors():
    system = RootSystem.named("H3")
    for i in range(system.n_roots):
        assert system.bilinear(i, i) == ONE


def test_negation_pairs_roots():
    system = RootSystem.named("A3")
    for i in range(system.n_pos):
        j = system.negate(i)
        assert j >= system.n_pos
        assert system.negate(j) == i
        for k, x in enumerate(system.roots[i]):
            assert system.roots[j][k] == ZERO - x


def test_reflection_table_is_an_involution_on_roots():
    system = RootSystem.named("D4")
    for t in range(system.n_pos):
        perm = system.reflection_table[t]
        for i in range(system.n_roots):
            assert perm[perm[i]] == i
        assert perm[t] == system.negate(t)
        # a reflection makes an odd number of positives negative,
        # exactly one when its root is simple
        moved_out = sum(
            1 for i in range(system.n_pos) if perm[i] >= system.n_pos
        )
        assert moved_out % 2 == 1
        if t in system.simple_idx:
            assert moved_out == 1


def test_positive_roots_sorted_by_height():
    system = RootSystem.named("B3")
    heights = [
        float(sum(system.roots[i], start=ZERO)) for i in range(system.n_pos)
    ]
    assert heights == sorted(heights)
    # simple roots are coordinate units, hence the lowest layer
    for s in system.simple_idx:
        assert heights[s] == pytest.approx(1.0)


def test_named_systems_are_cached():
    assert RootSystem.named("B3") is RootSystem.named("B3")


def test_describe_mentions_the_label():
    assert RootSystem.named("F4").describe() == "F4"
