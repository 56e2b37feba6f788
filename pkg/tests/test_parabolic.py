"""Reflection subgroups as closed root subsets: closure, types, intersections."""

from coxabs.element import (
    enumerate_group,
    from_word,
    longest_element,
    reflection,
    simple_reflection,
)
from coxabs.linalg import Subspace
from coxabs.parabolic import (
    Parabolic,
    all_subparabolics,
    closure_of_roots,
    enumerate_involutions,
    indices_from_mask,
    involutions_with_words,
    mask_from_indices,
    parabolic_closure,
    standard_parabolic,
)
from coxabs.rootsystem import RootSystem


def full_parabolic(system):
    return Parabolic(system, (1 << system.n_pos) - 1)


def test_mask_helpers_round_trip():
    assert indices_from_mask(mask_from_indices([0, 3, 5])) == (0, 3, 5)
    assert mask_from_indices(()) == 0


def test_standard_parabolic_types():
    system = RootSystem.named("B3")
    assert standard_parabolic(system, [0, 1]).type_labels == (
        RootSystem.named("A2").label,
    )
    assert standard_parabolic(system, [1, 2]).type_labels == (
        RootSystem.named("B2").label,
    )
    assert str(standard_parabolic(system, [0, 2]).type_labels[0]) == "A1"
    assert len(standard_parabolic(system, [0, 2]).type_labels) == 2


def test_closure_of_roots_is_closed():
    system = RootSystem.named("D4")
    for indices in ([0, 1], [0, 5], [2, 7, 9]):
        p = closure_of_roots(system, indices)
        assert p.is_closed()
        for i in indices:
            assert i in p.root_indices


def test_parabolic_closure_of_w0():
    # closure of a full-support element is everything
    system = RootSystem.named("B3")
    p = parabolic_closure(longest_element(system))
    assert p.size == system.n_pos
    assert p.rank == 3
    assert str(p.type_labels[0]) == "B3"


def test_parabolic_closure_via_subspace_matches_perm_route():
    # the moved space of w cuts out the same root subset the closure holds
    system = RootSystem.named("F4")
    enum = enumerate_group(system)
    for i in range(0, enum.size, 37):
        w = enum.element(i)
        p = parabolic_closure(w)
        moved = w.moved_space()
        expected = [
            t for t in range(system.n_pos)
            if moved.contains(system.roots[t])
        ]
        assert list(p.root_indices) == expected
        assert p.rank == w.reflection_length()


def test_intersection_is_mask_and_and_matches_span_route():
    system = RootSystem.named("B4")
    p = standard_parabolic(system, [0, 1, 2])
    q = standard_parabolic(system, [1, 2, 3])
    inter = p.intersect(q)
    assert inter.mask == p.mask & q.mask
    # cross-check against the subspace intersection
    span_inter = p.span.intersect(q.span)
    roots_in_span = [
        t for t in range(system.n_pos)
        if span_inter.contains(system.roots[t])
    ]
    assert list(inter.root_indices) == roots_in_span
    assert inter.is_closed()


def test_component_split():
    system = RootSystem.named("A3")
    p = standard_parabolic(system, [0, 2])
    comps = p.components
    assert len(comps) == 2
    assert all(c.size == 1 for c in comps)
    joined = comps[0].mask | comps[1].mask
    assert joined == p.mask


def test_group_order_of_parabolic():
    system = RootSystem.named("H4")
    p = standard_parabolic(system, [0, 1, 2])
    assert str(p.type_labels[0]) == "H3"
    assert p.group_order == 120


def test_longest_element_of_parabolic_inverts_its_roots():
    system = RootSystem.named("B4")
    p = standard_parabolic(system, [0, 1])
    w0 = p.longest_element
    assert w0.is_involution
    inverted = [t for t in range(system.n_pos) if w0.perm[t] >= system.n_pos]
    assert inverted == list(p.root_indices)


def test_involutive_parabolic_has_central_minus_id():
    system = RootSystem.named("D4")
    # simples 0 and 1 are the orthogonal outer nodes, so this is A1 x A1
    p = closure_of_roots(system, [system.simple_idx[0], system.simple_idx[1]])
    assert p.is_involutive
    central = p.central_involution
    assert central is not None
    assert central.is_involution
    assert parabolic_closure(central) == p
    # an A2 closure has no length-2 central involution
    q = standard_parabolic(system, [2, 3])
    assert str(q.type_labels[0]) == "A2"
    assert not q.is_involutive


def test_involution_closures_are_involutive():
    # the defining examples: closures of involutions
    system = RootSystem.named("B3")
    enum = enumerate_group(system)
    for i in enum.involution_ids():
        w = enum.element(int(i))
        p = parabolic_closure(w)
        assert p.is_involutive
        if not w.is_identity:
            assert p.central_involution == w


def test_involution_counts_by_enumeration():
    for name, count in (("A2", 4), ("B2", 6), ("A3", 10), ("B3", 20), ("D4", 44)):
        system = RootSystem.named(name)
        enum = enumerate_group(system)
        assert len(enum.involution_ids()) == count
        full = full_parabolic(system)
        assert len(involutions_with_words(full)) == count
        assert len(enumerate_involutions(full)) == count


def test_involution_words_are_orthogonal_reflections():
    system = RootSystem.named("B3")
    full = full_parabolic(system)
    for w, word in involutions_with_words(full):
        assert w.is_involution
        assert len(word) == w.reflection_length()
        rebuilt = None
        for t in word:
            r = reflection(system, t)
            rebuilt = r if rebuilt is None else rebuilt * r
        if rebuilt is not None:
            assert rebuilt == w
        # the word letters commute pairwise
        for a in word:
            for b in word:
                ra, rb = reflection(system, a), reflection(system, b)
                assert ra * rb == rb * ra


def test_central_involution_of_d4_has_full_length():
    system = RootSystem.named("D4")
    w0 = longest_element(system)
    assert w0.reflection_length() == 4
    assert parabolic_closure(w0).size == system.n_pos


def test_commuting_reflections_are_orthogonal():
    system = RootSystem.named("B3")
    from coxabs.field import ZERO

    for a in range(system.n_pos):
        for b in range(a + 1, system.n_pos):
            ra, rb = reflection(system, a), reflection(system, b)
            commute = ra * rb == rb * ra
            orthogonal = system.bilinear(a, b) == ZERO
            assert commute == orthogonal


def test_all_subparabolics_count_b2():
    system = RootSystem.named("B2")
    full = full_parabolic(system)
    subs = all_subparabolics(full)
    # trivial, four A1 lines, the full B2
    assert len(subs) == 6
    sizes = sorted(p.size for p in subs)
    assert sizes == [0, 1, 1, 1, 1, 4]


def test_all_subparabolics_are_closed_and_distinct():
    system = RootSystem.named("A3")
    subs = all_subparabolics(full_parabolic(system))
    assert len({p.mask for p in subs}) == len(subs)
    assert all(p.is_closed() for p in subs)
    # contains every reflection line and the full set
    assert sum(1 for p in subs if p.size == 1) == system.n_pos
    assert any(p.size == system.n_pos for p in subs)


def test_conjugate_parabolic():
    system = RootSystem.named("A3")
    p = standard_parabolic(system, [0])
    w = from_word(system, [1, 0])
    q = p.conjugate_by(w)
    assert q.size == 1
    expected = w * simple_reflection(system, 0) * w.inverse()
    assert q.contains_element(expected)


def test_span_dimension_matches_rank():
    system = RootSystem.named("H3")
    p = closure_of_roots(system, [0, 1])
    assert p.rank == p.span.dim == 2
    assert isinstance(p.span, Subspace)
