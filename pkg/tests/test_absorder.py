"""Absolute order intervals below involutions, and the lattice tests."""

import json

import pytest

from coxabs.absorder import (
    closure_map_report,
    interval_of_involution,
    is_lattice_bruteforce,
    is_lattice_structural,
    leq_T,
    meet,
    poset_to_dot,
    poset_to_json,
    poset_to_json_dict,
)
from coxabs.element import (
    enumerate_group,
    from_word,
    identity,
    longest_element,
    reflection,
    simple_reflection,
)
from coxabs.rootsystem import RootSystem


def test_leq_T_additivity_definition():
    system = RootSystem.named("B2")
    e = identity(system)
    s = simple_reflection(system, 0)
    w0 = longest_element(system)
    assert leq_T(e, s)
    assert leq_T(s, w0)
    assert leq_T(e, w0)
    assert not leq_T(w0, s)
    assert leq_T(s, s)


def test_interval_rejects_non_involutions():
    system = RootSystem.named("A2")
    with pytest.raises(ValueError):
        interval_of_involution(from_word(system, [0, 1]))


def test_b2_interval_shape():
    system = RootSystem.named("B2")
    poset = interval_of_involution(longest_element(system))
    assert poset.size == 6
    assert sorted(int(r) for r in poset.ranks) == [0, 1, 1, 1, 1, 2]
    # bottom and top are unique
    assert sum(1 for r in poset.ranks if r == 0) == 1
    assert sum(1 for r in poset.ranks if r == 2) == 1
    # the hasse diagram is the 4-crown plus nothing else
    assert len(poset.hasse) == 8


def test_interval_membership_is_exactly_additivity():
    system = RootSystem.named("A3")
    w0 = longest_element(system)
    poset = interval_of_involution(w0)
    enum = enumerate_group(system)
    member_keys = {e.perm.tobytes() for e in poset.elements}
    for i in range(enum.size):
        w = enum.element(i)
        assert (w.perm.tobytes() in member_keys) == leq_T(w, w0)


def test_interval_of_identity_and_reflection():
    system = RootSystem.named("A3")
    assert interval_of_involution(identity(system)).size == 1
    poset = interval_of_involution(reflection(system, 0))
    assert poset.size == 2
    assert poset.hasse == [(0, 1)]


def test_meet_in_a_lattice_interval():
    system = RootSystem.named("B3")
    poset = interval_of_involution(longest_element(system))
    v = poset.elements[poset.size - 1]
    e = identity(system)
    assert meet(poset, v, v) == v
    for i in range(poset.size):
        got = meet(poset, poset.elements[i], e)
        assert got == e


def test_lattice_verdicts_on_small_positives():
    for name in ("A1", "B2", "B3", "D4", "H3"):
        system = RootSystem.named(name)
        poset = interval_of_involution(longest_element(system))
        ok_brute, witness_brute = is_lattice_bruteforce(poset)
        ok_struct, witness_struct = is_lattice_structural(longest_element(system))
        assert ok_brute and witness_brute is None
        assert ok_struct and witness_struct is None


def test_lattice_failure_witnesses_on_d6():
    system = RootSystem.named("D6")
    w0 = longest_element(system)
    ok_struct, witness = is_lattice_structural(w0)
    assert not ok_struct
    assert "A3" in witness.describe()
    ok_brute, failure = is_lattice_bruteforce(interval_of_involution(w0))
    assert not ok_brute
    # the failing pair admits several maximal lower bounds, or none unique
    assert len(failure.maximal_lower_bound_ids) != 1


def test_closure_map_report_on_b3():
    report = closure_map_report(longest_element(RootSystem.named("B3")))
    assert report["injective"]
    assert report["surjective"]
    assert report["order_isomorphism"]
    assert report["interval_size"] == report["involutive_parabolic_count"]


def test_json_export_shape():
    system = RootSystem.named("B2")
    poset = interval_of_involution(longest_element(system))
    ok, witness = is_lattice_bruteforce(poset)
    payload = json.loads(poset_to_json(poset, ok, witness))
    assert payload["is_lattice"] is True
    assert len(payload["elements"]) == 6
    assert all({"id", "rank", "t_word"} <= set(e) for e in payload["elements"])
    assert len(payload["hasse"]) == 8
    same = poset_to_json_dict(poset, ok, witness)
    assert payload == json.loads(json.dumps(same))


def test_dot_export_mentions_every_node():
    system = RootSystem.named("A2")
    poset = interval_of_involution(longest_element(system))
    dot = poset_to_dot(poset)
    assert dot.startswith("digraph")
    for i in range(poset.size):
        assert f"n{i} " in dot
    assert dot.count("->") == len(poset.hasse)


def test_interval_ranks_agree_with_reflection_length():
    system = RootSystem.named("H3")
    poset = interval_of_involution(longest_element(system))
    for i, e in enumerate(poset.elements):
        assert int(poset.ranks[i]) == e.reflection_length()
    assert poset.size == 32
