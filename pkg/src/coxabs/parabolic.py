"""Parabolic subgroups as closed root subsets, with type recognition.

A parabolic subgroup here is the pointwise stabilizer of a subspace, and
is determined by the set of positive roots lying in the orthogonal
complement of that subspace.  Such root sets are *closed*: they equal the
intersection of the full root system with their own span.  A Parabolic
stores the set as one Python int bitmask over positive root indices,
which makes intersection of parabolics a bitwise AND (the intersection of
closed sets is closed and spans are compatible, see intersect below).

Heavyweight derived data (simple systems, component types, longest
elements) is cached per system and mask so sweeps over many involutions
stay cheap.
"""

from __future__ import annotations

import math
from itertools import combinations

import numpy as np

from . import linalg
from .element import Element
from .field import ZERO
from .linalg import Subspace
from .rootsystem import (
    RecognitionError,
    RootSystem,
    TypeLabel,
    make_label,
)


def indices_from_mask(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def mask_from_indices(indices) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << int(i)
    return mask


def conjugate_mask(system: RootSystem, mask: int, perm: np.ndarray) -> int:
    """Image of a positive-root set under a group element, as positives."""
    n_pos = system.n_pos
    out = 0
    for i in indices_from_mask(mask):
        img = int(perm[i])
        if img >= n_pos:
            img -= n_pos
        out |= 1 << img
    return out


class Parabolic:
    """A parabolic subgroup, identified by its closed positive-root set.

    Construct through closure_of_roots, parabolic_closure, standard, or
    intersect; the mask handed to the constructor must already be closed.
    """

    __slots__ = ("system", "mask")

    def __init__(self, system: RootSystem, mask: int):
        self.system = system
        self.mask = mask

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Parabolic)
            and self.system is other.system
            and self.mask == other.mask
        )

    def __hash__(self):
        return hash((id(self.system), self.mask))

    def __repr__(self) -> str:
        from .rootsystem import format_type_multiset

        return f"Parabolic({format_type_multiset(self.type_labels)}, {self.rank} roots span)"

    # -- cached per-mask data ---------------------------------------------

    def _info(self) -> dict:
        info = self.system._subsystem_cache.get(self.mask)
        if info is None:
            info = {}
            self.system._subsystem_cache[self.mask] = info
        return info

    @property
    def root_indices(self) -> tuple[int, ...]:
        info = self._info()
        if "indices" not in info:
            info["indices"] = indices_from_mask(self.mask)
        return info["indices"]

    @property
    def size(self) -> int:
        """Number of positive roots in the subsystem."""
        return self.mask.bit_count()

    @property
    def span(self) -> Subspace:
        info = self._info()
        if "span" not in info:
            rows = [self.system.roots[i] for i in self.root_indices]
            info["span"] = Subspace.from_vectors(rows, self.system.rank)
        return info["span"]

    @property
    def rank(self) -> int:
        return self.span.dim

    def is_closed(self) -> bool:
        """Check the defining invariant: the mask equals roots-in-span."""
        return self.mask == _roots_in_span(self.system, self.span)

    # -- simple system and type --------------------------------------------

    @property
    def simple_system(self) -> tuple[int, ...]:
        """Positive roots of the subsystem that are simple inside it.

        A subsystem positive root b is simple exactly when its reflection
        permutes the remaining subsystem positives; checking image
        positivity against the reflection table implements that directly.
        """
        info = self._info()
        if "simples" not in info:
            sys = self.system
            n_pos = sys.n_pos
            idx = np.array(self.root_indices, dtype=np.int64)
            simples = []
            for b in self.root_indices:
                row = sys.reflection_table[b][idx]
                if bool(((row < n_pos) | (idx == b)).all()):
                    simples.append(b)
            info["simples"] = tuple(simples)
        return info["simples"]

    @property
    def components(self) -> tuple["Parabolic", ...]:
        """Irreducible components, each again a Parabolic."""
        info = self._info()
        if "components" not in info:
            sys = self.system
            simples = self.simple_system
            remaining = set(simples)
            comps = []
            while remaining:
                seed = min(remaining)
                comp = {seed}
                frontier = [seed]
                while frontier:
                    a = frontier.pop()
                    for b in list(remaining - comp):
                        if not sys.bilinear(a, b).is_zero:
                            comp.add(b)
                            frontier.append(b)
                remaining -= comp
                comps.append(closure_of_roots(sys, sorted(comp)))
            comps.sort(key=lambda p: p.root_indices)
            info["components"] = tuple(comps)
        return info["components"]

    @property
    def type_labels(self) -> tuple[TypeLabel, ...]:
        """Sorted multiset of irreducible types of the components."""
        info = self._info()
        if "types" not in info:
            labels = [
                _recognize_component(self.system, comp.simple_system)
                for comp in self.components
            ]
            info["types"] = tuple(sorted(labels))
        return info["types"]

    @property
    def group_order(self) -> int:
        return math.prod(_order_of_label(l) for l in self.type_labels)

    # -- longest element and the -Id test -----------------------------------

    @property
    def longest_element(self) -> Element:
        """Longest element of the subsystem, by greedy descent removal."""
        info = self._info()
        if "w0" not in info:
            sys = self.system
            n_pos = sys.n_pos
            simples = self.simple_system
            perm = np.arange(sys.n_roots, dtype=np.int32)
            while True:
                up = next((b for b in simples if perm[b] < n_pos), None)
                if up is None:
                    break
                perm = perm[sys.reflection_table[up]]
            info["w0"] = perm
        return Element(self.system, info["w0"])

    @property
    def is_involutive(self) -> bool:
        """Whether the longest element acts as -Id on the subsystem span."""
        info = self._info()
        if "involutive" not in info:
            n_pos = self.system.n_pos
            w0 = self.longest_element.perm
            info["involutive"] = all(
                int(w0[b]) == b + n_pos for b in self.simple_system
            )
        return info["involutive"]

    @property
    def central_involution(self) -> Element | None:
        """The longest element when it acts as -Id on the span, else None."""
        if not self.is_involutive:
            return None
        return self.longest_element

    # -- subgroup operations --------------------------------------------------

    def intersect(self, other: "Parabolic") -> "Parabolic":
        """Intersection of parabolics, computed on root sets.

        For closed sets P = Phi&U and Q = Phi&U', every root of
        span(P&Q) lies in U and U' and hence already in P&Q, so the
        bitwise AND is again closed and spans the intersection subspace.
        The subspace route (Zassenhaus on the spans) gives the same
        subgroup and is kept as a cross-check in the test suite.
        """
        if self.system is not other.system:
            raise ValueError("parabolics live in different systems")
        return Parabolic(self.system, self.mask & other.mask)

    def conjugate_by(self, w: Element) -> "Parabolic":
        """The parabolic w P w^-1 (image of a closed set is closed)."""
        return Parabolic(self.system, conjugate_mask(self.system, self.mask, w.perm))

    def contains_parabolic(self, other: "Parabolic") -> bool:
        return other.mask & ~self.mask == 0

    def contains_element(self, w: Element) -> bool:
        """Membership via moved space: w lies in the stabilizer iff it
        moves nothing outside the span."""
        return self.span.contains_subspace(w.moved_space())

    def reflections(self) -> list[Element]:
        sys = self.system
        return [Element(sys, sys.reflection_table[t]) for t in self.root_indices]


# ----------------------------------------------------------------------
# constructors


def _roots_in_span(system: RootSystem, span: Subspace) -> int:
    mask = 0
    for i in range(system.n_pos):
        if span.contains(system.roots[i]):
            mask |= 1 << i
    return mask


def closure_of_roots(system: RootSystem, indices) -> Parabolic:
    """Smallest parabolic containing the given reflections.

    Takes all positive roots inside the linear span of the inputs.
    """
    rows = [
        system.roots[i if i < system.n_pos else i - system.n_pos] for i in indices
    ]
    if not rows:
        return Parabolic(system, 0)
    span = Subspace.from_vectors(rows, system.rank)
    return Parabolic(system, _roots_in_span(system, span))


def standard_parabolic(system: RootSystem, generators) -> Parabolic:
    """Closure of a subset of the simple generators (0-based indices)."""
    return closure_of_roots(system, [system.simple_idx[s] for s in generators])


def parabolic_closure(w: Element) -> Parabolic:
    """The smallest parabolic subgroup containing w.

    This is the pointwise stabilizer of the fixed space of w, so its
    roots are the positive roots orthogonal to every fixed vector.  For
    an involution the whole space splits as fixed plus moved and w is
    -Id on the moved part, so a root is orthogonal to the fixed space
    exactly when w sends it to its own negative; that reads the mask
    straight off the permutation.
    """
    sys = w.system
    n_pos = sys.n_pos
    if w.is_involution:
        flipped = np.nonzero(w.perm[:n_pos] == np.arange(n_pos) + n_pos)[0]
        return Parabolic(sys, mask_from_indices(flipped))
    fixed = w.fixed_space()
    gram_rows = [linalg.mat_mul_vec(sys.gram, v) for v in fixed.basis]
    mask = 0
    for i in range(n_pos):
        root = sys.roots[i]
        orthogonal = True
        for gv in gram_rows:
            value = ZERO
            for k in range(sys.rank):
                if root[k]:
                    value = value + root[k] * gv[k]
            if value:
                orthogonal = False
                break
        if orthogonal:
            mask |= 1 << i
    return Parabolic(sys, mask)


# ----------------------------------------------------------------------
# involutions of a subsystem


def involutions_with_words(p: Parabolic) -> list[tuple[Element, tuple[int, ...]]]:
    """All involutions of the subsystem, each with one minimal reflection word.

    Involutions are exactly the products of pairwise orthogonal
    reflections; the search enumerates orthogonal subsets of the
    subsystem's positive roots in lexicographic order and keeps the first
    word found for each element.  The identity appears with the empty
    word.  Results are sorted by reflection length, then by permutation.
    """
    sys = p.system
    idx = p.root_indices
    orth = sys.orthogonality
    found: dict[bytes, tuple[np.ndarray, tuple[int, ...]]] = {}

    def visit(perm: np.ndarray, clique: tuple[int, ...], allowed: tuple[int, ...]):
        key = perm.tobytes()
        if key not in found:
            found[key] = (perm, clique)
        for k, t in enumerate(allowed):
            nxt = tuple(u for u in allowed[k + 1 :] if orth[t, u])
            visit(perm[sys.reflection_table[t]], clique + (t,), nxt)

    visit(np.arange(sys.n_roots, dtype=np.int32), (), idx)
    items = sorted(found.values(), key=lambda fw: (len(fw[1]), fw[0].tobytes()))
    return [(Element(sys, perm), word) for perm, word in items]


def enumerate_involutions(p: Parabolic) -> list[Element]:
    """All w in the subsystem with w * w = 1, identity included."""
    return [elt for elt, _ in involutions_with_words(p)]


def all_subparabolics(p: Parabolic) -> list[Parabolic]:
    """Every parabolic subgroup of the subsystem, as masks.

    Each is conjugate inside the subsystem to a standard one (closure of
    part of the simple system), so a breadth-first orbit walk under
    conjugation by the subsystem's simple reflections finds them all.
    """
    sys = p.system
    info = p._info()
    if "all_sub" in info:
        return [Parabolic(sys, m) for m in info["all_sub"]]
    simples = p.simple_system
    seeds = set()
    for r in range(len(simples) + 1):
        for subset in combinations(simples, r):
            seeds.add(closure_of_roots(sys, subset).mask)
    seen = set(seeds)
    queue = list(seeds)
    simple_perms = [sys.reflection_table[b] for b in simples]
    while queue:
        mask = queue.pop()
        for sp in simple_perms:
            img = conjugate_mask(sys, mask, sp)
            if img not in seen:
                seen.add(img)
                queue.append(img)
    ordered = sorted(seen)
    info["all_sub"] = ordered
    return [Parabolic(sys, m) for m in ordered]


# ----------------------------------------------------------------------
# type recognition


def _order_of_label(label: TypeLabel) -> int:
    fam, n = label.family, label.rank
    if fam == "A":
        return math.factorial(n + 1)
    if fam == "B":
        return (1 << n) * math.factorial(n)
    if fam == "D":
        return (1 << (n - 1)) * math.factorial(n)
    if fam == "E":
        return {6: 51840, 7: 2903040, 8: 696729600}[n]
    if fam == "F":
        return 1152
    if fam == "H":
        return {3: 120, 4: 14400}[n]
    if fam == "I":
        return 2 * label.bond
    raise ValueError(f"unknown family {fam}")  # pragma: no cover


def _recognize_component(system: RootSystem, simples: tuple[int, ...]) -> TypeLabel:
    """Name the irreducible type of a connected simple system."""
    r = len(simples)
    if r == 1:
        return make_label("A", 1)
    adj: dict[int, list[int]] = {s: [] for s in simples}
    bonds: dict[tuple[int, int], int] = {}
    for a, b in combinations(simples, 2):
        m = system.bond_between(a, b)
        if m > 2:
            bonds[(a, b)] = m
            adj[a].append(b)
            adj[b].append(a)
    if r == 2:
        if len(bonds) != 1:
            raise RecognitionError("rank-2 component is not connected")
        return make_label("I", 2, next(iter(bonds.values())))
    if len(bonds) != r - 1:
        raise RecognitionError("component diagram is not a tree")
    degrees = {s: len(adj[s]) for s in simples}
    maxdeg = max(degrees.values())
    high = sorted(m for m in bonds.values() if m > 3)
    if maxdeg == 3 and not high:
        nodes = [s for s in simples if degrees[s] == 3]
        if len(nodes) != 1:
            raise RecognitionError("more than one branch node")
        node = nodes[0]
        lengths = sorted(_branch_length(adj, node, nb) for nb in adj[node])
        if lengths[0] == 1 and lengths[1] == 1:
            return make_label("D", r)
        if lengths[:2] == [1, 2] and lengths[2] in (2, 3, 4) and r == lengths[2] + 4:
            return make_label("E", r)
        raise RecognitionError(f"unrecognized branched diagram of rank {r}")
    if maxdeg > 2:
        raise RecognitionError("diagram branches do not match a finite type")
    # now a path
    if not high:
        return make_label("A", r)
    if len(high) > 1:
        raise RecognitionError("path with two high bonds")
    m = high[0]
    edge = next(e for e, v in bonds.items() if v == m)
    touches_leaf = degrees[edge[0]] == 1 or degrees[edge[1]] == 1
    if m == 4:
        if touches_leaf:
            return make_label("B", r)
        if r == 4:
            return make_label("F", 4)
        raise RecognitionError("interior 4-bond outside rank 4")
    if m == 5:
        if touches_leaf and r in (3, 4):
            return make_label("H", r)
        raise RecognitionError("5-bond path beyond H3 and H4")
    raise RecognitionError(f"path with a {m}-bond is infinite beyond rank 2")


def _branch_length(adj, node, start) -> int:
    length = 1
    prev, cur = node, start
    while True:
        nxt = [x for x in adj[cur] if x != prev]
        if not nxt:
            return length
        if len(nxt) > 1:
            raise RecognitionError("branch inside a branch")
        prev, cur = cur, nxt[0]
        length += 1
