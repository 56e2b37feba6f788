"""End-to-end checks tying the independent code paths together.

Each check_* function exercises one verifiable claim about intervals in
the absolute order below involutions: the order-matrix and closure-based
lattice deciders agree with the type-based verdict, the non-lattice
types carry explicit root-level witnesses, the deletion oracle matches
the fixed-space rank, the structure laws behind the closure map hold on
every element of every small group, and the Cayley-graph oracle
reproduces each interval poset edge for edge.  Everything returns
CheckResult records so the command line tool and the test suite share
one implementation.

The two heavyweight sweeps (E6 exhaustion, full H4) sit behind the deep
flag; with deep=False the remaining checks finish in well under a
minute.
"""

from __future__ import annotations

import dataclasses
import random
import time
import traceback

import numpy as np

from .absorder import (
    closure_map_report,
    interval_of_involution,
    is_lattice_bruteforce,
    is_lattice_structural,
)
from .classify import (
    counterexample_witness,
    decompose_involution,
    dihedral_fast_path,
    lattice_by_classification,
)
from .element import (
    Element,
    check_T_reduced,
    enumerate_group,
    longest_element,
)
from .field import ONE, SQRT2, SQRT3, SQRT5, FieldScalar
from .linalg import rank
from .oracles import (
    cayley_interval_elements,
    dyer_reflection_length,
    hurwitz_orbits,
    t_reduced_expressions,
)
from .parabolic import Parabolic, involutions_with_words, parabolic_closure
from .rootsystem import RootSystem, format_type_multiset

#: w0 intervals that must be lattices by all three tests
LATTICE_POSITIVE_TYPES = (
    "A1",
    "I2(4)",
    "I2(6)",
    "I2(8)",
    "I2(10)",
    "B3",
    "B4",
    "B5",
    "D4",
    "H3",
)

#: w0 intervals that must fail, with the intersection type of the witness
LATTICE_NEGATIVE_TYPES = (("D6", "A3"), ("F4", "A2"), ("H4", "I2(5)"))

#: every involution of these groups goes through all three lattice tests
SWEEP_TYPES = (
    "A1",
    "A2",
    "A3",
    "A4",
    "A5",
    "B2",
    "B3",
    "B4",
    "B5",
    "D4",
    "D5",
    "D6",
    "F4",
    "H3",
    "H4",
)
DEEP_SWEEP_TYPES = SWEEP_TYPES + ("E6",)

#: irreducible geometric types of order at most 1152
SMALL_GROUP_TYPES = (
    "A1",
    "A2",
    "A3",
    "A4",
    "A5",
    "B2",
    "B3",
    "B4",
    "D4",
    "F4",
    "H3",
    "I2(5)",
    "I2(6)",
)

#: (type, word-length cap or None for the whole group)
DYER_SCOPES = (
    ("A3", None),
    ("B3", None),
    ("H3", None),
    ("A4", 10),
    ("B4", 10),
    ("D4", 10),
    ("F4", 10),
)

FIELD_TRIALS = 10_000
FIELD_SEED = 20260815


@dataclasses.dataclass
class CheckResult:
    """Outcome of one named check: verdict, wall time, detail lines."""

    name: str
    passed: bool
    elapsed: float
    lines: list[str] = dataclasses.field(default_factory=list)

    def summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"{verdict}  {self.name}  ({self.elapsed:.2f}s)"

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "elapsed_seconds": round(self.elapsed, 3),
            "lines": list(self.lines),
        }


def _lattice_verdicts(u: Element) -> tuple[bool, bool, bool]:
    """(order-matrix, closure-intersection, type-table) verdicts for u."""
    brute, _ = is_lattice_bruteforce(interval_of_involution(u))
    structural, _ = is_lattice_structural(u)
    return brute, structural, lattice_by_classification(u)


def check_lattice_positives() -> CheckResult:
    """The listed maximal intervals are lattices by all three tests.

    Bond labels above 6 leave the supported coordinate field, so those
    dihedral groups run through the symbolic model; I2(4) and I2(6) run
    through both the geometric and the symbolic route and must agree.
    """
    start = time.perf_counter()
    lines: list[str] = []
    ok = True
    for name in LATTICE_POSITIVE_TYPES:
        bond = int(name[3:-1]) if name.startswith("I2(") else None
        if bond is not None and bond > 6:
            report = dihedral_fast_path(bond)
            verdicts = (
                report["is_lattice_bruteforce"],
                report["is_lattice_structural"],
                report["is_lattice_by_classification"],
            )
            route = "symbolic"
        else:
            system = RootSystem.named(name)
            verdicts = _lattice_verdicts(longest_element(system))
            route = "geometric"
            if bond is not None:
                mirror = dihedral_fast_path(bond)
                mirrored = (
                    mirror["is_lattice_bruteforce"],
                    mirror["is_lattice_structural"],
                    mirror["is_lattice_by_classification"],
                )
                if mirrored != verdicts:
                    ok = False
                    lines.append(
                        f"{name}: symbolic route disagrees: {mirrored}"
                    )
                route = "geometric+symbolic"
        good = verdicts == (True, True, True)
        ok = ok and good
        lines.append(
            f"{name} ({route}): brute={verdicts[0]} "
            f"structural={verdicts[1]} classification={verdicts[2]}"
        )
    return CheckResult(
        "lattice positives", ok, time.perf_counter() - start, lines
    )


def check_lattice_negatives() -> CheckResult:
    """D6, F4, H4 fail all three tests and carry the announced witnesses.

    The witness pair consists of two involutive parabolics whose
    intersection has the expected type and is not involutive, so the
    central involutions of the pair have no meet.
    """
    start = time.perf_counter()
    lines: list[str] = []
    ok = True
    for name, expected in LATTICE_NEGATIVE_TYPES:
        system = RootSystem.named(name)
        verdicts = _lattice_verdicts(longest_element(system))
        witness = counterexample_witness(name)
        got = format_type_multiset(witness.intersection.type_labels)
        good = (
            verdicts == (False, False, False)
            and witness.is_valid()
            and witness.intersection_matches()
            and got == expected
        )
        ok = ok and good
        lines.append(
            f"{name}: brute={verdicts[0]} structural={verdicts[1]} "
            f"classification={verdicts[2]} witness intersection={got} "
            f"(expected {expected})"
        )
    return CheckResult(
        "lattice negatives and witnesses",
        ok,
        time.perf_counter() - start,
        lines,
    )


def check_e7_e8_witnesses() -> CheckResult:
    """Root-level witness pairs in E7 and E8, no group enumeration.

    A D4 subsystem and its conjugate by an adjacent simple reflection
    intersect in a type A3 subsystem, which is not involutive; this
    settles both types with root arithmetic alone.
    """
    start = time.perf_counter()
    lines: list[str] = []
    ok = True
    expected_pos = {"E7": 63, "E8": 120}
    for name in ("E7", "E8"):
        system = RootSystem.named(name)
        witness = counterexample_witness(name)
        got = format_type_multiset(witness.intersection.type_labels)
        p1_type = format_type_multiset(witness.p1.type_labels)
        good = (
            system.n_pos == expected_pos[name]
            and p1_type == "D4"
            and witness.is_valid()
            and witness.intersection_matches()
            and system._group is None  # nothing enumerated the group
        )
        ok = ok and good
        lines.append(
            f"{name}: {system.n_pos} positive roots, pair of type "
            f"{p1_type}, intersection {got}, enumerated=no"
        )
    return CheckResult(
        "E7/E8 witnesses", ok, time.perf_counter() - start, lines
    )


def check_classification_sweep(deep: bool = False) -> CheckResult:
    """Every involution of every sweep group gets all three verdicts.

    The type-table verdict must equal the closure-intersection verdict
    and the order-matrix verdict on every single involution; the sweep
    is exhaustive, not sampled.  deep adds E6.
    """
    start = time.perf_counter()
    lines: list[str] = []
    ok = True
    for name in DEEP_SWEEP_TYPES if deep else SWEEP_TYPES:
        system = RootSystem.named(name)
        full = Parabolic(system, (1 << system.n_pos) - 1)
        count = 0
        lattices = 0
        disagreements = 0
        for u, _ in involutions_with_words(full):
            brute, structural, classified = _lattice_verdicts(u)
            count += 1
            lattices += int(classified)
            if not brute == structural == classified:
                disagreements += 1
                if disagreements <= 3:
                    lines.append(
                        f"{name}: disagreement at involution with word "
                        f"{u.reduced_word()}: brute={brute} "
                        f"structural={structural} table={classified}"
                    )
        ok = ok and disagreements == 0
        lines.append(
            f"{name}: {count} involutions, {lattices} lattice intervals, "
            f"{disagreements} disagreements"
        )
    if not deep:
        lines.append("E6 skipped (enable deep)")
    return CheckResult(
        "classification sweep", ok, time.perf_counter() - start, lines
    )


def check_dyer_agreement() -> CheckResult:
    """Deletion count equals fixed-space rank, element by element.

    Whole groups for A3, B3, H3; all elements with word length at most
    10 for A4, B4, D4, F4.  Exact equality, no sampling.
    """
    start = time.perf_counter()
    lines: list[str] = []
    ok = True
    for name, cap in DYER_SCOPES:
        system = RootSystem.named(name)
        enum = enumerate_group(system)
        ell = enum.reflection_lengths
        checked = 0
        mismatches = 0
        for i in range(enum.size):
            word = enum.words[i]
            if cap is not None and len(word) > cap:
                continue
            checked += 1
            if dyer_reflection_length(system, word) != int(ell[i]):
                mismatches += 1
                if mismatches <= 3:
                    lines.append(f"{name}: mismatch at word {word}")
        ok = ok and mismatches == 0
        scope = "all elements" if cap is None else f"word length <= {cap}"
        lines.append(
            f"{name}: {checked} elements ({scope}), "
            f"{mismatches} mismatches"
        )
    return CheckResult(
        "deletion oracle agreement", ok, time.perf_counter() - start, lines
    )


def _member_ids(parabolic: Parabolic, enum) -> frozenset:
    """Ids of the subgroup generated by a closed root subsystem."""
    info = parabolic._info()
    if "member_ids" not in info:
        system = parabolic.system
        gens = [
            system.reflection_table[t] for t in parabolic.simple_system
        ]
        identity_perm = np.arange(system.n_roots, dtype=np.int32)
        seen = {enum.index[identity_perm.tobytes()]}
        frontier = [identity_perm]
        while frontier:
            perm = frontier.pop()
            for g in gens:
                i = enum.index[perm[g].tobytes()]
                if i not in seen:
                    seen.add(i)
                    frontier.append(enum.perms[i])
        info["member_ids"] = frozenset(seen)
    return info["member_ids"]


def _order_law_failures(system: RootSystem) -> tuple[list[str], int]:
    """All structure-law violations in one group, with the element count.

    The laws, each quantified over every element or every involution:

      * the closure of w has rank equal to the reflection length of w;
      * a reflection t sits below w exactly when t lies in the closure;
      * w is an involution exactly when it is the longest element of its
        own closure;
      * t sits below w0 exactly when t and w0 commute;
      * below an involution u: every v is an involution commuting with
        u, and V splits as the direct sum of the moved spaces of v and
        vu and the fixed space of u;
      * v sits below u exactly when v is an involution of the closure of
        u, exactly when v is an involution fixing the fixed space of u
        pointwise;
      * the closure map is a bijection from [1, u] onto the involutive
        parabolics inside the closure of u and an order isomorphism;
      * every minimal reflection factorization of an involution consists
        of pairwise commuting reflections.
    """
    failures: list[str] = []
    enum = enumerate_group(system)
    n = enum.size
    n_pos = system.n_pos
    perms = enum.perms
    index = enum.index
    ell = enum.reflection_lengths.astype(np.int64)
    inv_all = perms[enum.inverse_ids]
    invol = np.zeros(n, dtype=bool)
    invol[enum.involution_ids()] = True
    closures = [parabolic_closure(enum.element(i)) for i in range(n)]

    for i in range(n):
        if closures[i].rank != ell[i]:
            failures.append(
                f"closure rank {closures[i].rank} != length {ell[i]} "
                f"at id {i}"
            )

    refl_ids = [
        index[system.reflection_table[t].tobytes()] for t in range(n_pos)
    ]
    for t in range(n_pos):
        products = system.reflection_table[t][perms]
        for w in range(n):
            below = 1 + ell[index[products[w].tobytes()]] == ell[w]
            member = (closures[w].mask >> t) & 1 == 1
            if below != member:
                failures.append(
                    f"reflection {t} below id {w}: {below}, "
                    f"membership: {member}"
                )

    for i in range(n):
        is_longest = enum.element(i) == closures[i].longest_element
        if bool(invol[i]) != is_longest:
            failures.append(
                f"id {i}: involution={bool(invol[i])} but "
                f"longest-of-closure={is_longest}"
            )

    w0 = longest_element(system)
    w0_id = index[w0.perm.tobytes()]
    for t in range(n_pos):
        t_w0 = system.reflection_table[t][w0.perm]
        w0_t = w0.perm[system.reflection_table[t]]
        below = 1 + ell[index[t_w0.tobytes()]] == ell[w0_id]
        if below != bool((t_w0 == w0_t).all()):
            failures.append(f"reflection {t} vs w0: order/commutation")

    moved_cache: dict = {}
    fixed_cache: dict = {}

    def moved(i: int):
        if i not in moved_cache:
            moved_cache[i] = enum.element(i).moved_space()
        return moved_cache[i]

    def fixed(i: int):
        if i not in fixed_cache:
            fixed_cache[i] = enum.element(i).fixed_space()
        return fixed_cache[i]

    invol_ids = np.nonzero(invol)[0]
    for ui in invol_ids:
        u = enum.element(int(ui))
        u_perm = perms[ui]
        products = inv_all[:, u_perm]
        pids = np.fromiter(
            (index[products[r].tobytes()] for r in range(n)),
            dtype=np.int64,
            count=n,
        )
        below = ell + ell[pids] == ell[ui]

        for t in range(n_pos):
            t_u = system.reflection_table[t][u_perm]
            u_t = u_perm[system.reflection_table[t]]
            criterion = bool((t_u == u_t).all()) and u_perm[t] >= n_pos
            if bool(below[refl_ids[t]]) != criterion:
                failures.append(
                    f"id {ui}: reflection {t} commutation/inversion "
                    "criterion"
                )

        for vi in np.nonzero(below)[0]:
            if not invol[vi]:
                failures.append(f"id {vi} below id {ui} not an involution")
                continue
            uv = u_perm[perms[vi]]
            vu = perms[vi][u_perm]
            if not (uv == vu).all():
                failures.append(f"id {vi} below id {ui} does not commute")
            mov_v = moved(int(vi))
            mov_rest = moved(int(pids[vi]))
            fix_u = fixed(int(ui))
            dims = mov_v.dim + mov_rest.dim + fix_u.dim
            stacked = list(mov_v.basis) + list(mov_rest.basis) + list(
                fix_u.basis
            )
            if dims != system.rank or rank(stacked) != system.rank:
                failures.append(f"ids {vi},{ui}: no direct sum split")

        members = _member_ids(closures[ui], enum)
        fix_u = fixed(int(ui))
        for vi in range(n):
            a = bool(below[vi])
            b = bool(invol[vi]) and vi in members
            c = bool(invol[vi]) and fixed(vi).contains_subspace(fix_u)
            if not (a == b == c):
                failures.append(
                    f"ids {vi},{ui}: three-way interval criteria "
                    f"{a}/{b}/{c}"
                )

        report = closure_map_report(u)
        if not (
            report["injective"]
            and report["surjective"]
            and report["order_isomorphism"]
        ):
            failures.append(f"id {ui}: closure map report {report}")

        if ell[ui] <= 4:
            for tup in t_reduced_expressions(u):
                if not check_T_reduced(system, tup):
                    failures.append(f"id {ui}: expression {tup} dependent")
                for a_i in range(len(tup)):
                    for b_i in range(a_i + 1, len(tup)):
                        ta = system.reflection_table[tup[a_i]]
                        tb = system.reflection_table[tup[b_i]]
                        if not (ta[tb] == tb[ta]).all():
                            failures.append(
                                f"id {ui}: factors {tup[a_i]},{tup[b_i]} "
                                "do not commute"
                            )
    return failures, n


def check_order_laws(deep: bool = False) -> CheckResult:
    """Structure laws on every element of every small group.

    Exhaustive over the irreducible geometric types of order at most
    1152; deep adds all 14400 elements of H4.
    """
    start = time.perf_counter()
    lines: list[str] = []
    ok = True
    groups = SMALL_GROUP_TYPES + (("H4",) if deep else ())
    for name in groups:
        system = RootSystem.named(name)
        failures, size = _order_law_failures(system)
        ok = ok and not failures
        lines.extend(f"{name}: {f}" for f in failures[:5])
        if len(failures) > 5:
            lines.append(f"{name}: ... {len(failures)} failures total")
        lines.append(f"{name}: {size} elements, {len(failures)} failures")
    if not deep:
        lines.append("H4 skipped (enable deep)")
    return CheckResult(
        "order structure laws", ok, time.perf_counter() - start, lines
    )


def _interval_matches_oracle(u: Element) -> tuple[bool, str]:
    """Same element set and same cover relation from both routes."""
    poset = interval_of_involution(u)
    oracle = cayley_interval_elements(u)
    keys = {e.key() for e in poset.elements}
    oracle_keys = {e.key() for e in oracle}
    if keys != oracle_keys:
        return False, (
            f"element sets differ: {len(keys)} vs {len(oracle_keys)}"
        )
    system = u.system
    lengths = [e.reflection_length() for e in oracle]
    oracle_edges = set()
    for i, x in enumerate(oracle):
        for j, y in enumerate(oracle):
            if lengths[j] != lengths[i] + 1:
                continue
            between = Element(system, x.inverse().perm[y.perm])
            if lengths[i] + between.reflection_length() == lengths[j]:
                oracle_edges.add((x.key(), y.key()))
    poset_edges = {
        (poset.elements[i].key(), poset.elements[j].key())
        for i, j in poset.hasse
    }
    if poset_edges != oracle_edges:
        return False, (
            f"cover sets differ: {len(poset_edges)} vs {len(oracle_edges)}"
        )
    return True, f"{len(keys)} elements, {len(poset_edges)} covers"


def check_interval_oracle(deep: bool = False) -> CheckResult:
    """The Cayley-graph oracle reproduces every interval poset exactly.

    Every involution of every small group; deep adds the longest element
    of H4, whose interval carries every involution of the group.
    """
    start = time.perf_counter()
    lines: list[str] = []
    ok = True
    for name in SMALL_GROUP_TYPES:
        system = RootSystem.named(name)
        full = Parabolic(system, (1 << system.n_pos) - 1)
        checked = 0
        bad = 0
        for u, _ in involutions_with_words(full):
            same, _ = _interval_matches_oracle(u)
            checked += 1
            if not same:
                bad += 1
                if bad <= 3:
                    lines.append(
                        f"{name}: oracle mismatch at {u.reduced_word()}"
                    )
        ok = ok and bad == 0
        lines.append(f"{name}: {checked} involutions, {bad} mismatches")
    if deep:
        system = RootSystem.named("H4")
        same, detail = _interval_matches_oracle(longest_element(system))
        ok = ok and same
        lines.append(f"H4 w0: {detail}")
    else:
        lines.append("H4 w0 skipped (enable deep)")
    return CheckResult(
        "interval oracle identity", ok, time.perf_counter() - start, lines
    )


def check_hurwitz_b2() -> CheckResult:
    """The longest element of B2 has 4 minimal reflection factorizations
    falling into exactly 2 conjugation-move orbits, each orbit being the
    two orderings of one commuting pair."""
    start = time.perf_counter()
    lines: list[str] = []
    system = RootSystem.named("B2")
    w0 = longest_element(system)
    expressions = t_reduced_expressions(w0)
    orbits = hurwitz_orbits(system, expressions)
    ok = len(expressions) == 4 and len(orbits) == 2
    seen: set = set()
    for orbit in orbits:
        members = set(orbit)
        pair = set(orbit[0])
        orderings = {
            tup for tup in expressions if set(tup) == pair
        }
        if len(orbit) != 2 or members != orderings:
            ok = False
            lines.append(f"orbit {sorted(members)} is not one pair's orderings")
        seen |= members
    ok = ok and seen == set(expressions)
    lines.append(
        f"{len(expressions)} expressions, {len(orbits)} orbits: "
        + "; ".join(
            "{" + ", ".join(map(str, sorted(orbit))) + "}" for orbit in orbits
        )
    )
    return CheckResult(
        "B2 Hurwitz orbits", ok, time.perf_counter() - start, lines
    )


def check_factor_product_law(deep: bool = False) -> CheckResult:
    """Intervals multiply over the components of a reducible closure.

    For every involution u whose closure splits, u is the product of the
    component central involutions, their reflection lengths add to that
    of u, they commute, and the interval sizes multiply.
    """
    start = time.perf_counter()
    lines: list[str] = []
    ok = True
    for name in DEEP_SWEEP_TYPES if deep else SWEEP_TYPES:
        system = RootSystem.named(name)
        full = Parabolic(system, (1 << system.n_pos) - 1)
        checked = 0
        bad = 0
        for u, _ in involutions_with_words(full):
            factorization = decompose_involution(u)
            if len(factorization.factors) < 2:
                continue
            checked += 1
            product_size = 1
            for factor in factorization.factors:
                product_size *= interval_of_involution(factor.element).size
            good = (
                factorization.product() == u
                and factorization.factor_lengths_add()
                and factorization.factors_commute()
                and interval_of_involution(u).size == product_size
            )
            if not good:
                bad += 1
                if bad <= 3:
                    lines.append(
                        f"{name}: product law fails at {u.reduced_word()}"
                    )
        ok = ok and bad == 0
        lines.append(
            f"{name}: {checked} reducible closures, {bad} failures"
        )
    if not deep:
        lines.append("E6 skipped (enable deep)")
    return CheckResult(
        "factor product law", ok, time.perf_counter() - start, lines
    )


def _random_scalar(rng: random.Random) -> FieldScalar:
    """Small random field element touching all radical components."""
    out = FieldScalar.from_rational(rng.randint(-4, 4), rng.randint(1, 4))
    for radical in (SQRT2, SQRT3, SQRT5):
        if rng.random() < 0.5:
            q = FieldScalar.from_rational(rng.randint(-3, 3), rng.randint(1, 3))
            out = out + q * radical
    return out


def check_field_kernel(
    trials: int = FIELD_TRIALS, seed: int = FIELD_SEED
) -> CheckResult:
    """Randomized exact-arithmetic consistency, fixed seed.

    Each trial draws field elements and asserts ring axioms, inverse
    round-trips, exact sign against the floating image, and order
    consistency.
    """
    start = time.perf_counter()
    rng = random.Random(seed)
    bad = 0
    first = ""
    for trial in range(trials):
        x = _random_scalar(rng)
        y = _random_scalar(rng)
        z = _random_scalar(rng)
        good = (
            (x * y) * z == x * (y * z)
            and x * (y + z) == x * y + x * z
            and x * y == y * x
            and x + y == y + x
            and (x - y) + y == x
        )
        sign = (x * x - y * y).sign()
        float_value = float(x * x - y * y)
        if abs(float_value) > 1e-9 and good:
            good = sign == (1 if float_value > 0 else -1)
        if good and (x * x).sign() < 0:
            good = False
        if good and x.sign() != 0:
            good = x * x.invert() == ONE
        if good:
            good = (x < y) == ((y - x).sign() > 0)
        if not good:
            bad += 1
            if not first:
                first = f"trial {trial}: x={x!r} y={y!r}"
    lines = [f"{trials} trials, {bad} failures"]
    if first:
        lines.append(first)
    return CheckResult(
        "field kernel", bad == 0, time.perf_counter() - start, lines
    )


ALL_CHECKS = (
    ("lattice positives", check_lattice_positives, False),
    ("lattice negatives and witnesses", check_lattice_negatives, False),
    ("E7/E8 witnesses", check_e7_e8_witnesses, False),
    ("classification sweep", check_classification_sweep, True),
    ("deletion oracle agreement", check_dyer_agreement, False),
    ("order structure laws", check_order_laws, True),
    ("interval oracle identity", check_interval_oracle, True),
    ("B2 Hurwitz orbits", check_hurwitz_b2, False),
    ("factor product law", check_factor_product_law, True),
    ("field kernel", check_field_kernel, False),
)


def run_all(deep: bool = False) -> list[CheckResult]:
    """Run every check; a crash inside one check becomes a failure."""
    results = []
    for name, fn, takes_deep in ALL_CHECKS:
        try:
            results.append(fn(deep) if takes_deep else fn())
        except Exception:  # noqa: BLE001 - a crashed check must not abort
            results.append(
                CheckResult(name, False, 0.0, traceback.format_exc().splitlines())
            )
    return results


def report_to_dict(results: list[CheckResult]) -> dict:
    return {
        "passed": all(r.passed for r in results),
        "checks": [r.to_dict() for r in results],
    }
