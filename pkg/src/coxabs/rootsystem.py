"""Finite Coxeter systems and their root systems, built exactly.

The geometric representation of a Coxeter matrix (m_ij) puts the simple
roots at unit vectors with pairwise form values -cos(pi/m_ij).  Bond
labels up to 6 keep every value inside the radical field, so the whole
root system is computed exactly: roots are tuples of FieldScalar, each
reflection becomes a permutation of root indices, and all later questions
about the group reduce to integer permutation work plus exact rank
computations.

Numbering conventions for the named types:

    A_n   path s1 - s2 - ... - sn
    B_n   path with the 4-bond between s_{n-1} and s_n
    D_n   fork: s1 and s2 both attached to s3, then chain s3 - ... - s_n
    E_n   chain s1 - s3 - s4 - ... - s_n with s2 attached to s4
    F_4   path with bonds 3, 4, 3
    H_3, H_4   path with the 5-bond between s1 and s2
    I2(m) two generators with bond m
"""

from __future__ import annotations

import dataclasses
import re

import numpy as np

from . import linalg
from .field import FieldScalar, ZERO, ONE, cos_pi_over

#: hard limit on the number of roots a build will enumerate
ROOT_CAP = 1_000_000


class CoxeterError(Exception):
    """Base class for errors raised by this package."""


class InfiniteTypeError(CoxeterError):
    """The Coxeter matrix does not define a finite group."""


class UnsupportedBondError(CoxeterError):
    """A bond label above 6 cannot be represented in the radical field."""


class CapExceededError(CoxeterError):
    """An enumeration grew past its configured cap."""


class RecognitionError(CoxeterError):
    """A diagram did not match any finite type (internal inconsistency)."""


# ----------------------------------------------------------------------
# type labels


@dataclasses.dataclass(frozen=True, order=True)
class TypeLabel:
    """An irreducible finite type: family letter, rank, and dihedral bond.

    The bond field is 0 except for family "I", where it holds m.  Labels
    are normalized on creation: I2(3) is A2 and I2(4) is B2.
    """

    family: str
    rank: int
    bond: int = 0

    def __str__(self) -> str:
        if self.family == "I":
            return f"I2({self.bond})"
        return f"{self.family}{self.rank}"


def make_label(family: str, rank: int, bond: int = 0) -> TypeLabel:
    """Validated, normalized TypeLabel constructor."""
    if family == "I":
        if rank != 2 or bond < 3:
            raise ValueError(f"invalid dihedral label I{rank}({bond})")
        if bond == 3:
            return TypeLabel("A", 2)
        if bond == 4:
            return TypeLabel("B", 2)
        return TypeLabel("I", 2, bond)
    valid = {
        "A": rank >= 1,
        "B": rank >= 2,
        "D": rank >= 4,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "H": rank in (3, 4),
    }
    if not valid.get(family, False):
        raise ValueError(f"invalid type label {family}{rank}")
    return TypeLabel(family, rank, bond=0)


_LABEL_RE = re.compile(r"^([ABDEFH])(\d+)$")
_DIHEDRAL_RE = re.compile(r"^I2\((\d+)\)$")


def parse_label(text: str) -> TypeLabel:
    """Parse labels like "A3", "B4", "H3", "I2(8)".  "G2" means I2(6)."""
    text = text.strip()
    if text == "G2":
        return make_label("I", 2, 6)
    m = _LABEL_RE.match(text)
    if m:
        return make_label(m.group(1), int(m.group(2)))
    m = _DIHEDRAL_RE.match(text)
    if m:
        return make_label("I", 2, int(m.group(1)))
    raise ValueError(f"unrecognized type label: {text!r}")


def format_type_multiset(labels) -> str:
    """Render a multiset of irreducible labels, e.g. "A1 x A1 x B2"."""
    parts = [str(l) for l in sorted(labels)]
    return " x ".join(parts) if parts else "trivial"


# ----------------------------------------------------------------------
# Coxeter matrices


@dataclasses.dataclass(frozen=True)
class CoxeterMatrix:
    """A symmetric integer matrix with 1 on the diagonal, entries >= 2 off it."""

    rows: tuple

    def __post_init__(self):
        n = len(self.rows)
        for i, row in enumerate(self.rows):
            if len(row) != n:
                raise ValueError("Coxeter matrix must be square")
            for j, m in enumerate(row):
                if not isinstance(m, int):
                    raise ValueError("Coxeter matrix entries must be integers")
                if i == j:
                    if m != 1:
                        raise ValueError("diagonal entries must be 1")
                elif m < 2:
                    raise ValueError("off-diagonal entries must be at least 2")
                elif self.rows[j][i] != m:
                    raise ValueError("Coxeter matrix must be symmetric")

    @staticmethod
    def from_rows(rows) -> CoxeterMatrix:
        return CoxeterMatrix(tuple(tuple(row) for row in rows))

    @staticmethod
    def from_text(text: str) -> CoxeterMatrix:
        """Parse the plain text format: first line the rank n, then n rows."""
        tokens = text.split()
        if not tokens:
            raise ValueError("empty matrix description")
        n = int(tokens[0])
        if n < 1:
            raise ValueError("rank must be positive")
        if len(tokens) != 1 + n * n:
            raise ValueError(
                f"expected {n * n} entries after the rank, got {len(tokens) - 1}"
            )
        vals = [int(t) for t in tokens[1:]]
        rows = [tuple(vals[i * n : (i + 1) * n]) for i in range(n)]
        return CoxeterMatrix(tuple(rows))

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def max_bond(self) -> int:
        if self.rank == 1:
            return 1
        return max(
            self.rows[i][j]
            for i in range(self.rank)
            for j in range(self.rank)
            if i != j
        )

    def entry(self, i: int, j: int) -> int:
        return self.rows[i][j]


def named_coxeter_matrix(label) -> CoxeterMatrix:
    """The Coxeter matrix of a named irreducible type."""
    if isinstance(label, str):
        label = parse_label(label)
    n = label.rank
    rows = [[2] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = 1

    def bond(i: int, j: int, m: int) -> None:
        rows[i][j] = rows[j][i] = m

    fam = label.family
    if fam == "A":
        for i in range(n - 1):
            bond(i, i + 1, 3)
    elif fam == "B":
        for i in range(n - 1):
            bond(i, i + 1, 3)
        bond(n - 2, n - 1, 4)
    elif fam == "D":
        bond(0, 2, 3)
        bond(1, 2, 3)
        for i in range(2, n - 1):
            bond(i, i + 1, 3)
    elif fam == "E":
        bond(0, 2, 3)
        bond(1, 3, 3)
        for i in range(2, n - 1):
            bond(i, i + 1, 3)
    elif fam == "F":
        bond(0, 1, 3)
        bond(1, 2, 4)
        bond(2, 3, 3)
    elif fam == "H":
        bond(0, 1, 5)
        for i in range(1, n - 1):
            bond(i, i + 1, 3)
    elif fam == "I":
        bond(0, 1, label.bond)
    else:  # pragma: no cover - make_label already validated
        raise ValueError(f"unknown family {fam}")
    return CoxeterMatrix.from_rows(rows)


# ----------------------------------------------------------------------
# root systems


class RootSystem:
    """The full root system of a finite Coxeter matrix, with exact roots.

    Positive roots come first (indices 0 .. n_pos-1), sorted by height and
    then lexicographically by coordinates; index i + n_pos is the negative
    of index i.  reflection_table[t] is the permutation of all root
    indices induced by the reflection along positive root t.
    """

    def __init__(self, matrix: CoxeterMatrix, label: TypeLabel | None = None):
        if matrix.max_bond > 6:
            raise UnsupportedBondError(
                "bond labels above 6 leave the radical field; "
                "use the symbolic dihedral model for I2(m), m > 6"
            )
        self.matrix = matrix
        self.label = label
        n = matrix.rank
        self.rank = n
        gram = [
            [
                ONE if i == j else -cos_pi_over(matrix.entry(i, j))
                for j in range(n)
            ]
            for i in range(n)
        ]
        self.gram = tuple(tuple(row) for row in gram)
        if not linalg.is_positive_definite(gram):
            raise InfiniteTypeError(
                "the bilinear form is not positive definite: "
                "this Coxeter matrix defines an infinite group"
            )
        positives = self._orbit_closure()
        positives.sort(key=lambda r: (sum(r, start=ZERO), r))
        self.n_pos = len(positives)
        self.n_roots = 2 * self.n_pos
        negatives = [tuple(-c for c in r) for r in positives]
        self.roots = tuple(positives + negatives)
        self.root_index = {r: i for i, r in enumerate(self.roots)}
        simple_idx = []
        for s in range(n):
            unit = tuple(ONE if j == s else ZERO for j in range(n))
            simple_idx.append(self.root_index[unit])
        self.simple_idx = tuple(simple_idx)
        self.reflection_table = self._build_reflection_table()
        self.all_rational = matrix.max_bond <= 3
        # per-system caches filled lazily by other modules
        self._orth: np.ndarray | None = None
        self._bond_cache: dict[tuple[int, int], int] = {}
        self._subsystem_cache: dict = {}
        self._ell_t_cache: dict[bytes, int] = {}
        self._group = None
        self._parabolic_masks = None

    # -- construction ---------------------------------------------------

    def _reflect_coords(self, s: int, root: tuple) -> tuple:
        """Apply the simple reflection s to a root given by coordinates."""
        g = self.gram[s]
        b = ZERO
        for j, c in enumerate(root):
            if c:
                b = b + g[j] * c
        new = list(root)
        new[s] = new[s] - (b + b)
        return tuple(new)

    def _orbit_closure(self) -> list:
        n = self.rank
        seen = set()
        frontier = []
        for s in range(n):
            unit = tuple(ONE if j == s else ZERO for j in range(n))
            seen.add(unit)
            frontier.append(unit)
        while frontier:
            nxt = []
            for root in frontier:
                for s in range(n):
                    img = self._reflect_coords(s, root)
                    if img not in seen:
                        seen.add(img)
                        nxt.append(img)
            if len(seen) > 2 * ROOT_CAP:
                raise CapExceededError(
                    f"root enumeration exceeded the cap of {ROOT_CAP}"
                )
            frontier = nxt
        positives = []
        for root in seen:
            signs = {c.sign() for c in root if c}
            if signs == {1}:
                positives.append(root)
            elif signs != {-1}:
                raise RecognitionError(
                    "root with mixed coordinate signs; the geometric "
                    "representation is inconsistent"
                )
        if 2 * len(positives) != len(seen):
            raise RecognitionError("root system is not symmetric under negation")
        return positives

    def _build_reflection_table(self) -> np.ndarray:
        n_pos, n_roots = self.n_pos, self.n_roots
        table = np.full((n_pos, n_roots), -1, dtype=np.int32)
        simple_perms = {}
        for s in range(self.rank):
            t = self.simple_idx[s]
            perm = np.empty(n_roots, dtype=np.int32)
            for i, root in enumerate(self.roots):
                perm[i] = self.root_index[self._reflect_coords(s, root)]
            table[t] = perm
            simple_perms[t] = perm
        # remaining reflections by conjugation: the reflection along s(b)
        # is s r_b s, so a breadth-first walk from the simples fills the
        # table with pure permutation composition
        queue = list(simple_perms.keys())
        seen = set(queue)
        while queue:
            t = queue.pop(0)
            row_t = table[t]
            for sp in simple_perms.values():
                img = int(sp[t])
                if img >= n_pos:
                    img -= n_pos
                if img not in seen:
                    seen.add(img)
                    table[img] = sp[row_t[sp]]
                    queue.append(img)
        if len(seen) != n_pos:  # pragma: no cover - connectivity always holds
            raise RecognitionError("reflection table is incomplete")
        return table

    # -- basic queries ---------------------------------------------------

    def negate(self, idx: int) -> int:
        """Index of the negative of a root index."""
        return idx + self.n_pos if idx < self.n_pos else idx - self.n_pos

    def reflection_perm(self, t: int) -> np.ndarray:
        """Permutation of root indices for the reflection along root t."""
        return self.reflection_table[t if t < self.n_pos else t - self.n_pos]

    def bilinear(self, i: int, j: int) -> FieldScalar:
        """Form value B(root_i, root_j)."""
        return linalg.dot(self.gram, self.roots[i], self.roots[j])

    @property
    def orthogonality(self) -> np.ndarray:
        """Boolean matrix over positive roots: True where B(a, b) = 0."""
        if self._orth is None:
            n = self.n_pos
            orth = np.zeros((n, n), dtype=bool)
            for i in range(n):
                for j in range(i + 1, n):
                    if self.bilinear(i, j).is_zero:
                        orth[i, j] = orth[j, i] = True
            self._orth = orth
        return self._orth

    def bond_between(self, i: int, j: int) -> int:
        """Bond label m for two roots at a non-acute angle.

        Valid when the two roots can both belong to one simple system, so
        B(a, b) = -cos(pi/m); raises RecognitionError otherwise.
        """
        key = (i, j) if i <= j else (j, i)
        cached = self._bond_cache.get(key)
        if cached is not None:
            return cached
        value = self.bilinear(i, j)
        for m in (2, 3, 4, 5, 6):
            if value == -cos_pi_over(m):
                self._bond_cache[key] = m
                return m
        raise RecognitionError(
            f"roots {i} and {j} are not at a simple-system angle"
        )

    def describe(self) -> str:
        if self.label is not None:
            return str(self.label)
        return f"rank-{self.rank} system with {self.n_pos} positive roots"

    def __repr__(self) -> str:
        return f"RootSystem({self.describe()}, n_pos={self.n_pos})"

    # -- constructors ----------------------------------------------------

    _named_cache: dict = {}

    @classmethod
    def build(cls, matrix: CoxeterMatrix, label: TypeLabel | None = None):
        return cls(matrix, label)

    @classmethod
    def named(cls, label) -> "RootSystem":
        """Build (and cache) the system of a named type."""
        if isinstance(label, str):
            label = parse_label(label)
        cached = cls._named_cache.get(label)
        if cached is None:
            cached = cls(named_coxeter_matrix(label), label)
            cls._named_cache[label] = cached
        return cached
