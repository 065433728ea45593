"""Quivers, exchange matrices, seed mutation, and the word-indexed quiver.

The exchange matrix keeps one column per mutable vertex; rows run over all
vertices.  Entry b[i][col] counts arrows (col's vertex -> i) minus arrows
(i -> col's vertex), so positive entries in a column point away from that
column's vertex.  Arrows between two frozen vertices are intentionally not
representable: they are not needed for seed mutation and are not controlled
by it.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .cartan import QuiverOrientation, ReducedWord
from .errors import (
    FrozenIndexError,
    LinearAnCaveatError,
    NonIntegralError,
    NotAcyclicError,
    ValidationError,
)
from .laurent import LaurentPoly, VarTable


@dataclass(frozen=True)
class Quiver:
    """Vertices 1..r, a frozen subset, and an arrow multiset."""

    r: int
    frozen: frozenset[int]
    arrows: tuple[tuple[int, int, int], ...]  # (source, target, multiplicity)

    def __post_init__(self) -> None:
        seen: set[tuple[int, int]] = set()
        for s, t, m in self.arrows:
            if not (1 <= s <= self.r and 1 <= t <= self.r):
                raise ValidationError(f"arrow {(s, t)} out of range")
            if s == t:
                raise ValidationError("loops are not allowed")
            if m < 1:
                raise ValidationError("arrow multiplicity must be positive")
            if (s, t) in seen:
                raise ValidationError("duplicate arrow entry; merge multiplicities")
            seen.add((s, t))
        for s, t, _ in self.arrows:
            if (t, s) in seen and not (s in self.frozen and t in self.frozen):
                raise ValidationError(f"2-cycle between {s} and {t}")

    @property
    def mutable(self) -> tuple[int, ...]:
        return tuple(v for v in range(1, self.r + 1) if v not in self.frozen)

    def arrow_multiset(self) -> dict[tuple[int, int], int]:
        return {(s, t): m for s, t, m in self.arrows}

    def to_json(self) -> dict:
        return {
            "vertices": self.r,
            "frozen": sorted(self.frozen),
            "arrows": [list(a) for a in sorted(self.arrows)],
        }


def gamma_i(word: ReducedWord) -> Quiver:
    """The quiver attached to a reduced word.

    Ordinary arrows: q_{i_s, i_t} arrows s -> t whenever t+ >= s+ > t > s.
    Horizontal arrows: s -> s- whenever s- > 0.  Frozen vertices are the
    final occurrences of each letter.
    """
    cartan = word.cartan
    r = word.r
    arrows: dict[tuple[int, int], int] = {}
    for s in range(1, r + 1):
        sm = word.k_minus(s)
        if sm > 0:
            arrows[(s, sm)] = arrows.get((s, sm), 0) + 1
        sp = word.k_plus(s)
        for t in range(s + 1, sp):
            if word.k_plus(t) >= sp:
                q = cartan.q(word.letter(s), word.letter(t))
                if q:
                    arrows[(s, t)] = arrows.get((s, t), 0) + q
    return Quiver(
        r,
        word.frozen_positions(),
        tuple((s, t, m) for (s, t), m in sorted(arrows.items())),
    )


class ExchangeMatrix:
    """Integer matrix with one column per mutable vertex, rows over all vertices."""

    __slots__ = ("r", "mutable", "rows")

    def __init__(
        self,
        r: int,
        mutable: Sequence[int],
        rows: Sequence[Sequence[int]],
    ):
        self.r = r
        self.mutable = tuple(mutable)
        self.rows = tuple(tuple(row) for row in rows)
        if len(self.rows) != r or any(len(row) != len(self.mutable) for row in self.rows):
            raise ValidationError("exchange matrix shape mismatch")
        col_of = {v: c for c, v in enumerate(self.mutable)}
        for v in self.mutable:
            if not 1 <= v <= r:
                raise ValidationError("mutable vertex out of range")
            for w in self.mutable:
                if self.rows[v - 1][col_of[w]] != -self.rows[w - 1][col_of[v]]:
                    raise ValidationError("principal part is not skew-symmetric")

    @property
    def frozen(self) -> frozenset[int]:
        return frozenset(range(1, self.r + 1)) - set(self.mutable)

    def col(self, k: int) -> int:
        try:
            return self.mutable.index(k)
        except ValueError:
            raise FrozenIndexError(f"vertex {k} is frozen or absent") from None

    def entry(self, i: int, k: int) -> int:
        """b_ik = #(k -> i) - #(i -> k); k must be mutable."""
        return self.rows[i - 1][self.col(k)]

    def mutate(self, k: int) -> "ExchangeMatrix":
        c = self.col(k)
        out = []
        for i in range(1, self.r + 1):
            row = []
            b_ik = self.rows[i - 1][c]
            for j, v in enumerate(self.mutable):
                b_ij = self.rows[i - 1][j]
                b_kj = self.rows[k - 1][j]
                if i == k or v == k:
                    row.append(-b_ij)
                else:
                    row.append(b_ij + (abs(b_ik) * b_kj + b_ik * abs(b_kj)) // 2)
            out.append(row)
        return ExchangeMatrix(self.r, self.mutable, out)

    def in_neighbors(self, k: int) -> list[tuple[int, int]]:
        """(vertex, multiplicity) pairs with arrows vertex -> k."""
        c = self.col(k)
        return [
            (i, -self.rows[i - 1][c])
            for i in range(1, self.r + 1)
            if self.rows[i - 1][c] < 0
        ]

    def out_neighbors(self, k: int) -> list[tuple[int, int]]:
        """(vertex, multiplicity) pairs with arrows k -> vertex."""
        c = self.col(k)
        return [
            (i, self.rows[i - 1][c])
            for i in range(1, self.r + 1)
            if self.rows[i - 1][c] > 0
        ]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExchangeMatrix)
            and self.r == other.r
            and self.mutable == other.mutable
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.r, self.mutable, self.rows))

    def to_json(self) -> dict:
        return {
            "vertices": self.r,
            "mutable": list(self.mutable),
            "rows": [list(row) for row in self.rows],
        }

    @staticmethod
    def from_json(doc: Mapping) -> "ExchangeMatrix":
        return ExchangeMatrix(doc["vertices"], doc["mutable"], doc["rows"])


def b_matrix(quiver: Quiver) -> ExchangeMatrix:
    """b_ij = #(j -> i) - #(i -> j), columns restricted to mutable vertices."""
    mult = quiver.arrow_multiset()
    mutable = quiver.mutable
    rows = []
    for i in range(1, quiver.r + 1):
        rows.append(
            [mult.get((j, i), 0) - mult.get((i, j), 0) for j in mutable]
        )
    return ExchangeMatrix(quiver.r, mutable, rows)


def quiver_of_matrix(matrix: ExchangeMatrix) -> Quiver:
    """Tracked part of the quiver; frozen-frozen arrows are unknown and omitted."""
    arrows: dict[tuple[int, int], int] = {}
    frozen = matrix.frozen
    for k in matrix.mutable:
        for i, m in matrix.out_neighbors(k):
            arrows[(k, i)] = m
        # frozen -> mutable arrows only show up as in-neighbors
        for i, m in matrix.in_neighbors(k):
            if i in frozen:
                arrows[(i, k)] = m
    return Quiver(
        matrix.r,
        frozen,
        tuple((s, t, m) for (s, t), m in sorted(arrows.items())),
    )


class Seed:
    """An exchange matrix with exact Laurent cluster variables.

    Cluster entries are Laurent polynomials in the initial variables
    y_1..y_r; provenance records the mutation path from the initial seed.
    """

    __slots__ = ("matrix", "cluster", "provenance")

    def __init__(
        self,
        matrix: ExchangeMatrix,
        cluster: Sequence[LaurentPoly],
        provenance: tuple[int, ...] = (),
    ):
        if len(cluster) != matrix.r:
            raise ValidationError("cluster size must match vertex count")
        self.matrix = matrix
        self.cluster = tuple(cluster)
        self.provenance = provenance

    @property
    def table(self) -> VarTable:
        return self.cluster[0].vars

    @staticmethod
    def initial(matrix: ExchangeMatrix, prefix: str = "y") -> "Seed":
        table = VarTable.indexed(prefix, matrix.r)
        cluster = [LaurentPoly.var(table, f"{prefix}{k}") for k in range(1, matrix.r + 1)]
        return Seed(matrix, cluster)

    @staticmethod
    def from_word(word: ReducedWord) -> "Seed":
        return Seed.initial(b_matrix(gamma_i(word)))

    def exchange_products(self, k: int) -> tuple[LaurentPoly, LaurentPoly]:
        """The two monomials of the exchange binomial at a mutable vertex."""
        table = self.table
        out_prod = LaurentPoly.one(table)
        for i, m in self.matrix.out_neighbors(k):
            out_prod = out_prod * self.cluster[i - 1] ** m
        in_prod = LaurentPoly.one(table)
        for i, m in self.matrix.in_neighbors(k):
            in_prod = in_prod * self.cluster[i - 1] ** m
        return out_prod, in_prod

    def mutate(self, k: int) -> "Seed":
        out_prod, in_prod = self.exchange_products(k)
        new_var = (out_prod + in_prod).exact_div(self.cluster[k - 1])
        cluster = list(self.cluster)
        cluster[k - 1] = new_var
        return Seed(self.matrix.mutate(k), cluster, self.provenance + (k,))

    def mutate_path(self, path: Iterable[int]) -> "Seed":
        seed = self
        for k in path:
            seed = seed.mutate(k)
        return seed

    def specialize_frozen(self) -> tuple[LaurentPoly, ...]:
        """Cluster with the frozen initial variables set to 1."""
        table = self.table
        images = {
            table.names[v - 1]: LaurentPoly.one(table)
            for v in self.matrix.frozen
        }
        return tuple(x.substitute(images) for x in self.cluster)

    def canonical_key(self) -> tuple:
        """Provenance-independent key: matrix plus canonical cluster content."""
        return (
            self.matrix.rows,
            self.matrix.mutable,
            tuple(tuple(x.sorted_terms()) for x in self.cluster),
        )

    def to_json(self) -> dict:
        return {
            "matrix": self.matrix.to_json(),
            "cluster": [x.to_json() for x in self.cluster],
            "provenance": list(self.provenance),
        }


def denominator_vector(seed: Seed, position: int) -> tuple[int, ...]:
    """Negated minimal exponents of the mutable initial variables."""
    entry = seed.cluster[position - 1]
    mins = entry.min_exponents()
    return tuple(-mins[v - 1] for v in seed.matrix.mutable)


class SeedRegistry:
    """Insert-if-absent registry of canonical seed keys for walk deduplication.

    Also records denominator-vector collisions: distinct cluster variables
    sharing a denominator vector are logged rather than assumed impossible.
    """

    def __init__(self) -> None:
        self.seen: dict[tuple, int] = {}
        self.by_denominator: dict[tuple, set] = {}
        self.collisions: list[tuple] = []

    def insert_if_absent(self, seed: Seed) -> bool:
        key = seed.canonical_key()
        if key in self.seen:
            return False
        self.seen[key] = len(self.seen)
        for pos in seed.matrix.mutable:
            den = denominator_vector(seed, pos)
            content = tuple(seed.cluster[pos - 1].sorted_terms())
            bucket = self.by_denominator.setdefault(den, set())
            if content not in bucket and bucket:
                self.collisions.append(den)
            bucket.add(content)
        return True


def g_vector_initial(
    d: Sequence[int], cartan_bi: Sequence[Sequence[int]]
) -> tuple[int, ...]:
    """Solve g . C^T = d for the matrix C of projective dimension columns.

    Equivalently g = d . (C^{-1})^T; the solution is asserted integral.
    """
    r = len(d)
    if len(cartan_bi) != r or any(len(row) != r for row in cartan_bi):
        raise ValidationError("matrix shape mismatch")
    # solve C g = d treating g, d as column vectors
    a = [[Fraction(cartan_bi[i][j]) for j in range(r)] + [Fraction(d[i])] for i in range(r)]
    for col in range(r):
        pivot = next((i for i in range(col, r) if a[i][col]), None)
        if pivot is None:
            raise NonIntegralError("matrix is singular")
        a[col], a[pivot] = a[pivot], a[col]
        inv = a[col][col]
        a[col] = [x / inv for x in a[col]]
        for i in range(r):
            if i != col and a[i][col]:
                factor = a[i][col]
                a[i] = [x - factor * y for x, y in zip(a[i], a[col])]
    out = []
    for i in range(r):
        val = a[i][r]
        if val.denominator != 1:
            raise NonIntegralError(f"entry {i + 1} is not integral: {val}")
        out.append(int(val))
    return tuple(out)


def _is_linear_type_a(orientation: QuiverOrientation) -> bool:
    cartan = orientation.cartan
    if not cartan.is_type_a():
        return False
    sources = {s for s, _, _ in orientation.arrows}
    targets = {t for _, t, _ in orientation.arrows}
    # linearly oriented: every inner vertex has one in- and one out-arrow
    # along the path, i.e. arrows all point the same way along 1-2-...-n
    ups = all((i, i + 1, 1) in orientation.arrows for i in range(1, cartan.n))
    downs = all((i + 1, i, 1) in orientation.arrows for i in range(1, cartan.n))
    return ups or downs


def coefficient_free_matrix(orientation: QuiverOrientation) -> ExchangeMatrix:
    """The n x n exchange matrix of an acyclic quiver, no frozen part."""
    n = orientation.cartan.n
    mult: dict[tuple[int, int], int] = {}
    for s, t, m in orientation.arrows:
        mult[(s, t)] = mult.get((s, t), 0) + m
    rows = [
        [mult.get((j, i), 0) - mult.get((i, j), 0) for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ]
    return ExchangeMatrix(n, tuple(range(1, n + 1)), rows)


def acyclic_double(orientation: QuiverOrientation) -> tuple[ReducedWord, Seed]:
    """The squared Coxeter word of an acyclic quiver with its initial seed.

    Vertices must be numbered so arrows go i -> j with i < j.  For a linearly
    oriented type A quiver the squared word is not reduced and the
    construction is refused.
    """
    if not orientation.is_acyclic():
        raise NotAcyclicError("quiver has an oriented cycle")
    for s, t, _ in orientation.arrows:
        if s >= t:
            raise ValidationError("arrows must go i -> j with i < j")
    if _is_linear_type_a(orientation):
        raise LinearAnCaveatError(
            "squared Coxeter word is not reduced for linearly oriented type A"
        )
    n = orientation.cartan.n
    printed = tuple(range(n, 0, -1)) * 2
    word = ReducedWord(orientation.cartan, printed)
    return word, Seed.from_word(word)


def y_dagger(seed: Seed) -> Seed:
    """Mutate once at every vertex in increasing order (coefficient-free use)."""
    path = sorted(seed.matrix.mutable)
    return seed.mutate_path(path)
