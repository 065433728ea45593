"""Root- and weight-lattice combinatorics of symmetric Kac-Moody Weyl groups.

Conventions used throughout the package:

* vertices / letters are 1-based,
* a root is a plain tuple of ints in simple-root coordinates,
* a word is stored in printed order ``(i_r, ..., i_1)``; position ``k``
  counts from 1 at the *rightmost* letter, so ``letter(1) == i_1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    HeightBoundExceededError,
    NonDominantError,
    NotReducedError,
    ValidationError,
)

Root = tuple[int, ...]


@dataclass(frozen=True)
class CartanMatrix:
    """Symmetric generalized Cartan matrix: c_ii = 2, c_ij = c_ji <= 0."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.rows)
        for i, row in enumerate(self.rows):
            if len(row) != n:
                raise ValidationError("Cartan matrix must be square")
            if row[i] != 2:
                raise ValidationError("Cartan matrix needs 2 on the diagonal")
            for j, cij in enumerate(row):
                if i != j and (cij > 0 or cij != self.rows[j][i]):
                    raise ValidationError(
                        "off-diagonal Cartan entries must be symmetric and <= 0"
                    )

    @property
    def n(self) -> int:
        return len(self.rows)

    def c(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - 1]

    def q(self, i: int, j: int) -> int:
        """Number of edges between vertices i != j of the Dynkin graph."""
        return -self.c(i, j)

    @staticmethod
    def from_edges(rank: int, edges: Iterable[Sequence[int]]) -> "CartanMatrix":
        """Build from a graph given as (i, j, multiplicity) triples."""
        rows = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
        for edge in edges:
            if len(edge) == 2:
                i, j = edge
                m = 1
            else:
                i, j, m = edge
            if not (1 <= i <= rank and 1 <= j <= rank) or i == j or m < 1:
                raise ValidationError(f"bad edge {edge!r}")
            rows[i - 1][j - 1] -= m
            rows[j - 1][i - 1] -= m
        return CartanMatrix(tuple(tuple(r) for r in rows))

    def edges(self) -> list[tuple[int, int, int]]:
        out = []
        for i in range(1, self.n + 1):
            for j in range(i + 1, self.n + 1):
                if self.q(i, j):
                    out.append((i, j, self.q(i, j)))
        return out

    def is_type_a(self) -> bool:
        """True for the standard path labeling 1 - 2 - ... - n."""
        return self.edges() == [(i, i + 1, 1) for i in range(1, self.n)]

    def to_json(self) -> dict:
        return {"rank": self.n, "edges": [list(e) for e in self.edges()]}


def root_pairing(cartan: CartanMatrix, d: Root, i: int) -> int:
    """Pairing <d, alpha_i^vee> of a root-lattice vector with a simple coroot."""
    return sum(dj * cartan.c(j + 1, i) for j, dj in enumerate(d))


def reflect_root(cartan: CartanMatrix, i: int, d: Root) -> Root:
    """Simple reflection s_i acting on the root lattice."""
    if not 1 <= i <= cartan.n:
        raise ValidationError(f"letter {i} out of range 1..{cartan.n}")
    coef = root_pairing(cartan, d, i)
    out = list(d)
    out[i - 1] -= coef
    return tuple(out)


def simple_root(n: int, i: int) -> Root:
    return tuple(1 if j == i - 1 else 0 for j in range(n))


def is_positive_root_vector(d: Root) -> bool:
    return all(x >= 0 for x in d) and any(x > 0 for x in d)


def root_height(d: Root) -> int:
    return sum(d)


@dataclass(frozen=True)
class Weight:
    """Integral weight written as sum f_j w_j plus a root-lattice correction.

    Only the pairing with the simple coroots is ever needed, so the
    imaginary fundamental directions are not represented.
    """

    fund: tuple[int, ...]
    alpha: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.fund) != len(self.alpha):
            raise ValidationError("weight coordinate lengths differ")

    @property
    def n(self) -> int:
        return len(self.fund)

    def pair_coroot(self, cartan: CartanMatrix, i: int) -> int:
        """Evaluate the weight on alpha_i^vee."""
        return self.fund[i - 1] + root_pairing(cartan, self.alpha, i)

    def is_dominant(self, cartan: CartanMatrix) -> bool:
        return all(self.pair_coroot(cartan, i) >= 0 for i in range(1, self.n + 1))

    def add_alpha(self, d: Root, scale: int = 1) -> "Weight":
        return Weight(self.fund, tuple(a + scale * x for a, x in zip(self.alpha, d)))


def fundamental_weight(n: int, j: int) -> Weight:
    if not 1 <= j <= n:
        raise ValidationError(f"fundamental weight index {j} out of range")
    return Weight(tuple(1 if i == j - 1 else 0 for i in range(n)), (0,) * n)


def reflect_weight(cartan: CartanMatrix, i: int, lam: Weight) -> Weight:
    """s_i(lam) = lam - lam(alpha_i^vee) alpha_i; only the alpha part moves."""
    if not 1 <= i <= cartan.n:
        raise ValidationError(f"letter {i} out of range 1..{cartan.n}")
    coef = lam.pair_coroot(cartan, i)
    out = list(lam.alpha)
    out[i - 1] -= coef
    return Weight(lam.fund, tuple(out))


def _beta_list(cartan: CartanMatrix, positions: Sequence[int]) -> list[Root]:
    """beta(k) = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k}) for letters in position order."""
    betas: list[Root] = []
    for k, letter in enumerate(positions):
        d = simple_root(cartan.n, letter)
        for j in range(k - 1, -1, -1):
            d = reflect_root(cartan, positions[j], d)
        betas.append(d)
    return betas


def is_reduced(cartan: CartanMatrix, printed: Sequence[int]) -> bool:
    """A word is reduced iff every beta(k) is a positive root."""
    positions = tuple(reversed(printed))
    for letter in positions:
        if not 1 <= letter <= cartan.n:
            raise ValidationError(f"letter {letter} out of range 1..{cartan.n}")
    d_list = _beta_list(cartan, positions)
    return all(is_positive_root_vector(d) for d in d_list)


class ReducedWord:
    """A validated reduced expression with its index combinatorics.

    ``printed`` is the word as usually displayed, ``(i_r, ..., i_1)``.
    ``letter(k)`` returns i_k with k = 1 at the right end.
    """

    def __init__(self, cartan: CartanMatrix, printed: Sequence[int]):
        self.cartan = cartan
        self.printed = tuple(printed)
        self.r = len(self.printed)
        self._pos = tuple(reversed(self.printed))  # _pos[k-1] = i_k
        if not is_reduced(cartan, self.printed):
            raise NotReducedError(f"word {list(printed)} is not reduced")
        chains: dict[int, list[int]] = {}
        for k, letter in enumerate(self._pos, start=1):
            chains.setdefault(letter, []).append(k)
        self._chains = chains

    def __repr__(self) -> str:  # pragma: no cover
        return f"ReducedWord({list(self.printed)})"

    def letter(self, k: int) -> int:
        if not 1 <= k <= self.r:
            raise ValidationError(f"position {k} out of range 1..{self.r}")
        return self._pos[k - 1]

    @property
    def positions(self) -> tuple[int, ...]:
        """Letters indexed by position, i.e. (i_1, ..., i_r)."""
        return self._pos

    def chain(self, j: int) -> tuple[int, ...]:
        """Positions carrying letter j, increasing."""
        return tuple(self._chains.get(j, ()))

    def t(self, j: int) -> int:
        """Number of occurrences of letter j."""
        return len(self._chains.get(j, ()))

    def occ_index(self, k: int) -> int:
        """k[i_k]: occurrences of the letter of k strictly before k."""
        return self.chain(self.letter(k)).index(k)

    def count_before(self, k: int, j: int) -> int:
        """k[j]: occurrences of letter j strictly before position k."""
        return sum(1 for s in self.chain(j) if s < k)

    def k_minus(self, k: int) -> int:
        c = self.chain(self.letter(k))
        i = c.index(k)
        return c[i - 1] if i > 0 else 0

    def k_plus(self, k: int) -> int:
        c = self.chain(self.letter(k))
        i = c.index(k)
        return c[i + 1] if i + 1 < len(c) else self.r + 1

    def k_min(self, k: int) -> int:
        return self.chain(self.letter(k))[0]

    def k_max(self, k: int) -> int:
        return self.chain(self.letter(k))[-1]

    def shift(self, k: int, m: int) -> int:
        """k^(m): move m steps along the chain of k (negative = towards k_min).

        Returns 0 below the chain start and r+1 above its end.
        """
        c = self.chain(self.letter(k))
        i = c.index(k) + m
        if i < 0:
            return 0
        if i >= len(c):
            return self.r + 1
        return c[i]

    def frozen_positions(self) -> frozenset[int]:
        """Final occurrences of each letter: k with k^+ = r + 1."""
        return frozenset(c[-1] for c in self._chains.values())

    @cached_property
    def betas(self) -> tuple[Root, ...]:
        return tuple(_beta_list(self.cartan, self._pos))

    def beta(self, k: int) -> Root:
        return self.betas[k - 1]

    def prefix(self, k: int) -> "ReducedWord":
        """The subword (i_k, ..., i_1)."""
        return ReducedWord(self.cartan, self.printed[self.r - k:])

    def to_json(self) -> dict:
        doc = self.cartan.to_json()
        doc["word"] = list(self.printed)
        return doc


def beta_sequence(word: ReducedWord) -> tuple[Root, ...]:
    """The positive roots s_{i_1}...s_{i_{k-1}}(alpha_{i_k}), k = 1..r."""
    return word.betas


def positive_roots_upto(cartan: CartanMatrix, height: int) -> frozenset[Root]:
    """All positive roots of height <= bound, real and imaginary.

    Classical height-by-height construction: gamma + alpha_i is a root iff
    the alpha_i-string through gamma extends upwards, i.e.
    p - <gamma, alpha_i^vee> > 0 with p the depth of the string below gamma.
    Root strings through real directions are unbroken, so p is computable
    from the lower layers.
    """
    n = cartan.n
    found: set[Root] = {simple_root(n, i) for i in range(1, n + 1)}
    layer: set[Root] = set(found)
    for _ in range(1, height):
        nxt: set[Root] = set()
        for gamma in layer:
            for i in range(1, n + 1):
                p = 0
                down = gamma
                while True:
                    down = tuple(
                        x - (1 if j == i - 1 else 0) for j, x in enumerate(down)
                    )
                    if down in found:
                        p += 1
                    else:
                        break
                if p - root_pairing(cartan, gamma, i) > 0:
                    up = tuple(
                        x + (1 if j == i - 1 else 0) for j, x in enumerate(gamma)
                    )
                    if up not in found:
                        nxt.add(up)
        if not nxt:
            break
        found |= nxt
        layer = nxt
    return frozenset(found)


def is_bracket_closed(
    cartan: CartanMatrix,
    roots: Iterable[Root],
    ambient=None,
    height: int = 64,
) -> bool:
    """Check closure under addition inside the ambient positive root set.

    ``ambient`` is a membership predicate; by default the precomputed set of
    positive roots up to the height bound is used.  Sums reaching beyond the
    bound are an error since membership cannot be decided.
    """
    roots = list(roots)
    for d in roots:
        if not is_positive_root_vector(d):
            raise ValidationError(f"{d} is not a positive root vector")
    if ambient is None:
        table = positive_roots_upto(cartan, height)

        def ambient(v: Root, _t=table) -> bool:
            if root_height(v) > height:
                raise HeightBoundExceededError(
                    f"root height {root_height(v)} exceeds bound {height}"
                )
            return v in _t

    members = set(roots)
    for a in roots:
        for b in roots:
            s = tuple(x + y for x, y in zip(a, b))
            if ambient(s) and s not in members:
                return False
    return True


def dim_V(word: ReducedWord, k: int) -> Root:
    """w_{i_k} - s_{i_1}...s_{i_k}(w_{i_k}) as a root-lattice vector."""
    if not 1 <= k <= word.r:
        raise ValidationError(f"position {k} out of range")
    lam = fundamental_weight(word.cartan.n, word.letter(k))
    for j in range(k, 0, -1):
        lam = reflect_weight(word.cartan, word.letter(j), lam)
    return tuple(-a for a in lam.alpha)


def b_vector(word: ReducedWord, lam: Weight) -> tuple[int, ...]:
    """Socle-series multiplicities b_k = -(s_{i_k}...s_{i_r}(lam))(alpha_{i_k}^vee).

    Requires lam dominant; entries are then nonnegative.
    """
    cartan = word.cartan
    if not lam.is_dominant(cartan):
        raise NonDominantError(f"{lam} is not dominant")
    out = [0] * word.r
    current = lam  # s_{i_{k+1}} ... s_{i_r}(lam), from k = r down to 1
    for k in range(word.r, 0, -1):
        out[k - 1] = current.pair_coroot(cartan, word.letter(k))
        current = reflect_weight(cartan, word.letter(k), current)
    return tuple(out)


@dataclass(frozen=True)
class QuiverOrientation:
    """An orientation of the Dynkin graph: arrows (source, target, multiplicity)."""

    cartan: CartanMatrix
    arrows: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        counts: dict[tuple[int, int], int] = {}
        for s, t, m in self.arrows:
            if s == t or m < 1:
                raise ValidationError(f"bad arrow {(s, t, m)}")
            key = (min(s, t), max(s, t))
            counts[key] = counts.get(key, 0) + m
        for i in range(1, self.cartan.n + 1):
            for j in range(i + 1, self.cartan.n + 1):
                if counts.get((i, j), 0) != self.cartan.q(i, j):
                    raise ValidationError(
                        f"orientation has {counts.get((i, j), 0)} arrows between "
                        f"{i},{j}; Cartan matrix demands {self.cartan.q(i, j)}"
                    )

    @staticmethod
    def from_arrows(rank: int, arrows: Iterable[Sequence[int]]) -> "QuiverOrientation":
        normalized = []
        for a in arrows:
            if len(a) == 2:
                s, t = a
                m = 1
            else:
                s, t, m = a
            normalized.append((s, t, m))
        cartan = CartanMatrix.from_edges(rank, [(s, t, m) for s, t, m in normalized])
        return QuiverOrientation(cartan, tuple(normalized))

    def is_acyclic(self) -> bool:
        children: dict[int, set[int]] = {i: set() for i in range(1, self.cartan.n + 1)}
        for s, t, _ in self.arrows:
            children[s].add(t)
        state: dict[int, int] = {}

        def visit(v: int) -> bool:
            state[v] = 1
            for u in children[v]:
                if state.get(u) == 1 or (state.get(u) is None and not visit(u)):
                    return False
            state[v] = 2
            return True

        return all(state.get(v) == 2 or visit(v) for v in children)


def euler_form(orientation: QuiverOrientation, d: Root, e: Root) -> int:
    """<d,e> = sum d_i e_i - sum over arrows d_{s(a)} e_{t(a)}."""
    total = sum(x * y for x, y in zip(d, e))
    for s, t, m in orientation.arrows:
        total -= m * d[s - 1] * e[t - 1]
    return total


def sym_form(cartan: CartanMatrix, d: Root, e: Root) -> int:
    """(d,e) = <d,e> + <e,d> = d C e^T; orientation independent."""
    return sum(
        cartan.c(i + 1, j + 1) * d[i] * e[j]
        for i in range(cartan.n)
        for j in range(cartan.n)
    )
