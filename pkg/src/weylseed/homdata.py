"""Integer Hom-dimension tables over the endomorphism algebra of a word,
standard-module data, the Ringel form on standards, and mutation of
dimension vectors and filtration-multiplicity vectors.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

from .cartan import ReducedWord, sym_form
from .errors import NegativeEntryError, ValidationError
from .quiver import ExchangeMatrix

logger = logging.getLogger(__name__)

Vec = tuple[int, ...]


@dataclass(frozen=True)
class HomTables:
    """VM[k][s] = dim Hom(V_k, M_s); VV[k][s] = dim Hom(V_k, V_s).

    Column s of VM is the dimension vector of the standard module attached
    to position s; VV columns are its partial chain sums.  d_delta holds the
    total dimensions of the standards (column sums of VM).
    """

    word_printed: tuple[int, ...]
    VM: tuple[Vec, ...]
    VV: tuple[Vec, ...]
    d_delta: Vec

    def delta_column(self, s: int) -> Vec:
        return tuple(self.VM[k][s - 1] for k in range(len(self.VM)))

    def projective_column(self, k: int) -> Vec:
        return tuple(self.VV[i][k - 1] for i in range(len(self.VV)))

    def cartan_matrix(self) -> tuple[Vec, ...]:
        """Rows i, columns k: dim Hom(V_i, V_k); columns are projective vectors."""
        return self.VV

    def dimvec_of_delta(self, a: Sequence[int]) -> Vec:
        """Image of a filtration-multiplicity vector under the VM columns."""
        r = len(self.VM)
        return tuple(
            sum(self.VM[k][s] * a[s] for s in range(r)) for k in range(r)
        )

    def to_json(self) -> dict:
        return {
            "word": list(self.word_printed),
            "VM": [list(row) for row in self.VM],
            "VV": [list(row) for row in self.VV],
            "d_delta": list(self.d_delta),
        }


def hom_tables(word: ReducedWord) -> HomTables:
    """Tables computed from the root sequence and the symmetrized form.

    dim Hom(V_k, M_s) is 0 for k < s, 1 for k = s, and for k > s a chain sum
    of symmetrized-form values, plus 1 when the letters agree; the chain
    walks k, k-, k--, ... while it stays above s.
    """
    cartan = word.cartan
    r = word.r
    betas = word.betas
    vm = [[0] * r for _ in range(r)]
    for s in range(1, r + 1):
        for k in range(1, r + 1):
            if k < s:
                continue
            if k == s:
                vm[k - 1][s - 1] = 1
                continue
            total = 1 if word.letter(k) == word.letter(s) else 0
            cur = k
            while cur > s:
                total += sym_form(cartan, betas[cur - 1], betas[s - 1])
                cur = word.k_minus(cur)
            vm[k - 1][s - 1] = total
    vv = [[0] * r for _ in range(r)]
    for s in range(1, r + 1):
        chain_below = [t for t in word.chain(word.letter(s)) if t <= s]
        for k in range(1, r + 1):
            vv[k - 1][s - 1] = sum(vm[k - 1][t - 1] for t in chain_below)
    d_delta = tuple(sum(vm[k][s] for k in range(r)) for s in range(r))
    return HomTables(
        word.printed,
        tuple(tuple(row) for row in vm),
        tuple(tuple(row) for row in vv),
        d_delta,
    )


def ringel_form_delta(word: ReducedWord, k: int, s: int) -> int:
    """Euler form of two standard modules: 0 below, 1 on, and the
    symmetrized root form above the diagonal."""
    if not (1 <= k <= word.r and 1 <= s <= word.r):
        raise ValidationError("index out of range")
    if k < s:
        return 0
    if k == s:
        return 1
    return sym_form(word.cartan, word.beta(k), word.beta(s))


def initial_dimvec_labels(tables: HomTables) -> tuple[Vec, ...]:
    """Dimension vectors of the projectives, i.e. the VV columns."""
    r = len(tables.VV)
    return tuple(tables.projective_column(k) for k in range(1, r + 1))


def initial_delta_labels(word: ReducedWord) -> tuple[Vec, ...]:
    """Interval indicator of positions k, k-, ..., k_min for each k."""
    r = word.r
    out = []
    for k in range(1, r + 1):
        vec = [0] * r
        cur = k
        while cur > 0:
            vec[cur - 1] = 1
            cur = word.k_minus(cur)
        out.append(tuple(vec))
    return tuple(out)


def _weighted_sum(pairs: Sequence[tuple[int, int]], labels: Sequence[Vec], r: int) -> Vec:
    acc = [0] * r
    for vertex, mult in pairs:
        lab = labels[vertex - 1]
        for i in range(r):
            acc[i] += mult * lab[i]
    return tuple(acc)


@dataclass(frozen=True)
class MutationStep:
    new_label: Vec
    labels: tuple[Vec, ...]
    matrix: ExchangeMatrix
    picked_in_side: bool
    dominated: bool


def _mutate_labels(
    matrix: ExchangeMatrix,
    labels: Sequence[Vec],
    k: int,
    weight,
    entrywise_max: bool,
) -> MutationStep:
    r = matrix.r
    if len(labels) != r:
        raise ValidationError("label count must match vertex count")
    in_sum = _weighted_sum(matrix.in_neighbors(k), labels, r)
    out_sum = _weighted_sum(matrix.out_neighbors(k), labels, r)
    in_total = weight(in_sum)
    out_total = weight(out_sum)
    picked = in_sum if in_total > out_total else out_sum
    other = out_sum if in_total > out_total else in_sum
    dominated = all(p >= o for p, o in zip(picked, other))
    if entrywise_max and not dominated:
        logger.warning(
            "dominance violation at vertex %d: picked=%s other=%s totals=(%d,%d)",
            k,
            picked,
            other,
            in_total,
            out_total,
        )
        picked = tuple(max(p, o) for p, o in zip(picked, other))
    new_label = tuple(p - d for p, d in zip(picked, labels[k - 1]))
    if any(x < 0 for x in new_label):
        raise NegativeEntryError(
            f"mutation at {k} left the reachable component: {new_label}"
        )
    new_labels = list(labels)
    new_labels[k - 1] = new_label
    return MutationStep(
        new_label, tuple(new_labels), matrix.mutate(k), in_total > out_total, dominated
    )


def mutate_dimvec(
    matrix: ExchangeMatrix, labels: Sequence[Vec], k: int
) -> MutationStep:
    """Exchange the dimension-vector label at a mutable vertex.

    The replacement is minus the old label plus the entrywise maximum of the
    two arrow-weighted neighbor sums; the side with the larger total is
    expected to dominate coordinatewise, and violations are logged.
    """
    return _mutate_labels(matrix, labels, k, lambda v: sum(v), True)


def mutate_delta_dimvec(
    matrix: ExchangeMatrix,
    labels: Sequence[Vec],
    k: int,
    d_delta: Sequence[int],
) -> MutationStep:
    """Same exchange on filtration-multiplicity vectors.

    The side is selected purely by the neighbor sums weighted with the total
    dimensions of the standard modules; unlike the dimension-vector rule the
    chosen side need not dominate the other one coordinatewise.
    """
    return _mutate_labels(
        matrix, labels, k, lambda v: sum(x * w for x, w in zip(v, d_delta)), False
    )
