"""Independent type-A oracle: symbolic unitriangular matrices, exact minors,
and the identification of evaluation functions with ordinary minors.
"""
from __future__ import annotations

from typing import Sequence

from .cartan import ReducedWord
from .errors import MismatchError, NotTypeAError, ValidationError
from .laurent import LaurentPoly, VarTable
from .words import g_V, phi_eval


def x_product(
    rank: int,
    letters: Sequence[int],
    var_names: Sequence[str],
    table: VarTable | None = None,
) -> list[list[LaurentPoly]]:
    """Product of elementary unitriangular factors, leftmost factor first.

    Factor q is the identity plus the q-th variable in position
    (letters[q], letters[q] + 1); the matrix size is rank + 1.
    """
    if len(letters) != len(var_names):
        raise ValidationError("need one variable per letter")
    m = rank + 1
    if table is None:
        table = VarTable(var_names)
    result = [
        [LaurentPoly.const(table, 1 if i == j else 0) for j in range(m)]
        for i in range(m)
    ]
    for letter, name in zip(letters, var_names):
        if not 1 <= letter <= rank:
            raise NotTypeAError(f"letter {letter} out of range 1..{rank}")
        t = LaurentPoly.var(table, name)
        # right-multiply by (I + t E_{letter, letter+1}): col letter+1 += t * col letter
        a, b = letter - 1, letter
        for i in range(m):
            result[i][b] = result[i][b] + result[i][a] * t
    return result


def _det_cofactor(rows: list[list[LaurentPoly]]) -> LaurentPoly:
    size = len(rows)
    table = rows[0][0].vars
    if size == 0:
        return LaurentPoly.one(table)
    if size == 1:
        return rows[0][0]
    acc = LaurentPoly.zero(table)
    for j in range(size):
        if not rows[0][j]:
            continue
        minor_rows = [
            [row[c] for c in range(size) if c != j] for row in rows[1:]
        ]
        term = rows[0][j] * _det_cofactor(minor_rows)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def _det_bareiss(rows: list[list[LaurentPoly]]) -> LaurentPoly:
    """Fraction-free elimination; every division is exact by construction."""
    size = len(rows)
    table = rows[0][0].vars
    a = [row[:] for row in rows]
    prev = LaurentPoly.one(table)
    sign = 1
    for k in range(size - 1):
        if not a[k][k]:
            pivot = next((i for i in range(k + 1, size) if a[i][k]), None)
            if pivot is None:
                return LaurentPoly.zero(table)
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).exact_div(prev)
            a[i][k] = LaurentPoly.zero(table)
        prev = a[k][k]
    det = a[size - 1][size - 1]
    return det if sign == 1 else -det


def minor(
    matrix: Sequence[Sequence[LaurentPoly]],
    row_set: Sequence[int],
    col_set: Sequence[int],
) -> LaurentPoly:
    """Exact determinant of the (row_set, col_set) submatrix (1-based sets)."""
    if len(row_set) != len(col_set):
        raise ValidationError("row and column sets must have equal size")
    rows = [[matrix[i - 1][j - 1] for j in sorted(col_set)] for i in sorted(row_set)]
    if len(rows) == 0:
        return LaurentPoly.one(matrix[0][0].vars)
    if len(rows) < 5:
        return _det_cofactor(rows)
    return _det_bareiss(rows)


def minor_spec_for_Vk(word: ReducedWord, k: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Row set {1..i_k} and its image under the word's prefix permutation.

    Letters act as adjacent transpositions, rightmost letter applied first.
    """
    if not word.cartan.is_type_a():
        raise NotTypeAError("minor specifications require the standard path labels")
    i_k = word.letter(k)
    rows = tuple(range(1, i_k + 1))
    cols = set(rows)
    for j in range(k, 0, -1):
        a = word.letter(j)
        swapped = set()
        for x in cols:
            if x == a:
                swapped.add(a + 1)
            elif x == a + 1:
                swapped.add(a)
            else:
                swapped.add(x)
        cols = swapped
    return rows, tuple(sorted(cols))


def cross_validate(word: ReducedWord, k: int) -> LaurentPoly:
    """Check the evaluation function of position k against the symbolic minor.

    The evaluation pattern is the whole word, leftmost letter i_r with
    variable t_r down to i_1 with t_1.  Returns the common polynomial.
    """
    r = word.r
    pattern = list(word.printed)
    var_names = [f"t{q}" for q in range(r, 0, -1)]
    table = VarTable(var_names)
    mat = x_product(word.cartan.n, pattern, var_names, table)
    rows, cols = minor_spec_for_Vk(word, k)
    lhs = minor(mat, rows, cols)
    rhs = phi_eval(g_V(word, k), pattern, var_names, table)
    if lhs != rhs:
        raise MismatchError(
            f"position {k}: minor {lhs!r} differs from evaluation {rhs!r}"
        )
    return lhs
