"""Word sums, the shuffle product, lowering/raising operators, and the
generating functions of Euler characteristics they compute.

A Word is a tuple of letters in 1..n; a WordSum is a finite integer
combination of words.  The empty word is the multiplicative unit of the
shuffle product.
"""
from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .cartan import CartanMatrix, ReducedWord, Weight, b_vector, fundamental_weight
from .errors import (
    DividedPowerNotIntegralError,
    NonIntegralCoefficientError,
    ValidationError,
)
from .laurent import LaurentPoly, VarTable

Word = tuple[int, ...]


def letter_content(word: Word, n: int) -> tuple[int, ...]:
    out = [0] * n
    for letter in word:
        out[letter - 1] += 1
    return tuple(out)


class WordSum:
    """Finite integer combination of words; canonical order is graded-lex."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, int] | None = None):
        clean: dict[Word, int] = {}
        if terms:
            for w, c in terms.items():
                if c:
                    clean[tuple(w)] = c
        self.terms = clean

    @staticmethod
    def unit() -> "WordSum":
        return WordSum({(): 1})

    @staticmethod
    def word(letters: Sequence[int], coef: int = 1) -> "WordSum":
        return WordSum({tuple(letters): coef})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, WordSum) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "WordSum") -> "WordSum":
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, 0) + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return WordSum(out)

    def __neg__(self) -> "WordSum":
        return WordSum({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "WordSum") -> "WordSum":
        return self + (-other)

    def scale(self, c: int) -> "WordSum":
        return WordSum({w: c * v for w, v in self.terms.items()})

    def exact_div_int(self, d: int) -> "WordSum":
        out = {}
        for w, c in self.terms.items():
            if c % d:
                raise DividedPowerNotIntegralError(
                    f"coefficient {c} not divisible by {d}"
                )
            out[w] = c // d
        return WordSum(out)

    def coefficient(self, word: Sequence[int]) -> int:
        return self.terms.get(tuple(word), 0)

    def word_count(self) -> int:
        return len(self.terms)

    def sorted_terms(self) -> list[tuple[Word, int]]:
        return sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]))

    def content_components(self, n: int) -> dict[tuple[int, ...], "WordSum"]:
        comps: dict[tuple[int, ...], dict[Word, int]] = {}
        for w, c in self.terms.items():
            comps.setdefault(letter_content(w, n), {})[w] = c
        return {k: WordSum(v) for k, v in comps.items()}

    def to_json(self) -> dict:
        return {
            "terms": [
                {"word": list(w), "coef": str(c)} for w, c in self.sorted_terms()
            ]
        }

    @staticmethod
    def from_json(doc: Mapping) -> "WordSum":
        return WordSum({tuple(t["word"]): int(t["coef"]) for t in doc["terms"]})

    def __repr__(self) -> str:  # pragma: no cover
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*w{list(w)}" for w, c in self.sorted_terms())


def _shuffle_words(u: Word, v: Word) -> dict[Word, int]:
    """Multiset of interleavings of two words, with multiplicities."""
    out: dict[Word, int] = {}
    # iterative DP over prefixes: table[(i, j)] = dict of interleavings
    table: dict[tuple[int, int], dict[Word, int]] = {(0, 0): {(): 1}}
    for i in range(len(u) + 1):
        for j in range(len(v) + 1):
            if (i, j) == (0, 0):
                continue
            acc: dict[Word, int] = {}
            if i > 0:
                for w, c in table[(i - 1, j)].items():
                    key = w + (u[i - 1],)
                    acc[key] = acc.get(key, 0) + c
            if j > 0:
                for w, c in table[(i, j - 1)].items():
                    key = w + (v[j - 1],)
                    acc[key] = acc.get(key, 0) + c
            table[(i, j)] = acc
    return table[(len(u), len(v))]


def shuffle(a: WordSum, b: WordSum) -> WordSum:
    """Bilinear extension of the commutative shuffle product."""
    out: dict[Word, int] = {}
    for u, cu in a.terms.items():
        for v, cv in b.terms.items():
            for w, mult in _shuffle_words(u, v).items():
                s = out.get(w, 0) + cu * cv * mult
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
    return WordSum(out)


def rho_e(cartan: CartanMatrix, lam: Weight, i: int, u: WordSum) -> WordSum:
    """Raising operator: strips a trailing letter i."""
    if not 1 <= i <= cartan.n:
        raise ValidationError(f"letter {i} out of range")
    out: dict[Word, int] = {}
    for w, c in u.terms.items():
        if w and w[-1] == i:
            key = w[:-1]
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return WordSum(out)


def rho_f(cartan: CartanMatrix, lam: Weight, i: int, u: WordSum) -> WordSum:
    """Lowering operator inserting the letter i at every position.

    The insertion after the prefix (j_1, ..., j_l) is weighted by
    (lam - a_{j_1} - ... - a_{j_l})(alpha_i^vee).
    """
    if not 1 <= i <= cartan.n:
        raise ValidationError(f"letter {i} out of range")
    base = lam.pair_coroot(cartan, i)
    out: dict[Word, int] = {}
    for w, c in u.terms.items():
        weight = base
        for l in range(len(w) + 1):
            if l > 0:
                weight -= cartan.c(i, w[l - 1])
            if weight:
                key = w[:l] + (i,) + w[l:]
                s = out.get(key, 0) + c * weight
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
    return WordSum(out)


def lowering_monomial(
    cartan: CartanMatrix,
    lam: Weight,
    letters_with_powers: Sequence[tuple[int, int]],
    start: WordSum | None = None,
) -> WordSum:
    """Apply a product of divided powers of lowering operators to a word sum.

    ``letters_with_powers`` is read left to right as the operator product, so
    the last pair acts first.  Divided powers are computed as iterated
    applications followed by one exact division by the product of factorials.
    """
    acc = start if start is not None else WordSum.unit()
    denom = 1
    for letter, power in reversed(list(letters_with_powers)):
        for _ in range(power):
            acc = rho_f(cartan, lam, letter, acc)
        f = 1
        for m in range(2, power + 1):
            f *= m
        denom *= f
    return acc.exact_div_int(denom) if denom > 1 else acc


def g_V(word: ReducedWord, k: int) -> WordSum:
    """Generating function of Euler characteristics of composition flags.

    Computed by acting with the divided-power lowering monomial prescribed by
    the socle-series multiplicities of the length-k prefix word.
    """
    prefix = word.prefix(k)
    cartan = word.cartan
    lam = fundamental_weight(cartan.n, prefix.letter(k))
    b = b_vector(prefix, lam)
    ops = [(prefix.letter(j), b[j - 1]) for j in range(1, k + 1)]
    return lowering_monomial(cartan, lam, ops)


def refined_word(word: ReducedWord, k: int, b: Sequence[int]) -> Word:
    """The word (i_k^{b_k}, ..., i_1^{b_1}) read left to right."""
    out: list[int] = []
    for j in range(k, 0, -1):
        out.extend([word.letter(j)] * b[j - 1])
    return tuple(out)


def _decompositions(u: Word, pattern: Sequence[int]) -> Iterable[tuple[int, ...]]:
    """All exponent tuples a with pattern^a == u (runs of length >= 0)."""
    p = len(pattern)

    def rec(pos: int, q: int, acc: list[int]):
        if q == p:
            if pos == len(u):
                yield tuple(acc)
            return
        letter = pattern[q]
        run = 0
        while True:
            yield from rec(pos + run, q + 1, acc + [run])
            if pos + run < len(u) and u[pos + run] == letter:
                run += 1
            else:
                return

    yield from rec(0, 0, [])


def _factorial(m: int) -> int:
    f = 1
    for x in range(2, m + 1):
        f *= x
    return f


def phi_eval(
    g: WordSum,
    pattern: Sequence[int],
    var_names: Sequence[str] | None = None,
    table: VarTable | None = None,
) -> LaurentPoly:
    """Evaluate a generating function on a one-parameter product.

    ``pattern`` lists the letters of the product left to right; variable q of
    the result is the parameter of the q-th factor.  The coefficient of
    t^a is the flag Euler characteristic for exponents a, i.e. the word
    coefficient divided by the product of factorials; integrality of that
    division is asserted.
    """
    p = len(pattern)
    if var_names is None:
        var_names = [f"t{q}" for q in range(1, p + 1)]
    if table is None:
        table = VarTable(var_names)
    idx = [table.index(name) for name in var_names]
    terms: dict[tuple[int, ...], int] = {}
    for u, coef in g.terms.items():
        for a in _decompositions(u, pattern):
            denom = 1
            for m in a:
                denom *= _factorial(m)
            if coef % denom:
                raise NonIntegralCoefficientError(
                    f"coefficient {coef} of word {list(u)} not divisible by {denom}"
                )
            exp = [0] * len(table)
            for q, m in enumerate(a):
                exp[idx[q]] += m
            key = tuple(exp)
            terms[key] = terms.get(key, 0) + coef // denom
    return LaurentPoly(table, terms)


def euler_of_reachable(
    expr: LaurentPoly,
    word: ReducedWord,
    pattern: Sequence[int],
    var_names: Sequence[str] | None = None,
) -> LaurentPoly:
    """Evaluate a cluster expression in the initial variables on a product.

    Substitutes the evaluated generating function of each initial cluster
    variable and asserts the result is polynomial; its coefficients are the
    Euler characteristics of the corresponding reachable module.
    """
    p = len(pattern)
    if var_names is None:
        var_names = [f"t{q}" for q in range(1, p + 1)]
    table = VarTable(var_names)
    used = {
        expr.vars.names[i]
        for exp in expr.terms
        for i, e in enumerate(exp)
        if e
    }
    images = {
        f"y{k}": phi_eval(g_V(word, k), pattern, var_names, table)
        for k in range(1, word.r + 1)
        if f"y{k}" in used
    }
    return expr.substitute(images, rational=True)
