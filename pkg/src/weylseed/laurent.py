"""Exact multivariate Laurent polynomials over arbitrary-precision integers.

Terms are kept in a dict keyed by exponent tuples; canonical (serialization
and comparison) order is graded lexicographic.  All operations are pure and
return new objects.
"""
from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .errors import (
    NonUnitNegativePowerError,
    NotDivisibleError,
    NotPolynomialAfterSubstitutionError,
    ValidationError,
    VarTableMismatchError,
)


class VarTable:
    """Ordered, unique variable names shared by a family of polynomials."""

    __slots__ = ("names", "_index")

    def __init__(self, names: Sequence[str]):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValidationError("variable names must be unique")
        self._index = {name: i for i, name in enumerate(self.names)}

    def __len__(self) -> int:
        return len(self.names)

    def __eq__(self, other) -> bool:
        return isinstance(other, VarTable) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:  # pragma: no cover
        return f"VarTable{self.names}"

    def index(self, name: str) -> int:
        return self._index[name]

    @staticmethod
    def indexed(prefix: str, count: int, start: int = 1) -> "VarTable":
        return VarTable(tuple(f"{prefix}{i}" for i in range(start, start + count)))


def _grlex_key(exp: tuple[int, ...]) -> tuple:
    return (sum(exp), exp)


class LaurentPoly:
    """Immutable Laurent polynomial; no zero coefficients are stored."""

    __slots__ = ("vars", "terms")

    def __init__(self, table: VarTable, terms: Mapping[tuple[int, ...], int]):
        self.vars = table
        width = len(table)
        clean: dict[tuple[int, ...], int] = {}
        for exp, coef in terms.items():
            if len(exp) != width:
                raise ValidationError("exponent tuple width mismatch")
            if coef:
                clean[tuple(exp)] = coef
        self.terms = clean

    # -- constructors ---------------------------------------------------

    @staticmethod
    def const(table: VarTable, c: int) -> "LaurentPoly":
        return LaurentPoly(table, {(0,) * len(table): c} if c else {})

    @staticmethod
    def zero(table: VarTable) -> "LaurentPoly":
        return LaurentPoly(table, {})

    @staticmethod
    def one(table: VarTable) -> "LaurentPoly":
        return LaurentPoly.const(table, 1)

    @staticmethod
    def var(table: VarTable, name: str, power: int = 1) -> "LaurentPoly":
        exp = [0] * len(table)
        exp[table.index(name)] = power
        return LaurentPoly(table, {tuple(exp): 1})

    @staticmethod
    def monomial(table: VarTable, exp: Sequence[int], coef: int = 1) -> "LaurentPoly":
        return LaurentPoly(table, {tuple(exp): coef})

    # -- basic structure ------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentPoly)
            and self.vars == other.vars
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.vars, frozenset(self.terms.items())))

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]))

    def is_one(self) -> bool:
        return self.terms == {(0,) * len(self.vars): 1}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant_value(self) -> int:
        """The constant term (the whole value if the polynomial is constant)."""
        return self.terms.get((0,) * len(self.vars), 0)

    def _check(self, other: "LaurentPoly") -> None:
        if self.vars != other.vars:
            raise VarTableMismatchError("operands use different variable tables")

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        out = dict(self.terms)
        for exp, coef in other.terms.items():
            s = out.get(exp, 0) + coef
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return LaurentPoly(self.vars, out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(exp, 0) + c1 * c2
                if s:
                    out[exp] = s
                else:
                    out.pop(exp, None)
        return LaurentPoly(self.vars, out)

    def scale(self, c: int) -> "LaurentPoly":
        return LaurentPoly(self.vars, {e: c * v for e, v in self.terms.items()})

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if not self.is_monomial():
                raise NonUnitNegativePowerError(
                    "negative powers only of single-term polynomials"
                )
            ((exp, coef),) = self.terms.items()
            if coef * coef != 1:
                raise NonUnitNegativePowerError("coefficient is not a unit")
            return LaurentPoly.monomial(
                self.vars, tuple(k * e for e in exp), coef if k % 2 else 1
            )
        result = LaurentPoly.one(self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def min_exponents(self) -> tuple[int, ...]:
        """Per-variable minimum exponent over all terms (0 for the zero poly)."""
        if not self.terms:
            return (0,) * len(self.vars)
        cols = zip(*self.terms.keys())
        return tuple(min(col) for col in cols)

    def shift(self, offset: Sequence[int]) -> "LaurentPoly":
        """Multiply by the monomial with the given exponent vector."""
        return LaurentPoly(
            self.vars,
            {tuple(a + b for a, b in zip(e, offset)): c for e, c in self.terms.items()},
        )

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises NotDivisibleError when no Laurent quotient exists."""
        self._check(other)
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return LaurentPoly.zero(self.vars)
        # normalize to honest polynomials so the grlex leading term argument applies
        sa = self.min_exponents()
        sb = other.min_exponents()
        num = self.shift(tuple(-x for x in sa))
        den = other.shift(tuple(-x for x in sb))
        lead_exp, lead_coef = max(
            den.terms.items(), key=lambda t: _grlex_key(t[0])
        )
        quot: dict[tuple[int, ...], int] = {}
        rem = dict(num.terms)
        while rem:
            r_exp, r_coef = max(rem.items(), key=lambda t: _grlex_key(t[0]))
            q_exp = tuple(a - b for a, b in zip(r_exp, lead_exp))
            if any(x < 0 for x in q_exp) or r_coef % lead_coef:
                raise NotDivisibleError("no exact Laurent quotient")
            q_coef = r_coef // lead_coef
            quot[q_exp] = q_coef
            for e, c in den.terms.items():
                key = tuple(a + b for a, b in zip(q_exp, e))
                s = rem.get(key, 0) - q_coef * c
                if s:
                    rem[key] = s
                else:
                    rem.pop(key, None)
        offset = tuple(a - b for a, b in zip(sa, sb))
        return LaurentPoly(self.vars, quot).shift(offset)

    def divides(self, other: "LaurentPoly") -> bool:
        try:
            other.exact_div(self)
            return True
        except NotDivisibleError:
            return False

    # -- substitution and grading ---------------------------------------

    def substitute(
        self,
        images: Mapping[str, "LaurentPoly"],
        rational: bool = False,
    ) -> "LaurentPoly":
        """Replace variables by polynomial images, exactly.

        Variables occurring with negative exponents must map to single-term
        unit-coefficient images unless ``rational`` is set, in which case the
        substituted value is computed as an exact quotient and must come out
        polynomial (NotPolynomialAfterSubstitutionError otherwise).
        """
        if not self.terms:
            return self
        tables = {img.vars for img in images.values()}
        if len(tables) > 1:
            raise VarTableMismatchError("images use different variable tables")
        target = tables.pop() if tables else self.vars
        width = len(self.vars)
        mins = self.min_exponents()
        img_list: list[LaurentPoly | None] = [None] * width
        for i, name in enumerate(self.vars.names):
            img = images.get(name)
            if img is None and any(e[i] for e in self.terms):
                # identity image requires the variable to exist in the target
                if name not in target._index:
                    raise ValidationError(f"no image for variable {name}")
                img = LaurentPoly.var(target, name)
            img_list[i] = img
        shifts = [0] * width
        for i, mn in enumerate(mins):
            if mn < 0:
                img = img_list[i]
                assert img is not None
                if img.is_monomial():
                    ((_, coef),) = img.terms.items()
                    if coef * coef == 1:
                        continue  # invertible image, inverted term by term
                if not rational:
                    raise NonUnitNegativePowerError(
                        f"variable {self.vars.names[i]} has negative exponents and a "
                        "non-unit image; use rational mode"
                    )
                shifts[i] = -mn
        numerator = LaurentPoly.zero(target)
        for exp, coef in self.terms.items():
            term = LaurentPoly.const(target, coef)
            for i, e in enumerate(exp):
                e += shifts[i]
                if e == 0:
                    continue
                img = img_list[i]
                assert img is not None
                term = term * img**e
            numerator = numerator + term
        denominator = LaurentPoly.one(target)
        for i, s in enumerate(shifts):
            if s:
                img = img_list[i]
                assert img is not None
                denominator = denominator * img**s
        if denominator.is_one():
            return numerator
        if not denominator:
            raise NotPolynomialAfterSubstitutionError(
                "an inverted variable has the zero polynomial as image"
            )
        try:
            return numerator.exact_div(denominator)
        except NotDivisibleError as exc:
            raise NotPolynomialAfterSubstitutionError(
                "substituted value is not a Laurent polynomial"
            ) from exc

    def multidegree(
        self, grading: Mapping[str, Sequence[int]]
    ) -> tuple[int, ...] | None:
        """Common graded degree of all terms, or None when inhomogeneous."""
        if not self.terms:
            return None
        degs = [tuple(grading[name]) for name in self.vars.names]
        width = len(next(iter(degs)))
        result: tuple[int, ...] | None = None
        for exp in self.terms:
            d = tuple(
                sum(e * degs[i][j] for i, e in enumerate(exp)) for j in range(width)
            )
            if result is None:
                result = d
            elif result != d:
                return None
        return result

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "vars": list(self.vars.names),
            "terms": [
                {"exp": list(exp), "coef": str(coef)}
                for exp, coef in self.sorted_terms()
            ],
        }

    @staticmethod
    def from_json(doc: Mapping, table: VarTable | None = None) -> "LaurentPoly":
        t = table or VarTable(doc["vars"])
        return LaurentPoly(
            t, {tuple(item["exp"]): int(item["coef"]) for item in doc["terms"]}
        )

    def __repr__(self) -> str:  # pragma: no cover
        if not self.terms:
            return "0"
        bits = []
        for exp, coef in self.sorted_terms():
            mono = "*".join(
                f"{n}^{e}" if e != 1 else n
                for n, e in zip(self.vars.names, exp)
                if e
            )
            bits.append(f"{coef}" + (f"*{mono}" if mono else ""))
        return " + ".join(bits)


def product(table: VarTable, factors: Iterable[LaurentPoly]) -> LaurentPoly:
    out = LaurentPoly.one(table)
    for f in factors:
        out = out * f
    return out
