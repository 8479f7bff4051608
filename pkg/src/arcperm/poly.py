"""Exact sparse multivariate polynomials over the integers.

The variable alphabet is closed: t, q, u, y, z, x0, x1, ..., y1, y2, ...
(x0 is legal so that the convention "x0 maps to 1" can be expressed as a
substitution).  A polynomial is a map from monomials to nonzero integer
coefficients; monomials store only positive exponents, sorted in the fixed
variable order t < q < u < y < z < x0 < x1 < ... < y1 < y2 < ..., so equal
polynomials are structurally equal.  Printing and JSON list terms in graded
order (total degree, then exponents in the variable order), stable across
runs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Mapping

from .perms import Character, Permutation, SignedPermutation

_NAME_RE = re.compile(r"^(?:[tquyz]|x(?:0|[1-9][0-9]*)|y[1-9][0-9]*)$")
_BASE_ORDER = {"t": 0, "q": 1, "u": 2, "y": 3, "z": 4}

Monomial = tuple  # tuple of (name, exponent) pairs, canonical order, exps >= 1


def check_variable(name: str) -> str:
    if not isinstance(name, str) or not _NAME_RE.match(name):
        raise ValueError(f"{name!r} is not in the variable alphabet")
    return name


def variable_key(name: str) -> tuple[int, int]:
    base = _BASE_ORDER.get(name)
    if base is not None:
        return (base, 0)
    if name[0] == "x":
        return (5, int(name[1:]))
    return (6, int(name[1:]))


def _make_monomial(exponents: Mapping[str, int]) -> Monomial:
    items = []
    for name, exp in exponents.items():
        check_variable(name)
        if not isinstance(exp, int) or exp < 0:
            raise ValueError(f"exponent {exp!r} of {name} must be a nonnegative integer")
        if exp:
            items.append((name, exp))
    return tuple(sorted(items, key=lambda it: variable_key(it[0])))


def _merge_monomials(m1: Monomial, m2: Monomial) -> Monomial:
    exps = dict(m1)
    for name, exp in m2:
        exps[name] = exps.get(name, 0) + exp
    return tuple(sorted(exps.items(), key=lambda it: variable_key(it[0])))


def _term_sort_key(item):
    mono, _ = item
    degree = sum(exp for _, exp in mono)
    return (degree, tuple((variable_key(name), exp) for name, exp in mono))


class SparsePolynomial:
    """An exact integer polynomial in canonical sparse form.

    Use ``const``, ``var`` and ``from_terms`` to build values; the
    constructor trusts its argument to already be canonical.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[Monomial, int] | None = None):
        self._terms = terms or {}

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[Mapping[str, int], int]]) -> SparsePolynomial:
        acc: dict[Monomial, int] = {}
        for exponents, coeff in terms:
            mono = _make_monomial(exponents)
            total = acc.get(mono, 0) + coeff
            if total:
                acc[mono] = total
            else:
                acc.pop(mono, None)
        return cls(acc)

    # -- structure -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = const(other)
        return isinstance(other, SparsePolynomial) and self._terms == other._terms

    def __hash__(self) -> int:
        # constant polynomials compare equal to ints, so hash like them
        if not self._terms:
            return hash(0)
        if len(self._terms) == 1 and () in self._terms:
            return hash(self._terms[()])
        return hash(frozenset(self._terms.items()))

    def variables(self) -> set[str]:
        return {name for mono in self._terms for name, _ in mono}

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self._terms.items(), key=_term_sort_key)

    def constant_value(self) -> int:
        """The value of a constant polynomial; error if any variable occurs."""
        if not self._terms:
            return 0
        if len(self._terms) == 1 and () in self._terms:
            return self._terms[()]
        raise ValueError(f"{self} is not constant")

    # -- ring operations ------------------------------------------------------

    def __add__(self, other) -> SparsePolynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self._terms)
        for mono, coeff in other._terms.items():
            total = terms.get(mono, 0) + coeff
            if total:
                terms[mono] = total
            else:
                terms.pop(mono, None)
        return SparsePolynomial(terms)

    __radd__ = __add__

    def __neg__(self) -> SparsePolynomial:
        return SparsePolynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> SparsePolynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> SparsePolynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> SparsePolynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = _merge_monomials(m1, m2)
                total = terms.get(mono, 0) + c1 * c2
                if total:
                    terms[mono] = total
                else:
                    terms.pop(mono, None)
        return SparsePolynomial(terms)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> SparsePolynomial:
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"exponent {k!r} must be a nonnegative integer")
        result = const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def substitute(
        self,
        bindings: Mapping[str, SparsePolynomial | int],
        default: SparsePolynomial | int | None = None,
    ) -> SparsePolynomial:
        """Image under the ring homomorphism sending each bound variable to its
        binding; unbound variables stay themselves unless ``default`` is given."""
        bound = {check_variable(name): _coerce(value) for name, value in bindings.items()}
        total = SparsePolynomial()
        for mono, coeff in self._terms.items():
            term = const(coeff)
            for name, exp in mono:
                if name in bound:
                    base = bound[name]
                elif default is not None:
                    base = _coerce(default)
                else:
                    base = var(name)
                term = term * base**exp
            total = total + term
        return total

    # -- presentation ----------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks = []
        for mono, coeff in self.sorted_terms():
            body = "*".join(n if e == 1 else f"{n}^{e}" for n, e in mono)
            mag = abs(coeff)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            chunks.append((coeff < 0, text))
        negative, text = chunks[0]
        out = ("-" if negative else "") + text
        for negative, text in chunks[1:]:
            out += (" - " if negative else " + ") + text
        return out

    def __repr__(self) -> str:
        return f"SparsePolynomial({self})"

    def to_json(self) -> list[dict]:
        return [
            {"coeff": str(coeff), "monomial": {name: exp for name, exp in mono}}
            for mono, coeff in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, data: list[dict]) -> SparsePolynomial:
        return cls.from_terms((term["monomial"], int(term["coeff"])) for term in data)


def _coerce(value) -> SparsePolynomial:
    if isinstance(value, SparsePolynomial):
        return value
    if isinstance(value, int):
        return const(value)
    return NotImplemented


def const(c: int) -> SparsePolynomial:
    return SparsePolynomial({(): c} if c else {})


def var(name: str) -> SparsePolynomial:
    check_variable(name)
    return SparsePolynomial({((name, 1),): 1})


def poly_product(factors: Iterable[SparsePolynomial | int]) -> SparsePolynomial:
    return reduce(lambda a, b: a * b, factors, const(1))


def q_bracket(n: int, base: SparsePolynomial | int) -> SparsePolynomial:
    """The sum 1 + base + base^2 + ... + base^(n-1); zero when n = 0."""
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"bracket size {n!r} must be a nonnegative integer")
    base = _coerce(base)
    total = SparsePolynomial()
    power = const(1)
    for _ in range(n):
        total = total + power
        power = power * base
    return total


class ExactDivisionError(ArithmeticError):
    """Raised when polynomial division leaves a nonzero remainder."""

    def __init__(self, remainder: SparsePolynomial):
        self.remainder = remainder
        super().__init__(f"division is not exact; remainder {remainder}")


def exact_div(p: SparsePolynomial, d: SparsePolynomial) -> SparsePolynomial:
    """Exact quotient p / d in the polynomial ring.

    Runs the single-divisor reduction in a graded order; when d divides p
    every leading coefficient step is an exact integer division, and a
    nonzero final remainder proves non-divisibility (ExactDivisionError).
    """
    d = _coerce(d)
    if d.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    names = sorted(p.variables() | d.variables(), key=variable_key)
    position = {name: i for i, name in enumerate(names)}

    def to_vec(mono: Monomial) -> tuple[int, ...]:
        out = [0] * len(names)
        for name, exp in mono:
            out[position[name]] = exp
        return tuple(out)

    def graded(vec: tuple[int, ...]):
        return (sum(vec), vec)

    def from_vecs(vecs: dict[tuple[int, ...], int]) -> SparsePolynomial:
        terms = {}
        for vec, coeff in vecs.items():
            mono = tuple((names[i], e) for i, e in enumerate(vec) if e)
            terms[mono] = coeff
        return SparsePolynomial(terms)

    work = {to_vec(m): c for m, c in p._terms.items()}
    divisor = {to_vec(m): c for m, c in d._terms.items()}
    d_lead = max(divisor, key=graded)
    d_coeff = divisor[d_lead]

    quotient: dict[tuple[int, ...], int] = {}
    remainder: dict[tuple[int, ...], int] = {}
    while work:
        lead = max(work, key=graded)
        coeff = work.pop(lead)
        if all(a >= b for a, b in zip(lead, d_lead)) and coeff % d_coeff == 0:
            q_vec = tuple(a - b for a, b in zip(lead, d_lead))
            q_coeff = coeff // d_coeff
            quotient[q_vec] = quotient.get(q_vec, 0) + q_coeff
            for vec, c in divisor.items():
                if vec == d_lead:
                    continue
                target = tuple(a + b for a, b in zip(q_vec, vec))
                total = work.get(target, 0) - q_coeff * c
                if total:
                    work[target] = total
                else:
                    work.pop(target, None)
        else:
            remainder[lead] = coeff
    if remainder:
        raise ExactDivisionError(from_vecs(remainder))
    return from_vecs(quotient)


# -- statistic-weighted enumerators -------------------------------------------


@dataclass(frozen=True)
class WeightSpec:
    """Selects the weight monomial attached to each permutation.

    t_stat: exponent of t, one of "inv", "des", "fdes" (inv is computed on
    the absolute word for signed permutations).  q_stat: exponent of q,
    "maj" or "fmaj".  descent_vars multiplies x_i per descent position i,
    shifted down by descent_shift with x0 counting as 1.  neg_vars
    multiplies y_i per negative position.  character contributes a +-1
    coefficient.
    """

    t_stat: str | None = None
    q_stat: str | None = None
    descent_vars: bool = False
    descent_shift: int = 0
    neg_vars: bool = False
    character: Character | None = None

    def __post_init__(self):
        if self.t_stat not in (None, "inv", "des", "fdes"):
            raise ValueError(f"unknown t statistic {self.t_stat!r}")
        if self.q_stat not in (None, "maj", "fmaj"):
            raise ValueError(f"unknown q statistic {self.q_stat!r}")


def _weight_term(p, spec: WeightSpec) -> tuple[dict[str, int], int]:
    signed = isinstance(p, SignedPermutation)
    if not signed and (
        spec.t_stat == "fdes" or spec.q_stat == "fmaj" or spec.neg_vars
    ):
        raise ValueError("flag statistics need signed permutations")
    des_set = p.descent_set()
    exponents: dict[str, int] = {}
    if spec.t_stat == "inv":
        exponents["t"] = p.inv()
    elif spec.t_stat == "des":
        exponents["t"] = len(des_set)
    elif spec.t_stat == "fdes":
        exponents["t"] = p.fdes()
    if spec.q_stat == "maj":
        exponents["q"] = sum(des_set)
    elif spec.q_stat == "fmaj":
        exponents["q"] = p.fmaj()
    if spec.descent_vars:
        for i in des_set:
            index = i - spec.descent_shift
            if index < 0:
                raise ValueError(f"descent shift {spec.descent_shift} drops below x0")
            if index:
                exponents[f"x{index}"] = exponents.get(f"x{index}", 0) + 1
    if spec.neg_vars:
        for i in p.neg_set():
            exponents[f"y{i}"] = exponents.get(f"y{i}", 0) + 1
    coeff = spec.character.of(p) if spec.character is not None else 1
    return exponents, coeff


def enumerator(
    elements: Iterable[Permutation | SignedPermutation], spec: WeightSpec
) -> SparsePolynomial:
    """Sum of weight monomials over the given permutations."""
    acc: dict[Monomial, int] = {}
    for p in elements:
        exponents, coeff = _weight_term(p, spec)
        mono = _make_monomial(exponents)
        total = acc.get(mono, 0) + coeff
        if total:
            acc[mono] = total
        else:
            acc.pop(mono, None)
    return SparsePolynomial(acc)
