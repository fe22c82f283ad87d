"""Exact Laurent polynomials in ``q`` with rational coefficients.

Coefficients are stored as Python ``int`` whenever they are integral and as
``fractions.Fraction`` otherwise, so the common integral case never pays for
rational arithmetic.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

Number = Union[int, Fraction]


def as_number(x) -> Number:
    """Normalise an int/Fraction/str to the canonical exact scalar."""
    if isinstance(x, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, str):
        return as_number(Fraction(x))
    raise TypeError(f"not an exact scalar: {x!r}")


def render_number(c: Number) -> str:
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


class LaurentCoeff:
    """Immutable element of Q[q, q^-1].

    >>> q = LaurentCoeff.q()
    >>> str((q - q**-1) * (q + q**-1))
    '-1*q^-2 + 1*q^2'
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Number] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                c = as_number(c)
                if c:
                    clean[int(e)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentCoeff":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c) -> "LaurentCoeff":
        return cls({0: c})

    @classmethod
    def monomial(cls, e: int, c=1) -> "LaurentCoeff":
        return cls({e: c})

    @classmethod
    def q(cls, e: int = 1) -> "LaurentCoeff":
        return cls._raw({e: 1})

    @classmethod
    def coerce(cls, x) -> "LaurentCoeff":
        if isinstance(x, LaurentCoeff):
            return x
        return cls.const(x)

    @property
    def terms(self) -> dict[int, Number]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, LaurentCoeff):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentCoeff._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentCoeff._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        out: dict[int, Number] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return LaurentCoeff._raw({e: as_number(c) for e, c in out.items()})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials are invertible in the Laurent ring")
            ((e, c),) = self._terms.items()
            return LaurentCoeff({e * n: 1 / Fraction(c) ** (-n)})
        out = LaurentCoeff.const(1)
        for _ in range(n):
            out = out * self
        return out

    def shift(self, e: int) -> "LaurentCoeff":
        """Multiply by ``q**e``."""
        return LaurentCoeff._raw({k + e: c for k, c in self._terms.items()})

    def eval_at(self, q0) -> Number:
        return eval_at(self, q0)

    def min_exp(self) -> int:
        return min(self._terms)

    def max_exp(self) -> int:
        return max(self._terms)

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"LaurentCoeff({render(self)!r})"


def _coerce_or_none(x):
    if isinstance(x, LaurentCoeff):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return LaurentCoeff.const(x)
    return None


ZERO = LaurentCoeff()
ONE = LaurentCoeff.const(1)


def add(x: LaurentCoeff, y: LaurentCoeff) -> LaurentCoeff:
    return x + y


def mul(x: LaurentCoeff, y: LaurentCoeff) -> LaurentCoeff:
    return x * y


def eval_at(x: LaurentCoeff, q0) -> Number:
    """Exact substitution ``q := q0``; ``q0`` must be a nonzero rational."""
    q0 = Fraction(q0)
    if q0 == 0:
        raise ValueError("cannot specialise a Laurent polynomial at q = 0")
    total = Fraction(0)
    for e, c in x.items():
        total += c * q0**e
    return as_number(total)


def render(x: LaurentCoeff) -> str:
    """Canonical text: ascending exponents, ``<rational>*q^<int>`` joined by `` + ``."""
    if not x._terms:
        return "0"
    parts = []
    for e in sorted(x._terms):
        c = render_number(x._terms[e])
        parts.append(c if e == 0 else f"{c}*q^{e}")
    return " + ".join(parts)


_TERM = re.compile(r"^\s*(-?\d+(?:/\d+)?)(?:\*q\^(-?\d+))?\s*$")


def parse(text: str) -> LaurentCoeff:
    """Inverse of :func:`render` (accepts exactly the canonical form)."""
    text = text.strip()
    if text == "0":
        return ZERO
    terms: dict[int, Number] = {}
    for chunk in text.split(" + "):
        m = _TERM.match(chunk)
        if not m:
            raise ValueError(f"malformed Laurent term {chunk!r}")
        e = int(m.group(2)) if m.group(2) is not None else 0
        if e in terms:
            raise ValueError(f"repeated exponent {e} in {text!r}")
        terms[e] = as_number(Fraction(m.group(1)))
    return LaurentCoeff(terms)


def from_terms(pairs: Iterable[tuple[int, Number]]) -> LaurentCoeff:
    out: dict[int, Number] = {}
    for e, c in pairs:
        out[e] = out.get(e, 0) + c
    return LaurentCoeff(out)
