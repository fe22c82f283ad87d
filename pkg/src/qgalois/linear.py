"""Sparse linear combinations over the Laurent ring.

Every element type of the package (P, SU_q(2), C, P⊗C, P⊗P, ...) is a finite
sum ``Σ c_b · b`` over some basis with :class:`~qgalois.coeff.LaurentCoeff`
coefficients.  Internally the q-power is folded into the dictionary key, i.e.
the storage is ``{(basis_key, exponent): rational}``.  This keeps the hot loops
(normal forms, coactions, the canonical map) on plain ``dict``/``int``
arithmetic; the grouped view is rebuilt on demand by :attr:`Element.terms`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable

from .coeff import LaurentCoeff, Number, as_number, render, render_number

Raw = dict  # {(key, e): Number}


def acc(out: Raw, src: Raw, shift: int = 0, factor: Number = 1) -> Raw:
    """``out += factor * q**shift * src`` in place."""
    if shift == 0 and factor == 1:
        for k, c in src.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                del out[k]
        return out
    for (b, e), c in src.items():
        k = (b, e + shift)
        s = out.get(k, 0) + factor * c
        if s:
            out[k] = s
        else:
            del out[k]
    return out


def acc_term(out: Raw, key, e: int, c: Number) -> None:
    k = (key, e)
    s = out.get(k, 0) + c
    if s:
        out[k] = s
    else:
        out.pop(k, None)


def scale_raw(src: Raw, coeff: LaurentCoeff) -> Raw:
    out: Raw = {}
    for e2, c2 in coeff.items():
        acc(out, src, e2, c2)
    return out


def from_grouped(terms) -> Raw:
    out: Raw = {}
    for key, coeff in terms.items():
        coeff = LaurentCoeff.coerce(coeff)
        for e, c in coeff.items():
            acc_term(out, key, e, c)
    return out


def group(raw: Raw) -> dict:
    grouped: dict = {}
    for (b, e), c in raw.items():
        grouped.setdefault(b, {})[e] = c
    return {b: LaurentCoeff._raw(t) for b, t in grouped.items()}


def specialize(raw: Raw, q0) -> dict:
    """Evaluate every coefficient at ``q = q0``; returns ``{key: rational}``."""
    q0 = Fraction(q0)
    if q0 == 0:
        raise ValueError("cannot specialise at q = 0")
    out: dict = {}
    for (b, e), c in raw.items():
        out[b] = out.get(b, 0) + c * q0**e
    return {b: as_number(v) for b, v in out.items() if v}


def coeff_prefix(c: LaurentCoeff) -> tuple[bool, str]:
    """Return ``(negative, text)`` for a coefficient printed in front of a basis element."""
    items = list(c.items())
    if len(items) == 1:
        ((e, r),) = items
        neg = r < 0
        r = -r if neg else r
        if e == 0:
            return neg, "" if r == 1 else render_number(r)
        if r == 1:
            return neg, f"q^{e}"
        return neg, f"{render_number(r)}*q^{e}"
    return False, f"({render(c)})"


class Element:
    """Base class: immutable sparse linear combination.

    Subclasses define ``_render_key``, ``_sort_key`` and ``_unit_key``.
    """

    __slots__ = ("_d",)
    _unit_key: Hashable = None

    def __init__(self, terms=None):
        self._d = from_grouped(terms) if terms else {}

    @classmethod
    def _wrap(cls, raw: Raw):
        obj = cls.__new__(cls)
        obj._d = raw
        return obj

    @classmethod
    def basis(cls, key, coeff=1):
        return cls({key: coeff})

    @classmethod
    def zero(cls):
        return cls._wrap({})

    @classmethod
    def one(cls):
        return cls._wrap({(cls._unit_key, 0): 1})

    @property
    def raw(self) -> Raw:
        return self._d

    @property
    def terms(self) -> dict:
        """``{basis_key: LaurentCoeff}`` view; no zero coefficients."""
        return group(self._d)

    def coefficient(self, key) -> LaurentCoeff:
        return LaurentCoeff({e: c for (b, e), c in self._d.items() if b == key})

    def support(self) -> set:
        return {b for (b, _e) in self._d}

    def is_zero(self) -> bool:
        return not self._d

    def __bool__(self):
        return bool(self._d)

    def __len__(self):
        return len(self.support())

    def __eq__(self, other):
        if type(other) is type(self):
            return self._d == other._d
        if isinstance(other, (int, Fraction)) and other == 0:
            return not self._d
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._d.items()))

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._wrap(acc(dict(self._d), other._d))

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._wrap(acc(dict(self._d), other._d, 0, -1))

    def __neg__(self):
        return self._wrap({k: -c for k, c in self._d.items()})

    def scale(self, coeff) -> "Element":
        coeff = LaurentCoeff.coerce(coeff)
        return self._wrap(scale_raw(self._d, coeff))

    def __rmul__(self, coeff):
        if isinstance(coeff, (LaurentCoeff, int, Fraction)):
            return self.scale(coeff)
        return NotImplemented

    def shift(self, e: int) -> "Element":
        return self._wrap(acc({}, self._d, e))

    def specialize(self, q0) -> dict:
        return specialize(self._d, q0)

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: self._sort_key(kv[0]))

    # rendering -----------------------------------------------------------
    @classmethod
    def _render_key(cls, key) -> str:  # pragma: no cover - abstract
        raise NotImplementedError

    @classmethod
    def _sort_key(cls, key):
        return key

    def render(self) -> str:
        if not self._d:
            return "0"
        out = []
        for i, (key, c) in enumerate(self.sorted_terms()):
            neg, pre = coeff_prefix(c)
            basis = self._render_key(key)
            if basis == "1":
                body = pre or "1"
            else:
                body = f"{pre}*{basis}" if pre else basis
            if i == 0:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f" - {body}" if neg else f" + {body}")
        return "".join(out)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"{type(self).__name__}({self.render()!r})"


def tensor_raw(x: Raw, y: Raw, combine: Callable = lambda a, b: (a, b)) -> Raw:
    out: Raw = {}
    for (b1, e1), c1 in x.items():
        for (b2, e2), c2 in y.items():
            acc_term(out, combine(b1, b2), e1 + e2, c1 * c2)
    return out
