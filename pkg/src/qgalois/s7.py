"""The *-algebra A(S^7_q) generated by z1..z4, z1*..z4*.

Relations (i < j, and k = 1..4)::

    z_i z_j = q z_j z_i            z_j* z_i = q z_i z_j*   (i != j)
    z_k* z_k = z_k z_k* + (1 - q^2) Σ_{j<k} z_j z_j*
    Σ_k z_k z_k* = 1

Normal monomials are ``z1^a1 .. z4^a4 z1*^b1 .. z4*^b4`` with ``a4 * b4 == 0``;
the pair z4 z4* is eliminated through the sphere relation.
"""

from __future__ import annotations

import re
from typing import Iterable, NamedTuple

from .linear import Element, Raw, acc
from .pbw import DegreeCapExceeded, PBWEngine, rewrite

__all__ = [
    "PMonomial", "PElement", "nf", "mul", "star", "degree", "z", "zs",
    "DegreeCapExceeded", "set_degree_cap", "LETTERS",
]

LETTERS = ("z1", "z2", "z3", "z4", "z1*", "z2*", "z3*", "z4*")
DEFAULT_DEGREE_CAP = 24


def _swaps():
    rules = {}
    for i in range(4):
        for j in range(4):
            if j > i:
                rules[(j, i)] = ((-1, 1, (i, j)),)  # z_j z_i = q^-1 z_i z_j
                rules[(4 + j, 4 + i)] = ((1, 1, (4 + i, 4 + j)),)  # z_j* z_i* = q z_i* z_j*
            if i != j:
                rules[(4 + j, i)] = ((1, 1, (i, 4 + j)),)  # z_j* z_i = q z_i z_j*
        corr = [(0, 1, (i, 4 + i))]
        for j in range(i):
            corr += [(0, 1, (j, 4 + j)), (2, -1, (j, 4 + j))]
        rules[(4 + i, i)] = tuple(corr)
    return rules


ENGINE = PBWEngine(
    name="S^7_q",
    letters=LETTERS,
    swaps=_swaps(),
    elim_head=3,
    elim_tail=7,
    elim_between=frozenset({4, 5, 6}),
    elim_between_exp=-1,  # z_i* z4* = q^-1 z4* z_i*
    elim_rule=((0, 1, ()), (0, -1, (0, 4)), (0, -1, (1, 5)), (0, -1, (2, 6))),
    degree_cap=DEFAULT_DEGREE_CAP,
)


def set_degree_cap(cap: int | None) -> None:
    ENGINE.degree_cap = cap


class PMonomial(NamedTuple):
    """Exponents (a1, a2, a3, a4, b1, b2, b3, b4) of z1..z4, z1*..z4*."""

    a1: int = 0
    a2: int = 0
    a3: int = 0
    a4: int = 0
    b1: int = 0
    b2: int = 0
    b3: int = 0
    b4: int = 0


UNIT = PMonomial()


def render_monomial(m) -> str:
    parts = []
    for name, e in zip(LETTERS, m):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return " ".join(parts) if parts else "1"


def mono_degree(m) -> int:
    return sum(m)


def _sort_key(m):
    return (sum(m), tuple(-e for e in m))


class PElement(Element):
    """Element of A(S^7_q) in normal form."""

    __slots__ = ()
    _unit_key = UNIT

    @classmethod
    def _render_key(cls, key):
        return render_monomial(key)

    @classmethod
    def _sort_key(cls, key):
        return _sort_key(key)

    def __mul__(self, other):
        if isinstance(other, PElement):
            return mul(self, other)
        return NotImplemented

    def __pow__(self, n: int):
        out = PElement.one()
        for _ in range(n):
            out = mul(out, self)
        return out


def _wrap_raw(raw: Raw) -> Raw:
    return {(PMonomial(*m), e): c for (m, e), c in raw.items()}


def _letter(x) -> int:
    if isinstance(x, int):
        if not 0 <= x < 8:
            raise ValueError(f"letter index out of range: {x}")
        return x
    try:
        return LETTERS.index(x)
    except ValueError:
        raise ValueError(f"not an S^7_q generator: {x!r}") from None


def nf(word: Iterable) -> PElement:
    """Normal form of a word in ``z1..z4, z1*..z4*`` (names or indices 0..7)."""
    w = tuple(_letter(x) for x in word)
    if ENGINE.degree_cap is not None and len(w) > ENGINE.degree_cap:
        raise DegreeCapExceeded(f"word of length {len(w)} exceeds cap {ENGINE.degree_cap}")
    return PElement._wrap(_wrap_raw(ENGINE.nf_word(w)))


def nf_rewrite(word: Iterable, strategy: str = "leftmost") -> PElement:
    w = tuple(_letter(x) for x in word)
    return PElement._wrap(_wrap_raw(rewrite(ENGINE, w, strategy)))


def mul_letter_raw(m: PMonomial, letter: int) -> Raw:
    return _ml(m, letter)


_ML: dict = {}
_MM: dict = {}


def _ml(m, letter) -> Raw:
    key = (m, letter)
    hit = _ML.get(key)
    if hit is None:
        hit = _wrap_raw(ENGINE.mul_letter(tuple(m), letter))
        _ML[key] = hit
    return hit


def mul_mono_raw(m1, m2) -> Raw:
    key = (m1, m2)
    hit = _MM.get(key)
    if hit is None:
        hit = _wrap_raw(ENGINE.mul_mono(tuple(m1), tuple(m2)))
        _MM[key] = hit
    return hit


def mul_raw(x: Raw, y: Raw) -> Raw:
    out: Raw = {}
    for (m1, e1), c1 in x.items():
        for (m2, e2), c2 in y.items():
            acc(out, mul_mono_raw(m1, m2), e1 + e2, c1 * c2)
    return out


def mul(x: PElement, y: PElement) -> PElement:
    return PElement._wrap(mul_raw(x.raw, y.raw))


def word_of(m) -> tuple[int, ...]:
    return ENGINE.word_of(tuple(m))


def _star_letter(x: int) -> int:
    return x + 4 if x < 4 else x - 4


def star(x: PElement) -> PElement:
    """Antilinear anti-automorphism; coefficients (real Laurent polynomials) are kept."""
    out: Raw = {}
    for (m, e), c in x.raw.items():
        w = tuple(_star_letter(l) for l in reversed(word_of(m)))
        acc(out, _wrap_raw(ENGINE.nf_word(w)), e, c)
    return PElement._wrap(out)


def degree(x: PElement) -> int:
    if x.is_zero():
        raise ValueError("degree of the zero element is undefined")
    return max(sum(m) for (m, _e) in x.raw)


def monomial(*exps: int) -> PElement:
    return PElement._wrap({(PMonomial(*exps), 0): 1})


def z(i: int) -> PElement:
    return nf([i - 1])


def zs(i: int) -> PElement:
    return nf([i + 3])


def clear_caches() -> None:
    _ML.clear()
    _MM.clear()
    ENGINE.clear()


def basis_upto(max_degree: int) -> list[PMonomial]:
    """All normal monomials of degree <= max_degree, ordered by degree."""
    out = []

    def rec(prefix, left, slot):
        if slot == 8:
            m = PMonomial(*prefix)
            if ENGINE.is_normal(m):
                out.append(m)
            return
        for e in range(left + 1):
            rec(prefix + [e], left - e, slot + 1)

    rec([], max_degree, 0)
    return sorted(out, key=_sort_key)


_TOKEN = re.compile(r"z([1-4])(\*?)")


def parse_word(text: str) -> tuple[int, ...]:
    """Parse ``"z2 z1*"`` style words (no exponents, no coefficients)."""
    out = []
    for tok in text.split():
        mt = _TOKEN.fullmatch(tok)
        if not mt:
            raise ValueError(f"bad letter {tok!r}")
        out.append(int(mt.group(1)) - 1 + (4 if mt.group(2) else 0))
    return tuple(out)
