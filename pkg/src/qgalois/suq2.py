"""Normal forms and the coalgebra structure of A(SU_q(2)).

Generators ``a, b, c, d`` stand for the upper-left 2x2 block
``t11, t12, t21, t22`` of the quantum matrix, with

    ab = q ba,  ac = q ca,  bc = cb,  bd = q db,  cd = q dc,
    ad - da = (q - q^-1) bc,            ad - q bc = 1.

The basis is ``a^k b^m c^n`` (k >= 0) and ``b^m c^n d^-k`` (k < 0), indexed by
:class:`Su2Monomial` ``(k, m, n)``.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .coeff import LaurentCoeff
from .linear import Element, Raw, acc, acc_term
from .pbw import PBWEngine, rewrite

A, B, C, D = range(4)
LETTERS = ("a", "b", "c", "d")


class Su2Monomial(NamedTuple):
    k: int
    m: int
    n: int

    def exps(self) -> tuple[int, int, int, int]:
        k, m, n = self
        return (k, m, n, 0) if k >= 0 else (0, m, n, -k)

    @classmethod
    def from_exps(cls, e) -> "Su2Monomial":
        i, m, n, l = e
        if i and l:
            raise ValueError(f"a^{i} ... d^{l} is not a basis monomial")
        return cls(i - l, m, n)

    def degree(self) -> int:
        return abs(self.k) + self.m + self.n


UNIT = Su2Monomial(0, 0, 0)

ENGINE = PBWEngine(
    name="SU_q(2)",
    letters=LETTERS,
    swaps={
        (B, A): ((-1, 1, (A, B)),),
        (C, A): ((-1, 1, (A, C)),),
        (C, B): ((0, 1, (B, C)),),
        (D, A): ((0, 1, ()), (-1, 1, (B, C))),
        (D, B): ((-1, 1, (B, D)),),
        (D, C): ((-1, 1, (C, D)),),
    },
    elim_head=A,
    elim_tail=D,
    elim_between=frozenset({B, C}),
    elim_between_exp=1,  # b d = q d b, c d = q d c
    elim_rule=((0, 1, ()), (1, 1, (B, C))),  # ad = 1 + q bc
)


def render_monomial(x: Su2Monomial) -> str:
    k, m, n = x
    parts = []

    def put(name, e):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")

    if k > 0:
        put("a", k)
    put("b", m)
    put("c", n)
    if k < 0:
        put("d", -k)
    return " ".join(parts) if parts else "1"


def _sort_key(x: Su2Monomial):
    return (x.degree(), -x.k, x.m, x.n)


class Su2Element(Element):
    """Linear combination of :class:`Su2Monomial` basis elements."""

    __slots__ = ()
    _unit_key = UNIT

    @classmethod
    def _render_key(cls, key):
        return render_monomial(key)

    @classmethod
    def _sort_key(cls, key):
        return _sort_key(key)

    def __mul__(self, other):
        if isinstance(other, Su2Element):
            return mul(self, other)
        return NotImplemented


class Su2Tensor(Element):
    """Element of A(SU_q(2)) ⊗ A(SU_q(2)); keys are monomial pairs."""

    __slots__ = ()
    _unit_key = (UNIT, UNIT)

    @classmethod
    def _render_key(cls, key):
        return f"{render_monomial(key[0])} ⊗ {render_monomial(key[1])}"

    @classmethod
    def _sort_key(cls, key):
        return (_sort_key(key[0]), _sort_key(key[1]))


def _to_raw(raw_exps: Raw) -> Raw:
    return {(Su2Monomial.from_exps(m), e): c for (m, e), c in raw_exps.items()}


def _letter(x) -> int:
    if isinstance(x, int):
        return x
    try:
        return LETTERS.index(x)
    except ValueError:
        raise ValueError(f"not an SU_q(2) generator: {x!r}") from None


def nf(word: Iterable) -> Su2Element:
    """Normal form of a word in the letters ``a, b, c, d``."""
    w = tuple(_letter(x) for x in word)
    return Su2Element._wrap(_to_raw(ENGINE.nf_word(w)))


def nf_rewrite(word: Iterable, strategy: str = "leftmost") -> Su2Element:
    w = tuple(_letter(x) for x in word)
    return Su2Element._wrap(_to_raw(rewrite(ENGINE, w, strategy)))


def monomial(k: int, m: int = 0, n: int = 0) -> Su2Element:
    return Su2Element._wrap({(Su2Monomial(k, m, n), 0): 1})


def generator(x) -> Su2Element:
    return nf([x])


def mul_letter_raw(x: Su2Monomial, letter: int) -> Raw:
    """Right multiplication of a basis monomial by one generator."""
    return _mono_letter(x, letter)


_ML_CACHE: dict = {}


def _mono_letter(x: Su2Monomial, letter: int) -> Raw:
    key = (x, letter)
    hit = _ML_CACHE.get(key)
    if hit is None:
        hit = _to_raw(ENGINE.mul_letter(x.exps(), letter))
        _ML_CACHE[key] = hit
    return hit


def mul_raw(x: Raw, y: Raw) -> Raw:
    out: Raw = {}
    for (m1, e1), c1 in x.items():
        for (m2, e2), c2 in y.items():
            r = _to_raw(ENGINE.mul_mono(m1.exps(), m2.exps()))
            acc(out, r, e1 + e2, c1 * c2)
    return out


def mul(x: Su2Element, y: Su2Element) -> Su2Element:
    return Su2Element._wrap(mul_raw(x.raw, y.raw))


# coalgebra ------------------------------------------------------------------

_GEN_COPRODUCT = {
    A: ((A, A), (B, C)),
    B: ((A, B), (B, D)),
    C: ((C, A), (D, C)),
    D: ((C, B), (D, D)),
}
_COPROD_CACHE: dict = {}


def coproduct_raw(x: Su2Monomial) -> Raw:
    """Δ on a basis monomial, as ``{((left, right), e): c}``."""
    hit = _COPROD_CACHE.get(x)
    if hit is not None:
        return hit
    word = ENGINE.word_of(x.exps())
    cur: Raw = {((UNIT, UNIT), 0): 1}
    for g in word:
        nxt: Raw = {}
        for ((l, r), e), c in cur.items():
            for gl, gr in _GEN_COPRODUCT[g]:
                left = _mono_letter(l, gl)
                right = _mono_letter(r, gr)
                for (lm, le), lc in left.items():
                    for (rm, re), rc in right.items():
                        acc_term(nxt, (lm, rm), e + le + re, c * lc * rc)
        cur = nxt
    _COPROD_CACHE[x] = cur
    return cur


def coproduct(x: Su2Monomial) -> Su2Tensor:
    return Su2Tensor._wrap(coproduct_raw(Su2Monomial(*x)))


def counit(x: Su2Monomial) -> LaurentCoeff:
    """ε(a) = ε(d) = 1, ε(b) = ε(c) = 0, extended multiplicatively."""
    _k, m, n = x
    return LaurentCoeff.const(1 if m == 0 and n == 0 else 0)


def counit_element(x: Su2Element) -> LaurentCoeff:
    total = LaurentCoeff()
    for key, coeff in x.terms.items():
        total = total + coeff * counit(key)
    return total


def basis_upto(max_degree: int) -> list[Su2Monomial]:
    """All basis monomials with |k| + m + n <= max_degree, in a fixed order."""
    out = []
    for d in range(max_degree + 1):
        for k in range(-d, d + 1):
            rest = d - abs(k)
            for m in range(rest + 1):
                out.append(Su2Monomial(k, m, rest - m))
    return out
