"""Coaction, canonical map and translation map for P = A(S^7_q) over C.

* ``(u ⊗ x) ◁ z_i  = Σ_j u z_j  ⊗ x · t_ji``
* ``(u ⊗ x) ◁ z_i* = Σ_j u z_j* ⊗ x · t*_ji``
* ``Δ_r(p) = (1 ⊗ r(1)) ◁ p`` and ``χ(p' ⊗ p) = p' Δ_r(p)``.

The translation map ``τ_{k,m,n}`` is built recursively from ``τ_{0,0,0} = 1 ⊗ 1``
by sandwiching with generators.  Elements of P ⊗_B P are handled through
representatives in P ⊗ P; two representatives are equal in the balanced
tensor product exactly when their images under χ agree.
"""

from __future__ import annotations

import threading
from typing import Iterable

from . import s7
from .cmod import DEFAULT_TABLE, ActionTable, CElement, CIndex, GenSymbol
from .coeff import LaurentCoeff
from .linear import Element, Raw, acc, acc_term
from .s7 import PElement, PMonomial, mul_letter_raw, mul_mono_raw, render_monomial
from .cmod import render_index
from . import suq2

P_UNIT = s7.UNIT
C_UNIT = CIndex(0, 0, 0)
Z1, Z2, Z3, Z4, Z1S, Z2S, Z3S, Z4S = range(8)


class PCElement(Element):
    """Element of P ⊗ C; keys are ``(PMonomial, CIndex)``."""

    __slots__ = ()
    _unit_key = (P_UNIT, C_UNIT)

    @classmethod
    def _render_key(cls, key):
        return f"{render_monomial(key[0])} ⊗ {render_index(key[1])}"

    @classmethod
    def _sort_key(cls, key):
        return (s7._sort_key(key[0]), suq2._sort_key(key[1]))


class PPElement(Element):
    """Representative in P ⊗ P of a class in P ⊗_B P."""

    __slots__ = ()
    _unit_key = (P_UNIT, P_UNIT)

    @classmethod
    def _render_key(cls, key):
        return f"{render_monomial(key[0])} ⊗ {render_monomial(key[1])}"

    @classmethod
    def _sort_key(cls, key):
        return (s7._sort_key(key[0]), s7._sort_key(key[1]))

    def render(self) -> str:
        out = super().render()
        return "1 ⊗ 1" if out == "1" else out


class PCCElement(Element):
    """Element of P ⊗ C ⊗ C (coassociativity checks)."""

    __slots__ = ()
    _unit_key = (P_UNIT, C_UNIT, C_UNIT)

    @classmethod
    def _render_key(cls, key):
        return " ⊗ ".join([render_monomial(key[0]), render_index(key[1]), render_index(key[2])])

    @classmethod
    def _sort_key(cls, key):
        return (s7._sort_key(key[0]), suq2._sort_key(key[1]), suq2._sort_key(key[2]))


def pc(p: PElement, c: CElement) -> PCElement:
    """Simple tensor ``p ⊗ c``."""
    out: Raw = {}
    for (pm, e1), c1 in p.raw.items():
        for (cm, e2), c2 in c.raw.items():
            acc_term(out, (pm, cm), e1 + e2, c1 * c2)
    return PCElement._wrap(out)


def pp(left: PElement, right: PElement) -> PPElement:
    """Simple tensor ``left ⊗ right`` as a P ⊗ P representative."""
    out: Raw = {}
    for (l, e1), c1 in left.raw.items():
        for (r, e2), c2 in right.raw.items():
            acc_term(out, (l, r), e1 + e2, c1 * c2)
    return PPElement._wrap(out)


# ◁ ---------------------------------------------------------------------------

def _gens_for(letter: int) -> list[tuple[int, GenSymbol]]:
    i = letter % 4 + 1
    starred = letter >= 4
    return [((j - 1) + (4 if starred else 0), GenSymbol(j, i, starred)) for j in range(1, 5)]


_GENS = [_gens_for(x) for x in range(8)]


def triangle_letter_raw(x: Raw, letter: int, table: ActionTable = DEFAULT_TABLE) -> Raw:
    out: Raw = {}
    gens = _GENS[letter]
    for ((u, c), e), coef in x.items():
        for pl, g in gens:
            cpart = table.act_raw(c, g)
            if not cpart:
                continue
            ppart = mul_letter_raw(u, pl)
            for (pm, pe), pc_ in ppart.items():
                for (cm, ce), cc in cpart.items():
                    acc_term(out, (pm, cm), e + pe + ce, coef * pc_ * cc)
    return out


def triangle_word_raw(x: Raw, word: Iterable[int], table: ActionTable = DEFAULT_TABLE) -> Raw:
    cur = x
    for letter in word:
        cur = triangle_letter_raw(cur, letter, table)
    return cur


def triangle(x: PCElement, v, table: ActionTable = DEFAULT_TABLE) -> PCElement:
    """``x ◁ v`` for a :class:`PElement` ``v`` or a raw word of letter indices.

    Passing a word (tuple of ints 0..7) applies the letters without normalising
    ``v`` first, which is how the relations of P are checked on P ⊗ C.
    """
    if isinstance(v, PElement):
        out: Raw = {}
        for (m, e), c in v.raw.items():
            acc(out, triangle_word_raw(x.raw, s7.word_of(m), table), e, c)
        return PCElement._wrap(out)
    return PCElement._wrap(triangle_word_raw(x.raw, tuple(v), table))


def _delta_cache(table: ActionTable) -> dict:
    return table.__dict__.setdefault("_delta_r", {})


def delta_r_mono_raw(m: PMonomial, table: ActionTable = DEFAULT_TABLE) -> Raw:
    """Δ_r of a normal monomial, built letter by letter from its prefix."""
    cache = _delta_cache(table)
    hit = cache.get(m)
    if hit is not None:
        return hit
    if not any(m):
        res = {((P_UNIT, C_UNIT), 0): 1}
    else:
        last = max(i for i in range(8) if m[i])
        prefix = list(m)
        prefix[last] -= 1
        res = triangle_letter_raw(delta_r_mono_raw(PMonomial(*prefix), table), last, table)
    cache[m] = res
    return res


def delta_r(p: PElement, table: ActionTable = DEFAULT_TABLE) -> PCElement:
    out: Raw = {}
    for (m, e), c in p.raw.items():
        acc(out, delta_r_mono_raw(m, table), e, c)
    return PCElement._wrap(out)


def lmul_pc_raw(pm: PMonomial, x: Raw) -> Raw:
    """``pm · x`` for x in P ⊗ C (left multiplication on the P leg)."""
    out: Raw = {}
    for ((u, c), e), coef in x.items():
        for (w, we), wc in mul_mono_raw(pm, u).items():
            acc_term(out, (w, c), e + we, coef * wc)
    return out


def chi_raw(x: Raw, table: ActionTable = DEFAULT_TABLE) -> Raw:
    out: Raw = {}
    for ((left, right), e), c in x.items():
        d = delta_r_mono_raw(right, table)
        if not any(left):
            acc(out, d, e, c)
            continue
        for ((u, cc), de), dc in d.items():
            for (w, we), wc in mul_mono_raw(left, u).items():
                acc_term(out, (w, cc), e + de + we, c * dc * wc)
    return out


def chi(x: PPElement, table: ActionTable = DEFAULT_TABLE) -> PCElement:
    """Canonical map ``p' ⊗ p ↦ p' Δ_r(p)`` on a representative."""
    return PCElement._wrap(chi_raw(x.raw, table))


def quotient_eq(x: PPElement, y: PPElement, table: ActionTable = DEFAULT_TABLE) -> bool:
    """Equality in P ⊗_B P, decided through χ."""
    return chi(x, table) == chi(y, table)


def psi(c: CElement, p: PElement, table: ActionTable = DEFAULT_TABLE) -> PCElement:
    """Entwining map ``c ⊗ p ↦ (1 ⊗ c) ◁ p``."""
    return triangle(pc(PElement.one(), c), p, table)


def is_coinvariant(p: PElement, table: ActionTable = DEFAULT_TABLE) -> bool:
    return delta_r(p, table) == pc(p, CElement.one())


# P ⊗ P arithmetic -------------------------------------------------------------

def lmul(p: PElement, x: PPElement) -> PPElement:
    """``p · (l ⊗ r) = p l ⊗ r``."""
    out: Raw = {}
    for (pm, pe), pcoef in p.raw.items():
        for ((l, r), e), c in x.raw.items():
            for (w, we), wc in mul_mono_raw(pm, l).items():
                acc_term(out, (w, r), e + pe + we, c * pcoef * wc)
    return PPElement._wrap(out)


def rmul(x: PPElement, p: PElement) -> PPElement:
    """``(l ⊗ r) · p = l ⊗ r p``."""
    out: Raw = {}
    for ((l, r), e), c in x.raw.items():
        for (pm, pe), pcoef in p.raw.items():
            for (w, we), wc in mul_mono_raw(r, pm).items():
                acc_term(out, (l, w), e + pe + we, c * pcoef * wc)
    return PPElement._wrap(out)


def sandwich(left: PElement, x: PPElement, right: PElement) -> PPElement:
    return rmul(lmul(left, x), right)


def _sandwich_letters_raw(x: Raw, lletter: int, rletter: int, shift: int, sign: int, out: Raw):
    lm = s7.monomial(*[1 if i == lletter else 0 for i in range(8)]).raw
    ((lkey, _),) = lm.keys()
    for ((l, r), e), c in x.items():
        left = mul_mono_raw(lkey, l)
        right = mul_letter_raw(r, rletter)
        for (lw, le), lc in left.items():
            for (rw, re), rc in right.items():
                acc_term(out, (lw, rw), e + le + re + shift, sign * c * lc * rc)


# B generators -----------------------------------------------------------------

def a_n(n: int) -> PElement:
    """``a_n = z1 z4* - q^n z2 z3*``."""
    return s7.nf([Z1, Z4S]) - s7.nf([Z2, Z3S]).shift(n)


def b_n(n: int) -> PElement:
    """``b_n = z1 z3 + q^(n-1) z2 z4``."""
    return s7.nf([Z1, Z3]) + s7.nf([Z2, Z4]).shift(n - 1)


def r_gen() -> PElement:
    return s7.nf([Z1, Z1S]) + s7.nf([Z2, Z2S])


def b_generators() -> dict[str, PElement]:
    a, b = a_n(0), b_n(0)
    return {"a": a, "a*": s7.star(a), "b": b, "b*": s7.star(b), "R": r_gen()}


# τ -----------------------------------------------------------------------------

def _step_terms(kind: str, k: int, m: int, n: int):
    """(q-exponent, sign, left letter, right letter) of one recursion step from τ_{k,m,n}."""
    mn = m + n
    h = (abs(k) - k) // 2
    g = (abs(k) + k) // 2
    if kind == "k+":
        return [(2 + mn, 1, Z1S, Z1), (2 + mn, 1, Z2, Z2S), (2, 1, Z3, Z3S), (0, 1, Z4S, Z4)]
    if kind == "k-":
        return [(4, 1, Z1, Z1S), (2, 1, Z2S, Z2), (mn, 1, Z3S, Z3), (mn, 1, Z4, Z4S)]
    if kind == "m+":
        return [(2 + h, 1, Z1S, Z2), (3 + h, -1, Z2, Z1S), (1 + g, 1, Z3, Z4S), (g, -1, Z4S, Z3)]
    if kind == "n+":
        return [(3 + h, -1, Z1, Z2S), (2 + h, 1, Z2S, Z1), (g, -1, Z3S, Z4), (1 + g, 1, Z4, Z3S)]
    raise ValueError(kind)


def tau_step(prev: PPElement, kind: str, k: int, m: int, n: int) -> PPElement:
    """Apply one recursion rule to ``prev = τ_{k,m,n}``."""
    if kind == "k+" and k < 0:
        raise ValueError("raising k is defined from k >= 0")
    if kind == "k-" and k > 0:
        raise ValueError("lowering k is defined from k <= 0")
    out: Raw = {}
    for shift, sign, l, r in _step_terms(kind, k, m, n):
        _sandwich_letters_raw(prev.raw, l, r, shift, sign, out)
    return PPElement._wrap(out)


def predecessor(key: tuple[int, int, int], path: str = "canonical"):
    """Return ``(previous key, rule)`` along the chosen recursion path."""
    k, m, n = key
    if m < 0 or n < 0:
        raise ValueError("m and n must be non-negative")
    if path not in ("canonical", "alternate"):
        raise ValueError(f"unknown path {path!r}")
    if path == "canonical":
        if n:
            return (k, m, n - 1), "n+"
        if m:
            return (k, m - 1, 0), "m+"
    else:
        if m:
            return (k, m - 1, n), "m+"
        if n:
            return (k, 0, n - 1), "n+"
    if k > 0:
        return (k - 1, 0, 0), "k+"
    if k < 0:
        return (k + 1, 0, 0), "k-"
    return None, None


class TauTable:
    """Memo table ``(k, m, n) -> τ_{k,m,n}`` for one recursion path.

    With ``verify=True`` every inserted entry is checked to satisfy
    ``χ(τ) = 1 ⊗ r[k,m,n]``.
    """

    def __init__(self, path: str = "canonical", verify: bool = False,
                 table: ActionTable = DEFAULT_TABLE):
        if path not in ("canonical", "alternate"):
            raise ValueError(f"unknown path {path!r}")
        self.path = path
        self.verify = verify
        self.action = table
        self.entries: dict[tuple[int, int, int], PPElement] = {}
        self._lock = threading.Lock()

    def __contains__(self, key):
        return tuple(key) in self.entries

    def __len__(self):
        return len(self.entries)

    def get(self, key):
        return self.entries.get(tuple(key))

    def insert(self, key, value: PPElement) -> PPElement:
        key = tuple(key)
        if self.verify and not check_tau_entry(key, value, self.action):
            raise ValueError(f"τ entry {key} fails χ(τ) = 1 ⊗ r{list(key)}")
        with self._lock:
            return self.entries.setdefault(key, value)


def check_tau_entry(key, value: PPElement, table: ActionTable = DEFAULT_TABLE) -> bool:
    k, m, n = key
    return chi(value, table) == PCElement._wrap({((P_UNIT, CIndex(k, m, n)), 0): 1})


def tau(k: int, m: int, n: int, table: TauTable | None = None) -> PPElement:
    """Translation map on ``1 ⊗ r[k,m,n]``, memoised in ``table``."""
    if table is None:
        table = _DEFAULT_TAU
    key = (k, m, n)
    hit = table.get(key)
    if hit is not None:
        return hit
    chain = []
    cur = key
    while cur is not None and cur not in table:
        prev, rule = predecessor(cur, table.path)
        chain.append((cur, prev, rule))
        cur = prev
    for cur, prev, rule in reversed(chain):
        if prev is None:
            table.insert(cur, PPElement.one())
        else:
            table.insert(cur, tau_step(table.get(prev), rule, *prev))
    return table.get(key)


_DEFAULT_TAU = TauTable()


def default_tau_table() -> TauTable:
    return _DEFAULT_TAU


def one_tensor(k: int, m: int, n: int) -> PCElement:
    return PCElement._wrap({((P_UNIT, CIndex(k, m, n)), 0): 1})


def counit_leg_raw(x: Raw) -> Raw:
    """(id ⊗ ε) on P ⊗ C, returned as a raw P element."""
    out: Raw = {}
    for ((p, c), e), coef in x.items():
        if c[1] == 0 and c[2] == 0:
            acc_term(out, p, e, coef)
    return out
