"""The quotient coalgebra C = A(U_q(4)) / R and its right A(U_q(4))-action.

C is identified with A(SU_q(2)) as a coalgebra, the basis element
``r[k,m,n]`` corresponding to the :class:`~qgalois.suq2.Su2Monomial`
``(k, m, n)``.  The action ``r(t) · t' = r(t t')`` of the 32 generators
``t_ij``, ``t*_ij`` is tabulated in :class:`ActionTable`:

* block generators t11, t12, t21, t22 act by SU_q(2) right multiplication
  (the block determinant is central in the block, so the right ideal is two
  sided there);
* t*11, t*12, t*21, t*22, t33, t34, t43, t44 and the starred lower block are
  rewritten into block words with the exponents of the basis element;
* the remaining 16 off-block symbols act by zero.

An :class:`ActionTable` can carry sign flips on individual entries; this is
the mutation hook used to check that the verification suites are not vacuous.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .coeff import LaurentCoeff
from .linear import Element, Raw, acc
from . import suq2
from .suq2 import Su2Monomial

CIndex = Su2Monomial
UNIT = CIndex(0, 0, 0)

A, B, C, D = suq2.A, suq2.B, suq2.C, suq2.D
_BLOCK = {(1, 1): A, (1, 2): B, (2, 1): C, (2, 2): D}


class GenSymbol(NamedTuple):
    row: int
    col: int
    starred: bool = False

    def __str__(self):
        return f"t{'*' if self.starred else ''}{self.row}{self.col}"


ALL_GENERATORS = tuple(
    GenSymbol(i, j, s) for s in (False, True) for i in range(1, 5) for j in range(1, 5)
)

# named action-table entries that the mutation hook may flip
ACTION_ENTRIES = (
    "*11", "*12", "*21", "*22",
    "*33", "*34", "*43", "*44", "*33:corr", "*44:corr",
    "33", "34", "43", "44", "33:corr", "44:corr",
)


def t(i: int, j: int) -> GenSymbol:
    return GenSymbol(i, j, False)


def ts(i: int, j: int) -> GenSymbol:
    return GenSymbol(i, j, True)


def render_index(x: CIndex) -> str:
    return f"r[{x[0]},{x[1]},{x[2]}]"


class CElement(Element):
    """Linear combination of basis elements ``r[k,m,n]`` of C."""

    __slots__ = ()
    _unit_key = UNIT

    @classmethod
    def _render_key(cls, key):
        return render_index(key)

    @classmethod
    def _sort_key(cls, key):
        return suq2._sort_key(key)


class CTensor(Element):
    """Element of C ⊗ C."""

    __slots__ = ()
    _unit_key = (UNIT, UNIT)

    @classmethod
    def _render_key(cls, key):
        return f"{render_index(key[0])} ⊗ {render_index(key[1])}"

    @classmethod
    def _sort_key(cls, key):
        return (suq2._sort_key(key[0]), suq2._sort_key(key[1]))


def basis(k: int, m: int = 0, n: int = 0) -> CElement:
    if m < 0 or n < 0:
        raise ValueError("m and n must be non-negative")
    return CElement._wrap({(CIndex(k, m, n), 0): 1})


def _theta(k: int) -> int:
    return 1 if k >= 0 else 0


def _block_word(x: CIndex, word) -> Raw:
    cur: Raw = {(CIndex(*x), 0): 1}
    for letter in word:
        nxt: Raw = {}
        for (m, e), c in cur.items():
            acc(nxt, suq2.mul_letter_raw(m, letter), e, c)
        cur = nxt
    return cur


class ActionTable:
    """Right action of the generators t_ij, t*_ij on the basis of C."""

    def __init__(self, flips: Iterable[str] = ()):
        flips = tuple(flips)
        for f in flips:
            if f not in ACTION_ENTRIES:
                raise KeyError(f"unknown action-table entry {f!r}")
        self.flips = frozenset(flips)
        self._cache: dict = {}

    def __repr__(self):
        return f"ActionTable(flips={sorted(self.flips)})"

    @property
    def mutated(self) -> bool:
        return bool(self.flips)

    def _sign(self, entry: str) -> int:
        return -1 if entry in self.flips else 1

    def act_raw(self, x: CIndex, g: GenSymbol) -> Raw:
        """``r[k,m,n] · g`` as ``{(CIndex, e): c}``; the result must not be mutated."""
        key = (x, g)
        hit = self._cache.get(key)
        if hit is None:
            hit = self._act(CIndex(*x), GenSymbol(*g))
            self._cache[key] = hit
        return hit

    def _act(self, x: CIndex, g: GenSymbol) -> Raw:
        k, m, n = x
        i, j, starred = g
        if (i, j) in _BLOCK and not starred:
            return _block_word(x, [_BLOCK[(i, j)]])
        if (i, j) in _BLOCK:
            # r·t*11 = r·t22, r·t*12 = -q r·t21, r·t*21 = -q^-1 r·t12, r·t*22 = r·t11
            target, e, c = {
                (1, 1): (D, 0, 1),
                (1, 2): (C, 1, -1),
                (2, 1): (B, -1, -1),
                (2, 2): (A, 0, 1),
            }[(i, j)]
            s = self._sign(f"*{i}{j}")
            return acc({}, _block_word(x, [target]), e, c * s)
        if i in (3, 4) and j in (3, 4):
            return self._lower_block(x, i, j, starred)
        return {}

    def _lower_block(self, x: CIndex, i: int, j: int, starred: bool) -> Raw:
        k, m, n = x
        mn = m + n
        name = f"{'*' if starred else ''}{i}{j}"
        s = self._sign(name)
        sc = self._sign(name + ":corr")
        if starred:
            main = {
                (3, 3): (A, mn, 1),
                (3, 4): (B, 1 - k, 1),
                (4, 3): (C, -(1 + k), 1),
                (4, 4): (D, -mn, 1),
            }[(i, j)]
            # correction through r[k±1,m,n]·t12 t21
            corr_kind = {(3, 3): "neg", (4, 4): "pos"}.get((i, j))
        else:
            main = {
                (3, 3): (D, -mn, 1),
                (3, 4): (C, -k, -1),
                (4, 3): (B, -k, -1),
                (4, 4): (A, mn, 1),
            }[(i, j)]
            corr_kind = {(3, 3): "pos", (4, 4): "neg"}.get((i, j))
        letter, e, c = main
        out = acc({}, _block_word(x, [letter]), e, c * s)
        if corr_kind == "pos" and _theta(k) and k != 0:
            # - θ(k) q (1 - q^{-2k}) r[k-1,m,n]·t12 t21
            w = _block_word(CIndex(k - 1, m, n), [B, C])
            acc(out, w, 1, -sc)
            acc(out, w, 1 - 2 * k, sc)
        elif corr_kind == "neg" and _theta(-k) and k != 0:
            # - θ(-k) q^{m+n-1} (1 - q^{-2k}) r[k+1,m,n]·t12 t21
            w = _block_word(CIndex(k + 1, m, n), [B, C])
            acc(out, w, mn - 1, -sc)
            acc(out, w, mn - 1 - 2 * k, sc)
        return out

    def act_word_raw(self, x: Raw, word: Iterable[GenSymbol]) -> Raw:
        cur = x
        for g in word:
            nxt: Raw = {}
            for (idx, e), c in cur.items():
                acc(nxt, self.act_raw(idx, g), e, c)
            cur = nxt
        return cur


DEFAULT_TABLE = ActionTable()


def act_gen(x: CElement, g: GenSymbol, table: ActionTable = DEFAULT_TABLE) -> CElement:
    return CElement._wrap(table.act_word_raw(x.raw, [GenSymbol(*g)]))


def act_word(x: CElement, w: Iterable[GenSymbol], table: ActionTable = DEFAULT_TABLE) -> CElement:
    return CElement._wrap(table.act_word_raw(x.raw, [GenSymbol(*g) for g in w]))


def coproduct_C(x: CIndex) -> CTensor:
    return CTensor._wrap(suq2.coproduct_raw(CIndex(*x)))


def coproduct_raw(x: CIndex) -> Raw:
    return suq2.coproduct_raw(x)


def counit_C(x: CElement) -> LaurentCoeff:
    if isinstance(x, tuple):
        return suq2.counit(CIndex(*x))
    total = LaurentCoeff()
    for key, coeff in x.terms.items():
        if key[1] == 0 and key[2] == 0:
            total = total + coeff
    return total


# --------------------------------------------------------------------------
# Independent oracle for the block action: normal order inside M_q(2) (no
# determinant relation), then reduce only at the left edge of a word, which is
# all a right ideal allows.

_MQ2_SWAPS = {
    (B, A): ((-1, 1, (A, B)),),
    (C, A): ((-1, 1, (A, C)),),
    (C, B): ((0, 1, (B, C)),),
    (D, B): ((-1, 1, (B, D)),),
    (D, C): ((-1, 1, (C, D)),),
    # da = ad - (q - q^-1) bc
    (D, A): ((0, 1, (A, D)), (1, -1, (B, C)), (-1, 1, (B, C))),
}
_MQ2_MEMO: dict = {}


def mq2_normal_order(word: tuple[int, ...]) -> Raw:
    """Normal order ``a^i b^j c^k d^l`` in M_q(2); keys are exponent 4-tuples."""
    hit = _MQ2_MEMO.get(word)
    if hit is not None:
        return hit
    for p in range(len(word) - 1):
        rule = _MQ2_SWAPS.get((word[p], word[p + 1]))
        if rule is not None:
            out: Raw = {}
            for e, c, w in rule:
                acc(out, mq2_normal_order(word[:p] + w + word[p + 2 :]), e, c)
            break
    else:
        mono = [0, 0, 0, 0]
        for x in word:
            mono[x] += 1
        out = {(tuple(mono), 0): 1}
    _MQ2_MEMO[word] = out
    return out


def left_edge_reduce(word: tuple[int, ...]) -> Raw:
    """r(word) in the basis of C using only M_q(2) relations and left-edge ideal steps."""
    out: Raw = {}
    todo: list[tuple[tuple[int, ...], int, int]] = [(word, 0, 1)]
    while todo:
        w, e0, c0 = todo.pop()
        for ((i, j, k, l), e), c in mq2_normal_order(w).items():
            if i == 0 or l == 0:
                acc(out, {(CIndex(i - l, j, k), e0 + e): c0 * c})
                continue
            # a^i b^j c^k d = q^{j+k} a^i d b^j c^k, a^i d = d a^i + q^-1 (q^{2i}-1) bc a^{i-1},
            # and at the left edge d a ≡ 1 + q^-1 bc.
            tail = (B,) * j + (C,) * k + (D,) * (l - 1)
            rest = (A,) * (i - 1)
            base = e0 + e + j + k
            todo.append((rest + tail, base, c0 * c))
            todo.append(((B, C) + rest + tail, base + 2 * i - 1, c0 * c))
    return out


def block_action_oracle(x: CIndex, g: GenSymbol) -> CElement:
    """``r[k,m,n] · g`` for a block generator, computed by :func:`left_edge_reduce`."""
    g = GenSymbol(*g)
    if g.starred or (g.row, g.col) not in _BLOCK:
        raise ValueError("oracle covers only t11, t12, t21, t22")
    word = suq2.ENGINE.word_of(CIndex(*x).exps()) + (_BLOCK[(g.row, g.col)],)
    return CElement._wrap(left_edge_reduce(word))


def basis_upto(max_degree: int) -> list[CIndex]:
    return suq2.basis_upto(max_degree)
