"""Recursion-compatibility identities of the translation map.

Each identity is an equation between sums of terms ``c · L · τ_{key} · R`` in
P ⊗_B P, with ``c`` a power of q (times a sign), ``L`` a left factor and ``R``
a right factor in P.  They are checked by comparing χ-images of both sides,
which is equality in the balanced tensor product.

Families and their index ranges (``N`` is the range bound):

==================  =========  =====================
family              k range    |k| + m + n
==================  =========  =====================
easy                k >= 0     <= N - 1
easy_neg            k <= 0     <= N - 1
hard                k >= 1     <= N
hard_neg            k <= -1    <= N
easy_equiv          k >= 0     <= N
easy_consequences   k >= 0     <= N - 1
hard_consequences   k >= 1     <= N
==================  =========  =====================
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from . import s7
from .cmod import DEFAULT_TABLE, ActionTable
from .galois import (
    PPElement, TauTable, a_n, b_n, chi, lmul, r_gen, rmul, tau,
)
from .s7 import PElement


@dataclass(frozen=True)
class Term:
    exp: int  # power of q
    sign: int
    left: PElement | None
    key: tuple[int, int, int]
    right: PElement | None


@dataclass(frozen=True)
class Identity:
    family: str
    label: str
    index: tuple[int, int, int]
    lhs: tuple[Term, ...]
    rhs: tuple[Term, ...]


def _z(i):
    return s7.z(i)


def _zs(i):
    return s7.zs(i)


def _one_minus_q2R() -> PElement:
    return PElement.one() - r_gen().shift(2)


def _astar(n):
    return s7.star(a_n(n))


def _bstar(n):
    return s7.star(b_n(n))


def build(terms: tuple[Term, ...], table: TauTable | None = None) -> PPElement:
    """Assemble the P ⊗ P representative of a side from stored τ values."""
    out = PPElement.zero()
    for t in terms:
        x = tau(*t.key, table=table)
        if t.left is not None:
            x = lmul(t.left, x)
        if t.right is not None:
            x = rmul(x, t.right)
        out = out + x.shift(t.exp).scale(t.sign)
    return out


def _easy(k, m, n):
    mn = m + n
    kp, np_, t0 = (k + 1, m, n), (k, m, n + 1), (k, m, n)
    return [
        ("1", [Term(-mn, 1, _z(1), kp, None), Term(0, 1, _z(2), np_, None)], [Term(0, 1, None, t0, _z(1))]),
        ("2", [Term(-k, -1, _z(3), np_, None), Term(0, 1, _z(4), kp, None)], [Term(0, 1, None, t0, _z(4))]),
        ("3", [Term(1, -1, _zs(1), np_, None), Term(-mn, 1, _zs(2), kp, None)], [Term(0, 1, None, t0, _zs(2))]),
        ("4", [Term(0, 1, _zs(3), kp, None), Term(-(1 + k), 1, _zs(4), np_, None)], [Term(0, 1, None, t0, _zs(3))]),
    ]


def _easy_neg(k, m, n):
    mn = m + n
    km, mp, t0 = (k - 1, m, n), (k, m + 1, n), (k, m, n)
    return [
        ("1", [Term(-mn, 1, _z(3), km, None), Term(0, -1, _z(4), mp, None)], [Term(0, 1, None, t0, _z(3))]),
        ("2", [Term(k, 1, _z(1), mp, None), Term(0, 1, _z(2), km, None)], [Term(0, 1, None, t0, _z(2))]),
        ("3", [Term(1, 1, _zs(3), mp, None), Term(-mn, 1, _zs(4), km, None)], [Term(0, 1, None, t0, _zs(4))]),
        ("4", [Term(0, 1, _zs(1), km, None), Term(-(1 - k), -1, _zs(2), mp, None)], [Term(0, 1, None, t0, _zs(1))]),
    ]


def _hard(k, m, n):
    mn = m + n
    km, kmp, t0 = (k - 1, m, n), (k - 1, m + 1, n), (k, m, n)
    return [
        ("1", [Term(mn, 1, _z(2), km, None), Term(mn + 1, 1, None, kmp, _z(1))], [Term(0, 1, None, t0, _z(2))]),
        ("2", [Term(0, 1, _z(3), km, None), Term(-k, -1, None, kmp, _z(4))], [Term(0, 1, None, t0, _z(3))]),
        ("3", [Term(mn, 1, _zs(1), km, None), Term(mn, -1, None, kmp, _zs(2))], [Term(0, 1, None, t0, _zs(1))]),
        ("4", [Term(0, 1, _zs(4), km, None), Term(1 - k, 1, None, kmp, _zs(3))], [Term(0, 1, None, t0, _zs(4))]),
    ]


def _hard_neg(k, m, n):
    mn = m + n
    kp, kpn, t0 = (k + 1, m, n), (k + 1, m, n + 1), (k, m, n)
    return [
        ("1", [Term(mn, 1, _z(4), kp, None), Term(mn + 1, -1, None, kpn, _z(3))], [Term(0, 1, None, t0, _z(4))]),
        ("2", [Term(0, 1, _z(1), kp, None), Term(k, 1, None, kpn, _z(2))], [Term(0, 1, None, t0, _z(1))]),
        ("3", [Term(mn, 1, _zs(3), kp, None), Term(mn, 1, None, kpn, _zs(4))], [Term(0, 1, None, t0, _zs(3))]),
        ("4", [Term(0, 1, _zs(2), kp, None), Term(1 + k, -1, None, kpn, _zs(1))], [Term(0, 1, None, t0, _zs(2))]),
    ]


def _easy_equiv(k, m, n):
    mn = m + n
    s = k + m + n
    t0 = (k, m, n)
    R = r_gen()
    return [
        ("1", [Term(0, 1, _one_minus_q2R(), t0, _z(1))],
              [Term(2 - mn, 1, b_n(s), t0, _zs(3)), Term(-mn, 1, a_n(s), t0, _z(4))]),
        ("2", [Term(0, 1, R, t0, _z(4))],
              [Term(2 - k, 1, b_n(s), t0, _zs(2)), Term(2 + mn, 1, _astar(-s), t0, _z(1))]),
        ("3", [Term(0, 1, _one_minus_q2R(), t0, _zs(2))],
              [Term(k, 1, _bstar(-s), t0, _z(4)), Term(3 + k, -1, _astar(-s), t0, _zs(3))]),
        ("4", [Term(4, 1, R, t0, _zs(3))],
              [Term(2 + mn, 1, _bstar(-s), t0, _z(1)), Term(3 - k, -1, a_n(s), t0, _zs(2))]),
    ]


def _easy_consequences(k, m, n):
    mn = m + n
    s = k + m + n
    kp, t0 = (k + 1, m, n), (k, m, n)
    R = r_gen()
    return [
        ("1", [Term(0, 1, _one_minus_q2R(), kp, None)],
              [Term(0, 1, _zs(4), t0, _z(4)), Term(2, 1, _z(3), t0, _zs(3))]),
        ("2", [Term(-mn, 1, b_n(s + 1), kp, None)],
              [Term(1, 1, _z(3), t0, _z(1)), Term(k, 1, _z(2), t0, _z(4))]),
        ("3", [Term(-mn, 1, a_n(s + 1), kp, None)],
              [Term(-1, 1, _zs(4), t0, _z(1)), Term(1 + k, -1, _z(2), t0, _zs(3))]),
        ("4", [Term(0, 1, _astar(-(s + 1)), kp, None)],
              [Term(-1, 1, _zs(1), t0, _z(4)), Term(-k - 1, -1, _z(3), t0, _zs(2))]),
        ("5", [Term(0, 1, R, kp, None)],
              [Term(mn, 1, _zs(1), t0, _z(1)), Term(mn, 1, _z(2), t0, _zs(2))]),
        ("6", [Term(0, 1, _bstar(-(s + 1)), kp, None)],
              [Term(1, 1, _zs(1), t0, _zs(3)), Term(-k - 2, 1, _zs(4), t0, _zs(2))]),
    ]


def _hard_consequences(k, m, n):
    mn = m + n
    s = k + m + n
    km, t0 = (k - 1, m, n), (k, m, n)
    R = r_gen()
    return [
        ("1", [Term(0, 1, None, t0, _one_minus_q2R())],
              [Term(0, 1, _zs(4), km, _z(4)), Term(2, 1, _z(3), km, _zs(3))]),
        ("2", [Term(0, 1, None, t0, R)],
              [Term(mn, 1, _z(2), km, _zs(2)), Term(mn, 1, _zs(1), km, _z(1))]),
        ("3", [Term(0, 1, None, t0, a_n(-s))],
              [Term(-1, 1, _zs(4), km, _z(1)), Term(-k, -1, _z(2), km, _zs(3))]),
        ("4", [Term(0, 1, None, t0, b_n(-s))],
              [Term(1, 1, _z(3), km, _z(1)), Term(-k - 1, 1, _z(2), km, _z(4))]),
        ("5", [Term(0, 1, None, t0, _astar(s))],
              [Term(mn - 1, 1, _zs(1), km, _z(4)), Term(s, -1, _z(3), km, _zs(2))]),
        ("6", [Term(0, 1, None, t0, _bstar(s))],
              [Term(mn + 1, 1, _zs(1), km, _zs(3)), Term(s - 1, 1, _zs(4), km, _zs(2))]),
    ]


# family -> (builder, predicate on k, offset of the degree bound)
FAMILIES: dict[str, tuple[Callable, Callable[[int], bool], int]] = {
    "easy": (_easy, lambda k: k >= 0, -1),
    "easy_neg": (_easy_neg, lambda k: k <= 0, -1),
    "hard": (_hard, lambda k: k >= 1, 0),
    "hard_neg": (_hard_neg, lambda k: k <= -1, 0),
    "easy_equiv": (_easy_equiv, lambda k: k >= 0, 0),
    "easy_consequences": (_easy_consequences, lambda k: k >= 0, -1),
    "hard_consequences": (_hard_consequences, lambda k: k >= 1, 0),
}

RECURSION_FAMILIES = ("easy", "easy_neg", "hard", "hard_neg")
AUXILIARY_FAMILIES = ("easy_equiv", "easy_consequences", "hard_consequences")


def indices(family: str, bound: int) -> Iterator[tuple[int, int, int]]:
    _builder, pred, offset = FAMILIES[family]
    top = bound + offset
    for d in range(top + 1):
        for k in range(-d, d + 1):
            if not pred(k):
                continue
            rest = d - abs(k)
            for m in range(rest + 1):
                yield (k, m, rest - m)


def identities(family: str, bound: int) -> Iterator[Identity]:
    builder = FAMILIES[family][0]
    for idx in indices(family, bound):
        for label, lhs, rhs in builder(*idx):
            yield Identity(family, label, idx, tuple(lhs), tuple(rhs))


def check(identity: Identity, table: TauTable | None = None, action: ActionTable = DEFAULT_TABLE):
    """Return ``(holds, χ(lhs), χ(rhs))``."""
    lhs = chi(build(identity.lhs, table), action)
    rhs = chi(build(identity.rhs, table), action)
    return lhs == rhs, lhs, rhs
