"""Ordered-monomial normal forms for q-commutation algebras.

A :class:`PBWEngine` describes an algebra by

* an ordered alphabet ``0 < 1 < ... < n-1``;
* *swap rules* ``y x -> Σ c q^e w`` for every out-of-order pair ``y > x``;
* one *elimination rule* ``p u t -> q^(s|u|) Σ c q^e w u`` where ``u`` is a word
  in a fixed set of "between" letters that ``t`` quasi-commutes with.

Normal monomials are exponent tuples in alphabet order that contain no
``p ... t`` pair.  Products are computed by right-multiplying a normal monomial
by one letter at a time; the last letter of the monomial is swapped past the
new letter when they are out of order and the result is refolded.  Every rule
either lowers the total degree, lowers the index weight, or removes an
inversion, so the recursion terminates.  Results are memoised per engine.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .linear import Raw, acc

Word = tuple[int, ...]
Rule = tuple[tuple[int, int, Word], ...]  # ((q_exponent, rational, word), ...)


class DegreeCapExceeded(ArithmeticError):
    """A product would exceed the configured letter-count cap."""


@dataclass
class PBWEngine:
    name: str
    letters: tuple[str, ...]
    swaps: dict[tuple[int, int], Rule]
    elim_head: int
    elim_tail: int
    elim_between: frozenset[int]
    elim_between_exp: int
    elim_rule: Rule
    degree_cap: int | None = None
    _cache: dict = field(default_factory=dict, repr=False)
    _pair_cache: dict = field(default_factory=dict, repr=False)

    @property
    def size(self) -> int:
        return len(self.letters)

    def unit(self) -> tuple[int, ...]:
        return (0,) * self.size

    def letter_mono(self, x: int) -> tuple[int, ...]:
        e = [0] * self.size
        e[x] = 1
        return tuple(e)

    def is_normal(self, mono: tuple[int, ...]) -> bool:
        return not (mono[self.elim_head] and mono[self.elim_tail])

    def word_of(self, mono: tuple[int, ...]) -> Word:
        return tuple(i for i, e in enumerate(mono) for _ in range(e))

    def clear(self):
        self._cache.clear()
        self._pair_cache.clear()

    # core ------------------------------------------------------------------
    def mul_letter(self, mono: tuple[int, ...], x: int) -> Raw:
        """Normal form of ``mono · x``.  The returned dict must not be mutated."""
        key = (mono, x)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if self.degree_cap is not None and sum(mono) + 1 > self.degree_cap:
            raise DegreeCapExceeded(
                f"{self.name}: product of degree {sum(mono) + 1} exceeds cap {self.degree_cap}"
            )
        res = self._mul_letter(mono, x)
        self._cache[key] = res
        return res

    def _mul_letter(self, mono, x) -> Raw:
        y = self._last(mono)
        if y is None:
            return {(self.letter_mono(x), 0): 1}
        if y <= x:
            if x == self.elim_tail and mono[self.elim_head]:
                return self._eliminate(mono)
            m = list(mono)
            m[x] += 1
            return {(tuple(m), 0): 1}
        prefix = list(mono)
        prefix[y] -= 1
        prefix = tuple(prefix)
        out: Raw = {}
        for e, c, word in self.swaps[(y, x)]:
            acc(out, self.fold(prefix, word), e, c)
        return out

    def _eliminate(self, mono) -> Raw:
        # mono = N · head · u   with u in the between-letters; mono · tail
        between = tuple(i for i in range(self.size) if i in self.elim_between)
        base = list(mono)
        base[self.elim_head] -= 1
        u: list[int] = []
        for i in between:
            u.extend([i] * base[i])
            base[i] = 0
        base = tuple(base)
        u = tuple(u)
        s = self.elim_between_exp * len(u)
        out: Raw = {}
        for e, c, word in self.elim_rule:
            acc(out, self.fold(base, word + u), e + s, c)
        return out

    def _last(self, mono):
        for i in range(self.size - 1, -1, -1):
            if mono[i]:
                return i
        return None

    def fold(self, mono: tuple[int, ...], word: Word) -> Raw:
        """Normal form of ``mono · w1 · w2 ...``."""
        cur: Raw = {(mono, 0): 1}
        for x in word:
            nxt: Raw = {}
            for (m, e), c in cur.items():
                acc(nxt, self.mul_letter(m, x), e, c)
            cur = nxt
        return cur

    def mul_mono(self, m1: tuple[int, ...], m2: tuple[int, ...]) -> Raw:
        key = (m1, m2)
        hit = self._pair_cache.get(key)
        if hit is None:
            hit = self.fold(m1, self.word_of(m2))
            self._pair_cache[key] = hit
        return hit

    def mul_raw(self, x: Raw, y: Raw) -> Raw:
        out: Raw = {}
        for (m1, e1), c1 in x.items():
            for (m2, e2), c2 in y.items():
                acc(out, self.mul_mono(m1, m2), e1 + e2, c1 * c2)
        return out

    def nf_word(self, word: Word) -> Raw:
        return self.fold(self.unit(), tuple(word))

    def redexes(self, word: Word) -> list[tuple[int, int]]:
        """All rewrite sites ``(start, end)`` in a word (end exclusive)."""
        sites = []
        for i in range(len(word) - 1):
            if (word[i], word[i + 1]) in self.swaps:
                sites.append((i, i + 2))
        for i, x in enumerate(word):
            if x != self.elim_head:
                continue
            j = i + 1
            while j < len(word) and word[j] in self.elim_between:
                j += 1
            if j < len(word) and word[j] == self.elim_tail:
                sites.append((i, j + 1))
        return sites

    def rewrite_at(self, word: Word, site: tuple[int, int]) -> list[tuple[int, int, Word]]:
        i, j = site
        if j == i + 2 and (word[i], word[i + 1]) in self.swaps:
            rule = self.swaps[(word[i], word[i + 1])]
            return [(e, c, word[:i] + w + word[j:]) for e, c, w in rule]
        u = word[i + 1 : j - 1]
        s = self.elim_between_exp * len(u)
        return [(e + s, c, word[:i] + w + u + word[j:]) for e, c, w in self.elim_rule]

    def mono_of_word(self, word: Word) -> tuple[int, ...]:
        m = [0] * self.size
        for x in word:
            m[x] += 1
        return tuple(m)


def rewrite(engine: PBWEngine, word: Word, strategy: str = "leftmost") -> Raw:
    """Reduce a word by plain one-redex-at-a-time rewriting.

    Independent of :meth:`PBWEngine.mul_letter`; used to gather confluence
    evidence.  ``strategy`` picks the leftmost or rightmost redex.
    """
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    pick = min if strategy == "leftmost" else max
    memo: dict[Word, Raw] = {}

    def go(w: Word) -> Raw:
        hit = memo.get(w)
        if hit is not None:
            return hit
        sites = engine.redexes(w)
        if not sites:
            res = {(engine.mono_of_word(w), 0): 1}
        else:
            site = pick(sites, key=lambda s: s[0])
            res = {}
            for e, c, w2 in engine.rewrite_at(w, site):
                acc(res, go(w2), e, c)
        memo[w] = res
        return res

    return go(tuple(word))
