"""Named verification suites S1..S8.

Every suite is a deterministic function of ``(suite, max_degree, seed)``; only
S1 samples, and it draws from ``random.Random(seed)``.  All other suites are
exhaustive over their ranges.  A suite returns a :class:`SuiteReport`; a
failing report always carries its first counterexample.
"""

from __future__ import annotations

import logging
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import cmod, galois, identities, s7, suq2
from .cmod import ActionTable, CElement, CIndex, DEFAULT_TABLE
from .galois import (
    PCElement, PCCElement, PPElement, TauTable, b_generators, chi, check_tau_entry,
    delta_r, delta_r_mono_raw, is_coinvariant, one_tensor, pc, pp, triangle,
)
from .linear import Raw, acc, acc_term, specialize
from .s7 import PElement

log = logging.getLogger(__name__)

SUITES = ("S1", "S2", "S3", "S4", "S5", "S6", "S7", "S8")
DEFAULT_Q0 = Fraction(3, 2)


class UnknownSuite(KeyError):
    pass


@dataclass
class SuiteReport:
    suite: str
    params: dict
    cases_run: int = 0
    cases_passed: int = 0
    counterexample: dict | None = None
    failures: list[str] = field(default_factory=list)
    extra: dict = field(default_factory=dict)
    duration: float = 0.0

    @property
    def passed(self) -> bool:
        return self.cases_run == self.cases_passed

    def record(self, case: str, ok: bool, lhs=None, rhs=None):
        self.cases_run += 1
        if ok:
            self.cases_passed += 1
            return
        self.failures.append(case)
        if self.counterexample is None:
            self.counterexample = {
                "case": case,
                "lhs": "" if lhs is None else str(lhs),
                "rhs": "" if rhs is None else str(rhs),
            }

    def header(self) -> dict:
        h = {"suite": self.suite}
        h.update({k: str(v) for k, v in self.params.items()})
        h.update({k: str(v) for k, v in self.extra.items()})
        h["cases_run"] = str(self.cases_run)
        h["cases_passed"] = str(self.cases_passed)
        h["status"] = "PASS" if self.passed else "FAIL"
        return h

    def serialize(self, with_duration: bool = True) -> str:
        lines = [f"{k}: {v}" for k, v in self.header().items()]
        if with_duration:
            lines.append(f"duration_s: {self.duration:.3f}")
        if self.counterexample is not None:
            for k in ("case", "lhs", "rhs"):
                lines.append(f"counterexample.{k}: {self.counterexample[k]}")
        lines += [f"failure: {f}" for f in self.failures]
        return "\n".join(lines) + "\n"

    def canonical(self) -> str:
        """Serialization without wall-clock data (bit-for-bit reproducible)."""
        return self.serialize(with_duration=False)

    def summary_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.suite} {status} {self.cases_passed}/{self.cases_run}"


# helpers ----------------------------------------------------------------------

def c_indices(max_degree: int) -> list[CIndex]:
    return [CIndex(*x) for x in suq2.basis_upto(max_degree)]


def _word_str(word) -> str:
    return " ".join(s7.LETTERS[x] for x in word) or "1"


def sphere_relations() -> list[tuple[str, list[tuple[int, int, tuple[int, ...]]]]]:
    """Defining relations of A(S^7_q) as unreduced word polynomials ``Σ c q^e w``."""
    rels = []
    for i in range(4):
        for j in range(i + 1, 4):
            rels.append((f"z{i+1} z{j+1} - q z{j+1} z{i+1}", [(0, 1, (i, j)), (1, -1, (j, i))]))
            rels.append((f"z{j+1}* z{i+1}* - q z{i+1}* z{j+1}*",
                         [(0, 1, (4 + j, 4 + i)), (1, -1, (4 + i, 4 + j))]))
    for i in range(4):
        for j in range(4):
            if i != j:
                rels.append((f"z{j+1}* z{i+1} - q z{i+1} z{j+1}*", [(0, 1, (4 + j, i)), (1, -1, (i, 4 + j))]))
    for k in range(4):
        terms = [(0, 1, (4 + k, k)), (0, -1, (k, 4 + k))]
        for j in range(k):
            terms += [(0, -1, (j, 4 + j)), (2, 1, (j, 4 + j))]
        rels.append((f"z{k+1}* z{k+1} - z{k+1} z{k+1}* - (1-q^2) sum_(j<{k+1}) z_j z_j*", terms))
    rels.append(("sum_k z_k z_k* - 1", [(0, 1, (k, 4 + k)) for k in range(4)] + [(0, -1, ())]))
    return rels


def _act_relation(x: Raw, terms, table: ActionTable) -> Raw:
    out: Raw = {}
    for e, c, word in terms:
        acc(out, galois.triangle_word_raw(x, word, table), e, c)
    return out


def sigma4_relations() -> list[tuple[str, PElement]]:
    """LHS - RHS of the relations among a, a*, b, b*, R (and their adjoints)."""
    g = b_generators()
    a, a_, b, b_, R = g["a"], g["a*"], g["b"], g["b*"], g["R"]
    one = PElement.one()
    R2 = R * R
    return [
        ("R a = q^-2 a R", R * a - (a * R).shift(-2)),
        ("R b = q^2 b R", R * b - (b * R).shift(2)),
        ("a b = q^3 b a", a * b - (b * a).shift(3)),
        ("a b* = q^-1 b* a", a * b_ - (b_ * a).shift(-1)),
        ("a a* + q^2 b b* = R(1 - q^2 R)", a * a_ + (b * b_).shift(2) - R * (one - R.shift(2))),
        ("a a* = q^2 a* a + (1 - q^2) R^2", a * a_ - (a_ * a).shift(2) - (R2 - R2.shift(2))),
        ("b* b = q^4 b b* + (1 - q^2) R", b_ * b - (b * b_).shift(4) - (R - R.shift(2))),
        ("R a* = q^2 a* R", R * a_ - (a_ * R).shift(2)),
        ("R b* = q^-2 b* R", R * b_ - (b_ * R).shift(-2)),
        ("b* a* = q^3 a* b*", b_ * a_ - (a_ * b_).shift(3)),
        ("b a* = q^-1 a* b", b * a_ - (a_ * b).shift(-1)),
    ]


# suites -----------------------------------------------------------------------

def suite_s1(report: SuiteReport, max_degree: int, seed: int, table: ActionTable,
             samples: int = 1000, max_length: int = 8):
    rng = random.Random(seed)
    report.params.update(samples=samples, max_length=max_length)
    for engine, nf, nf_rewrite, letters in (
        ("S7", s7.nf, s7.nf_rewrite, 8),
        ("SU2", suq2.nf, suq2.nf_rewrite, 4),
    ):
        for _ in range(samples):
            word = tuple(rng.randrange(letters) for _ in range(rng.randint(0, max_length)))
            left = nf_rewrite(word, "leftmost")
            right = nf_rewrite(word, "rightmost")
            prod = nf(word)
            ok = left == right == prod
            report.record(f"{engine} word={list(word)}", ok, left, right if left != right else prod)


def suite_s2(report: SuiteReport, max_degree: int, seed: int, table: ActionTable):
    for name, terms in sphere_relations():
        for c in c_indices(max_degree):
            x = {((s7.UNIT, c), 0): 1}
            res = PCElement._wrap(_act_relation(x, terms, table))
            report.record(f"(1 ⊗ r{list(c)}) ◁ [{name}]", res.is_zero(), res, 0)


def _run_families(report: SuiteReport, families, bound: int, taus: TauTable, table: ActionTable):
    for fam in families:
        n_before = report.cases_run
        for idn in identities.identities(fam, bound):
            ok, lhs, rhs = identities.check(idn, taus, table)
            report.record(f"{fam}.{idn.label} at (k,m,n)={idn.index}", ok, lhs, rhs)
        report.extra[f"cases.{fam}"] = report.cases_run - n_before


def suite_s3(report, max_degree, seed, table, taus=None):
    _run_families(report, identities.RECURSION_FAMILIES, max_degree, taus or galois.default_tau_table(), table)


def suite_s5(report, max_degree, seed, table, taus=None):
    _run_families(report, identities.AUXILIARY_FAMILIES, max_degree, taus or galois.default_tau_table(), table)


def suite_s4(report, max_degree, seed, table, taus=None):
    taus = taus or galois.default_tau_table()
    for c in c_indices(max_degree):
        value = galois.tau(*c, table=taus)
        img = chi(value, table)
        target = one_tensor(*c)
        report.record(f"chi(tau{tuple(c)})", img == target, img, target)


def suite_s6(report, max_degree, seed, table):
    for name, rel in sigma4_relations():
        report.record(f"relation {name}", rel.is_zero(), rel, 0)
    gens = b_generators()
    for name, x in gens.items():
        ok = is_coinvariant(x, table)
        report.record(f"coinvariant {name}", ok, delta_r(x, table), pc(x, CElement.one()))
    monos = [s7.monomial(*m) for m in s7.basis_upto(max_degree)]
    for name, x in gens.items():
        for u in monos:
            ux = u * x
            for v in monos:
                lhs = chi(pp(ux, v), table)
                rhs = chi(pp(u, x * v), table)
                report.record(f"balance x={name} u={u} v={v}", lhs == rhs, lhs, rhs)


def suite_s7(report, max_degree, seed, table):
    for m in s7.basis_upto(max_degree):
        d = delta_r_mono_raw(m, table)
        back = PElement._wrap(galois.counit_leg_raw(d))
        target = s7.monomial(*m)
        report.record(f"counit {s7.render_monomial(m)}", back == target, back, target)
    for m in s7.basis_upto(max(max_degree - 1, 0)):
        d = delta_r_mono_raw(m, table)
        left: Raw = {}
        right: Raw = {}
        for ((u, c), e), coef in d.items():
            for ((u2, c1), e2), c2 in delta_r_mono_raw(u, table).items():
                acc_term(left, (u2, c1, c), e + e2, coef * c2)
            for ((c1, c2_), e2), c3 in cmod.coproduct_raw(c).items():
                acc_term(right, (u, c1, c2_), e + e2, coef * c3)
        lhs, rhs = PCCElement._wrap(left), PCCElement._wrap(right)
        report.record(f"coassociativity {s7.render_monomial(m)}", lhs == rhs, lhs, rhs)


def exact_rank(columns: list[dict]) -> int:
    """Rank of a sparse rational matrix given as columns ``{row_key: value}``."""
    pivots: dict = {}  # row_key -> reduced column with leading entry 1 at row_key
    order: dict = {}
    rank = 0
    for col in columns:
        v = {r: Fraction(x) for r, x in col.items() if x}
        while v:
            lead = min(v, key=lambda r: order.setdefault(r, len(order)))
            p = pivots.get(lead)
            if p is None:
                inv = 1 / v[lead]
                pivots[lead] = {r: x * inv for r, x in v.items()}
                rank += 1
                break
            f = v[lead]
            for r, x in p.items():
                y = v.get(r, 0) - f * x
                if y:
                    v[r] = y
                else:
                    v.pop(r, None)
    return rank


def suite_s8(report, max_degree, seed, table, q0=DEFAULT_Q0):
    q0 = Fraction(q0)
    report.params.update(q0=f"{q0.numerator}/{q0.denominator}")
    cols = []
    for c in c_indices(max_degree):
        for m in s7.basis_upto(max_degree):
            img = galois.psi(CElement.basis(c), s7.monomial(*m), table)
            cols.append(specialize(img.raw, q0))
    rank = exact_rank(cols)
    report.extra.update(columns=len(cols), rank=rank)
    report.record(
        f"psi full column rank on {len(cols)} columns at q={q0}", rank == len(cols),
        f"rank {rank}", f"columns {len(cols)}",
    )


_RUNNERS: dict[str, Callable] = {
    "S1": suite_s1, "S2": suite_s2, "S3": suite_s3, "S4": suite_s4,
    "S5": suite_s5, "S6": suite_s6, "S7": suite_s7, "S8": suite_s8,
}

DESCRIPTIONS = {
    "S1": "confluence: production normal form vs leftmost/rightmost rewriting",
    "S2": "well-definedness of the right action on all sphere relations",
    "S3": "recursion-compatibility identities of tau under chi",
    "S4": "chi(tau(k,m,n)) = 1 ⊗ r[k,m,n]",
    "S5": "auxiliary identities of tau under chi",
    "S6": "quantum 4-sphere presentation, coinvariance, B-balance of chi",
    "S7": "coaction counit and coassociativity laws",
    "S8": "entwining map full column rank at a rational specialization",
}


def run_suite(suite: str, max_degree: int, seed: int = 0, table: ActionTable | None = None,
              **kwargs) -> SuiteReport:
    """Run one suite; extra keyword arguments are passed to the suite function."""
    if suite not in _RUNNERS:
        raise UnknownSuite(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)}")
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    table = table or DEFAULT_TABLE
    report = SuiteReport(suite, {"max_degree": max_degree, "seed": seed})
    if table.mutated:
        report.params["mutation"] = ",".join(sorted(table.flips))
    t0 = time.perf_counter()
    try:
        _RUNNERS[suite](report, max_degree, seed, table, **kwargs)
    except s7.DegreeCapExceeded as exc:
        raise s7.DegreeCapExceeded(f"suite {suite} (max_degree={max_degree}): {exc}") from exc
    report.duration = time.perf_counter() - t0
    log.info("%s (%.2fs)", report.summary_line(), report.duration)
    return report


def mutation_guard(entries=cmod.ACTION_ENTRIES, s2_degree: int = 3, s4_degree: int = 4) -> dict:
    """For each action-table entry, flip its sign and report which of S2/S4 catch it."""
    taus = galois.default_tau_table()
    out = {}
    for entry in entries:
        table = ActionTable(flips=[entry])
        r2 = run_suite("S2", s2_degree, table=table)
        r4 = run_suite("S4", s4_degree, table=table, taus=taus)
        out[entry] = (r2, r4)
    return out
