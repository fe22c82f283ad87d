"""On-disk cache of translation-map values.

The file is plain UTF-8 text, one τ entry per block::

    qgalois-tau-cache
    format 1
    basis P z1 z2 z3 z4 z1* z2* z3* z4*
    basis C k>=0:a^k b^m c^n k<0:b^m c^n d^-k
    path canonical
    entry 1 0 0 4
    <coefficient>\t<left monomial>\t<right monomial>
    ...
    end

Entries are sorted by key and their lines by basis order, so serialising a
loaded file reproduces it byte for byte.  Writes go through a temporary file
and ``os.replace`` under an ``fcntl`` lock on ``<file>.lock``.
"""

from __future__ import annotations

import contextlib
import fcntl
import os
import re
import tempfile
from dataclasses import dataclass, field
from pathlib import Path

from . import coeff
from .cmod import DEFAULT_TABLE, ActionTable
from .galois import PPElement, TauTable, check_tau_entry
from .linear import from_grouped
from .s7 import PMonomial, render_monomial

MAGIC = "qgalois-tau-cache"
FORMAT_VERSION = 1
BASIS_LINES = (
    "basis P z1 z2 z3 z4 z1* z2* z3* z4*",
    "basis C k>=0:a^k b^m c^n k<0:b^m c^n d^-k",
)
ENV_VAR = "QGALOIS_TAU_CACHE"


class CacheError(ValueError):
    pass


class CacheVersionError(CacheError):
    pass


_LETTER = re.compile(r"z([1-4])(\*?)(?:\^(\d+))?")


def parse_monomial(text: str) -> PMonomial:
    exps = [0] * 8
    if text.strip() == "1":
        return PMonomial()
    for tok in text.split():
        mt = _LETTER.fullmatch(tok)
        if not mt:
            raise CacheError(f"bad monomial {text!r}")
        slot = int(mt.group(1)) - 1 + (4 if mt.group(2) else 0)
        exps[slot] += int(mt.group(3) or 1)
    return PMonomial(*exps)


def default_path() -> Path | None:
    p = os.environ.get(ENV_VAR)
    return Path(p) if p else None


@contextlib.contextmanager
def _locked(path: Path, exclusive: bool):
    lock = Path(str(path) + ".lock")
    lock.parent.mkdir(parents=True, exist_ok=True)
    with open(lock, "a") as fh:
        fcntl.flock(fh, fcntl.LOCK_EX if exclusive else fcntl.LOCK_SH)
        try:
            yield
        finally:
            fcntl.flock(fh, fcntl.LOCK_UN)


def _serialize_entry(key, value: PPElement) -> list[str]:
    terms = value.terms
    order = sorted(terms, key=PPElement._sort_key)
    lines = [f"entry {key[0]} {key[1]} {key[2]} {len(order)}"]
    for bk in order:
        lines.append(f"{coeff.render(terms[bk])}\t{render_monomial(bk[0])}\t{render_monomial(bk[1])}")
    return lines


@dataclass
class CacheFile:
    path: str = "canonical"
    entries: dict = field(default_factory=dict)
    rejected: list = field(default_factory=list)

    def dumps(self) -> str:
        lines = [MAGIC, f"format {FORMAT_VERSION}", *BASIS_LINES, f"path {self.path}"]
        for key in sorted(self.entries):
            lines.extend(_serialize_entry(key, self.entries[key]))
        lines.append("end")
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str, verify: bool = False, action: ActionTable = DEFAULT_TABLE) -> "CacheFile":
        lines = text.split("\n")
        if lines and lines[-1] == "":
            lines.pop()
        it = iter(enumerate(lines, 1))

        def nxt():
            try:
                return next(it)
            except StopIteration:
                raise CacheError("unexpected end of file") from None

        _, first = nxt()
        if first != MAGIC:
            raise CacheError("not a tau cache file")
        no, fmt = nxt()
        mt = re.fullmatch(r"format (\d+)", fmt)
        if not mt:
            raise CacheError(f"line {no}: missing format line")
        if int(mt.group(1)) != FORMAT_VERSION:
            raise CacheVersionError(f"format {mt.group(1)} is not supported (expected {FORMAT_VERSION})")
        for want in BASIS_LINES:
            no, got = nxt()
            if got != want:
                raise CacheVersionError(f"line {no}: basis convention mismatch: {got!r}")
        no, pline = nxt()
        if not pline.startswith("path ") or pline[5:] not in ("canonical", "alternate"):
            raise CacheError(f"line {no}: bad path line {pline!r}")
        out = cls(path=pline[5:])
        while True:
            no, line = nxt()
            if line == "end":
                break
            parts = line.split()
            if len(parts) != 5 or parts[0] != "entry":
                raise CacheError(f"line {no}: expected an entry header, got {line!r}")
            try:
                k, m, n, count = map(int, parts[1:])
            except ValueError:
                raise CacheError(f"line {no}: bad entry header {line!r}") from None
            if m < 0 or n < 0 or count < 0:
                raise CacheError(f"line {no}: bad entry header {line!r}")
            key = (k, m, n)
            if key in out.entries:
                raise CacheError(f"line {no}: duplicate entry {key}")
            grouped = {}
            for _ in range(count):
                no, tl = nxt()
                cols = tl.split("\t")
                if len(cols) != 3:
                    raise CacheError(f"line {no}: expected 3 tab-separated fields")
                try:
                    c = coeff.parse(cols[0])
                except ValueError as exc:
                    raise CacheError(f"line {no}: {exc}") from None
                grouped[(parse_monomial(cols[1]), parse_monomial(cols[2]))] = c
            value = PPElement._wrap(from_grouped(grouped))
            if verify and not check_tau_entry(key, value, action):
                out.rejected.append(key)
                continue
            out.entries[key] = value
        extra = next(it, None)
        if extra is not None:
            raise CacheError(f"line {extra[0]}: trailing data after 'end'")
        return out

    @classmethod
    def load(cls, file, verify: bool = False, action: ActionTable = DEFAULT_TABLE) -> "CacheFile":
        file = Path(file)
        with _locked(file, exclusive=False):
            text = file.read_text(encoding="utf-8")
        return cls.loads(text, verify=verify, action=action)

    def save(self, file) -> None:
        file = Path(file)
        data = self.dumps()
        with _locked(file, exclusive=True):
            fd, tmp = tempfile.mkstemp(dir=file.parent or ".", prefix=file.name + ".", suffix=".tmp")
            try:
                with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
                    fh.write(data)
                    fh.flush()
                    os.fsync(fh.fileno())
                os.replace(tmp, file)
            except BaseException:
                with contextlib.suppress(FileNotFoundError):
                    os.unlink(tmp)
                raise

    @classmethod
    def from_table(cls, table: TauTable) -> "CacheFile":
        return cls(path=table.path, entries=dict(table.entries))

    def fill(self, table: TauTable) -> int:
        """Copy entries into ``table`` (same path only); returns how many were new."""
        if table.path != self.path:
            raise CacheError(f"cache holds the {self.path} path, table uses {table.path}")
        added = 0
        for key, value in self.entries.items():
            if key not in table:
                table.insert(key, value)
                added += 1
        return added


def load_into(table: TauTable, file) -> int:
    file = Path(file)
    if not file.exists():
        return 0
    return CacheFile.load(file, verify=table.verify, action=table.action).fill(table)


def store(table: TauTable, file) -> None:
    """Merge the table into the file on disk (existing entries are kept)."""
    file = Path(file)
    merged = CacheFile.from_table(table)
    if file.exists():
        old = CacheFile.load(file)
        if old.path == merged.path:
            for key, value in old.entries.items():
                merged.entries.setdefault(key, value)
    merged.save(file)


def check(file, action: ActionTable = DEFAULT_TABLE) -> CacheFile:
    """Load with χ-verification; inspect ``.rejected`` for bad entries."""
    return CacheFile.load(file, verify=True, action=action)


def gc(file, action: ActionTable = DEFAULT_TABLE) -> list:
    """Drop entries that fail verification and rewrite the file canonically."""
    cf = check(file, action)
    cf.save(file)
    return cf.rejected
