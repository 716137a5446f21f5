"""Plain-text algebra files.

::

    # comment
    n 3
    elements a b c
    dot
    0 0 0
    1 1 1
    0 0 0
    star
    0 1 0
    1 0 1
    0 1 0

``elements`` is optional; either operation section may be omitted (but not
both).  Entries are 0-based indices.  The printer emits single spaces and the
dot section before the star section, so ``format(parse(format(a)))`` is stable.
"""
from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import Optional, Union

from .core import DOT, STAR, CayleyTable
from .errors import AlgebraSyntaxError, EntryRangeError
from .pentagon import PentagonAlgebra, make_apa


@dataclass(frozen=True)
class AlgebraFile:
    n: int
    labels: Optional[tuple]
    dot: Optional[CayleyTable]
    star: Optional[CayleyTable]


def _tokens(text):
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        col = len(body) - len(body.lstrip()) + 1
        yield lineno, col, body.split()


def parse_algebra_file(text: str) -> AlgebraFile:
    lines = list(_tokens(text))
    if not lines:
        raise AlgebraSyntaxError("empty algebra file", 1, 1)
    lineno, col, words = lines[0]
    if words[0] != "n" or len(words) != 2 or not words[1].isdigit() or int(words[1]) < 1:
        raise AlgebraSyntaxError("expected header 'n <positive int>'", lineno, col)
    n = int(words[1])
    i = 1
    labels = None
    if i < len(lines) and lines[i][2][0] == "elements":
        lineno, col, words = lines[i]
        labels = tuple(words[1:])
        if len(labels) != n:
            raise AlgebraSyntaxError(f"expected {n} element labels, got {len(labels)}", lineno, col)
        if len(set(labels)) != n:
            raise AlgebraSyntaxError("element labels must be distinct", lineno, col)
        i += 1
    sections = {}
    while i < len(lines):
        lineno, col, words = lines[i]
        if words[0] not in (DOT, STAR) or len(words) != 1:
            raise AlgebraSyntaxError(f"expected 'dot' or 'star', got {' '.join(words)!r}", lineno, col)
        name = words[0]
        if name in sections:
            raise AlgebraSyntaxError(f"duplicate section {name!r}", lineno, col)
        if name == DOT and STAR in sections:
            raise AlgebraSyntaxError("the dot section must precede the star section", lineno, col)
        rows = []
        for r in range(n):
            i += 1
            if i >= len(lines):
                raise AlgebraSyntaxError(f"section {name!r} has {r} of {n} rows", lineno, col)
            rl, rc, cells = lines[i]
            if len(cells) != n:
                raise AlgebraSyntaxError(f"expected {n} entries, got {len(cells)}", rl, rc)
            row = []
            raw = text.splitlines()[rl - 1]
            pos = 0
            for cell in cells:
                pos = raw.index(cell, pos)
                if not cell.isdigit():
                    raise AlgebraSyntaxError(f"entry {cell!r} is not a non-negative integer", rl, pos + 1)
                v = int(cell)
                if v >= n:
                    raise EntryRangeError(f"entry {v} is out of range 0..{n - 1}", rl, pos + 1)
                row.append(v)
                pos += len(cell)
            rows.append(row)
        sections[name] = CayleyTable(rows, labels)
        i += 1
    if not sections:
        raise AlgebraSyntaxError("no 'dot' or 'star' section", lines[0][0], 1)
    return AlgebraFile(n, labels, sections.get(DOT), sections.get(STAR))


def parse_algebra(text: str) -> Union[CayleyTable, PentagonAlgebra]:
    """A two-operation file gives a (validated, not necessarily valid) PentagonAlgebra."""
    f = parse_algebra_file(text)
    if f.dot is not None and f.star is not None:
        return make_apa(f.dot, f.star)
    return f.dot if f.dot is not None else f.star


def format_algebra(dot: Optional[CayleyTable] = None, star: Optional[CayleyTable] = None,
                   labels=None) -> str:
    tables = [t for t in (dot, star) if t is not None]
    if not tables:
        raise ValueError("nothing to print")
    n = tables[0].n
    if labels is None:
        labels = next((t.labels for t in tables if t.labels), None)
    out = [f"n {n}"]
    if labels:
        out.append("elements " + " ".join(labels))
    for name, t in ((DOT, dot), (STAR, star)):
        if t is None:
            continue
        out.append(name)
        out.extend(" ".join(str(v) for v in row) for row in t.tolist())
    return "\n".join(out) + "\n"


def format_apa(p: PentagonAlgebra) -> str:
    return format_algebra(p.dot, p.star, p.labels)


def read_algebra(path) -> AlgebraFile:
    with open(path, encoding="utf-8") as fh:
        return parse_algebra_file(fh.read())


def write_algebra(path, dot=None, star=None, labels=None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_algebra(dot, star, labels))


def data_path(name: str):
    """Path of a shipped example file, e.g. ``data_path("ex_left.pa")``."""
    path = resources.files("pentalg") / "data" / name
    if not path.is_file():
        raise FileNotFoundError(f"no shipped example named {name!r}")
    return path


def shipped_examples() -> list:
    return sorted(p.name for p in (resources.files("pentalg") / "data").iterdir() if p.name.endswith(".pa"))
