"""Text file formats for arrangements, covector sets and chirotopes.

All three share the conventions: a header line, then one record per line;
``#`` starts a comment; blank lines are ignored. Errors carry line numbers.

Arrangement::

    d=3
    1 0 0 | 0        # a1 .. ad | b   for the hyperplane a.x = b
    1/2 -1 3 | 2/3

Covector set::

    n=2
    00
    +-

Chirotope (signs of the sorted r-tuples in lexicographic order)::

    m=4 r=2
    ++++++
"""

from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path
from typing import Iterator, Union

from .arrangement import Hyperplane, RationalArrangement
from .chirotope import Chirotope
from .oriented_matroid import CovectorSet
from .signvec import SignVector

PathLike = Union[str, Path]


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str = ""):
        self.line = line
        self.source = source
        where = f"{source}:" if source else ""
        where += f"{line}: " if line is not None else ""
        super().__init__(where + message)


def _records(text: str) -> Iterator[tuple[int, str]]:
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def _header(records: list[tuple[int, str]], pattern: str, what: str, source: str):
    if not records:
        raise ParseError(f"missing {what} header", None, source)
    number, line = records[0]
    m = re.fullmatch(pattern, line)
    if not m:
        raise ParseError(f"expected {what} header, got {line!r}", number, source)
    return m


def _rational(token: str, number: int, source: str) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad rational {token!r}", number, source) from None


def parse_arrangement(text: str, source: str = "") -> RationalArrangement:
    records = list(_records(text))
    d = int(_header(records, r"d\s*=\s*(\d+)", "d=<int>", source).group(1))
    if d < 1:
        raise ParseError("dimension must be positive", records[0][0], source)
    hs = []
    for number, line in records[1:]:
        if line.count("|") != 1:
            raise ParseError("expected '<a1> ... <ad> | <b>'", number, source)
        left, right = line.split("|")
        coeffs = [_rational(t, number, source) for t in left.split()]
        rhs = right.split()
        if len(coeffs) != d:
            raise ParseError(f"expected {d} coefficients, got {len(coeffs)}", number, source)
        if len(rhs) != 1:
            raise ParseError("expected one offset after '|'", number, source)
        if not any(coeffs):
            raise ParseError("zero normal vector", number, source)
        h = Hyperplane(coeffs, _rational(rhs[0], number, source))
        for k, g in enumerate(hs):
            if h.same_locus(g):
                raise ParseError(f"hyperplane coincides with hyperplane {k + 1}", number, source)
        hs.append(h)
    if not hs:
        raise ParseError("no hyperplanes", None, source)
    return RationalArrangement(d, hs)


def format_arrangement(A: RationalArrangement, comment: str = "") -> str:
    lines = [f"# {c}" for c in comment.splitlines()] if comment else []
    lines.append(f"d={A.d}")
    for h in A.hyperplanes:
        lines.append(" ".join(str(a) for a in h.normal) + " | " + str(h.offset))
    return "\n".join(lines) + "\n"


def parse_covectors(text: str, source: str = "") -> CovectorSet:
    records = list(_records(text))
    n = int(_header(records, r"n\s*=\s*(\d+)", "n=<int>", source).group(1))
    if n < 1:
        raise ParseError("ground set size must be positive", records[0][0], source)
    vectors = []
    for number, line in records[1:]:
        try:
            v = SignVector.parse(line)
        except ValueError as e:
            raise ParseError(str(e), number, source) from None
        if v.n != n:
            raise ParseError(f"expected length {n}, got {v.n}", number, source)
        vectors.append(v)
    return CovectorSet(n, vectors)


def format_covectors(V: CovectorSet, comment: str = "") -> str:
    lines = [f"# {c}" for c in comment.splitlines()] if comment else []
    lines.append(f"n={V.n}")
    lines.extend(V.strings())
    return "\n".join(lines) + "\n"


def parse_chirotope(text: str, source: str = "") -> Chirotope:
    records = list(_records(text))
    m_ = _header(records, r"m\s*=\s*(\d+)\s+r\s*=\s*(\d+)", "m=<int> r=<int>", source)
    m, r = int(m_.group(1)), int(m_.group(2))
    if len(records) != 2:
        raise ParseError("expected exactly one line of signs", records[-1][0] if len(records) > 2 else None, source)
    number, line = records[1]
    line = line.replace(" ", "")
    try:
        return Chirotope.from_string(m, r, line)
    except ValueError as e:
        raise ParseError(str(e), number, source) from None


def format_chirotope(chi: Chirotope, comment: str = "") -> str:
    lines = [f"# {c}" for c in comment.splitlines()] if comment else []
    lines.append(f"m={chi.m} r={chi.r}")
    lines.append(chi.string())
    return "\n".join(lines) + "\n"


def _read(path: PathLike) -> tuple[str, str]:
    p = Path(path)
    return p.read_text(), str(p)


def read_arrangement(path: PathLike) -> RationalArrangement:
    return parse_arrangement(*_read(path))


def read_covectors(path: PathLike) -> CovectorSet:
    return parse_covectors(*_read(path))


def read_chirotope(path: PathLike) -> Chirotope:
    return parse_chirotope(*_read(path))


def write_arrangement(A: RationalArrangement, path: PathLike, comment: str = "") -> None:
    Path(path).write_text(format_arrangement(A, comment))


def write_covectors(V: CovectorSet, path: PathLike, comment: str = "") -> None:
    Path(path).write_text(format_covectors(V, comment))


def write_chirotope(chi: Chirotope, path: PathLike, comment: str = "") -> None:
    Path(path).write_text(format_chirotope(chi, comment))


def sniff(text: str) -> str:
    """'arrangement', 'covectors' or 'chirotope', judged from the header line."""
    for _, line in _records(text):
        if re.match(r"d\s*=", line):
            return "arrangement"
        if re.match(r"n\s*=", line):
            return "covectors"
        if re.match(r"m\s*=", line):
            return "chirotope"
        break
    raise ParseError("unrecognized header (expected d=, n= or m= r=)", None)


def read_any(path: PathLike):
    text, source = _read(path)
    kind = sniff(text)
    parser = {"arrangement": parse_arrangement, "covectors": parse_covectors, "chirotope": parse_chirotope}[kind]
    return parser(text, source)
