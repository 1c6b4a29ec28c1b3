"""The plain-text complex file format.

One maximal simplex per line, vertex labels separated by whitespace.
'#' starts a comment; a comment of the form '# surface: NAME' declares
which closed surface the file is expected to triangulate.  Blank lines
are ignored.  Files are UTF-8, written with LF; CRLF is tolerated on
read.  A file with no simplex lines is a parse error.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .complexes import SimplicialComplex, build_complex, check_label
from .errors import MalformedInputError, ParseError

__all__ = [
    "ComplexFile",
    "parse_complex_text",
    "parse_complex_file",
    "complex_to_text",
    "write_complex_file",
]

_SURFACE_RE = re.compile(r"#\s*surface:\s*(\S+)")


@dataclass(frozen=True)
class ComplexFile:
    """Parsed file: the simplex lines as given, plus any declared surface."""

    maximal_simplices: tuple[tuple[str, ...], ...]
    surface_name: str | None = None

    def complex(self) -> SimplicialComplex:
        return build_complex(self.maximal_simplices)


def parse_complex_text(text: str) -> ComplexFile:
    surface: str | None = None
    simplices: list[tuple[str, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw
        if "#" in line:
            comment = line[line.index("#") :]
            match = _SURFACE_RE.match(comment)
            if match and surface is None:
                surface = match.group(1)
            line = line[: line.index("#")]
        tokens = line.split()
        if not tokens:
            continue
        seen = set()
        for t in tokens:
            try:
                check_label(t)
            except MalformedInputError as err:
                raise ParseError(str(err), line=lineno) from err
            if t in seen:
                raise ParseError(f"duplicate vertex {t!r} in simplex", line=lineno)
            seen.add(t)
        simplices.append(tuple(tokens))
    if not simplices:
        raise ParseError("no simplices in file")
    return ComplexFile(tuple(simplices), surface)


def parse_complex_file(path) -> ComplexFile:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_complex_text(fh.read())


def complex_to_text(complex_: SimplicialComplex, surface_name: str | None = None) -> str:
    """Canonical text for a complex: optional surface header, then the
    maximal simplices one per line in canonical order."""
    lines = []
    if surface_name is not None:
        lines.append(f"# surface: {surface_name}")
    for s in complex_.maximal_simplices():
        lines.append(" ".join(s))
    return "\n".join(lines) + "\n"


def write_complex_file(complex_: SimplicialComplex, path, surface_name: str | None = None) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(complex_to_text(complex_, surface_name))
