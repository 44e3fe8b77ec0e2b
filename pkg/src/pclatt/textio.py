"""Lattice text format, DOT export and the embedded fixtures.

Text format::

    # comment
    elements: 0 a b c 1
    cover: 0 a
    cover: a c
"""

from __future__ import annotations

import re
from pathlib import Path

from pclatt.errors import ParseError
from pclatt.lattice import FiniteLattice, build_lattice

LABEL = re.compile(r"[A-Za-z0-9_*']+")


def parse_lattice_file(text: str) -> FiniteLattice:
    labels: list[str] | None = None
    covers = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, rest = line.partition(":")
        if not sep:
            raise ParseError(lineno, f"expected 'elements:' or 'cover:', got {line!r}")
        key = key.strip()
        fields = rest.split()
        for f in fields:
            if not LABEL.fullmatch(f):
                raise ParseError(lineno, f"invalid label {f!r}")
        if key == "elements":
            if labels is not None:
                raise ParseError(lineno, "duplicate elements line")
            if not fields:
                raise ParseError(lineno, "no elements declared")
            labels = fields
        elif key == "cover":
            if labels is None:
                raise ParseError(lineno, "cover before elements line")
            if len(fields) != 2:
                raise ParseError(lineno, "cover needs exactly two labels")
            covers.append((fields[0], fields[1]))
        else:
            raise ParseError(lineno, f"unknown directive {key!r}")
    if labels is None:
        raise ParseError(0, "missing elements line")
    return build_lattice(labels, covers)


def serialize_lattice(L: FiniteLattice) -> str:
    lines = ["elements: " + " ".join(L.labels)]
    lines += [f"cover: {L.label(x)} {L.label(y)}" for x, y in L.covers()]
    return "\n".join(lines) + "\n"


def export_dot(L: FiniteLattice, name: str = "L") -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    lines += [f'  "{lab}";' for lab in L.labels]
    lines += [f'  "{L.label(x)}" -> "{L.label(y)}";' for x, y in L.covers()]
    lines.append("}")
    return "\n".join(lines) + "\n"


FIXTURES = {
    # N5: 0 < a < c < 1 and 0 < b < 1
    "fig1a": """\
elements: 0 a b c 1
cover: 0 a
cover: 0 b
cover: a c
cover: c 1
cover: b 1
""",
    # 2 x 3 grid: c = a∨b, b < d
    "fig1b": """\
elements: 0 a b c d 1
cover: 0 a
cover: 0 b
cover: a c
cover: b c
cover: b d
cover: c 1
cover: d 1
""",
    # four-element Boolean lattice with a new top
    "fig1c": """\
elements: 0 a b c 1
cover: 0 a
cover: 0 b
cover: a c
cover: b c
cover: c 1
""",
}


def fixture(name: str) -> FiniteLattice:
    return parse_lattice_file(FIXTURES[name])


def load_lattice(source: str) -> FiniteLattice:
    """Read a lattice from a path, ``-`` for stdin, or a fixture name."""
    if source == "-":
        import sys

        return parse_lattice_file(sys.stdin.read())
    path = Path(source)
    if not path.exists() and source in FIXTURES:
        return fixture(source)
    return parse_lattice_file(path.read_text(encoding="utf-8"))
