"""The HGX interchange format.

Matrix form (the canonical one): a header line ``m n`` followed by ``m``
lines of exactly ``n`` characters from ``01``, rows being edges.  Blank
lines and ``#`` comments are ignored.  A JSON alternative
``{"vertices": n, "edges": [[vertex indices], ...]}`` is accepted for
convenience; duplicate indices inside one edge are rejected.
"""

from __future__ import annotations

import json

from .errors import HypergraphError
from .hypergraph import Hypergraph, edge_mask


class ParseError(HypergraphError):
    """Malformed HGX input; carries the offending 1-based line number."""

    def __init__(self, message: str, line: int = 0):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


def parse_hgx(text: str) -> Hypergraph:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _parse_json(text)
    lines = []  # (line number, content) with comments and blanks removed
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lines.append((i, line))
    if not lines:
        raise ParseError("empty input")
    header_no, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise ParseError("header must be 'm n'", header_no)
    try:
        m, n = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError("header must contain two integers", header_no) from None
    if m < 0 or n < 0:
        raise ParseError("sides must be non-negative", header_no)
    body = lines[1:]
    if n == 0:
        # zero-width rows are blank lines, which the format ignores; the
        # header alone determines the matrix
        if body:
            raise ParseError("no matrix rows expected when there are 0 vertices", body[0][0])
        return Hypergraph(m, 0, (0,) * m)
    if len(body) != m:
        raise ParseError(f"expected {m} matrix rows, found {len(body)}", header_no)
    rows = []
    for line_no, line in body:
        if len(line) != n:
            raise ParseError(f"row needs exactly {n} characters, got {len(line)}", line_no)
        row = 0
        for j, ch in enumerate(line):
            if ch == "1":
                row |= 1 << j
            elif ch != "0":
                raise ParseError(f"bad character {ch!r}", line_no)
        rows.append(row)
    try:
        return Hypergraph(m, n, tuple(rows))
    except HypergraphError as exc:
        raise ParseError(str(exc), header_no) from None


def _parse_json(text: str) -> Hypergraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(doc, dict) or "vertices" not in doc or "edges" not in doc:
        raise ParseError("JSON form needs 'vertices' and 'edges'")
    n = doc["vertices"]
    edges = doc["edges"]
    if not isinstance(n, int) or n < 0:
        raise ParseError("'vertices' must be a non-negative integer")
    if not isinstance(edges, list):
        raise ParseError("'edges' must be a list of vertex-index lists")
    rows = []
    for idx, edge in enumerate(edges):
        if not isinstance(edge, list) or not all(isinstance(v, int) for v in edge):
            raise ParseError(f"edge {idx} must be a list of integers")
        if len(set(edge)) != len(edge):
            raise ParseError(f"edge {idx} repeats a vertex")
        try:
            rows.append(edge_mask(edge, n))
        except HypergraphError as exc:
            raise ParseError(f"edge {idx}: {exc}") from None
    try:
        return Hypergraph(len(rows), n, tuple(rows))
    except HypergraphError as exc:
        raise ParseError(str(exc)) from None


def serialize_hgx(h: Hypergraph) -> str:
    """Matrix form; ``parse_hgx(serialize_hgx(h)) == h`` bit-exactly.

    Zero-width rows are left implicit (they would be blank lines).
    """
    lines = [f"{h.m} {h.n}"]
    if h.n:
        for row in h.rows:
            lines.append("".join("1" if row >> j & 1 else "0" for j in range(h.n)))
    return "\n".join(lines)
