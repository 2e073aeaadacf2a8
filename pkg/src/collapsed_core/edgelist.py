"""Edge-list text format.

    # comment          (lines starting with '#' or 'c' are ignored)
    p <n> <m>
    e <u> <v>          (m lines, 0-based ids)

LF and CRLF line endings are both accepted.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import DuplicateEdgeError, ParseError, SelfLoopError, VertexOutOfRangeError
from .graph import Graph, build_graph


def parse_edgelist(text: str) -> Graph:
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    last = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line[0] in "#c":
            continue
        last = lineno
        parts = line.split()
        if header is None:
            if parts[0] != "p" or len(parts) != 3:
                raise ParseError(lineno, f"expected 'p <n> <m>', got {line!r}")
            header = (_int(parts[1], lineno), _int(parts[2], lineno))
            continue
        if parts[0] != "e" or len(parts) != 3:
            raise ParseError(lineno, f"expected 'e <u> <v>', got {line!r}")
        u, v = _int(parts[1], lineno), _int(parts[2], lineno)
        n = header[0]
        if u >= n or v >= n:
            raise ParseError(lineno, str(VertexOutOfRangeError(max(u, v), n)))
        if u == v:
            raise ParseError(lineno, str(SelfLoopError(u)))
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(lineno, str(DuplicateEdgeError(*key)))
        seen.add(key)
        edges.append((u, v))
    if header is None:
        raise ParseError(last, "missing 'p <n> <m>' header")
    n, m = header
    if len(edges) != m:
        raise ParseError(last, f"header declares {m} edges, found {len(edges)}")
    return build_graph(n, edges)


def _int(token: str, lineno: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(lineno, f"not an integer: {token!r}") from None
    if value < 0:
        raise ParseError(lineno, f"negative value: {token}")
    return value


def format_edgelist(G: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(f"p {G.n} {G.m}")
    lines.extend(f"e {u} {v}" for u, v in G.edges)
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> Graph:
    return parse_edgelist(Path(path).read_text())


def write_instance(path: str | Path, inst) -> Path:
    """Write ``path`` (edge list) and ``path.json`` (sidecar with b, x, k, label)."""
    path = Path(path)
    path.write_text(format_edgelist(inst.graph, inst.label or None))
    sidecar = path.with_name(path.name + ".json")
    sidecar.write_text(json.dumps(inst.sidecar(), sort_keys=True) + "\n")
    return sidecar


def read_sidecar(path: str | Path) -> dict | None:
    path = Path(path)
    sidecar = path.with_name(path.name + ".json")
    if not sidecar.exists():
        return None
    return json.loads(sidecar.read_text())


def parse_witness(text: str, n: int) -> frozenset[int]:
    """One vertex id per line; blank and '#' lines ignored."""
    ids = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        v = _int(line, lineno)
        if v >= n:
            raise VertexOutOfRangeError(v, n)
        ids.add(v)
    return frozenset(ids)
