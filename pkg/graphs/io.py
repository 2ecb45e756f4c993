"""Text formats for graphs, orientations, labelings, sequences and realisations.

Edge list::

    # comment
    4
    0 1
    1 2

graph6 is accepted wherever a graph is read: a first data line that is not a
plain vertex count is decoded with networkx.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Optional

import networkx as nx

from algebra.f2 import bits_to_string
from graphs.model import EdgeLabeling, Graph, InversionSequence, Orientation, Realisation
from utils.errors import GraphFormatError, PreconditionError

logger = logging.getLogger(__name__)


def _data_lines(text: str) -> list[tuple[int, str]]:
    """Non-empty, non-comment lines with their 1-based line numbers."""
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((number, line))
    return lines


def _ints(line: str, number: int, count: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise GraphFormatError(f"expected {count} integers, got '{line}'", number)
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise GraphFormatError(f"non-integer token in '{line}'", number) from None


def _header(lines: list[tuple[int, str]], what: str) -> int:
    if not lines:
        raise GraphFormatError(f"empty {what} file")
    number, line = lines[0]
    (n,) = _ints(line, number, 1)
    if n < 0:
        raise GraphFormatError(f"negative vertex count {n}", number)
    return n


# ============================================================================
# Graph
# ============================================================================


def parse_graph(text: str, multigraph: bool = False) -> Graph:
    """Parse an edge list or a graph6 string."""
    lines = _data_lines(text)
    if lines and not lines[0][1].isdigit():
        return parse_graph6(lines[0][1])
    n = _header(lines, "graph")
    edges = []
    for number, line in lines[1:]:
        u, v = _ints(line, number, 2)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex index out of range in '{line}' (n={n})", number)
        edges.append((u, v))
    try:
        return Graph(n, tuple(edges), multigraph)
    except PreconditionError as e:
        raise GraphFormatError(str(e)) from e


def parse_graph6(token: str) -> Graph:
    try:
        G = nx.from_graph6_bytes(token.strip().encode("ascii"))
    except (ValueError, nx.NetworkXError, UnicodeEncodeError) as e:
        raise GraphFormatError(f"invalid graph6 string '{token}': {e}") from e
    edges = sorted((u, v) if u < v else (v, u) for u, v in G.edges())
    return Graph(G.number_of_nodes(), tuple(edges))


def serialize_graph(graph: Graph) -> str:
    out = [f"{graph.n}"]
    out.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(out) + "\n"


def serialize_graph6(graph: Graph) -> str:
    if graph.multigraph:
        raise PreconditionError("graph6 cannot encode parallel edges", hypothesis="simple graph")
    return nx.to_graph6_bytes(graph.to_networkx(), header=False).decode("ascii")


# ============================================================================
# Orientation and labeling
# ============================================================================


def parse_orientation(text: str, graph: Graph) -> Orientation:
    """Header ``n`` then one arc ``u v`` (meaning u->v) per edge."""
    lines = _data_lines(text)
    n = _header(lines, "orientation")
    if n != graph.n:
        raise GraphFormatError(f"orientation has {n} vertices, graph has {graph.n}")
    arcs = []
    for number, line in lines[1:]:
        u, v = _ints(line, number, 2)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex index out of range in '{line}'", number)
        arcs.append((u, v))
    try:
        return Orientation.from_arcs(graph, arcs)
    except PreconditionError as e:
        raise GraphFormatError(f"orientation does not match graph: {e}") from e


def serialize_orientation(orientation: Orientation) -> str:
    out = [f"{orientation.graph.n}"]
    out.extend(f"{u} {v}" for u, v in orientation.arcs())
    return "\n".join(out) + "\n"


def parse_labeling(text: str, graph: Graph) -> EdgeLabeling:
    """Lines ``u v b``; parallel edges take their labels in order of appearance."""
    values: list[Optional[int]] = [None] * graph.m
    used: dict[tuple[int, int], int] = {}
    for number, line in _data_lines(text):
        u, v, b = _ints(line, number, 3)
        if b not in (0, 1):
            raise GraphFormatError(f"label must be 0 or 1, got {b}", number)
        ids = graph.edge_ids(u, v) if 0 <= u < graph.n and 0 <= v < graph.n else ()
        key = (min(u, v), max(u, v))
        k = used.get(key, 0)
        if k >= len(ids):
            raise GraphFormatError(f"no (further) edge {u} {v} in graph", number)
        used[key] = k + 1
        values[ids[k]] = b
    missing = [e for e, b in enumerate(values) if b is None]
    if missing:
        raise GraphFormatError(f"labeling misses edges {missing[:5]}")
    return EdgeLabeling.from_values(graph, values)


def serialize_labeling(labeling: EdgeLabeling) -> str:
    g = labeling.graph
    return "".join(f"{u} {v} {labeling.value(e)}\n" for e, (u, v) in enumerate(g.edges))


# ============================================================================
# Sequence and realisation
# ============================================================================


def parse_sequence(text: str, n: Optional[int] = None) -> InversionSequence:
    """One set per line; an empty line is an empty set; ``#`` lines are skipped."""
    raw_lines = text.split("\n")
    if raw_lines and raw_lines[-1] == "":
        raw_lines.pop()
    sets = []
    for number, raw in enumerate(raw_lines, start=1):
        if raw.lstrip().startswith("#"):
            continue
        try:
            members = frozenset(int(p) for p in raw.split())
        except ValueError:
            raise GraphFormatError(f"non-integer vertex in '{raw}'", number) from None
        if n is not None and any(not 0 <= v < n for v in members):
            raise GraphFormatError(f"vertex index out of range in '{raw}' (n={n})", number)
        sets.append(members)
    return InversionSequence(tuple(sets))


def serialize_sequence(sequence: InversionSequence) -> str:
    return "".join(" ".join(str(v) for v in sorted(X)) + "\n" for X in sequence)


def parse_realisation(text: str) -> Realisation:
    """Header ``t n`` (optionally ``strict``), then ``n`` lines of ``t`` characters."""
    raw_lines = text.split("\n")
    if raw_lines and raw_lines[-1] == "":
        raw_lines.pop()
    if not raw_lines:
        raise GraphFormatError("empty realisation file")
    header = raw_lines[0].split()
    if len(header) not in (2, 3) or (len(header) == 3 and header[2] != "strict"):
        raise GraphFormatError(f"bad realisation header '{raw_lines[0]}'", 1)
    try:
        t, n = int(header[0]), int(header[1])
    except ValueError:
        raise GraphFormatError(f"bad realisation header '{raw_lines[0]}'", 1) from None
    body = raw_lines[1:]
    if len(body) != n:
        raise GraphFormatError(f"expected {n} vector lines, got {len(body)}")
    vectors = []
    for number, line in enumerate(body, start=2):
        line = line.strip()
        if len(line) != t or any(ch not in "01" for ch in line):
            raise GraphFormatError(f"expected {t} characters from {{0,1}}, got '{line}'", number)
        vectors.append(sum(1 << i for i, ch in enumerate(line) if ch == "1"))
    try:
        return Realisation(t, tuple(vectors), strict=len(header) == 3)
    except PreconditionError as e:
        raise GraphFormatError(str(e)) from e


def serialize_realisation(realisation: Realisation) -> str:
    header = f"{realisation.dim} {realisation.n}" + (" strict" if realisation.strict else "")
    lines = [header] + [bits_to_string(x, realisation.dim) for x in realisation.vectors]
    return "\n".join(lines) + "\n"


# ============================================================================
# Files
# ============================================================================


def read_text(path: str | Path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise GraphFormatError(f"cannot read {path}: {e}") from e


def write_text(path: str | Path, text: str) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    logger.info(f"Wrote {path}")


def read_graph(path: str | Path, multigraph: bool = False) -> Graph:
    return parse_graph(read_text(path), multigraph)
