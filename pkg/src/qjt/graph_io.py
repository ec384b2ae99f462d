"""Simple undirected graphs and parsers for edge-list, Matrix Market, and OFF files.

All parsers accept either a string or a readable text stream, deduplicate
edges (unordered pairs), and reject self-loops. Vertex indices are 0-based
internally; 1-based numbering is handled at the parse boundary only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import IO, Iterable

from .errors import (
    EmptyInputError,
    FaceArityError,
    IndexOutOfRangeError,
    MalformedLineError,
    MissingMagicError,
    NonSquareError,
    SelfLoopError,
    TruncatedFileError,
    UnsupportedHeaderError,
)

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: a vertex count plus a set of unordered edges.

    Edges are stored as (min, max) index pairs; construction canonicalizes
    the orientation and rejects self-loops and out-of-range endpoints.
    """

    vertex_count: int
    edges: frozenset[Edge]

    def __init__(self, vertex_count: int, edges: Iterable[Edge]):
        if vertex_count < 1:
            raise ValueError(f"vertex_count must be positive (got {vertex_count})")
        canonical = set()
        for i, j in edges:
            if i == j:
                raise SelfLoopError(f"self-loop at vertex {i}")
            if not (0 <= i < vertex_count and 0 <= j < vertex_count):
                raise IndexOutOfRangeError(
                    f"edge ({i}, {j}) outside vertex range [0, {vertex_count})"
                )
            canonical.add((i, j) if i < j else (j, i))
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", frozenset(canonical))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)


@dataclass
class ValidationReport:
    """Collected parse and structure findings for a graph.

    Severities are "error", "warning", and "info"; the report is ok iff it
    carries no error.
    """

    issues: list[tuple[str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(severity != "error" for severity, _ in self.issues)

    def add(self, severity: str, message: str) -> None:
        self.issues.append((severity, message))

    def messages(self, severity: str) -> list[str]:
        return [msg for sev, msg in self.issues if sev == severity]


def _as_text(source: str | IO[str]) -> str:
    return source.read() if hasattr(source, "read") else source


def _content_lines(text: str, comment: str = "#") -> list[tuple[int, str]]:
    """Non-blank lines with comments stripped, as (1-based line number, text)."""
    out = []
    for number, raw in enumerate(text.splitlines(), start=1):
        head, _, _ = raw.partition(comment)
        line = head.strip()
        if line:
            out.append((number, line))
    return out


def _int_token(token: str, number: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise MalformedLineError(
            f"line {number}: expected integer token, got {token!r}"
        ) from None


def parse_edge_list(
    source: str | IO[str],
    one_based: bool = False,
    report: ValidationReport | None = None,
) -> Graph:
    """Parse a whitespace-separated edge list.

    Lines hold two vertex indices each; '#' starts a comment. An optional
    first line "m <count>" pins the vertex count, otherwise it is inferred
    as max index + 1. Repeated edges collapse silently (a notice is added
    to `report` when one is given).
    """
    lines = _content_lines(_as_text(source))
    if not lines:
        raise EmptyInputError("no edges or header found in input")

    declared = None
    start = 0
    first_tokens = lines[0][1].split()
    if first_tokens[0] == "m":
        if len(first_tokens) != 2:
            raise MalformedLineError(
                f"line {lines[0][0]}: header must be 'm <count>'"
            )
        declared = _int_token(first_tokens[1], lines[0][0])
        if declared < 1:
            raise MalformedLineError(
                f"line {lines[0][0]}: vertex count must be positive"
            )
        start = 1

    edges: set[Edge] = set()
    duplicates = 0
    max_index = -1
    for number, line in lines[start:]:
        tokens = line.split()
        if len(tokens) != 2:
            raise MalformedLineError(
                f"line {number}: expected two vertex indices, got {len(tokens)} tokens"
            )
        i, j = (_int_token(t, number) for t in tokens)
        if one_based:
            i, j = i - 1, j - 1
        if i == j:
            raise SelfLoopError(f"line {number}: self-loop at vertex {i}")
        for v in (i, j):
            if v < 0 or (declared is not None and v >= declared):
                raise IndexOutOfRangeError(f"line {number}: vertex index {v} out of range")
        edge = (i, j) if i < j else (j, i)
        if edge in edges:
            duplicates += 1
        else:
            edges.add(edge)
        max_index = max(max_index, i, j)

    if declared is None and not edges:
        raise EmptyInputError("input declares no vertex count and contains no edges")
    if duplicates and report is not None:
        report.add("info", f"{duplicates} duplicate edge(s) collapsed")
    return Graph(declared if declared is not None else max_index + 1, edges)


def parse_matrix_market(
    source: str | IO[str],
    report: ValidationReport | None = None,
) -> Graph:
    """Parse a Matrix Market coordinate file as a graph.

    Only the "matrix coordinate pattern symmetric" flavor is supported;
    entries are 1-based and either triangle may be stored.
    """
    text = _as_text(source)
    raw_lines = text.splitlines()
    if not raw_lines or not raw_lines[0].lower().startswith("%%matrixmarket"):
        raise UnsupportedHeaderError("missing %%MatrixMarket header line")
    header = raw_lines[0].split()
    if len(header) != 5:
        raise UnsupportedHeaderError(f"header has {len(header)} fields, expected 5")
    obj, fmt, fld, sym = (token.lower() for token in header[1:])
    expected = (("object", obj, "matrix"), ("format", fmt, "coordinate"),
                ("field", fld, "pattern"), ("symmetry", sym, "symmetric"))
    for name, got, want in expected:
        if got != want:
            raise UnsupportedHeaderError(f"unsupported {name} {got!r} (only {want!r})")

    lines = [
        (number, line.strip())
        for number, line in enumerate(raw_lines[1:], start=2)
        if line.strip() and not line.lstrip().startswith("%")
    ]
    if not lines:
        raise TruncatedFileError("missing size line")

    size_number, size_line = lines[0]
    size_tokens = size_line.split()
    if len(size_tokens) != 3:
        raise MalformedLineError(f"line {size_number}: size line must be 'rows cols nnz'")
    rows, cols, nnz = (_int_token(t, size_number) for t in size_tokens)
    if rows != cols:
        raise NonSquareError(f"{rows}x{cols} matrix is not square")
    if rows < 1:
        raise MalformedLineError(f"line {size_number}: matrix dimension must be positive")

    entries = lines[1:]
    if len(entries) < nnz:
        raise TruncatedFileError(f"expected {nnz} entries, found {len(entries)}")
    if len(entries) > nnz:
        raise MalformedLineError(
            f"line {entries[nnz][0]}: unexpected content after {nnz} declared entries"
        )

    edges: set[Edge] = set()
    duplicates = 0
    for number, line in entries:
        tokens = line.split()
        if len(tokens) != 2:
            raise MalformedLineError(
                f"line {number}: pattern entry must be two indices"
            )
        i, j = (_int_token(t, number) for t in tokens)
        if not (1 <= i <= rows and 1 <= j <= rows):
            raise IndexOutOfRangeError(
                f"line {number}: entry ({i}, {j}) outside 1..{rows}"
            )
        if i == j:
            raise SelfLoopError(f"line {number}: diagonal entry ({i}, {i}) is a self-loop")
        edge = (i - 1, j - 1) if i < j else (j - 1, i - 1)
        if edge in edges:
            duplicates += 1
        else:
            edges.add(edge)

    if duplicates and report is not None:
        report.add("info", f"{duplicates} duplicate entrie(s) collapsed")
    return Graph(rows, edges)


def parse_off_mesh(
    source: str | IO[str],
    report: ValidationReport | None = None,
) -> Graph:
    """Parse an OFF mesh, keeping connectivity only.

    Vertex coordinates are read and discarded; the graph's edges are the
    consecutive-vertex pairs around each face boundary, wrap-around pair
    included, deduplicated across faces.
    """
    lines = _content_lines(_as_text(source))
    if not lines or lines[0][1] != "OFF":
        raise MissingMagicError("input does not start with an OFF line")
    if len(lines) < 2:
        raise TruncatedFileError("missing vertex/face/edge count line")

    count_number, count_line = lines[1]
    count_tokens = count_line.split()
    if len(count_tokens) != 3:
        raise MalformedLineError(
            f"line {count_number}: expected 'nVertices nFaces nEdges'"
        )
    n_vertices, n_faces, _ = (_int_token(t, count_number) for t in count_tokens)
    if n_vertices < 1:
        raise MalformedLineError(f"line {count_number}: vertex count must be positive")

    body = lines[2:]
    if len(body) < n_vertices + n_faces:
        raise TruncatedFileError(
            f"expected {n_vertices} vertex and {n_faces} face lines, found {len(body)}"
        )
    if len(body) > n_vertices + n_faces:
        extra_number = body[n_vertices + n_faces][0]
        raise MalformedLineError(f"line {extra_number}: unexpected trailing content")

    for number, line in body[:n_vertices]:
        tokens = line.split()
        if len(tokens) < 3:
            raise MalformedLineError(f"line {number}: vertex needs 3 coordinates")
        try:
            for token in tokens[:3]:
                float(token)
        except ValueError:
            raise MalformedLineError(
                f"line {number}: non-numeric vertex coordinate"
            ) from None

    edges: set[Edge] = set()
    for number, line in body[n_vertices:]:
        tokens = line.split()
        arity = _int_token(tokens[0], number)
        if arity < 3:
            raise FaceArityError(f"line {number}: face has {arity} vertices, need >= 3")
        if len(tokens) != arity + 1:
            raise MalformedLineError(
                f"line {number}: face declares {arity} vertices but lists {len(tokens) - 1}"
            )
        ring = [_int_token(t, number) for t in tokens[1:]]
        for v in ring:
            if not 0 <= v < n_vertices:
                raise IndexOutOfRangeError(
                    f"line {number}: face vertex {v} outside [0, {n_vertices})"
                )
        for a, b in zip(ring, ring[1:] + ring[:1]):
            if a == b:
                raise SelfLoopError(f"line {number}: degenerate face repeats vertex {a}")
            edges.add((a, b) if a < b else (b, a))

    return Graph(n_vertices, edges)


def validate_graph(g: Graph) -> ValidationReport:
    """Report structural issues: empty edge set (error), isolated vertices
    and disconnectedness (warnings; both force a zero second eigenvalue
    downstream)."""
    report = ValidationReport()
    if not g.edges:
        report.add("error", "empty edge set")

    degree = [0] * g.vertex_count
    neighbors: list[list[int]] = [[] for _ in range(g.vertex_count)]
    for i, j in g.edges:
        degree[i] += 1
        degree[j] += 1
        neighbors[i].append(j)
        neighbors[j].append(i)
    for v, d in enumerate(degree):
        if d == 0:
            report.add("warning", f"vertex {v} isolated (degree 0)")

    components = 0
    seen = [False] * g.vertex_count
    for root in range(g.vertex_count):
        if seen[root]:
            continue
        components += 1
        stack = [root]
        seen[root] = True
        while stack:
            for w in neighbors[stack.pop()]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
    if components > 1:
        report.add("warning", f"graph is disconnected ({components} components)")
    return report


def to_edge_list(g: Graph) -> str:
    """Canonical edge-list serialization: header line, then ascending
    (min, max) pairs. Round-trips through parse_edge_list."""
    lines = [f"m {g.vertex_count}"]
    lines.extend(f"{i} {j}" for i, j in g.sorted_edges())
    return "\n".join(lines) + "\n"
