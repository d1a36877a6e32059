"""Text formats: graph6, the voltage-graph line format, plain edge lists and DOT."""

from __future__ import annotations

from .errors import (
    CageLiftError,
    DuplicateName,
    MalformedHeader,
    NonPrintableChar,
    ParseError,
    TruncatedBits,
)
from .voltage import SimpleGraph, VoltageGraph, new_voltage_graph

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_MAX_N = 258047


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------


def _encode_n(n: int) -> str:
    if n < 0 or n > GRAPH6_MAX_N:
        raise ValueError(f"graph6 supports 0..{GRAPH6_MAX_N} vertices, got {n}")
    if n <= 62:
        return chr(n + 63)
    return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def write_graph6(g: SimpleGraph) -> str:
    n = g.n
    bits = []
    for j in range(1, n):
        nb = g.adjacency[j]
        for i in range(j):
            bits.append(1 if i in nb else 0)
    bits.extend([0] * (-len(bits) % 6))
    body = "".join(
        chr(63 + int("".join(map(str, bits[i:i + 6])), 2)) for i in range(0, len(bits), 6)
    )
    return _encode_n(n) + body


def read_graph6(text: str) -> SimpleGraph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise NonPrintableChar(f"character {ch!r} at position {pos} is outside the graph6 range")
    if not s:
        raise MalformedHeader("empty graph6 string")
    if s[0] == "~":
        if len(s) >= 2 and s[1] == "~":
            raise MalformedHeader("graph6 sizes above 258047 are not supported")
        if len(s) < 4:
            raise MalformedHeader("truncated size field")
        n = ((ord(s[1]) - 63) << 12) | ((ord(s[2]) - 63) << 6) | (ord(s[3]) - 63)
        if n <= 62:
            raise MalformedHeader(f"size {n} should use the one-byte form")
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    need = n * (n - 1) // 2
    chars = -(-need // 6)
    if len(body) < chars:
        raise TruncatedBits(f"need {chars} data characters for n={n}, got {len(body)}")
    if len(body) > chars:
        raise MalformedHeader(f"{len(body) - chars} trailing characters after the bit field")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if ((ord(body[k // 6]) - 63) >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return SimpleGraph.from_edges(n, edges)


def read_graph6_file(text: str) -> list[SimpleGraph]:
    return [read_graph6(line) for line in text.splitlines() if line.strip()]


# ---------------------------------------------------------------------------
# voltage-graph text
# ---------------------------------------------------------------------------


def write_voltage_graph(g: VoltageGraph) -> str:
    lines = [f"# {line}" if line else "#" for line in g.description.splitlines()]
    for name, pinned in zip(g.names, g.pinned):
        lines.append(f"vertex {name} pinned" if pinned else f"vertex {name}")
    for k in range(len(g.arcs)):
        lines.append("arc {} {} {}".format(*g.arc_names(k)))
    return "\n".join(lines) + "\n"


def _at_line(exc: CageLiftError, lineno: int) -> CageLiftError:
    out = type(exc)(f"line {lineno}: {exc}")
    out.line = lineno
    return out


def read_voltage_graph(text: str) -> VoltageGraph:
    """Parse the line format; every error names the offending line."""
    vertices: list[tuple[str, bool]] = []
    pinned: dict[str, bool] = {}
    arcs: list[tuple[str, str, int]] = []
    description: list[str] = []
    in_header = True
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line.startswith("#"):
            if in_header:
                description.append(line[2:] if line.startswith("# ") else line[1:])
            continue
        if not line:
            continue
        in_header = False
        words = line.split()
        if words[0] == "vertex":
            if len(words) == 2 or (len(words) == 3 and words[2] == "pinned"):
                spec = (words[1], len(words) == 3)
            else:
                raise ParseError("expected 'vertex <name> [pinned]'", lineno)
            try:
                if spec[0] in pinned:
                    raise DuplicateName(f"vertex {spec[0]!r} declared twice")
                new_voltage_graph([spec], [])
            except CageLiftError as exc:
                raise _at_line(exc, lineno) from None
            pinned[spec[0]] = spec[1]
            vertices.append(spec)
        elif words[0] == "arc":
            if len(words) != 4:
                raise ParseError("expected 'arc <tail> <head> <voltage>'", lineno)
            try:
                arc = (words[1], words[2], int(words[3]))
            except ValueError:
                raise ParseError(f"voltage {words[3]!r} is not an integer", lineno) from None
            ends = [(n, pinned[n]) for n in dict.fromkeys(arc[:2]) if n in pinned]
            try:
                new_voltage_graph(ends, [arc])
            except CageLiftError as exc:
                raise _at_line(exc, lineno) from None
            arcs.append(arc)
        else:
            raise ParseError(f"unknown directive {words[0]!r}", lineno)
    return new_voltage_graph(vertices, arcs, "\n".join(description))


# ---------------------------------------------------------------------------
# edge lists and DOT
# ---------------------------------------------------------------------------


def write_edge_list(g: SimpleGraph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def read_edge_list(text: str) -> SimpleGraph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        try:
            if words[0] == "n" and len(words) == 2 and n is None:
                n = int(words[1])
                continue
            if len(words) != 2:
                raise ValueError
            u, v = int(words[0]), int(words[1])
        except ValueError:
            raise ParseError(f"cannot read {line!r}", lineno) from None
        edges.append((u, v))
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    try:
        return SimpleGraph.from_edges(n, edges)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(g) -> str:
    if isinstance(g, VoltageGraph):
        lines = ["digraph voltage {"]
        for name, pinned in zip(g.names, g.pinned):
            lines.append(f"  {_quote(name)} [shape={'box' if pinned else 'circle'}];")
        for a in g.arcs:
            t, h = _quote(g.names[a.tail]), _quote(g.names[a.head])
            if a.voltage:
                lines.append(f"  {t} -> {h} [label={_quote(str(a.voltage))}];")
            else:
                lines.append(f"  {t} -> {h} [dir=none];")
    else:
        lines = ["graph lift {"]
        for v in range(g.n):
            shape = ", shape=box" if g.labels[v].endswith("*") else ""
            lines.append(f"  {v} [label={_quote(g.labels[v])}{shape}];")
        for u, v in g.edges():
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
