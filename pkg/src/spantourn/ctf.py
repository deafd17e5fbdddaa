"""The ctf file format: line-oriented colored-tournament files.

```
ctf 1 [tournament]
n 7
vcolor 0 0 0 0 0 0 0
arc 0 1 0
...
```

`arc u v c` is the arc u -> v with arc color c.  `#` starts a comment;
blank lines are ignored.  Emitted arcs are sorted by (u, v), making the
emit/parse round trip the canonical form.  With the `tournament` header
flag, parsing validates the tournament property.
"""

from __future__ import annotations

from .structures import ColoredDigraph

FORMAT_VERSION = 1


class CtfError(ValueError):
    """Parse failure with a 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__("line %d: %s" % (line, message))
        self.line = line


def _tokens(text: str):
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield i, line.split()


def _ints(lineno: int, words: list[str], what: str) -> list[int]:
    try:
        return [int(w) for w in words]
    except ValueError:
        raise CtfError(lineno, "malformed %s: %r" % (what, " ".join(words)))


def parse_ctf(text: str) -> ColoredDigraph:
    """Parse a ctf file into a colored digraph, with line-numbered errors."""
    lines = _tokens(text)
    try:
        lineno, words = next(lines)
    except StopIteration:
        raise CtfError(1, "empty file")
    if words[0] != "ctf" or len(words) < 2:
        raise CtfError(lineno, "missing 'ctf <version>' header")
    if _ints(lineno, words[1:2], "version")[0] != FORMAT_VERSION:
        raise CtfError(lineno, "unsupported format version %s" % words[1])
    flags = words[2:]
    for f in flags:
        if f != "tournament":
            raise CtfError(lineno, "unknown header flag %r" % f)
    want_tournament = "tournament" in flags

    n = None
    vcolors = None
    arcs: dict[tuple[int, int], int] = {}
    arc_line: dict[tuple[int, int], int] = {}
    for lineno, words in lines:
        key = words[0]
        if key == "n":
            if n is not None:
                raise CtfError(lineno, "duplicate 'n' line")
            n = _ints(lineno, words[1:], "vertex count")[0]
            if len(words) != 2 or n < 1:
                raise CtfError(lineno, "'n' needs one positive integer")
        elif key == "vcolor":
            if n is None:
                raise CtfError(lineno, "'vcolor' before 'n'")
            if vcolors is not None:
                raise CtfError(lineno, "duplicate 'vcolor' line")
            vcolors = _ints(lineno, words[1:], "vertex colors")
            if len(vcolors) != n:
                raise CtfError(lineno, "expected %d vertex colors, got %d"
                               % (n, len(vcolors)))
        elif key == "arc":
            if n is None:
                raise CtfError(lineno, "'arc' before 'n'")
            vals = _ints(lineno, words[1:], "arc")
            if len(vals) != 3:
                raise CtfError(lineno, "'arc' needs u v c")
            u, v, c = vals
            if not (0 <= u < n and 0 <= v < n):
                raise CtfError(lineno, "arc endpoint out of range")
            if u == v:
                raise CtfError(lineno, "loop at vertex %d" % u)
            if c < 0:
                raise CtfError(lineno, "negative arc color")
            if (u, v) in arcs:
                raise CtfError(lineno, "duplicate arc %d -> %d (first at line %d)"
                               % (u, v, arc_line[(u, v)]))
            arcs[(u, v)] = c
            arc_line[(u, v)] = lineno
        else:
            raise CtfError(lineno, "unknown directive %r" % key)
    if n is None:
        raise CtfError(lineno, "missing 'n' line")
    if vcolors is None:
        raise CtfError(lineno, "missing 'vcolor' line")
    try:
        x = ColoredDigraph(n, vcolors, arcs)
    except ValueError as exc:
        raise CtfError(lineno, str(exc))
    if want_tournament and not x.is_tournament():
        if any((v, u) in arcs for (u, v) in arcs):
            bad = next((u, v) for (u, v) in sorted(arcs) if (v, u) in arcs)
            raise CtfError(arc_line[bad], "both directions present for pair %s" % (bad,))
        missing = next((u, v) for u in range(n) for v in range(u + 1, n)
                       if (u, v) not in arcs and (v, u) not in arcs)
        raise CtfError(lineno, "missing arc for pair %s" % (missing,))
    return x


def emit_ctf(x: ColoredDigraph) -> str:
    """Canonical ctf text: sorted arcs, tournament flag when applicable."""
    header = "ctf %d" % FORMAT_VERSION
    if x.is_tournament():
        header += " tournament"
    out = [header, "n %d" % x.n,
           "vcolor " + " ".join(map(str, x.vertex_colors))]
    for (u, v) in sorted(x.arcs):
        out.append("arc %d %d %d" % (u, v, x.arcs[(u, v)]))
    return "\n".join(out) + "\n"
