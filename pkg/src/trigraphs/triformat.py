"""Reading and writing the ``.tri`` text format.

::

    trigraph 4
    # comments start with '#'
    0 1 +
    1 2 0

Pairs not listed are strongly anti-adjacent.  Writers list every pair whose
value is not ``-``.
"""

from __future__ import annotations

from pathlib import Path
from typing import TextIO

from .core import AdjValue, Trigraph, _make, pair_count, pair_rank


class TriFormatError(ValueError):
    pass


def parse_tri(text: str) -> Trigraph:
    n = None
    theta: list[int] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "trigraph":
                raise TriFormatError(f"line {lineno}: expected header 'trigraph <n>'")
            try:
                n = int(fields[1])
            except ValueError:
                raise TriFormatError(f"line {lineno}: bad vertex count {fields[1]!r}") from None
            if n < 0:
                raise TriFormatError(f"line {lineno}: negative vertex count")
            theta = [-1] * pair_count(n)
            continue
        if len(fields) != 3:
            raise TriFormatError(f"line {lineno}: expected 'u v s'")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise TriFormatError(f"line {lineno}: vertices must be integers") from None
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise TriFormatError(f"line {lineno}: bad pair ({u}, {v}) for {n} vertices")
        try:
            s = AdjValue.from_symbol(fields[2])
        except ValueError as exc:
            raise TriFormatError(f"line {lineno}: {exc}") from None
        key = (min(u, v), max(u, v))
        if key in seen:
            raise TriFormatError(f"line {lineno}: pair {key} listed twice")
        seen.add(key)
        theta[pair_rank(n, u, v)] = int(s)
    if n is None:
        raise TriFormatError("missing header 'trigraph <n>'")
    return _make(n, theta)


def format_tri(g: Trigraph) -> str:
    lines = [f"trigraph {g.n}"]
    for u, v, t in g.pairs():
        if t != -1:
            lines.append(f"{u} {v} {AdjValue(t).symbol}")
    return "\n".join(lines) + "\n"


def read_tri(source: str | Path | TextIO) -> Trigraph:
    if hasattr(source, "read"):
        return parse_tri(source.read())
    return parse_tri(Path(source).read_text())


def write_tri(g: Trigraph, dest: str | Path | TextIO) -> None:
    if hasattr(dest, "write"):
        dest.write(format_tri(g))
    else:
        Path(dest).write_text(format_tri(g))
