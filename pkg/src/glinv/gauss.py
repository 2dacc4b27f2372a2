"""
Signed Gauss codes for link diagrams on surfaces.

Text format: components separated by ``;``, each component a run of
symbols ``[OU]<crossing><sign>``, e.g. ``O1+U2+O3+U1+O2+U3+``.  The empty
component ``()`` stands for a crossingless unknot.  Whitespace is ignored
and lines starting with ``#`` are comments.
"""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass


class GaussCodeError(ValueError):
    """Raised for malformed or inconsistent Gauss codes."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


@dataclass(frozen=True)
class Pass:
    over: bool
    crossing: int
    sign: int

    def __str__(self):
        return f"{'O' if self.over else 'U'}{self.crossing}{'+' if self.sign > 0 else '-'}"


@dataclass(frozen=True)
class GaussCode:
    components: tuple[tuple[Pass, ...], ...]

    def __post_init__(self):
        _validate(self.components)

    def __str__(self):
        return ";".join("".join(map(str, comp)) if comp else "()" for comp in self.components)

    @property
    def crossings(self) -> list[int]:
        return sorted({p.crossing for comp in self.components for p in comp})

    def mirror_vertical(self) -> GaussCode:
        return GaussCode(tuple(tuple(Pass(not p.over, p.crossing, -p.sign) for p in comp)
                               for comp in self.components))

    def mirror_horizontal(self) -> GaussCode:
        return GaussCode(tuple(tuple(Pass(p.over, p.crossing, -p.sign) for p in comp)
                               for comp in self.components))

    def reversed(self) -> GaussCode:
        """Reverse the orientation of every component.

        Reversing both strands at a crossing preserves its sign.
        """
        return GaussCode(tuple(tuple(reversed(comp)) for comp in self.components))


_SYMBOL = re.compile(r"([OU])([1-9][0-9]*)([+-])")


def _validate(components):
    if not components:
        raise GaussCodeError("a Gauss code needs at least one component")
    seen = defaultdict(list)
    for comp in components:
        for p in comp:
            if p.sign not in (1, -1):
                raise GaussCodeError(f"crossing {p.crossing} has sign {p.sign}")
            seen[p.crossing].append(p)
    for c, passes in sorted(seen.items()):
        if len(passes) != 2:
            raise GaussCodeError(f"crossing {c} is used {len(passes)} times, expected 2")
        a, b = passes
        if a.over == b.over:
            which = "Over" if a.over else "Under"
            raise GaussCodeError(f"crossing {c} passed {which} twice")
        if a.sign != b.sign:
            raise GaussCodeError(f"crossing {c} has mismatched signs")


def parse_gauss_code(text: str) -> GaussCode:
    """Parse the text format into a validated :class:`GaussCode`.

    Syntax errors report the character offset within the comment-stripped,
    whitespace-free body.
    """
    lines = [ln for ln in text.splitlines() if not ln.lstrip().startswith("#")]
    body = re.sub(r"\s+", "", "".join(lines))
    if not body:
        raise GaussCodeError("empty Gauss code")
    components = []
    pos = 0
    for chunk in body.split(";"):
        if chunk == "()":
            components.append(())
            pos += len(chunk) + 1
            continue
        if not chunk:
            raise GaussCodeError("empty component", pos)
        comp = []
        i = 0
        while i < len(chunk):
            m = _SYMBOL.match(chunk, i)
            if m is None:
                raise GaussCodeError(f"unexpected {chunk[i]!r}", pos + i)
            comp.append(Pass(m.group(1) == "O", int(m.group(2)), 1 if m.group(3) == "+" else -1))
            i = m.end()
        components.append(tuple(comp))
        pos += len(chunk) + 1
    return GaussCode(tuple(components))
