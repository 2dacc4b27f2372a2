"""
Link diagrams on closed oriented surfaces.

A diagram is stored as a rotation system on half-edges.  Half-edge
``4*c + k`` is slot ``k`` of crossing ``c``; slots are listed in
counterclockwise order, so the rotation is ``k -> k+1 (mod 4)``.  A signed
Gauss code determines the rotation at each crossing:

* positive crossing: (over-in, under-in, over-out, under-out)
* negative crossing: (over-in, under-out, over-out, under-in)

The surface is then the one obtained by gluing disks into the boundary
walks of the resulting ribbon graph, so the diagram is cellularly embedded
by construction.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .gauss import GaussCode, Pass


class DiagramError(ValueError):
    pass


def _rot(h, k=1):
    return 4 * (h // 4) + (h % 4 + k) % 4


@dataclass(frozen=True)
class LinkDiagram:
    labels: tuple[int, ...]
    partner: tuple[int, ...]
    over: tuple[bool, ...]
    outgoing: tuple[bool, ...]
    component: tuple[int, ...]
    n_components: int

    def __post_init__(self):
        n = len(self.labels)
        if not (len(self.partner) == len(self.over) == len(self.outgoing) == len(self.component) == 4 * n):
            raise DiagramError("half-edge arrays have inconsistent lengths")
        for h, p in enumerate(self.partner):
            if p == h or self.partner[p] != h:
                raise DiagramError(f"half-edge {h} is not properly paired")
            if self.outgoing[h] == self.outgoing[p]:
                raise DiagramError(f"edge {h}-{p} is not consistently oriented")
        for c in range(n):
            hs = range(4 * c, 4 * c + 4)
            for h in hs:
                opp = _rot(h, 2)
                if self.over[h] != self.over[opp] or self.outgoing[h] == self.outgoing[opp]:
                    raise DiagramError(f"crossing {self.labels[c]} has an inconsistent strand")
            if sum(self.over[h] for h in hs) != 2:
                raise DiagramError(f"crossing {self.labels[c]} needs one over and one under strand")

    @property
    def n_crossings(self) -> int:
        return len(self.labels)

    def over_in(self, c: int) -> int:
        return next(h for h in range(4 * c, 4 * c + 4) if self.over[h] and not self.outgoing[h])

    def under_in(self, c: int) -> int:
        return next(h for h in range(4 * c, 4 * c + 4) if not self.over[h] and not self.outgoing[h])

    def sign(self, c: int) -> int:
        return 1 if _rot(self.over_in(c)) == self.under_in(c) else -1

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple(self.sign(c) for c in range(self.n_crossings))

    def walk(self, comp: int) -> list[int]:
        """Incoming half-edges met along a component, in order."""
        hs = [h for h in range(len(self.partner)) if self.component[h] == comp and not self.outgoing[h]]
        if not hs:
            return []
        start = min(hs)
        out, h = [], start
        while True:
            out.append(h)
            h = self.partner[_rot(h, 2)]
            if h == start:
                return out

    def to_gauss_code(self) -> GaussCode:
        comps = []
        for k in range(self.n_components):
            comps.append(tuple(Pass(self.over[h], self.labels[h // 4], self.sign(h // 4))
                               for h in self.walk(k)))
        return GaussCode(tuple(comps))

    def is_alternating(self) -> bool:
        for k in range(self.n_components):
            w = self.walk(k)
            if any(self.over[a] == self.over[b] for a, b in zip(w, w[1:] + w[:1])):
                return False
        return True


def realize_diagram(code: GaussCode) -> LinkDiagram:
    """Build the rotation system of a Gauss code; split diagrams are rejected."""
    labels = tuple(code.crossings)
    index = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)
    if n == 0:
        if len(code.components) != 1:
            raise DiagramError("diagram is split: several crossingless components")
        return LinkDiagram((), (), (), (), (), 1)
    if any(not comp for comp in code.components):
        raise DiagramError("diagram is split: a crossingless component next to other components")

    partner = [-1] * (4 * n)
    over = [False] * (4 * n)
    outgoing = [False] * (4 * n)
    component = [-1] * (4 * n)

    def slots(p: Pass):
        base = 4 * index[p.crossing]
        if p.over:
            return base, base + 2
        return (base + 1, base + 3) if p.sign > 0 else (base + 3, base + 1)

    for k, comp in enumerate(code.components):
        ends = [slots(p) for p in comp]
        for p, (i, o) in zip(comp, ends):
            over[i] = over[o] = p.over
            outgoing[o] = True
            component[i] = component[o] = k
        for j, (_, o) in enumerate(ends):
            i_next = ends[(j + 1) % len(ends)][0]
            partner[o], partner[i_next] = i_next, o

    d = LinkDiagram(labels, tuple(partner), tuple(over), tuple(outgoing), tuple(component),
                    len(code.components))
    if not _connected(d):
        raise DiagramError("diagram is split (disconnected as a 4-valent graph)")
    return d


def _connected(d: LinkDiagram) -> bool:
    n = d.n_crossings
    seen, todo = {0}, [0]
    while todo:
        c = todo.pop()
        for h in range(4 * c, 4 * c + 4):
            c2 = d.partner[h] // 4
            if c2 not in seen:
                seen.add(c2)
                todo.append(c2)
    return len(seen) == n


def mirror_vertical(d: LinkDiagram) -> LinkDiagram:
    """Flip the interval factor: every crossing changes, the rotation stays."""
    return LinkDiagram(d.labels, d.partner, tuple(not o for o in d.over), d.outgoing,
                       d.component, d.n_components)


def mirror_horizontal(d: LinkDiagram) -> LinkDiagram:
    """Apply an orientation-reversing map of the surface: rotations are reversed."""
    flip = [4 * (h // 4) + (-(h % 4)) % 4 for h in range(len(d.partner))]

    def perm(arr):
        out = [None] * len(arr)
        for h, v in enumerate(arr):
            out[flip[h]] = v
        return tuple(out)

    partner = [None] * len(d.partner)
    for h, p in enumerate(d.partner):
        partner[flip[h]] = flip[p]
    return LinkDiagram(d.labels, tuple(partner), perm(d.over), perm(d.outgoing),
                       perm(d.component), d.n_components)


def total_linking(d: LinkDiagram) -> int:
    """Sum of crossing signs between distinct components (ordered pairs)."""
    total = 0
    for c in range(d.n_crossings):
        a, b = d.over_in(c), d.under_in(c)
        if d.component[a] != d.component[b]:
            total += d.sign(c)
    return total


# ---------------------------------------------------------------------------
# faces


@dataclass(frozen=True)
class FaceComplex:
    """Faces of the surface minus the diagram.

    ``faces[f]`` lists the corners of face ``f`` in boundary order; corner
    ``h`` is the angle between half-edge ``h`` and the next one
    counterclockwise.  ``edges`` are (out, in) half-edge pairs, and
    ``sides[e]`` is (left face, right face) when travelling along edge ``e``.
    """

    faces: tuple[tuple[int, ...], ...]
    face_of_corner: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    sides: tuple[tuple[int, int], ...]
    genus: int

    @property
    def n_faces(self) -> int:
        return len(self.faces)


def trace_faces(d: LinkDiagram) -> FaceComplex:
    if d.n_crossings == 0:
        # a circle on the sphere: two disks, one edge-less boundary between them
        return FaceComplex(((), ()), (), (), ((0, 1),), 0)
    m = len(d.partner)
    face_of_corner = [-1] * m
    orbits = []
    for start in range(m):
        if face_of_corner[d.partner[start]] != -1:
            continue
        corners, dart = [], start
        while True:
            corner = d.partner[dart]
            if face_of_corner[corner] != -1:
                break
            face_of_corner[corner] = len(orbits)
            corners.append(corner)
            dart = _rot(corner)
        orbits.append(corners)

    # renumber faces by smallest corner, each listed from that corner
    order = sorted(range(len(orbits)), key=lambda i: min(orbits[i]))
    renum = {old: new for new, old in enumerate(order)}
    faces = []
    for old in order:
        cs = orbits[old]
        k = cs.index(min(cs))
        faces.append(tuple(cs[k:] + cs[:k]))
    face_of_corner = tuple(renum[f] for f in face_of_corner)

    edges = tuple((h, d.partner[h]) for h in range(m) if d.outgoing[h])
    sides = tuple((face_of_corner[h], face_of_corner[_rot(h, -1)]) for h, _ in edges)
    n = d.n_crossings
    euler = n - 2 * n + len(faces)
    if (2 - euler) % 2 or euler > 2:
        raise DiagramError(f"inconsistent Euler characteristic {euler}")
    return FaceComplex(tuple(faces), face_of_corner, edges, sides, (2 - euler) // 2)


def alexander_numbering(d: LinkDiagram, fc: FaceComplex) -> Optional[tuple[int, ...]]:
    """Integer labels on faces jumping by one from right to left across each edge.

    They exist exactly when the oriented diagram is null-homologous in the
    surface; ``None`` otherwise.  Normalised so that face 0 gets label 0.
    """
    nf = fc.n_faces
    adj = [[] for _ in range(nf)]
    for left, right in fc.sides:
        adj[right].append((left, 1))
        adj[left].append((right, -1))
    label = [None] * nf
    label[0] = 0
    todo = deque([0])
    while todo:
        f = todo.popleft()
        for g, step in adj[f]:
            if label[g] is None:
                label[g] = label[f] + step
                todo.append(g)
            elif label[g] != label[f] + step:
                return None
    return tuple(label)


# ---------------------------------------------------------------------------
# checkerboard colorings and Tait data


@dataclass(frozen=True)
class Coloring:
    """``black[f]`` is True for black faces.  ``label`` is ``"xi"`` or ``"xi*"``."""

    black: tuple[bool, ...]
    label: str = "xi"

    @property
    def white_faces(self) -> tuple[int, ...]:
        return tuple(f for f, b in enumerate(self.black) if not b)

    @property
    def black_faces(self) -> tuple[int, ...]:
        return tuple(f for f, b in enumerate(self.black) if b)

    def swap(self) -> Coloring:
        return Coloring(tuple(not b for b in self.black), "xi*" if self.label == "xi" else "xi")


def checkerboard_colorings(fc: FaceComplex) -> list[Coloring]:
    """Both checkerboard colorings, or ``[]`` if none exists.

    The first entry is xi, the coloring in which face 0 is white; the
    second is its swap xi*.
    """
    nf = fc.n_faces
    adj = [[] for _ in range(nf)]
    for a, b in fc.sides:
        if a == b:
            return []
        adj[a].append(b)
        adj[b].append(a)
    color = [None] * nf
    color[0] = False
    todo = [0]
    while todo:
        f = todo.pop()
        for g in adj[f]:
            if color[g] is None:
                color[g] = not color[f]
                todo.append(g)
            elif color[g] == color[f]:
                return []
    if None in color:
        raise DiagramError("face adjacency graph is disconnected")
    xi = Coloring(tuple(color), "xi")
    return [xi, xi.swap()]


@dataclass(frozen=True)
class TaitStructure:
    coloring: Coloring
    white_faces: tuple[int, ...]
    black_faces: tuple[int, ...]
    eta: tuple[int, ...]
    ctype: tuple[int, ...]
    white_pair: tuple[tuple[int, int], ...]


def tait_structure(d: LinkDiagram, fc: FaceComplex, xi: Coloring) -> TaitStructure:
    """Incidence numbers and crossing types for a shaded diagram.

    eta_c = +1 when turning the over-strand counterclockwise sweeps it
    through the black corners.  A crossing is of type II when the corner
    between the two incoming strands is black, i.e. both strands run from
    one black corner towards the other.
    """
    black = xi.black
    eta, ctype, pairs = [], [], []
    for c in range(d.n_crossings):
        a, b = d.over_in(c), d.under_in(c)
        corners = [fc.face_of_corner[h] for h in range(4 * c, 4 * c + 4)]
        if any(black[corners[k]] == black[corners[(k + 1) % 4]] for k in range(4)):
            raise DiagramError(f"coloring does not alternate around crossing {d.labels[c]}")
        eta.append(1 if black[fc.face_of_corner[a]] else -1)
        behind = a if _rot(a) == b else b
        ctype.append(2 if black[fc.face_of_corner[behind]] else 1)
        w = [f for f in corners if not black[f]]
        pairs.append((min(w), max(w)))
    return TaitStructure(xi, xi.white_faces, xi.black_faces, tuple(eta), tuple(ctype), tuple(pairs))


def correction_term(t: TaitStructure) -> int:
    """Sum of incidence numbers over type II crossings."""
    return sum(e for e, k in zip(t.eta, t.ctype) if k == 2)


def euler_number(t: TaitStructure) -> int:
    """Euler number e(F, L) of the black surface, equal to -2 times the correction term."""
    return -2 * correction_term(t)
