"""
Z/4-valued quadratic enhancements of Z/2 inner product spaces.

An :class:`EnhancedSpace` is given by its special matrix: the Z/2 Gram
matrix ``gram`` and the Z/4 values ``weights[i] = phi(e_i)`` on the basis.
Then ``phi(v) = sum v_i w_i + 2 sum_{i<j} v_i v_j g_ij (mod 4)``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .bilinear import SymIntMatrix

DEFAULT_CAP = int(os.environ.get("GLINV_CAP", "24"))


class EnumerationCapExceeded(RuntimeError):
    pass


class ImproperFormError(ValueError):
    pass


@dataclass(frozen=True)
class GaussianInt:
    re: int
    im: int

    def __mul__(self, other: GaussianInt) -> GaussianInt:
        return GaussianInt(self.re * other.re - self.im * other.im,
                           self.re * other.im + self.im * other.re)

    def __add__(self, other: GaussianInt) -> GaussianInt:
        return GaussianInt(self.re + other.re, self.im + other.im)

    def __bool__(self):
        return bool(self.re or self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        return f"{self.re}{'+' if self.im > 0 else '-'}{abs(self.im)}i"


ONE = GaussianInt(1, 0)


class _Infinity:
    """The undefined Brown invariant of an improper form.  Absorbs addition."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __str__(self):
        return "infinity"

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __sub__(self, other):
        return self

    __rsub__ = __sub__

    def __neg__(self):
        return self

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()

BrownValue = Union[int, _Infinity]


def brown_add(a: BrownValue, b: BrownValue) -> BrownValue:
    if a is INFINITY or b is INFINITY:
        return INFINITY
    return (a + b) % 8


def brown_neg(a: BrownValue) -> BrownValue:
    return INFINITY if a is INFINITY else (-a) % 8


@dataclass(frozen=True)
class EnhancedSpace:
    gram: tuple[tuple[int, ...], ...]
    weights: tuple[int, ...]

    def __post_init__(self):
        n = len(self.weights)
        if len(self.gram) != n or any(len(r) != n for r in self.gram):
            raise ValueError("gram matrix has the wrong shape")
        for i in range(n):
            if self.weights[i] not in (0, 1, 2, 3):
                raise ValueError("weights must be reduced mod 4")
            if self.gram[i][i] != self.weights[i] % 2:
                raise ValueError(f"gram[{i}][{i}] must equal weight {i} mod 2")
            for j in range(n):
                if self.gram[i][j] not in (0, 1) or self.gram[i][j] != self.gram[j][i]:
                    raise ValueError("gram must be a symmetric 0/1 matrix")

    @property
    def dim(self) -> int:
        return len(self.weights)

    def rowmasks(self) -> list[int]:
        return [sum(1 << j for j in range(self.dim) if self.gram[i][j]) for i in range(self.dim)]

    def dot(self, u: Sequence[int], v: Sequence[int]) -> int:
        return sum(u[i] * v[j] * self.gram[i][j] for i in range(self.dim) for j in range(self.dim)) % 2

    def is_even(self) -> bool:
        return all(w % 2 == 0 for w in self.weights)


def special(weights: Sequence[int], edges=()) -> EnhancedSpace:
    """Space from Z/4 vertex weights and a list of edges (i, j)."""
    n = len(weights)
    w = tuple(x % 4 for x in weights)
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = w[i] % 2
    for i, j in edges:
        if i == j:
            raise ValueError("loops are not allowed")
        g[i][j] = g[j][i] = 1
    return EnhancedSpace(tuple(map(tuple, g)), w)


def enhance(m) -> EnhancedSpace:
    """Reduce diagonal entries mod 4 and off-diagonal entries mod 2."""
    m = SymIntMatrix.of(m)
    n = m.n
    w = tuple(m[i, i] % 4 for i in range(n))
    g = tuple(tuple(m[i, j] % 2 for j in range(n)) for i in range(n))
    return EnhancedSpace(g, w)


def from_special_matrix(m) -> EnhancedSpace:
    """Read a special matrix: diagonal in {0..3}, off-diagonal in {0, 1}."""
    m = SymIntMatrix.of(m)
    n = m.n
    for i in range(n):
        if m[i, i] not in (0, 1, 2, 3):
            raise ValueError(f"diagonal entry {m[i, i]} not in 0..3")
        for j in range(n):
            if i != j and m[i, j] not in (0, 1):
                raise ValueError(f"off-diagonal entry {m[i, j]} not in {{0, 1}}")
    return enhance(m)


def evaluate_phi(e: EnhancedSpace, v: Sequence[int]) -> int:
    if len(v) != e.dim:
        raise ValueError("vector has the wrong length")
    v = [x % 2 for x in v]
    total = sum(vi * w for vi, w in zip(v, e.weights))
    for i in range(e.dim):
        if v[i]:
            for j in range(i + 1, e.dim):
                if v[j] and e.gram[i][j]:
                    total += 2
    return total % 4


def orthogonal_sum(a: EnhancedSpace, b: EnhancedSpace) -> EnhancedSpace:
    n, m = a.dim, b.dim
    g = [list(r) + [0] * m for r in a.gram] + [[0] * n + list(r) for r in b.gram]
    return EnhancedSpace(tuple(map(tuple, g)), a.weights + b.weights)


def indecomposable(kind: str) -> EnhancedSpace:
    table = {
        "P+": ((1,), ()),
        "P-": ((3,), ()),
        "T0": ((0, 0), ((0, 1),)),
        "T4": ((2, 2), ((0, 1),)),
    }
    try:
        weights, edges = table[kind]
    except KeyError:
        raise ValueError(f"unknown indecomposable {kind!r}") from None
    return special(weights, edges)


@dataclass(frozen=True)
class WeightedGraph:
    weights: tuple[int, ...]
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        seen = set()
        for i, j in self.edges:
            if i == j:
                raise ValueError("weighted graphs have no loops")
            key = (min(i, j), max(i, j))
            if key in seen:
                raise ValueError("weighted graphs have no multiple edges")
            seen.add(key)


def from_graph(g: WeightedGraph) -> EnhancedSpace:
    return special(g.weights, g.edges)


# ---------------------------------------------------------------------------
# linear algebra over Z/2 on bitmasks


def _kernel_mod2(rowmasks: list[int], n: int) -> list[int]:
    """Basis (bitmasks) of the kernel of a symmetric 0/1 matrix over Z/2."""
    reduced = []  # (pivot column, row) in reduced echelon form
    for r in rowmasks:
        for col, pr in reduced:
            if r >> col & 1:
                r ^= pr
        if r:
            col = r.bit_length() - 1
            reduced = [(c, pr ^ r if pr >> col & 1 else pr) for c, pr in reduced]
            reduced.append((col, r))
    pivot_cols = {c for c, _ in reduced}
    basis = []
    for free in range(n):
        if free in pivot_cols:
            continue
        v = 1 << free
        for col, pr in reduced:
            if pr >> free & 1:
                v |= 1 << col
        basis.append(v)
    return basis


def radical(e: EnhancedSpace) -> list[tuple[int, ...]]:
    """Basis of the radical of the inner product, as 0/1 tuples."""
    return [tuple(v >> i & 1 for i in range(e.dim)) for v in _kernel_mod2(e.rowmasks(), e.dim)]


def is_proper(e: EnhancedSpace) -> bool:
    """phi vanishes on the radical; phi is additive there, so a basis suffices."""
    return all(evaluate_phi(e, v) == 0 for v in radical(e))


def _phi_table(e: EnhancedSpace) -> np.ndarray:
    """phi on all 2^dim vectors, index = bitmask."""
    masks = e.rowmasks()
    phi = np.zeros(1, dtype=np.int8)
    for k in range(e.dim):
        idx = np.arange(len(phi), dtype=np.int64)
        dots = (np.bitwise_count(idx & masks[k]) & 1).astype(np.int8)
        phi = np.concatenate([phi, (phi + e.weights[k] + 2 * dots) % 4])
    return phi


def monsky_sum(e: EnhancedSpace, cap: int | None = None) -> GaussianInt:
    """Sum of i^phi(v) over all v, by enumeration."""
    cap = DEFAULT_CAP if cap is None else cap
    if e.dim > cap:
        raise EnumerationCapExceeded(f"dimension {e.dim} exceeds the enumeration cap {cap}")
    counts = np.bincount(_phi_table(e), minlength=4)
    n0, n1, n2, n3 = (int(c) for c in counts)
    return GaussianInt(n0 - n2, n1 - n3)


_RAYS = {(1, 0): 0, (1, 1): 1, (0, 1): 2, (-1, 1): 3, (-1, 0): 4, (-1, -1): 5, (0, -1): 6, (1, -1): 7}


def _sgn(x):
    return (x > 0) - (x < 0)


def beta_from_monsky(lam: GaussianInt) -> int:
    """Residue mod 8 of the argument of a Gaussian integer on one of the eight rays k*pi/4."""
    if lam.re and lam.im and abs(lam.re) != abs(lam.im):
        raise ArithmeticError(f"Monsky sum {lam} is not on a ray k*pi/4")
    return _RAYS[_sgn(lam.re), _sgn(lam.im)]


def _components(e: EnhancedSpace) -> list[list[int]]:
    seen, comps = set(), []
    for s in range(e.dim):
        if s in seen:
            continue
        comp, todo = [], [s]
        seen.add(s)
        while todo:
            i = todo.pop()
            comp.append(i)
            for j in range(e.dim):
                if j != i and e.gram[i][j] and j not in seen:
                    seen.add(j)
                    todo.append(j)
        comps.append(sorted(comp))
    return comps


def _restrict(e: EnhancedSpace, basis: list[int]) -> EnhancedSpace:
    """Form on the span of the given bitmask vectors."""
    vecs = [[v >> i & 1 for i in range(e.dim)] for v in basis]
    g = tuple(tuple(e.dot(u, v) for v in vecs) for u in vecs)
    w = tuple(evaluate_phi(e, u) for u in vecs)
    return EnhancedSpace(g, w)


def _complement(rad: list[int], n: int) -> list[int]:
    """Standard basis vectors completing a basis of the radical to one of V."""
    reduced = []
    for r in rad:
        for col, pr in reduced:
            if r >> col & 1:
                r ^= pr
        col = r.bit_length() - 1
        reduced.append((col, r))
    pivots = {c for c, _ in reduced}
    # all radical pivots are distinct leading bits, so the unit vectors at
    # non-pivot positions span a complement
    return [1 << i for i in range(n) if i not in pivots]


def monsky_sum_decomposed(e: EnhancedSpace, cap: int | None = None) -> GaussianInt:
    """Monsky sum via radical quotient and orthogonal splitting.

    lambda(V) = 2^dim R * lambda(W) for proper phi (W a complement of R,
    which is automatically orthogonal to R), and 0 for improper phi; then
    lambda(W) is the product over connected components of W's graph.
    """
    cap = DEFAULT_CAP if cap is None else cap
    rad = _kernel_mod2(e.rowmasks(), e.dim)
    if any(evaluate_phi(e, [v >> i & 1 for i in range(e.dim)]) for v in rad):
        return GaussianInt(0, 0)
    w = _restrict(e, _complement(rad, e.dim)) if rad else e
    lam = GaussianInt(2 ** len(rad), 0)
    for comp in _components(w):
        part = _restrict(w, [1 << i for i in comp])
        lam = lam * monsky_sum(part, cap)
    return lam


def brown(e: EnhancedSpace, cap: int | None = None) -> BrownValue:
    """Brown invariant in Z/8, or INFINITY for an improper form."""
    cap = DEFAULT_CAP if cap is None else cap
    lam = monsky_sum(e, cap) if e.dim <= cap else monsky_sum_decomposed(e, cap)
    if not lam:
        return INFINITY
    r = len(radical(e))
    if lam.norm() != 2 ** (e.dim + r):
        raise ArithmeticError(f"|lambda|^2 = {lam.norm()} but dim V + dim R = {e.dim + r}")
    return beta_from_monsky(lam)


def arf_of_even(e: EnhancedSpace, cap: int | None = None) -> int:
    """Arf invariant of q = phi/2 for an even, proper form."""
    if not e.is_even():
        raise ValueError("form is not even")
    b = brown(e, cap)
    if b is INFINITY:
        raise ImproperFormError("improper even form has no Arf invariant")
    if b not in (0, 4):
        raise ArithmeticError(f"even form with Brown invariant {b}")
    return b // 4
