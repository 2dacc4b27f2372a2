"""
Exact symmetric integer bilinear forms.

Everything here is integer or rational arithmetic; there are no tolerances.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


@dataclass(frozen=True)
class SymIntMatrix:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        for i, row in enumerate(self.rows):
            if len(row) != n:
                raise ValueError("matrix is not square")
            for j in range(i):
                if row[j] != self.rows[j][i]:
                    raise ValueError(f"matrix is not symmetric at ({i}, {j})")

    @classmethod
    def of(cls, m) -> SymIntMatrix:
        if isinstance(m, SymIntMatrix):
            return m
        return cls(tuple(tuple(int(x) for x in row) for row in m))

    @classmethod
    def diagonal(cls, *entries: int) -> SymIntMatrix:
        n = len(entries)
        return cls(tuple(tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __neg__(self) -> SymIntMatrix:
        return SymIntMatrix(tuple(tuple(-x for x in row) for row in self.rows))

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    def congruent(self, p: Sequence[Sequence[int]]) -> SymIntMatrix:
        """Return P^T M P."""
        n = self.n
        mp = [[sum(self.rows[i][k] * p[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
        return SymIntMatrix(tuple(tuple(sum(p[k][i] * mp[k][j] for k in range(n)) for j in range(n))
                                  for i in range(n)))

    def block_sum(self, other: SymIntMatrix) -> SymIntMatrix:
        a, b = self.n, other.n
        rows = [list(r) + [0] * b for r in self.rows] + [[0] * a + list(r) for r in other.rows]
        return SymIntMatrix(tuple(map(tuple, rows)))


def parse_matrix(text: str) -> SymIntMatrix:
    """Parse ``"1,-1;-1,2"`` style literals; the empty string is the empty form."""
    text = "".join(text.split())
    if not text:
        return SymIntMatrix(())
    rows = [tuple(int(x) for x in r.split(",")) for r in text.split(";")]
    return SymIntMatrix(tuple(rows))


def format_matrix(m: SymIntMatrix) -> str:
    return ";".join(",".join(str(x) for x in row) for row in m.rows)


def diagonalize(m) -> list[Fraction]:
    """Rational congruence diagonalization; returns the diagonal entries.

    When every remaining diagonal entry vanishes but some off-diagonal entry
    a_ij does not, x_i -> x_i + x_j produces the nonzero pivot 2 a_ij.
    """
    m = SymIntMatrix.of(m)
    a = [[Fraction(x) for x in row] for row in m.rows]
    n = m.n
    diag = []
    for k in range(n):
        p = next((i for i in range(k, n) if a[i][i] != 0), None)
        if p is None:
            pair = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if a[i][j] != 0), None)
            if pair is None:
                diag.extend([Fraction(0)] * (n - k))
                break
            i, j = pair
            for r in range(k, n):
                a[i][r] += a[j][r]
            for r in range(k, n):
                a[r][i] += a[r][j]
            p = i
        if p != k:
            a[k], a[p] = a[p], a[k]
            for row in a:
                row[k], row[p] = row[p], row[k]
        pivot = a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / pivot
            if f:
                for r in range(k, n):
                    a[i][r] -= f * a[k][r]
                a[i][k] = Fraction(0)
        for i in range(k + 1, n):
            a[k][i] = Fraction(0)
        diag.append(pivot)
    return diag


def signature(m) -> int:
    d = diagonalize(m)
    return sum(1 for x in d if x > 0) - sum(1 for x in d if x < 0)


def nullity(m) -> int:
    return sum(1 for x in diagonalize(m) if x == 0)


def rank(m) -> int:
    m = SymIntMatrix.of(m)
    return m.n - nullity(m)


def determinant(m) -> int:
    """Bareiss fraction-free elimination; det of the empty matrix is 1."""
    a = [list(r) for r in (m.rows if isinstance(m, SymIntMatrix) else m)]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            p = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if p is None:
                return 0
            a[k], a[p] = a[p], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


def det_invariant(m) -> int:
    return abs(determinant(m))


def is_perfect_square(d: int) -> bool:
    if d < 0:
        raise ValueError("negative argument")
    r = math.isqrt(d)
    return r * r == d


def isotropy_bound_check(m, u_dim: int) -> bool:
    """Necessary condition for a totally isotropic subspace of dimension ``u_dim``."""
    m = SymIntMatrix.of(m)
    if not 0 <= u_dim <= m.n:
        raise ValueError("u_dim out of range")
    return 2 * u_dim <= m.n - abs(signature(m)) + nullity(m)


def random_unimodular(n: int, seed: int, steps: int | None = None) -> list[list[int]]:
    """Deterministic random integer matrix of determinant +-1.

    Built as a signed permutation times elementary row additions with
    coefficients in {-2..2}, so entries stay small for small ``steps``.
    """
    rng = random.Random(seed)
    p = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(steps if steps is not None else 2 * n):
        if n < 2:
            break
        i, j = rng.sample(range(n), 2)
        c = rng.choice((-2, -1, 1, 2))
        p[i] = [x + c * y for x, y in zip(p[i], p[j])]
    perm = list(range(n))
    rng.shuffle(perm)
    out = []
    for k in perm:
        s = rng.choice((-1, 1))
        out.append([s * v for v in p[k]])
    return out


def goeritz_pre_matrix(t) -> SymIntMatrix:
    """The full matrix G' on all white faces X_0..X_n, before deletion."""
    index = {f: i for i, f in enumerate(t.white_faces)}
    n = len(index)
    g = [[0] * n for _ in range(n)]
    for eta, (a, b) in zip(t.eta, t.white_pair):
        if a != b:
            i, j = index[a], index[b]
            g[i][j] -= eta
            g[j][i] -= eta
    for i in range(n):
        g[i][i] = -sum(g[i][k] for k in range(n) if k != i)
    return SymIntMatrix(tuple(map(tuple, g)))


def goeritz_matrix(t, drop: int = 0) -> SymIntMatrix:
    """Goeritz matrix of a shaded diagram: G' with the row and column of X_0 removed.

    X_0 is the white face with the smallest face id unless ``drop`` picks
    another position in ``t.white_faces``; the invariants do not depend on it.
    """
    full = goeritz_pre_matrix(t)
    assert determinant(full) == 0
    keep = [i for i in range(full.n) if i != drop]
    return SymIntMatrix(tuple(tuple(full.rows[i][j] for j in keep) for i in keep))
