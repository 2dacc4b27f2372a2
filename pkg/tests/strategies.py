import random

from hypothesis import strategies as st

from glinv.bilinear import SymIntMatrix
from glinv.gauss import GaussCode, Pass


@st.composite
def sym_matrices(draw, max_dim=6, lo=-4, hi=4, min_dim=0):
    n = draw(st.integers(min_dim, max_dim))
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = draw(st.integers(lo, hi))
    return SymIntMatrix.of(rows)


@st.composite
def even_matrices(draw, max_dim=6):
    m = draw(sym_matrices(max_dim=max_dim, lo=-3, hi=3))
    rows = m.tolist()
    for i in range(m.n):
        rows[i][i] = 2 * draw(st.integers(-2, 2))
    return SymIntMatrix.of(rows)


@st.composite
def gauss_codes(draw, max_crossings=6, max_components=2):
    n = draw(st.integers(1, max_crossings))
    rng = random.Random(draw(st.integers(0, 2**32)))
    word = [c for c in range(1, n + 1) for _ in range(2)]
    rng.shuffle(word)
    k = draw(st.integers(1, min(max_components, len(word))))
    cuts = sorted(rng.sample(range(1, len(word)), k - 1))
    first_over = {c: rng.random() < 0.5 for c in range(1, n + 1)}
    sign = {c: rng.choice((1, -1)) for c in range(1, n + 1)}
    seen = set()
    passes = []
    for c in word:
        over = first_over[c] if c not in seen else not first_over[c]
        seen.add(c)
        passes.append(Pass(over, c, sign[c]))
    bounds = [0] + cuts + [len(word)]
    comps = tuple(tuple(passes[a:b]) for a, b in zip(bounds, bounds[1:]))
    return GaussCode(comps)
