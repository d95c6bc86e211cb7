"""Exact dense linear algebra over Q(i): elimination, null spaces, char polys."""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

from .poly import UniPoly
from .scalars import ONE, ZERO, GaussianRational

Matrix = List[List[GaussianRational]]


def zeros(rows: int, cols: int) -> Matrix:
    return [[ZERO] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    m = zeros(n, n)
    for k in range(n):
        m[k][k] = ONE
    return m


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    rows, inner, cols = len(a), len(b), len(b[0])
    out = zeros(rows, cols)
    for i in range(rows):
        ai = a[i]
        oi = out[i]
        for k in range(inner):
            c = ai[k]
            if not c:
                continue
            bk = b[k]
            for j in range(cols):
                if bk[j]:
                    oi[j] = oi[j] + c * bk[j]
    return out


def mat_vec(a: Matrix, v: Sequence[GaussianRational]) -> List[GaussianRational]:
    out = []
    for row in a:
        s = ZERO
        for c, x in zip(row, v):
            if c and x:
                s = s + c * x
        out.append(s)
    return out


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_eq_zero(a: Matrix) -> bool:
    return all(not x for row in a for x in row)


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def rref(matrix: Matrix) -> Tuple[Matrix, List[int]]:
    """Reduced row-echelon form and pivot column indices."""
    m = [row[:] for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        pivot = None
        for i in range(r, rows):
            if m[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = ONE / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(matrix: Matrix) -> int:
    if not matrix:
        return 0
    return len(rref(matrix)[1])


def nullspace(matrix: Matrix) -> List[List[GaussianRational]]:
    """Basis of the right null space (one vector per free column)."""
    if not matrix:
        return []
    cols = len(matrix[0])
    red, pivots = rref(matrix)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [ZERO] * cols
        v[fc] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def solve(matrix: Matrix, rhs: Sequence[GaussianRational]
          ) -> Optional[List[GaussianRational]]:
    """One solution of A x = b, or None when inconsistent."""
    if not matrix:
        return None
    cols = len(matrix[0])
    aug = [row[:] + [b] for row, b in zip(matrix, rhs)]
    red, pivots = rref(aug)
    for r in range(len(red)):
        if all(not x for x in red[r][:cols]) and red[r][cols]:
            return None
    x = [ZERO] * cols
    for r, pc in enumerate(pivots):
        if pc == cols:
            return None
        x[pc] = red[r][cols]
    return x


def row_space_contains(rows: Matrix, vector: Sequence[GaussianRational]) -> bool:
    if not rows:
        return all(not x for x in vector)
    return rank(rows) == rank(rows + [list(vector)])


def char_poly(matrix: Matrix) -> UniPoly:
    """Characteristic polynomial det(T*I - A), monic, via Hessenberg form."""
    n = len(matrix)
    if n == 0:
        return UniPoly.const(1)
    m = [row[:] for row in matrix]
    # similarity reduction to upper Hessenberg with exact arithmetic
    for j in range(n - 2):
        pivot = None
        for i in range(j + 1, n):
            if m[i][j]:
                pivot = i
                break
        if pivot is None:
            continue
        if pivot != j + 1:
            m[pivot], m[j + 1] = m[j + 1], m[pivot]
            for row in m:
                row[pivot], row[j + 1] = row[j + 1], row[pivot]
        p = m[j + 1][j]
        for i in range(j + 2, n):
            if m[i][j]:
                f = m[i][j] / p
                m[i] = [x - f * y for x, y in zip(m[i], m[j + 1])]
                for row in m:
                    row[j + 1] = row[j + 1] + f * row[i]
    # recurrence on leading principal minors of (T*I - H)
    polys = [UniPoly.const(1)]
    for k in range(1, n + 1):
        diag = m[k - 1][k - 1]
        term = UniPoly((-diag, ONE)) * polys[k - 1]
        sub = ONE
        for j in range(k - 1, 0, -1):
            sub = sub * m[j][j - 1]
            coef = m[j - 1][k - 1] * sub
            if coef:
                term = term - coef * polys[j - 1]
        polys.append(term)
    return polys[n]


def char_poly_faddeev(matrix: Matrix) -> UniPoly:
    """Faddeev-LeVerrier characteristic polynomial; independent cross-check."""
    n = len(matrix)
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    mk = identity(n)
    for k in range(1, n + 1):
        mk = mat_mul(matrix, mk)
        tr = ZERO
        for i in range(n):
            tr = tr + mk[i][i]
        c = -(tr / GaussianRational(k))
        coeffs[n - k] = c
        if k < n:
            for i in range(n):
                mk[i][i] = mk[i][i] + c
    return UniPoly(coeffs)


def poly_at_matrix(p: UniPoly, matrix: Matrix) -> Matrix:
    """Evaluate a univariate polynomial at a square matrix (Horner)."""
    n = len(matrix)
    out = zeros(n, n)
    for c in reversed(p.coeffs):
        out = mat_mul(matrix, out)
        if c:
            for i in range(n):
                out[i][i] = out[i][i] + c
    return out


def image_chain_nilpotent(matrix: Matrix) -> bool:
    """True iff the matrix is nilpotent, via the descending image chain."""
    vectors = [list(col) for col in zip(*matrix)]  # columns span the image
    current = _column_basis(vectors)
    while current:
        nxt = _column_basis([mat_vec(matrix, v) for v in current])
        if len(nxt) == len(current):
            return False
        current = nxt
    return True


def _column_basis(vectors: List[List[GaussianRational]]) -> List[List[GaussianRational]]:
    vecs = [v for v in vectors if any(v)]
    if not vecs:
        return []
    red, pivots = rref(vecs)
    return [red[r] for r in range(len(pivots))]


def rank_sequence(matrix: Matrix, max_power: int = 0) -> Tuple[int, ...]:
    """Ranks of A, A^2, ... until stabilisation (or max_power terms)."""
    out = []
    power = [row[:] for row in matrix]
    prev = None
    count = 0
    while True:
        r = rank(power)
        out.append(r)
        count += 1
        if r == 0 or r == prev or (max_power and count >= max_power):
            break
        prev = r
        power = mat_mul(power, matrix)
    return tuple(out)
