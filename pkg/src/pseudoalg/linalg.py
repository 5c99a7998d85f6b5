"""Exact linear algebra over the rationals.

Everything here works with sparse vectors: dictionaries mapping an
arbitrary hashable column key to a nonzero Fraction.  Systems stay small
(a few hundred unknowns), so sparse Gaussian elimination with exact
arithmetic is entirely adequate.
"""

from fractions import Fraction

Fr = Fraction


def vec_add(u, v, cv=Fr(1)):
    """u + cv*v for sparse vectors, dropping zeros."""
    out = dict(u)
    for k, c in v.items():
        s = out.get(k, Fr(0)) + cv * c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def vec_scale(u, c):
    if not c:
        return {}
    return {k: c * v for k, v in u.items()}


class SparseEliminator:
    """Incremental row reduction of sparse rational vectors.

    Rows are fed one at a time; each is reduced against the pivots seen so
    far and, if anything survives, normalized and stored under its pivot
    column.  `reduce` alone gives span-membership tests.
    """

    def __init__(self):
        self.pivots = {}  # pivot column -> normalized row

    def reduce(self, row):
        """Eliminate every pivot column from the row before choosing its own."""
        row = dict(row)
        while True:
            hit = [c for c in row if c in self.pivots]
            if not hit:
                break
            for col in hit:
                if col in row:
                    row = vec_add(row, self.pivots[col], -row[col])
        if not row:
            return row, None
        return row, self._pick(row)

    def _pick(self, row):
        # deterministic pivot choice keeps runs reproducible
        return min(row, key=_colkey)

    def add(self, row):
        """Insert a row; returns True if it enlarged the span."""
        red, col = self.reduce(row)
        if not red:
            return False
        inv = Fr(1) / red[col]
        self.pivots[col] = vec_scale(red, inv)
        # keep stored rows mutually reduced
        for pcol, prow in list(self.pivots.items()):
            if pcol != col and col in prow:
                self.pivots[pcol] = vec_add(prow, self.pivots[col], -prow[col])
        return True

    @property
    def rank(self):
        return len(self.pivots)

    def contains(self, row):
        red, _ = self.reduce(row)
        return not red


def _colkey(c):
    # the right-hand-side marker of inhomogeneous systems must never be
    # preferred as a pivot while real unknowns remain
    return (1 if c == "__rhs__" else 0, repr(type(c)), repr(c))


def nullspace(rows, columns):
    """Basis of the solution space of `rows` (homogeneous) in the given unknowns.

    `rows` is an iterable of sparse vectors keyed by elements of `columns`.
    Returns a list of sparse vectors spanning the kernel.
    """
    elim = SparseEliminator()
    for r in rows:
        elim.add(r)
    pivots = elim.pivots
    pivot_cols = set(pivots)
    free_cols = [c for c in columns if c not in pivot_cols]
    basis = []
    for fc in free_cols:
        sol = {fc: Fr(1)}
        # each pivot row determines the pivot variable from the free ones
        for pcol, prow in pivots.items():
            coeff = prow.get(fc)
            if coeff:
                sol[pcol] = sol.get(pcol, Fr(0)) - coeff
        basis.append({k: v for k, v in sol.items() if v})
    return basis


def span_dim(vectors):
    elim = SparseEliminator()
    for v in vectors:
        elim.add(v)
    return elim.rank


def quotient_representatives(space, subspace):
    """Vectors of `space` spanning a complement of `subspace` inside it.

    Both arguments are lists of sparse vectors; `subspace` must lie inside
    the span of `space` for the dimension count to be meaningful.
    """
    elim = SparseEliminator()
    for v in subspace:
        elim.add(v)
    reps = []
    for v in space:
        if elim.add(v):
            reps.append(v)
    return reps


def solve(rows, rhs_key="__rhs__"):
    """Solve an inhomogeneous sparse system.

    Each row is a sparse vector augmented with `rhs_key` for the constant
    term (row . x = rhs).  Returns one particular solution as a sparse
    vector, or None if inconsistent.
    """
    elim = SparseEliminator()
    for r in rows:
        elim.add(r)
    # inconsistent iff some reduced row is constant-only
    sol = {}
    for pcol, prow in elim.pivots.items():
        if pcol == rhs_key:
            return None
    # back-substitute with free variables set to zero
    for pcol, prow in sorted(elim.pivots.items(), key=lambda kv: _colkey(kv[0])):
        rhs = Fr(0)
        for c, v in prow.items():
            if c == rhs_key:
                rhs += v
            elif c != pcol and c in sol:
                rhs -= v * sol[c]
            elif c != pcol:
                pass  # free variable, taken as zero
        sol[pcol] = rhs
    return {k: v for k, v in sol.items() if v and k != rhs_key}


def invert_matrix(mat):
    """Inverse of a dense square rational matrix (list of lists).

    Raises ValueError on a singular input; callers rely on the loud
    failure rather than a silent pseudo-inverse.
    """
    n = len(mat)
    a = [[Fr(x) for x in row] + [Fr(1) if i == j else Fr(0) for j in range(n)]
         for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            raise ValueError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        inv = Fr(1) / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]
