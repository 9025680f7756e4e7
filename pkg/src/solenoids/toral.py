"""Toral solenoids as chains of integer matrices, and exact lattice normal forms.

A chain ``A_1, A_2, ...`` of nonsingular ``n x n`` integer matrices presents
an inverse limit of self-covers of the ``n``-torus. At depth ``k`` the
fiber is ``Z^n / L_k Z^n`` with ``L_k = A_1 A_2 ... A_k``.

Everything here is exact integer arithmetic on tuples of tuples; no
floating point is involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .verdict import Outcome, Verdict

Matrix = tuple[tuple[int, ...], ...]


class DimensionMismatch(ValueError):
    pass


def as_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    m = tuple(tuple(int(x) for x in row) for row in rows)
    if m and len({len(row) for row in m}) != 1:
        raise ValueError("ragged matrix")
    return m


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def scalar(n: int, c: int) -> Matrix:
    return tuple(tuple(c * int(i == j) for j in range(n)) for i in range(n))


def shape(a: Matrix) -> tuple[int, int]:
    return len(a), (len(a[0]) if a else 0)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if shape(a)[1] != len(b):
        raise DimensionMismatch(f"cannot multiply {shape(a)} by {shape(b)}")
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def det(a: Matrix) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


@dataclass(frozen=True)
class SmithForm:
    """``U @ A @ V == D`` with ``U``, ``V`` unimodular and ``D`` diagonal, d1 | d2 | ..."""

    U: Matrix
    D: Matrix
    V: Matrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.D[i][i] for i in range(min(shape(self.D))))

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return tuple(d for d in self.diagonal if d > 1)

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def smith_normal_form(a: Sequence[Sequence[int]]) -> SmithForm:
    A = as_matrix(a)
    n, m = shape(A)
    D = [list(row) for row in A]
    U = [list(row) for row in identity(n)]
    V = [list(row) for row in identity(m)]

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (D, V):
            for row in M:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        for M in (D, U):
            M[dst] = [x + q * y for x, y in zip(M[dst], M[src])]

    def add_col(dst, src, q):  # col_dst += q * col_src
        for M in (D, V):
            for row in M:
                row[dst] += q * row[src]

    for t in range(min(n, m)):
        nonzero = [(abs(D[i][j]), i, j) for i in range(t, n) for j in range(t, m) if D[i][j]]
        if not nonzero:
            break
        _, i, j = min(nonzero)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = D[t][t]
            for i in range(t + 1, n):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // p))
            for j in range(t + 1, m):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // p))
            rest = [(abs(D[i][t]), i, t) for i in range(t + 1, n) if D[i][t]]
            rest += [(abs(D[t][j]), t, j) for j in range(t + 1, m) if D[t][j]]
            if rest:
                # a remainder smaller than the pivot survived; make it the pivot
                _, i, j = min(rest)
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            bad = next(
                ((i, j) for i in range(t + 1, n) for j in range(t + 1, m) if D[i][j] % p),
                None,
            )
            if bad is None:
                break
            # row t picks up an entry not divisible by p; the next column
            # pass leaves a remainder smaller than p
            add_row(t, bad[0], 1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]

    return SmithForm(as_matrix(U), as_matrix(D), as_matrix(V))


def hermite_normal_form(a: Sequence[Sequence[int]]) -> Matrix:
    """Column-style Hermite basis of the lattice spanned by the columns of ``a``.

    Returns an ``n x r`` matrix in lower column-echelon form: each column
    has a positive pivot strictly below the previous column's pivot, and
    entries to the left of a pivot lie in ``[0, pivot)``.
    """
    A = as_matrix(a)
    n, m = shape(A)
    H = [list(row) for row in A]

    def col_op(j, k, a_, b_, c_, d_):
        # (col_j, col_k) <- (a col_j + b col_k, c col_j + d col_k)
        for row in H:
            x, y = row[j], row[k]
            row[j], row[k] = a_ * x + b_ * y, c_ * x + d_ * y

    c = 0
    for i in range(n):
        if c == m:
            break
        for k in range(c + 1, m):
            x, y = H[i][c], H[i][k]
            if y == 0:
                continue
            g, s, t = _xgcd(x, y)
            # determinant s*(x/g) + t*(y/g) = 1
            col_op(c, k, s, t, -y // g, x // g)
        if H[i][c] == 0:
            continue
        if H[i][c] < 0:
            for row in H:
                row[c] = -row[c]
        p = H[i][c]
        for j in range(c):
            q = H[i][j] // p
            if q:
                for row in H:
                    row[j] -= q * row[c]
        c += 1
    return tuple(tuple(row[:c]) for row in H)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """``(g, s, t)`` with ``s*a + t*b = g = gcd(a, b) >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0


def _check_matrix(name: str, mat: Sequence[Sequence[int]], n: int) -> Matrix:
    M = as_matrix(mat)
    if shape(M) != (n, n):
        raise DimensionMismatch(f"{name} has shape {shape(M)}, expected ({n}, {n})")
    d = det(M)
    if abs(d) < 2:
        raise ValueError(f"{name} has determinant {d}: each stage must be a proper covering (|det| >= 2)")
    return M


@dataclass(frozen=True)
class MatrixChain:
    n: int
    prefix: tuple[Matrix, ...]
    period: tuple[Matrix, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"dimension must be >= 1, got {self.n}")
        if not self.period:
            raise ValueError("period must be nonempty")
        prefix = tuple(_check_matrix(f"prefix[{i}]", m, self.n) for i, m in enumerate(self.prefix))
        period = tuple(_check_matrix(f"period[{i}]", m, self.n) for i, m in enumerate(self.period))
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "period", period)

    @classmethod
    def periodic(cls, *period: Sequence[Sequence[int]]) -> "MatrixChain":
        return cls(len(period[0]), (), tuple(as_matrix(m) for m in period))

    def term(self, i: int) -> Matrix:
        if i < 1:
            raise IndexError("terms are indexed from 1")
        if i <= len(self.prefix):
            return self.prefix[i - 1]
        return self.period[(i - 1 - len(self.prefix)) % len(self.period)]

    def products(self, k: int) -> list[Matrix]:
        """``L_0 = I, L_1, ..., L_k``."""
        out = [identity(self.n)]
        for i in range(1, k + 1):
            out.append(matmul(out[-1], self.term(i)))
        return out

    def drop_prefix(self) -> "MatrixChain":
        return MatrixChain(self.n, (), self.period)


@dataclass(frozen=True)
class LatticeInvariants:
    rank: int
    torsion_rank: int
    invariant_factors: tuple[int, ...]


def quotient_invariants(c: MatrixChain, depth: int) -> list[tuple[int, ...]]:
    """Invariant factors (> 1) of ``Z^n / L_k Z^n`` for ``k = 1..depth``."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    return [smith_normal_form(L).invariant_factors for L in c.products(depth)[1:]]


def lattice_invariants(K: Sequence[Sequence[int]]) -> LatticeInvariants:
    """Rank of the column lattice of ``K`` and the torsion of ``Z^n / K``."""
    snf = smith_normal_form(K)
    factors = snf.invariant_factors
    return LatticeInvariants(rank=snf.rank, torsion_rank=len(factors), invariant_factors=factors)


def kernel_lattice_at_depth(c: MatrixChain, depth: int) -> Matrix:
    """Hermite basis of ``L_k Z^n``.

    The kernel of the level-``k`` action is this lattice; the limiting
    kernel is the intersection over all ``k``, which this over-approximates.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    return hermite_normal_form(c.products(depth)[-1])


def strictly_shrinking(c: MatrixChain) -> bool:
    """Whether every invariant factor of ``L_k`` grows strictly across one period.

    Evidence (not proof) that the lattices ``L_k Z^n`` intersect trivially.
    """
    start = len(c.prefix)
    products = c.products(start + len(c.period))
    before = smith_normal_form(products[start]).diagonal
    after = smith_normal_form(products[-1]).diagonal
    return all(y > x for x, y in zip(before, after))


def _is_quotient(small: tuple[int, ...], big: tuple[int, ...]) -> bool:
    # Finite abelian G is a quotient of H iff the aligned invariant factors divide.
    return all(y % x == 0 for x, y in zip(small, big))


def toral_consistency(
    a: MatrixChain, b: MatrixChain, depth: int, horizon: int | None = None
) -> Verdict:
    """Screen two toral chains for return equivalence using invariant factors.

    After deleting prefixes, each quotient ``Z^n / L^a_j`` (``j <= depth``)
    must be a quotient of some ``Z^n / L^b_i`` with ``i <= horizon``
    (default ``2 * depth``), and symmetrically. Only conjugation-invariant
    data is compared; no ``GL(n, Z)`` conjugator is searched for.
    """
    if a.n != b.n:
        raise DimensionMismatch(f"chains have dimensions {a.n} and {b.n}")
    if depth < 1:
        raise ValueError("depth must be >= 1")
    horizon = 2 * depth if horizon is None else horizon
    a, b = a.drop_prefix(), b.drop_prefix()
    def diagonals(c: MatrixChain, k: int) -> list[tuple[int, ...]]:
        return [smith_normal_form(L).diagonal for L in c.products(k)[1:]]

    for name, x, y in (("first", a, b), ("second", b, a)):
        xs, ys = diagonals(x, depth), diagonals(y, horizon)
        for j, small in enumerate(xs, start=1):
            if not any(_is_quotient(small, big) for big in ys):
                factors = tuple(d for d in small if d > 1)
                return Verdict(
                    Outcome.REFUTED,
                    certificate=(
                        f"level {j} quotient of the {name} chain with invariant factors "
                        f"{factors} is not a quotient of the other chain's levels 1..{horizon}"
                    ),
                    depth=depth,
                )
    return Verdict(
        Outcome.CONSISTENT_AT_DEPTH,
        certificate=f"invariant-factor chains interleave up to depth {depth} (horizon {horizon})",
        depth=depth,
    )
