"""Linear codes over GF(q): row reduction, duals, minimum distance, MDS tests."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import BudgetExceeded, DimensionMismatch
from .field import FieldCtx

DEFAULT_BUDGET = 10**7

Matrix = list[list[int]]


def rref(ctx: FieldCtx, rows: Sequence[Sequence[int]]) -> tuple[list[int], Matrix]:
    """Reduced row echelon form; returns (pivot columns, nonzero rows)."""
    A = [list(r) for r in rows]
    if not A:
        return [], []
    n = len(A[0])
    if any(len(r) != n for r in A):
        raise DimensionMismatch("rows of unequal length")
    add, mul, inv, neg = ctx.add, ctx.mul, ctx.inv, ctx.neg
    pivots: list[int] = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(A)) if A[i][col]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        s = inv(A[r][col])
        if s != 1:
            A[r] = [mul(s, v) for v in A[r]]
        prow = A[r]
        for i in range(len(A)):
            if i != r and A[i][col]:
                c = neg(A[i][col])
                A[i] = [add(a, mul(c, b)) if b else a for a, b in zip(A[i], prow)]
        pivots.append(col)
        r += 1
        if r == len(A):
            break
    return pivots, A[:r]


def rank(ctx: FieldCtx, rows: Sequence[Sequence[int]]) -> int:
    return len(rref(ctx, rows)[0])


def rref_rank(G: GenMatrix) -> tuple[int, Matrix]:
    piv, R = rref(G.ctx, G.rows)
    return len(piv), R


def in_row_space(ctx: FieldCtx, basis_rref: Sequence[Sequence[int]], v: Sequence[int]) -> bool:
    """Membership test against a basis already in RREF."""
    v = list(v)
    add, mul, neg = ctx.add, ctx.mul, ctx.neg
    for row in basis_rref:
        col = next(i for i, x in enumerate(row) if x)
        if v[col]:
            c = neg(v[col])
            v = [add(a, mul(c, b)) if b else a for a, b in zip(v, row)]
    return not any(v)


def null_space(ctx: FieldCtx, rows: Sequence[Sequence[int]], n: int) -> Matrix:
    """Basis of {x : row . x = 0 for every row}."""
    piv, R = rref(ctx, rows) if rows else ([], [])
    free = [j for j in range(n) if j not in piv]
    out = []
    for fcol in free:
        x = [0] * n
        x[fcol] = 1
        for i, pcol in enumerate(piv):
            x[pcol] = ctx.neg(R[i][fcol])
        out.append(x)
    return out


def dot(ctx: FieldCtx, a: Sequence[int], b: Sequence[int]) -> int:
    acc = 0
    for x, y in zip(a, b):
        if x and y:
            acc = ctx.add(acc, ctx.mul(x, y))
    return acc


def weight(v: Sequence[int]) -> int:
    return sum(1 for x in v if x)


@dataclass
class CodeParams:
    n: int
    k: int
    d: int | None = None

    def __str__(self) -> str:
        return f"[{self.n},{self.k},{self.d if self.d is not None else '?'}]"


@dataclass
class GenMatrix:
    ctx: FieldCtx
    rows: Matrix
    n: int = field(default=-1)

    def __post_init__(self):
        self.rows = [list(r) for r in self.rows]
        if self.n < 0:
            self.n = len(self.rows[0]) if self.rows else 0
        if any(len(r) != self.n for r in self.rows):
            raise DimensionMismatch("generator rows of unequal length")

    @property
    def k(self) -> int:
        return rank(self.ctx, self.rows)

    def rref(self) -> Matrix:
        return rref(self.ctx, self.rows)[1]

    def same_code(self, other: GenMatrix) -> bool:
        return self.rref() == other.rref()

    def contains(self, v: Sequence[int]) -> bool:
        return in_row_space(self.ctx, self.rref(), v)

    def format(self) -> str:
        fmt = self.ctx.fmt
        return ";".join(",".join(fmt(v) for v in r) for r in self.rows)


def dual(G: GenMatrix) -> GenMatrix:
    return GenMatrix(G.ctx, null_space(G.ctx, G.rows, G.n), G.n)


# -- minimum distance -----------------------------------------------------------

class _Tables:
    """numpy add/mul tables for vectorised enumeration (small q only)."""

    _cache: dict = {}

    @classmethod
    def get(cls, ctx: FieldCtx):
        if ctx.key not in cls._cache:
            q = ctx.q
            add = np.array([[ctx.add(a, b) for b in range(q)] for a in range(q)], dtype=np.int32)
            mul = np.array([[ctx.mul(a, b) for b in range(q)] for a in range(q)], dtype=np.int32)
            cls._cache[ctx.key] = (add, mul)
        return cls._cache[ctx.key]


_BLOCK = 1 << 15


def _full_enumeration(ctx: FieldCtx, basis: Matrix, n: int) -> int:
    q = ctx.q
    add, mul = _Tables.get(ctx)
    B = np.array(basis, dtype=np.int32)
    k = len(basis)
    # leading block: all combinations of the first k1 rows
    k1 = 1
    while k1 < k and q ** (k1 + 1) <= _BLOCK:
        k1 += 1
    block = np.zeros((1, n), dtype=np.int32)
    for r in range(k1):
        scaled = mul[:, B[r]]  # q x n
        block = add[block[:, None, :], scaled[None, :, :]].reshape(-1, n)
    best = n + 1
    w = np.count_nonzero(block, axis=1)
    w[0] = n + 1
    best = min(best, int(w.min()))
    rest = B[k1:]
    if len(rest) == 0:
        return best
    for coeffs in itertools.product(range(q), repeat=len(rest)):
        if not any(coeffs):
            continue
        off = np.zeros(n, dtype=np.int32)
        for c, row in zip(coeffs, rest):
            if c:
                off = add[off, mul[c, row]]
        words = add[block, off[None, :]]
        best = min(best, int(np.count_nonzero(words, axis=1).min()))
        if best == 1:
            break
    return best


def _information_set(ctx: FieldCtx, basis: Matrix, n: int, budget: int) -> int:
    """Enumerate systematic messages by increasing weight."""
    piv, R = rref(ctx, basis)
    k = len(R)
    upper = min(weight(r) for r in R)
    count = 0
    nonzero = ctx.nonzero()
    for wt in range(1, k + 1):
        lower = wt  # any codeword with message weight >= wt has weight >= wt
        if upper <= lower:
            return upper
        for support in itertools.combinations(range(k), wt):
            for vals in itertools.product(nonzero, repeat=wt):
                count += 1
                if count > budget:
                    raise BudgetExceeded("information-set enumeration exceeded budget", wt, upper)
                v = [0] * n
                for c, i in zip(vals, support):
                    row = R[i]
                    for j, x in enumerate(row):
                        if x:
                            v[j] = ctx.add(v[j], ctx.mul(c, x))
                upper = min(upper, weight(v))
    return upper


def min_distance(G: GenMatrix, budget: int = DEFAULT_BUDGET) -> int:
    """Exact minimum nonzero weight of the row space."""
    ctx = G.ctx
    _, basis = rref(ctx, G.rows)
    k = len(basis)
    if k == 0:
        raise ValueError("minimum distance of the zero code is undefined")
    if ctx.q ** k <= budget and ctx.q <= 256:
        return _full_enumeration(ctx, basis, G.n)
    return _information_set(ctx, basis, G.n, budget)


def min_distance_bruteforce(G: GenMatrix) -> int:
    """Plain Python enumeration of every message; test oracle only."""
    ctx = G.ctx
    best = G.n + 1
    for msg in itertools.product(range(ctx.q), repeat=len(G.rows)):
        if not any(msg):
            continue
        v = [0] * G.n
        for c, row in zip(msg, G.rows):
            if c:
                v = [ctx.add(a, ctx.mul(c, b)) for a, b in zip(v, row)]
        if any(v):
            best = min(best, weight(v))
    return best


def is_mds(G: GenMatrix) -> bool:
    """Every k columns of the generator are independent (d = n - k + 1)."""
    ctx = G.ctx
    piv, R = rref(ctx, G.rows)
    k, n = len(R), G.n
    if k == 0:
        return True
    # systematic form [I | A] on the pivot columns: MDS iff every square
    # submatrix of A is nonsingular
    others = [j for j in range(n) if j not in piv]
    A = [[R[i][j] for j in others] for i in range(k)]
    if any(0 in row for row in A):
        return False
    r = len(others)
    for size in range(2, min(k, r) + 1):
        for rs in itertools.combinations(range(k), size):
            for cs in itertools.combinations(range(r), size):
                if _det(ctx, [[A[i][j] for j in cs] for i in rs]) == 0:
                    return False
    return True


def is_mds_columns(G: GenMatrix) -> bool:
    """Direct k-column test; slower reference for :func:`is_mds`."""
    ctx = G.ctx
    _, R = rref(ctx, G.rows)
    k = len(R)
    for cols in itertools.combinations(range(G.n), k):
        if rank(ctx, [[row[j] for j in cols] for row in R]) < k:
            return False
    return True


def _det(ctx: FieldCtx, M: Matrix) -> int:
    n = len(M)
    if n == 1:
        return M[0][0]
    if n == 2:
        return ctx.sub(ctx.mul(M[0][0], M[1][1]), ctx.mul(M[0][1], M[1][0]))
    A = [list(r) for r in M]
    det = 1
    for c in range(n):
        p = next((i for i in range(c, n) if A[i][c]), None)
        if p is None:
            return 0
        if p != c:
            A[c], A[p] = A[p], A[c]
            det = ctx.neg(det)
        det = ctx.mul(det, A[c][c])
        inv = ctx.inv(A[c][c])
        for i in range(c + 1, n):
            if A[i][c]:
                f = ctx.mul(A[i][c], inv)
                A[i] = [ctx.sub(a, ctx.mul(f, b)) for a, b in zip(A[i], A[c])]
    return det


def singleton_ok(params: CodeParams) -> bool:
    return params.d is None or 1 <= params.d <= params.n - params.k + 1
