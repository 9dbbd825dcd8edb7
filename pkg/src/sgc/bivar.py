"""Two-variable skew polynomials, s x l arrays and pseudo-linear maps.

The bivariate ring is of automorphism type: ``x1*r = sigma1(r)*x1``,
``x2*r = sigma2(r)*x2`` and ``x1*x2 = x2*x1``.  Quotients are taken by a
separable pair of moduli ``f1(x1)``, ``f2(x2)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NonCommutingModuli, NotMonic, RingMismatch, ZeroPolynomial
from .field import FieldCtx, FieldElement, FrobeniusMap, InnerDerivation, parse_value
from .ore import OrePoly, parse_terms

Exp = tuple[int, int]


class BiOreRing:
    def __init__(self, ctx: FieldCtx, t1: int = 0, t2: int = 0):
        self.ctx = ctx
        self.t1 = t1 % ctx.m
        self.t2 = t2 % ctx.m
        self.sigma1 = FrobeniusMap(ctx, self.t1)
        self.sigma2 = FrobeniusMap(ctx, self.t2)
        self.key = (ctx.key, self.t1, self.t2)

    def twist(self, v: int, a1: int, a2: int) -> int:
        """sigma1^a1 sigma2^a2 (v)."""
        return self.ctx.frob(v, self.t1 * a1 + self.t2 * a2)

    def poly(self, terms: dict[Exp, int | FieldElement]) -> BiOrePoly:
        return BiOrePoly(self, {k: (v.v if isinstance(v, FieldElement) else v) for k, v in terms.items()})

    def parse(self, text: str) -> BiOrePoly:
        return BiOrePoly(self, parse_terms(self.ctx, text, ("x1", "x2")))

    def monomial(self, a1: int, a2: int, c: int = 1) -> BiOrePoly:
        return BiOrePoly(self, {(a1, a2): c})

    def check(self, f: BiOrePoly) -> None:
        if f.ring.key != self.key:
            raise RingMismatch("bivariate polynomials from different rings")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BiOreRing) and other.key == self.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"{self.ctx!r}[x1; theta^{self.t1}][x2; theta^{self.t2}]"


class BiOrePoly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: BiOreRing, terms: dict[Exp, int]):
        self.ring = ring
        self.terms = {k: v for k, v in terms.items() if v}

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: BiOrePoly) -> BiOrePoly:
        self.ring.check(other)
        add = self.ring.ctx.add
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = add(out.get(k, 0), v)
        return BiOrePoly(self.ring, out)

    def __neg__(self) -> BiOrePoly:
        neg = self.ring.ctx.neg
        return BiOrePoly(self.ring, {k: neg(v) for k, v in self.terms.items()})

    def __sub__(self, other: BiOrePoly) -> BiOrePoly:
        return self + (-other)

    def __mul__(self, other: BiOrePoly) -> BiOrePoly:
        return bi_mul(self, other)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BiOrePoly) and self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ring.key, frozenset(self.terms.items())))

    def lexdeg(self) -> Exp:
        return lexdeg(self)

    def __str__(self) -> str:
        fmt = self.ring.ctx.fmt
        parts = []
        for (a1, a2) in sorted(self.terms, reverse=True):
            v = self.terms[(a1, a2)]
            mono = "*".join(
                s for s in (
                    "" if a1 == 0 else ("x1" if a1 == 1 else f"x1^{a1}"),
                    "" if a2 == 0 else ("x2" if a2 == 1 else f"x2^{a2}"),
                ) if s
            )
            if not mono:
                parts.append(fmt(v))
            elif v == 1:
                parts.append(mono)
            else:
                parts.append(f"{fmt(v)}*{mono}")
        return " + ".join(parts) if parts else "0"

    __repr__ = __str__


def bi_mul(f: BiOrePoly, g: BiOrePoly) -> BiOrePoly:
    """(a x1^i x2^j)(b x1^k x2^l) = a sigma1^i sigma2^j(b) x1^(i+k) x2^(j+l)."""
    ring = f.ring
    ring.check(g)
    ctx = ring.ctx
    out: dict[Exp, int] = {}
    for (i, j), a in f.terms.items():
        for (k, l), b in g.terms.items():
            key = (i + k, j + l)
            out[key] = ctx.add(out.get(key, 0), ctx.mul(a, ring.twist(b, i, j)))
    return BiOrePoly(ring, out)


def lex_le(a: Exp, b: Exp) -> bool:
    return a[0] < b[0] or (a[0] == b[0] and a[1] <= b[1])


def lexdeg(f: BiOrePoly) -> Exp:
    if f.is_zero():
        raise ZeroPolynomial("lexdeg of the zero polynomial")
    # tuple order on (a1, a2) is exactly the lex order with x1 dominant
    return max(f.terms)


def lex_lead(f: BiOrePoly) -> int:
    return f.terms[lexdeg(f)]


@dataclass(frozen=True)
class SeparableModuli:
    """Monic f1 in x1 (degree s) and f2 in x2 (degree l) over the same field."""

    ring: BiOreRing
    f1: tuple[int, ...]
    f2: tuple[int, ...]

    @property
    def s(self) -> int:
        return len(self.f1) - 1

    @property
    def l(self) -> int:
        return len(self.f2) - 1


def make_moduli(ring: BiOreRing, f1: OrePoly | Sequence[int], f2: OrePoly | Sequence[int]) -> SeparableModuli:
    c1 = tuple(f1.c) if isinstance(f1, OrePoly) else tuple(f1)
    c2 = tuple(f2.c) if isinstance(f2, OrePoly) else tuple(f2)
    for c in (c1, c2):
        if not c or c[-1] != 1 or len(c) < 2:
            raise NotMonic("moduli must be monic of degree >= 1")
    ctx = ring.ctx
    # x2 must commute past f1's coefficients and x1 past f2's
    if any(ctx.frob(v, ring.t2) != v for v in c1) or any(ctx.frob(v, ring.t1) != v for v in c2):
        raise NonCommutingModuli("moduli coefficients are not fixed by the other variable's automorphism")
    return SeparableModuli(ring, c1, c2)


def reduce_pair(mod: SeparableModuli, c: BiOrePoly) -> BiOrePoly:
    """Representative with x1-degree < s and x2-degree < l."""
    ring = mod.ring
    ring.check(c)
    ctx = ring.ctx
    s, l = mod.s, mod.l
    terms = dict(c.terms)
    # x1 first: c x1^a1 x2^a2 with a1 >= s, x1^s = -sum f1_i x1^i
    while True:
        hi = [k for k in terms if k[0] >= s]
        if not hi:
            break
        a1, a2 = max(hi)
        v = terms.pop((a1, a2))
        for i, fi in enumerate(mod.f1[:-1]):
            if fi:
                # c x1^(a1-s) * f1_i x1^i: coefficient twisted by sigma1^(a1-s)
                key = (a1 - s + i, a2)
                term = ctx.mul(v, ctx.frob(fi, ring.t1 * (a1 - s)))
                terms[key] = ctx.sub(terms.get(key, 0), term)
        terms = {k: w for k, w in terms.items() if w}
    while True:
        hi = [k for k in terms if k[1] >= l]
        if not hi:
            break
        a1, a2 = max(hi, key=lambda k: (k[1], k[0]))
        v = terms.pop((a1, a2))
        for j, fj in enumerate(mod.f2[:-1]):
            if fj:
                key = (a1, a2 - l + j)
                term = ctx.mul(v, ring.twist(fj, a1, a2 - l))
                terms[key] = ctx.sub(terms.get(key, 0), term)
        terms = {k: w for k, w in terms.items() if w}
    return BiOrePoly(ring, terms)


@dataclass
class Array2D:
    ctx: FieldCtx
    entries: list[list[int]]

    @property
    def s(self) -> int:
        return len(self.entries)

    @property
    def l(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @classmethod
    def zeros(cls, ctx: FieldCtx, s: int, l: int) -> Array2D:
        return cls(ctx, [[0] * l for _ in range(s)])

    @classmethod
    def from_flat(cls, ctx: FieldCtx, flat: Sequence[int], s: int, l: int) -> Array2D:
        if len(flat) != s * l:
            raise DimensionMismatch(f"{len(flat)} entries for a {s}x{l} array")
        return cls(ctx, [list(flat[i * l:(i + 1) * l]) for i in range(s)])

    def flat(self) -> list[int]:
        return [v for row in self.entries for v in row]

    def column(self, j: int) -> list[int]:
        return [row[j] for row in self.entries]

    def __add__(self, other: Array2D) -> Array2D:
        if (self.s, self.l) != (other.s, other.l):
            raise DimensionMismatch("array shapes differ")
        add = self.ctx.add
        return Array2D(self.ctx, [[add(a, b) for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Array2D) and self.entries == other.entries

    def format(self) -> str:
        return ";".join(",".join(self.ctx.fmt(v) for v in row) for row in self.entries)

    @classmethod
    def parse(cls, ctx: FieldCtx, text: str) -> Array2D:
        rows = [[parse_value(ctx, tok.strip()) for tok in row.split(",")] for row in text.split(";")]
        if len({len(r) for r in rows}) != 1:
            raise DimensionMismatch("ragged array")
        return cls(ctx, rows)


def gamma_f(mod: SeparableModuli, arr: Array2D) -> BiOrePoly:
    if (arr.s, arr.l) != (mod.s, mod.l):
        raise DimensionMismatch(f"array {arr.s}x{arr.l} vs moduli {mod.s}x{mod.l}")
    return BiOrePoly(mod.ring, {(i, j): v for i, row in enumerate(arr.entries) for j, v in enumerate(row) if v})


def gamma_f_inv(mod: SeparableModuli, c: BiOrePoly) -> Array2D:
    c = reduce_pair(mod, c)
    arr = Array2D.zeros(mod.ring.ctx, mod.s, mod.l)
    for (i, j), v in c.terms.items():
        arr.entries[i][j] = v
    return arr


def companion(f: OrePoly | Sequence[int], ctx: FieldCtx | None = None) -> list[list[int]]:
    """Unit superdiagonal, last row -f_0 ... -f_{n-1}."""
    if isinstance(f, OrePoly):
        ctx, c = f.ring.ctx, f.c
    else:
        c = tuple(f)
    if not c or c[-1] != 1:
        raise NotMonic("companion matrix needs a monic polynomial")
    n = len(c) - 1
    M = [[0] * n for _ in range(n)]
    for i in range(n - 1):
        M[i][i + 1] = 1
    M[n - 1] = [ctx.neg(v) for v in c[:n]]
    return M


@dataclass(frozen=True)
class PseudoLinearMap:
    """T(v) = sigma(v) . M + delta(v)."""

    M: tuple[tuple[int, ...], ...]
    sigma: FrobeniusMap
    delta: InnerDerivation

    @classmethod
    def build(cls, M: Sequence[Sequence[int]], sigma: FrobeniusMap, delta: InnerDerivation | None = None) -> PseudoLinearMap:
        if delta is None:
            delta = InnerDerivation(sigma, 0)
        return cls(tuple(tuple(r) for r in M), sigma, delta)

    @property
    def ctx(self) -> FieldCtx:
        return self.sigma.ctx

    @property
    def dim(self) -> int:
        return len(self.M)

    def __call__(self, v: Sequence[int]) -> list[int]:
        return pseudo_apply(self, v)


def pseudo_apply(T: PseudoLinearMap, v: Sequence[int]) -> list[int]:
    n = T.dim
    if len(v) != n:
        raise DimensionMismatch(f"vector of length {len(v)} for a {n}x{n} map")
    ctx = T.ctx
    sv = [T.sigma.apply(x) for x in v]
    out = [T.delta.apply(x) for x in v]
    for i, a in enumerate(sv):
        if a:
            row = T.M[i]
            for j, m in enumerate(row):
                if m:
                    out[j] = ctx.add(out[j], ctx.mul(a, m))
    return out


def apply_rows(T: PseudoLinearMap, arr: Array2D) -> Array2D:
    """T on each row (length l) of the array."""
    if T.dim != arr.l:
        raise DimensionMismatch("row transform dimension differs from array width")
    return Array2D(arr.ctx, [pseudo_apply(T, row) for row in arr.entries])


def apply_cols(T: PseudoLinearMap, arr: Array2D) -> Array2D:
    """T on each column (length s) of the array."""
    if T.dim != arr.s:
        raise DimensionMismatch("column transform dimension differs from array height")
    cols = [pseudo_apply(T, arr.column(j)) for j in range(arr.l)]
    return Array2D(arr.ctx, [[cols[j][i] for j in range(arr.l)] for i in range(arr.s)])


@dataclass
class ClosureReport:
    rows_closed: bool
    cols_closed: bool
    failures: list[tuple[str, int]]

    @property
    def closed(self) -> bool:
        return self.rows_closed and self.cols_closed


def shift_closure_check(code: Iterable[Array2D], T_row: PseudoLinearMap, T_col: PseudoLinearMap) -> ClosureReport:
    """Whether span(code) is mapped into itself by row-wise T_row and column-wise T_col."""
    from .linear import in_row_space, rref

    arrays = list(code)
    if not arrays:
        return ClosureReport(True, True, [])
    ctx = arrays[0].ctx
    basis = rref(ctx, [a.flat() for a in arrays])[1]
    failures = []
    rows_ok = cols_ok = True
    for idx, arr in enumerate(arrays):
        if not in_row_space(ctx, basis, apply_rows(T_row, arr).flat()):
            rows_ok = False
            failures.append(("row", idx))
        if not in_row_space(ctx, basis, apply_cols(T_col, arr).flat()):
            cols_ok = False
            failures.append(("col", idx))
    return ClosureReport(rows_ok, cols_ok, failures)


def x1_transform(mod: SeparableModuli) -> PseudoLinearMap:
    """Column-wise map realising multiplication by x1 on arrays."""
    return PseudoLinearMap.build(companion(mod.f1, mod.ring.ctx), mod.ring.sigma1)


def x2_transform(mod: SeparableModuli) -> PseudoLinearMap:
    """Row-wise map realising multiplication by x2 on arrays."""
    return PseudoLinearMap.build(companion(mod.f2, mod.ring.ctx), mod.ring.sigma2)
