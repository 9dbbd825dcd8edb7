"""Skew generalized cyclic codes built from generator polynomials."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .bivar import (
    Array2D,
    BiOrePoly,
    ClosureReport,
    PseudoLinearMap,
    SeparableModuli,
    bi_mul,
    gamma_f_inv,
    lex_lead,
    lexdeg,
    reduce_pair,
    shift_closure_check,
    x1_transform,
    x2_transform,
)
from .errors import DegreeOutOfRange, LexdegOutOfRange, NotTwoSidedDivisor, ZeroConstantTerm
from .field import InnerDerivation
from .linear import CodeParams, GenMatrix, in_row_space, is_mds, min_distance, rank, rref
from .ore import OrePoly, OreRing, QuotientRing, mul_x, ore_left_divmod, ore_right_divmod


@dataclass
class SgcCode:
    ring: OreRing
    g: OrePoly
    n: int
    G: GenMatrix
    params: CodeParams

    @property
    def k(self) -> int:
        return self.params.k

    def min_distance(self, budget: int | None = None) -> int:
        if self.params.d is None:
            self.params.d = min_distance(self.G, budget) if budget else min_distance(self.G)
        return self.params.d

    def is_mds(self) -> bool:
        return is_mds(self.G)

    def encode(self, u: OrePoly) -> list[int]:
        """Coefficient vector of u * g (deg u < k)."""
        return (u * self.g).vector(self.n)


def generator_rows(ring: OreRing, g: OrePoly, n: int) -> list[list[int]]:
    """Coefficient vectors of x^i g, i = 0..n-deg(g)-1."""
    rows = []
    cur = list(g.c)
    for _ in range(n - g.deg):
        rows.append(cur + [0] * (n - len(cur)))
        cur = mul_x(ring, cur)
    return rows


def sgc_from_generator(ring: OreRing, g: OrePoly, n: int) -> SgcCode:
    ring.check(g)
    if g.is_zero() or not 0 <= g.deg <= n - 1:
        raise DegreeOutOfRange(f"need 0 <= deg g <= n-1, got deg g = {g.deg}, n = {n}")
    if not g.is_monic():
        g = g.monic()
    rows = generator_rows(ring, g, n)
    G = GenMatrix(ring.ctx, rows, n)
    return SgcCode(ring, g, n, G, CodeParams(n, n - g.deg))


def x_power_remainder(ring: OreRing, g: OrePoly, n: int) -> OrePoly:
    return ore_right_divmod(ring.x(n), g)[1]


def divisor_targets(ring: OreRing, g: OrePoly, n: int) -> set[int]:
    """{a != 0 : g right-divides x^n - a}.

    The right remainder is additive, so rem(x^n - a) = rem(x^n) - a and at
    most one a qualifies.
    """
    if g.deg > n:
        return set()
    if g.deg == 0:
        return set(ring.ctx.nonzero())
    r = x_power_remainder(ring, g, n)
    if r.deg <= 0:
        a = r.coeff(0)
        if a:
            return {a}
    return set()


def divisor_targets_bruteforce(ring: OreRing, g: OrePoly, n: int) -> set[int]:
    out = set()
    for a in ring.ctx.nonzero():
        f = ring.x(n) - ring.const(a)
        if ore_right_divmod(f, g)[1].is_zero():
            out.add(a)
    return out


def format_targets(ring: OreRing, targets: set[int]) -> str:
    if not targets:
        return "∄"
    log = ring.ctx.log
    return ",".join(ring.ctx.fmt(a) for a in sorted(targets, key=lambda v: log[v]))


# -- duals ----------------------------------------------------------------------

@dataclass
class ParityCheck:
    h_left: OrePoly  # f = g * h_left
    H: list[list[int]]  # rows T_f^j(h_left), j = 0..n-1
    parity: list[list[int]]  # independent columns of H, as rows


def cofactor_parity(ring: OreRing, f: OrePoly, g: OrePoly) -> ParityCheck:
    """Parity-check data from a two-sided factorisation f = h g = g h'.

    Codewords a satisfy a . H = 0, so the columns of H span the dual code.
    """
    ring.check(f)
    ring.check(g)
    if not f.is_monic() or not g.is_monic():
        raise NotTwoSidedDivisor("f and g must be monic")
    if f.coeff(0) == 0:
        raise ZeroConstantTerm("modulus has zero constant term")
    _, r_right = ore_right_divmod(f, g)
    h_left, r_left = ore_left_divmod(f, g)
    if not r_right.is_zero() or not r_left.is_zero():
        raise NotTwoSidedDivisor("g must divide f on both sides")
    n = f.deg
    Q = QuotientRing(f)
    vec = h_left.vector(n) if h_left.deg < n else Q.reduce(h_left).vector(n)
    H = [vec]
    for _ in range(n - 1):
        H.append(Q.shift(H[-1]))
    piv, _ = rref(ring.ctx, H)
    parity = [[H[i][j] for i in range(n)] for j in piv]
    return ParityCheck(h_left, H, parity)


def dual_transform(T: PseudoLinearMap) -> PseudoLinearMap:
    """(M, sigma, delta) -> ((M^t) with sigma^-1 entrywise, sigma^-1, -sigma^-1 delta)."""
    sig_inv = T.sigma.inverse()
    n = T.dim
    Mt = [[sig_inv.apply(T.M[j][i]) for j in range(n)] for i in range(n)]
    # -sigma^-1(gamma (sigma(a) - a)) = sigma^-1(gamma) (sigma^-1(a) - a)
    gamma = T.delta.gamma if not T.delta.is_zero else 0
    return PseudoLinearMap.build(Mt, sig_inv, InnerDerivation(sig_inv, sig_inv.apply(gamma)))


def is_invariant(basis: Sequence[Sequence[int]], T: PseudoLinearMap) -> bool:
    ctx = T.ctx
    _, R = rref(ctx, basis)
    return all(in_row_space(ctx, R, T(v)) for v in basis)


def invariant_closure(vectors: Sequence[Sequence[int]], T: PseudoLinearMap) -> list[list[int]]:
    """Smallest T-invariant subspace containing the vectors (RREF basis)."""
    ctx = T.ctx
    _, R = rref(ctx, vectors)
    while True:
        extra = [T(v) for v in R]
        _, R2 = rref(ctx, R + extra)
        if len(R2) == len(R):
            return R2
        R = R2


# -- 2D -------------------------------------------------------------------------

@dataclass
class Sgc2dCode:
    mod: SeparableModuli
    g: BiOrePoly
    lexdeg: tuple[int, int]
    G: GenMatrix
    params: CodeParams
    expected_k: int
    closure: ClosureReport
    arrays: list[Array2D] = field(default_factory=list)

    @property
    def rank_matches(self) -> bool:
        return self.params.k == self.expected_k


def sgc2d_from_generator(mod: SeparableModuli, g: BiOrePoly) -> Sgc2dCode:
    ring = mod.ring
    ring.check(g)
    k1, k2 = lexdeg(g)
    s, l = mod.s, mod.l
    if not (k1 < s and k2 < l):
        raise LexdegOutOfRange(f"lexdeg {(k1, k2)} outside {s}x{l}")
    if lex_lead(g) == 0:
        raise LexdegOutOfRange("lex-leading coefficient must be a unit")
    arrays = []
    for j in range(l - k2):
        for i in range(s - k1):
            mono = BiOrePoly(ring, {(i, j): 1})
            arrays.append(gamma_f_inv(mod, reduce_pair(mod, bi_mul(mono, g))))
    rows = [a.flat() for a in arrays]
    G = GenMatrix(ring.ctx, rows, s * l)
    k = rank(ring.ctx, rows)
    closure = shift_closure_check(arrays, x2_transform(mod), x1_transform(mod))
    return Sgc2dCode(mod, g, (k1, k2), G, CodeParams(s * l, k), (s - k1) * (l - k2), closure, arrays)
