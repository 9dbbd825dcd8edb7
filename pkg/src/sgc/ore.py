"""Univariate skew polynomials F_q[x; sigma, delta].

``sigma`` is a power of Frobenius and ``delta`` the inner derivation
``gamma * (sigma - id)``.  Multiplication follows ``x*r = sigma(r)*x + delta(r)``.
Coefficients are kept as raw field integers (see :mod:`sgc.field`).
"""

from __future__ import annotations

import functools
import re
from typing import Iterable, Sequence

from .errors import (
    BothZero,
    CtxMismatch,
    DivisionByZeroPoly,
    NotMonic,
    ParseError,
    RingMismatch,
    ZeroConstantTerm,
    ZeroInput,
)
from .field import (
    FieldCtx,
    FieldElement,
    FrobeniusMap,
    InnerDerivation,
    embedding,
    extension,
    parse_value,
)


class OreRing:
    def __init__(self, ctx: FieldCtx, t: int = 1, gamma: int | FieldElement = 0):
        if isinstance(gamma, FieldElement):
            ctx.check(gamma)
            gamma = gamma.v
        t %= ctx.m
        if t == 0:
            gamma = 0
        self.ctx = ctx
        self.t = t
        self.gamma = gamma
        self.sigma = FrobeniusMap(ctx, t)
        self.delta = InnerDerivation(self.sigma, gamma)
        self.key = (ctx.key, t, gamma)

    # coefficient maps on raw ints
    def s(self, v: int) -> int:
        return self.ctx.frob(v, self.t)

    def s_inv(self, v: int) -> int:
        return self.ctx.frob(v, -self.t)

    def s_pow(self, v: int, k: int) -> int:
        return self.ctx.frob(v, self.t * k)

    def d(self, v: int) -> int:
        return self.delta.apply(v)

    @property
    def commutative(self) -> bool:
        return self.t == 0

    def poly(self, coeffs: Iterable[int | FieldElement | str]) -> OrePoly:
        out = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                self.ctx.check(c)
                out.append(c.v)
            elif isinstance(c, str):
                out.append(parse_value(self.ctx, c))
            else:
                out.append(c)
        return OrePoly(self, out)

    def parse(self, text: str) -> OrePoly:
        return OrePoly(self, _parse_univariate(self.ctx, text))

    def x(self, k: int = 1) -> OrePoly:
        return OrePoly(self, [0] * k + [1])

    def const(self, v: int) -> OrePoly:
        return OrePoly(self, [v])

    @property
    def zero(self) -> OrePoly:
        return OrePoly(self, ())

    @property
    def one(self) -> OrePoly:
        return OrePoly(self, (1,))

    def linear(self, root: int) -> OrePoly:
        """x - root."""
        return OrePoly(self, (self.ctx.neg(root), 1))

    # norms --------------------------------------------------------------------

    def norm(self, i: int, a: int) -> int:
        """N_i(a): N_0 = 1, N_{j+1} = sigma(N_j) * a + delta(N_j)."""
        ctx = self.ctx
        n = 1
        for _ in range(i):
            n = ctx.add(ctx.mul(self.s(n), a), self.d(n))
        return n

    def norms(self, upto: int, a: int) -> list[int]:
        ctx = self.ctx
        out = [1]
        for _ in range(upto):
            n = out[-1]
            out.append(ctx.add(ctx.mul(self.s(n), a), self.d(n)))
        return out

    def classical_norm(self, i: int, a: int) -> int:
        """a * sigma(a) * ... * sigma^(i-1)(a)."""
        ctx = self.ctx
        n = 1
        for j in range(i):
            n = ctx.mul(n, self.s_pow(a, j))
        return n

    def extend(self, e: int) -> OreRing:
        """Same Frobenius exponent over GF(q^e), gamma embedded."""
        if e == 1:
            return self
        dst = extension(self.ctx, e)
        return ore_ring(dst, self.t, embedding(self.ctx, dst)(self.gamma))

    def embed(self, f: OrePoly, target: OreRing) -> OrePoly:
        if target is self:
            return f
        emb = embedding(self.ctx, target.ctx)
        return OrePoly(target, [emb(c) for c in f.c])

    def check(self, f: OrePoly) -> None:
        if f.ring is not self and f.ring.key != self.key:
            raise RingMismatch(f"polynomial over {f.ring!r} used in {self!r}")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, OreRing) and other.key == self.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        if self.t == 0:
            return f"{self.ctx!r}[x]"
        th = "theta" if self.t == 1 else f"theta^{self.t}"
        if self.gamma:
            return f"{self.ctx!r}[x; {th}, delta_{self.ctx.fmt(self.gamma)}]"
        return f"{self.ctx!r}[x; {th}]"

    def __reduce__(self):
        return (ore_ring, (self.ctx, self.t, self.gamma))


@functools.lru_cache(maxsize=None)
def ore_ring(ctx: FieldCtx, t: int = 1, gamma: int = 0) -> OreRing:
    return OreRing(ctx, t, gamma)


class OrePoly:
    """Dense ascending coefficients, trailing zeros trimmed; () is zero."""

    __slots__ = ("ring", "c")

    def __init__(self, ring: OreRing, coeffs: Sequence[int]):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.ring = ring
        self.c = tuple(c)

    @property
    def deg(self) -> int:
        return len(self.c) - 1

    @property
    def lead(self) -> int:
        return self.c[-1] if self.c else 0

    def is_zero(self) -> bool:
        return not self.c

    def is_monic(self) -> bool:
        return bool(self.c) and self.c[-1] == 1

    def coeff(self, i: int) -> int:
        return self.c[i] if 0 <= i < len(self.c) else 0

    @property
    def coeffs(self) -> list[FieldElement]:
        return [FieldElement(self.ring.ctx, v) for v in self.c]

    def vector(self, n: int) -> list[int]:
        """Coefficient vector padded to length n."""
        if len(self.c) > n:
            raise ValueError(f"degree {self.deg} does not fit length {n}")
        return list(self.c) + [0] * (n - len(self.c))

    @property
    def weight(self) -> int:
        return sum(1 for v in self.c if v)

    def __add__(self, other: OrePoly) -> OrePoly:
        self.ring.check(other)
        add = self.ring.ctx.add
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        return OrePoly(self.ring, [add(x, b[i]) if i < len(b) else x for i, x in enumerate(a)])

    def __neg__(self) -> OrePoly:
        neg = self.ring.ctx.neg
        return OrePoly(self.ring, [neg(v) for v in self.c])

    def __sub__(self, other: OrePoly) -> OrePoly:
        return self + (-other)

    def __mul__(self, other: OrePoly | FieldElement | int) -> OrePoly:
        if isinstance(other, OrePoly):
            return ore_mul(self, other)
        if isinstance(other, FieldElement):
            other = OrePoly(self.ring, [other.v])
        else:
            other = OrePoly(self.ring, [other])
        return ore_mul(self, other)

    def __rmul__(self, other: FieldElement | int) -> OrePoly:
        v = other.v if isinstance(other, FieldElement) else other
        return self.scale_left(v)

    def __pow__(self, k: int) -> OrePoly:
        out = self.ring.one
        for _ in range(k):
            out = ore_mul(out, self)
        return out

    def scale_left(self, v: int) -> OrePoly:
        mul = self.ring.ctx.mul
        return OrePoly(self.ring, [mul(v, c) for c in self.c])

    def monic(self) -> OrePoly:
        """Left-multiply by the inverse leading coefficient."""
        if not self.c:
            raise ZeroInput("zero polynomial has no monic associate")
        return self.scale_left(self.ring.ctx.inv(self.c[-1]))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, OrePoly) and self.c == other.c and self.ring.key == other.ring.key

    def __hash__(self) -> int:
        return hash((self.ring.key, self.c))

    def __lt__(self, other: OrePoly) -> bool:
        return self.sort_key() < other.sort_key()

    def sort_key(self) -> tuple:
        """Degree first, then coefficients from the top by discrete log (0 first)."""
        log = self.ring.ctx.log
        return (len(self.c), tuple(log[v] + 1 for v in reversed(self.c)))

    def format(self, compact: bool = False) -> str:
        return format_poly(self.ring.ctx, self.c, compact=compact)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"OrePoly({self.format()!r} over {self.ring!r})"


# -- arithmetic -----------------------------------------------------------------

def mul_x(ring: OreRing, c: Sequence[int]) -> list[int]:
    """Coefficients of x * (sum c_j x^j)."""
    if not c:
        return []
    ctx = ring.ctx
    out = [0] * (len(c) + 1)
    zero_delta = ring.delta.is_zero
    for j, v in enumerate(c):
        if v:
            out[j + 1] = ring.s(v)
            if not zero_delta:
                out[j] = ctx.add(out[j], ring.d(v))
    return out


def ore_mul(f: OrePoly, g: OrePoly) -> OrePoly:
    ring = f.ring
    ring.check(g)
    if not f.c or not g.c:
        return ring.zero
    ctx = ring.ctx
    add, mul = ctx.add, ctx.mul
    out = [0] * (len(f.c) + len(g.c) - 1)
    cur = list(g.c)  # x^i * g
    for i, fi in enumerate(f.c):
        if i:
            cur = mul_x(ring, cur)
        if fi:
            for j, v in enumerate(cur):
                if v:
                    out[j] = add(out[j], mul(fi, v))
    return OrePoly(ring, out)


def _xpow_times(ring: OreRing, k: int, g: Sequence[int]) -> list[int]:
    cur = list(g)
    for _ in range(k):
        cur = mul_x(ring, cur)
    return cur


def ore_right_divmod(f: OrePoly, g: OrePoly) -> tuple[OrePoly, OrePoly]:
    """f = quot * g + rem with deg rem < deg g."""
    ring = f.ring
    ring.check(g)
    if not g.c:
        raise DivisionByZeroPoly("right division by the zero polynomial")
    ctx = ring.ctx
    dg = g.deg
    rem = list(f.c)
    if len(rem) <= dg:
        return ring.zero, f
    quot = [0] * (len(rem) - dg)
    # cache x^k * g for every shift
    shifted = [list(g.c)]
    for _ in range(len(rem) - dg - 1):
        shifted.append(mul_x(ring, shifted[-1]))
    lead_pows = [ctx.inv(s[-1]) for s in shifted]
    while len(rem) > dg:
        top = len(rem) - 1
        k = top - dg
        a = rem[top]
        if a:
            c = ctx.mul(a, lead_pows[k])
            quot[k] = c
            for j, v in enumerate(shifted[k]):
                if v:
                    rem[j] = ctx.sub(rem[j], ctx.mul(c, v))
        rem.pop()
        while rem and rem[-1] == 0 and len(rem) > dg:
            rem.pop()
    return OrePoly(ring, quot), OrePoly(ring, rem)


def ore_left_divmod(f: OrePoly, g: OrePoly) -> tuple[OrePoly, OrePoly]:
    """f = g * quot + rem with deg rem < deg g."""
    ring = f.ring
    ring.check(g)
    if not g.c:
        raise DivisionByZeroPoly("left division by the zero polynomial")
    ctx = ring.ctx
    dg = g.deg
    b_inv = ctx.inv(g.c[-1])
    rem = f
    quot = [0] * max(0, f.deg - dg + 1)
    while rem.c and rem.deg >= dg:
        k = rem.deg - dg
        # g * (c x^k) has leading coefficient b * sigma^dg(c)
        c = ring.s_pow(ctx.mul(b_inv, rem.c[-1]), -dg)
        quot[k] = ctx.add(quot[k], c)
        term = OrePoly(ring, [0] * k + [c])
        rem = rem - ore_mul(g, term)
    return OrePoly(ring, quot), rem


def ore_rem(f: OrePoly, g: OrePoly) -> OrePoly:
    return ore_right_divmod(f, g)[1]


def right_divides(g: OrePoly, f: OrePoly) -> bool:
    return ore_right_divmod(f, g)[1].is_zero()


def left_divides(g: OrePoly, f: OrePoly) -> bool:
    return ore_left_divmod(f, g)[1].is_zero()


def rgcd(f: OrePoly, g: OrePoly) -> OrePoly:
    """Monic greatest common right divisor (right Euclidean algorithm)."""
    f.ring.check(g)
    if f.is_zero() and g.is_zero():
        raise BothZero("rgcd of two zero polynomials")
    a, b = f, g
    while not b.is_zero():
        a, b = b, ore_right_divmod(a, b)[1]
    return a.monic()


def lclm(f: OrePoly, g: OrePoly) -> OrePoly:
    """Monic least common left multiple via the extended right Euclidean algorithm."""
    ring = f.ring
    ring.check(g)
    if f.is_zero() and g.is_zero():
        raise BothZero("lclm of two zero polynomials")
    if f.is_zero() or g.is_zero():
        return ring.zero
    # invariant: u_i * f + v_i * g = r_i
    r0, r1 = f, g
    u0, u1 = ring.one, ring.zero
    while not r1.is_zero():
        q, r = ore_right_divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - ore_mul(q, u1)
    return ore_mul(u1, f).monic()


def lclm_many(polys: Iterable[OrePoly]) -> OrePoly:
    out = None
    for p in polys:
        out = p.monic() if out is None else lclm(out, p)
    if out is None:
        raise BothZero("lclm of an empty family")
    return out


def skew_eval(f: OrePoly, a: int | FieldElement) -> int:
    """sum f_i N_i(a); equals the right remainder of f by x - a."""
    ring = f.ring
    if isinstance(a, FieldElement):
        if a.ctx.key != ring.ctx.key:
            raise CtxMismatch(f"evaluation point in {a.ctx!r}, ring over {ring.ctx!r}")
        a = a.v
    ctx = ring.ctx
    total = 0
    n = 1
    for i, fi in enumerate(f.c):
        if i:
            n = ctx.add(ctx.mul(ring.s(n), a), ring.d(n))
        if fi:
            total = ctx.add(total, ctx.mul(fi, n))
    return total


def norm(ring: OreRing, i: int, alpha: FieldElement) -> FieldElement:
    if alpha.ctx.key != ring.ctx.key:
        raise CtxMismatch(f"norm argument in {alpha.ctx!r}, ring over {ring.ctx!r}")
    return FieldElement(ring.ctx, ring.norm(i, alpha.v))


# -- quotient R/Rf ------------------------------------------------------------

class QuotientRing:
    """Left module R/Rf with right-remainder representatives."""

    def __init__(self, f: OrePoly):
        if not f.is_monic():
            raise NotMonic("quotient modulus must be monic")
        self.f = f
        self.ring = f.ring
        self.n = f.deg

    def reduce(self, c: OrePoly) -> OrePoly:
        return ore_right_divmod(c, self.f)[1]

    def mul(self, a: OrePoly, c: OrePoly) -> OrePoly:
        return self.reduce(ore_mul(a, c))

    def elem(self, c: OrePoly) -> QuotientElem:
        return QuotientElem(self, self.reduce(c))

    def from_vector(self, vec: Sequence[int]) -> OrePoly:
        return OrePoly(self.ring, vec)

    def shift(self, vec: Sequence[int]) -> list[int]:
        """T_f: coefficient vector of reduce(x * v)."""
        return self.reduce(OrePoly(self.ring, mul_x(self.ring, list(vec)))).vector(self.n)


class QuotientElem:
    __slots__ = ("Q", "rep")

    def __init__(self, Q: QuotientRing, rep: OrePoly):
        self.Q = Q
        self.rep = rep

    def __eq__(self, other: object) -> bool:
        return isinstance(other, QuotientElem) and self.rep == other.rep

    def __hash__(self) -> int:
        return hash(self.rep)

    def __repr__(self) -> str:
        return f"[{self.rep}]"


def lemma41_inverses(f: OrePoly) -> tuple[OrePoly, OrePoly]:
    """Polynomials a, b with a*x = 1 and x*b = 1 + delta'(b) in R/Rf.

    Writing f = x^n - f_{n-1}x^{n-1} - ... - f_0:
      a = f_0^-1 (x^{n-1} - f_{n-1} x^{n-2} - ... - f_1)
      b = same coefficients with sigma^-1 applied.
    """
    ring = f.ring
    if not f.is_monic():
        raise NotMonic("f must be monic")
    n = f.deg
    if n < 1:
        raise ValueError("f must have degree >= 1")
    ctx = ring.ctx
    if f.c[0] == 0:
        raise ZeroConstantTerm("f_0 = 0: x is not invertible modulo f")
    # write f = x^n - sum f_i x^i, so f_i = -c_i
    fi = [ctx.neg(v) for v in f.c[:n]]
    f0_inv = ctx.inv(fi[0])
    a = [0] * n
    a[n - 1] = f0_inv
    for j in range(1, n):
        # coefficient of x^{j-1} is -f0^-1 f_j
        a[j - 1] = ctx.neg(ctx.mul(f0_inv, fi[j]))
    b = [ring.s_inv(v) for v in a]
    return OrePoly(ring, a), OrePoly(ring, b)


def delta_coeffwise(p: OrePoly) -> OrePoly:
    ring = p.ring
    return OrePoly(ring, [ring.d(v) for v in p.c])


def lemma42_normalize(f: OrePoly, c: OrePoly) -> tuple[OrePoly, OrePoly]:
    """r = a^k0 * b_k0^-1 and reduce(r * c), for the lowest term b_k0 x^k0 of c."""
    if c.is_zero():
        raise ZeroInput("c must be nonzero")
    Q = QuotientRing(f)
    c = Q.reduce(c)
    if c.is_zero():
        raise ZeroInput("c reduces to zero modulo f")
    alpha, _ = lemma41_inverses(f)
    ring = f.ring
    k0 = next(i for i, v in enumerate(c.c) if v)
    r = ring.one
    for _ in range(k0):
        r = ore_mul(r, alpha)
    r = ore_mul(r, ring.const(ring.ctx.inv(c.c[k0])))
    return r, Q.reduce(ore_mul(r, c))


# -- text ----------------------------------------------------------------------

def _split_terms(text: str) -> list[tuple[int, str, int]]:
    """Split on top-level + / - into (sign, term, offset)."""
    out = []
    s = text.strip()
    i, sign, buf_start = 0, 1, 0
    if s.startswith("-"):
        sign, i, buf_start = -1, 1, 1
    elif s.startswith("+"):
        i, buf_start = 1, 1
    while i <= len(s):
        if i == len(s) or (s[i] in "+-" and i > buf_start and s[i - 1] != "^"):
            term = s[buf_start:i]
            if not term.strip():
                raise ParseError("empty term", text, i)
            out.append((sign, term.strip(), buf_start))
            if i < len(s):
                sign = 1 if s[i] == "+" else -1
            buf_start = i + 1
        i += 1
    return out


def parse_terms(ctx: FieldCtx, text: str, variables: tuple[str, ...]) -> dict[tuple[int, ...], int]:
    """Parse a sum of monomials into {exponent tuple: coefficient}."""
    if not text.strip():
        raise ParseError("empty polynomial", text, 0)
    out: dict[tuple[int, ...], int] = {}
    for sign, term, off in _split_terms(text):
        pos = 0
        coef = 1
        exps = [0] * len(variables)
        t = term.replace(" ", "")
        m = re.match(r"(w(?:\^-?\d+)?|\d+)", t)
        seen_coef = False
        if m:
            coef = parse_value(ctx, m.group(1), off)
            pos = m.end()
            seen_coef = True
        if pos < len(t) and t[pos] == "*":
            if not seen_coef:
                raise ParseError("dangling '*'", text, off + pos)
            pos += 1
        # one or more variable factors
        while pos < len(t):
            vm = re.match(r"(x[12]?)(?:\^(\d+))?\*?", t[pos:])
            if not vm or vm.group(1) not in variables:
                raise ParseError("unexpected token", text, off + pos)
            exps[variables.index(vm.group(1))] += int(vm.group(2)) if vm.group(2) else 1
            pos += vm.end()
        if sign < 0:
            coef = ctx.neg(coef)
        key = tuple(exps)
        out[key] = ctx.add(out.get(key, 0), coef)
    return {k: v for k, v in out.items() if v}


def _parse_univariate(ctx: FieldCtx, text: str) -> list[int]:
    terms = parse_terms(ctx, text, ("x",))
    if not terms:
        return []
    n = max(k[0] for k in terms) + 1
    out = [0] * n
    for (k,), v in terms.items():
        out[k] = v
    return out


def format_poly(ctx: FieldCtx, c: Sequence[int], var: str = "x", compact: bool = False) -> str:
    parts = []
    for k in range(len(c) - 1, -1, -1):
        v = c[k]
        if not v:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        coef = ctx.fmt(v)
        if not mono:
            parts.append(coef)
        elif v == 1:
            parts.append(mono)
        else:
            parts.append(f"{coef}*{mono}")
    if not parts:
        return "0"
    return ("+" if compact else " + ").join(parts)
