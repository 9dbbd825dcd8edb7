"""BCH-type lower bounds for skew generalized cyclic codes.

The certifiers check root conditions on the generator at skew-norm points
of an element beta of an extension field, plus (in strict mode) the three
norm hypotheses that the bounds are stated under.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .codes import SgcCode, sgc_from_generator
from .errors import BadParameters, ExtensionTooSmall, IndexOutOfRange, MvecAllZero
from .field import FieldElement, embedding
from .ore import OrePoly, OreRing, lclm_many, skew_eval

STRICT = "strict"
ROOTS_ONLY = "roots-only"


@dataclass
class BchWitness:
    """beta lives in GF(q^e); mvec has one entry per grid direction.

    svec holds the ranges s_2..s_r of the extra directions (empty for the
    single-direction bound).
    """

    beta: FieldElement
    l: int
    mvec: tuple[int, ...]
    Delta: int
    svec: tuple[int, ...] = ()

    def __post_init__(self):
        self.mvec = tuple(self.mvec)
        self.svec = tuple(self.svec)

    @property
    def e(self) -> int:
        return self.beta.ctx.m

    @property
    def target(self) -> int:
        return self.Delta + sum(self.svec)


@dataclass
class HypothesisResult:
    hyp: str
    index: tuple[int, ...]
    passed: bool
    value: str

    def as_dict(self) -> dict:
        return {"hypothesis": self.hyp, "index": list(self.index), "pass": self.passed, "value": self.value}


@dataclass
class BchReport:
    mode: str
    certified_bound: int | None
    hypothesis_log: list[HypothesisResult] = field(default_factory=list)

    @property
    def accepted(self) -> bool:
        return self.certified_bound is not None

    def failures(self) -> list[HypothesisResult]:
        return [h for h in self.hypothesis_log if not h.passed]


def _extended_ring(code: SgcCode, w: BchWitness) -> tuple[OreRing, OrePoly]:
    base = code.ring.ctx
    dst = w.beta.ctx
    if dst.p != base.p or dst.m % base.m:
        raise ExtensionTooSmall(f"beta lies in {dst!r}, which does not contain {base!r}")
    ring_e = code.ring.extend(dst.m // base.m)
    if ring_e.ctx.key != dst.key:
        raise ExtensionTooSmall(f"beta's field {dst!r} is not the registry extension")
    return ring_e, code.ring.embed(code.g, ring_e)


def _check_indices(w: BchWitness) -> None:
    if w.Delta < 1:
        raise IndexOutOfRange(f"Delta must be >= 1, got {w.Delta}")
    if w.l < 0 or any(m < 0 for m in w.mvec) or any(s < 0 for s in w.svec):
        raise IndexOutOfRange("l, m and s must be non-negative")
    if not w.mvec:
        raise IndexOutOfRange("mvec is empty")


def _root_point(R: OreRing, beta: int, L: int, reading: str) -> int:
    b = R.norm(L, beta)
    if reading == "literal":
        return R.ctx.pow(b, L)
    return b


def _certify(
    code: SgcCode,
    w: BchWitness,
    grid: list[tuple[int, ...]],
    pairs: list[tuple[int, int]],
    mode: str,
    norm_reading: str,
    root_reading: str,
    bound: int,
) -> BchReport:
    """Run (R) on the grid and, in strict mode, the setting check P
    (g_0 != 0, so g right-divides some f with f_0 != 0), H1 for
    i = 1..n-1 and H2/H3 on the given (i, L) pairs."""
    if mode not in (STRICT, ROOTS_ONLY):
        raise ValueError(f"unknown mode {mode!r}")
    if norm_reading not in ("classical", "skew"):
        raise ValueError(f"unknown norm reading {norm_reading!r}")
    R, g = _extended_ring(code, w)
    ctx = R.ctx
    beta = w.beta.v
    fmt = ctx.fmt
    log: list[HypothesisResult] = []

    for idx in grid:
        L = w.l + sum(m * i for m, i in zip(w.mvec, idx))
        val = skew_eval(g, _root_point(R, beta, L, root_reading))
        log.append(HypothesisResult("R", idx, val == 0, fmt(val)))

    if mode == STRICT:
        g0 = g.coeff(0)
        log.append(HypothesisResult("P", (), g0 != 0, fmt(g0)))
        plain = R.classical_norm if norm_reading == "classical" else R.norm
        for j, m in enumerate(w.mvec, start=1):
            bm = ctx.pow(beta, m)
            inner = {i: plain(i, bm) for i in range(1, code.n)}
            for i, Ni in inner.items():
                log.append(HypothesisResult(f"H1.{j}", (i,), Ni != 1, fmt(Ni)))
            for i, L in pairs:
                if L < 1:
                    log.append(HypothesisResult(f"H2.{j}", (i, L), False, "negative index"))
                    continue
                v = plain(L - 1, inner[i])
                log.append(HypothesisResult(f"H2.{j}", (i, L), v == 1, fmt(v)))
        for i, L in pairs:
            lhs = R.norm(i, R.norm(L, beta))
            rhs = R.norm(L, R.norm(i, beta))
            log.append(HypothesisResult("H3", (i, L), lhs == rhs, f"{fmt(lhs)} vs {fmt(rhs)}"))
    ok = all(h.passed for h in log)
    return BchReport(mode, bound if ok else None, log)


def verify_single(
    code: SgcCode,
    w: BchWitness,
    mode: str = STRICT,
    norm_reading: str = "skew",
    root_reading: str = "norm",
) -> BchReport:
    """Certify d >= Delta from roots at N_{l+mi}(beta), i = 0..Delta-2.

    In strict mode P checks g_0 != 0 and H2/H3 are checked at
    L = l + m*i for the same i = 1..n-1 that indexes the inner norm. The unsuperscripted norms of H1
    and H2 are skew norms by default; ``norm_reading="classical"`` reads
    them as plain Frobenius norms, which is not sound when delta != 0.
    """
    _check_indices(w)
    if len(w.mvec) != 1:
        raise IndexOutOfRange("verify_single takes exactly one m")
    if w.Delta == 1:
        return BchReport(mode, 1, [])
    m = w.mvec[0]
    if m == 0:
        raise MvecAllZero("m must be nonzero when Delta >= 2")
    grid = [(i,) for i in range(w.Delta - 1)]
    pairs = [(i, w.l + m * i) for i in range(1, code.n)]
    return _certify(code, w, grid, pairs, mode, norm_reading, root_reading, w.Delta)


def verify_multi(
    code: SgcCode,
    w: BchWitness,
    mode: str = STRICT,
    norm_reading: str = "skew",
    root_reading: str = "norm",
) -> BchReport:
    """Certify d >= Delta + sum(s_k) from roots on the grid
    i1 = 0..Delta-2, i_k = 0..s_k.

    Directions with s_k = 0 add nothing to the grid or the bound and are
    dropped; if only the first direction remains this is verify_single.
    """
    _check_indices(w)
    if len(w.svec) != len(w.mvec) - 1:
        raise IndexOutOfRange(f"need {len(w.mvec) - 1} ranges, got {len(w.svec)}")
    if w.Delta >= 2 and not any(w.mvec):
        raise MvecAllZero("(m_1, ..., m_r) must not be all zero")
    keep = [0] + [k + 1 for k, s in enumerate(w.svec) if s > 0]
    reduced = BchWitness(
        w.beta, w.l, tuple(w.mvec[k] for k in keep), w.Delta, tuple(w.svec[k - 1] for k in keep[1:])
    )
    if not reduced.svec:
        return verify_single(code, reduced, mode, norm_reading, root_reading)
    if w.Delta < 2:
        # the i1 range 0..Delta-2 is empty, so there would be no root conditions
        raise IndexOutOfRange("Delta >= 2 required when some s_k > 0")
    ranges = [range(w.Delta - 1)] + [range(s + 1) for s in reduced.svec]
    grid = list(itertools.product(*ranges))
    Ls = sorted({reduced.l + sum(m * i for m, i in zip(reduced.mvec, idx)) for idx in grid})
    pairs = [(i, L) for i in range(1, code.n) for L in Ls]
    return _certify(code, reduced, grid, pairs, mode, norm_reading, root_reading, reduced.target)


# -- corollary constructor ------------------------------------------------------

@dataclass
class ConstructReport:
    g_ext: OrePoly
    g: OrePoly | None
    code: SgcCode | None
    mds: bool | None
    status: str
    exponents: list[int]


def construct_mds(
    ring: OreRing,
    n: int,
    beta: FieldElement,
    l: int,
    cvec: Sequence[int],
    Delta: int,
    svec: Sequence[int] = (),
    range_mode: str = "theorem",
) -> ConstructReport:
    """g = lclm{x - beta^(l + sum i_k c_k)} over GF(q^e).

    ``range_mode`` picks i_1 = 0..Delta-2 ("theorem") or 0..Delta
    ("corollary").
    """
    cvec = tuple(cvec)
    svec = tuple(svec)
    if ring.ctx.q < n + 1:
        raise BadParameters(f"need q >= n+1, got q={ring.ctx.q}, n={n}")
    if not cvec or not any(cvec):
        raise BadParameters("c-vector must not be all zero")
    if Delta < 1 or l < 0 or any(c < 0 for c in cvec) or any(s < 0 for s in svec):
        raise BadParameters("Delta >= 1 and non-negative l, c, s required")
    if len(svec) != len(cvec) - 1:
        raise BadParameters(f"need {len(cvec) - 1} ranges, got {len(svec)}")
    top = Delta - 2 if range_mode == "theorem" else Delta
    dst = beta.ctx
    base = ring.ctx
    if dst.p != base.p or dst.m % base.m:
        raise ExtensionTooSmall(f"beta lies in {dst!r}, which does not contain {base!r}")
    R = ring.extend(dst.m // base.m)
    ranges = [range(top + 1)] + [range(s + 1) for s in svec]
    exps = sorted({l + sum(c * i for c, i in zip(cvec, idx)) for idx in itertools.product(*ranges)})
    if not exps:
        raise BadParameters("empty root set")
    roots = sorted({dst.pow(beta.v, k) for k in exps})
    g_ext = lclm_many(R.linear(r) for r in roots)
    emb = embedding(base, dst)
    back = [emb.pullback(c) for c in g_ext.c]
    if any(b is None for b in back):
        return ConstructReport(g_ext, None, None, None, "CoefficientsOutsideBaseField", exps)
    g = OrePoly(ring, back)
    if g.deg > n - 1:
        return ConstructReport(g_ext, g, None, None, "DegreeTooLarge", exps)
    code = sgc_from_generator(ring, g, n)
    return ConstructReport(g_ext, g, code, code.is_mds(), "ok", exps)


# -- randomized soundness sweep -------------------------------------------------

@dataclass
class SweepStats:
    trials: int = 0
    accepted: int = 0
    nontrivial: int = 0  # accepted with bound >= 2 and checked against d
    unresolved: int = 0  # minimum distance beyond budget
    violations: list[str] = field(default_factory=list)


def random_instance(
    ring: OreRing, rng, n_max: int = 12, root_reading: str = "norm"
) -> tuple[SgcCode, BchWitness]:
    """A code whose generator has the witness's root points as right roots
    (when the lclm fits), else a random monic generator."""
    ctx = ring.ctx
    n = rng.randint(2, n_max)
    beta = rng.choice(ctx.nonzero())
    l = rng.randint(0, n)
    m = rng.randint(1, n)
    Delta = rng.randint(2, n)
    g = None
    if rng.random() < 0.8:
        roots = sorted({_root_point(ring, beta, l + m * i, root_reading) for i in range(Delta - 1)})
        cand = lclm_many(ring.linear(r) for r in roots)
        if cand.deg <= n - 1:
            g = cand
    if g is None:
        d = rng.randint(0, n - 1)
        g = OrePoly(ring, [rng.randrange(ctx.q) for _ in range(d)] + [1])
    return sgc_from_generator(ring, g, n), BchWitness(ctx(beta), l, (m,), Delta)


def soundness_sweep(ring: OreRing, trials: int, rng, n_max: int = 12, budget: int = 10**6, **kw) -> SweepStats:
    """Strict-mode certificates against exact minimum distance."""
    from .errors import BudgetExceeded

    stats = SweepStats()
    for _ in range(trials):
        code, w = random_instance(ring, rng, n_max, kw.get("root_reading", "norm"))
        rep = verify_single(code, w, STRICT, **kw)
        stats.trials += 1
        if not rep.accepted:
            continue
        stats.accepted += 1
        if rep.certified_bound < 2:
            continue
        try:
            d = code.min_distance(budget)
        except BudgetExceeded as exc:
            if exc.upper < rep.certified_bound:
                stats.violations.append(f"{code.g} n={code.n}: weight {exc.upper} < {rep.certified_bound}")
            else:
                stats.unresolved += 1
            continue
        stats.nontrivial += 1
        if d < rep.certified_bound:
            stats.violations.append(f"{code.g} n={code.n}: d={d} < certified {rep.certified_bound}")
    return stats
