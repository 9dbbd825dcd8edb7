"""Command-line interface: ``sgc <subcommand> [flags]``.

Exit codes: 0 success, 1 usage error, 2 computation error, 3 the result
disagrees with the published baseline.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Sequence

from . import bch, search
from .bivar import BiOreRing, PseudoLinearMap, companion, lexdeg, make_moduli
from .codes import (
    cofactor_parity,
    divisor_targets,
    dual_transform,
    format_targets,
    sgc2d_from_generator,
    sgc_from_generator,
)
from .errors import BudgetExceeded, SgcError
from .field import FieldCtx, ff_make, ff_make_q, parse_value
from .linear import DEFAULT_BUDGET, dot, min_distance
from .ore import OrePoly, OreRing, lclm, ore_left_divmod, ore_mul, ore_right_divmod, ore_ring, rgcd, skew_eval

EXIT_OK, EXIT_USAGE, EXIT_COMPUTE, EXIT_DIFF = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


# -- shared flags -----------------------------------------------------------------

def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("field and ring")
    g.add_argument("--q", type=int, help="field size (prime power)")
    g.add_argument("--p", type=int, help="characteristic (with --m)")
    g.add_argument("--m", type=int, help="extension degree (with --p)")
    g.add_argument("--modulus", help="defining polynomial coefficients c0,c1,...,1 (default: Conway)")
    g.add_argument("--theta", type=int, default=1, help="Frobenius exponent t, sigma(a) = a^(p^t); 0 is commutative")
    g.add_argument("--gamma", default="0", help="inner derivation delta = gamma*(sigma - id); needs t != 0")
    o = p.add_argument_group("run control")
    o.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="enumeration budget (default 10^7)")
    o.add_argument("--workers", type=int, default=None, help="worker processes (default: available CPUs)")
    o.add_argument("--out", help="write output to this path instead of stdout")
    o.add_argument("--format", default="text", choices=("text", "tsv", "md", "jsonl"), help="output format")
    o.add_argument("--seed", type=int, default=0, help="seed for randomized harnesses")
    return p


def _field(args) -> FieldCtx:
    modulus = None
    if args.modulus:
        try:
            modulus = [int(c) for c in args.modulus.split(",")]
        except ValueError:
            raise UsageError(f"bad --modulus {args.modulus!r}")
    if args.q is not None:
        if args.p is not None or args.m is not None:
            raise UsageError("give either --q or --p/--m, not both")
        return ff_make_q(args.q, modulus)
    if args.p is not None:
        return ff_make(args.p, args.m or 1, modulus)
    raise UsageError("a field is required: --q Q or --p P --m M")


def _ring(args, ctx: FieldCtx | None = None) -> OreRing:
    ctx = ctx or _field(args)
    gamma = parse_value(ctx, args.gamma)
    t = args.theta % ctx.m
    if gamma and t == 0:
        raise UsageError("--gamma != 0 needs a nontrivial automorphism (--theta not 0 mod m); "
                         "with sigma = id the inner derivation gamma*(sigma - id) vanishes")
    return ore_ring(ctx, t, gamma)


def _ints(text: str | None, name: str) -> tuple[int, ...]:
    if text is None or text == "":
        return ()
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError:
        raise UsageError(f"bad {name} {text!r}: expected comma-separated integers")


def _workers(args) -> int:
    return args.workers if args.workers else search.default_workers()


class _Out:
    def __init__(self, path: str | None):
        self.path = path
        self.parts: list[str] = []

    def write(self, text: str) -> None:
        self.parts.append(text)

    def line(self, text: str = "") -> None:
        self.parts.append(text + "\n")

    def flush(self) -> None:
        data = "".join(self.parts)
        if self.path:
            with open(self.path, "w", encoding="utf-8") as fh:
                fh.write(data)
        else:
            sys.stdout.write(data)


def _poly(ring: OreRing, text: str) -> OrePoly:
    return ring.parse(text)


def _fmt(f: OrePoly) -> str:
    return f.format(compact=False)


# -- subcommands ------------------------------------------------------------------

def cmd_field(args, out: _Out) -> int:
    ctx = _field(args)
    ring = _ring(args, ctx)
    out.line(f"field: {ctx!r}")
    out.line(f"order: {ctx.q}, characteristic {ctx.p}, degree {ctx.m}")
    out.line(f"modulus (c0..cm): {','.join(map(str, ctx.modulus))}")
    out.line(f"primitive element: {ctx.fmt(ctx.w.v)}")
    a = parse_value(ctx, args.element) if args.element else ctx.w.v
    orbit, v = [], a
    while True:
        orbit.append(ctx.fmt(v))
        v = ring.s(v) if ring.t else ctx.frob(v, 1)
        if v == a:
            break
    label = f"sigma = theta^{ring.t}" if ring.t else "theta"
    out.line(f"{label} orbit of {ctx.fmt(a)}: {' -> '.join(orbit)}")
    if ring.gamma:
        out.line(f"delta = {ctx.fmt(ring.gamma)}*(sigma - id); delta({ctx.fmt(a)}) = {ctx.fmt(ring.d(a))}")
    return EXIT_OK


def cmd_mul(args, out: _Out) -> int:
    ring = _ring(args)
    out.line(_fmt(ore_mul(_poly(ring, args.a), _poly(ring, args.b))))
    return EXIT_OK


def cmd_divmod(args, out: _Out) -> int:
    ring = _ring(args)
    f, g = _poly(ring, args.a), _poly(ring, args.b)
    if args.side == "right":
        quo, rem = ore_right_divmod(f, g)
        out.line("f = quot * g + rem")
    else:
        quo, rem = ore_left_divmod(f, g)
        out.line("f = g * quot + rem")
    out.line(f"quot = {_fmt(quo)}")
    out.line(f"rem = {_fmt(rem)}")
    return EXIT_OK


def cmd_gcd(args, out: _Out) -> int:
    ring = _ring(args)
    out.line(_fmt(rgcd(_poly(ring, args.a), _poly(ring, args.b))))
    return EXIT_OK


def cmd_lclm(args, out: _Out) -> int:
    ring = _ring(args)
    out.line(_fmt(lclm(_poly(ring, args.a), _poly(ring, args.b))))
    return EXIT_OK


def cmd_eval(args, out: _Out) -> int:
    ring = _ring(args)
    f = _poly(ring, args.f)
    a = parse_value(ring.ctx, args.a)
    out.line(ring.ctx.fmt(skew_eval(f, a)))
    return EXIT_OK


def cmd_norm(args, out: _Out) -> int:
    ring = _ring(args)
    if args.i < 0:
        raise UsageError("norm index must be >= 0")
    a = parse_value(ring.ctx, args.a)
    out.line(ring.ctx.fmt(ring.norm(args.i, a)))
    return EXIT_OK


def _code_record(ring: OreRing, code, d, mds, targets) -> dict:
    return {
        "q": ring.ctx.q,
        "t": ring.t,
        "gamma": ring.ctx.fmt(ring.gamma),
        "n": code.n,
        "k": code.k,
        "d": d,
        "g": code.g.format(compact=True),
        "a_set": format_targets(ring, targets),
        "mds": mds,
    }


def cmd_code(args, out: _Out) -> int:
    ring = _ring(args)
    g = _poly(ring, args.g)
    code = sgc_from_generator(ring, g, args.n)
    mds = code.is_mds()
    try:
        d = code.min_distance(args.budget)
    except BudgetExceeded:
        if not mds:
            raise
        d = code.n - code.k + 1  # settled by the MDS criterion
    targets = divisor_targets(ring, code.g, args.n) if code.g.deg <= args.n else set()
    rec = _code_record(ring, code, d, mds, targets)
    if args.format == "jsonl":
        out.line(json.dumps(rec, ensure_ascii=False))
        return EXIT_OK
    if args.format == "tsv":
        cols = ("q", "t", "gamma", "n", "k", "d", "g", "a_set")
        out.line("\t".join(cols))
        out.line("\t".join(str(rec[c]) for c in cols))
        return EXIT_OK
    out.line(f"ring: {ring!r}")
    out.line(f"g = {_fmt(code.g)}")
    out.line("G =")
    for row in code.G.rows:
        out.line("  [" + ", ".join(ring.ctx.fmt(v) for v in row) + "]")
    out.line(f"[{code.n},{code.k},{d}]")
    out.line(f"MDS={'yes' if mds else 'no'}")
    out.line(f"a={format_targets(ring, targets)}")
    return EXIT_OK


def cmd_dual(args, out: _Out) -> int:
    ring = _ring(args)
    ctx = ring.ctx
    f, g = _poly(ring, args.f), _poly(ring, args.g)
    pc = cofactor_parity(ring, f, g)
    code = sgc_from_generator(ring, g, f.deg)
    out.line(f"f = g * h', h' = {_fmt(pc.h_left)}")
    out.line("H (rows T_f^j(h')) =")
    for row in pc.H:
        out.line("  [" + ", ".join(ctx.fmt(v) for v in row) + "]")
    out.line("parity-check rows (independent columns of H) =")
    for row in pc.parity:
        out.line("  [" + ", ".join(ctx.fmt(v) for v in row) + "]")
    ortho = all(dot(ctx, r, p) == 0 for r in code.G.rows for p in pc.parity)
    out.line(f"G * P^t = 0: {'yes' if ortho else 'no'}")
    T = PseudoLinearMap.build(companion(f), ring.sigma, ring.delta)
    D = dual_transform(T)
    out.line("dual transform matrix (sigma^-1 applied to M^t) =")
    for row in D.M:
        out.line("  [" + ", ".join(ctx.fmt(v) for v in row) + "]")
    gam = ctx.fmt(D.delta.gamma) if not D.delta.is_zero else "0"
    out.line(f"dual automorphism: theta^{D.sigma.t % ctx.m}, dual derivation gamma = {gam}")
    return EXIT_OK if ortho else EXIT_COMPUTE


def _univariate(ring: BiOreRing, text: str, var: str) -> list[int]:
    f = ring.parse(text)
    other = 1 if var == "x1" else 0
    if any(k[other] for k in f.terms):
        raise UsageError(f"modulus {text!r} must involve only {var}")
    idx = 0 if var == "x1" else 1
    deg = max(k[idx] for k in f.terms)
    c = [0] * (deg + 1)
    for k, v in f.terms.items():
        c[k[idx]] = v
    return c


def cmd_code2d(args, out: _Out) -> int:
    ctx = _field(args)
    ring = BiOreRing(ctx, args.theta1, args.theta2)
    mod = make_moduli(ring, _univariate(ring, args.f1, "x1"), _univariate(ring, args.f2, "x2"))
    g = ring.parse(args.g)
    code = sgc2d_from_generator(mod, g)
    out.line(f"lexdeg(g) = {lexdeg(g)}, s = {mod.s}, l = {mod.l}")
    out.line("generator arrays (row i = x1-degree, column j = x2-degree):")
    for a in code.arrays:
        out.line("  " + a.format())
    out.line(f"rank = {code.params.k}, expected (s-k1)(l-k2) = {code.expected_k}"
             f" ({'matches' if code.rank_matches else 'rank deficient'})")
    out.line(f"closed under x1: {'yes' if code.closure.cols_closed else 'no'}")
    out.line(f"closed under x2: {'yes' if code.closure.rows_closed else 'no'}")
    try:
        d = min_distance(code.G, args.budget)
        out.line(f"[{code.params.n},{code.params.k},{d}]")
    except BudgetExceeded:
        out.line(f"[{code.params.n},{code.params.k},?] (distance beyond budget)")
    return EXIT_OK


def _beta(args, ring: OreRing):
    e = args.e
    ctx = ring.ctx
    big = ff_make(ctx.p, ctx.m * e) if e > 1 else ctx
    return big(parse_value(big, args.beta))


def cmd_bch(args, out: _Out) -> int:
    ring = _ring(args)
    if args.random:
        rng = random.Random(args.seed)
        stats = bch.soundness_sweep(ring, args.random, rng, n_max=args.n_max, norm_reading=args.norm_reading)
        out.line(f"trials={stats.trials} accepted={stats.accepted} checked={stats.nontrivial} "
                 f"unresolved={stats.unresolved} violations={len(stats.violations)}")
        for v in stats.violations:
            out.line(f"  violation: {v}")
        return EXIT_OK if not stats.violations else EXIT_COMPUTE
    if args.g is None or args.n is None or args.beta is None:
        raise UsageError("bch needs --g, --n and --beta (or --random N)")
    code = sgc_from_generator(ring, _poly(ring, args.g), args.n)
    mvec = _ints(args.mvec, "--mvec")
    svec = _ints(args.svec, "--svec")
    w = bch.BchWitness(_beta(args, ring), args.l, mvec, args.delta, svec)
    kw = dict(mode=args.mode, norm_reading=args.norm_reading, root_reading=args.root_reading)
    rep = bch.verify_single(code, w, **kw) if len(mvec) == 1 and not svec else bch.verify_multi(code, w, **kw)
    if args.format == "jsonl":
        for h in rep.hypothesis_log:
            out.line(json.dumps(h.as_dict(), ensure_ascii=False))
        out.line(json.dumps({"mode": rep.mode, "certified_bound": rep.certified_bound}))
    else:
        out.line("hypothesis\tindex\tvalue\tresult")
        for h in rep.hypothesis_log:
            idx = ",".join(map(str, h.index))
            out.line(f"{h.hyp}\t{idx}\t{h.value}\t{'pass' if h.passed else 'fail'}")
        bound = rep.certified_bound if rep.accepted else "none"
        out.line(f"mode={rep.mode} certified_bound={bound}")
    if args.check_distance and rep.accepted:
        d = code.min_distance(args.budget)
        out.line(f"min_distance={d}")
        if d < rep.certified_bound:
            return EXIT_COMPUTE
    return EXIT_OK


def cmd_construct(args, out: _Out) -> int:
    ring = _ring(args)
    rep = bch.construct_mds(
        ring, args.n, _beta(args, ring), args.l, _ints(args.cvec, "--cvec"), args.delta,
        _ints(args.svec, "--svec"), args.range,
    )
    out.line(f"exponents: {','.join(map(str, rep.exponents))}")
    out.line(f"g over GF({rep.g_ext.ring.ctx.q}) = {_fmt(rep.g_ext)}")
    out.line(f"status: {rep.status}")
    if rep.code is not None:
        c = rep.code
        out.line(f"g = {_fmt(c.g)}")
        out.line(f"[{c.n},{c.k},{c.n - c.k + 1 if rep.mds else '?'}] MDS={'yes' if rep.mds else 'no'}")
    return EXIT_OK if rep.status == "ok" else EXIT_COMPUTE


def cmd_table(args, out: _Out) -> int:
    ring = _ring(args)
    q = ring.ctx.q
    fmt = "tsv" if args.format in ("text", "tsv") else args.format
    mode = args.mode or ("witnesses" if q == 11 else "enumerate")
    if mode == "witnesses":
        rows = search.REFERENCE_ROWS.get(q)
        if rows is None:
            raise UsageError(f"no published witness rows for q={q}")
        checks = search.verify_witness_rows(rows, ring.t, ring.gamma, _workers(args))
        if fmt == "jsonl":
            for c in checks:
                out.line(json.dumps({"q": q, "n": c.ref.n, "k": c.ref.k, "d": c.ref.d, "g": c.g,
                                     "mds": c.mds, "computed_d": c.d, "a_set": c.targets, "ok": c.ok},
                                    ensure_ascii=False))
        else:
            out.write(search.write_witness_checks(checks, fmt))
        bad = [c for c in checks if not c.ok]
        for c in bad:
            print(f"diff: [{c.ref.n},{c.ref.k},{c.ref.d}] g={c.g}", file=sys.stderr)
        return EXIT_DIFF if bad else EXIT_OK
    n_min = args.n_min
    n_max = args.n_max if args.n_max is not None else q - 1
    rows = search.mds_table(q, ring.t, ring.gamma, range(n_min, n_max + 1), _workers(args), args.budget)
    if fmt == "jsonl":
        out.write(search.table_jsonl(rows, ring.t, ring.gamma))
    else:
        out.write(search.write_table(rows, fmt, ring.t, ring.gamma))
    if q == 8 and ring.gamma == 0:
        diffs = search.diff_q8_table(rows, ring.t)
        if not set(range(n_min, n_max + 1)) >= set(range(2, 8)):
            # partial range: only judge the rows that were computed
            diffs = [d for d in diffs if "row not computed" not in d]
        if diffs:
            for d in diffs:
                print(f"diff: {d}", file=sys.stderr)
            return EXIT_DIFF
    return EXIT_OK


def cmd_examples(args, out: _Out) -> int:
    ids = list(search.EXAMPLES) if args.id == "all" else [args.id]
    status = EXIT_OK
    for eid in ids:
        if eid not in search.EXAMPLES:
            raise UsageError(f"unknown example id {eid!r}; choose from {', '.join(search.EXAMPLES)} or all")
        rep = search.reproduce_example(eid, args.budget)
        if args.format == "jsonl":
            out.line(json.dumps({
                "id": eid,
                "q": rep.field.q,
                "f": rep.f.format(compact=True),
                "theta_count": rep.skew.count,
                "theta_codes": [[g.format(compact=True), list(p)] for g, p in rep.skew.codes],
                "id_count": rep.commutative.count,
                "id_codes": [[g.format(compact=True), list(p)] for g, p in rep.commutative.codes],
                "diffs": rep.diffs,
            }, ensure_ascii=False))
        else:
            out.write(search.format_example(rep))
        if not rep.matches:
            status = EXIT_DIFF
    return status


# -- parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="sgc", description="Skew generalized cyclic codes over finite fields.")
    sub = parser.add_subparsers(dest="command", metavar="command", parser_class=_Parser)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        p.set_defaults(func=func)
        return p

    p = add("field", cmd_field, "print a field context, its primitive element and a Frobenius orbit")
    p.add_argument("--element", help="element whose orbit is printed (default w)")

    for name, func, text in (
        ("mul", cmd_mul, "skew product a*b"),
        ("gcd", cmd_gcd, "greatest common right divisor"),
        ("lclm", cmd_lclm, "least common left multiple"),
    ):
        p = add(name, func, text)
        p.add_argument("a", help="first polynomial, e.g. 'x^2+w^3*x+1'")
        p.add_argument("b", help="second polynomial")

    p = add("divmod", cmd_divmod, "right (f = q*g + r) or left (f = g*q + r) division")
    p.add_argument("a", help="dividend f")
    p.add_argument("b", help="divisor g")
    p.add_argument("--side", choices=("right", "left"), default="right", help="division side (default right)")

    p = add("eval", cmd_eval, "skew evaluation sum f_i N_i(a)")
    p.add_argument("f", help="polynomial")
    p.add_argument("a", help="field element")

    p = add("norm", cmd_norm, "skew norm N_i(a)")
    p.add_argument("i", type=int, help="norm index")
    p.add_argument("a", help="field element")

    p = add("code", cmd_code, "build the code generated by g in length n")
    p.add_argument("--g", required=True, help="generator polynomial")
    p.add_argument("--n", type=int, required=True, help="code length")

    p = add("dual", cmd_dual, "parity checks from a two-sided factorization and the dual transform")
    p.add_argument("--f", required=True, help="modulus f (monic, nonzero constant term)")
    p.add_argument("--g", required=True, help="two-sided divisor g of f")

    p = add("code2d", cmd_code2d, "2D code from separable moduli f1(x1), f2(x2)")
    p.add_argument("--f1", required=True, help="modulus in x1, e.g. 'x1^2-1'")
    p.add_argument("--f2", required=True, help="modulus in x2")
    p.add_argument("--g", required=True, help="bivariate generator, e.g. 'x1*x2+x1+x2+1'")
    p.add_argument("--theta1", type=int, default=0, help="Frobenius exponent of sigma1")
    p.add_argument("--theta2", type=int, default=0, help="Frobenius exponent of sigma2")

    p = add("bch", cmd_bch, "verify a BCH-type witness (or run a randomized soundness sweep)")
    p.add_argument("--g", help="generator polynomial")
    p.add_argument("--n", type=int, help="code length")
    p.add_argument("--beta", help="beta in GF(q^e), e.g. 'w^5'")
    p.add_argument("--e", type=int, default=1, help="extension degree of beta's field")
    p.add_argument("--l", type=int, default=0, help="offset l")
    p.add_argument("--mvec", default="1", help="m or m1,m2,... (comma-separated)")
    p.add_argument("--svec", default="", help="ranges s2,...,sr")
    p.add_argument("--delta", type=int, default=2, help="designed bound Delta")
    p.add_argument("--mode", choices=(bch.STRICT, bch.ROOTS_ONLY), default=bch.STRICT,
                   help="strict checks every hypothesis, roots-only checks the root conditions alone")
    p.add_argument("--norm-reading", choices=("skew", "classical"), default="skew",
                   help="reading of the unsuperscripted norms in H1/H2")
    p.add_argument("--root-reading", choices=("norm", "literal"), default="norm",
                   help="root point N_L(beta) (norm) or N_L(beta)^L (literal)")
    p.add_argument("--check-distance", action="store_true", help="also compute the exact minimum distance")
    p.add_argument("--random", type=int, default=0, help="run N random witnesses (uses --seed)")
    p.add_argument("--n-max", type=int, default=12, help="largest length in the random sweep")

    p = add("construct-mds", cmd_construct, "lclm-based MDS construction")
    p.add_argument("--n", type=int, required=True, help="code length")
    p.add_argument("--beta", required=True, help="beta in GF(q^e)")
    p.add_argument("--e", type=int, default=1, help="extension degree of beta's field")
    p.add_argument("--l", type=int, default=0, help="offset l")
    p.add_argument("--cvec", default="1", help="c1,...,cr")
    p.add_argument("--svec", default="", help="ranges s2,...,sr")
    p.add_argument("--delta", type=int, required=True, help="Delta")
    p.add_argument("--range", choices=("theorem", "corollary"), default="theorem",
                   help="i1 runs over 0..Delta-2 (theorem) or 0..Delta (corollary)")

    p = add("table", cmd_table, "exhaustive MDS table, or verification of published witness rows")
    p.add_argument("--mode", choices=("enumerate", "witnesses"), default=None,
                   help="enumerate all generators, or check the published witness rows "
                        "(default: witnesses for q=11, enumerate otherwise)")
    p.add_argument("--n-min", type=int, default=2, help="smallest length (default 2)")
    p.add_argument("--n-max", type=int, default=None, help="largest length (default q-1)")

    p = add("examples", cmd_examples, "reproduce the worked examples")
    p.add_argument("--id", required=True, help="5.1 ... 5.5 or all")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "func", None):
            parser.print_usage(sys.stderr)
            print("sgc: error: a subcommand is required", file=sys.stderr)
            return EXIT_USAGE
        out = _Out(args.out)
        code = args.func(args, out)
        out.flush()
        return code
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except (SgcError, ArithmeticError, ValueError, KeyError, OSError) as exc:
        print(f"sgc: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
