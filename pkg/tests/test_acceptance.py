"""Acceptance suite: one PASS/FAIL line per criterion AC-1..AC-10.

The lines are printed in the "acceptance criteria" section of the pytest
summary. A criterion that is not attainable (the computed mathematics
disagrees with the published claim) is still checked in full and reported
as FAIL; its test is then marked xfail with a pointer to the decision
ledger, so that the rest of the suite stays usable as a regression gate.
An xfail is only raised after the check has run and actually failed.
"""

import random
import time

import pytest

import acceptance_checks as ac
from acceptance_log import record
from oracles import span
from sgc.bivar import (
    Array2D,
    BiOreRing,
    PseudoLinearMap,
    apply_cols,
    apply_rows,
    bi_mul,
    gamma_f,
    gamma_f_inv,
    make_moduli,
    shift_closure_check,
    x1_transform,
    x2_transform,
)
from sgc.cli import main
from sgc.codes import (
    cofactor_parity,
    divisor_targets,
    dual_transform,
    invariant_closure,
    is_invariant,
    sgc2d_from_generator,
    sgc_from_generator,
)
from sgc.field import FrobeniusMap, InnerDerivation, ff_make
from sgc.linear import GenMatrix, dot, dual, min_distance
from sgc.ore import OreRing, ore_mul, right_divides
from sgc.reference import Q11_ROWS
from sgc.search import diff_q8_table, mds_table, reproduce_example, verify_witness_rows

LEDGER = "see the decision ledger (notes/decisions.md)"
T0 = time.monotonic()
_cli_out = {}


def _finish(ac_id, passed, detail, unattainable=None):
    record(ac_id, passed, detail)
    if passed:
        return
    if unattainable:
        pytest.xfail(f"{ac_id} not attainable: {unattainable}; {LEDGER}")
    pytest.fail(f"{ac_id}: {detail}")


def _run_cli(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out


def _map(fn, jobs):
    return [fn(j) for j in jobs]


# -- AC-1 -------------------------------------------------------------------------

def test_ac1_q8_table(capsys):
    code, out = _run_cli(capsys, "table", "--q", "8", "--theta", "1", "--workers", "1")
    _cli_out["ac1"] = out
    rows = mds_table(8, 1, 0, range(2, 8), workers=1)
    diffs = diff_q8_table(rows, 1)
    detail = f"exact set equality / membership over n=2..7; {len(diffs)} row disagreements, exit {code}"
    if diffs:
        detail += " (" + "; ".join(diffs[:4]) + ("; ..." if len(diffs) > 4 else "") + ")"
    _finish("AC-1", not diffs and code == 0, detail,
            unattainable="independent remainder checks contradict the published a-sets and nonexistence rows")


# -- AC-2 -------------------------------------------------------------------------

def test_ac2_q11_witnesses(capsys):
    code, out = _run_cli(capsys, "table", "--q", "11", "--theta", "0", "--mode", "witnesses", "--workers", "1")
    _cli_out["ac2"] = out
    checks = verify_witness_rows(Q11_ROWS, 0, 0, 1)
    bad = [f"[{c.ref.n},{c.ref.k},{c.ref.d}] {c.g}" for c in checks if not c.ok]
    R11 = OreRing(ff_make(11), 0)
    g9 = R11.parse("x^9+2x^8+3x^7+4x^6+5x^5+6x^4+7x^3+8x^2+9x+10")
    C = sgc_from_generator(R11, g9, 10)
    w10 = C.k == 1 and min_distance(C.G) == 10 and not divisor_targets(R11, g9, 10)
    passed = not bad and w10 and code == 0 and len(checks) == len(Q11_ROWS)
    _finish("AC-2", passed, f"exact: {len(checks) - len(bad)}/{len(checks)} witness rows verify; "
                            f"[10,1,10] weight-10 check {'ok' if w10 else 'failed'}; exit {code}"
                            + (f"; bad: {', '.join(bad)}" if bad else ""))


# -- AC-3 -------------------------------------------------------------------------

CLAIMED_TOTALS = {"5.1": 21, "5.2": 16, "5.3": 80, "5.4": 21, "5.5": 24}
CLAIMED_ID = {
    "5.1": ["x+w^6", "x^2+w^3*x+w^4"],
    "5.2": ["x^2+w^6*x+w^7"],
    "5.3": ["x+1", "x+w^2", "x+w^6"],
    "5.5": ["x+w^7"],
}


def test_ac3_examples(capsys):
    notes, ok = [], True
    for eid, total in CLAIMED_TOTALS.items():
        rep = reproduce_example(eid)
        code, _ = _run_cli(capsys, "examples", "--id", eid)
        got_id = sorted(g.format(compact=True) for g, _ in rep.commutative.codes)
        good = rep.skew.count == total
        if eid in CLAIMED_ID:
            good &= got_id == sorted(CLAIMED_ID[eid])
        else:
            # 5.4 is expected to diff and must say so with exit 3
            good &= code == 3 and bool(rep.diffs)
        ok &= good
        notes.append(f"{eid}: {rep.skew.count}/{total}, id {rep.commutative.count}, exit {code}")
    _finish("AC-3", ok, "exact counts; " + "; ".join(notes),
            unattainable="exhaustive skew counts are far below the claimed totals under every reading tried")


# -- AC-4 -------------------------------------------------------------------------

def test_ac4_algebra_properties():
    jobs = [(q, t, g, 10_000, 1000 * q + 10 * t + g) for q in (8, 9, 11) for t, g in ac.ring_configs(q)]
    results = _map(ac.algebra_batch, jobs)
    trials = sum(r[0] for r in results)
    fails = [f for r in results for f in r[1]]
    _finish("AC-4", not fails, f"zero failures required; {len(jobs)} ring configurations x 10^4 trials "
                               f"= {trials} trials, {len(fails)} failures" + (f" ({fails[0]})" if fails else ""))


# -- AC-5 -------------------------------------------------------------------------

def test_ac5_x_inverses():
    jobs = [(8, t, g, d) for t, g in ac.ring_configs(8) for d in range(1, 6)]
    ex = _map(ac.x_inverse_exhaustive_batch, jobs)
    rnd = _map(ac.x_inverse_random_batch,
               [(q, t, g, 1000 // len(ac.ring_configs(q)) + 1, q * 100 + 10 * t + g)
                for q in (9, 11) for t, g in ac.ring_configs(q)])
    fails = [f for r in ex + rnd for f in r[1]]
    n_ex, n_rnd = sum(r[0] for r in ex), sum(r[0] for r in rnd)
    _finish("AC-5", not fails, f"zero failures required; {n_ex} exhaustive GF(8) moduli over all (t, gamma), "
                               f"{n_rnd} random GF(9)/GF(11) moduli, {len(fails)} failures"
                               + (f" ({fails[0]})" if fails else ""))


# -- AC-6 -------------------------------------------------------------------------

def test_ac6_normalize():
    configs = [(8, t, g) for t in (1, 2) for g in range(1, 8)] + [(9, 1, g) for g in range(1, 9)]
    per = -(-1000 // len(configs))
    stats = _map(ac.normalize_batch, [(q, t, g, per, 7 * q + 3 * t + g) for q, t, g in configs])
    tot = {k: sum(s[k] for s in stats) for k in ("trials", "in_code", "const_one", "weight_ok",
                                                   "weight_exact", "shifted", "shifted_const_one")}
    n = tot["trials"]
    passed = tot["in_code"] == tot["const_one"] == tot["weight_ok"] == n
    detail = (f"{n} random (f, c) with delta != 0: in code {tot['in_code']}/{n}, constant term 1 "
              f"{tot['const_one']}/{n} (k0 >= 1: {tot['shifted_const_one']}/{tot['shifted']}), weight <= 2w-1 "
              f"{tot['weight_ok']}/{n}; exact 2w-1 weight (logged only) {tot['weight_exact']}/{n}")
    examples = [e for s in stats for e in s["examples"]][:3]
    for e in examples:
        print("AC-6 instance:", e)
    _finish("AC-6", passed, detail,
            unattainable="alpha^k0 is not an inverse of x^k0 in the left module R/Rf for non-central f")


# -- AC-7 -------------------------------------------------------------------------

def test_ac7_bch_soundness():
    jobs = [(8, t, g, 500, 31 * t + g, 12) for t in (1, 2) for g in range(8)]
    jobs += [(11, 0, 0, 1000, 11, 12), (13, 0, 0, 1000, 13, 12)]
    stats = _map(ac.bch_sweep_batch, jobs)
    tot = {k: sum(s[k] for s in stats) for k in ("trials", "accepted", "nontrivial", "violations",
                                                   "distinct_root_violations")}
    for e in [e for s in stats for e in s["examples"]][:3]:
        print("AC-7 violation:", e)
    classical = _map(ac.classical_bch_batch, [(11, 250, 5), (13, 250, 6)])
    cfails = [f for r in classical for f in r[1]]
    ncl = sum(r[0] for r in classical)
    passed = tot["violations"] == 0 and not cfails
    detail = (f"zero violations required; {tot['trials']} witnesses, {tot['accepted']} strict-accepted, "
              f"{tot['nontrivial']} with bound >= 2, {tot['violations']} violations "
              f"({tot['distinct_root_violations']} with distinct root points); classical oracle "
              f"{ncl - len(cfails)}/{ncl} agree")
    _finish("AC-7", passed, detail,
            unattainable="strict hypotheses hold on codes whose distance is below the bound")


# -- AC-8 -------------------------------------------------------------------------

def _two_sided(ring, rng, count):
    out = []
    while len(out) < count:
        n = rng.randint(2, 6)
        g = ring.poly([rng.randrange(ring.ctx.q) for _ in range(rng.randint(1, n - 1))] + [1])
        h = ring.poly([rng.randrange(ring.ctx.q) for _ in range(n - g.deg)] + [1])
        f = ore_mul(g, h)
        if f.c[0] and right_divides(g, f):
            out.append((f, g))
    return out


def test_ac8_duality():
    F8 = ff_make(2, 3)
    rng = random.Random(8)
    rings = [OreRing(F8, 1), OreRing(F8, 1, F8.w.v), OreRing(F8, 2, F8.exp[3]), OreRing(ff_make(3, 2), 1, 3)]
    fails, n34 = 0, 0
    for ring in rings:
        for f, g in _two_sided(ring, rng, 25):
            C = sgc_from_generator(ring, g, f.deg)
            P = cofactor_parity(ring, f, g)
            n34 += 1
            fails += not all(dot(ring.ctx, r, h) == 0 for r in C.G.rows for h in P.parity)
    n35, fails35, with_delta = 0, 0, 0
    while n35 < 200:
        n = rng.randint(2, 5)
        t = rng.choice([1, 2])
        sig = FrobeniusMap(F8, t)
        gamma = rng.randrange(8)
        T = PseudoLinearMap.build([[rng.randrange(8) for _ in range(n)] for _ in range(n)], sig,
                                  InnerDerivation(sig, gamma))
        C = invariant_closure([[rng.randrange(8) for _ in range(n)]], T)
        if not C or len(C) == n:
            continue
        n35 += 1
        with_delta += gamma != 0
        ok = is_invariant(C, T) and is_invariant(dual(GenMatrix(F8, C, n)).rows, dual_transform(T))
        fails35 += not ok
    _finish("AC-8", fails == 0 and fails35 == 0,
            f"zero failures required; G*H^t = 0 on {n34 - fails}/{n34} two-sided instances; dual invariance on "
            f"{n35 - fails35}/{n35} invariant codes ({with_delta} with delta != 0)")


# -- AC-9 -------------------------------------------------------------------------

def test_ac9_two_dimensional():
    F4, F8 = ff_make(2, 2), ff_make(2, 3)
    B = BiOreRing(F4)
    mod = make_moduli(B, [1, 0, 1], [1, 0, 1])
    C = sgc2d_from_generator(mod, B.parse("x1*x2 + x1 + x2 + 1"))
    sanity = C.G.rows == [[1, 1, 1, 1]] and min_distance(C.G) == 4 and C.closure.closed

    B8 = BiOreRing(F8, 1, 0)
    mod8 = make_moduli(B8, [F8.w.v, 1, 0, 1], [1, 0, 1])
    T1, T2 = x1_transform(mod8), x2_transform(mod8)
    x1, x2 = B8.monomial(1, 0), B8.monomial(0, 1)
    rng = random.Random(9)
    bridge = 0
    for _ in range(1000):
        a = Array2D.from_flat(F8, [rng.randrange(8) for _ in range(6)], 3, 2)
        c = gamma_f(mod8, a)
        bridge += gamma_f_inv(mod8, bi_mul(x1, c)) == apply_cols(T1, a) and \
            gamma_f_inv(mod8, bi_mul(x2, c)) == apply_rows(T2, a)

    B4 = BiOreRing(F4, 1, 0)
    mod4 = make_moduli(B4, [1, 0, 1], [1, 1, 0, 1])
    Tr, Tc = x2_transform(mod4), x1_transform(mod4)
    closure_ok, ntests = 0, 0
    for _ in range(200):
        k = rng.randint(1, 3)
        arrays = [Array2D.from_flat(F4, [rng.randrange(4) for _ in range(6)], 2, 3) for _ in range(k)]
        flat = [a.flat() for a in arrays]
        S = span(F4, flat)
        vecs = [Array2D.from_flat(F4, list(v), 2, 3) for v in S]
        rows = all(tuple(apply_rows(Tr, v).flat()) in S for v in vecs)
        cols = all(tuple(apply_cols(Tc, v).flat()) in S for v in vecs)
        rep = shift_closure_check(arrays, Tr, Tc)
        ntests += 1
        closure_ok += (rep.rows_closed, rep.cols_closed) == (rows, cols)
    passed = sanity and bridge == 1000 and closure_ok == ntests
    _finish("AC-9", passed, f"[4,1,4] constant-array sanity {'ok' if sanity else 'failed'}; Gamma_f o T = "
                            f"multiply-then-reduce on {bridge}/1000 arrays; closure reports {closure_ok}/{ntests} "
                            f"agree with brute-force spans (dim <= 6)")


# -- AC-10 ------------------------------------------------------------------------

def test_ac10_determinism_and_runtime(capsys):
    if "ac1" not in _cli_out or "ac2" not in _cli_out:
        pytest.skip("needs the AC-1 and AC-2 runs")
    _, out1 = _run_cli(capsys, "table", "--q", "8", "--theta", "1", "--workers", "4")
    _, out2 = _run_cli(capsys, "table", "--q", "11", "--theta", "0", "--mode", "witnesses", "--workers", "4")
    same = out1 == _cli_out["ac1"] and out2 == _cli_out["ac2"]
    elapsed = time.monotonic() - T0
    _finish("AC-10", same and elapsed < 900,
            f"AC-1/AC-2 output byte-identical for --workers 1 and 4: {'yes' if same else 'no'}; "
            f"acceptance suite took {elapsed:.0f} s (limit 900 s)")
