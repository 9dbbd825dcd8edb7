import itertools
import random

import pytest

from oracles import classical_bch_ok, comm_eval
from sgc.bch import (
    ROOTS_ONLY,
    STRICT,
    BchWitness,
    construct_mds,
    random_instance,
    soundness_sweep,
    verify_multi,
    verify_single,
)
from sgc.codes import sgc_from_generator
from sgc.errors import BadParameters, ExtensionTooSmall, IndexOutOfRange, MvecAllZero
from sgc.field import extension, ff_make
from sgc.linear import min_distance
from sgc.ore import OreRing

F8 = ff_make(2, 3)
F11 = ff_make(11)
F13 = ff_make(13)
R11 = OreRing(F11, 0)


def test_delta_one_is_vacuous():
    C = sgc_from_generator(R11, R11.parse("x^2+9x+1"), 4)
    rep = verify_single(C, BchWitness(F11(1), 0, (1,), 1))
    assert rep.accepted and rep.certified_bound == 1


def test_strict_rejects_norm_one():
    C = sgc_from_generator(R11, R11.parse("x^2+9x+1"), 4)
    rep = verify_single(C, BchWitness(F11(1), 0, (1,), 2), STRICT)
    assert not rep.accepted
    h1 = [h for h in rep.hypothesis_log if h.hyp == "H1.1" and h.index == (1,)]
    assert h1 and not h1[0].passed and h1[0].value == "1"


def test_reed_solomon_roots_only_and_strict():
    C = sgc_from_generator(R11, R11.parse("x^2+5x+8"), 10)
    w = BchWitness(F11(2), 1, (1,), 3)
    rep = verify_single(C, w, ROOTS_ONLY)
    assert rep.certified_bound == 3
    assert min_distance(C.G) == 3
    assert not verify_single(C, w, STRICT).accepted


def test_literal_root_reading_differs():
    C = sgc_from_generator(R11, R11.parse("x^2+5x+8"), 10)
    w = BchWitness(F11(2), 1, (1,), 3)
    assert not verify_single(C, w, ROOTS_ONLY, root_reading="literal").accepted


def test_errors():
    C = sgc_from_generator(R11, R11.parse("x+10"), 4)
    with pytest.raises(MvecAllZero):
        verify_single(C, BchWitness(F11(2), 0, (0,), 3))
    with pytest.raises(IndexOutOfRange):
        verify_single(C, BchWitness(F11(2), 0, (1,), 0))
    with pytest.raises(IndexOutOfRange):
        verify_multi(C, BchWitness(F11(2), 0, (1, 1), 3, (1, 1)))
    with pytest.raises(IndexOutOfRange):
        verify_multi(C, BchWitness(F11(2), 0, (1, 1), 1, (1,)))
    with pytest.raises(MvecAllZero):
        verify_multi(C, BchWitness(F11(2), 0, (0, 0), 3, (1,)))
    R8 = OreRing(F8, 1)
    C8 = sgc_from_generator(R8, R8.parse("x+1"), 3)
    with pytest.raises(ExtensionTooSmall):
        verify_single(C8, BchWitness(ff_make(2, 2).w, 0, (1,), 2))


def test_extension_witness():
    R8 = OreRing(F8, 1, F8.w.v)
    E = extension(F8, 2)
    C = sgc_from_generator(R8, R8.parse("x+1"), 3)
    rep = verify_single(C, BchWitness(E.w, 0, (1,), 2), ROOTS_ONLY)
    # N_0(beta) = 1 is a right root of x + 1 in characteristic 2
    assert rep.accepted


CONFIGS = [(F8, 1, 0), (F8, 1, 2), (F8, 2, 5), (ff_make(3, 2), 1, 3), (F11, 0, 0)]


@pytest.mark.parametrize("F,t,gamma", CONFIGS)
def test_mode_monotonicity(F, t, gamma):
    ring = OreRing(F, t, gamma)
    rng = random.Random(1)
    for _ in range(300):
        code, w = random_instance(ring, rng, 8)
        strict = verify_single(code, w, STRICT)
        roots = verify_single(code, w, ROOTS_ONLY)
        if strict.accepted:
            assert roots.certified_bound == strict.certified_bound


@pytest.mark.parametrize("F,t,gamma", CONFIGS)
def test_multi_with_zero_ranges_is_single(F, t, gamma):
    ring = OreRing(F, t, gamma)
    rng = random.Random(2)
    for _ in range(100):
        code, w = random_instance(ring, rng, 8)
        wm = BchWitness(w.beta, w.l, w.mvec + (rng.randint(0, 3),), w.Delta, (0,))
        for mode in (STRICT, ROOTS_ONLY):
            a, b = verify_single(code, w, mode), verify_multi(code, wm, mode)
            assert a.certified_bound == b.certified_bound
            assert [h.as_dict() for h in a.hypothesis_log] == [h.as_dict() for h in b.hypothesis_log]


@pytest.mark.parametrize("q", [4, 8, 9, 16])
def test_h3_holds_without_derivation(q):
    F = ff_make(2, 2) if q == 4 else ff_make(2, 3) if q == 8 else ff_make(3, 2) if q == 9 else ff_make(2, 4)
    for t in range(F.m):
        R = OreRing(F, t, 0)
        for b in range(1, F.q):
            for i, L in itertools.product(range(1, 6), range(0, 8)):
                assert R.norm(i, R.norm(L, b)) == R.norm(L, R.norm(i, b))


@pytest.mark.parametrize("F", [F11, F13])
def test_roots_only_matches_classical_bch(F):
    ring = OreRing(F, 0)
    rng = random.Random(3)
    for _ in range(250):
        code, w = random_instance(ring, rng, 10)
        ok = classical_bch_ok(F, list(code.g.c), w.beta.v, w.l, w.mvec[0], w.Delta)
        assert verify_single(code, w, ROOTS_ONLY).accepted == ok


def test_multi_roots_only_grid_classical():
    ring = R11
    rng = random.Random(4)
    for _ in range(200):
        code, w = random_instance(ring, rng, 10)
        m2, s2 = rng.randint(1, 4), rng.randint(1, 2)
        wm = BchWitness(w.beta, w.l, w.mvec + (m2,), w.Delta, (s2,))
        pts = {
            F11.pow(w.beta.v, w.l + w.mvec[0] * i + m2 * j)
            for i in range(w.Delta - 1)
            for j in range(s2 + 1)
        }
        expect = all(comm_eval(F11, list(code.g.c), p) == 0 for p in pts)
        rep = verify_multi(code, wm, ROOTS_ONLY)
        assert rep.accepted == expect
        if expect:
            assert rep.certified_bound == w.Delta + s2


def test_strict_checks_setting_precondition():
    # g = x has g_0 = 0, so it divides no modulus with f_0 != 0
    ring = OreRing(ff_make(3, 2), 1, 4)
    C = sgc_from_generator(ring, ring.x(), 3)
    rep = verify_single(C, BchWitness(ring.ctx(ring.ctx.exp[2]), 1, (1,), 2), STRICT)
    assert not rep.accepted
    assert [h for h in rep.hypothesis_log if h.hyp == "P"][0].passed is False


def test_strict_counterexample_with_coinciding_roots():
    """All hypotheses hold, yet d = 2 < 3: both root points equal w^5."""
    ring = OreRing(F8, 1, 0)
    C = sgc_from_generator(ring, ring.parse("x+w^5"), 3)
    w = BchWitness(F8(F8.exp[5]), 1, (3,), 3)
    rep = verify_single(C, w, STRICT)
    assert rep.certified_bound == 3
    assert all(h.passed for h in rep.hypothesis_log)
    assert ring.norm(1, F8.exp[5]) == ring.norm(4, F8.exp[5]) == F8.exp[5]
    assert min_distance(C.G) == 2


SWEEP = [(F8, t, g) for t in (1, 2) for g in range(8)] + [(ff_make(3, 2), 1, g) for g in range(9)]


@pytest.mark.parametrize("F,t,gamma", SWEEP)
def test_strict_violations_only_with_coinciding_roots(F, t, gamma):
    ring = OreRing(F, t, gamma)
    rng = random.Random(100 * t + gamma)
    for _ in range(200):
        code, w = random_instance(ring, rng, 8)
        rep = verify_single(code, w, STRICT)
        if not rep.accepted or rep.certified_bound < 2:
            continue
        if min_distance(code.G) < rep.certified_bound:
            pts = [ring.norm(w.l + w.mvec[0] * i, w.beta.v) for i in range(w.Delta - 1)]
            assert len(set(pts)) < len(pts)


@pytest.mark.parametrize("gamma", [1, 3, 6])
def test_soundness_sweep_runs(gamma):
    stats = soundness_sweep(OreRing(F8, 1, gamma), 100, random.Random(gamma), n_max=6)
    assert stats.trials == 100
    assert stats.accepted >= stats.nontrivial


def test_construct_mds_reed_solomon():
    rep = construct_mds(R11, 10, F11(2), 1, (1,), 4)
    assert rep.status == "ok"
    assert rep.g.deg == 3 and rep.mds
    assert rep.code.k == 7 and min_distance(rep.code.G) == 4
    roots = {2, 4, 8}
    assert all(comm_eval(F11, list(rep.g.c), r) == 0 for r in roots)


def test_construct_mds_single_factor():
    for b in range(1, 11):
        rep = construct_mds(R11, 5, F11(b), 1, (1,), 2)
        assert rep.g.deg == 1 and rep.mds and rep.code.k == 4


def test_construct_mds_duplicates():
    # beta = 1: every exponent gives the same root
    rep = construct_mds(R11, 6, F11(1), 0, (1,), 4)
    assert rep.g.deg == 1
    rep = construct_mds(R11, 6, F11(10), 0, (1,), 5)
    assert rep.g.deg == 2  # roots 1 and 10


def test_construct_mds_range_modes_and_errors():
    a = construct_mds(R11, 10, F11(2), 1, (1,), 3)
    b = construct_mds(R11, 10, F11(2), 1, (1,), 3, range_mode="corollary")
    assert (a.g.deg, b.g.deg) == (2, 4)
    with pytest.raises(BadParameters):
        construct_mds(R11, 11, F11(2), 1, (1,), 3)
    with pytest.raises(BadParameters):
        construct_mds(R11, 10, F11(2), 1, (0,), 3)
    with pytest.raises(BadParameters):
        construct_mds(R11, 10, F11(2), 1, (1, 1), 3)


def test_construct_mds_outside_base_field():
    R8 = OreRing(F8, 0)
    E = extension(F8, 2)
    rep = construct_mds(R8, 6, E.w, 1, (1,), 2)
    assert rep.status == "CoefficientsOutsideBaseField" and rep.g is None
    assert rep.g_ext.deg == 1
