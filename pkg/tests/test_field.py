import itertools

import pytest

from sgc.errors import CtxMismatch, NotPrime, ParseError, ReducibleModulus, UnregisteredField
from sgc.field import (
    FrobeniusMap,
    InnerDerivation,
    derivation_apply,
    embedding,
    extension,
    ff_arith,
    ff_embed,
    ff_format,
    ff_make,
    ff_make_q,
    ff_parse,
    field_axioms_hold,
    frobenius_apply,
    is_irreducible,
)

SMALL = [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (5, 1), (7, 1), (11, 1), (13, 1)]


def brute_irreducible(coeffs, p):
    """No factor of degree <= deg/2, by trial multiplication of monic polys."""
    m = len(coeffs) - 1

    def mul(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
        return out

    for d1 in range(1, m // 2 + 1):
        for a in itertools.product(range(p), repeat=d1):
            for b in itertools.product(range(p), repeat=m - d1):
                if mul(list(a) + [1], list(b) + [1]) == list(coeffs):
                    return False
    return True


def test_gf8_registry_modulus_is_irreducible():
    F = ff_make(2, 3)
    assert F.modulus == (1, 1, 0, 1)
    assert brute_irreducible(F.modulus, 2)


def test_gf11_primitive_root():
    F = ff_make(11)
    assert F.w.v == 2
    assert [pow(2, k, 11) for k in range(1, 11)].index(1) == 9


def test_registry_coverage():
    for p, top in ((2, 12), (3, 8), (5, 4), (7, 4), (11, 4), (13, 4)):
        for m in range(1, top + 1):
            F = ff_make(p, m)
            assert F.mul_order(F.w.v) == F.q - 1


@pytest.mark.parametrize("p,m", [(2, 5), (3, 3), (5, 2), (7, 2)])
def test_registry_moduli_irreducible_by_brute_force(p, m):
    assert brute_irreducible(ff_make(p, m).modulus, p)


def test_errors():
    with pytest.raises(NotPrime):
        ff_make(4, 1)
    with pytest.raises(ReducibleModulus):
        ff_make(2, 2, (1, 0, 1))  # x^2 + 1 = (x + 1)^2
    with pytest.raises(UnregisteredField):
        ff_make(2, 40)


def test_custom_modulus():
    F = ff_make(2, 3, (1, 0, 1, 1))  # x^3 + x^2 + 1
    assert F.mul_order(F.w.v) == 7
    assert is_irreducible((1, 0, 1, 1), 2)


def test_arith_examples():
    F = ff_make(2, 3)
    w = F.w
    assert ff_arith(w, None, "pow", 3) == ff_parse(F, "w^3")
    assert (w**3).coeffs == (1, 1, 0)  # w + 1
    assert w**7 == F.one
    G = ff_make(11)
    assert ff_arith(G(2), None, "inv").v == 6


def test_ctx_mismatch():
    with pytest.raises(CtxMismatch):
        ff_make(2, 3).w + ff_make(3, 2).w


def test_division_by_zero():
    F = ff_make(2, 3)
    with pytest.raises(ZeroDivisionError):
        F.zero.inverse()


@pytest.mark.parametrize("p,m", [pm for pm in SMALL if pm[0] ** pm[1] <= 16])
def test_field_axioms_exhaustive(p, m):
    assert field_axioms_hold(ff_make(p, m))


@pytest.mark.parametrize("p,m", [pm for pm in SMALL if pm[0] ** pm[1] <= 16])
def test_frobenius_is_automorphism(p, m):
    F = ff_make(p, m)
    for t in range(m):
        for a in range(F.q):
            for b in range(F.q):
                assert F.frob(F.add(a, b), t) == F.add(F.frob(a, t), F.frob(b, t))
                assert F.frob(F.mul(a, b), t) == F.mul(F.frob(a, t), F.frob(b, t))


def test_frobenius_examples():
    F = ff_make(2, 3)
    th = FrobeniusMap(F, 1)
    assert frobenius_apply(th, F.w) == F.w**2
    a = F.w
    for _ in range(3):
        a = th(a)
    assert a == F.w
    assert th.order == 3
    assert FrobeniusMap(F, 2).compose(th).is_identity
    G = ff_make(11)
    assert all(FrobeniusMap(G, 0).apply(v) == v for v in range(11))


def test_derivation_examples():
    F = ff_make(2, 3)
    d = InnerDerivation(FrobeniusMap(F, 1), F.w.v)
    assert derivation_apply(d, F.w) == ff_parse(F, "w^5")
    assert d.apply(1) == 0
    zero = InnerDerivation(FrobeniusMap(F, 1), 0)
    assert all(zero.apply(v) == 0 for v in range(8))


@pytest.mark.parametrize("p,m", [(2, 2), (2, 3), (2, 4), (3, 2)])
def test_derivation_axioms_exhaustive(p, m):
    F = ff_make(p, m)
    for t in range(m):
        sig = FrobeniusMap(F, t)
        for gamma in range(F.q):
            d = InnerDerivation(sig, gamma)
            for a in range(F.q):
                for b in range(F.q):
                    assert d.apply(F.add(a, b)) == F.add(d.apply(a), d.apply(b))
                    lhs = d.apply(F.mul(a, b))
                    rhs = F.add(F.mul(sig.apply(a), d.apply(b)), F.mul(d.apply(a), b))
                    assert lhs == rhs
            if t == 0:
                assert all(d.apply(a) == 0 for a in range(F.q))


def test_embedding_gf8_gf64():
    F, E = ff_make(2, 3), ff_make(2, 6)
    emb = embedding(F, E)
    assert emb(F.w.v) == E.exp[9]
    assert emb(0) == 0 and emb(1) == 1
    assert E.mul_order(emb(F.w.v)) == 7
    assert ff_embed(F.w, 2) == E.w**9


@pytest.mark.parametrize("src,e", [((2, 2), 2), ((2, 3), 2), ((3, 1), 2), ((2, 2), 3), ((11, 1), 2)])
def test_embedding_homomorphism_exhaustive(src, e):
    F = ff_make(*src)
    E = extension(F, e)
    emb = embedding(F, E)
    images = {emb(a) for a in range(F.q)}
    assert len(images) == F.q
    for a in range(F.q):
        for b in range(F.q):
            assert emb(F.add(a, b)) == E.add(emb(a), emb(b))
            assert emb(F.mul(a, b)) == E.mul(emb(a), emb(b))
    # image of the unit group is the unique subgroup of order q - 1
    sub = {E.exp[k] for k in range(0, E.q - 1, (E.q - 1) // (F.q - 1))}
    assert images - {0} == sub


def test_parse_format():
    F = ff_make(2, 3)
    assert ff_format(ff_parse(F, "w^6")) == "w^6"
    assert ff_format(ff_parse(F, "w^7")) == "1"
    assert ff_parse(ff_make(11), "10").v == 10
    for v in range(F.q):
        assert ff_parse(F, F.fmt(v)).v == v
    with pytest.raises(ParseError) as exc:
        ff_parse(F, "w^^2")
    assert exc.value.pos >= 0


def test_ff_make_q_and_cache():
    assert ff_make_q(9) is ff_make(3, 2)
    assert ff_make_q(8).m == 3
