import random

import pytest

from conftest import SEED, down_up, free, oracle_rels, polynomial, presentation, skew, table
from oracles import algebra_dims
from ncinvariants.algebra import (AlgebraPresentation, CapExceeded, Generator, NcPolynomial,
                                  NonHomogeneousRelation, TruncationError, build_basis, multiply,
                                  normal_form, phi_N, quotient_truncation, relation_ideal_closure_defects,
                                  words_of_degree)


def test_skew_dims():
    assert build_basis(skew("xy"), 3).dims() == [1, 2, 3, 4]


def test_down_up_dims():
    assert build_basis(down_up(), 4).dims() == [1, 2, 4, 6, 9]


def test_free_dims():
    assert build_basis(free("xy"), 3).dims() == [1, 2, 4, 8]


@pytest.mark.parametrize("make,N", [(lambda: skew("xy"), 5), (down_up, 5), (lambda: skew("xyz"), 4),
                                    (lambda: presentation("uv", [[(1, "uu"), (-1, "vv")]]), 5)])
def test_dims_match_bruteforce(make, N):
    p = make()
    assert build_basis(p, N).dims() == algebra_dims(oracle_rels(p), len(p.generators), N)


def test_relation_reduces_to_zero():
    p = skew("xy")
    t = build_basis(p, 3)
    assert normal_form(p.poly([(1, "xy"), (1, "yx")]), t) == {}


def test_xy_is_the_basis_word():
    p = skew("xy")
    t = build_basis(p, 2)
    xy = normal_form(p.poly([(1, "xy")]), t)[2]
    yx = normal_form(p.poly([(1, "yx")]), t)[2]
    assert len(xy) == 1 and list(xy.values()) == [1]
    assert t.basis[2][next(iter(xy))] == (0, 1)
    assert yx == {k: -c for k, c in xy.items()}


def test_down_up_relation_in_normal_form():
    p = down_up()
    t = build_basis(p, 4)
    assert normal_form(p.poly([(1, "xxy"), (-1, "yxx")]), t) == {}


def test_multiply_examples():
    p = skew("xy")
    t = build_basis(p, 3)
    x, y = t.nf_word((0,)), t.nf_word((1,))
    xy, yx = multiply(x, 1, y, 1, t), multiply(y, 1, x, 1, t)
    assert xy == {k: -c for k, c in yx.items()}

    q = down_up()
    s = build_basis(q, 4)
    x, y = s.nf_word((0,)), s.nf_word((1,))
    x2 = multiply(x, 1, x, 1, s)
    assert multiply(y, 1, x2, 2, s) == multiply(x2, 2, y, 1, s)

    for d in range(4):
        for i in range(s.dim(d)):
            assert multiply({0: 1}, 0, {i: 1}, d, s) == {i: 1}


def test_truncation_errors():
    t = build_basis(skew("xy"), 2)
    with pytest.raises(TruncationError):
        multiply({0: 1}, 2, {0: 1}, 1, t)
    with pytest.raises(TruncationError):
        t.nf_word((0, 0, 0))


def test_non_homogeneous_rejected():
    p = AlgebraPresentation([Generator("x", 1), Generator("y", 1)], [])
    with pytest.raises(NonHomogeneousRelation, match="relation 0 not homogeneous"):
        AlgebraPresentation(p.generators, [p.poly([(1, "xx"), (1, "y")])])


def test_words_cap():
    with pytest.raises(CapExceeded):
        build_basis(free("xy"), 6, words_cap=40)


def test_phi_commutative():
    p = polynomial("xy")
    ref = build_basis(p, 5).dims()
    phi, flags = phi_N(p, 2, ref)
    assert all(flags)
    assert len(phi.relations) == 1


def test_phi_down_up():
    p = down_up()
    ref = build_basis(p, 4).dims()
    phi2, flags2 = phi_N(p, 2, ref)
    assert build_basis(phi2, 4).dims() == [1, 2, 4, 8, 16]
    assert flags2 == [True, True, True, False, False]
    _, flags3 = phi_N(p, 3, ref)
    assert all(flags3)


def test_phi_check_degree_too_large():
    with pytest.raises(ValueError):
        phi_N(down_up(), 3, [1, 2, 4], check_degree=5)


def test_phi_drops_redundant_generator():
    # the linear relation x = z - y removes a generator before relations are filtered
    p = presentation("xyz", [[(1, "z"), (-1, "x"), (-1, "y")], [(1, "xy"), (-1, "yx")]])
    phi, flags = phi_N(p, 2, build_basis(p, 4).dims())
    assert [g.name for g in phi.generators] == ["y", "z"]
    assert len(phi.relations) == 1 and all(flags)


def test_quotient_truncation():
    assert build_basis(quotient_truncation(free("xy"), 3), 5).dims() == [1, 2, 4, 0, 0, 0]
    assert build_basis(quotient_truncation(free("x"), 2), 4).dims() == [1, 1, 0, 0, 0]


def test_quotient_truncation_of_lie_envelope():
    from ncinvariants.cli import load_fixture

    doc = load_fixture("ex3.6-m4")
    p = doc.presentation()
    lhs = build_basis(quotient_truncation(p, 4), 4).dims()
    rhs = build_basis(quotient_truncation(free("xy"), 4), 4).dims()
    assert lhs[:4] == rhs[:4] == [1, 2, 4, 8]
    assert lhs[4] == rhs[4] == 0


def test_mixed_degree_words():
    assert words_of_degree([1, 2], 3) == [(0, 0, 0), (0, 1), (1, 0)]


# ---------------------------------------------------------------------------
# properties


@pytest.mark.parametrize("kind", ["skew2", "downup", "skew3"])
def test_relation_ideal_closure(kind):
    rng = random.Random(SEED)
    N = 6 if kind != "skew3" else 5
    t = table(kind, N)
    p = t.presentation
    n = len(p.generators)
    pairs = []
    for _ in range(120):
        ri = rng.randrange(len(p.relations))
        room = N - p.relation_degree(ri)
        a = rng.randint(0, room)
        b = rng.randint(0, room - a)
        pairs.append((ri, tuple(rng.randrange(n) for _ in range(a)), tuple(rng.randrange(n) for _ in range(b))))
    assert relation_ideal_closure_defects(t, pairs) == []


@pytest.mark.parametrize("kind", ["skew2", "downup", "skew3", "free2"])
def test_associativity_sample(kind):
    rng = random.Random(SEED)
    N = 6 if kind != "skew3" else 5
    t = table(kind, N)
    for _ in range(120):
        da = rng.randint(0, N)
        db = rng.randint(0, N - da)
        dc = rng.randint(0, N - da - db)
        a, b, c = ({rng.randrange(t.dim(d)): 1} for d in (da, db, dc))
        left = multiply(multiply(a, da, b, db, t), da + db, c, dc, t)
        right = multiply(a, da, multiply(b, db, c, dc, t), db + dc, t)
        assert left == right


def test_multiplication_is_bilinear():
    rng = random.Random(SEED)
    t = table("downup", 6)
    for _ in range(100):
        da, db = rng.randint(0, 3), rng.randint(0, 3)
        a1 = {rng.randrange(t.dim(da)): rng.randint(-3, 3)}
        a2 = {rng.randrange(t.dim(da)): rng.randint(-3, 3)}
        b = {rng.randrange(t.dim(db)): 1}
        s = {}
        for k, c in list(a1.items()) + list(a2.items()):
            s[k] = s.get(k, 0) + c
        s = {k: c for k, c in s.items() if c}
        lhs = multiply(s, da, b, db, t)
        r1, r2 = multiply(a1, da, b, db, t), multiply(a2, da, b, db, t)
        rhs = {k: r1.get(k, 0) + r2.get(k, 0) for k in set(r1) | set(r2)}
        assert lhs == {k: c for k, c in rhs.items() if c}


def test_quotient_dimension_monotonicity():
    for make in (lambda: skew("xy"), down_up, lambda: free("xy")):
        p = make()
        full = build_basis(p, 6).dims()
        for d in range(1, 6):
            q = build_basis(quotient_truncation(p, d), 6).dims()
            assert q[:d] == full[:d]
            assert q[d:] == [0] * (7 - d)


def test_deterministic_tables():
    a, b = build_basis(down_up(), 6), build_basis(down_up(), 6)
    assert a.basis == b.basis
    for d in range(7):
        for w in a.basis[d]:
            assert a.nf_word(w) == b.nf_word(w)


def test_polynomial_roundtrip():
    p = skew("xy")
    t = build_basis(p, 4)
    for d in range(5):
        for i in range(t.dim(d)):
            poly = t.to_poly({i: 1}, d)
            assert isinstance(poly, NcPolynomial)
            assert normal_form(poly, t) == {d: {i: 1}}
