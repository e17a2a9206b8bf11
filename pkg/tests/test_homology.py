import random

import pytest

from conftest import SEED, pipeline, polynomial, table
from ncinvariants.algebra import build_basis
from ncinvariants.graded import FreeModule, ImageModule, Inclusion, QuotientModule, SubAlgebra, TableAlgebra
from ncinvariants.homology import (betti_table, check_d_squared, check_minimality,
                                   cmreg_asregular, ged, deg, minimal_resolution, resolve_trivial, torreg)
from ncinvariants.linalg import Echelon
from ncinvariants.quantity import NEG_INF
from ncinvariants.series import fit_series


def algebra(kind, N):
    return TableAlgebra(table(kind, N))


def test_k_over_polynomial_ring_in_one_variable():
    res = resolve_trivial(algebra("kx", 6), 3)
    assert res.shifts[:3] == [[0], [1], []]
    b = betti_table(res)
    assert (b.t(0), b.t(1)) == (0, 1)
    assert b.length() == 1


def test_k_over_skew_plane():
    res = resolve_trivial(algebra("skew2", 8), 4)
    assert res.shifts[:3] == [[0], [1, 1], [2]]
    b = betti_table(res)
    assert b.t_values()[:3] == [0, 1, 2]
    assert b.t(3) == b.t(4) == NEG_INF
    assert torreg(b) == 0


def test_k_over_down_up():
    res = resolve_trivial(algebra("downup", 8), 4)
    b = betti_table(res)
    assert b.t_values()[:4] == [0, 1, 3, 4]
    assert res.shifts[:4] == [[0], [1, 1], [3, 3], [4]]
    assert b.length() == 3
    assert torreg(b) == 1


def test_cmreg_examples():
    assert cmreg_asregular(3, fit_series(build_basis(polynomial("xyz"), 8).dims(), ("product", [1, 1, 1]))) == 0
    assert cmreg_asregular(3, fit_series(table("downup", 8).dims(), ("product", [1, 1, 2]))) == -1
    assert cmreg_asregular(2, fit_series(table("skew2", 8).dims(), ("product", [1, 1]))) == 0


def test_free_module_regularity_is_zero():
    A = algebra("skew2", 6)
    b = betti_table(minimal_resolution(FreeModule(A, [0]), 3))
    assert b.t(0) == 0 and b.t(1) == NEG_INF
    assert torreg(b) == 0


def test_invariants_of_swap_have_beta_three():
    p = pipeline("ex1.2.3")
    assert p.betti_R.t(1) == 3


def test_down_up_over_invariants():
    p = pipeline("ex3.4")
    M = ImageModule(Inclusion(p.R), "right")
    b = betti_table(minimal_resolution(M, 1))
    assert b.t(0) == 2


def test_tor_zero_is_quotient_by_hilbert_ideal():
    for fid in ("ex3.4", "ex1.2.3", "kx-sign", "ex1.2.1-m3"):
        p = pipeline(fid)
        d0 = p.tor_R.dims(0)
        assert [d0.get(d, 0) for d in range(p.N + 1)] == p.hleft.codims


def test_kx_free_over_even_part():
    p = pipeline("kx-sign")
    assert p.tor_R.dims(1) == {}
    assert p.tor_R.t(1) == NEG_INF


def test_down_up_tor_one_finite():
    p = pipeline("ex3.4")
    dims = p.tor_R.dims(1)
    assert dims and max(dims) < p.N - 2


def test_deg_and_ged():
    assert deg({0: 1, 3: 2, 5: 0}) == 3
    assert ged({0: 0, 2: 1, 3: 1}) == 2
    assert deg({}) == NEG_INF


def test_grid_rendering():
    b = betti_table(resolve_trivial(algebra("skew2", 4), 2))
    lines = b.grid().splitlines()
    assert lines[0].split()[0] == "i\\d"
    assert lines[2].split()[1:4] == [".", "2", "."]


# ---------------------------------------------------------------------------
# properties over random cyclic modules


def left_ideal(A, gens, N):
    """Per-degree echelons of the left ideal sum A g inside A."""
    sub = {}
    for d in range(N + 1):
        e = Echelon()
        for gd, g in gens:
            k = d - gd
            if k < 0:
                continue
            for b in range(A.dim(k)):
                e.add(A.table.multiply({b: 1}, k, g, gd))
        sub[d] = e
    return sub


def random_element(rng, A, d):
    n = A.dim(d)
    v = {i: rng.randint(-2, 2) for i in rng.sample(range(n), min(n, 2))}
    v = {i: c for i, c in v.items() if c}
    return v or {0: 1}


def random_cyclic_modules(count, N=6, kinds=("skew2", "poly2", "downup", "skew3")):
    rng = random.Random(SEED)
    out = []
    for _ in range(count):
        kind = rng.choice(kinds)
        n = N if kind != "skew3" else 5
        A = algebra(kind, n)
        gens = [(d, random_element(rng, A, d)) for d in sorted(rng.choice([1, 2]) for _ in range(rng.randint(1, 2)))]
        sub = left_ideal(A, gens, n)
        out.append((kind, A, gens, sub))
    return out


MODULES = random_cyclic_modules(100)


def test_resolutions_are_complexes_and_minimal():
    for kind, A, gens, sub in MODULES:
        res = minimal_resolution(QuotientModule(FreeModule(A, [0]), sub), 3)
        assert check_d_squared(res) == []
        assert check_minimality(res) == []


@pytest.mark.parametrize("fid", ["ex3.4", "ex1.2.3", "kx-sign", "qr-m3", "skew2-neg", "ex3.7"])
def test_fixture_resolutions_are_complexes_and_minimal(fid):
    p = pipeline(fid)
    for res in [p.res_T, p.res_R] + ([p.res_S] if p.sub is not None else []):
        assert check_d_squared(res) == []
        assert check_minimality(res) == []


def test_euler_characteristic():
    for kind, A, gens, sub in MODULES[:40]:
        M = QuotientModule(FreeModule(A, [0]), sub)
        P = 4
        res = minimal_resolution(M, P)
        top = A.max_degree if res.exhausted_at is not None else min(A.max_degree, P)
        for d in range(top + 1):
            alt = sum((-1) ** i * FreeModule(A, sh).dim(d) for i, sh in enumerate(res.shifts))
            assert alt == M.dim(d)


def test_t_bounded_by_regularity():
    for kind, A, gens, sub in MODULES:
        b = betti_table(minimal_resolution(QuotientModule(FreeModule(A, [0]), sub), 3))
        r = torreg(b)
        assert all(t <= r + i for i, t in enumerate(b.t_values()))


def _ideal_module(A, sub):
    """The left ideal itself as a module (submodule of A)."""
    full = SubAlgebra(A.table, [[{i: 1} for i in range(A.dim(d))] for d in range(A.max_degree + 1)])
    bases = [sub[d].rref() for d in range(A.max_degree + 1)]
    return ImageModule(Inclusion(full), "left", bases)


def test_short_exact_sequence_regularity():
    """0 -> L -> A -> A/L -> 0 for left ideals L generated in degrees <= 2."""
    checked = 0
    for kind, A, gens, sub in random_cyclic_modules(50, kinds=("poly2", "skew2")):
        P = 4
        regs = []
        for M in (_ideal_module(A, sub), FreeModule(A, [0]), QuotientModule(FreeModule(A, [0]), sub)):
            regs.append(torreg(betti_table(minimal_resolution(M, P))))
        rL, rM, rN = regs
        assert rM <= max(rL, rN)
        assert rL <= max(rM, rN + 1)
        assert rN <= max(rL - 1, rM)
        checked += 1
    assert checked == 50


def test_free_module_regularity_equals_top_shift():
    """Over a Koszul AS regular algebra CMreg(A) = 0, so Torreg(F) = CMreg(F) = max shift."""
    rng = random.Random(SEED)
    A = algebra("skew2", 8)
    for _ in range(100):
        shifts = sorted(rng.randint(0, 4) for _ in range(rng.randint(1, 3)))
        b = betti_table(minimal_resolution(FreeModule(A, shifts), 2))
        assert torreg(b) == max(shifts)
        assert b.t(1) == NEG_INF


@pytest.mark.parametrize("fid", ["ex3.4", "ex1.2.3", "kx-sign", "qr-m3", "ex1.2.1-m2"])
def test_balanced_tor(fid):
    """Resolving A_R or resolving _R k gives the same Tor^R(A, k)."""
    p = pipeline(fid)
    b = betti_table(minimal_resolution(ImageModule(Inclusion(p.R), "right"), p.P))
    for i in range(p.P + 1):
        assert {d: n for d, n in b.dims[i].items() if d <= p.N} == p.tor_R.dims(i)
