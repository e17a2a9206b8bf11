"""Minimal graded free resolutions, Betti tables and Tor over algebra maps."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .graded import FreeModule, TableAlgebra, TrivialModule, act_vec
from .linalg import Echelon, kernel, vaddto
from .quantity import NEG_INF, Quantity, observed

DEFAULT_P_MAX = 4


class ResolutionError(RuntimeError):
    pass


def span_of_multiples(module, gens, d) -> Echelon:
    """Span of B_{>=1} * gens inside M_d (gens are (degree, vector) pairs)."""
    B = module.algebra
    e = Echelon()
    for gd, g in gens:
        k = d - gd
        if k < 1:
            continue
        for b in range(B.dim(k)):
            e.add(act_vec(module, k, b, gd, g))
    return e


def minimal_generators_of(module, N, sub=None, start=None):
    """Minimal homogeneous generators, degree by degree up to N.

    Without ``sub`` the module itself is generated; new generators are the
    unit vectors outside the pivots of the span of earlier multiples.  With
    ``sub`` (a function d -> spanning vectors of a submodule in degree d),
    generators of that submodule are chosen as reduced remainders.
    """
    gens = []
    lo = module.min_degree if start is None else start
    for d in range(lo, N + 1):
        if not module.dim(d):
            continue
        e = span_of_multiples(module, gens, d)
        if sub is None:
            for i in range(module.dim(d)):
                if i not in e.rows:
                    gens.append((d, {i: 1}))
        else:
            for v in sub(d):
                r = e.add(v)
                if r is not None:
                    gens.append((d, r))
    return gens


def differential_images(target, shifts, maps, free: FreeModule, d):
    """Images in ``target`` of the degree-d basis of ``free`` under the map
    sending generator j to maps[j]."""
    out = []
    for j, off, size in free.blocks(d):
        s = shifts[j]
        g = maps[j]
        for idx in range(size):
            out.append(act_vec(target, d - s, idx, s, g))
    return out


@dataclass
class FreeResolution:
    module: object
    max_degree: int
    p_max: int
    shifts: list = field(default_factory=list)
    maps: list = field(default_factory=list)
    frees: list = field(default_factory=list)
    exhausted_at: int | None = None

    @property
    def algebra(self):
        return self.module.algebra

    def betti(self) -> "BettiTable":
        return betti_table(self)


def minimal_resolution(module, p_max: int = DEFAULT_P_MAX, N: int | None = None) -> FreeResolution:
    """Minimal free resolution of a graded module, steps 0..p_max, degrees <= N."""
    B = module.algebra
    N = module.max_degree if N is None else min(N, module.max_degree)
    res = FreeResolution(module, N, p_max)
    gens = minimal_generators_of(module, N)
    res.shifts.append([d for d, _ in gens])
    res.maps.append([v for _, v in gens])
    target = module
    for i in range(1, p_max + 1):
        prev_shifts = res.shifts[i - 1]
        F = FreeModule(B, prev_shifts)
        res.frees.append(F)
        if not prev_shifts:
            res.shifts.append([])
            res.maps.append([])
            target = F
            continue
        kers = {}
        for d in range(F.min_degree, N + 1):
            if not F.dim(d):
                kers[d] = []
                continue
            images = differential_images(target, prev_shifts, res.maps[i - 1], F, d)
            kers[d] = kernel(images)
        gens = minimal_generators_of(F, N, sub=lambda d: kers.get(d, []), start=F.min_degree)
        res.shifts.append([d for d, _ in gens])
        res.maps.append([v for _, v in gens])
        target = F
    res.frees.append(FreeModule(B, res.shifts[p_max]))
    empty = [i for i, sh in enumerate(res.shifts) if not sh]
    if empty:
        res.exhausted_at = empty[0]
    return res


def check_d_squared(res: FreeResolution) -> list:
    """Degrees/steps where the composite of consecutive differentials is nonzero."""
    bad = []
    for i in range(1, len(res.shifts)):
        F = res.frees[i - 1]
        target = res.module if i == 1 else res.frees[i - 2]
        prev_maps = res.maps[i - 1]
        prev_shifts = res.shifts[i - 1]
        for j, (s, v) in enumerate(zip(res.shifts[i], res.maps[i])):
            out = {}
            for m, c in v.items():
                jj, idx = F.locate(s, m)
                vaddto(out, act_vec(target, s - prev_shifts[jj], idx, prev_shifts[jj], prev_maps[jj]), c)
            if out:
                bad.append((i, j))
    return bad


def check_minimality(res: FreeResolution) -> list:
    """Generators whose differential has a component of degree zero."""
    bad = []
    for i in range(1, len(res.shifts)):
        F = res.frees[i - 1]
        for j, (s, v) in enumerate(zip(res.shifts[i], res.maps[i])):
            for m in v:
                jj, _ = F.locate(s, m)
                if s - F.shifts[jj] < 1:
                    bad.append((i, j))
                    break
    return bad


# ---------------------------------------------------------------------------


def deg(dims: dict):
    """deg M = max{d : M_d != 0}, or -inf for M = 0."""
    nz = [d for d, n in dims.items() if n]
    return max(nz) if nz else NEG_INF


def ged(dims: dict):
    """ged M = min{d : M_d != 0}, or +inf for M = 0."""
    nz = [d for d, n in dims.items() if n]
    return min(nz) if nz else math.inf


@dataclass
class BettiTable:
    """dims[i][d] = dim Tor_i(k, M)_d, read off the minimal resolution."""

    dims: list
    max_degree: int
    p_max: int
    exhausted_at: int | None = None

    def t(self, i: int):
        if i < len(self.dims):
            return deg(self.dims[i])
        if self.exhausted_at is not None:
            return NEG_INF
        raise IndexError(f"homological index {i} beyond computed range {self.p_max}")

    def t_values(self) -> list:
        return [self.t(i) for i in range(len(self.dims))]

    def t_quantity(self, i: int, certified_by: str | None = None) -> Quantity:
        v = self.t(i)
        if certified_by:
            return Quantity(v, "certified", certified_by)
        return observed(v, self.max_degree)

    def rank(self, i: int) -> int:
        return sum(self.dims[i].values())

    def length(self):
        """Index of the last nonzero step when the resolution stops inside the range."""
        if self.exhausted_at is None:
            return None
        return self.exhausted_at - 1

    def to_json(self):
        return {
            "max_degree": self.max_degree,
            "p_max": self.p_max,
            "t": [_num(x) for x in self.t_values()],
            "dims": [{str(d): n for d, n in sorted(row.items())} for row in self.dims],
            "exhausted_at": self.exhausted_at,
        }

    def grid(self) -> str:
        """Text grid: rows homological index, columns internal degree."""
        width = self.max_degree + 1
        head = "i\\d " + " ".join(f"{d:>3}" for d in range(width))
        lines = [head]
        for i, row in enumerate(self.dims):
            cells = " ".join(f"{row.get(d, 0) or '.':>3}" for d in range(width))
            lines.append(f"{i:>3} {cells}")
        return "\n".join(lines)


def _num(x):
    if x == math.inf:
        return "inf"
    if x == -math.inf:
        return "-inf"
    return x


def betti_table(res: FreeResolution) -> BettiTable:
    dims = []
    for shifts in res.shifts:
        row = {}
        for s in shifts:
            row[s] = row.get(s, 0) + 1
        dims.append(row)
    return BettiTable(dims, res.max_degree, res.p_max, res.exhausted_at)


def torreg(b: BettiTable):
    """sup over computed i of t_i - i."""
    vals = [t - i for i, t in enumerate(b.t_values()) if t != NEG_INF]
    return max(vals) if vals else NEG_INF


def cmreg_asregular(gldim: int, series) -> int:
    """gldim + deg_t h for an AS regular algebra with fitted Hilbert series."""
    return gldim + series.t_degree


def resolve_trivial(algebra, p_max=DEFAULT_P_MAX, N=None) -> FreeResolution:
    return minimal_resolution(TrivialModule(algebra), p_max, N)


# ---------------------------------------------------------------------------
# Tor^S_i(T_S, k) with its left T-action, for an algebra map f: S -> T


class TorOverMap:
    """Tor^S_i(T, k) = H_i(T (x)_S Q) where Q is the minimal resolution of _S k.

    The complex C_i is a direct sum of shifted copies of T; its differential
    is right multiplication by the images of the entries of Q's
    differentials, so every H_i is a graded left T-module.
    """

    def __init__(self, amap, p_max: int = DEFAULT_P_MAX, N: int | None = None, res_k: FreeResolution | None = None):
        self.amap = amap
        self.table = amap.target
        self.T = TableAlgebra(self.table, "T")
        S = amap.source
        self.N = min(self.table.max_degree, S.max_degree) if N is None else N
        self.p_max = p_max
        if res_k is None:
            res_k = resolve_trivial(S, p_max + 1, self.N)
        elif res_k.p_max < p_max + 1:
            raise ResolutionError("resolution of k is too short for the requested Tor range")
        self.res_k = res_k
        self.C = [FreeModule(self.T, sh) for sh in res_k.shifts[: p_max + 2]]
        self._Z = {}
        self._Bd = {}
        self._H = {}

    def _diff_images(self, i, d):
        """Images of the degree-d basis of C_i in C_{i-1}."""
        Ci, Cp = self.C[i], self.C[i - 1]
        Q = self.res_k.frees[i - 1]
        Sshifts = self.res_k.shifts[i - 1]
        out = []
        for j, off, size in Ci.blocks(d):
            sig = Ci.shifts[j]
            qv = self.res_k.maps[i][j]
            terms = []
            for m, c in qv.items():
                jj, sidx = Q.locate(sig, m)
                e = sig - Sshifts[jj]
                terms.append((jj, self.amap.image(e, sidx), e, c))
            for a in range(size):
                vec = {}
                for jj, img, e, c in terms:
                    prod = self.table.multiply({a: 1}, d - sig, img, e)
                    if prod:
                        off2 = Cp.offset(d, jj)
                        for k, x in prod.items():
                            vaddto(vec, {off2 + k: x}, c)
                out.append(vec)
        return out

    def cycles(self, i, d) -> list:
        key = (i, d)
        if key not in self._Z:
            n = self.C[i].dim(d)
            if i == 0:
                self._Z[key] = [{k: 1} for k in range(n)]
            else:
                self._Z[key] = kernel(self._diff_images(i, d)) if n else []
        return self._Z[key]

    def boundaries(self, i, d) -> Echelon:
        key = (i, d)
        if key not in self._Bd:
            e = Echelon()
            if i + 1 < len(self.C):
                for v in self._diff_images(i + 1, d):
                    e.add(v)
            self._Bd[key] = e
        return self._Bd[key]

    def homology(self, i, d) -> list:
        """Representative cycles whose classes form a basis of H_i in degree d."""
        if i > self.p_max:
            raise ResolutionError(f"Tor_{i} beyond computed range {self.p_max}")
        key = (i, d)
        if key not in self._H:
            e = self.boundaries(i, d).copy()
            reps = []
            for z in self.cycles(i, d):
                r = e.add(z)
                if r is not None:
                    reps.append(r)
            self._H[key] = reps
        return self._H[key]

    def dims(self, i) -> dict:
        return {d: len(self.homology(i, d)) for d in range(self.N + 1) if len(self.homology(i, d))}

    def t(self, i):
        return deg(self.dims(i))

    def left_act(self, i, a: dict, e: int, z: dict, d: int) -> dict:
        """a in T_e acting on a chain z in C_i of degree d."""
        C = self.C[i]
        out = {}
        for j, off, size in C.blocks(d):
            comp = {k - off: c for k, c in z.items() if off <= k < off + size}
            if not comp:
                continue
            prod = self.table.multiply(a, e, comp, d - C.shifts[j])
            if prod:
                off2 = C.offset(d + e, j)
                for k, x in prod.items():
                    vaddto(out, {off2 + k: x})
        return out

    def annihilator(self, i, e: int) -> list:
        """Basis of {a in T_e : a * H_i = 0 in all degrees d with d + e <= N}."""
        dimT = self.table.dim(e)
        cols = [dict() for _ in range(dimT)]
        pos = 0
        for d in range(self.N - e + 1):
            reps = self.homology(i, d)
            if not reps:
                continue
            bd = self.boundaries(i, d + e)
            for z in reps:
                for a in range(dimT):
                    r = bd.reduce(self.left_act(i, {a: 1}, e, z, d))
                    for k, x in r.items():
                        cols[a][(pos, k)] = x
                pos += 1
        # flatten the (rep, coordinate) keys into integers
        keys = sorted({k for c in cols for k in c})
        index = {k: n for n, k in enumerate(keys)}
        flat = [{index[k]: x for k, x in c.items()} for c in cols]
        return kernel(flat)

    def generator_degrees(self, i) -> dict:
        """Degrees of minimal generators of H_i as a left T-module."""
        out = {}
        for d in range(self.N + 1):
            reps = self.homology(i, d)
            if not reps:
                continue
            e = self.boundaries(i, d).copy()
            for dd in range(d):
                for z in self.homology(i, dd):
                    k = d - dd
                    for a in range(self.table.dim(k)):
                        e.add(self.left_act(i, {a: 1}, k, z, dd))
            n = sum(1 for z in reps if e.add(z) is not None)
            if n:
                out[d] = n
        return out
